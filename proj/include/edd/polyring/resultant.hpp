#pragma once

#include "edd/polyring/univariate.hpp"

#include <vector>

namespace edd {

/// Polynomial in y over Q(i)[x]: entry k is the coefficient of y^k.
/// Trailing zero entries are ignored when computing degrees.
using BivariatePoly = std::vector<UnivariatePoly>;

/// Degree in y (-1 for the zero polynomial).
int y_degree(const BivariatePoly& p);

/// Determinant of a square matrix with entries in Q(i)[x], by fraction-free
/// (Bareiss) elimination with row pivoting. Every division is exact.
UnivariatePoly bareiss_determinant(std::vector<std::vector<UnivariatePoly>> matrix);

/// Res_y(a, b) as the determinant of the Sylvester matrix built from the
/// actual y-degrees of a and b. Zero if either argument is zero.
UnivariatePoly sylvester_resultant(const BivariatePoly& a, const BivariatePoly& b);

}  // namespace edd
