#pragma once

// ED degrees of plane curves and of parametrized rational curves.
//
// A smooth plane curve C = V(F) of degree d meets the isotropic conic
// x^2 + y^2 + z^2 = 0 in R distinct points, and Edd(C) = d(d-2) + R. The
// conic is parametrized by (s^2 - t^2, 2st, i(s^2 + t^2)), so R is the number
// of distinct roots of the pulled-back binary form.

#include "edd/polyring/forms.hpp"
#include "edd/report.hpp"

#include <optional>
#include <vector>

namespace edd {

inline constexpr unsigned kDefaultSmoothnessBound = 6;

struct PlaneCurveInput {
    TernaryForm f;
    bool assume_smooth = false;
    unsigned smoothness_bound = kDefaultSmoothnessBound;
};

/// phi[j] are the coordinates of the parametrization, all of one degree e >= 1.
/// When square_weights is set, coordinate j is sqrt(w_j) * phi[j]; only
/// sum_j w_j phi_j^2 enters the computation, so irrational coefficients such as
/// the sqrt(3) of the twisted cubic stay exact.
struct RationalCurveInput {
    std::vector<BinaryForm> phi;
    std::optional<std::vector<GaussianRational>> square_weights;
};

enum class Smoothness { smooth, singular, unchecked };

/// F(s^2 - t^2, 2st, i(s^2 + t^2)).
BinaryForm isotropic_pullback(const TernaryForm& f);

/// Exact test for a common zero of the three partials in P^2 over C.
/// Forms of degree above `bound` are reported as unchecked.
/// Throws DomainError on the zero form or a constant.
Smoothness smoothness_check_plane(const TernaryForm& f, unsigned bound = kDefaultSmoothnessBound);

/// d(d-2) + R. Throws DomainError for a singular curve or a zero pullback
/// (other than the isotropic conic itself, which gets 0), and
/// UnsupportedError when smoothness cannot be checked and is not assumed.
EddReport plane_curve_edd(const PlaneCurveInput& input);

/// e + R - 2 where R counts the distinct zeros of sum_j w_j phi_j^2.
/// Throws DomainError on a base point or inconsistent input.
EddReport rational_curve_edd(const RationalCurveInput& input);

/// The rational normal curve of degree n-1 in P^(n-1): phi_j = s^(n-1-j) t^j
/// with weights C(n-1, j), so that the sum of squares is (s^2 + t^2)^(n-1).
RationalCurveInput rational_normal_curve(unsigned n);

}  // namespace edd
