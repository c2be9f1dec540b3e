#pragma once

// ED degrees of Segre and Segre-Veronese varieties X = P^(m_1-1) x ... x P^(m_p-1),
// embedded by O(w_1, ..., w_p), as coefficients of truncated series in h_1..h_p.

#include "edd/exactnum.hpp"

#include <vector>

namespace edd {

enum class CoordinateChoice { general, invariant };

struct ProductSpec {
    std::vector<unsigned> dims;     // m_i, factor P^(m_i - 1)
    std::vector<unsigned> weights;  // w_i, all 1 for a plain Segre embedding
    CoordinateChoice coords = CoordinateChoice::general;
};

/// Throws DomainError unless p >= 1, every m_i >= 1 and every w_i >= 1.
void validate(const ProductSpec& spec);

/// Coefficient of h_1^(m_1-1)...h_p^(m_p-1) in
///   1/(1 - sum w_i h_i) * prod (1 - h_i)^(m_i) / prod_D (1 - D),
/// where each divisor D is given by its multidegree (d_1..d_p), D = sum d_i h_i.
Integer snc_edd(const std::vector<unsigned>& dims, const std::vector<unsigned>& weights,
                const std::vector<std::vector<long>>& divisor_multidegrees);

/// Segre variety: snc_edd with unit weights and divisors 2h_i.
Integer edd_segre(const std::vector<unsigned>& dims);

/// Coefficient of prod z_i^(m_i-1) in prod_i (zhat_i^(m_i) - z_i^(m_i)) / (zhat_i - z_i),
/// zhat_i = sum_j w_j z_j - z_i.
Integer edd_fo(const std::vector<unsigned>& dims, const std::vector<unsigned>& weights);

/// General coordinates use divisors 2 w_i h_i, invariant coordinates use 2 h_i.
Integer edd_segre_veronese(const ProductSpec& spec);

/// ((w-1)^m - 1)/(w-2), with the value m at w = 2.
Integer veronese_closed_form(unsigned m, unsigned w);

}  // namespace edd
