#pragma once

#include "edd/exactnum.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace edd {

/// Power series in h_1..h_p over Q, truncated at per-variable caps.
///
/// A series with caps (c_1..c_p) lives in Q[h_1..h_p]/(h_1^(c_1+1), ..., h_p^(c_p+1)),
/// which for c_i = m_i - 1 is the Chow ring of P^(m_1-1) x ... x P^(m_p-1).
/// Storage is a dense table in mixed radix, last variable fastest, so every
/// componentwise-smaller exponent sits at a smaller index.
class TruncatedMultiSeries {
public:
    explicit TruncatedMultiSeries(std::vector<unsigned> caps);

    static TruncatedMultiSeries constant(std::vector<unsigned> caps, const Rational& c);
    static TruncatedMultiSeries one(std::vector<unsigned> caps) { return constant(std::move(caps), Rational(1)); }
    /// c * h_variable (zero when that variable's cap is 0).
    static TruncatedMultiSeries variable(std::vector<unsigned> caps, std::size_t variable, const Rational& c = 1);
    /// c0 + sum_i coefficients[i] * h_i.
    static TruncatedMultiSeries linear(std::vector<unsigned> caps, const Rational& c0,
                                       const std::vector<Rational>& coefficients);
    /// sum_k coefficients[k] * h_variable^k, dropping terms above the cap.
    static TruncatedMultiSeries univariate(std::vector<unsigned> caps, std::size_t variable,
                                           const std::vector<Rational>& coefficients);

    std::size_t var_count() const { return caps_.size(); }
    const std::vector<unsigned>& caps() const { return caps_; }
    std::size_t size() const { return table_.size(); }
    std::size_t nonzero_count() const;

    /// Exponent tuple stored at a table index.
    std::vector<unsigned> exponent_at(std::size_t index) const;
    /// Throws DomainError if the tuple has the wrong length or exceeds a cap.
    std::size_t index_of(std::span<const unsigned> exponent) const;

    const Rational& coefficient(std::span<const unsigned> exponent) const { return table_[index_of(exponent)]; }
    void set_coefficient(std::span<const unsigned> exponent, Rational value) {
        table_[index_of(exponent)] = std::move(value);
    }
    const Rational& at_index(std::size_t index) const { return table_.at(index); }
    const Rational& constant_term() const { return table_.front(); }

    bool is_zero() const { return nonzero_count() == 0; }
    TruncatedMultiSeries scaled(const Rational& c) const;
    TruncatedMultiSeries pow(unsigned exponent) const;

    /// Terms in graded order, variables named h1..hp (plain "h" when p = 1).
    std::string to_string() const;

    friend TruncatedMultiSeries operator+(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);
    friend TruncatedMultiSeries operator-(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);
    friend TruncatedMultiSeries operator*(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);
    friend bool operator==(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) = default;

private:
    friend TruncatedMultiSeries ts_mul(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);
    friend TruncatedMultiSeries ts_inverse(const TruncatedMultiSeries& a);
    friend Rational ts_product_coefficient(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b,
                                           std::span<const unsigned> exponent);
    friend TruncatedMultiSeries ts_divide_linear(const TruncatedMultiSeries& a, const Rational& c0,
                                                 const std::vector<Rational>& coefficients);

    std::vector<unsigned> caps_;
    std::vector<std::size_t> strides_;
    std::vector<Rational> table_;
};

/// Truncated product; exponents beyond a cap are discarded. Throws DomainError on cap mismatch.
TruncatedMultiSeries ts_mul(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);

/// b with ts_mul(a, b) = 1. Throws DomainError when the constant term is zero.
TruncatedMultiSeries ts_inverse(const TruncatedMultiSeries& a);

/// Coefficient of h^e; throws DomainError when e lies outside the caps.
Rational ts_coefficient(const TruncatedMultiSeries& a, std::span<const unsigned> exponent);

/// Coefficient of h^e in a*b, computed as a single convolution sum without forming the product.
Rational ts_product_coefficient(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b,
                                std::span<const unsigned> exponent);

/// b with b * (c0 + sum_i coefficients[i] * h_i) = a, by a single forward sweep.
/// Throws DomainError when c0 is zero or the coefficient count does not match.
TruncatedMultiSeries ts_divide_linear(const TruncatedMultiSeries& a, const Rational& c0,
                                      const std::vector<Rational>& coefficients);

}  // namespace edd
