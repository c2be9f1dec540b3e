#pragma once

#include "edd/exactnum.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace edd {

/// Dense univariate polynomial over Q(i); coefficient k multiplies t^k.
/// The coefficient vector never carries a zero leading entry, and the zero
/// polynomial is the empty vector (degree -1).
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<GaussianRational> coefficients);

    static UnivariatePoly constant(GaussianRational c);
    static UnivariatePoly monomial(GaussianRational c, std::size_t exponent);
    /// Monic product of (t - r) over the given roots, multiplicities included.
    static UnivariatePoly from_roots(const std::vector<GaussianRational>& roots);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    bool is_constant() const { return coefficients_.size() <= 1; }

    const std::vector<GaussianRational>& coefficients() const { return coefficients_; }
    GaussianRational coefficient(std::size_t k) const;
    /// Throws DomainError on the zero polynomial.
    const GaussianRational& leading() const;

    GaussianRational evaluate(const GaussianRational& at) const;
    UnivariatePoly derivative() const;
    UnivariatePoly monic() const;
    UnivariatePoly scaled(const GaussianRational& c) const;
    UnivariatePoly pow(unsigned exponent) const;

    std::string to_string(std::string_view var = "t") const;

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) = default;

private:
    void trim();

    std::vector<GaussianRational> coefficients_;
};

struct PolyDivision {
    UnivariatePoly quotient;
    UnivariatePoly remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws DomainError if b = 0.
PolyDivision divmod(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly operator%(const UnivariatePoly& a, const UnivariatePoly& b);
/// a / b when b divides a; throws DomainError otherwise.
UnivariatePoly exact_quotient(const UnivariatePoly& a, const UnivariatePoly& b);

/// Monic gcd over Q(i) by the monic remainder sequence. gcd(a, 0) = monic(a).
/// Throws DomainError when both arguments are zero.
UnivariatePoly upoly_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

struct ExtendedGcd {
    UnivariatePoly gcd;  // monic
    UnivariatePoly u;
    UnivariatePoly v;    // u*a + v*b = gcd
};
ExtendedGcd extended_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// Monic g / gcd(g, g'). Throws DomainError on zero input.
UnivariatePoly squarefree_part(const UnivariatePoly& g);

}  // namespace edd
