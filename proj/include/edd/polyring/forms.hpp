#pragma once

#include "edd/exactnum.hpp"
#include "edd/polyring/univariate.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace edd {

/// Homogeneous polynomial of a fixed degree d in (s, t) over Q(i).
/// Entry k multiplies s^(d-k) * t^k.
class BinaryForm {
public:
    BinaryForm() : coefficients_(1) {}
    /// Throws DomainError unless coefficients.size() == degree + 1.
    BinaryForm(unsigned degree, std::vector<GaussianRational> coefficients);

    static BinaryForm zero(unsigned degree);
    static BinaryForm constant(GaussianRational c);
    /// c * s^s_exp * t^t_exp
    static BinaryForm monomial(GaussianRational c, unsigned s_exp, unsigned t_exp);
    static BinaryForm s() { return monomial(1, 1, 0); }
    static BinaryForm t() { return monomial(1, 0, 1); }

    unsigned degree() const { return degree_; }
    bool is_zero() const;
    const std::vector<GaussianRational>& coefficients() const { return coefficients_; }
    const GaussianRational& coefficient(unsigned k) const { return coefficients_.at(k); }

    /// G(1, t).
    UnivariatePoly dehomogenize() const;
    /// True when s divides G, i.e. G vanishes at (s:t) = (0:1).
    bool vanishes_at_infinity() const { return coefficients_.back().is_zero(); }

    BinaryForm scaled(const GaussianRational& c) const;
    BinaryForm pow(unsigned exponent) const;

    std::string to_string() const;

    /// Sum of forms of equal degree; throws DomainError otherwise.
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;

private:
    unsigned degree_ = 0;
    std::vector<GaussianRational> coefficients_;
};

/// Number of distinct points of P^1 where G vanishes: distinct roots of
/// G(1, t) plus one when (0:1) is a root. Throws DomainError for G = 0.
unsigned binary_distinct_roots(const BinaryForm& g);

using Exponent3 = std::array<unsigned, 3>;

/// Homogeneous polynomial in (x, y, z) over Q(i), stored sparsely.
/// Every stored exponent triple sums to the degree; zero terms are never stored.
class TernaryForm {
public:
    explicit TernaryForm(unsigned degree = 0) : degree_(degree) {}

    static TernaryForm monomial(GaussianRational c, unsigned a, unsigned b, unsigned c_exp);
    static TernaryForm x() { return monomial(1, 1, 0, 0); }
    static TernaryForm y() { return monomial(1, 0, 1, 0); }
    static TernaryForm z() { return monomial(1, 0, 0, 1); }

    unsigned degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent3, GaussianRational>& terms() const { return terms_; }
    GaussianRational coefficient(const Exponent3& e) const;

    /// Adds c * x^a y^b z^c; throws DomainError if a+b+c != degree.
    void add_term(const Exponent3& e, const GaussianRational& c);

    /// Partial derivative in variable 0 (x), 1 (y) or 2 (z); degree drops by one
    /// (a degree-0 form differentiates to the zero form of degree 0).
    TernaryForm partial(int variable) const;
    GaussianRational evaluate(const GaussianRational& x, const GaussianRational& y, const GaussianRational& z) const;

    TernaryForm scaled(const GaussianRational& c) const;
    TernaryForm pow(unsigned exponent) const;
    /// True if this == c * other for some nonzero c.
    bool proportional_to(const TernaryForm& other) const;

    std::string to_string() const;

    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
    friend bool operator==(const TernaryForm& a, const TernaryForm& b) = default;

private:
    unsigned degree_ = 0;
    std::map<Exponent3, GaussianRational> terms_;
};

/// F(phi_x, phi_y, phi_z). The three parametrizing forms must share a degree e;
/// the result has degree deg(F) * e. Throws DomainError on mismatched degrees.
BinaryForm ternary_substitute_param(const TernaryForm& f, const BinaryForm& phi_x, const BinaryForm& phi_y,
                                    const BinaryForm& phi_z);

/// F(Lx, Ly, Lz) for ternary forms sharing a degree (used for linear changes of coordinates).
TernaryForm ternary_compose(const TernaryForm& f, const TernaryForm& lx, const TernaryForm& ly, const TernaryForm& lz);

}  // namespace edd
