#pragma once

// Classes pushed forward to projective space, stored by their degrees, and
// the ED-degree formulas that evaluate them.
//
// A ProjClass in P^N records, for each dimension j, the degree of its
// dimension-j component. Capping with h^k keeps the degree and lowers the
// dimension by k, so capping with any polynomial in h stays inside this
// representation.
//
// Chern classes of X enter as degree vectors c(TX) ∩ [X]. Whenever a Chern
// class has to be multiplied with another class (twisting, Segre and Milnor
// classes) it is read as the polynomial in h whose cap with [X] has those
// degrees: c_k(TX) = (deg of the dimension dim X - k entry) / deg X * h^k.
// This is exact for hypersurfaces, complete intersections, and any X whose
// Chern classes are pulled back from P^N (e.g. Veronese images of P^k).

#include "edd/exactnum.hpp"
#include "edd/report.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edd {

class ProjClass {
public:
    /// The zero class in P^ambient_dim.
    explicit ProjClass(unsigned ambient_dim) : ambient_dim_(ambient_dim), degrees_(ambient_dim + 1) {}

    /// Degrees listed from dimension 0 upward. Shorter lists are padded with
    /// zeros; longer lists throw DomainError.
    ProjClass(unsigned ambient_dim, std::vector<Rational> degrees);

    /// [X] for a variety of the given dimension and degree.
    static ProjClass fundamental(unsigned ambient_dim, unsigned dim, const Rational& degree);

    /// Parses "4,4,2" (dimension 0 first); the ambient dimension defaults to
    /// one less than the number of entries.
    static ProjClass parse(std::string_view text, int ambient_dim = -1);

    unsigned ambient_dim() const { return ambient_dim_; }
    const std::vector<Rational>& degrees() const { return degrees_; }
    /// Degree of the dimension-j component; zero outside 0..N.
    Rational operator[](int j) const;

    bool is_zero() const;
    /// Largest dimension carrying a nonzero degree, -1 for the zero class.
    int top_dimension() const;
    /// sum_j (-1)^j deg(alpha_j), i.e. the integral of 1/(1+h) ∩ alpha.
    Rational alternating_sum() const;

    /// Comma-separated rationals, dimension 0 first.
    std::string to_string() const;

    ProjClass scaled(const Rational& c) const;
    friend ProjClass operator+(const ProjClass& a, const ProjClass& b);
    friend ProjClass operator-(const ProjClass& a, const ProjClass& b);
    friend bool operator==(const ProjClass& a, const ProjClass& b) = default;

private:
    unsigned ambient_dim_;
    std::vector<Rational> degrees_;
};

struct EulerData {
    unsigned dim_x = 0;
    Integer chi_x;    // chi(X)
    Integer chi_xq;   // chi(X ∩ Q)
    Integer chi_xh;   // chi(X ∩ H)
    Integer chi_xqh;  // chi(X ∩ Q ∩ H)
};

// Class calculus ------------------------------------------------------------

/// result_j = sum_k poly[k] * alpha_(j+k).
ProjClass cap_with_poly(const ProjClass& alpha, std::span<const Rational> poly);

/// A^∨: the piece of codimension i = m - j in a dimension-m ambient variety gets sign (-1)^i.
ProjClass class_dual(const ProjClass& alpha, unsigned m);

/// A ⊗_M O(ell*h): the piece of codimension i is divided by (1 + ell*h)^i.
ProjClass class_tensor(const ProjClass& alpha, long ell, unsigned m);

/// Coefficients of the polynomial in h representing c(TX) (see header comment);
/// throws DomainError if deg X (the dimension-dim_x entry) is zero.
std::vector<Rational> chern_polynomial(const ProjClass& chern_tx, unsigned dim_x);

/// c(T*X ⊗ O(ell*h)) ∩ [X] from c(TX) ∩ [X], for the rank-dim_x bundle T*X.
ProjClass twisted_cotangent_chern(const ProjClass& chern_tx, unsigned dim_x, long ell);

/// c(TX) ∩ [X] for a smooth degree-d hypersurface of P^(n-1).
ProjClass hypersurface_chern(unsigned n, unsigned d);

/// c(TX) ∩ s(Q ∩ X, X) = 2h/(1+2h) ∩ c(TX) ∩ [X]: the Chern-Fulton class of Q ∩ X.
ProjClass chern_fulton_quadric_section(const ProjClass& chern_x, unsigned dim_x);

// ED-degree paths -------------------------------------------------------------

/// sum_j (-1)^(dim_x + j) * c_j * (2^(j+1) - 1). Works unchanged on Chern-Mather degrees.
Rational gedd_value(const ProjClass& chern, unsigned dim_x);
/// gedd_value, required to be an integer (DomainError otherwise).
Integer gedd_from_chern(const ProjClass& chern, unsigned dim_x);

/// ∫ (1+2h) c(T*X ⊗ O(2h)) / (1+h) ∩ s(J(Q∩X), X).
Rational gamma_from_segre(const ProjClass& chern_tx, unsigned dim_x, const ProjClass& segre);

/// gEdd - gamma. Errors on a non-integral or negative result.
EddReport edd_smooth_via_segre(const ProjClass& chern_tx, unsigned dim_x, const ProjClass& segre);

/// M(Q∩X) = (-1)^dim X  c(TX)/(1+ell*h) ∩ (s^∨ ⊗_X O(ell*h)). The isotropic quadric has ell = 2.
ProjClass milnor_from_segre(const ProjClass& chern_tx, unsigned dim_x, const ProjClass& segre, long ell = 2);

/// gEdd - sum_j (-1)^j deg M_j.
EddReport edd_from_milnor(const ProjClass& chern_tx, unsigned dim_x, const ProjClass& milnor);

/// (-1)^dim X sum_j (-1)^j (c(X)_j - c_SM(Q∩X)_j).
EddReport edd_from_csm(const ProjClass& chern_x, unsigned dim_x, const ProjClass& csm_qx);

/// (-1)^dim X (chi(X) - chi(X∩Q) - chi(X∩H) + chi(X∩Q∩H)).
EddReport edd_from_euler(const EulerData& data);

/// d + #(Q∩C) - chi(C) for a smooth curve of degree d.
EddReport curve_edd(unsigned d, unsigned num_qc, const Integer& chi_c);

/// d(d^2 - 3d + 5) - chi(C) for a smooth surface of degree d in P^3 whose
/// intersection with Q is reduced (automatic for d != 2).
EddReport surface_p3_edd(unsigned d, const Integer& chi_c);

// Spheres ---------------------------------------------------------------------

/// Euler characteristic of a smooth quadric hypersurface in P^N (0 when it is empty).
Integer quadric_euler_characteristic(int ambient_dim);

/// Inputs for every path for the sphere x_1^2 + ... + x_(n-1)^2 = x_n^2 in P^(n-1).
/// Q ∩ X is the doubled hyperplane section X ∩ {x_n = 0}, so the singularity
/// subscheme is that section and its Segre class is h/(1+h) ∩ [X].
struct SphereData {
    unsigned n = 0;
    unsigned dim_x = 0;
    ProjClass chern{0};
    ProjClass segre{0};
    ProjClass milnor{0};
    ProjClass csm{0};
    EulerData euler;
};

/// Throws DomainError for n < 2.
SphereData sphere_data(unsigned n);

}  // namespace edd
