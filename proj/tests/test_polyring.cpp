#include "edd/polyring.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace edd;

namespace {

using U = UnivariatePoly;

U poly(std::initializer_list<GaussianRational> c) { return U(std::vector<GaussianRational>(c)); }
U t_minus(const GaussianRational& r) { return U::from_roots({r}); }

GaussianRational small_gaussian(std::mt19937_64& rng, int range = 6) {
    std::uniform_int_distribution<long> d(-range, range);
    return {Rational(d(rng)), Rational(d(rng))};
}

// Leibniz expansion over all permutations.
U leibniz(const std::vector<std::vector<U>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    U total;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
        U term = U::constant(1);
        for (std::size_t r = 0; r < n; ++r) term = term * m[r][perm[r]];
        total = inversions % 2 ? total - term : total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Plain multivariate polynomial used as an untruncated reference for series.
using Mono = std::vector<unsigned>;
using Dense = std::map<Mono, Rational>;

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Mono e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out[e] += ca * cb;
        }
    }
    return out;
}

TruncatedMultiSeries truncate(const Dense& d, const std::vector<unsigned>& caps) {
    TruncatedMultiSeries out(caps);
    for (const auto& [e, c] : d) {
        bool inside = true;
        for (std::size_t k = 0; k < e.size(); ++k) inside = inside && e[k] <= caps[k];
        if (inside) out.set_coefficient(e, out.coefficient(e) + c);
    }
    return out;
}

Dense random_dense(std::mt19937_64& rng, std::size_t p, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    std::uniform_int_distribution<long> cf(-5, 5);
    Dense out;
    for (int k = 0; k < 6; ++k) {
        Mono e(p);
        for (auto& v : e) v = ex(rng);
        out[e] += Rational(cf(rng), 1 + static_cast<long>(ex(rng)));
    }
    out[Mono(p, 0)] = Rational(cf(rng) == 0 ? 1 : 2);
    return out;
}

}  // namespace

TEST_CASE("univariate gcd examples") {
    const GaussianRational i = GaussianRational::i();
    CHECK(upoly_gcd(poly({-1, 0, 1}), poly({1, -2, 1})) == t_minus(1));
    CHECK(upoly_gcd(U::monomial(1, 3), U::monomial(1, 2)) == U::monomial(1, 2));
    const U a = U::from_roots({i, i, -2});
    const U b = U::from_roots({i, 5});
    const U g = upoly_gcd(a, b);
    CHECK(g == t_minus(i));
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(upoly_gcd(poly({3, 6}), U()) == poly({Rational(1, 2), 1}));
    CHECK_THROWS_AS(upoly_gcd(U(), U()), DomainError);
}

TEST_CASE("gcd divides both arguments for random factored inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<GaussianRational> common;
        std::vector<GaussianRational> ra;
        std::vector<GaussianRational> rb;
        for (int k = 0; k < 3; ++k) common.push_back(small_gaussian(rng));
        for (int k = 0; k < 3; ++k) ra.push_back(small_gaussian(rng) + GaussianRational(20));
        for (int k = 0; k < 3; ++k) rb.push_back(small_gaussian(rng) - GaussianRational(20));
        std::vector<GaussianRational> a_roots = common;
        a_roots.insert(a_roots.end(), ra.begin(), ra.end());
        std::vector<GaussianRational> b_roots = common;
        b_roots.insert(b_roots.end(), rb.begin(), rb.end());
        const U a = U::from_roots(a_roots).scaled(small_gaussian(rng) + GaussianRational(0, 9));
        const U b = U::from_roots(b_roots);
        const U g = upoly_gcd(a, b);
        CHECK(g == U::from_roots(common));
        CHECK(divmod(a, g).remainder.is_zero());
        CHECK(divmod(b, g).remainder.is_zero());
        const ExtendedGcd eg = extended_gcd(a, b);
        CHECK(eg.gcd == g);
        CHECK(eg.u * a + eg.v * b == g);
    }
}

TEST_CASE("division and exact quotient") {
    const U a = U::from_roots({1, 2, 3});
    const U b = U::from_roots({2});
    CHECK(exact_quotient(a, b) == U::from_roots({1, 3}));
    CHECK_THROWS_AS(exact_quotient(a, U::from_roots({4})), DomainError);
    CHECK_THROWS_AS(divmod(a, U()), DomainError);
    const PolyDivision qr = divmod(poly({1, 0, 0, 1}), poly({1, 1}));
    CHECK(qr.quotient * poly({1, 1}) + qr.remainder == poly({1, 0, 0, 1}));
    CHECK(qr.remainder.is_zero());
}

TEST_CASE("squarefree part examples") {
    const GaussianRational i = GaussianRational::i();
    CHECK(squarefree_part(U::from_roots({1, 1, 1, -2})) == U::from_roots({1, -2}));
    CHECK(squarefree_part(U::monomial(1, 5)) == t_minus(0));
    const U g = U::from_roots({i, i, -i, -i});
    CHECK(g == poly({1, 0, 2, 0, 1}));
    CHECK(squarefree_part(g) == poly({1, 0, 1}));
    CHECK(squarefree_part(U::constant(7)) == U::constant(1));
    CHECK_THROWS_AS(squarefree_part(U()), DomainError);
}

TEST_CASE("squarefree part is coprime to its derivative") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<GaussianRational> roots;
        std::vector<GaussianRational> distinct;
        for (int k = 0; k < 4; ++k) {
            const GaussianRational r = small_gaussian(rng, 9);
            if (std::find(distinct.begin(), distinct.end(), r) != distinct.end()) continue;
            distinct.push_back(r);
            for (int m = mult(rng); m > 0; --m) roots.push_back(r);
        }
        const U sq = squarefree_part(U::from_roots(roots).scaled(GaussianRational(3, -1)));
        CHECK(sq == U::from_roots(distinct));
        CHECK(upoly_gcd(sq, sq.derivative()).degree() == 0);
    }
}

TEST_CASE("binary distinct roots examples") {
    const BinaryForm s = BinaryForm::s();
    const BinaryForm t = BinaryForm::t();
    CHECK(binary_distinct_roots((s - t).pow(4)) == 1);
    for (unsigned n = 2; n <= 8; ++n) CHECK(binary_distinct_roots((s * s + t * t).pow(n - 1)) == 2);
    CHECK(binary_distinct_roots(s * s * t * (s + t)) == 3);
    CHECK(binary_distinct_roots(t.pow(3)) == 1);
    CHECK(binary_distinct_roots(s.pow(3)) == 1);
    CHECK(binary_distinct_roots(BinaryForm::constant(5)) == 0);
    CHECK_THROWS_AS(binary_distinct_roots(BinaryForm::zero(3)), DomainError);
}

TEST_CASE("binary distinct roots is stable under powers") {
    std::mt19937_64 rng(3);
    const BinaryForm s = BinaryForm::s();
    const BinaryForm t = BinaryForm::t();
    for (int trial = 0; trial < 25; ++trial) {
        BinaryForm g = BinaryForm::constant(1);
        for (int k = 0; k < 4; ++k) g = g * (s.scaled(small_gaussian(rng)) + t.scaled(small_gaussian(rng)));
        if (g.is_zero()) continue;
        const unsigned r = binary_distinct_roots(g);
        for (unsigned k = 1; k <= 3; ++k) CHECK(binary_distinct_roots(g.pow(k)) == r);
    }
}

TEST_CASE("binary form construction") {
    CHECK_THROWS_AS(BinaryForm(2, {1, 2}), DomainError);
    CHECK_THROWS_AS(BinaryForm::s() + BinaryForm::constant(1), DomainError);
    CHECK(BinaryForm::monomial(3, 1, 2).coefficient(2) == GaussianRational(3));
    CHECK(BinaryForm::monomial(1, 0, 2).vanishes_at_infinity() == false);
    CHECK(BinaryForm::monomial(1, 1, 1).vanishes_at_infinity());
    CHECK(BinaryForm::monomial(1, 2, 1).dehomogenize() == U::monomial(1, 1));
}

TEST_CASE("ternary substitution with the isotropic parametrization") {
    const GaussianRational i = GaussianRational::i();
    const BinaryForm s = BinaryForm::s();
    const BinaryForm t = BinaryForm::t();
    const BinaryForm px = s * s - t * t;
    const BinaryForm py = (s * t).scaled(2);
    const BinaryForm pz = (s * s + t * t).scaled(i);
    const TernaryForm x = TernaryForm::x();
    const TernaryForm y = TernaryForm::y();
    const TernaryForm z = TernaryForm::z();

    const TernaryForm conic = x * x + (y * y).scaled(2) + (y * z).scaled(GaussianRational(0, 2));
    CHECK(ternary_substitute_param(conic, px, py, pz) == (s - t).pow(4));

    const BinaryForm q = ternary_substitute_param(x * x + y * y + z * z, px, py, pz);
    CHECK(q.is_zero());
    CHECK(q.degree() == 4);

    const BinaryForm f5 = ternary_substitute_param(x.pow(5) + y.pow(5) + z.pow(5), px, py, pz);
    CHECK(f5 == px.pow(5) + py.pow(5) + pz.pow(5));
    CHECK(f5.degree() == 10);

    CHECK_THROWS_AS(ternary_substitute_param(conic, px, s, pz), DomainError);
}

TEST_CASE("ternary forms") {
    const TernaryForm x = TernaryForm::x();
    const TernaryForm y = TernaryForm::y();
    const TernaryForm z = TernaryForm::z();
    TernaryForm f(2);
    f.add_term({1, 1, 0}, 3);
    CHECK(f == (x * y).scaled(3));
    CHECK_THROWS_AS(f.add_term({1, 0, 0}, 1), DomainError);
    f.add_term({1, 1, 0}, -3);
    CHECK(f.is_zero());
    const TernaryForm g = x * x * y + z.pow(3);
    CHECK(g.partial(0) == (x * y).scaled(2));
    CHECK(g.partial(2) == (z * z).scaled(3));
    CHECK(g.evaluate(1, 2, 3) == GaussianRational(29));
    CHECK(g.scaled(GaussianRational(0, 1)).proportional_to(g));
    CHECK_FALSE((g + x.pow(3)).proportional_to(g));
    CHECK(ternary_compose(g, x + y, y, z) == (x + y) * (x + y) * y + z.pow(3));
}

TEST_CASE("bareiss determinant matches the Leibniz expansion") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<std::vector<U>> m(static_cast<std::size_t>(n), std::vector<U>(static_cast<std::size_t>(n)));
            for (auto& row : m) {
                for (auto& e : row) {
                    // Sparse entries force pivoting.
                    if (d(rng) > 0) e = poly({GaussianRational(d(rng), d(rng)), GaussianRational(d(rng))});
                }
            }
            CHECK(bareiss_determinant(m) == leibniz(m));
        }
    }
}

TEST_CASE("sylvester resultant matches the product of root differences") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        // a = prod (y - alpha_i(x)), b = prod (y - beta_j(x)) with polynomial roots.
        std::vector<U> alphas;
        std::vector<U> betas;
        for (int k = 0; k < 3; ++k) alphas.push_back(poly({small_gaussian(rng), small_gaussian(rng)}));
        for (int k = 0; k < 2; ++k) betas.push_back(poly({small_gaussian(rng), small_gaussian(rng)}));
        auto build = [](const std::vector<U>& roots) {
            BivariatePoly p{U::constant(1)};
            for (const U& r : roots) {
                BivariatePoly next(p.size() + 1);
                for (std::size_t k = 0; k < p.size(); ++k) {
                    next[k + 1] = next[k + 1] + p[k];
                    next[k] = next[k] - p[k] * r;
                }
                p = next;
            }
            return p;
        };
        U expected = U::constant(1);
        for (const U& a : alphas)
            for (const U& b : betas) expected = expected * (a - b);
        CHECK(sylvester_resultant(build(alphas), build(betas)) == expected);
    }
    CHECK(sylvester_resultant({U::constant(2)}, {U::constant(0), U::constant(1)}) == U::constant(2));
    CHECK(sylvester_resultant({}, {U::constant(1)}).is_zero());
}

TEST_CASE("truncated series examples") {
    using S = TruncatedMultiSeries;
    const S one_plus_h = S::linear({1}, 1, {1});
    CHECK(ts_mul(one_plus_h, one_plus_h) == S::linear({1}, 1, {2}));
    const S a = S::linear({1, 1}, 1, {1, 0});
    const S b = S::linear({1, 1}, 1, {0, 1});
    S expected = S::linear({1, 1}, 1, {1, 1});
    expected.set_coefficient(std::vector<unsigned>{1, 1}, 1);
    CHECK(ts_mul(a, b) == expected);
    const S one_minus_2h = S::linear({5}, 1, {-2});
    CHECK(ts_mul(one_minus_2h, ts_inverse(one_minus_2h)) == S::one({5}));
    CHECK(ts_inverse(S::linear({3}, 1, {-1})) == S::univariate({3}, 0, {1, 1, 1, 1}));
    CHECK(ts_inverse(S::linear({2}, 1, {-2})) == S::univariate({2}, 0, {1, 2, 4}));
    S inv2 = S::linear({1, 1}, 1, {1, 1});
    inv2.set_coefficient(std::vector<unsigned>{1, 1}, 2);
    CHECK(ts_inverse(S::linear({1, 1}, 1, {-1, -1})) == inv2);
    CHECK(ts_coefficient(S::univariate({3}, 0, {1, 1, 1, 1}), std::vector<unsigned>{3}) == Rational(1));

    CHECK_THROWS_AS(ts_mul(S::one({1}), S::one({2})), DomainError);
    CHECK_THROWS_AS(ts_inverse(S::variable({2}, 0)), DomainError);
    CHECK_THROWS_AS(ts_coefficient(S::one({2}), std::vector<unsigned>{3}), DomainError);
    CHECK_THROWS_AS(ts_coefficient(S::one({2}), std::vector<unsigned>{0, 0}), DomainError);
    CHECK(S::linear({2, 1}, 1, {Rational(-1, 2), 3}).to_string() == "1-(1/2)*h1+3*h2");
}

TEST_CASE("binomial coefficient identity at h^(m-1)") {
    using S = TruncatedMultiSeries;
    for (unsigned m = 1; m <= 8; ++m) {
        const std::vector<unsigned> caps{m - 1};
        const S s = ts_mul(S::linear(caps, 1, {-1}).pow(m - 1), ts_inverse(S::linear(caps, 1, {-2})));
        CHECK(ts_coefficient(s, caps) == Rational(1));
        // Brute force: sum_k C(m-1,k) (-1)^k 2^(m-1-k).
        Integer brute = 0;
        for (unsigned k = 0; k < m; ++k) {
            const Integer term = binomial(m - 1, k) * Integer(2).pow(m - 1 - k);
            brute = k % 2 ? brute - term : brute + term;
        }
        CHECK(brute == Integer(1));
    }
}

TEST_CASE("generic ED degree weights as coefficients of t^N") {
    using S = TruncatedMultiSeries;
    for (unsigned n = 0; n <= 12; ++n) {
        const std::vector<unsigned> caps{n};
        const S inv = ts_inverse(ts_mul(S::linear(caps, 1, {1}), S::linear(caps, 1, {2})));
        for (unsigned j = 0; j <= n; ++j) {
            std::vector<Rational> shift(n - j + 1);
            shift.back() = 1;
            const S s = ts_mul(S::univariate(caps, 0, shift), inv);
            const Integer w = Integer(2).pow(j + 1) - 1;
            CHECK(ts_coefficient(s, caps) == Rational(j % 2 ? -w : w));
        }
    }
}

TEST_CASE("series multiplication agrees with untruncated expansion") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<unsigned> cap(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t p = 1 + trial % 3;
        std::vector<unsigned> caps(p);
        for (auto& c : caps) c = cap(rng);
        const Dense a = random_dense(rng, p, 4);
        const Dense b = random_dense(rng, p, 4);
        const Dense c = random_dense(rng, p, 4);
        const auto ta = truncate(a, caps);
        const auto tb = truncate(b, caps);
        const auto tc = truncate(c, caps);
        CHECK(ts_mul(ta, tb) == truncate(dense_mul(a, b), caps));
        CHECK(ts_mul(ta, tb) == ts_mul(tb, ta));
        CHECK(ts_mul(ts_mul(ta, tb), tc) == ts_mul(ta, ts_mul(tb, tc)));
        CHECK(ts_mul(ta, ts_inverse(ta)) == TruncatedMultiSeries::one(caps));
        const auto prod = ts_mul(ta, tb);
        CHECK(ts_product_coefficient(ta, tb, caps) == ts_coefficient(prod, caps));

        std::vector<Rational> lin;
        for (std::size_t k = 0; k < p; ++k) lin.emplace_back(static_cast<long>(k) - 1, 2);
        const auto divided = ts_divide_linear(ta, 3, lin);
        CHECK(divided == ts_mul(ta, ts_inverse(TruncatedMultiSeries::linear(caps, 3, lin))));
    }
}
