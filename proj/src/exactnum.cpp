#include "edd/exactnum.hpp"

#include <algorithm>
#include <cctype>

namespace edd {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Integer Integer::parse(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits)) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    return Integer(mpz_class(std::string(text), 10));
}

long Integer::to_long() const {
    if (!fits_long()) throw std::overflow_error("integer does not fit in a machine word: " + to_string());
    return value_.get_si();
}

Integer Integer::pow(unsigned long exponent) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), exponent);
    return Integer(std::move(r));
}

Integer operator/(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DomainError("integer division by zero");
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return Integer(std::move(q));
}

Integer operator%(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DomainError("integer division by zero");
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return Integer(std::move(r));
}

Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.gmp().get_mpz_t(), b.gmp().get_mpz_t());
    return Integer(std::move(g));
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Integer(std::move(r));
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator.is_zero()) throw DomainError("rational with zero denominator");
    value_ = mpq_class(numerator.gmp(), denominator.gmp());
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::parse(text));
    const auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(den_text));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw DomainError("expected an integer, got " + to_string());
    return numerator();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(Integer(std::move(num)), Integer(std::move(den)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    value_ /= o.value_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (a.is_integer() && b.is_integer() && is_integer()) {
        mpz_addmul(value_.get_num_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
        return;
    }
    value_ += a.value_ * b.value_;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(i)");
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(unsigned long exponent) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
    if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
    if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    const Rational mag = im_.sign() < 0 ? -im_ : im_;
    imag = mag.is_one() ? "i" : mag.to_string() + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << v.to_string(); }

}  // namespace edd
