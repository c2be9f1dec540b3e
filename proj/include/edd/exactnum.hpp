#pragma once

// Exact integers, rationals and Gaussian rationals.
//
// Integer and Rational are thin value types over GMP. Every constructor
// leaves the value in canonical form (reduced fraction, positive
// denominator), so equality is structural.

#include "edd/errors.hpp"

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edd {

class Integer {
public:
    Integer() = default;

    template <std::signed_integral T>
    Integer(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Integer(T v) : value_(static_cast<unsigned long>(v)) {}

    explicit Integer(mpz_class v) : value_(std::move(v)) {}

    /// Parses an optional leading '-' followed by decimal digits.
    /// Throws std::invalid_argument on anything else.
    static Integer parse(std::string_view text);

    std::string to_string() const { return value_.get_str(10); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return value_ == 1; }
    bool fits_long() const { return value_.fits_slong_p(); }
    long to_long() const;

    Integer abs() const { return Integer(mpz_class(::abs(value_))); }
    Integer pow(unsigned long exponent) const;

    const mpz_class& gmp() const { return value_; }

    Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
    Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
    Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ + b.value_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ - b.value_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ * b.value_)); }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.value_)); }

    /// Truncating quotient and remainder; throws DomainError on zero divisor.
    friend Integer operator/(const Integer& a, const Integer& b);
    friend Integer operator%(const Integer& a, const Integer& b);

    friend bool operator==(const Integer& a, const Integer& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class value_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer binomial(unsigned long n, unsigned long k);

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : value_(Integer(v).gmp()) {}

    Rational(const Integer& v) : value_(v.gmp()) {}  // NOLINT(google-explicit-constructor)

    /// numerator / denominator, reduced. Throws DomainError if denominator is zero.
    Rational(const Integer& numerator, const Integer& denominator);

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Accepts "p" or "p/q" with p, q decimal integers (q nonzero).
    static Rational parse(std::string_view text);

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
    Integer denominator() const { return Integer(mpz_class(value_.get_den())); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Throws DomainError when the value is not an integer.
    Integer to_integer() const;

    Rational inverse() const;
    Rational pow(long exponent) const;

    const mpq_class& gmp() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    /// this += a * b without a temporary Rational.
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { Rational r = a; r /= b; return r; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

/// An element a + b*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;

    template <std::integral T>
    GaussianRational(T v) : re_(v) {}

    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;
    GaussianRational pow(unsigned long exponent) const;

    /// "a+b*i" with the usual sign and unit elisions: "0", "-3/2", "i", "1-i", "2/3*i".
    std::string to_string() const;

    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
    GaussianRational& operator/=(const GaussianRational& o) { *this = *this / o; return *this; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) { return a * b.inverse(); }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);
std::ostream& operator<<(std::ostream& os, const Rational& v);
std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

}  // namespace edd
