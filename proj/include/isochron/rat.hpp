/**
 * @file rat.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision rationals and
 *        Gaussian rationals (complex numbers over Q).
 *
 * Both types are kept in a unique canonical form so that equality is
 * plain componentwise comparison and printed output is reproducible.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace isochron {

using BigInt = boost::multiprecision::cpp_int;

/// Rational number in canonical form: gcd(|num|, den) = 1 and den > 0.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long long v) : num_(v), den_(1) {}
    BigRat(const BigInt& v) : num_(v), den_(1) {}
    BigRat(BigInt num, BigInt den);
    BigRat(long long num, long long den) : BigRat(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sgn() const { return num_.sign(); }

    BigRat abs() const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    BigRat inv() const;

    friend BigRat operator-(const BigRat& a);
    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend BigRat operator-(const BigRat& a, const BigRat& b);
    friend BigRat operator*(const BigRat& a, const BigRat& b);
    friend BigRat operator/(const BigRat& a, const BigRat& b);

    BigRat& operator+=(const BigRat& b) { return *this = *this + b; }
    BigRat& operator-=(const BigRat& b) { return *this = *this - b; }
    BigRat& operator*=(const BigRat& b) { return *this = *this * b; }
    BigRat& operator/=(const BigRat& b) { return *this = *this / b; }

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
    }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b);

    /// "n" when den == 1, else "n/d"; the sign sits on the numerator.
    std::string str() const;
    /// Accepts the same grammar; throws std::invalid_argument on bad input.
    static BigRat parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const BigRat& q);

private:
    BigInt num_;
    BigInt den_;  // > 0

    void canonicalize();
};

BigRat pow(const BigRat& base, unsigned exp);

/// Complex number with rational real and imaginary parts, i.e. an element
/// of Q(i). Canonical form is componentwise; equality is exact.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long long re) : re_(re) {}
    GaussRat(BigRat re) : re_(std::move(re)) {}
    GaussRat(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(BigRat(0), BigRat(1)); }
    static GaussRat imag(BigRat b) { return GaussRat(BigRat(0), std::move(b)); }

    const BigRat& re() const { return re_; }
    const BigRat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    /// |z|^2 = re^2 + im^2, a rational.
    BigRat norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussRat inv() const;

    friend GaussRat operator-(const GaussRat& a);
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);

    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text: "a/b", "c/d*i" or "a/b+c/d*i"; unit imaginary parts
    /// collapse to "i"/"-i" and the sign sits on the numerator.
    std::string str() const;
    /// Accepts the same grammar (plus "3i" as a shorthand for "3*i");
    /// throws std::invalid_argument on bad input.
    static GaussRat parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& z);

private:
    BigRat re_;
    BigRat im_;
};

GaussRat pow(const GaussRat& base, int exp);  // negative exp inverts

}  // namespace isochron
