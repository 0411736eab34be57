#include "isochron/rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace isochron {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

BigRat::BigRat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
    canonicalize();
}

void BigRat::canonicalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = big_gcd(boost::multiprecision::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigRat BigRat::abs() const {
    BigRat r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
}

BigRat BigRat::inv() const {
    if (is_zero()) throw std::domain_error("BigRat: division by zero");
    return BigRat(den_, num_);
}

BigRat operator-(const BigRat& a) {
    BigRat r = a;
    r.num_ = -r.num_;
    return r;
}

BigRat operator+(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRat operator-(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BigRat operator*(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.num_, a.den_ * b.den_);
}

BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
    return BigRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigRat::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

BigRat BigRat::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("BigRat: cannot parse '" + std::string(text) + "'"); };
    size_t pos = 0;
    auto read_int = [&]() -> BigInt {
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        size_t start = pos;
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) bad();
        BigInt v(std::string(text.substr(start, pos - start)));
        return sign < 0 ? BigInt(-v) : v;
    };
    BigInt num = read_int();
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int();
    }
    if (pos != text.size()) bad();
    return BigRat(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRat& q) { return os << q.str(); }

BigRat pow(const BigRat& base, unsigned exp) {
    BigRat r(1);
    BigRat b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

GaussRat GaussRat::inv() const {
    if (is_zero()) throw std::domain_error("GaussRat: division by zero");
    BigRat n = norm();
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re_, -a.im_); }

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re_ + b.re_, a.im_ + b.im_);
}

GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re_ - b.re_, a.im_ - b.im_);
}

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }

std::string GaussRat::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    BigRat mag = im_.abs();
    if (mag.is_one()) {
        imag = "i";
    } else {
        imag = mag.str() + "*i";
    }
    if (re_.is_zero()) return (im_.sgn() < 0 ? "-" : "") + imag;
    return re_.str() + (im_.sgn() < 0 ? "-" : "+") + imag;
}

GaussRat GaussRat::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("GaussRat: cannot parse '" + std::string(text) + "'"); };
    size_t pos = 0;
    auto at_end = [&] { return pos == text.size(); };

    // One signed component: either "i", "q", "q*i" or "qi" with q a rational.
    struct Part {
        BigRat value;
        bool imaginary;
    };
    auto read_part = [&](bool allow_sign) -> Part {
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (!allow_sign) bad();
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            return {BigRat(sign), true};
        }
        size_t start = pos;
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) bad();
        BigInt num(std::string(text.substr(start, pos - start)));
        BigInt den = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            size_t ddigits = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                ++ddigits;
            }
            if (ddigits == 0) bad();
            den = BigInt(std::string(text.substr(dstart, pos - dstart)));
        }
        BigRat q(sign * num, den);
        bool imaginary = false;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            if (pos < text.size() && text[pos] == 'i') {
                ++pos;
                imaginary = true;
            } else {
                bad();
            }
        } else if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            imaginary = true;
        }
        return {q, imaginary};
    };

    if (text.empty()) bad();
    Part first = read_part(true);
    if (at_end()) {
        return first.imaginary ? GaussRat::imag(first.value) : GaussRat(first.value);
    }
    if (first.imaginary) bad();  // imaginary part must come last
    Part second = read_part(true);
    if (!at_end() || !second.imaginary) bad();
    return GaussRat(first.value, second.value);
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

GaussRat pow(const GaussRat& base, int exp) {
    if (exp < 0) return pow(base.inv(), -exp);
    GaussRat r(1);
    GaussRat b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

}  // namespace isochron
