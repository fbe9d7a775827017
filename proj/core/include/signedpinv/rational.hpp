#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace signedpinv {

// Thrown when an exact computation is asked to do something undefined
// (division by zero, malformed rational literal).
class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Arithmetic is exact; there is no rounding anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}
    Rational(int value) : v_(static_cast<long>(value)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& value) : v_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);

    // Parses "p" or "p/q" in base 10. Rejects anything else, including
    // whitespace, signs after the first character, and q == 0.
    static Rational from_string(const std::string& text);

    // Renders as "p" for integers, "p/q" otherwise, with q > 1.
    std::string str() const;

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const;

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // kept canonical by mpq arithmetic
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// base^exp as an exact rational; exp >= 0.
Rational pow_int(long base, unsigned exp);

}  // namespace signedpinv
