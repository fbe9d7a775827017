#include "signedpinv/rational.hpp"

#include <cctype>
#include <ostream>

namespace signedpinv {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (sgn(den) == 0) throw ArithmeticError("rational with zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    require_nonzero_den(den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    const auto bad = [&] { return ArithmeticError("malformed rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    std::size_t i = text[0] == '-' ? 1 : 0;
    std::size_t slash = text.npos;
    if (i == text.size()) throw bad();
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] == '/') {
            if (slash != text.npos || k == i || k + 1 == text.size()) throw bad();
            slash = k;
        } else if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw bad();
        }
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw bad();
    require_nonzero_den(v.get_den());
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow_int(long base, unsigned exp) {
    mpz_class b(base), p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), exp);
    return Rational(p);
}

}  // namespace signedpinv
