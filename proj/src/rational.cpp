#include "mhlab/rational.hpp"

#include <ostream>

namespace mhlab {

Rational::Rational(long num, long den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { return ArithmeticError("invalid rational literal: '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    std::string str(s);
    for (char ch : str) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9'))) throw bad();
    }
    mpq_class v;
    if (v.set_str(str, 10) != 0) throw bad();
    if (v.get_den() == 0) throw ArithmeticError("rational with zero denominator");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

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

Rational Rational::inv() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), base.v_.get_num_mpz_t(), n);
    mpz_pow_ui(r.v_.get_den_mpz_t(), base.v_.get_den_mpz_t(), n);
    return r;
}

Rational Rational::content_gcd(const Rational& a, const Rational& b) {
    Int num = gcd(a.num(), b.num());
    Int den = lcm(a.den(), b.den());
    return Rational(num, den);
}

long Rational::two_adic_valuation() const {
    if (is_zero()) throw DomainError("2-adic valuation of zero");
    if (num() % 2 != 0) return -static_cast<long>(mpz_scan1(den().get_mpz_t(), 0));
    return static_cast<long>(mpz_scan1(num().get_mpz_t(), 0));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace mhlab
