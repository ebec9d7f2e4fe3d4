#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "mhlab/errors.hpp"

namespace mhlab {

using Int = mpz_class;

// Arbitrary-precision rational with enforced canonical form:
// gcd(|num|, den) = 1 and den > 0. All arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const Int& num, const Int& den);

    // Accepts "p", "-p", "p/q" with arbitrary-precision integers.
    static Rational parse(std::string_view s);

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

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

    Rational inv() const;
    Rational abs() const;
    Rational pow(long e) const;  // negative e inverts; 0^0 = 1

    // gcd(|a|,|b|) as a nonnegative rational: gcd of numerators over lcm of
    // denominators; used for polynomial content extraction.
    static Rational content_gcd(const Rational& a, const Rational& b);

    // Exponent of 2 in the factorization num/den; requires a nonzero value.
    long two_adic_valuation() const;

    std::string str() const;  // canonical "p/q" or "p"

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Int factorial(long n);
Int binomial(long n, long k);

}  // namespace mhlab
