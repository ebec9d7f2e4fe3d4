#pragma once

#include <optional>
#include <string>

#include "mhlab/mpoly.hpp"

namespace mhlab {

// Integer-or-infinity value of a discrete valuation.
struct Valuation {
    bool infinite = false;  // true exactly for the zero element
    long value = 0;

    static Valuation inf() { return Valuation{true, 0}; }
    static Valuation of(long v) { return Valuation{false, v}; }
    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

// Normalized fraction of two MPoly: gcd(num, den) = 1 and den monic under the
// global grlex order, so equal values are structurally equal.
class RatFun {
public:
    RatFun() = default;  // zero over the empty variable set
    explicit RatFun(MPoly num);
    RatFun(MPoly num, MPoly den);

    static RatFun constant(const VarSetPtr& vars, const Rational& c) {
        return RatFun(MPoly::constant(vars, c));
    }
    static RatFun var(const VarSetPtr& vars, const std::string& name, int exp = 1);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun inv() const;
    RatFun pow(long e) const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun derivative(int var) const;
    RatFun subst(int var, const Rational& value) const;  // evaluation error on pole
    RatFun subst(int var, const RatFun& value) const;
    RatFun with_vars(const VarSetPtr& target) const;
    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;

private:
    void normalize();
    MPoly num_;
    MPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& r);

// Order of vanishing of p along var = 0: sup{ i : var^(-i) * p has no pole
// along var = 0 }; infinite exactly for p = 0.
Valuation valuation_at(const RatFun& p, int var);
Valuation valuation_at(const RatFun& p, const std::string& var);

}  // namespace mhlab
