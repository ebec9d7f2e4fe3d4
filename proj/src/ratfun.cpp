#include "mhlab/ratfun.hpp"

#include <ostream>

namespace mhlab {

RatFun::RatFun(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.vars(), Rational(1))) {}

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_vars(num_.vars(), den_.vars(), "ratfun");
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    normalize();
}

RatFun RatFun::var(const VarSetPtr& vars, const std::string& name, int exp) {
    if (exp >= 0) return RatFun(MPoly::var(vars, name, exp));
    return RatFun(MPoly::constant(vars, Rational(1)), MPoly::var(vars, name, -exp));
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.vars(), Rational(1));
        return;
    }
    if (!den_.is_one()) {
        MPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inv();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFun::constant_value() const {
    if (!is_constant()) throw StructuralError("constant_value on non-constant rational function");
    return num_.constant_value();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) return a;
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    // Cross-cancel before multiplying to keep gcd inputs small.
    MPoly g1 = poly_gcd(a.num_, b.den_);
    MPoly g2 = poly_gcd(b.num_, a.den_);
    return RatFun(a.num_.divexact(g1) * b.num_.divexact(g2),
                  a.den_.divexact(g2) * b.den_.divexact(g1));
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw ArithmeticError("rational function division by zero");
    return a * b.inv();
}

RatFun RatFun::inv() const {
    if (is_zero()) throw ArithmeticError("rational function division by zero");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e == 0) return RatFun(MPoly::constant(vars(), Rational(1)));
    RatFun base = e < 0 ? inv() : *this;
    long n = e < 0 ? -e : e;
    RatFun r = base;
    for (long i = 1; i < n; ++i) r *= base;
    return r;
}

RatFun RatFun::derivative(int var) const {
    if (den_.is_one()) return RatFun(num_.derivative(var));
    return RatFun(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFun RatFun::subst(int var, const Rational& value) const {
    MPoly d = den_.subst(var, value);
    if (d.is_zero()) throw ArithmeticError("specialization hits a pole");
    return RatFun(num_.subst(var, value), std::move(d));
}

RatFun RatFun::subst(int var, const RatFun& value) const {
    // Horner-free; exponents at desk scale are small.
    RatFun n(MPoly::constant(vars(), Rational(0)));
    RatFun d(MPoly::constant(vars(), Rational(0)));
    auto subst_poly = [&](const MPoly& p) {
        RatFun acc(MPoly::constant(vars(), Rational(0)));
        std::map<long, MPoly> by_power;
        for (const auto& [e, c] : p.terms()) {
            long k = e[static_cast<size_t>(var)];
            ExpVec e2 = e;
            e2[static_cast<size_t>(var)] = 0;
            auto [it, fresh] = by_power.try_emplace(k, p.vars());
            it->second.add_term(e2, c);
        }
        for (const auto& [k, q] : by_power) acc += RatFun(q) * value.pow(k);
        return acc;
    };
    n = subst_poly(num_);
    d = subst_poly(den_);
    if (d.is_zero()) throw ArithmeticError("substitution hits a pole");
    return n / d;
}

RatFun RatFun::with_vars(const VarSetPtr& target) const {
    return RatFun(num_.with_vars(target), den_.with_vars(target));
}

Rational RatFun::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw ArithmeticError("evaluation hits a pole");
    return num_.eval(point) / d;
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const MPoly& p) {
        if (p.terms().size() == 1 && p.leading_coeff().sign() > 0) return p.str();
        return "(" + p.str() + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) {
    return os << r.str();
}

Valuation valuation_at(const RatFun& p, int var) {
    if (p.is_zero()) return Valuation::inf();
    return Valuation::of(p.num().min_degree_in(var) - p.den().min_degree_in(var));
}

Valuation valuation_at(const RatFun& p, const std::string& var) {
    int idx = p.vars()->index_of(var);
    if (idx < 0) throw StructuralError("unknown variable: " + var);
    return valuation_at(p, idx);
}

}  // namespace mhlab
