#include "mhlab/mpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mhlab {

ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

long expvec_total(const ExpVec& a) {
    long t = 0;
    for (int e : a) t += e;
    return t;
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = expvec_total(a), db = expvec_total(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

MPoly MPoly::constant(VarSetPtr vars, const Rational& c) {
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(ExpVec(static_cast<size_t>(p.vars_->size()), 0), c);
    return p;
}

MPoly MPoly::var(const VarSetPtr& vars, const std::string& name, int exp) {
    int idx = vars->index_of(name);
    if (idx < 0) throw StructuralError("unknown variable: " + name);
    return var(vars, idx, exp);
}

MPoly MPoly::var(VarSetPtr vars, int index, int exp) {
    ExpVec e(static_cast<size_t>(vars->size()), 0);
    e[static_cast<size_t>(index)] = exp;
    return monomial(std::move(vars), std::move(e), Rational(1));
}

MPoly MPoly::monomial(VarSetPtr vars, ExpVec e, const Rational& c) {
    if (static_cast<int>(e.size()) != vars->size())
        throw StructuralError("exponent vector length mismatch");
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && expvec_total(terms_.begin()->first) == 0;
}

bool MPoly::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second.is_one();
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw StructuralError("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

long MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return expvec_total(terms_.rbegin()->first);
}

long MPoly::degree_in(int var) const {
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, e[static_cast<size_t>(var)]);
    return d;
}

long MPoly::min_degree_in(int var) const {
    if (terms_.empty()) return 0;
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long v = e[static_cast<size_t>(var)];
        if (d < 0 || v < d) d = v;
    }
    return d;
}

Rational MPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::set_coeff(ExpVec e, const Rational& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[std::move(e)] = c;
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::pair<ExpVec, Rational> MPoly::leading_term() const {
    if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
    return *terms_.rbegin();
}

Rational MPoly::leading_coeff() const {
    return leading_term().second;
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    require_same_vars(vars_, o.vars_, "poly add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    require_same_vars(vars_, o.vars_, "poly sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    require_same_vars(a.vars(), b.vars(), "poly mul");
    MPoly r(a.vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            r.add_term(expvec_add(ea, eb), ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(long e) const {
    if (e < 0) throw ArithmeticError("negative polynomial power");
    MPoly r = constant(vars_, Rational(1));
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    return same_vars(vars_, o.vars_) && terms_ == o.terms_;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        ExpVec e2 = e;
        e2[static_cast<size_t>(var)] = k - 1;
        r.add_term(e2, c * Rational(k));
    }
    return r;
}

MPoly MPoly::subst(int var, const MPoly& value) const {
    require_same_vars(vars_, value.vars(), "poly subst");
    // Collect by power of the substituted variable, then Horner-expand.
    std::map<long, MPoly> by_power;
    for (const auto& [e, c] : terms_) {
        long k = e[static_cast<size_t>(var)];
        ExpVec e2 = e;
        e2[static_cast<size_t>(var)] = 0;
        auto [it, fresh] = by_power.try_emplace(k, vars_);
        it->second.add_term(e2, c);
    }
    // Plain power expansion; degrees at desk scale are small.
    MPoly r(vars_);
    for (const auto& [k, p] : by_power) {
        r += p * value.pow(k);
    }
    return r;
}

MPoly MPoly::subst(int var, const Rational& value) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        long k = e[static_cast<size_t>(var)];
        ExpVec e2 = e;
        e2[static_cast<size_t>(var)] = 0;
        r.add_term(e2, c * value.pow(k));
    }
    return r;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != vars_->size())
        throw StructuralError("eval point dimension mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < point.size(); ++i) {
            if (e[i] != 0) t *= point[i].pow(e[i]);
        }
        total += t;
    }
    return total;
}

MPoly MPoly::with_vars(const VarSetPtr& target) const {
    if (same_vars(vars_, target)) return *this;
    std::vector<int> map(static_cast<size_t>(vars_->size()), -1);
    for (int i = 0; i < vars_->size(); ++i) map[static_cast<size_t>(i)] = target->index_of(vars_->name(i));
    MPoly r(target);
    for (const auto& [e, c] : terms_) {
        ExpVec e2(static_cast<size_t>(target->size()), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0)
                throw StructuralError("with_vars: target lacks variable " + vars_->name(static_cast<int>(i)));
            e2[static_cast<size_t>(map[i])] = e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

MPoly MPoly::divexact(const MPoly& d) const {
    MPoly q;
    if (!try_divide(d, &q)) throw ArithmeticError("inexact polynomial division");
    return q;
}

bool MPoly::try_divide(const MPoly& d, MPoly* quotient) const {
    require_same_vars(vars_, d.vars_, "poly div");
    if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
    MPoly r = *this;
    MPoly q(vars_);
    const auto& [lde, ldc] = *d.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& [lre, lrc] = *r.terms_.rbegin();
        ExpVec diff(lre.size());
        for (size_t i = 0; i < lre.size(); ++i) {
            diff[i] = lre[i] - lde[i];
            if (diff[i] < 0) return false;
        }
        Rational cq = lrc / ldc;
        q.add_term(diff, cq);
        MPoly t = MPoly::monomial(vars_, diff, cq);
        r -= t * d;
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    MPoly r = *this;
    r *= leading_coeff().inv();
    return r;
}

Rational MPoly::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) {
        g = Rational::content_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

MPoly MPoly::coeff_of_power(int v, long k) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(v)] != k) continue;
        ExpVec e2 = e;
        e2[static_cast<size_t>(v)] = 0;
        r.add_term(e2, c);
    }
    return r;
}

std::string monomial_str(const VarSet& vars, const ExpVec& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.name(static_cast<int>(i));
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool first = s.empty();
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono = monomial_str(*vars_, e);
        if (mono.empty()) {
            s += ac.str();
        } else if (ac.is_one()) {
            s += mono;
        } else {
            s += ac.str() + "*" + mono;
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
    return os << p.str();
}

}  // namespace mhlab
