#include "mhlab/series.hpp"

#include <algorithm>
#include <sstream>

#include "mhlab/zonal.hpp"

namespace mhlab {

SeriesParams SeriesParams::one_f_one() {
    VarSetPtr pv = VarSet::params();
    SeriesParams sp;
    sp.param_vars = pv;
    sp.upper.push_back(RatFun::var(pv, "a"));
    sp.lower.push_back(RatFun::var(pv, "c"));
    return sp;
}

SeriesParams SeriesParams::one_f_one(const Rational& a, const Rational& c) {
    VarSetPtr pv = VarSet::params();
    SeriesParams sp;
    sp.param_vars = pv;
    sp.upper.push_back(RatFun::constant(pv, a));
    sp.lower.push_back(RatFun::constant(pv, c));
    return sp;
}

void check_lower_params(const SeriesParams& params, int m) {
    for (const RatFun& c : params.lower) {
        if (!c.is_constant()) continue;
        Rational v = c.constant_value();
        if (m == 1) {
            if (v.is_integer() && v.sign() <= 0)
                throw ParameterError("lower parameter " + v.str() +
                                     " lies in -N (excluded for m = 1)");
        } else {
            Rational twice = v * Rational(2);
            if (twice.is_integer() && twice <= Rational(m - 1))
                throw ParameterError("lower parameter " + v.str() + " lies in { k/2 : k <= m-1 = " +
                                     std::to_string(m - 1) + " } (excluded for m >= 2)");
        }
    }
}

TruncSeries::TruncSeries(int m, int N, VarSetPtr param_vars)
    : m_(m), N_(N), trusted_(N), param_vars_(std::move(param_vars)) {
    if (m < 1 || N < 0) throw StructuralError("TruncSeries: need m >= 1, N >= 0");
}

RatFun TruncSeries::coeff(const ExpVec& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? RatFun::constant(param_vars_, Rational(0)) : it->second;
}

void TruncSeries::add_coeff(const ExpVec& e, const RatFun& c) {
    if (static_cast<int>(e.size()) != m_) throw StructuralError("TruncSeries: exponent length mismatch");
    if (expvec_total(e) > N_) return;
    if (c.is_zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void TruncSeries::set_coeff(const ExpVec& e, const RatFun& c) {
    if (static_cast<int>(e.size()) != m_) throw StructuralError("TruncSeries: exponent length mismatch");
    if (expvec_total(e) > N_) return;
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

bool TruncSeries::is_zero_through_trusted() const {
    for (const auto& [e, c] : coeffs_) {
        if (expvec_total(e) <= trusted_ && !c.is_zero()) return false;
    }
    return true;
}

bool TruncSeries::equal_through(const TruncSeries& o, int degree) const {
    for (const auto& [e, c] : coeffs_) {
        if (expvec_total(e) <= degree && c != o.coeff(e)) return false;
    }
    for (const auto& [e, c] : o.coeffs_) {
        if (expvec_total(e) <= degree && c != coeff(e)) return false;
    }
    return true;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.m_ != m_) throw StructuralError("TruncSeries: dimension mismatch");
    trusted_ = std::min(trusted_, o.trusted_);
    for (const auto& [e, c] : o.coeffs_) add_coeff(e, c);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const RatFun& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, v] : coeffs_) v *= c;
    return *this;
}

Rational TruncSeries::evaluate(const std::vector<Rational>& point,
                               const std::map<std::string, Rational>& spec) const {
    if (static_cast<int>(point.size()) != m_) throw StructuralError("evaluate: point dimension mismatch");
    std::vector<Rational> pv;
    for (const auto& name : param_vars_->names()) {
        auto it = spec.find(name);
        if (it == spec.end()) throw StructuralError("evaluate: missing specialization for " + name);
        pv.push_back(it->second);
    }
    Rational total(0);
    for (const auto& [e, c] : coeffs_) {
        Rational t = c.eval(pv);
        for (size_t i = 0; i < point.size(); ++i) {
            if (e[i] != 0) t *= point[i].pow(e[i]);
        }
        total += t;
    }
    return total;
}

TruncSeries TruncSeries::specialized(const std::map<std::string, Rational>& spec) const {
    TruncSeries out(m_, N_, param_vars_);
    out.trusted_ = trusted_;
    for (const auto& [e, c] : coeffs_) {
        RatFun v = c;
        for (const auto& [name, val] : spec) {
            int idx = param_vars_->index_of(name);
            if (idx >= 0) v = v.subst(idx, val);
        }
        out.set_coeff(e, v);
    }
    return out;
}

std::string TruncSeries::str(int max_terms) const {
    VarSetPtr xv = VarSet::x_only(m_);
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (max_terms > 0 && shown >= max_terms) {
            os << " + ...";
            break;
        }
        if (!first) os << " + ";
        first = false;
        std::string mono = monomial_str(*xv, e);
        os << "(" << c.str() << ")";
        if (!mono.empty()) os << "*" << mono;
        ++shown;
    }
    if (first) os << "0";
    return os.str();
}

TruncSeries truncated_pfq(const SeriesParams& params, int m, int N) {
    check_lower_params(params, m);
    TruncSeries out(m, N, params.param_vars);
    VarSetPtr xvars = VarSet::x_only(m);
    RatFun one = RatFun::constant(params.param_vars, Rational(1));
    for (int k = 0; k <= N; ++k) {
        Rational kfact(factorial(k));
        for (const IntPartition& lam : enumerate_int_partitions(k, m)) {
            RatFun coef = one;
            for (const RatFun& av : params.upper) coef *= gen_pochhammer(av, lam);
            for (const RatFun& cv : params.lower) {
                RatFun p = gen_pochhammer(cv, lam);
                if (p.is_zero())
                    throw ParameterError("lower-parameter Pochhammer vanishes at " + lam.str());
                coef /= p;
            }
            coef /= RatFun::constant(params.param_vars, kfact);
            MPoly clam = zonal_poly(lam, m).expand(xvars);
            for (const auto& [e, c] : clam.terms()) {
                out.add_coeff(e, coef * RatFun::constant(params.param_vars, c));
            }
        }
    }
    return out;
}

bool series_symmetrize_check(const TruncSeries& s) {
    // Adjacent transpositions generate all coordinate permutations.
    for (int i = 0; i + 1 < s.m(); ++i) {
        for (const auto& [e, c] : s.coeffs()) {
            ExpVec e2 = e;
            std::swap(e2[static_cast<size_t>(i)], e2[static_cast<size_t>(i + 1)]);
            if (s.coeff(e2) != c) return false;
        }
    }
    return true;
}

}  // namespace mhlab
