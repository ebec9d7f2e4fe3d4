#include "mhlab/weylop.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mhlab/linalg.hpp"

namespace mhlab {

WeylOp::WeylOp(int m, CoeffMode mode) : m_(m), mode_(mode), cvars_(VarSet::x_params(m)) {
    if (m < 0) throw StructuralError("WeylOp: need m >= 0");
}

WeylOp WeylOp::constant(int m, CoeffMode mode, const Rational& c) {
    WeylOp op(m, mode);
    ExpVec zero(static_cast<size_t>(m), 0);
    op.add_term(OpTermKey{zero, zero}, RatFun::constant(op.cvars_, c));
    return op;
}

WeylOp WeylOp::x(int m, CoeffMode mode, int i, int exp) {
    WeylOp op(m, mode);
    ExpVec zero(static_cast<size_t>(m), 0);
    if (mode == CoeffMode::Poly) {
        ExpVec alpha = zero;
        alpha[static_cast<size_t>(i)] = exp;
        op.add_term(OpTermKey{alpha, zero}, RatFun::constant(op.cvars_, Rational(1)));
    } else {
        op.add_term(OpTermKey{zero, zero}, RatFun::var(op.cvars_, op.cvars_->name(i), exp));
    }
    return op;
}

WeylOp WeylOp::d(int m, CoeffMode mode, int i, int exp) {
    WeylOp op(m, mode);
    ExpVec zero(static_cast<size_t>(m), 0);
    ExpVec beta = zero;
    beta[static_cast<size_t>(i)] = exp;
    op.add_term(OpTermKey{zero, beta}, RatFun::constant(op.cvars_, Rational(1)));
    return op;
}

WeylOp WeylOp::param(int m, CoeffMode mode, const std::string& name) {
    WeylOp op(m, mode);
    ExpVec zero(static_cast<size_t>(m), 0);
    op.add_term(OpTermKey{zero, zero}, RatFun::var(op.cvars_, name));
    return op;
}

WeylOp WeylOp::from_fun(const RatFun& f, int m) {
    WeylOp op(m, CoeffMode::Rational);
    ExpVec zero(static_cast<size_t>(m), 0);
    op.add_term(OpTermKey{zero, zero}, f.with_vars(op.cvars_));
    return op;
}

WeylOp WeylOp::term(int m, CoeffMode mode, ExpVec alpha, ExpVec beta, RatFun coeff) {
    WeylOp op(m, mode);
    op.add_term(OpTermKey{std::move(alpha), std::move(beta)}, coeff.with_vars(op.cvars_));
    return op;
}

long WeylOp::order() const {
    long o = -1;
    for (const auto& [k, c] : terms_) o = std::max(o, expvec_total(k.beta));
    return o;
}

RatFun WeylOp::coeff_of(const ExpVec& alpha, const ExpVec& beta) const {
    auto it = terms_.find(OpTermKey{alpha, beta});
    return it == terms_.end() ? RatFun::constant(cvars_, Rational(0)) : it->second;
}

void WeylOp::add_term(const OpTermKey& key, const RatFun& coeff) {
    if (static_cast<int>(key.alpha.size()) != m_ || static_cast<int>(key.beta.size()) != m_)
        throw StructuralError("WeylOp: exponent length mismatch");
    if (mode_ == CoeffMode::Rational && expvec_total(key.alpha) != 0)
        throw StructuralError("WeylOp: rational mode keeps alpha = 0");
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOp WeylOp::operator-() const {
    WeylOp r(m_, mode_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    if (o.m_ != m_ || o.mode_ != mode_) throw StructuralError("WeylOp add: mode or dimension mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    if (o.m_ != m_ || o.mode_ != mode_) throw StructuralError("WeylOp sub: mode or dimension mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

WeylOp& WeylOp::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= RatFun::constant(cvars_, c);
    return *this;
}

WeylOp WeylOp::left_mul_fun(const RatFun& f) const {
    RatFun ff = f.with_vars(cvars_);
    WeylOp r(m_, mode_);
    if (mode_ == CoeffMode::Rational) {
        for (const auto& [k, c] : terms_) r.add_term(k, ff * c);
        return r;
    }
    if (!ff.is_polynomial()) throw StructuralError("WeylOp: polynomial mode cannot absorb a denominator");
    for (const auto& [mono, mc] : ff.num().terms()) {
        ExpVec xpart(static_cast<size_t>(m_), 0);
        ExpVec ppart(static_cast<size_t>(cvars_->size()), 0);
        for (size_t i = 0; i < mono.size(); ++i) {
            if (i < static_cast<size_t>(m_))
                xpart[i] = mono[i];
            else
                ppart[i] = mono[i];
        }
        RatFun pc(MPoly::monomial(cvars_, ppart, mc));
        for (const auto& [k, c] : terms_) {
            r.add_term(OpTermKey{expvec_add(k.alpha, xpart), k.beta}, pc * c);
        }
    }
    return r;
}

WeylOp WeylOp::pow(long e) const {
    if (e < 0) throw ArithmeticError("negative operator power");
    WeylOp r = constant(m_, mode_, Rational(1));
    for (long i = 0; i < e; ++i) r = weyl_mul(r, *this);
    return r;
}

WeylOp WeylOp::to_rational() const {
    if (mode_ == CoeffMode::Rational) return *this;
    WeylOp r(m_, CoeffMode::Rational);
    ExpVec zero(static_cast<size_t>(m_), 0);
    for (const auto& [k, c] : terms_) {
        ExpVec mono(static_cast<size_t>(cvars_->size()), 0);
        for (int i = 0; i < m_; ++i) mono[static_cast<size_t>(i)] = k.alpha[static_cast<size_t>(i)];
        RatFun xmono(MPoly::monomial(cvars_, mono, Rational(1)));
        r.add_term(OpTermKey{zero, k.beta}, c * xmono);
    }
    return r;
}

bool WeylOp::poly_convertible() const {
    for (const auto& [k, c] : terms_) {
        if (!c.is_polynomial()) return false;
    }
    return true;
}

WeylOp WeylOp::to_poly() const {
    if (mode_ == CoeffMode::Poly) return *this;
    WeylOp r(m_, CoeffMode::Poly);
    for (const auto& [k, c] : terms_) {
        if (!c.is_polynomial())
            throw DomainError("operator has non-polynomial coefficients: " + c.str());
        for (const auto& [mono, mc] : c.num().terms()) {
            ExpVec xpart(static_cast<size_t>(m_), 0);
            ExpVec ppart(static_cast<size_t>(cvars_->size()), 0);
            for (size_t i = 0; i < mono.size(); ++i) {
                if (i < static_cast<size_t>(m_))
                    xpart[i] = mono[i];
                else
                    ppart[i] = mono[i];
            }
            r.add_term(OpTermKey{xpart, k.beta}, RatFun(MPoly::monomial(cvars_, ppart, mc)));
        }
    }
    return r;
}

WeylOp WeylOp::subst_param(const std::string& name, const Rational& value) const {
    int idx = cvars_->index_of(name);
    if (idx < 0) throw StructuralError("unknown parameter: " + name);
    WeylOp r(m_, mode_);
    for (const auto& [k, c] : terms_) r.add_term(k, c.subst(idx, value));
    return r;
}

std::pair<ExpVec, RatFun> WeylOp::lead_d() const {
    if (terms_.empty()) throw StructuralError("lead_d of zero operator");
    // Terms are keyed by (beta, alpha) ascending; the last key has the largest
    // beta. In rational mode alpha = 0, so this is the leading d-term.
    const auto& [k, c] = *terms_.rbegin();
    return {k.beta, c};
}

bool WeylOp::operator==(const WeylOp& o) const {
    return m_ == o.m_ && mode_ == o.mode_ && terms_ == o.terms_;
}

std::string WeylOp::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, coeff] = *it;
        // Sign comes from the leading coefficient of the numerator.
        int sign = coeff.num().leading_coeff().sign();
        RatFun ac = sign < 0 ? -coeff : coeff;
        std::string mono;
        {
            std::string xs, ds;
            for (int i = 0; i < m_; ++i) {
                int e = key.alpha[static_cast<size_t>(i)];
                if (e == 0) continue;
                if (!xs.empty()) xs += "*";
                xs += cvars_->name(i);
                if (e != 1) xs += "^" + std::to_string(e);
            }
            for (int i = 0; i < m_; ++i) {
                int e = key.beta[static_cast<size_t>(i)];
                if (e == 0) continue;
                if (!ds.empty()) ds += "*";
                ds += "d" + std::to_string(i + 1);
                if (e != 1) ds += "^" + std::to_string(e);
            }
            mono = xs;
            if (!ds.empty()) mono += (mono.empty() ? "" : "*") + ds;
        }
        std::string cs;
        if (ac.is_one()) {
            cs = mono.empty() ? "1" : "";
        } else if (ac.is_polynomial() && ac.num().terms().size() == 1) {
            cs = ac.str();
        } else {
            cs = "(" + ac.str() + ")";
        }
        std::string term = cs;
        if (!mono.empty()) {
            if (!term.empty()) term += "*";
            term += mono;
        }
        if (s.empty()) {
            s = (sign < 0 ? "-" : "") + term;
        } else {
            s += (sign < 0 ? " - " : " + ") + term;
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const WeylOp& op) {
    return os << op.str();
}

namespace {

// Falling factorial j (j-1) ... (j-k+1).
Rational falling(long j, long k) {
    Rational r(1);
    for (long t = 0; t < k; ++t) r *= Rational(j - t);
    return r;
}

}  // namespace

WeylOp weyl_mul(const WeylOp& P, const WeylOp& Q) {
    if (P.m() != Q.m() || P.mode() != Q.mode())
        throw StructuralError("weyl_mul: mode or dimension mismatch");
    int m = P.m();
    WeylOp out(m, P.mode());
    if (P.mode() == CoeffMode::Poly) {
        for (const auto& [kp, cp] : P.terms()) {
            for (const auto& [kq, cq] : Q.terms()) {
                // d^beta x^gamma expansion, independently per variable.
                RatFun base = cp * cq;
                std::vector<std::pair<OpTermKey, Rational>> acc{
                    {OpTermKey{ExpVec(static_cast<size_t>(m), 0), ExpVec(static_cast<size_t>(m), 0)},
                     Rational(1)}};
                for (int i = 0; i < m; ++i) {
                    int b = kp.beta[static_cast<size_t>(i)];
                    int g = kq.alpha[static_cast<size_t>(i)];
                    std::vector<std::pair<OpTermKey, Rational>> next;
                    for (int k = 0; k <= std::min(b, g); ++k) {
                        Rational f = Rational(binomial(b, k)) * falling(g, k);
                        for (const auto& [key, c] : acc) {
                            OpTermKey nk = key;
                            nk.alpha[static_cast<size_t>(i)] += g - k;
                            nk.beta[static_cast<size_t>(i)] += b - k;
                            next.emplace_back(std::move(nk), c * f);
                        }
                    }
                    acc = std::move(next);
                }
                for (const auto& [key, c] : acc) {
                    OpTermKey nk;
                    nk.alpha = expvec_add(key.alpha, kp.alpha);
                    nk.beta = expvec_add(key.beta, kq.beta);
                    out.add_term(nk, base * RatFun::constant(out.coeff_vars(), c));
                }
            }
        }
        return out;
    }
    // Rational mode: d^beta applied past q(x) by the Leibniz rule.
    ExpVec zero(static_cast<size_t>(m), 0);
    for (const auto& [kp, cp] : P.terms()) {
        for (const auto& [kq, cq] : Q.terms()) {
            // Iterate k <= beta multi-indices.
            ExpVec k(static_cast<size_t>(m), 0);
            while (true) {
                RatFun deriv = cq;
                Rational mult(1);
                bool nonzero = true;
                for (int i = 0; i < m && nonzero; ++i) {
                    int ki = k[static_cast<size_t>(i)];
                    if (ki > 0) {
                        mult *= Rational(binomial(kp.beta[static_cast<size_t>(i)], ki));
                        for (int t = 0; t < ki; ++t) {
                            deriv = deriv.derivative(i);
                            if (deriv.is_zero()) {
                                nonzero = false;
                                break;
                            }
                        }
                    }
                }
                if (nonzero && !deriv.is_zero()) {
                    ExpVec nb(static_cast<size_t>(m), 0);
                    for (int i = 0; i < m; ++i)
                        nb[static_cast<size_t>(i)] = kp.beta[static_cast<size_t>(i)] -
                                                     k[static_cast<size_t>(i)] +
                                                     kq.beta[static_cast<size_t>(i)];
                    out.add_term(OpTermKey{zero, nb},
                                 cp * deriv * RatFun::constant(out.coeff_vars(), mult));
                }
                // Advance the multi-index k within 0 <= k <= kp.beta.
                int i = 0;
                for (; i < m; ++i) {
                    if (k[static_cast<size_t>(i)] < kp.beta[static_cast<size_t>(i)]) {
                        ++k[static_cast<size_t>(i)];
                        for (int j = 0; j < i; ++j) k[static_cast<size_t>(j)] = 0;
                        break;
                    }
                }
                if (i == m) break;
            }
        }
    }
    return out;
}

WeightVector WeightVector::order_filtration(int m) {
    WeightVector w;
    w.u.assign(static_cast<size_t>(m), Rational(0));
    w.v.assign(static_cast<size_t>(m), Rational(1));
    return w;
}

WeightVector WeightVector::make(std::vector<Rational> u, std::vector<Rational> v) {
    if (u.size() != v.size()) throw StructuralError("weight vector: size mismatch");
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] + v[i] < Rational(0))
            throw StructuralError("weight vector requires u + v >= 0 componentwise");
    }
    WeightVector w;
    w.u = std::move(u);
    w.v = std::move(v);
    return w;
}

bool WeightVector::all_positive_sum() const {
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] + v[i] <= Rational(0)) return false;
    }
    return true;
}

GrElement init_w(const WeylOp& P, const WeightVector& w) {
    if (P.is_zero()) throw DomainError("init_w of the zero operator");
    if (P.mode() != CoeffMode::Poly) throw StructuralError("init_w: polynomial mode required");
    int m = P.m();
    if (static_cast<int>(w.u.size()) != m) throw StructuralError("init_w: weight size mismatch");
    auto wdeg = [&](const OpTermKey& k) {
        Rational d(0);
        for (int i = 0; i < m; ++i) {
            d += Rational(k.alpha[static_cast<size_t>(i)]) * w.u[static_cast<size_t>(i)];
            d += Rational(k.beta[static_cast<size_t>(i)]) * w.v[static_cast<size_t>(i)];
        }
        return d;
    };
    bool have = false;
    Rational best(0);
    for (const auto& [k, c] : P.terms()) {
        Rational d = wdeg(k);
        if (!have || d > best) {
            best = d;
            have = true;
        }
    }
    GrElement out;
    if (w.all_positive_sum()) {
        out.commutative = true;
        VarSetPtr gv = VarSet::x_xi_params(m);
        out.sym = MPoly(gv);
        for (const auto& [k, c] : P.terms()) {
            if (wdeg(k) != best) continue;
            for (const auto& [mono, mc] : c.num().terms()) {
                ExpVec e(static_cast<size_t>(gv->size()), 0);
                for (int i = 0; i < m; ++i) {
                    e[static_cast<size_t>(i)] = k.alpha[static_cast<size_t>(i)];
                    e[static_cast<size_t>(m + i)] = k.beta[static_cast<size_t>(i)];
                }
                // Parameter exponents sit after the x-block in coeff vars.
                e[static_cast<size_t>(2 * m)] = mono[static_cast<size_t>(m)];
                e[static_cast<size_t>(2 * m + 1)] = mono[static_cast<size_t>(m + 1)];
                out.sym.add_term(e, mc);
            }
        }
        out.op = WeylOp(m, CoeffMode::Poly);
    } else {
        out.commutative = false;
        out.op = WeylOp(m, CoeffMode::Poly);
        for (const auto& [k, c] : P.terms()) {
            if (wdeg(k) == best) out.op.add_term(k, c);
        }
    }
    return out;
}

MPoly symbol(const WeylOp& P) {
    GrElement g = init_w(P, WeightVector::order_filtration(P.m()));
    return g.sym;
}

TruncSeries apply_to_series(const WeylOp& P, const TruncSeries& f) {
    if (P.mode() != CoeffMode::Poly)
        throw StructuralError("apply_to_series: polynomial mode required (clear denominators first)");
    if (P.m() != f.m()) throw StructuralError("apply_to_series: dimension mismatch");
    int m = P.m();
    TruncSeries out(m, f.truncation(), f.param_vars());
    if (P.is_zero()) {
        out.set_trusted_degree(f.trusted_degree());
        return out;
    }
    long gap = 0;
    for (const auto& [k, c] : P.terms())
        gap = std::max(gap, expvec_total(k.beta) - expvec_total(k.alpha));
    long trusted = std::max<long>(-1, f.trusted_degree() - gap);
    out.set_trusted_degree(static_cast<int>(std::min<long>(trusted, f.truncation())));
    for (const auto& [k, c] : P.terms()) {
        RatFun cc = c.with_vars(f.param_vars());
        for (const auto& [g, fc] : f.coeffs()) {
            Rational factor(1);
            bool ok = true;
            ExpVec ne(static_cast<size_t>(m), 0);
            for (int i = 0; i < m; ++i) {
                int gi = g[static_cast<size_t>(i)];
                int bi = k.beta[static_cast<size_t>(i)];
                if (gi < bi) {
                    ok = false;
                    break;
                }
                factor *= falling(gi, bi);
                ne[static_cast<size_t>(i)] = gi - bi + k.alpha[static_cast<size_t>(i)];
            }
            if (!ok || factor.is_zero()) continue;
            out.add_coeff(ne, fc * cc * RatFun::constant(f.param_vars(), factor));
        }
    }
    return out;
}

WeylOp shift_op(const WeylOp& P, const std::vector<Rational>& p) {
    if (P.mode() != CoeffMode::Poly) throw StructuralError("shift_op: polynomial mode required");
    int m = P.m();
    if (static_cast<int>(p.size()) != m) throw StructuralError("shift_op: point dimension mismatch");
    WeylOp out(m, CoeffMode::Poly);
    for (const auto& [k, c] : P.terms()) {
        // Expand prod_i (x_i + p_i)^{alpha_i}.
        std::vector<std::pair<ExpVec, Rational>> acc{{ExpVec(static_cast<size_t>(m), 0), Rational(1)}};
        for (int i = 0; i < m; ++i) {
            int ai = k.alpha[static_cast<size_t>(i)];
            if (ai == 0) continue;
            std::vector<std::pair<ExpVec, Rational>> next;
            for (int d = 0; d <= ai; ++d) {
                Rational f = Rational(binomial(ai, d)) * p[static_cast<size_t>(i)].pow(ai - d);
                if (f.is_zero()) continue;
                for (const auto& [e, cc] : acc) {
                    ExpVec ne = e;
                    ne[static_cast<size_t>(i)] = d;
                    next.emplace_back(std::move(ne), cc * f);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [e, cc] : acc) {
            out.add_term(OpTermKey{e, k.beta}, c * RatFun::constant(P.coeff_vars(), cc));
        }
    }
    return out;
}

std::optional<MPoly> theta_form(const WeylOp& P) {
    if (P.mode() != CoeffMode::Poly) throw StructuralError("theta_form: polynomial mode required");
    int m = P.m();
    VarSetPtr tv = VarSet::theta_params(m);
    for (const auto& [k, c] : P.terms()) {
        if (k.alpha != k.beta) return std::nullopt;
    }
    MPoly out(tv);
    for (const auto& [k, c] : P.terms()) {
        // x^beta d^beta = prod_i theta_i (theta_i - 1) ... (theta_i - beta_i + 1).
        MPoly prod = MPoly::constant(tv, Rational(1));
        for (int i = 0; i < m; ++i) {
            for (int t = 0; t < k.beta[static_cast<size_t>(i)]; ++t) {
                prod *= MPoly::var(tv, i) - MPoly::constant(tv, Rational(t));
            }
        }
        out += prod * c.num().with_vars(tv);
    }
    return out;
}

WeylOp theta_expand(const MPoly& theta_poly, int m) {
    VarSetPtr tv = theta_poly.vars();
    WeylOp out(m, CoeffMode::Poly);
    std::vector<std::vector<WeylOp>> pows(static_cast<size_t>(m));
    auto theta_pow = [&](int i, int e) {
        auto& cache = pows[static_cast<size_t>(i)];
        if (cache.empty()) cache.push_back(WeylOp::constant(m, CoeffMode::Poly, Rational(1)));
        WeylOp theta = weyl_mul(WeylOp::x(m, CoeffMode::Poly, i), WeylOp::d(m, CoeffMode::Poly, i));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(weyl_mul(cache.back(), theta));
        return cache[static_cast<size_t>(e)];
    };
    for (const auto& [e, c] : theta_poly.terms()) {
        WeylOp term = WeylOp::constant(m, CoeffMode::Poly, c);
        for (int i = 0; i < m; ++i) {
            int ei = e[static_cast<size_t>(i)];
            if (ei > 0) term = weyl_mul(term, theta_pow(i, ei));
        }
        // Parameter exponents follow the theta block.
        for (int j = m; j < tv->size(); ++j) {
            int ej = e[static_cast<size_t>(j)];
            if (ej > 0)
                term = weyl_mul(term, WeylOp::param(m, CoeffMode::Poly, tv->name(j)).pow(ej));
        }
        out += term;
    }
    return out;
}

WeylOp linear_change_of_vars(const WeylOp& P, const std::vector<std::vector<Rational>>& A) {
    if (P.mode() != CoeffMode::Poly) throw StructuralError("change of variables: polynomial mode required");
    int m = P.m();
    if (static_cast<int>(A.size()) != m) throw StructuralError("change of variables: matrix size");
    // Invert A over the rationals.
    Matrix<Rational> inv(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(m)));
    {
        Matrix<Rational> aug(static_cast<size_t>(m),
                             std::vector<Rational>(static_cast<size_t>(2 * m), Rational(0)));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) aug[static_cast<size_t>(i)][static_cast<size_t>(j)] = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            aug[static_cast<size_t>(i)][static_cast<size_t>(m + i)] = Rational(1);
        }
        std::vector<int> pivots;
        rref_in_place(aug, pivots);
        for (int i = 0; i < m; ++i) {
            if (static_cast<size_t>(i) >= pivots.size() || pivots[static_cast<size_t>(i)] != i)
                throw StructuralError("change of variables: singular matrix");
            for (int j = 0; j < m; ++j)
                inv[static_cast<size_t>(i)][static_cast<size_t>(j)] = aug[static_cast<size_t>(i)][static_cast<size_t>(m + j)];
        }
    }
    // Images x_i -> sum_j A[i][j] y_j and d_i -> sum_j inv[j][i] d_{y_j}.
    std::vector<WeylOp> ximg, dimg;
    for (int i = 0; i < m; ++i) {
        WeylOp xi(m, CoeffMode::Poly), di(m, CoeffMode::Poly);
        for (int j = 0; j < m; ++j) {
            xi += WeylOp::x(m, CoeffMode::Poly, j) * A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            di += WeylOp::d(m, CoeffMode::Poly, j) * inv[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        ximg.push_back(std::move(xi));
        dimg.push_back(std::move(di));
    }
    WeylOp out(m, CoeffMode::Poly);
    for (const auto& [k, c] : P.terms()) {
        WeylOp term(m, CoeffMode::Poly);
        ExpVec zero(static_cast<size_t>(m), 0);
        term.add_term(OpTermKey{zero, zero}, c);
        for (int i = 0; i < m; ++i) {
            for (int t = 0; t < k.alpha[static_cast<size_t>(i)]; ++t) term = weyl_mul(term, ximg[static_cast<size_t>(i)]);
        }
        for (int i = 0; i < m; ++i) {
            for (int t = 0; t < k.beta[static_cast<size_t>(i)]; ++t) term = weyl_mul(term, dimg[static_cast<size_t>(i)]);
        }
        out += term;
    }
    return out;
}

RestrictedOp::RestrictedOp(int ambient_m) : m_(ambient_m) {
    if (ambient_m < 2) throw StructuralError("RestrictedOp: need ambient m >= 2");
}

WeylOp RestrictedOp::component(int dm_power) const {
    auto it = comps_.find(dm_power);
    if (it != comps_.end()) return it->second;
    return WeylOp(m_ - 1, CoeffMode::Rational);
}

void RestrictedOp::add_component(int dm_power, const WeylOp& op) {
    if (op.m() != m_ - 1 || op.mode() != CoeffMode::Rational)
        throw StructuralError("RestrictedOp: components are rational-mode operators on m-1 variables");
    if (op.is_zero()) return;
    auto it = comps_.find(dm_power);
    if (it == comps_.end()) {
        comps_.emplace(dm_power, op);
    } else {
        it->second += op;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

RestrictedOp RestrictedOp::operator-() const {
    RestrictedOp r(m_);
    for (const auto& [i, op] : comps_) r.comps_.emplace(i, -op);
    return r;
}

RestrictedOp& RestrictedOp::operator+=(const RestrictedOp& o) {
    if (o.m_ != m_) throw StructuralError("RestrictedOp add: dimension mismatch");
    for (const auto& [i, op] : o.comps_) add_component(i, op);
    return *this;
}

RestrictedOp& RestrictedOp::operator-=(const RestrictedOp& o) {
    if (o.m_ != m_) throw StructuralError("RestrictedOp sub: dimension mismatch");
    for (const auto& [i, op] : o.comps_) add_component(i, -op);
    return *this;
}

RestrictedOp RestrictedOp::scaled(const RatFun& f) const {
    RestrictedOp r(m_);
    for (const auto& [i, op] : comps_) r.add_component(i, op.left_mul_fun(f));
    return r;
}

RestrictedOp RestrictedOp::left_mul(const WeylOp& q, const RestrictedOp& r) {
    RestrictedOp out(r.m_);
    for (const auto& [i, op] : r.comps_) out.add_component(i, weyl_mul(q, op));
    return out;
}

RestrictedOp::PotInitial RestrictedOp::pot_initial() const {
    if (comps_.empty()) throw DomainError("pot_initial of the zero element");
    const auto& [power, op] = *comps_.rbegin();
    auto [beta, coeff] = op.lead_d();
    PotInitial init;
    init.dm_power = power;
    init.beta = beta;
    init.coeff = coeff;
    return init;
}

bool RestrictedOp::operator==(const RestrictedOp& o) const {
    return m_ == o.m_ && comps_ == o.comps_;
}

std::string RestrictedOp::str() const {
    if (comps_.empty()) return "0";
    std::string s;
    for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.str() + ")";
        if (it->first > 0) {
            s += "*dm";
            if (it->first != 1) s += "^" + std::to_string(it->first);
        }
    }
    return s;
}

RestrictedOp restrict_xm0(const WeylOp& P) {
    int m = P.m();
    if (m < 2) throw StructuralError("restrict_xm0: need m >= 2");
    WeylOp R = P.to_rational();
    int xm = m - 1;  // index of x_m in the coefficient variables
    RestrictedOp out(m);
    VarSetPtr inner = VarSet::x_params(m - 1);
    ExpVec zero(static_cast<size_t>(m - 1), 0);
    for (const auto& [k, c] : R.terms()) {
        Valuation v = valuation_at(c, xm);
        if (!v.infinite && v.value < 0)
            throw DomainError("restrict_xm0: coefficient has a pole along x_m = 0: " + c.str());
        RatFun c0 = c.subst(xm, Rational(0));
        if (c0.is_zero()) continue;
        ExpVec nb(k.beta.begin(), k.beta.end() - 1);
        WeylOp piece(m - 1, CoeffMode::Rational);
        piece.add_term(OpTermKey{zero, nb}, c0.with_vars(inner));
        out.add_component(k.beta[static_cast<size_t>(m - 1)], piece);
    }
    return out;
}

}  // namespace mhlab
