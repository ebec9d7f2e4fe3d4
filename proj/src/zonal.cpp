#include "mhlab/zonal.hpp"

#include <algorithm>
#include <mutex>

namespace mhlab {

Rational SymmetricPoly::coeff(const IntPartition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymmetricPoly::set_coeff(const IntPartition& mu, const Rational& c) {
    if (mu.weight() != degree_ || mu.length() != m_)
        throw StructuralError("SymmetricPoly: partition weight/length mismatch");
    if (c.is_zero())
        coeffs_.erase(mu);
    else
        coeffs_[mu] = c;
}

SymmetricPoly& SymmetricPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [mu, v] : coeffs_) v *= c;
    return *this;
}

MPoly SymmetricPoly::expand(const VarSetPtr& xvars) const {
    MPoly out(xvars);
    for (const auto& [mu, c] : coeffs_) {
        MPoly mm = monomial_symmetric(mu, xvars);
        mm *= c;
        out += mm;
    }
    return out;
}

MPoly monomial_symmetric(const IntPartition& lambda, const VarSetPtr& xvars) {
    int m = lambda.length();
    if (xvars->size() < m) throw StructuralError("monomial_symmetric: variable set too small");
    std::vector<int> exps = lambda.parts;
    std::sort(exps.begin(), exps.end());  // ascending for next_permutation
    MPoly out(xvars);
    do {
        ExpVec e(static_cast<size_t>(xvars->size()), 0);
        for (int i = 0; i < m; ++i) e[static_cast<size_t>(i)] = exps[static_cast<size_t>(i)];
        out.add_term(e, Rational(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

ZonalEigen zonal_eigen(const IntPartition& lambda, int m) {
    if (lambda.length() != m) throw StructuralError("zonal_eigen: partition length != m");
    long rho = 0;
    for (int i = 1; i <= m; ++i) {
        long li = lambda.part(i - 1);
        rho += li * (li - i);
    }
    ZonalEigen ze;
    ze.rho = rho;
    ze.alpha = rho + static_cast<long>(lambda.weight()) * (m - 1);
    return ze;
}

namespace {

// Multinomial coefficient d! / prod(mu_i!) = coefficient of M_mu in (sum x)^d.
Rational orbit_multinomial(const IntPartition& mu) {
    Int num = factorial(mu.weight());
    Int den = 1;
    for (int p : mu.parts) den *= factorial(p);
    return Rational(num, den);
}

std::map<IntPartition, SymmetricPoly> compute_family(int d, int m) {
    std::vector<IntPartition> parts = enumerate_int_partitions(d, m);  // lex descending
    // Unnormalized coefficients ct[lambda][mu] with ct[lambda][lambda] = 1.
    std::map<IntPartition, std::map<IntPartition, Rational>> ct;
    for (size_t li = 0; li < parts.size(); ++li) {
        const IntPartition& lam = parts[li];
        long rho_lam = zonal_eigen(lam, m).rho;
        auto& row = ct[lam];
        row[lam] = Rational(1);
        for (size_t mi = li + 1; mi < parts.size(); ++mi) {
            const IntPartition& mu = parts[mi];
            // kappa runs over vectors obtained from mu by moving t units from a
            // lower position j to a higher position i (i < j); kappa need not be
            // ordered, and must satisfy mu < sorted(kappa) <= lam.
            Rational sum(0);
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j) {
                    for (int t = 1; t <= mu.part(j); ++t) {
                        std::vector<int> kv = mu.parts;
                        kv[static_cast<size_t>(i)] += t;
                        kv[static_cast<size_t>(j)] -= t;
                        long diff = kv[static_cast<size_t>(i)] - kv[static_cast<size_t>(j)];
                        std::vector<int> sorted = kv;
                        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
                        IntPartition kappa(sorted);
                        if (!(mu < kappa) || !(kappa <= lam)) continue;
                        auto it = row.find(kappa);
                        if (it == row.end() || it->second.is_zero()) continue;
                        sum += Rational(diff) * it->second;
                    }
                }
            }
            long rho_mu = zonal_eigen(mu, m).rho;
            if (rho_lam == rho_mu) {
                if (!sum.is_zero())
                    throw InternalError("zonal recursion: rho collision with non-vanishing sum at lambda=" +
                                        lam.str() + ", mu=" + mu.str());
                row[mu] = Rational(0);
            } else {
                row[mu] = sum / Rational(rho_lam - rho_mu);
            }
        }
    }
    // Anchor the family so that sum_lambda C_lambda = (x_1+...+x_m)^d: solve the
    // triangular system sum_{lambda >= mu} z_lambda ct[lambda][mu] = d!/prod(mu_i!).
    std::map<IntPartition, Rational> z;
    for (size_t mi = 0; mi < parts.size(); ++mi) {
        const IntPartition& mu = parts[mi];
        Rational rhs = orbit_multinomial(mu);
        for (size_t li = 0; li < mi; ++li) {
            const IntPartition& lam = parts[li];
            auto it = ct[lam].find(mu);
            if (it != ct[lam].end()) rhs -= z[lam] * it->second;
        }
        z[mu] = rhs;  // ct[mu][mu] = 1
    }
    std::map<IntPartition, SymmetricPoly> out;
    for (const auto& lam : parts) {
        SymmetricPoly sp(m, d);
        for (const auto& [mu, c] : ct[lam]) sp.set_coeff(mu, z[lam] * c);
        out.emplace(lam, std::move(sp));
    }
    return out;
}

std::mutex g_zonal_mutex;
std::map<std::pair<int, int>, std::map<IntPartition, SymmetricPoly>> g_zonal_cache;

}  // namespace

std::map<IntPartition, SymmetricPoly> zonal_family(int d, int m) {
    if (d < 0 || m < 1) throw StructuralError("zonal_family: need d >= 0, m >= 1");
    std::lock_guard<std::mutex> lock(g_zonal_mutex);
    auto key = std::make_pair(d, m);
    auto it = g_zonal_cache.find(key);
    if (it == g_zonal_cache.end()) it = g_zonal_cache.emplace(key, compute_family(d, m)).first;
    return it->second;
}

SymmetricPoly zonal_poly(const IntPartition& lambda, int m) {
    auto fam = zonal_family(lambda.weight(), m);
    auto it = fam.find(lambda);
    if (it == fam.end()) throw StructuralError("zonal_poly: invalid partition " + lambda.str());
    return it->second;
}

bool is_symmetric(const MPoly& f, int m) {
    // Invariance under the adjacent transpositions generating S_m.
    for (int i = 0; i + 1 < m; ++i) {
        MPoly g(f.vars());
        for (const auto& [e, c] : f.terms()) {
            ExpVec e2 = e;
            std::swap(e2[static_cast<size_t>(i)], e2[static_cast<size_t>(i + 1)]);
            g.add_term(e2, c);
        }
        if (g != f) return false;
    }
    return true;
}

MPoly apply_delta(const MPoly& f, int m) {
    if (!is_symmetric(f, m)) throw DomainError("apply_delta: input is not symmetric");
    const VarSetPtr& vars = f.vars();
    MPoly out(vars);
    std::vector<MPoly> df;
    df.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) df.push_back(f.derivative(i));
    for (int i = 0; i < m; ++i) {
        MPoly xi2 = MPoly::var(vars, i, 2);
        out += xi2 * df[static_cast<size_t>(i)].derivative(i);
    }
    // Pairwise: x_i^2/(x_i-x_j) d_i + x_j^2/(x_j-x_i) d_j; the numerator is
    // divisible by (x_i - x_j) whenever f is symmetric.
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            MPoly num = MPoly::var(vars, i, 2) * df[static_cast<size_t>(i)] -
                        MPoly::var(vars, j, 2) * df[static_cast<size_t>(j)];
            if (num.is_zero()) continue;
            MPoly den = MPoly::var(vars, i) - MPoly::var(vars, j);
            MPoly q;
            if (!num.try_divide(den, &q))
                throw InternalError("apply_delta: residual denominator for symmetric input");
            out += q;
        }
    }
    return out;
}

bool ZonalAxiomReport::all_ok() const {
    if (!sum_ok) return false;
    for (const auto& it : items) {
        if (!it.leading_ok || !it.eigen_ok) return false;
    }
    return true;
}

ZonalAxiomReport verify_zonal_axioms(int d, int m) {
    ZonalAxiomReport rep;
    rep.d = d;
    rep.m = m;
    auto fam = zonal_family(d, m);
    VarSetPtr xvars = VarSet::x_only(m);
    MPoly total(xvars);
    for (const auto& [lam, sp] : fam) {
        ZonalAxiomItem item;
        item.lambda = lam;
        item.eigen = zonal_eigen(lam, m);
        MPoly c = sp.expand(xvars);
        total += c;
        if (!c.is_zero()) {
            ExpVec lead = c.leading_term().first;
            std::vector<int> le(lead.begin(), lead.begin() + m);
            item.leading_ok = (le == lam.parts);
        }
        MPoly lhs = apply_delta(c, m);
        MPoly rhs = c * Rational(item.eigen.alpha);
        item.eigen_ok = (lhs == rhs);
        rep.items.push_back(std::move(item));
    }
    MPoly linear(xvars);
    for (int i = 0; i < m; ++i) linear += MPoly::var(xvars, i);
    rep.sum_ok = (total == linear.pow(d));
    return rep;
}

}  // namespace mhlab
