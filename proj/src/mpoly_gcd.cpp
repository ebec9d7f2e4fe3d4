#include "mhlab/mpoly.hpp"

namespace mhlab {

namespace {

// Pseudo-remainder of a by b in the variable v: repeatedly cancels the leading
// v-coefficient, multiplying a through by lc_v(b) as needed. The result lies
// in the ideal sense prem(a,b) = lc_v(b)^k * a - q * b with deg_v < deg_v(b).
MPoly pseudo_rem(MPoly a, const MPoly& b, int v) {
    long db = b.degree_in(v);
    MPoly lcb = b.coeff_of_power(v, db);
    while (!a.is_zero()) {
        long da = a.degree_in(v);
        if (da < db) break;
        MPoly lca = a.coeff_of_power(v, da);
        MPoly xpow = MPoly::var(a.vars(), v, static_cast<int>(da - db));
        a = a * lcb - lca * xpow * b;
    }
    return a;
}

MPoly gcd_rec(const MPoly& p, const MPoly& q);

// gcd of all v-coefficients of p (the content of p viewed in R[rest][v]).
MPoly content_in(const MPoly& p, int v) {
    MPoly g(p.vars());
    for (long k = 0; k <= p.degree_in(v); ++k) {
        MPoly c = p.coeff_of_power(v, k);
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

MPoly gcd_rec(const MPoly& p, const MPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    if (p.is_constant() || q.is_constant()) return MPoly::constant(p.vars(), Rational(1));

    // Main variable: the most significant one occurring in either argument.
    int v = -1;
    for (int i = 0; i < p.vars()->size(); ++i) {
        if (p.depends_on(i) || q.depends_on(i)) {
            v = i;
            break;
        }
    }
    if (v < 0) return MPoly::constant(p.vars(), Rational(1));
    if (!p.depends_on(v)) return gcd_rec(p, content_in(q, v));
    if (!q.depends_on(v)) return gcd_rec(q, content_in(p, v));

    MPoly cp = content_in(p, v);
    MPoly cq = content_in(q, v);
    MPoly a = p.divexact(cp);
    MPoly b = q.divexact(cq);
    MPoly cont = gcd_rec(cp, cq);

    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero()) {
        MPoly r = pseudo_rem(a, b, v);
        if (!r.is_zero()) {
            r = r.divexact(content_in(r, v));
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (a.degree_in(v) > 0) a = a.divexact(content_in(a, v));
    return cont * a;
}

}  // namespace

MPoly poly_gcd(const MPoly& p, const MPoly& q) {
    require_same_vars(p.vars(), q.vars(), "poly gcd");
    return gcd_rec(p, q).monic();
}

}  // namespace mhlab
