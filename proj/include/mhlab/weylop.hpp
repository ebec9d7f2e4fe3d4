#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhlab/ratfun.hpp"
#include "mhlab/series.hpp"

namespace mhlab {

// Coefficient mode of an operator: polynomial coefficients (the Weyl algebra
// D_m, x-dependence carried by explicit x^alpha factors) or rational-function
// coefficients (R_m, all x-dependence absorbed into the coefficient).
enum class CoeffMode { Poly, Rational };

struct OpTermKey {
    ExpVec alpha;  // x-exponents; all zero in rational mode
    ExpVec beta;   // d-exponents

    bool operator<(const OpTermKey& o) const {
        GrlexLess less;
        if (beta != o.beta) return less(beta, o.beta);
        return less(alpha, o.alpha);
    }
    bool operator==(const OpTermKey& o) const { return alpha == o.alpha && beta == o.beta; }
};

// Normally ordered differential operator: a finite sum of
// coeff * x^alpha * d^beta with all x on the left of all d. Coefficients are
// rational functions over {x1..xm, a, c}; in Poly mode they are x-free
// polynomials (in a, c only) and all x-content lives in alpha.
class WeylOp {
public:
    using TermMap = std::map<OpTermKey, RatFun>;

    WeylOp(int m, CoeffMode mode);

    static WeylOp constant(int m, CoeffMode mode, const Rational& c);
    static WeylOp x(int m, CoeffMode mode, int i, int exp = 1);   // 0-based i
    static WeylOp d(int m, CoeffMode mode, int i, int exp = 1);   // 0-based i
    static WeylOp param(int m, CoeffMode mode, const std::string& name);
    static WeylOp from_fun(const RatFun& f, int m);  // rational mode
    static WeylOp term(int m, CoeffMode mode, ExpVec alpha, ExpVec beta, RatFun coeff);

    int m() const { return m_; }
    CoeffMode mode() const { return mode_; }
    const VarSetPtr& coeff_vars() const { return cvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    long order() const;  // max |beta|, -1 for zero

    RatFun coeff_of(const ExpVec& alpha, const ExpVec& beta) const;
    void add_term(const OpTermKey& key, const RatFun& coeff);

    WeylOp operator-() const;
    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }

    WeylOp& operator*=(const Rational& c);
    friend WeylOp operator*(WeylOp a, const Rational& c) { return a *= c; }
    friend WeylOp operator*(const Rational& c, WeylOp a) { return a *= c; }

    // Left multiplication by a function of x and the parameters.
    WeylOp left_mul_fun(const RatFun& f) const;

    WeylOp pow(long e) const;  // via repeated weyl_mul

    WeylOp to_rational() const;
    bool poly_convertible() const;  // all coefficient denominators trivial
    WeylOp to_poly() const;         // throws DomainError when not convertible

    WeylOp subst_param(const std::string& name, const Rational& value) const;

    // Leading d-monomial under grlex with d1 > d2 > ... > dm (rational mode).
    std::pair<ExpVec, RatFun> lead_d() const;

    bool operator==(const WeylOp& o) const;
    bool operator!=(const WeylOp& o) const { return !(*this == o); }

    std::string str() const;

private:
    int m_;
    CoeffMode mode_;
    VarSetPtr cvars_;  // x_params(m)
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const WeylOp& op);

// Normally ordered product, via the per-variable exchange
// d^i x^j = sum_k C(i,k) * j!/(j-k)! * x^(j-k) d^(i-k).
WeylOp weyl_mul(const WeylOp& P, const WeylOp& Q);

// Weight vector w = (u, v) with u + v >= 0 componentwise.
struct WeightVector {
    std::vector<Rational> u;
    std::vector<Rational> v;

    static WeightVector order_filtration(int m);  // (0, e)
    static WeightVector make(std::vector<Rational> u, std::vector<Rational> v);
    bool all_positive_sum() const;  // u_i + v_i > 0 for all i
};

// Initial form: either a commutative polynomial in {x, xi, a, c} (when
// u + v > 0) or a Weyl operator (when some u_i + v_i = 0).
struct GrElement {
    bool commutative = false;
    MPoly sym;   // valid when commutative; over x_xi_params(m)
    WeylOp op;   // valid otherwise (poly mode)

    GrElement() : op(1, CoeffMode::Poly) {}
};

GrElement init_w(const WeylOp& P, const WeightVector& w);

// Principal symbol init_{(0,e)}, in C[x][xi] (with a, c as free parameters).
MPoly symbol(const WeylOp& P);

// Exact termwise action on a truncated series; poly mode only. The output
// trusted degree drops by the worst term order gap max(|beta| - |alpha|).
TruncSeries apply_to_series(const WeylOp& P, const TruncSeries& f);

// Substitutes x -> x + p; poly mode.
WeylOp shift_op(const WeylOp& P, const std::vector<Rational>& p);

// Writes P as a polynomial in theta_i = x_i d_i if possible. The result lives
// over {theta1..thetam, a, c}.
std::optional<MPoly> theta_form(const WeylOp& P);
WeylOp theta_expand(const MPoly& theta_poly, int m);

// Substitutes x = A y (A invertible, rational) and rewrites in the new frame.
WeylOp linear_change_of_vars(const WeylOp& P, const std::vector<std::vector<Rational>>& A);

// Image of an operator in the quotient by x_m: a finite sum over powers of
// d_m with coefficients in the rational Weyl algebra on x_1..x_{m-1}.
class RestrictedOp {
public:
    explicit RestrictedOp(int ambient_m);

    int ambient_m() const { return m_; }
    int inner_m() const { return m_ - 1; }
    const std::map<int, WeylOp>& components() const { return comps_; }
    WeylOp component(int dm_power) const;
    void add_component(int dm_power, const WeylOp& op);

    bool is_zero() const { return comps_.empty(); }

    RestrictedOp operator-() const;
    RestrictedOp& operator+=(const RestrictedOp& o);
    RestrictedOp& operator-=(const RestrictedOp& o);
    friend RestrictedOp operator+(RestrictedOp a, const RestrictedOp& b) { return a += b; }
    friend RestrictedOp operator-(RestrictedOp a, const RestrictedOp& b) { return a -= b; }
    RestrictedOp scaled(const RatFun& f) const;  // coefficientwise

    // Left action of a rational-mode operator on x_1..x_{m-1}: applied to each
    // component, the d_m powers being the module basis.
    static RestrictedOp left_mul(const WeylOp& q, const RestrictedOp& r);

    struct PotInitial {
        int dm_power = 0;
        ExpVec beta;   // d-exponents on x_1..x_{m-1}
        RatFun coeff;
    };
    // Largest basis monomial under the POT order: d_m-power first, then grlex
    // on the remaining d-exponents.
    PotInitial pot_initial() const;

    bool operator==(const RestrictedOp& o) const;

    std::string str() const;

private:
    int m_;
    std::map<int, WeylOp> comps_;
};

RestrictedOp restrict_xm0(const WeylOp& P);

}  // namespace mhlab
