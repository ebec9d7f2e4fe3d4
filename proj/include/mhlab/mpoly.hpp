#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhlab/rational.hpp"
#include "mhlab/varset.hpp"

namespace mhlab {

using ExpVec = std::vector<int>;

ExpVec expvec_add(const ExpVec& a, const ExpVec& b);
long expvec_total(const ExpVec& a);

// Graded lexicographic order: total degree first, ties broken by the exponent
// of the most significant (earliest) variable. Comparator is "ascending".
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Rational. Terms are kept normalized:
// no zero coefficients, exponent vectors of length = |variable set|.
class MPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexLess>;

    MPoly() = default;  // zero polynomial over the empty variable set
    explicit MPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static MPoly constant(VarSetPtr vars, const Rational& c);
    static MPoly var(const VarSetPtr& vars, const std::string& name, int exp = 1);
    static MPoly var(VarSetPtr vars, int index, int exp = 1);
    static MPoly monomial(VarSetPtr vars, ExpVec e, const Rational& c);

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    Rational constant_value() const;  // requires is_constant()

    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(int var) const;
    long min_degree_in(int var) const;  // 0 for the zero polynomial
    bool depends_on(int var) const { return degree_in(var) > 0; }

    Rational coeff(const ExpVec& e) const;
    void set_coeff(ExpVec e, const Rational& c);
    void add_term(const ExpVec& e, const Rational& c);

    std::pair<ExpVec, Rational> leading_term() const;  // grlex maximum
    Rational leading_coeff() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rational& c);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    MPoly pow(long e) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(int var) const;
    MPoly subst(int var, const MPoly& value) const;
    MPoly subst(int var, const Rational& value) const;
    Rational eval(const std::vector<Rational>& point) const;

    // Re-expresses this polynomial over a variable set containing (by name)
    // every variable this one depends on.
    MPoly with_vars(const VarSetPtr& target) const;

    // Exact division; throws ArithmeticError when not divisible.
    MPoly divexact(const MPoly& d) const;
    bool try_divide(const MPoly& d, MPoly* quotient = nullptr) const;

    MPoly monic() const;       // divide by the grlex-leading coefficient
    Rational content() const;  // nonnegative gcd of coefficients; 0 for zero

    // Coefficient of v^k viewed as a univariate polynomial in variable v;
    // the result lives over the same variable set with exponent 0 at v.
    MPoly coeff_of_power(int v, long k) const;

    std::string str() const;

private:
    VarSetPtr vars_;
    TermMap terms_;
};

std::string monomial_str(const VarSet& vars, const ExpVec& e);
std::ostream& operator<<(std::ostream& os, const MPoly& p);

// A greatest common divisor, monic-normalized under the global grlex order.
// gcd(0,0) = 0, gcd(p,0) = monic(p).
MPoly poly_gcd(const MPoly& p, const MPoly& q);

}  // namespace mhlab
