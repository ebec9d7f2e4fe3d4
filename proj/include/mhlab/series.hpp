#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhlab/mpoly.hpp"
#include "mhlab/partitions.hpp"
#include "mhlab/ratfun.hpp"

namespace mhlab {

// Upper and lower parameter lists of a {}_pF_q series. Entries are rational
// functions of the symbolic parameters (typically just "a" and "c"), so both
// symbolic and specialized runs share one representation.
struct SeriesParams {
    std::vector<RatFun> upper;
    std::vector<RatFun> lower;
    VarSetPtr param_vars;  // coefficient field generators, e.g. {a, c}

    static SeriesParams one_f_one();  // symbolic 1F1(a; c)
    static SeriesParams one_f_one(const Rational& a, const Rational& c);
};

// Checks the condition excluding vanishing lower-parameter Pochhammer values:
// for m = 1 the lower parameters avoid -N, for m >= 2 they avoid
// { k/2 : k integer, k <= m-1 }. Only constant (specialized) entries are
// checked. Throws ParameterError naming the violated condition.
void check_lower_params(const SeriesParams& params, int m);

// Multivariate power series truncated at total degree N. Coefficients are
// rational functions of the parameters only; trusted_degree tracks through
// which total degree the coefficients are exact.
class TruncSeries {
public:
    TruncSeries(int m, int N, VarSetPtr param_vars);

    int m() const { return m_; }
    int truncation() const { return N_; }
    int trusted_degree() const { return trusted_; }
    void set_trusted_degree(int t) { trusted_ = t; }
    const VarSetPtr& param_vars() const { return param_vars_; }

    using CoeffMap = std::map<ExpVec, RatFun, GrlexLess>;
    const CoeffMap& coeffs() const { return coeffs_; }

    RatFun coeff(const ExpVec& e) const;
    void add_coeff(const ExpVec& e, const RatFun& c);  // drops |e| > N
    void set_coeff(const ExpVec& e, const RatFun& c);

    bool is_zero_through_trusted() const;
    bool equal_through(const TruncSeries& o, int degree) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator*=(const RatFun& c);

    // Exact value of the partial sum at a rational point, with all parameters
    // specialized by name (e.g. {{"a", 1/3}, {"c", 5/7}}).
    Rational evaluate(const std::vector<Rational>& point,
                      const std::map<std::string, Rational>& spec) const;

    // Substitutes parameter values, keeping the series symbolic-typed.
    TruncSeries specialized(const std::map<std::string, Rational>& spec) const;

    std::string str(int max_terms = 0) const;

private:
    int m_;
    int N_;
    int trusted_;
    VarSetPtr param_vars_;
    CoeffMap coeffs_;
};

// Truncation of the hypergeometric series of a matrix argument: sum over
// k <= N and partitions lambda of k of
//   prod (a_i)_lambda / prod (c_j)_lambda * C_lambda(x) / k!.
TruncSeries truncated_pfq(const SeriesParams& params, int m, int N);

// True iff the coefficients are invariant under all coordinate permutations.
bool series_symmetrize_check(const TruncSeries& s);

}  // namespace mhlab
