#include "doctest.h"

#include "mhlab/opparse.hpp"
#include "mhlab/series.hpp"
#include "mhlab/zonal.hpp"

using namespace mhlab;

TEST_CASE("classical reduction for m=1: coefficients are (a)_n / ((c)_n n!)") {
    auto s = truncated_pfq(SeriesParams::one_f_one(), 1, 12);
    auto pv = s.param_vars();
    RatFun a = RatFun::var(pv, "a");
    RatFun c = RatFun::var(pv, "c");
    for (int n = 0; n <= 12; ++n) {
        RatFun expect = pochhammer(a, n) / pochhammer(c, n) /
                        RatFun::constant(pv, Rational(factorial(n)));
        CHECK(s.coeff(ExpVec{n}) == expect);
    }
}

TEST_CASE("degree-0 coefficient is 1 for any m") {
    for (int m = 1; m <= 3; ++m) {
        auto s = truncated_pfq(SeriesParams::one_f_one(), m, 2);
        CHECK(s.coeff(ExpVec(static_cast<size_t>(m), 0)).is_one());
    }
}

TEST_CASE("m=2 coefficient of x1*x2 from the Pochhammer and zonal oracles") {
    auto s = truncated_pfq(SeriesParams::one_f_one(), 2, 2);
    auto pv = s.param_vars();
    RatFun a = RatFun::var(pv, "a");
    RatFun c = RatFun::var(pv, "c");
    Rational half(1, 2);
    // Contributions: lambda = (1,1) with C_(1,1) = 4/3 x1x2 and lambda = (2,0)
    // with C_(2,0) containing 2/3 x1x2, both divided by 2!.
    RatFun expect = gen_pochhammer(a, IntPartition({1, 1})) / gen_pochhammer(c, IntPartition({1, 1})) *
                        RatFun::constant(pv, Rational(4, 3) * half) +
                    gen_pochhammer(a, IntPartition({2, 0})) / gen_pochhammer(c, IntPartition({2, 0})) *
                        RatFun::constant(pv, Rational(2, 3) * half);
    CHECK(s.coeff(ExpVec{1, 1}) == expect);
}

TEST_CASE("evaluation") {
    auto s = truncated_pfq(SeriesParams::one_f_one(), 2, 4);
    std::map<std::string, Rational> spec{{"a", Rational(1, 3)}, {"c", Rational(5, 7)}};
    CHECK(s.evaluate({Rational(0), Rational(0)}, spec) == Rational(1));
    // symmetric point invariance
    CHECK(s.evaluate({Rational(1, 2), Rational(1, 4)}, spec) ==
          s.evaluate({Rational(1, 4), Rational(1, 2)}, spec));
}

TEST_CASE("1F1(a;a) partial sums are the exponential series for m=1") {
    auto s = truncated_pfq(SeriesParams::one_f_one(Rational(2, 5), Rational(2, 5)), 1, 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(s.coeff(ExpVec{n}).constant_value() == Rational(Int(1), factorial(n)));
    }
}

TEST_CASE("symmetry check") {
    for (int m = 2; m <= 3; ++m) {
        auto s = truncated_pfq(SeriesParams::one_f_one(), m, 5);
        CHECK(series_symmetrize_check(s));
    }
    // a deliberately asymmetric series
    TruncSeries t(2, 3, VarSet::params());
    t.set_coeff(ExpVec{1, 0}, RatFun::constant(VarSet::params(), Rational(1)));
    CHECK(!series_symmetrize_check(t));
    // constants are symmetric
    TruncSeries u(2, 3, VarSet::params());
    u.set_coeff(ExpVec{0, 0}, RatFun::constant(VarSet::params(), Rational(7)));
    CHECK(series_symmetrize_check(u));
}

TEST_CASE("increasing N never changes previously computed coefficients") {
    auto s4 = truncated_pfq(SeriesParams::one_f_one(), 2, 4);
    auto s6 = truncated_pfq(SeriesParams::one_f_one(), 2, 6);
    CHECK(s4.equal_through(s6, 4));
}

TEST_CASE("excluded lower parameters raise parameter errors") {
    // m = 1: c in -N.
    CHECK_THROWS_AS(truncated_pfq(SeriesParams::one_f_one(Rational(1, 3), Rational(-2)), 1, 2),
                    ParameterError);
    // m = 2: c = 1/2 lies in { k/2 : k <= m-1 }.
    CHECK_THROWS_AS(truncated_pfq(SeriesParams::one_f_one(Rational(1, 3), Rational(1, 2)), 2, 2),
                    ParameterError);
    // but c = 3/2 is fine for m = 2
    CHECK_NOTHROW(truncated_pfq(SeriesParams::one_f_one(Rational(1, 3), Rational(3, 2)), 2, 2));
}
