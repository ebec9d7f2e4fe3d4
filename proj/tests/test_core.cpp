#include "doctest.h"

#include <random>

#include "mhlab/linalg.hpp"
#include "mhlab/mpoly.hpp"
#include "mhlab/opparse.hpp"
#include "mhlab/ratfun.hpp"

using namespace mhlab;

namespace {

VarSetPtr xy2() { return VarSet::x_only(2); }

MPoly P(const std::string& s, const VarSetPtr& v) { return parse_mpoly(s, v); }

// Deterministic random polynomial over the given variables.
MPoly random_poly(std::mt19937& rng, const VarSetPtr& vars, int max_deg, int terms) {
    MPoly p(vars);
    std::uniform_int_distribution<int> dc(-4, 4);
    std::uniform_int_distribution<int> de(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(static_cast<size_t>(vars->size()), 0);
        int budget = max_deg;
        for (size_t i = 0; i < e.size(); ++i) {
            int x = de(rng) % (budget + 1);
            e[i] = x;
            budget -= x;
        }
        p.add_term(e, Rational(dc(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7").str() == "7");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(3, 2).pow(-2) == Rational(4, 9));
    CHECK_THROWS_AS(Rational::parse("1/0"), ArithmeticError);
    CHECK(Rational(5, 8).two_adic_valuation() == -3);
    CHECK(Rational(12).two_adic_valuation() == 2);
}

TEST_CASE("poly arithmetic identities") {
    auto v = xy2();
    // (x1+x2)*(x1-x2) = x1^2 - x2^2
    CHECK(P("x1+x2", v) * P("x1-x2", v) == P("x1^2-x2^2", v));
    // p * 0 = 0
    CHECK((P("x1^3+2*x2", v) * MPoly(v)).is_zero());
    // (x1+x2)^2 = x1^2+2x1x2+x2^2
    CHECK(P("x1+x2", v).pow(2) == P("x1^2+2*x1*x2+x2^2", v));
}

TEST_CASE("poly canonical text") {
    auto v = xy2();
    CHECK(P("x1^2*x2 - 1/2*x2", v).str() == "x1^2*x2 - 1/2*x2");
    CHECK(MPoly(v).str() == "0");
}

TEST_CASE("variable-set mismatch is a structural error") {
    auto v2 = VarSet::x_only(2);
    auto v3 = VarSet::x_only(3);
    MPoly p = P("x1", v2);
    MPoly q(v3);
    CHECK_THROWS_AS(p + q, StructuralError);
}

TEST_CASE("poly gcd") {
    auto v = xy2();
    CHECK(poly_gcd(P("x1^2-x2^2", v), P("x1-x2", v)) == P("x1-x2", v));
    CHECK(poly_gcd(P("x1^2+x1", v), P("1", v)) == P("1", v));
    // gcd(0, 0) = 0, gcd(p, 0) = monic(p)
    CHECK(poly_gcd(MPoly(v), MPoly(v)).is_zero());
    CHECK(poly_gcd(P("2*x1+2*x2", v), MPoly(v)) == P("x1+x2", v));
    // up to unit normalization
    CHECK(poly_gcd(P("2*x1", v), P("4*x1^2", v)) == P("x1", v));
}

TEST_CASE("poly gcd divisibility oracle on random products") {
    auto v = VarSet::x_only(3);
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 12; ++iter) {
        MPoly a = random_poly(rng, v, 2, 3);
        MPoly b = random_poly(rng, v, 2, 3);
        MPoly g0 = random_poly(rng, v, 2, 2);
        if (a.is_zero() || b.is_zero() || g0.is_zero()) continue;
        MPoly p = a * g0;
        MPoly q = b * g0;
        MPoly g = poly_gcd(p, q);
        // The computed gcd divides both arguments and is divisible by g0.
        CHECK(p.try_divide(g));
        CHECK(q.try_divide(g));
        CHECK(g.try_divide(poly_gcd(g0, g)));
    }
}

TEST_CASE("ratfun normalization is canonical") {
    auto v = xy2();
    RatFun r(P("x1^2-x2^2", v), P("x1-x2", v));
    CHECK(r.is_polynomial());
    CHECK(r.num() == P("x1+x2", v));
    // (x1/x2)*(x2/x1) = 1
    RatFun a(P("x1", v), P("x2", v));
    RatFun b(P("x2", v), P("x1", v));
    CHECK((a * b).is_one());
    // 1/(x1-x2) + 1/(x2-x1) = 0
    RatFun c(P("1", v), P("x1-x2", v));
    RatFun d(P("1", v), P("x2-x1", v));
    CHECK((c + d).is_zero());
    // the same value along two different arithmetic paths compares equal
    RatFun e1 = a + RatFun::constant(v, Rational(1));  // x1/x2 + 1
    RatFun e2(P("x1^2-x2^2", v), P("x2*x1-x2^2", v));  // (x1^2-x2^2)/(x2(x1-x2))
    CHECK(e1 == e2);
}

TEST_CASE("x_l/(x_k-x_l) + 1 = x_k/(x_k-x_l)") {
    auto v = xy2();
    RatFun lhs(P("x2", v), P("x1-x2", v));
    lhs += RatFun::constant(v, Rational(1));
    CHECK(lhs == RatFun(P("x1", v), P("x1-x2", v)));
}

TEST_CASE("ratfun division by zero") {
    auto v = xy2();
    RatFun z = RatFun::constant(v, Rational(0));
    RatFun p(P("x1", v));
    CHECK_THROWS_AS(p / z, ArithmeticError);
}

TEST_CASE("valuation") {
    auto v = xy2();
    RatFun p(P("x1^2*x2+x1^2", v));
    CHECK(valuation_at(p, "x1") == Valuation::of(2));
    RatFun q(P("1", v), P("x1", v));
    CHECK(valuation_at(q, "x1") == Valuation::of(-1));
    CHECK(valuation_at(RatFun::constant(v, Rational(0)), "x1").infinite);
}

TEST_CASE("valuation is additive on random samples") {
    auto v = xy2();
    std::mt19937 rng(99);
    for (int iter = 0; iter < 10; ++iter) {
        MPoly a = random_poly(rng, v, 3, 3);
        MPoly b = random_poly(rng, v, 3, 3);
        if (a.is_zero() || b.is_zero()) continue;
        RatFun ra(a), rb(b);
        RatFun prod = ra * rb;
        auto va = valuation_at(ra, 0), vb = valuation_at(rb, 0);
        CHECK(valuation_at(prod, 0) == Valuation::of(va.value + vb.value));
        RatFun sum = ra + rb;
        if (!sum.is_zero()) {
            CHECK(valuation_at(sum, 0).value >= std::min(va.value, vb.value));
        }
    }
}

TEST_CASE("solve_linear identity and kernel") {
    Rational one(1);
    Matrix<Rational> id = {{1, 0}, {0, 1}};
    auto sol = solve_linear<Rational>(id, {Rational(1), Rational(0)}, one);
    CHECK(sol.consistent);
    CHECK(sol.particular == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(sol.kernel.empty());

    Matrix<Rational> wide = {{1, 1}};
    auto k = solve_linear<Rational>(wide, {Rational(0)}, one);
    CHECK(k.kernel.size() == 1);
}

TEST_CASE("solve_linear multiply-back oracle on random invertible 4x4") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> dc(-5, 5);
    Rational one(1);
    int done = 0;
    while (done < 4) {
        Matrix<Rational> a(4, std::vector<Rational>(4));
        for (auto& row : a)
            for (auto& e : row) e = Rational(dc(rng));
        if (matrix_rank(a) != 4) continue;
        std::vector<Rational> b(4);
        for (auto& e : b) e = Rational(dc(rng));
        auto sol = solve_linear<Rational>(a, b, one);
        REQUIRE(sol.consistent);
        CHECK(sol.kernel.empty());
        for (int i = 0; i < 4; ++i) {
            Rational acc(0);
            for (int j = 0; j < 4; ++j) acc += a[i][j] * sol.particular[static_cast<size_t>(j)];
            CHECK(acc == b[static_cast<size_t>(i)]);
        }
        ++done;
    }
}

TEST_CASE("solve_linear over rational functions") {
    auto v = xy2();
    RatFun one = RatFun::constant(v, Rational(1));
    RatFun x1 = RatFun(P("x1", v));
    RatFun x2 = RatFun(P("x2", v));
    Matrix<RatFun> a = {{x1, x2}, {x2, x1}};
    std::vector<RatFun> b = {one, one};
    auto sol = solve_linear<RatFun>(a, b, one);
    REQUIRE(sol.consistent);
    // x = (1/(x1+x2), 1/(x1+x2))
    RatFun expect(P("1", v), P("x1+x2", v));
    CHECK(sol.particular[0] == expect);
    CHECK(sol.particular[1] == expect);
}
