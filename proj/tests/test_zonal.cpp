#include "doctest.h"

#include <algorithm>
#include <set>

#include "mhlab/opparse.hpp"
#include "mhlab/zonal.hpp"

using namespace mhlab;

namespace {

MPoly P(const std::string& s, const VarSetPtr& v) { return parse_mpoly(s, v); }

}  // namespace

TEST_CASE("monomial symmetric polynomials") {
    auto v2 = VarSet::x_only(2);
    CHECK(monomial_symmetric(IntPartition({1, 0}), v2) == P("x1+x2", v2));
    CHECK(monomial_symmetric(IntPartition({1, 1}), v2) == P("x1*x2", v2));

    // Orbit enumeration oracle: exponent vectors that are permutations of
    // (2,1,0), generated exhaustively.
    auto v3 = VarSet::x_only(3);
    MPoly m21 = monomial_symmetric(IntPartition({2, 1, 0}), v3);
    CHECK(m21.terms().size() == 6);
    std::multiset<std::vector<int>> expect;
    std::vector<int> base{2, 1, 0};
    std::sort(base.begin(), base.end());
    do {
        expect.insert(base);
    } while (std::next_permutation(base.begin(), base.end()));
    CHECK(expect.size() == 6);
    for (const auto& [e, c] : m21.terms()) {
        CHECK(c == Rational(1));
        CHECK(expect.count(e) == 1);
    }
}

TEST_CASE("zonal eigenvalues by direct formula substitution") {
    // rho = sum_i lambda_i (lambda_i - i), alpha = rho + d (m - 1)
    auto z20 = zonal_eigen(IntPartition({2, 0}), 2);
    CHECK(z20.rho == 2 * (2 - 1) + 0 * (0 - 2));
    CHECK(z20.rho == 2);
    CHECK(z20.alpha == 4);
    auto z11 = zonal_eigen(IntPartition({1, 1}), 2);
    CHECK(z11.rho == 1 * (1 - 1) + 1 * (1 - 2));
    CHECK(z11.rho == -1);
    CHECK(z11.alpha == 1);
    auto z0 = zonal_eigen(IntPartition({0, 0, 0}), 3);
    CHECK(z0.rho == 0);
    CHECK(z0.alpha == 0);
}

TEST_CASE("zonal polynomials of weight 1 and 2") {
    auto v2 = VarSet::x_only(2);
    CHECK(zonal_poly(IntPartition({1, 0}), 2).expand(v2) == P("x1+x2", v2));

    // Run the recursion by hand for d=2, m=2: the kappa step moves one unit
    // up from mu=(1,1) to kappa=(2,0) with factor (2-0)/(rho_20 - rho_11)=2/3,
    // and the anchoring makes the family sum to (x1+x2)^2.
    MPoly c20 = zonal_poly(IntPartition({2, 0}), 2).expand(v2);
    MPoly c11 = zonal_poly(IntPartition({1, 1}), 2).expand(v2);
    CHECK(c20 == P("x1^2+x2^2+2/3*x1*x2", v2));
    CHECK(c11 == P("4/3*x1*x2", v2));
    CHECK(c20 + c11 == P("(x1+x2)^2", v2));
}

TEST_CASE("apply_delta") {
    auto v2 = VarSet::x_only(2);
    CHECK(apply_delta(P("x1+x2", v2), 2) == P("x1+x2", v2));
    CHECK(apply_delta(P("1", v2), 2).is_zero());
    MPoly c20 = zonal_poly(IntPartition({2, 0}), 2).expand(v2);
    CHECK(apply_delta(c20, 2) == c20 * Rational(4));
    CHECK_THROWS_AS(apply_delta(P("x1", v2), 2), DomainError);
}

TEST_CASE("zonal coefficients are rational and families are symmetric-homogeneous") {
    for (int m = 2; m <= 3; ++m) {
        auto xv = VarSet::x_only(m);
        for (int d = 1; d <= 4; ++d) {
            for (const auto& [lam, sp] : zonal_family(d, m)) {
                MPoly c = sp.expand(xv);
                CHECK(is_symmetric(c, m));
                CHECK(c.total_degree() == d);
                for (const auto& [e, coefficient] : c.terms()) {
                    CHECK(expvec_total(e) == d);
                }
            }
        }
    }
}

TEST_CASE("zonal axioms hold for small d, m") {
    auto rep22 = verify_zonal_axioms(2, 2);
    CHECK(rep22.all_ok());
    auto rep13 = verify_zonal_axioms(1, 3);
    CHECK(rep13.all_ok());
    auto rep43 = verify_zonal_axioms(4, 3);
    CHECK(rep43.all_ok());
}
