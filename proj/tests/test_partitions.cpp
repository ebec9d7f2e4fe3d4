#include "doctest.h"

#include <algorithm>
#include <set>

#include "mhlab/opparse.hpp"
#include "mhlab/partitions.hpp"

using namespace mhlab;

namespace {

// Independent brute-force enumeration: all weakly decreasing vectors of
// length m with entries in [0, d] summing to d.
std::set<std::vector<int>> brute_partitions(int d, int m) {
    std::set<std::vector<int>> out;
    std::vector<int> v(static_cast<size_t>(m), 0);
    while (true) {
        int sum = 0;
        bool sorted = true;
        for (size_t i = 0; i < v.size(); ++i) {
            sum += v[i];
            if (i > 0 && v[i] > v[i - 1]) sorted = false;
        }
        if (sum == d && sorted) out.insert(v);
        int i = 0;
        for (; i < m; ++i) {
            if (v[static_cast<size_t>(i)] < d) {
                ++v[static_cast<size_t>(i)];
                for (int j = 0; j < i; ++j) v[static_cast<size_t>(j)] = 0;
                break;
            }
        }
        if (i == m) break;
    }
    return out;
}

}  // namespace

TEST_CASE("integer partitions") {
    auto p22 = enumerate_int_partitions(2, 2);
    REQUIRE(p22.size() == 2);
    CHECK(p22[0].parts == std::vector<int>{2, 0});
    CHECK(p22[1].parts == std::vector<int>{1, 1});

    auto p03 = enumerate_int_partitions(0, 3);
    REQUIRE(p03.size() == 1);
    CHECK(p03[0].parts == std::vector<int>{0, 0, 0});

    auto p55 = enumerate_int_partitions(5, 5);
    CHECK(p55.size() == 7);
}

TEST_CASE("integer partitions against brute force, in descending order") {
    for (int d = 0; d <= 6; ++d) {
        for (int m = 1; m <= 4; ++m) {
            auto fast = enumerate_int_partitions(d, m);
            auto slow = brute_partitions(d, m);
            REQUIRE(fast.size() == slow.size());
            for (size_t i = 0; i < fast.size(); ++i) {
                CHECK(slow.count(fast[i].parts) == 1);
                if (i > 0) CHECK(fast[i] < fast[i - 1]);
            }
        }
    }
}

TEST_CASE("set partitions of [2] are the five from the m=2 component list") {
    auto sps = enumerate_set_partitions(2);
    REQUIRE(sps.size() == 5);
    std::set<std::string> got;
    for (const auto& sp : sps) got.insert(sp.str());
    CHECK(got.count("J0={} | {1} {2}"));
    CHECK(got.count("J0={} | {1,2}"));
    CHECK(got.count("J0={1} | {2}"));
    CHECK(got.count("J0={2} | {1}"));
    CHECK(got.count("J0={1,2} |"));
}

TEST_CASE("set partition counts match Bell numbers") {
    CHECK(enumerate_set_partitions(1).size() == 2);
    CHECK(enumerate_set_partitions(4).size() == 52);
    for (int m = 1; m <= 7; ++m) {
        auto sps = enumerate_set_partitions(m);
        CHECK(Int(sps.size()) == bell_number(m + 1));
        // no duplicates
        std::set<std::string> seen;
        for (const auto& sp : sps) seen.insert(sp.str());
        CHECK(seen.size() == sps.size());
    }
}

TEST_CASE("set partition bijection round-trips") {
    for (int m = 1; m <= 5; ++m) {
        for (const auto& sp : enumerate_set_partitions(m)) {
            auto zb = set_partition_to_zero_blocks(sp);
            SetPartition back = set_partition_from_zero_blocks(zb, m);
            CHECK(back == sp);
        }
    }
}

TEST_CASE("bell numbers") {
    CHECK(bell_number(0) == 1);
    CHECK(bell_number(3) == 5);
    CHECK(bell_number(5) == 52);
    CHECK(bell_number(8) == 4140);
}

TEST_CASE("pochhammer") {
    auto pv = VarSet::params();
    RatFun a = RatFun::var(pv, "a");
    CHECK(pochhammer(a, 0).is_one());
    CHECK(pochhammer(a, 3) == parse_ratfun("a*(a+1)*(a+2)", pv));
    RatFun one = RatFun::constant(pv, Rational(1));
    CHECK(pochhammer(one, 5).constant_value() == Rational(120));
}

TEST_CASE("generalized pochhammer") {
    auto pv = VarSet::params();
    RatFun a = RatFun::var(pv, "a");
    CHECK(gen_pochhammer(a, IntPartition({1, 0})) == a);
    // Hand substitution: (a)_1 * (a - 1/2)_1 = a*(a - 1/2).
    CHECK(gen_pochhammer(a, IntPartition({1, 1})) == parse_ratfun("a*(a-1/2)", pv));
    CHECK(gen_pochhammer(a, IntPartition({0, 0, 0})).is_one());
    // One-row partitions collapse to the classical symbol.
    for (int n = 0; n <= 5; ++n) {
        CHECK(gen_pochhammer(a, IntPartition({n, 0, 0})) == pochhammer(a, n));
    }
}
