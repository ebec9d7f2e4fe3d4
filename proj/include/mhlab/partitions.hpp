#pragma once

#include <string>
#include <vector>

#include "mhlab/ratfun.hpp"

namespace mhlab {

// Integer partition padded with trailing zeros to a fixed ambient length m.
struct IntPartition {
    std::vector<int> parts;  // weakly decreasing, nonnegative

    IntPartition() = default;
    explicit IntPartition(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int weight() const;
    int part(int i) const { return parts[static_cast<size_t>(i)]; }  // 0-based

    bool operator==(const IntPartition& o) const { return parts == o.parts; }
    bool operator!=(const IntPartition& o) const { return parts != o.parts; }
    // Lexicographic comparison; (2,0) > (1,1).
    bool operator<(const IntPartition& o) const { return parts < o.parts; }
    bool operator>(const IntPartition& o) const { return o < *this; }
    bool operator<=(const IntPartition& o) const { return !(o < *this); }

    std::string str() const;  // "(2,1,0)"
};

// All partitions of d into at most m parts, padded to length m, in
// lexicographic-descending order: (d,0,..) first, (1,1,..) / smallest last.
std::vector<IntPartition> enumerate_int_partitions(int d, int m);

// Partition of [m] = {1,...,m} with a distinguished (possibly empty) block J0.
struct SetPartition {
    std::vector<int> j0;                   // sorted ascending
    std::vector<std::vector<int>> blocks;  // non-empty, each sorted, ordered by minimum

    int m() const;
    bool operator==(const SetPartition& o) const { return j0 == o.j0 && blocks == o.blocks; }
    bool operator<(const SetPartition& o) const;
    std::string str() const;  // "J0={1} | {2} {3,4}"
};

// Enumerates via the bijection with partitions of {0,1,...,m}: the block
// containing 0 becomes J0. Yields exactly B_{m+1} values.
std::vector<SetPartition> enumerate_set_partitions(int m);

// The two sides of the bijection, exposed for round-trip checks. A partition
// of {0,...,m} is a list of disjoint blocks covering it, sorted by minimum.
std::vector<std::vector<int>> set_partition_to_zero_blocks(const SetPartition& sp);
SetPartition set_partition_from_zero_blocks(const std::vector<std::vector<int>>& blocks, int m);

Int bell_number(int n);

// base * (base+1) * ... * (base+n-1); 1 for n = 0.
RatFun pochhammer(const RatFun& base, long n);

// Generalized Pochhammer symbol: product over i of (base - (i-1)/2)_{lambda_i}.
RatFun gen_pochhammer(const RatFun& base, const IntPartition& lambda);

}  // namespace mhlab
