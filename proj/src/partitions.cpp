#include "mhlab/partitions.hpp"

#include <algorithm>
#include <functional>

namespace mhlab {

IntPartition::IntPartition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw StructuralError("negative partition part");
        if (i > 0 && parts[i] > parts[i - 1]) throw StructuralError("partition parts must be weakly decreasing");
    }
}

int IntPartition::weight() const {
    int w = 0;
    for (int p : parts) w += p;
    return w;
}

std::string IntPartition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::vector<IntPartition> enumerate_int_partitions(int d, int m) {
    if (d < 0 || m < 1) throw StructuralError("enumerate_int_partitions: need d >= 0, m >= 1");
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
        if (static_cast<int>(cur.size()) == m) {
            if (remaining == 0) {
                out.emplace_back(cur);
            }
            return;
        }
        int hi = std::min(remaining, maxPart);
        for (int p = hi; p >= 0; --p) {
            // Prune: remaining parts cannot exceed p each.
            int slots = m - static_cast<int>(cur.size()) - 1;
            if (remaining - p > slots * p) continue;
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

int SetPartition::m() const {
    int n = static_cast<int>(j0.size());
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (j0 != o.j0) return j0 < o.j0;
    return blocks < o.blocks;
}

std::string SetPartition::str() const {
    auto set_str = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "}";
    };
    std::string s = "J0=" + set_str(j0) + " |";
    for (const auto& b : blocks) s += " " + set_str(b);
    return s;
}

static SetPartition canonical(std::vector<int> j0, std::vector<std::vector<int>> blocks) {
    std::sort(j0.begin(), j0.end());
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return SetPartition{std::move(j0), std::move(blocks)};
}

std::vector<SetPartition> enumerate_set_partitions(int m) {
    if (m < 1) throw StructuralError("enumerate_set_partitions: need m >= 1");
    // Restricted growth strings over the ground set {0, 1, ..., m}.
    int n = m + 1;
    std::vector<SetPartition> out;
    std::vector<int> assign(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int maxUsed) {
        if (i == n) {
            std::vector<std::vector<int>> zero_blocks(static_cast<size_t>(maxUsed + 1));
            for (int k = 0; k < n; ++k) zero_blocks[static_cast<size_t>(assign[static_cast<size_t>(k)])].push_back(k);
            out.push_back(set_partition_from_zero_blocks(zero_blocks, m));
            return;
        }
        for (int b = 0; b <= maxUsed + 1; ++b) {
            assign[static_cast<size_t>(i)] = b;
            rec(i + 1, std::max(maxUsed, b));
        }
    };
    assign[0] = 0;
    rec(1, 0);
    return out;
}

std::vector<std::vector<int>> set_partition_to_zero_blocks(const SetPartition& sp) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> zero_block = sp.j0;
    zero_block.insert(zero_block.begin(), 0);
    blocks.push_back(std::move(zero_block));
    for (const auto& b : sp.blocks) blocks.push_back(b);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

SetPartition set_partition_from_zero_blocks(const std::vector<std::vector<int>>& blocks, int m) {
    std::vector<int> j0;
    std::vector<std::vector<int>> rest;
    for (const auto& b : blocks) {
        if (b.empty()) throw StructuralError("empty block in set partition");
        if (std::find(b.begin(), b.end(), 0) != b.end()) {
            for (int x : b)
                if (x != 0) j0.push_back(x);
        } else {
            rest.push_back(b);
        }
    }
    SetPartition sp = canonical(std::move(j0), std::move(rest));
    if (sp.m() != m) throw StructuralError("set partition does not cover [m]");
    return sp;
}

Int bell_number(int n) {
    if (n < 0) throw StructuralError("bell_number: need n >= 0");
    // Bell triangle.
    std::vector<Int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (size_t j = 0; j < row.size(); ++j) next.push_back(next[j] + row[j]);
        row = std::move(next);
    }
    return row.front();
}

RatFun pochhammer(const RatFun& base, long n) {
    if (n < 0) throw StructuralError("pochhammer: need n >= 0");
    RatFun r = RatFun::constant(base.vars(), Rational(1));
    for (long i = 0; i < n; ++i) {
        r *= base + RatFun::constant(base.vars(), Rational(i));
    }
    return r;
}

RatFun gen_pochhammer(const RatFun& base, const IntPartition& lambda) {
    RatFun r = RatFun::constant(base.vars(), Rational(1));
    for (int i = 1; i <= lambda.length(); ++i) {
        RatFun shifted = base - RatFun::constant(base.vars(), Rational(i - 1, 2));
        r *= pochhammer(shifted, lambda.part(i - 1));
    }
    return r;
}

}  // namespace mhlab
