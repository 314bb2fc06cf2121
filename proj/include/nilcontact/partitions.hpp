#pragma once

// Integer partitions and compositions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nilcontact/error.hpp"

namespace nilcontact {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;
/// Ordered positive parts (block sizes of a partial flag).
using Composition = std::vector<int>;

inline int total(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

inline Partition sort_desc(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

/// Sorts descending, drops zeros; rejects negative parts.
inline Partition canonical_partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw Error(ErrorKind::InvalidPartition, "partition has a negative part");
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    return sort_desc(std::move(parts));
}

/// Transpose of the Young diagram.
inline Partition dual_partition(const Partition& lambda) {
    Partition d;
    if (lambda.empty()) return d;
    const int rows = *std::max_element(lambda.begin(), lambda.end());
    for (int k = 1; k <= rows; ++k)
        d.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [k](int p) { return p >= k; })));
    return d;
}

inline int multiplicity(const Partition& lambda, int part) {
    return static_cast<int>(std::count(lambda.begin(), lambda.end(), part));
}

/// Dominance order on partitions of the same total: a >= b iff every partial sum of a >= that of b.
inline bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

/// All partitions of n, in reverse lexicographic order ([n] first).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

/// All 2^(n-1) compositions of n >= 1, lexicographic.
inline std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    Composition cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(n);
    return out;
}

/// Distinct orderings of a multiset, lexicographically sorted.
inline std::vector<Composition> distinct_orderings(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.push_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

/// k! / prod m_j! for the multiplicities m_j of the parts.
inline std::uint64_t multinomial_orderings(const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    std::uint64_t result = 1;
    int placed = 0;
    for (const auto& [part, m] : mult) {
        // C(placed + m, m), built incrementally to stay exact
        for (int i = 1; i <= m; ++i) {
            result = result * static_cast<std::uint64_t>(placed + i) / static_cast<std::uint64_t>(i);
        }
        placed += m;
    }
    return result;
}

inline std::string join_parts(const std::vector<int>& parts, char sep = ',') {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? std::string(1, sep) : "") << parts[i];
    return os.str();
}

} // namespace nilcontact
