#pragma once

#include <map>
#include <vector>

#include "opchar/rational.hpp"

namespace opchar {

// A partition is a weakly decreasing list of positive integers.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);
void check_partition(const Partition& p);

inline int weight(const Partition& p) {
    int w = 0;
    for (int part : p) w += part;
    return w;
}

inline int length(const Partition& p) { return static_cast<int>(p.size()); }

// Multiplicity map part -> count.
std::map<int, int> multiplicities(const Partition& p);

// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the cycle type.
Integer z_factor(const Partition& p);

// All partitions of n, ordered by the canonical (weight, lex) comparator.
std::vector<Partition> partitions_of(int n);

// Multiply every part by n (plethysm scaling).
Partition scale_parts(const Partition& p, int n);

// Merge two partitions into one sorted partition.
Partition merge_parts(const Partition& a, const Partition& b);

// Remove one occurrence of the given part; throws if absent.
Partition remove_part(const Partition& p, int part);

// Canonical ordering: by weight, then lexicographically on the parts.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    }
};

}  // namespace opchar
