#include "opchar/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace opchar {

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

void check_partition(const Partition& p) {
    if (!is_valid_partition(p))
        throw std::invalid_argument("partition parts must be positive and weakly decreasing");
}

std::map<int, int> multiplicities(const Partition& p) {
    std::map<int, int> m;
    for (int part : p) ++m[part];
    return m;
}

Integer z_factor(const Partition& p) {
    Integer z = 1;
    for (auto [part, mult] : multiplicities(p)) {
        for (int i = 0; i < mult; ++i) z *= part;
        for (int i = 2; i <= mult; ++i) z *= i;
    }
    return z;
}

namespace {
void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(n - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end(), PartitionLess{});
    return out;
}

Partition scale_parts(const Partition& p, int n) {
    Partition q = p;
    for (int& part : q) part *= n;
    return q;
}

Partition merge_parts(const Partition& a, const Partition& b) {
    Partition c;
    c.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c),
               std::greater<int>{});
    return c;
}

Partition remove_part(const Partition& p, int part) {
    Partition q = p;
    auto it = std::find(q.begin(), q.end(), part);
    if (it == q.end()) throw std::invalid_argument("remove_part: part not present");
    q.erase(it);
    return q;
}

}  // namespace opchar
