#include "schubertd/partition.hpp"

namespace schubertd {

namespace {

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        p.parts = cur;
        out.push_back(std::move(p));
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_len < 0 ? -1 : max_len - 1, cur, out);
        cur.pop_back();
    }
}

void strict_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        p.parts = cur;
        out.push_back(std::move(p));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        strict_rec(remaining - p, p - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_part, int max_len) {
    std::vector<Partition> out;
    if (weight < 0) return out;
    std::vector<int> cur;
    partitions_rec(weight, max_part, max_len, cur, out);
    return out;
}

std::vector<Partition> strict_partitions_of(int weight, int max_part) {
    std::vector<Partition> out;
    if (weight < 0) return out;
    std::vector<int> cur;
    strict_rec(weight, max_part, cur, out);
    return out;
}

}  // namespace schubertd
