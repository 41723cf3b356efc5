#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubertd {

// Integer partition: weakly decreasing positive parts.  Parts beyond the
// length read as zero.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    int len() const { return static_cast<int>(parts.size()); }
    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int part(int i) const { return i <= len() ? parts[i - 1] : 0; }  // 1-based

    bool is_strict() const {
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] == parts[i + 1]) return false;
        return true;
    }
    bool in_g(int n) const { return parts.empty() || parts[0] <= n; }
    bool in_f(int n) const { return is_strict() && in_g(n); }

    // Largest repeated part; 0 when strict.
    int largest_repeated_part() const {
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] == parts[i + 1]) return parts[i];
        return 0;
    }

    // Removes `count` copies of the part `p` (must exist).
    Partition remove_parts(int p, int count) const {
        std::vector<int> out;
        for (int v : parts) {
            if (count > 0 && v == p) {
                --count;
                continue;
            }
            out.push_back(v);
        }
        if (count != 0) throw std::invalid_argument("remove_parts: part not present");
        Partition r;
        r.parts = std::move(out);
        return r;
    }

    // Inserts parts keeping the decreasing order (union of multisets).
    Partition insert_parts(std::vector<int> extra) const {
        std::vector<int> out = parts;
        out.insert(out.end(), extra.begin(), extra.end());
        std::sort(out.begin(), out.end(), std::greater<int>());
        Partition r;
        r.parts = std::move(out);
        return r;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

    std::string str() const {  // "2,1"; "[]" for the empty partition
        if (parts.empty()) return "[]";
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s;
    }

    static Partition parse(const std::string& s) {
        if (s.empty() || s == "[]") return Partition();
        std::vector<int> p;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            p.push_back(std::stoi(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return Partition(std::move(p));
    }
};

// All partitions of `weight` with parts <= max_part and at most max_len
// parts (max_len < 0 means unbounded), in lexicographically decreasing order.
std::vector<Partition> partitions_of(int weight, int max_part, int max_len = -1);

// Strict partitions of `weight` with parts <= max_part.
std::vector<Partition> strict_partitions_of(int weight, int max_part);

}  // namespace schubertd
