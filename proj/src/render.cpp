#include "schubertd/render.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace schubertd {

namespace {

std::string bracket_list(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace

std::string render_dw(const SignedPermutation& w, int n) {
    if (w.n() != n) throw std::invalid_argument("render_dw: rank mismatch");
    BHExpansion ex = bh_expansion(w);
    struct Term {
        Partition lambda;
        PermutationA pi;
        long long f;
    };
    std::vector<Term> terms;
    for (const auto& [key, f] : ex.coeffs) {
        if (!key.first.in_f(n - 1)) continue;
        terms.push_back({key.first, key.second, f});
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.lambda.weight() != b.lambda.weight()) return a.lambda.weight() > b.lambda.weight();
        if (a.lambda != b.lambda) return b.lambda < a.lambda;
        return b.pi < a.pi;
    });
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        bool negative = t.pi.length() % 2 != 0;  // sign of S_pi(-X) folded in
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (t.f != 1) os << t.f << "*";
        bool has_p = t.lambda.len() > 0;
        bool has_s = t.pi.length() > 0;
        if (has_p) os << "P" << bracket_list(t.lambda.parts);
        if (has_p && has_s) os << "*";
        if (has_s) os << "S" << bracket_list(t.pi.entries);
        if (!has_p && !has_s) os << "1";
    }
    return os.str();
}

std::string render_table(int n, int jobs) {
    std::vector<SignedPermutation> elems = all_elements(n);
    std::stable_sort(elems.begin(), elems.end(),
                     [](const SignedPermutation& a, const SignedPermutation& b) {
                         if (a.length() != b.length()) return a.length() < b.length();
                         return a < b;
                     });
    std::vector<std::string> lines(elems.size());
    auto work = [&](size_t begin, size_t stride) {
        for (size_t i = begin; i < elems.size(); i += stride)
            lines[i] = elems[i].str() + " : " + render_dw(elems[i], n);
    };
    if (jobs <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
        for (auto& t : pool) t.join();
    }
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += "\n";
    }
    return out;
}

}  // namespace schubertd
