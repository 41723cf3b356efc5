#include "schubertd/stanley.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace schubertd {

bool is_unimodal(const std::vector<int>& a) {
    const size_t m = a.size();
    if (m <= 1) return true;
    size_t i = 0;
    while (i + 1 < m && a[i] > a[i + 1]) ++i;
    // a[0..i] is the strictly decreasing run
    size_t j = i;
    if (i + 1 < m && a[i] == a[i + 1]) {
        if (a[i] != 1) return false;  // equality allowed only at value 1
        j = i + 1;
    }
    for (size_t k = j; k + 1 < m; ++k)
        if (a[k] >= a[k + 1]) return false;
    return true;
}

int max_unimodal_subsequence(const std::vector<int>& a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return 0;
    // dec[p]: longest strictly decreasing subsequence ending at p
    // inc[p]: longest strictly increasing subsequence starting at p
    std::vector<int> dec(m, 1), inc(m, 1);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < p; ++q)
            if (a[q] > a[p]) dec[p] = std::max(dec[p], dec[q] + 1);
    for (int p = m - 1; p >= 0; --p)
        for (int q = p + 1; q < m; ++q)
            if (a[q] > a[p]) inc[p] = std::max(inc[p], inc[q] + 1);
    int best = 0;
    for (int p = 0; p < m; ++p) best = std::max(best, dec[p] + inc[p] - 1);
    // junction equality 1,1: a decreasing run into the first 1 glued to an
    // increasing run from a later 1
    for (int p = 0; p < m; ++p) {
        if (a[p] != 1) continue;
        for (int q = p + 1; q < m; ++q)
            if (a[q] == 1) best = std::max(best, dec[p] + inc[q]);
    }
    return best;
}

namespace {

// Enumeration state: rows are filled bottom-up; `lifts` tracks every group
// element reachable by assigning s_1 or s_box to the 1-letters of the word
// so far, pruned to those that still fit under w in weak order.
struct Enumerator {
    const SignedPermutation& w;
    const Partition& shape;
    int n;
    int target_len;
    std::vector<int> word;                 // flattened row word so far
    std::vector<std::vector<int>> rows;    // filled bottom row first
    std::vector<SignedPermutation> lifts;  // all reduced lifts of `word`
    std::vector<KLTableau> out;

    // Lifts of `word` extended by one letter, kept reduced and below w.
    void step_lifts(int letter, int new_len, std::vector<SignedPermutation>& next) {
        next.clear();
        auto push = [&](const SignedPermutation& u, int gen) {
            SignedPermutation v = apply_generator(u, gen);
            if (v.length() != new_len) return;
            if (compose(v.inverse(), w).length() != target_len - new_len) return;
            next.push_back(std::move(v));
        };
        for (const auto& u : lifts) {
            push(u, letter);
            if (letter == 1) push(u, 0);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
    }

    // row_index counts from the bottom: 0 fills the last row of the shape.
    void fill_row(int row_index, std::vector<int>& row) {
        const int shape_row = shape.len() - 1 - row_index;  // 0-based from top
        const int width = shape.parts[shape_row];
        if (static_cast<int>(row.size()) == width) {
            if (max_unimodal_subsequence(word) != width) return;
            rows.push_back(row);
            if (row_index + 1 == shape.len()) {
                // lifts invariant: word lifts to w iff some lift survived
                if (!lifts.empty()) {
                    KLTableau t;
                    t.shape = shape;
                    t.rows.assign(rows.rbegin(), rows.rend());
                    out.push_back(std::move(t));
                }
            } else {
                std::vector<int> next_row;
                fill_row(row_index + 1, next_row);
            }
            rows.pop_back();
            return;
        }
        for (int letter = 1; letter <= n - 1; ++letter) {
            row.push_back(letter);
            word.push_back(letter);
            if (is_unimodal(row) && max_unimodal_subsequence(word) <= width) {
                std::vector<SignedPermutation> saved = lifts;
                std::vector<SignedPermutation> next;
                step_lifts(letter, static_cast<int>(word.size()), next);
                if (!next.empty()) {
                    lifts = std::move(next);
                    fill_row(row_index, row);
                }
                lifts = std::move(saved);
            }
            word.pop_back();
            row.pop_back();
        }
    }
};

}  // namespace

std::vector<KLTableau> kl_tableaux(const SignedPermutation& w, const Partition& shape) {
    if (w.length() > 20)
        throw std::domain_error("kl_tableaux: length " + std::to_string(w.length()) +
                                " exceeds the enumeration bound 20");
    std::vector<KLTableau> out;
    if (shape.weight() != w.length()) return out;
    if (shape.len() == 0) {
        if (w.is_identity()) out.push_back(KLTableau{shape, {}});
        return out;
    }
    Enumerator en{w, shape, w.n(), w.length(), {}, {}, {SignedPermutation::identity(w.n())}, {}};
    std::vector<int> row;
    en.fill_row(0, row);
    return en.out;
}

int m_stat(const KLTableau& t) {
    std::vector<int> word = t.row_word();
    int top = 1;
    for (int a : word) top = std::max(top, a + 1);
    // one-line of s_{a_1}...s_{a_j}, built by right multiplications
    std::vector<int> p(top);
    for (int i = 0; i < top; ++i) p[i] = i + 1;
    std::vector<bool> seen(top + 1, false);
    seen[p[0]] = true;
    int distinct = 1;
    for (int a : word) {
        std::swap(p[a - 1], p[a]);
        if (!seen[p[0]]) {
            seen[p[0]] = true;
            ++distinct;
        }
    }
    return t.shape.len() + 1 - distinct;
}

namespace {
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> g_stanley_cache;
std::mutex g_stanley_mutex;
}  // namespace

long long stanley_coeff(const SignedPermutation& u, const Partition& lambda) {
    if (lambda.weight() != u.length()) return 0;
    {
        std::lock_guard<std::mutex> lock(g_stanley_mutex);
        auto it = g_stanley_cache.find({u.entries, lambda.parts});
        if (it != g_stanley_cache.end()) return it->second;
    }
    long long total = 0;
    for (const auto& t : kl_tableaux(u, lambda)) {
        int m = m_stat(t);
        if (m < 0) throw std::logic_error("stanley_coeff: negative tableau statistic");
        total += 1LL << m;
    }
    std::lock_guard<std::mutex> lock(g_stanley_mutex);
    g_stanley_cache.emplace(std::make_pair(u.entries, lambda.parts), total);
    return total;
}

long long f_coeff(const SignedPermutation& w, const Partition& lambda, const PermutationA& pi) {
    if (!lambda.is_strict()) throw std::invalid_argument("f_coeff: lambda must be strict");
    if (pi.n() != w.n()) throw std::invalid_argument("f_coeff: rank mismatch");
    std::vector<int> signed_pi(pi.entries.begin(), pi.entries.end());
    SignedPermutation pi_d(signed_pi);
    SignedPermutation u = compose(w, pi_d.inverse());
    if (u.length() != w.length() - pi.length()) return 0;
    return stanley_coeff(u, lambda);
}

BHExpansion bh_expansion(const SignedPermutation& w) {
    BHExpansion ex;
    ex.element = w;
    const int n = w.n();
    for (const auto& pi : all_permutations(n)) {
        std::vector<int> signed_pi(pi.entries.begin(), pi.entries.end());
        SignedPermutation pi_d(signed_pi);
        SignedPermutation u = compose(w, pi_d.inverse());
        const int rest = w.length() - pi.length();
        if (rest < 0 || u.length() != rest) continue;
        // rows are maximal unimodal subsequences; their length is bounded by
        // 2(n-1) (a strict descent to 1, a 1, and a strict ascent)
        for (const auto& lambda : strict_partitions_of(rest, 2 * (n - 1))) {
            long long c = stanley_coeff(u, lambda);
            if (c != 0) ex.coeffs.emplace(std::make_pair(lambda, pi), c);
        }
    }
    return ex;
}

}  // namespace schubertd
