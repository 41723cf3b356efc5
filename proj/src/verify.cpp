#include "schubertd/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <sstream>

#include "schubertd/dbasis.hpp"
#include "schubertd/forms.hpp"
#include "schubertd/render.hpp"
#include "schubertd/stanley.hpp"
#include "schubertd/symfunc.hpp"

namespace schubertd::verify {

namespace {

constexpr unsigned kSeed = 271828;

using Checks = std::vector<CheckResult>;

void record(Checks& out, const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
}

// Deterministic corpus of dyadic-coefficient polynomials.
std::vector<Polynomial> random_polys(int n, int count, int max_degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den_pow(0, 2);
    std::uniform_int_distribution<int> exp(0, max_degree);
    std::vector<Polynomial> out;
    for (int c = 0; c < count; ++c) {
        Polynomial p(n);
        for (int t = 0; t < 6; ++t) {
            Exponents e(n);
            int budget = max_degree;
            for (int i = 0; i < n; ++i) {
                e[i] = std::min(exp(rng), budget);
                budget -= e[i];
            }
            int a = num(rng);
            if (a == 0) a = 1;
            p.add_term(e, Rational(BigInt(a), BigInt(1) << den_pow(rng)));
        }
        out.push_back(std::move(p));
    }
    return out;
}

// Shortest-word lengths by breadth-first search over the Cayley graph; this
// is the independent oracle for the closed-form length.
std::map<std::vector<int>, int> bfs_lengths(int n) {
    std::map<std::vector<int>, int> dist;
    std::deque<SignedPermutation> queue;
    SignedPermutation e = SignedPermutation::identity(n);
    dist[e.entries] = 0;
    queue.push_back(e);
    while (!queue.empty()) {
        SignedPermutation w = queue.front();
        queue.pop_front();
        int d = dist[w.entries];
        for (int g = 0; g < n; ++g) {
            SignedPermutation v = apply_generator(w, g);
            if (dist.emplace(v.entries, d + 1).second) queue.push_back(v);
        }
    }
    return dist;
}

std::vector<SignedPermutation> sample_elements(int n, size_t count, std::mt19937& rng) {
    std::vector<SignedPermutation> all = all_elements(n);
    std::shuffle(all.begin(), all.end(), rng);
    if (all.size() > count) all.resize(count);
    return all;
}

// --- suite: poly ----------------------------------------------------------

Checks check_poly() {
    Checks out;
    std::mt19937 rng(kSeed);

    {
        Polynomial x1 = Polynomial::variable(2, 1);
        Polynomial x2 = Polynomial::variable(2, 2);
        bool ok = (x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2;
        Polynomial zero(2);
        ok = ok && (x1 * zero == zero);
        record(out, "poly arithmetic basics", ok);
    }
    {
        // (x1+x2+x3)/2 squared equals the directly expanded quarter-square
        int n = 3;
        Polynomial s(n);
        for (int i = 1; i <= n; ++i) s += Polynomial::variable(n, i);
        Polynomial lhs = s.scaled(half()) * s.scaled(half());
        Polynomial rhs(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                rhs += Polynomial::variable(n, i) * Polynomial::variable(n, j);
        record(out, "half-sum square oracle", lhs == rhs.scaled(Rational(1, 4)));
    }
    {
        bool ok = true;
        for (const auto& f : random_polys(3, 8, 4, rng))
            for (int g = 0; g <= 2; ++g)
                if (!f.divided_difference(g).divided_difference(g).is_zero()) ok = false;
        record(out, "dd squares to zero", ok);
    }
    {
        bool ok = true;
        for (const auto& f : random_polys(4, 8, 4, rng)) {
            auto dd = [&](std::vector<int> word) {
                Polynomial r = f;
                for (auto it = word.rbegin(); it != word.rend(); ++it)
                    r = r.divided_difference(*it);
                return r;
            };
            if (dd({1, 2, 1}) != dd({2, 1, 2})) ok = false;
            if (dd({0, 2, 0}) != dd({2, 0, 2})) ok = false;
            if (dd({0, 1}) != dd({1, 0})) ok = false;
            if (dd({0, 3}) != dd({3, 0})) ok = false;
        }
        record(out, "braid relations for divided differences", ok);
    }
    {
        // well-definedness: all reduced words of each w act identically
        bool ok = true;
        for (int n : {2, 3}) {
            auto polys = random_polys(n, 3, 3, rng);
            for (const auto& w : all_elements(n)) {
                auto words = reduced_words(w);
                for (const auto& f : polys) {
                    Polynomial ref = divided_difference_word(f, words.front());
                    for (size_t i = 1; i < words.size(); ++i)
                        if (divided_difference_word(f, words[i]) != ref) ok = false;
                }
            }
        }
        record(out, "dd word independent of reduced word (W~_2, W~_3)", ok);
    }
    {
        bool ok = true;
        // high-degree probe so that length-12 words act nontrivially
        Polynomial probe = Polynomial::monomial(4, {6, 4, 2, 1}, Rational(1, 2));
        probe.add_term({3, 3, 3, 3}, Rational(1));
        probe.add_term({5, 4, 3, 0}, Rational(-3, 4));
        for (const auto& w : sample_elements(4, 50, rng)) {
            auto words = reduced_words(w, 12);
            Polynomial ref = divided_difference_word(probe, words.front());
            bool nonzero_seen = !ref.is_zero();
            for (size_t i = 1; i < words.size(); ++i)
                if (divided_difference_word(probe, words[i]) != ref) ok = false;
            (void)nonzero_seen;
        }
        record(out, "dd word independent of reduced word (50 random W~_4)", ok);
    }
    {
        Polynomial x1 = Polynomial::variable(2, 1);
        bool ok = x1.divided_difference(1) == Polynomial::constant(2, Rational(1));
        ok = ok && x1.divided_difference(0) == Polynomial::constant(2, Rational(-1));
        Polynomial sym = elementary(2, 3);
        ok = ok && sym.divided_difference(1).is_zero() && sym.divided_difference(2).is_zero();
        ok = ok && x1.divided_difference(1).divided_difference(1).is_zero();
        record(out, "dd base cases", ok);
    }
    {
        bool ok = true;
        Polynomial f = Polynomial::variable(3, 1) * Polynomial::variable(3, 2);
        ok = ok && f.negate_vars() == f;  // even degree
        Polynomial g = Polynomial::variable(3, 1);
        ok = ok && g.negate_vars() == -g;
        for (const auto& h : random_polys(3, 4, 3, rng)) {
            for (int d = 0; d <= h.degree(); ++d) {
                Polynomial part = h.homogeneous_part(d);
                Polynomial expect = (d % 2 != 0) ? -part : part;
                if (part.negate_vars() != expect) ok = false;
            }
        }
        record(out, "negate_vars parity", ok);
    }
    {
        // the group action along words matches the one-line substitution
        bool ok = true;
        auto polys = random_polys(3, 4, 3, rng);
        for (const auto& w : all_elements(3)) {
            Word word = canonical_reduced_word(w);
            for (const auto& f : polys) {
                Polynomial chained = f;
                for (auto it = word.rbegin(); it != word.rend(); ++it)
                    chained = (*it == 0) ? chained.apply_box()
                                         : chained.apply_transposition(*it);
                if (chained != act(w, f)) ok = false;
            }
        }
        record(out, "group action consistency", ok);
    }
    return out;
}

// --- suite: weyl ------------------------------------------------------------

Checks check_weyl() {
    Checks out;
    std::mt19937 rng(kSeed + 1);
    {
        bool ok = true;
        for (int n : {2, 3}) {
            auto oracle = bfs_lengths(n);
            for (const auto& w : all_elements(n))
                if (oracle.at(w.entries) != w.length()) ok = false;
        }
        auto oracle4 = bfs_lengths(4);
        for (const auto& w : sample_elements(4, 64, rng))
            if (oracle4.at(w.entries) != w.length()) ok = false;
        record(out, "closed-form length vs shortest-word search", ok);
    }
    {
        bool ok = true;
        SignedPermutation ex = SignedPermutation::parse("-1,4,-3,2");
        ok = ok && ex.length() == 5;
        ok = ok && is_reduced(4, {2, 0, 3, 1, 2});
        ok = ok && flatten({2, 0, 3, 1, 2}) == Word({2, 1, 3, 1, 2});
        ok = ok && evaluate_word(4, {2, 0, 3, 1, 2}) == ex;
        ok = ok && !is_reduced(2, {1, 1});
        ok = ok && longest_element(4) == SignedPermutation::parse("-1,-2,-3,-4");
        ok = ok && longest_element(3) == SignedPermutation::parse("1,-2,-3");
        ok = ok && longest_element(3).length() == 6;
        ok = ok && evaluate_word(3, {1, 2, 0}) == SignedPermutation::parse("-3,-2,1");
        record(out, "worked word and length examples", ok);
    }
    {
        bool ok = true;
        for (int n : {2, 3, 4})
            for (const auto& w : (n < 4 ? all_elements(n) : sample_elements(4, 48, rng)))
                if (evaluate_word(n, canonical_reduced_word(w)) != w ||
                    static_cast<int>(canonical_reduced_word(w).size()) != w.length())
                    ok = false;
        record(out, "canonical word evaluates back", ok);
    }
    {
        bool ok = true;
        SignedPermutation u = SignedPermutation::parse("-1,-2,3");
        auto words = reduced_words(u);
        ok = ok && words.size() == 2 && words[0] == Word({0, 1}) && words[1] == Word({1, 0});
        record(out, "reduced word enumeration (s_box s_1)", ok);
    }
    {
        bool ok = true;
        for (int n : {3, 4}) {
            SignedPermutation e = SignedPermutation::identity(n);
            for (int g = 0; g < n; ++g)
                if (!(apply_generator(apply_generator(e, g), g) == e)) ok = false;
        }
        // relations through word evaluation
        ok = ok && evaluate_word(3, {1, 2, 1}) == evaluate_word(3, {2, 1, 2});
        ok = ok && evaluate_word(3, {0, 2, 0}) == evaluate_word(3, {2, 0, 2});
        ok = ok && evaluate_word(3, {0, 1}) == evaluate_word(3, {1, 0});
        ok = ok && evaluate_word(4, {0, 3}) == evaluate_word(4, {3, 0});
        record(out, "generator relations", ok);
    }
    {
        bool ok = true;
        auto elems = all_elements(3);
        std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
        for (int t = 0; t < 64; ++t) {
            const auto& u = elems[pick(rng)];
            const auto& v = elems[pick(rng)];
            SignedPermutation uv = compose(u, v);
            int lu = u.length(), lv = v.length(), luv = uv.length();
            if (luv > lu + lv) ok = false;
            Word cat = canonical_reduced_word(u);
            Word wv = canonical_reduced_word(v);
            cat.insert(cat.end(), wv.begin(), wv.end());
            if ((luv == lu + lv) != is_reduced(3, cat)) ok = false;
        }
        record(out, "length subadditivity", ok);
    }
    {
        bool ok = true;
        ok = ok && max_grassmannian({2}, 3) == SignedPermutation::parse("-3,-1,2");
        ok = ok && max_grassmannian({2, 1}, 3) == SignedPermutation::parse("-3,-2,1");
        ok = ok && max_grassmannian({}, 3) == SignedPermutation::identity(3);
        record(out, "maximal Grassmannian elements", ok);
    }
    {
        bool ok = true;
        ok = ok && phi_embed(SignedPermutation::identity(2)) == PermutationA::identity(4);
        ok = ok && phi_embed(SignedPermutation::parse("-2,-1")) == PermutationA::parse("3,4,1,2");
        for (int n : {2, 3}) {
            auto elems = all_elements(n);
            std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
            for (int t = 0; t < 50; ++t) {
                const auto& u = elems[pick(rng)];
                const auto& v = elems[pick(rng)];
                if (!(phi_embed(compose(u, v)) == compose(phi_embed(u), phi_embed(v)))) ok = false;
            }
            for (const auto& w : elems) {
                PermutationA p = phi_embed(w);
                int above = 0;
                for (int i = 1; i <= n; ++i) {
                    if (p(i) + p(2 * n + 1 - i) != 2 * n + 1) ok = false;
                    if (p(i) > n) ++above;
                }
                if (above % 2 != 0) ok = false;
            }
        }
        record(out, "phi embedding", ok);
    }
    return out;
}

// --- suite: ptilde ----------------------------------------------------------

Checks check_ptilde() {
    Checks out;
    {
        bool ok = true;
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= 5; ++k) {
                Polynomial lhs = ptilde_pair_x(k, k, n);
                Polynomial rhs = (k <= n ? elementary_squares(k, n) : Polynomial(n))
                                     .scaled(Rational(1, 4));
                if (lhs != rhs) ok = false;
            }
        record(out, "property (b): P~_{k,k} = e_k(X^2)/4", ok);
    }
    {
        bool ok = true;
        for (int k = 1; k <= 3; ++k)
            for (int wt = 0; wt <= 8 - 2 * k; ++wt)
                for (const auto& lam : partitions_of(wt, wt == 0 ? 1 : wt)) {
                    Partition merged = lam.insert_parts({k, k});
                    int alphabet = std::max(merged.part(1) + merged.part(2), 2 * k);
                    Polynomial lhs = ptilde_sym(merged, alphabet);
                    Polynomial rhs =
                        ptilde_pair_sym(k, k, alphabet) * ptilde_sym(lam, alphabet);
                    if (lhs != rhs) ok = false;
                }
        record(out, "property (c): P~_{lambda u (k,k)} factorizes", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (int wt = 1; wt <= 8; ++wt)
                for (const auto& lam : partitions_of(wt, wt))
                    if (lam.part(1) > n && !ptilde_x(lam, n).is_zero()) ok = false;
        record(out, "property (e): vanishing above the rank", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (int d = 1; d <= 6; ++d) {
                auto lambdas = partitions_of(d, n);
                std::map<Exponents, size_t, GrevlexLess> rows;
                for (const auto& lam : lambdas) {
                    Polynomial p = ptilde_x(lam, n);
                    for (const auto& [e, c] : p.terms()) rows.emplace(e, rows.size());
                }
                std::vector<std::vector<Rational>> m(
                    rows.size(), std::vector<Rational>(lambdas.size(), Rational(0)));
                for (size_t c = 0; c < lambdas.size(); ++c) {
                    Polynomial p = ptilde_x(lambdas[c], n);
                    for (const auto& [e, coef] : p.terms()) m[rows.at(e)][c] = coef;
                }
                if (rank_exact(m) != static_cast<int>(lambdas.size())) ok = false;
            }
        record(out, "property (e): linear independence up to degree 6", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (int wt = 0; wt <= 8; ++wt)
                for (const auto& lam : partitions_of(wt, n)) {
                    Polynomial lhs = ptilde_x(Partition({n}), n) * ptilde_x(lam, n);
                    Polynomial rhs = ptilde_x(lam.insert_parts({n}), n);
                    if (lhs != rhs) ok = false;
                }
        record(out, "property (f): multiplying by P~_n prepends a part", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (int wt = 0; wt <= 6; ++wt)
                for (const auto& lam : partitions_of(wt, n)) {
                    Polynomial p = ptilde_x(lam, n);
                    for (const auto& [e, c] : p.terms())
                        if (c.is_negative()) ok = false;
                }
        record(out, "property (d): nonnegative coefficients", ok);
    }
    {
        bool ok = true;
        for (int wt = 2; wt <= 6; ++wt)
            for (const auto& lam : partitions_of(wt, wt))
                if (!lam.is_strict() && !schur_p(lam, 8).is_zero()) ok = false;
        record(out, "eta kills non-strict partitions", ok);
    }
    {
        bool ok = true;
        Polynomial p1 = schur_p(Partition({1}), 5);
        Polynomial expect(5);
        for (int i = 1; i <= 5; ++i) expect += Polynomial::variable(5, i);
        ok = ok && p1 == expect;
        for (int wt = 1; wt <= 5; ++wt)
            for (const auto& lam : strict_partitions_of(wt, wt)) {
                Polynomial p = schur_p(lam, 6);
                for (const auto& [e, c] : p.terms())
                    if (!c.is_integer() || c.is_negative()) ok = false;
            }
        record(out, "Schur P values are nonnegative integral", ok);
    }
    return out;
}

// --- suite: schubert-a --------------------------------------------------------

Checks check_schubert_a() {
    Checks out;
    {
        bool ok = true;
        ok = ok && schubert_a(PermutationA::parse("2,1,3"), 3) == Polynomial::variable(3, 1);
        Polynomial s2 = Polynomial::variable(3, 1) + Polynomial::variable(3, 2);
        ok = ok && schubert_a(PermutationA::parse("1,3,2"), 3) == s2;
        Exponents stair{2, 1, 0};
        ok = ok &&
             schubert_a(PermutationA::parse("3,2,1"), 3) ==
                 Polynomial::monomial(3, stair, Rational(1));
        ok = ok && schubert_a(PermutationA::identity(3), 3) ==
                       Polynomial::constant(3, Rational(1));
        record(out, "small Schubert polynomials", ok);
    }
    {
        bool ok = true;
        for (int n : {3, 4}) {
            for (const auto& pi : all_permutations(n)) {
                Polynomial sp = schubert_a(pi, n);
                if (sp.degree() != pi.length()) ok = false;
                for (const auto& [e, c] : sp.terms())
                    if (!c.is_integer() || c.is_negative()) ok = false;
                for (int i = 1; i < n; ++i) {
                    Polynomial lhs = sp.divided_difference(i);
                    PermutationA tau = pi;
                    std::swap(tau.entries[i - 1], tau.entries[i]);
                    Polynomial rhs = (tau.length() == pi.length() - 1) ? schubert_a(tau, n)
                                                                       : Polynomial(n);
                    if (lhs != rhs) ok = false;
                }
            }
        }
        record(out, "divided-difference recursion on S_3, S_4", ok);
    }
    {
        bool ok = true;
        for (int n : {3, 4}) {
            // linear independence degree by degree
            for (int d = 0; d <= n * (n - 1) / 2; ++d) {
                std::vector<PermutationA> level;
                for (const auto& pi : all_permutations(n))
                    if (pi.length() == d) level.push_back(pi);
                std::map<Exponents, size_t, GrevlexLess> rows;
                for (const auto& pi : level) {
                    Polynomial p = schubert_a(pi, n);
                    for (const auto& [e, c] : p.terms()) rows.emplace(e, rows.size());
                }
                std::vector<std::vector<Rational>> m(
                    rows.size(), std::vector<Rational>(level.size(), Rational(0)));
                for (size_t c = 0; c < level.size(); ++c) {
                    Polynomial p = schubert_a(level[c], n);
                    for (const auto& [e, coef] : p.terms()) m[rows.at(e)][c] = coef;
                }
                if (rank_exact(m) != static_cast<int>(level.size())) ok = false;
            }
        }
        record(out, "Schubert polynomials are independent", ok);
    }
    {
        bool ok = true;
        for (const auto& pi : all_permutations(3))
            if (!stability_check(pi, 3, 4)) ok = false;
        ok = ok && stability_check(PermutationA::parse("2,1"), 2, 4);
        record(out, "stability under S_n -> S_{n'}", ok);
    }
    return out;
}

// --- suite: stanley -----------------------------------------------------------

Checks check_stanley() {
    Checks out;
    {
        bool ok = true;
        ok = ok && is_unimodal({6, 5, 4, 3, 2, 1});
        ok = ok && is_unimodal({1, 1});
        ok = ok && !is_unimodal({2, 2});
        ok = ok && is_unimodal({2, 1, 1, 2});
        ok = ok && !is_unimodal({1, 1, 1});
        ok = ok && is_unimodal({3, 1, 2});
        record(out, "unimodality", ok);
    }
    {
        bool ok = true;
        // unique tableau at a maximal Grassmannian element, rows descending
        SignedPermutation w = max_grassmannian({2, 1}, 3);
        auto ts = kl_tableaux(w, Partition({2, 1}));
        ok = ok && ts.size() == 1 && ts[0].rows[0] == std::vector<int>({2, 1}) &&
             ts[0].rows[1] == std::vector<int>({1}) && m_stat(ts[0]) == 0;
        SignedPermutation sbox = SignedPermutation::parse("-2,-1,3");
        auto tbox = kl_tableaux(sbox, Partition({1}));
        ok = ok && tbox.size() == 1 && tbox[0].rows[0] == std::vector<int>({1}) &&
             m_stat(tbox[0]) == 0;
        SignedPermutation s2 = SignedPermutation::parse("1,3,2");
        auto t2 = kl_tableaux(s2, Partition({1}));
        ok = ok && t2.size() == 1 && t2[0].rows[0] == std::vector<int>({2}) && m_stat(t2[0]) == 1;
        record(out, "tableau base cases", ok);
    }
    {
        bool ok = true;
        for (const auto& lam :
             {Partition({1}), Partition({2}), Partition({2, 1})}) {
            SignedPermutation w = max_grassmannian(lam.parts, 3);
            if (stanley_coeff(w, lam) != 1) ok = false;
        }
        ok = ok && stanley_coeff(SignedPermutation::parse("1,3,2"), Partition({1})) == 2;
        ok = ok && stanley_coeff(SignedPermutation::parse("-2,-1,3"), Partition({1})) == 1;
        record(out, "Stanley coefficient examples", ok);
    }
    {
        bool ok = true;
        // degree filter and m(T) >= 0 across W~_3
        for (const auto& u : all_elements(3)) {
            for (int wt = 0; wt <= 6; ++wt) {
                for (const auto& lam : partitions_of(wt, wt == 0 ? 1 : wt)) {
                    if (wt != u.length()) {
                        if (stanley_coeff(u, lam) != 0) ok = false;
                        continue;
                    }
                    for (const auto& t : kl_tableaux(u, lam))
                        if (m_stat(t) < 0) ok = false;
                }
            }
        }
        record(out, "degree filter and m >= 0", ok);
    }
    {
        bool ok = true;
        ok = ok && f_coeff(SignedPermutation::parse("3,2,1"), Partition({1}),
                           PermutationA::parse("2,3,1")) == 2;
        ok = ok && f_coeff(SignedPermutation::parse("2,1,3"), Partition({1}),
                           PermutationA::identity(3)) == 1;
        ok = ok && f_coeff(SignedPermutation::parse("3,2,1"), Partition({2}),
                           PermutationA::identity(3)) == 0;
        record(out, "f-coefficient examples", ok);
    }
    {
        bool ok = true;
        BHExpansion ebox = bh_expansion(SignedPermutation::parse("-2,-1,3"));
        ok = ok && ebox.coeffs.size() == 1 &&
             ebox.coeffs.begin()->first ==
                 std::make_pair(Partition({1}), PermutationA::identity(3)) &&
             ebox.coeffs.begin()->second == 1;
        BHExpansion eid = bh_expansion(SignedPermutation::identity(3));
        ok = ok && eid.coeffs.size() == 1 &&
             eid.coeffs.begin()->first == std::make_pair(Partition(), PermutationA::identity(3));
        for (const auto& w : all_elements(3))
            for (const auto& [key, f] : bh_expansion(w).coeffs) {
                if (key.first.weight() + key.second.length() != w.length()) ok = false;
                if (f <= 0) ok = false;
            }
        record(out, "expansion keys respect the grading", ok);
    }
    return out;
}

// --- suite: table ---------------------------------------------------------

Checks check_table() {
    Checks out;
    {
        bool ok = true;
        ok = ok && render_dw(SignedPermutation::parse("-2,-1,3"), 3) == "P[1]";
        ok = ok && render_dw(SignedPermutation::parse("-3,-1,2"), 3) == "P[2]";
        ok = ok && render_dw(SignedPermutation::parse("-3,-2,1"), 3) == "P[2,1]";
        ok = ok && render_dw(SignedPermutation::parse("2,1,3"), 3) == "P[1] - S[2,1,3]";
        ok = ok && render_dw(SignedPermutation::parse("1,3,2"), 3) == "2*P[1] - S[1,3,2]";
        ok = ok &&
             render_dw(SignedPermutation::parse("3,2,1"), 3) ==
                 "P[2,1] - P[2]*S[2,1,3] - P[2]*S[1,3,2] + P[1]*S[3,1,2] + 2*P[1]*S[2,3,1] - "
                 "S[3,2,1]";
        ok = ok && render_dw(SignedPermutation::parse("3,-1,-2"), 3) ==
                       "-P[2,1]*S[1,3,2] + P[2]*S[3,1,2] + P[2]*S[2,3,1] - P[1]*S[3,2,1]";
        ok = ok && render_dw(SignedPermutation::parse("1,-2,-3"), 3) == "-P[2,1]*S[3,2,1]";
        record(out, "rendered rows match the golden transcription", ok);
    }
    {
        bool ok = true;
        // maximal Grassmannian classes come out as pure P~ polynomials
        for (const auto& lam : {Partition({1}), Partition({2}), Partition({2, 1})}) {
            SignedPermutation w = max_grassmannian(lam.parts, 3);
            if (ortho_schubert(w, 3) != ptilde_x(lam, 3)) ok = false;
        }
        record(out, "Grassmannian rows are P~ classes", ok);
    }
    {
        bool ok = true;
        for (int n : {3, 4}) {
            Polynomial sum(n);
            for (int i = 1; i <= n; ++i) sum += Polynomial::variable(n, i);
            SignedPermutation sbox = SignedPermutation::parse(n == 3 ? "-2,-1,3" : "-2,-1,3,4");
            if (ortho_schubert(sbox, n) != sum.scaled(half())) ok = false;
            SignedPermutation s1 = SignedPermutation::parse(n == 3 ? "2,1,3" : "2,1,3,4");
            Polynomial expect = sum.scaled(half()) - Polynomial::variable(n, 1);
            if (ortho_schubert(s1, n) != expect) ok = false;
            for (int i = 2; i < n; ++i) {
                std::vector<int> oneline;
                for (int v = 1; v <= n; ++v) oneline.push_back(v);
                std::swap(oneline[i - 1], oneline[i]);
                SignedPermutation si(oneline);
                Polynomial tail(n);
                for (int v = i + 1; v <= n; ++v) tail += Polynomial::variable(n, v);
                if (ortho_schubert(si, n) != tail) ok = false;
            }
        }
        record(out, "simple reflection classes", ok);
    }
    return out;
}

// --- suite: dual-path -------------------------------------------------------

bool dual_path_matches(const SignedPermutation& w, int n) {
    Polynomial dw = ortho_schubert(w, n);
    if (dw.is_zero() || dw.degree() != w.length() || !dw.is_homogeneous()) return false;
    DExpansion ex = expand_in_d_basis(dw, n);
    if (!ex.ideal_sector().empty()) return false;  // uniqueness: F sector only
    std::map<DBasisIndex, Rational> expect;
    for (const auto& [key, f] : bh_expansion(w).coeffs)
        if (key.first.in_f(n - 1)) expect.emplace(DBasisIndex{key.first, key.second}, Rational(f));
    if (expect.empty()) return false;
    return ex.coeffs == expect;
}

Checks check_dual_path() {
    Checks out;
    {
        bool ok = true;
        for (const auto& w : all_elements(3))
            if (!dual_path_matches(w, 3)) ok = false;
        record(out, "tableau vs expansion coefficients on W~_3", ok);
    }
    {
        bool ok = true;
        std::mt19937 rng(kSeed + 2);
        for (const auto& w : sample_elements(4, 50, rng))
            if (!dual_path_matches(w, 4)) ok = false;
        record(out, "tableau vs expansion coefficients on 50 random W~_4", ok);
    }
    return out;
}

// --- suite: dd-property -------------------------------------------------------

Checks check_dd_property() {
    Checks out;
    {
        bool ok = true;
        for (const auto& w : all_elements(3))
            for (const char* pi : {"2,1,3", "1,3,2"})
                if (!divided_difference_property(w, PermutationA::parse(pi), 3).matches)
                    ok = false;
        record(out, "property over W~_3 x {s_1, s_2}", ok);
    }
    {
        bool ok = true;
        std::mt19937 rng(kSeed + 3);
        auto perms = all_permutations(4);
        std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
        for (const auto& w : sample_elements(4, 12, rng)) {
            for (int t = 0; t < 3; ++t) {
                const auto& pi = perms[pick(rng)];
                if (!divided_difference_property(w, pi, 4).matches) ok = false;
            }
        }
        record(out, "property sampled over W~_4", ok);
    }
    {
        bool ok = true;
        // Table-derived instance: del_1 D_{(-2,-3,1)} = -D_{(-3,-2,1)}
        auto rec = divided_difference_property(SignedPermutation::parse("-2,-3,1"),
                                               PermutationA::parse("2,1,3"), 3);
        ok = ok && rec.matches && rec.lhs == -ptilde_x(Partition({2, 1}), 3);
        record(out, "worked instance from the table", ok);
    }
    return out;
}

// --- suite: structure ---------------------------------------------------------

Checks check_structure() {
    Checks out;
    auto elems = all_elements(3);
    std::map<std::pair<std::vector<int>, std::vector<int>>, StructureConstants> table;
    bool nonneg = true, lengths = true, integral = true;
    for (const auto& u : elems)
        for (const auto& v : elems) {
            StructureConstants sc = structure_constants(u, v, 3);
            for (const auto& [w, d] : sc.schubert) {
                if (d < 0) nonneg = false;
                if (w.length() != u.length() + v.length() && d != 0) lengths = false;
            }
            if (!sc.non_integral_flags.empty()) integral = false;
            table.emplace(std::make_pair(u.entries, v.entries), std::move(sc));
        }
    record(out, "576 products: nonnegative integer constants", nonneg);
    record(out, "576 products: support only in the additive degree", lengths);
    record(out, "576 products: lifted constants integral", integral);
    {
        bool ok = true;
        for (const auto& u : elems)
            for (const auto& v : elems) {
                const auto& a = table.at({u.entries, v.entries});
                const auto& b = table.at({v.entries, u.entries});
                if (a.schubert != b.schubert) ok = false;
                if (a.ideal != b.ideal) ok = false;
            }
        record(out, "commutativity d_uv = d_vu", ok);
    }
    {
        bool ok = true;
        SignedPermutation e = SignedPermutation::identity(3);
        for (const auto& v : elems) {
            const auto& sc = table.at({e.entries, v.entries});
            if (sc.ideal.size() != 0 || sc.schubert.size() != 1 ||
                sc.schubert.begin()->first != v || sc.schubert.begin()->second != 1)
                ok = false;
        }
        record(out, "identity acts trivially", ok);
    }
    {
        SignedPermutation sbox = SignedPermutation::parse("-2,-1,3");
        const auto& sc = table.at({sbox.entries, sbox.entries});
        bool ok = sc.schubert.size() == 1 &&
                  sc.schubert.begin()->first == SignedPermutation::parse("-3,-1,2") &&
                  sc.schubert.begin()->second == 1;
        ok = ok && sc.ideal.size() == 1 &&
             sc.ideal.begin()->first ==
                 DBasisIndex{Partition({1, 1}), PermutationA::identity(3)} &&
             sc.ideal.begin()->second == Rational(1);
        record(out, "P~_1 squared splits as P~_2 + P~_{1,1}", ok);
    }
    {
        bool ok = true;
        // dyadic closure along the full pipeline
        for (const auto& [key, sc] : table)
            for (const auto& [idx, d] : sc.ideal)
                if (!d.is_dyadic()) ok = false;
        for (const auto& w : elems) {
            Polynomial p = ortho_schubert(w, 3);
            for (const auto& [e, c] : p.terms())
                if (!c.is_dyadic()) ok = false;
        }
        record(out, "dyadic coefficients throughout", ok);
    }
    return out;
}

// --- suite: restrict -----------------------------------------------------------

Checks check_restrict() {
    Checks out;
    {
        // The restriction identity is a statement about Schubert classes: the
        // restricted polynomial and D_w(X_m) agree modulo J_m.  They coincide
        // on the nose whenever the dropped basis shapes (lambda_1 = m) carry
        // no coefficient; the longest element of W~_2 is the exception, where
        // the difference is exactly P~_2(X_2) in J_2.
        bool ok = true;
        for (const auto& w : all_elements(2)) {
            Polynomial diff = restrict_ortho_schubert(w, 2, 3) - ortho_schubert(w, 2);
            if (!expand_in_d_basis(diff, 2).schubert_sector().empty()) ok = false;
        }
        record(out, "W~_2 -> W~_3 restriction identities modulo J_2", ok);
    }
    {
        bool ok = true;
        for (const char* s : {"1,2", "2,1", "-2,-1"}) {
            SignedPermutation w = SignedPermutation::parse(s);
            if (restrict_ortho_schubert(w, 2, 3) != ortho_schubert(w, 2)) ok = false;
        }
        Polynomial diff = restrict_ortho_schubert(SignedPermutation::parse("-1,-2"), 2, 3) -
                          ortho_schubert(SignedPermutation::parse("-1,-2"), 2);
        ok = ok && diff == ptilde_x(Partition({2}), 2);
        record(out, "exact equality off the longest element", ok);
    }
    {
        bool ok = restrict_ortho_schubert(SignedPermutation::parse("-2,-1"), 2, 3) ==
                  (Polynomial::variable(2, 1) + Polynomial::variable(2, 2)).scaled(half());
        record(out, "s_box restricts to the half sum", ok);
    }
    return out;
}

// --- suite: ideal ---------------------------------------------------------------

Checks check_ideal() {
    Checks out;
    {
        bool ok = true;
        for (int n : {2, 3}) {
            Polynomial h = elementary_squares(1, n);
            IdealDecomposition dec = ideal_decompose(h, n);
            if (dec.f[0] != Polynomial::constant(n, Rational(1))) ok = false;
            for (size_t i = 1; i < dec.f.size(); ++i)
                if (!dec.f[i].is_zero()) ok = false;
            if (!dec.g.is_zero()) ok = false;
        }
        record(out, "e_1(X^2) decomposes to itself", ok);
    }
    {
        // x1^3 at n = 2; the canonical routing must satisfy the identity
        Polynomial h = Polynomial::monomial(2, {3, 0}, Rational(1));
        IdealDecomposition dec = ideal_decompose(h, 2);
        Polynomial check = elementary_squares(1, 2) * dec.f[0] + elementary(2, 2) * dec.g;
        record(out, "x1^3 decomposition identity", check == h);
    }
    {
        bool ok = false;
        try {
            ideal_decompose(Polynomial::variable(2, 1) + Polynomial::variable(2, 2), 2);
        } catch (const std::domain_error&) {
            ok = true;
        }
        record(out, "degree-one rejection names the sector", ok);
    }
    {
        bool ok = true;
        // random A-combinations of ideal generators round-trip
        std::mt19937 rng(kSeed + 4);
        for (int n : {2, 3}) {
            auto coefs = random_polys(n, 4, 2, rng);
            for (size_t t = 0; t + 1 < coefs.size(); t += 2) {
                Polynomial h(n);
                for (int i = 1; i <= n - 1; ++i)
                    h += elementary_squares(i, n) * coefs[t];
                h += elementary(n, n) * coefs[t + 1];
                IdealDecomposition dec = ideal_decompose(h, n);
                Polynomial check(n);
                for (int i = 1; i <= n - 1; ++i)
                    check += elementary_squares(i, n) * dec.f[i - 1];
                check += elementary(n, n) * dec.g;
                if (check != h) ok = false;
            }
        }
        record(out, "random ideal elements round-trip", ok);
    }
    {
        bool ok = true;
        // the D_w together with the ideal-sector D_{lambda,pi} give a basis
        // of every graded piece (checked through degree 6 for n <= 3)
        for (int n = 2; n <= 3; ++n) {
            std::vector<SignedPermutation> elems = all_elements(n);
            auto perms = all_permutations(n);
            for (int d = 0; d <= 6; ++d) {
                std::vector<Polynomial> family;
                for (const auto& w : elems)
                    if (w.length() == d) family.push_back(ortho_schubert(w, n));
                for (const auto& pi : perms) {
                    int rest = d - pi.length();
                    if (rest < 0) continue;
                    for (const auto& lam : partitions_of(rest, n))
                        if (!lam.in_f(n - 1)) family.push_back(d_basis(lam, pi, n));
                }
                // dimension of the degree-d graded piece: C(d + n - 1, n - 1)
                size_t monomials = 1, den = 1;
                for (int i = 1; i <= n - 1; ++i) {
                    monomials *= d + i;
                    den *= i;
                }
                monomials /= den;
                if (family.size() != monomials) ok = false;
                std::map<Exponents, size_t, GrevlexLess> rows;
                for (const auto& p : family)
                    for (const auto& [e, c] : p.terms()) rows.emplace(e, rows.size());
                std::vector<std::vector<Rational>> m(
                    rows.size(), std::vector<Rational>(family.size(), Rational(0)));
                for (size_t c = 0; c < family.size(); ++c)
                    for (const auto& [e, coef] : family[c].terms()) m[rows.at(e)][c] = coef;
                if (rank_exact(m) != static_cast<int>(family.size())) ok = false;
            }
        }
        record(out, "D_w and ideal-sector indices form a graded basis", ok);
    }
    {
        bool ok = true;
        // expansion worked example: e_1(X_3^2) = 4 P~_{(1,1)}
        DExpansion ex = expand_in_d_basis(elementary_squares(1, 3), 3);
        DBasisIndex key{Partition({1, 1}), PermutationA::identity(3)};
        ok = ok && ex.coeffs.size() == 1 && ex.coeffs.count(key) == 1 &&
             ex.coeffs.at(key) == Rational(4);
        // x1 at n = 2 is minus the degree-one type A class
        DExpansion ex2 = expand_in_d_basis(Polynomial::variable(2, 1), 2);
        DBasisIndex key2{Partition(), PermutationA::parse("2,1")};
        ok = ok && ex2.coeffs.size() == 1 && ex2.coeffs.count(key2) == 1 &&
             ex2.coeffs.at(key2) == Rational(-1);
        record(out, "expansion worked examples", ok);
    }
    return out;
}

// --- suite: arakelov -------------------------------------------------------------

Checks check_arakelov() {
    Checks out;
    BottChernPlugin empty_plugin;
    {
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            if (ctilde_pair_component(2, n, empty_plugin) != prop6_ctilde_pair_2(n)) ok = false;
        record(out, "assembled degree-(1,1) pairing component", ok);
    }
    {
        bool ok = true;
        for (int n : {2, 3}) {
            FormElement trace(n);
            FormMatrix kk = curvature_E(n, n);
            for (int i = 0; i < n; ++i) trace += kk[i][i];
            FormElement minus_sum(n);
            for (int i = 1; i <= n; ++i) minus_sum -= x_form(i, n);
            if (trace != minus_sum) ok = false;
            for (int k = 1; k <= n; ++k) {
                FormElement q = chern_form(Bundle::Q, k, 1, n);
                if (q != -x_form(n + 1 - k, n)) ok = false;
            }
            auto anomaly = chern_anomaly(n);
            if (anomaly.count(1)) ok = false;  // c_1 additivity at form level
        }
        record(out, "curvature identities", ok);
    }
    {
        bool ok = true;
        ok = ok && top_relation(2, empty_plugin) ==
                       omega_block(2, true, 1, 2) - omega_block(2, false, 1, 2);
        FormElement dt = dtilde_convert(Partition({1, 1}), PermutationA::identity(2), 2,
                                        empty_plugin);
        FormElement expect =
            (omega_block(2, false, 1, 2) + omega_block(2, true, 1, 2)).scaled(half());
        ok = ok && dt == expect;
        record(out, "top relation and D~ conversion at n = 2", ok);
    }
    {
        bool ok = true;
        // frozen oracle values for the four admissible monomials at n = 2
        ok = ok && arith_degree({3, 0}, 2, empty_plugin) == Rational(0);
        ok = ok && arith_degree({2, 1}, 2, empty_plugin) == Rational(-1);
        ok = ok && arith_degree({1, 2}, 2, empty_plugin) == Rational(0);
        ok = ok && arith_degree({0, 3}, 2, empty_plugin) == Rational(3);
        record(out, "arithmetic degrees at n = 2", ok);
    }
    {
        bool ok = true;
        // decomposition independence: hand decompositions against canonical
        auto degree_of = [&](const Polynomial& f1, const Polynomial& g) {
            FormElement form =
                -(ctilde_pair_component(2, 2, empty_plugin) * evaluate_at_forms(f1, 2));
            form += top_relation(2, empty_plugin) * evaluate_at_forms(g, 2);
            return integrate(form, 2) * half();
        };
        Polynomial x1 = Polynomial::variable(2, 1);
        Polynomial x2 = Polynomial::variable(2, 2);
        ok = ok && degree_of(x1, -x2) == Rational(0);       // x1^3
        ok = ok && degree_of(Polynomial(2), x1) == Rational(-1);  // x1^2 x2
        ok = ok && degree_of(Polynomial(2), x2) == Rational(0);   // x1 x2^2
        ok = ok && degree_of(x2, -x1) == Rational(3);       // x2^3
        // a nontrivial syzygy represents zero and must evaluate to zero
        Polynomial e2 = elementary(2, 2);
        Polynomial e1sq = elementary_squares(1, 2);
        ok = ok && degree_of(e2 * x1, -(e1sq * x1)) == Rational(0);
        FormElement zero_form =
            -(ctilde_pair_component(2, 2, empty_plugin) * evaluate_at_forms(e2 * x1, 2));
        zero_form += top_relation(2, empty_plugin) * evaluate_at_forms(-(e1sq * x1), 2);
        ok = ok && zero_form.is_zero();
        record(out, "decomposition independence", ok);
    }
    {
        // additivity: deg(x1^3) + deg(x1 x2^2) from the joint decomposition
        Polynomial x1 = Polynomial::variable(2, 1);
        FormElement joint =
            -(ctilde_pair_component(2, 2, BottChernPlugin{}) * evaluate_at_forms(x1, 2));
        Rational lhs = integrate(joint, 2) * half();
        Rational rhs = arith_degree({3, 0}, 2, BottChernPlugin{}) +
                       arith_degree({1, 2}, 2, BottChernPlugin{});
        record(out, "additivity across the split of e_1(X^2) x_1", lhs == rhs);
    }
    {
        bool ok = false;
        std::string message;
        try {
            arith_degree({7, 0, 0}, 3, BottChernPlugin{});
        } catch (const std::domain_error& e) {
            message = e.what();
            ok = message.find("requires Bott-Chern input") != std::string::npos;
        }
        record(out, "plugin contract failure is explicit and named", ok, message);
    }
    {
        bool ok = true;
        // a degree-correct plugin unlocks the n = 3 path end to end
        BottChernPlugin stub;
        stub.n = 3;
        stub.components.emplace("ctilde_pair_4", FormElement(3));
        stub.components.emplace("ctilde_dual_3", FormElement(3));
        stub.validate();
        try {
            Rational r = arith_degree({7, 0, 0}, 3, stub);
            (void)r;
        } catch (...) {
            ok = false;
        }
        record(out, "plugin-supplied components complete the n = 3 path", ok);
    }
    {
        bool ok = true;
        // arithmetic product worked example at n = 2
        ArithClass a;
        a.n = 2;
        a.form = FormElement(2);
        a.schubert.emplace(SignedPermutation::parse("-2,-1"), Rational(1));
        ArithClass sq = chow_product(a, a, 2, BottChernPlugin{});
        ok = ok && sq.schubert.empty();
        ok = ok && sq.form == omega_block(2, true, 1, 2);
        ArithClass unit;
        unit.n = 2;
        unit.form = FormElement(2);
        unit.schubert.emplace(SignedPermutation::identity(2), Rational(1));
        ArithClass same = chow_product(unit, a, 2, BottChernPlugin{});
        ok = ok && same.schubert == a.schubert && same.form == a.form;
        // pure form classes multiply to zero in the invariant model
        ArithClass eta;
        eta.n = 2;
        eta.form = omega_block(2, false, 1, 2);
        ArithClass zero = chow_product(eta, eta, 2, BottChernPlugin{});
        ok = ok && zero.schubert.empty() && zero.form.is_zero();
        record(out, "arithmetic products at n = 2", ok);
    }
    {
        bool ok = true;
        // generators anticommute and square to zero; even blocks commute
        std::mt19937 rng(kSeed + 9);
        std::uniform_int_distribution<int> fam(0, 3), pair(0, 2);
        const int ps[3] = {1, 1, 2}, qs[3] = {2, 3, 3};
        for (int t = 0; t < 40; ++t) {
            int i = pair(rng), j = pair(rng);
            FormElement a = FormElement::generator(3, static_cast<GenFamily>(fam(rng)), ps[i], qs[i]);
            FormElement b = FormElement::generator(3, static_cast<GenFamily>(fam(rng)), ps[j], qs[j]);
            if (!(a * a).is_zero()) ok = false;
            if (!(a * b + b * a).is_zero()) ok = false;
        }
        for (int t = 0; t < 10; ++t) {
            int i = pair(rng), j = pair(rng);
            FormElement u = omega_block(3, false, ps[i], qs[i]);
            FormElement v = omega_block(3, true, ps[j], qs[j]);
            if (u * v != v * u) ok = false;
        }
        record(out, "anticommutativity and nilpotence", ok);
    }
    {
        bool ok = true;
        // x-form display lines
        ok = ok && x_form(1, 2) == omega_block(2, true, 1, 2) - omega_block(2, false, 1, 2);
        FormElement xn = x_form(3, 3);
        FormElement expect = omega_block(3, false, 1, 3) + omega_block(3, false, 2, 3) +
                             omega_block(3, true, 1, 3) + omega_block(3, true, 2, 3);
        ok = ok && xn == expect;
        FormElement sum(2);
        sum += x_form(1, 2);
        sum += x_form(2, 2);
        ok = ok && sum == omega_block(2, true, 1, 2).scaled(Rational(2));
        record(out, "x-forms match the displayed identities", ok);
    }
    return out;
}

// --- suite: integration -----------------------------------------------------------

Checks check_integration() {
    Checks out;
    {
        bool ok = true;
        ok = ok && integrate(top_form(2), 2) == Rational(1);
        ok = ok && integrate(top_form(3), 3) == Rational(1, 12);
        record(out, "top form volume", ok);
    }
    {
        bool ok = true;
        ok = ok && integrate(point_class_form(2), 2) == Rational(1);
        ok = ok && integrate(point_class_form(3), 3) == Rational(1);
        record(out, "point class integrates to one", ok);
    }
    return out;
}

// --- suite: rationality --------------------------------------------------------

Checks check_rationality() {
    Checks out;
    bool ok = true;
    // every admissible call must complete: the top-form multiple assertion
    // and the Schubert-part emptiness are enforced inside arith_degree
    for (int k = 0; k <= 3; ++k) {
        try {
            Rational r = arith_degree({3 - k, k}, 2, BottChernPlugin{});
            if (r.den() <= 0) ok = false;
        } catch (...) {
            ok = false;
        }
    }
    record(out, "admissible degrees evaluate to exact rationals", ok);
    {
        bool ok2 = false;
        try {
            arith_degree({1, 1}, 2, BottChernPlugin{});
        } catch (const std::domain_error&) {
            ok2 = true;
        }
        record(out, "degree mismatch is rejected", ok2);
    }
    {
        // the top-form-multiple assertion holds for every admissible rank-3
        // monomial once degree-correct Bott-Chern inputs are supplied
        bool ok3 = true;
        BottChernPlugin stub;
        stub.n = 3;
        stub.components.emplace("ctilde_pair_4", FormElement(3));
        stub.components.emplace("ctilde_dual_3", FormElement(3));
        try {
            for (int a = 0; a <= 7 && ok3; ++a)
                for (int b = 0; a + b <= 7; ++b) {
                    Rational r = arith_degree({a, b, 7 - a - b}, 3, stub);
                    if (r.den() <= 0) ok3 = false;
                }
        } catch (...) {
            ok3 = false;
        }
        record(out, "rank-3 monomials stay rational along the plugin path", ok3);
    }
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"poly",     "weyl",      "ptilde",    "schubert-a", "stanley",
            "table",    "dual-path", "dd-property", "structure", "restrict",
            "ideal",    "arakelov",  "integration", "rationality"};
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    if (suite == "poly") return check_poly();
    if (suite == "weyl") return check_weyl();
    if (suite == "ptilde") return check_ptilde();
    if (suite == "schubert-a") return check_schubert_a();
    if (suite == "stanley") return check_stanley();
    if (suite == "table") return check_table();
    if (suite == "dual-path") return check_dual_path();
    if (suite == "dd-property") return check_dd_property();
    if (suite == "structure") return check_structure();
    if (suite == "restrict") return check_restrict();
    if (suite == "ideal") return check_ideal();
    if (suite == "arakelov") return check_arakelov();
    if (suite == "integration") return check_integration();
    if (suite == "rationality") return check_rationality();
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto& name : suite_names()) {
            auto part = run_suite(name);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace schubertd::verify
