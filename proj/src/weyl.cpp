#include "schubertd/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubertd {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("not a comma-separated integer list: \"" + s + "\"");
        }
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

// --- PermutationA --------------------------------------------------------

PermutationA::PermutationA(std::vector<int> e) : entries(std::move(e)) {
    std::vector<bool> seen(entries.size(), false);
    for (int v : entries) {
        if (v < 1 || v > n() || seen[v - 1])
            throw std::invalid_argument("PermutationA: not a permutation");
        seen[v - 1] = true;
    }
}

PermutationA PermutationA::identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return PermutationA(std::move(e));
}

PermutationA PermutationA::longest(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = n - i;
    return PermutationA(std::move(e));
}

PermutationA PermutationA::inverse() const {
    std::vector<int> e(entries.size());
    for (int i = 0; i < n(); ++i) e[entries[i] - 1] = i + 1;
    PermutationA r;
    r.entries = std::move(e);
    return r;
}

int PermutationA::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (entries[i] > entries[j]) ++inv;
    return inv;
}

PermutationA PermutationA::extend(int n_prime) const {
    if (n_prime < n()) throw std::invalid_argument("PermutationA::extend: shrinking");
    std::vector<int> e = entries;
    for (int v = n() + 1; v <= n_prime; ++v) e.push_back(v);
    PermutationA r;
    r.entries = std::move(e);
    return r;
}

std::string PermutationA::str() const { return join_ints(entries); }

PermutationA PermutationA::parse(const std::string& s) {
    return PermutationA(parse_int_list(s));
}

PermutationA compose(const PermutationA& u, const PermutationA& v) {
    if (u.n() != v.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> e(u.n());
    for (int i = 1; i <= u.n(); ++i) e[i - 1] = u(v(i));
    PermutationA r;
    r.entries = std::move(e);
    return r;
}

std::vector<PermutationA> all_permutations(int n) {
    std::vector<PermutationA> out;
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    do {
        PermutationA p;
        p.entries = e;
        out.push_back(std::move(p));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

Word canonical_reduced_word_a(const PermutationA& w) {
    // Greedy smallest left descent; i is a left descent iff the position of
    // i+1 precedes the position of i.
    Word word;
    PermutationA cur = w;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        PermutationA inv = cur.inverse();
        for (int i = 1; i < cur.n(); ++i) {
            if (inv(i) > inv(i + 1)) {
                word.push_back(i);
                // left multiply by s_i: swap values i, i+1
                for (auto& v : cur.entries) {
                    if (v == i)
                        v = i + 1;
                    else if (v == i + 1)
                        v = i;
                }
                progressed = true;
                break;
            }
        }
    }
    return word;
}

// --- SignedPermutation ---------------------------------------------------

SignedPermutation::SignedPermutation(std::vector<int> e) : entries(std::move(e)) {
    int negatives = 0;
    std::vector<bool> seen(entries.size(), false);
    for (int v : entries) {
        int a = std::abs(v);
        if (a < 1 || a > n() || seen[a - 1])
            throw std::invalid_argument("SignedPermutation: absolute values must permute 1..n");
        seen[a - 1] = true;
        if (v < 0) ++negatives;
    }
    if (negatives % 2 != 0)
        throw std::invalid_argument("SignedPermutation: odd number of sign changes (not in W~_n)");
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    SignedPermutation w;
    w.entries = std::move(e);
    return w;
}

int SignedPermutation::apply(int i) const {
    if (i > 0) return entries[i - 1];
    return -entries[-i - 1];
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> e(entries.size());
    for (int i = 1; i <= n(); ++i) {
        int v = entries[i - 1];
        if (v > 0)
            e[v - 1] = i;
        else
            e[-v - 1] = -i;
    }
    SignedPermutation r;
    r.entries = std::move(e);
    return r;
}

int SignedPermutation::length() const {
    int len = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j) {
            if (entries[i] > entries[j]) ++len;
            if (entries[i] + entries[j] < 0) ++len;
        }
    return len;
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (entries[i] != i + 1) return false;
    return true;
}

std::string SignedPermutation::str() const { return join_ints(entries); }

SignedPermutation SignedPermutation::parse(const std::string& s) {
    return SignedPermutation(parse_int_list(s));
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
    if (u.n() != v.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> e(u.n());
    for (int i = 1; i <= u.n(); ++i) e[i - 1] = u.apply(v.apply(i));
    SignedPermutation r;
    r.entries = std::move(e);
    return r;
}

SignedPermutation apply_generator(const SignedPermutation& u, int letter) {
    SignedPermutation r = u;
    if (letter == 0) {
        if (u.n() < 2) throw std::invalid_argument("apply_generator: box needs n >= 2");
        int a = r.entries[0], b = r.entries[1];
        r.entries[0] = -b;
        r.entries[1] = -a;
    } else {
        if (letter < 1 || letter >= u.n())
            throw std::invalid_argument("apply_generator: letter out of range");
        std::swap(r.entries[letter - 1], r.entries[letter]);
    }
    return r;
}

SignedPermutation apply_generator_left(const SignedPermutation& u, int letter) {
    SignedPermutation r = u;
    if (letter == 0) {
        // swap-and-negate values 1 and 2
        for (auto& v : r.entries) {
            if (v == 1)
                v = -2;
            else if (v == -1)
                v = 2;
            else if (v == 2)
                v = -1;
            else if (v == -2)
                v = 1;
        }
    } else {
        for (auto& v : r.entries) {
            if (v == letter)
                v = letter + 1;
            else if (v == letter + 1)
                v = letter;
            else if (v == -letter)
                v = -(letter + 1);
            else if (v == -(letter + 1))
                v = -letter;
        }
    }
    return r;
}

SignedPermutation compose(const SignedPermutation& u, const Word& word) {
    SignedPermutation r = u;
    for (int a : word) r = apply_generator(r, a);
    return r;
}

SignedPermutation evaluate_word(int n, const Word& word) {
    return compose(SignedPermutation::identity(n), word);
}

bool is_reduced(int n, const Word& word) {
    SignedPermutation w = evaluate_word(n, word);
    return w.length() == static_cast<int>(word.size());
}

Word flatten(const Word& word) {
    Word out = word;
    for (int& a : out)
        if (a == 0) a = 1;
    return out;
}

bool is_right_descent(const SignedPermutation& w, int letter) {
    if (letter == 0) return w.entries[0] + w.entries[1] < 0;
    return w.entries[letter - 1] > w.entries[letter];
}

namespace {
void reduced_words_rec(const SignedPermutation& w, Word& stack, std::vector<Word>& out) {
    if (w.is_identity()) {
        out.emplace_back(stack.rbegin(), stack.rend());
        return;
    }
    for (int g = 0; g < w.n(); ++g) {
        if (is_right_descent(w, g)) {
            stack.push_back(g);
            reduced_words_rec(apply_generator(w, g), stack, out);
            stack.pop_back();
        }
    }
}
}  // namespace

std::vector<Word> reduced_words(const SignedPermutation& w, int max_length) {
    if (w.length() > max_length)
        throw std::domain_error("reduced_words: length " + std::to_string(w.length()) +
                                " exceeds the enumeration bound " + std::to_string(max_length));
    std::vector<Word> out;
    Word stack;
    reduced_words_rec(w, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

Word canonical_reduced_word(const SignedPermutation& w) {
    // Greedy smallest left descent (box sorts before 1).  A reduced word can
    // start with g exactly when g is a left descent, so this is lex-least.
    Word word;
    SignedPermutation cur = w;
    while (!cur.is_identity()) {
        SignedPermutation inv = cur.inverse();
        int chosen = -1;
        for (int g = 0; g < cur.n(); ++g) {
            if (is_right_descent(inv, g)) {
                chosen = g;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("canonical_reduced_word: no descent");
        word.push_back(chosen);
        cur = apply_generator_left(cur, chosen);
    }
    return word;
}

SignedPermutation longest_element(int n) {
    if (n < 2) throw std::invalid_argument("longest_element: n >= 2 required");
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = -(i + 1);
    if (n % 2 != 0) e[0] = 1;
    return SignedPermutation(std::move(e));
}

PermutationA longest_element_a(int n) { return PermutationA::longest(n); }

SignedPermutation max_grassmannian(const std::vector<int>& lambda, int n) {
    if (n < 2) throw std::invalid_argument("max_grassmannian: n >= 2 required");
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1 || lambda[i] > n - 1)
            throw std::invalid_argument("max_grassmannian: parts must lie in 1..n-1");
        if (i + 1 < lambda.size() && lambda[i] <= lambda[i + 1])
            throw std::invalid_argument("max_grassmannian: partition must be strict");
    }
    const int ell = static_cast<int>(lambda.size());
    std::vector<bool> used(n + 1, false);
    used[1] = true;
    for (int p : lambda) used[p + 1] = true;
    std::vector<int> mu;  // remaining values in increasing order
    for (int v = 2; v <= n; ++v)
        if (!used[v]) mu.push_back(v);
    std::vector<int> e;
    for (int p : lambda) e.push_back(-(p + 1));
    e.push_back(ell % 2 == 0 ? 1 : -1);
    for (int v : mu) e.push_back(v);
    return SignedPermutation(std::move(e));
}

PermutationA phi_embed(const SignedPermutation& w) {
    const int n = w.n();
    std::vector<int> e(2 * n);
    for (int i = 1; i <= n; ++i) {
        int v = w.entries[n - i];  // w_{n+1-i}
        e[i - 1] = v > 0 ? n + 1 - v : n - v;
    }
    for (int i = n + 1; i <= 2 * n; ++i) e[i - 1] = 2 * n + 1 - e[2 * n - i];
    return PermutationA(std::move(e));
}

SignedPermutation embed(const SignedPermutation& w, int n) {
    if (n < w.n()) throw std::invalid_argument("embed: target rank too small");
    std::vector<int> e = w.entries;
    for (int v = w.n() + 1; v <= n; ++v) e.push_back(v);
    return SignedPermutation(std::move(e));
}

std::vector<SignedPermutation> all_elements(int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) % 2 != 0) continue;
            std::vector<int> e = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) e[i] = -e[i];
            SignedPermutation w;
            w.entries = std::move(e);
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string word_str(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(w[i]);
    }
    return s;
}

Word parse_word(const std::string& s) {
    Word out;
    std::istringstream is(s);
    int v;
    while (is >> v) out.push_back(v);
    return out;
}

// --- polynomial action ---------------------------------------------------

Polynomial act(const SignedPermutation& w, const Polynomial& f) {
    if (w.n() != f.nvars()) throw std::invalid_argument("act: rank/variable mismatch");
    Polynomial r(f.nvars());
    Exponents e(f.nvars());
    for (const auto& [e0, c] : f.terms()) {
        int sign = 1;
        for (int i = 0; i < f.nvars(); ++i) {
            int v = w.entries[i];
            e[std::abs(v) - 1] = e0[i];
            if (v < 0 && e0[i] % 2 != 0) sign = -sign;
        }
        // term x_1^{a_1}...x_n^{a_n} maps to prod (sgn(w_i) x_{|w_i|})^{a_i}
        r.add_term(e, sign < 0 ? -c : c);
    }
    return r;
}

Polynomial divided_difference_word(const Polynomial& f, const Word& word) {
    if (!is_reduced(f.nvars(), word))
        throw std::invalid_argument("divided_difference_word: word '" + word_str(word) +
                                    "' is not reduced");
    Polynomial r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.divided_difference(*it);
    return r;
}

Polynomial divided_difference_word_a(const Polynomial& f, const Word& word) {
    Polynomial r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.divided_difference(*it);
    return r;
}

}  // namespace schubertd
