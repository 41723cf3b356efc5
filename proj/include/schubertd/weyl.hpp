#pragma once

#include <string>
#include <vector>

#include "schubertd/polynomial.hpp"

namespace schubertd {

// Word in the generators of W~_n; letter 0 stands for s_box, letters
// 1..n-1 for the simple transpositions.
using Word = std::vector<int>;

// Element of the symmetric group S_n in one-line notation.
struct PermutationA {
    std::vector<int> entries;

    PermutationA() = default;
    explicit PermutationA(std::vector<int> e);

    static PermutationA identity(int n);
    static PermutationA longest(int n);  // (n, n-1, ..., 1)

    int n() const { return static_cast<int>(entries.size()); }
    int operator()(int i) const { return entries[i - 1]; }  // 1-based

    PermutationA inverse() const;
    int length() const;  // inversion count

    // Appends fixed points up to size n_prime.
    PermutationA extend(int n_prime) const;

    friend bool operator==(const PermutationA& a, const PermutationA& b) {
        return a.entries == b.entries;
    }
    friend bool operator<(const PermutationA& a, const PermutationA& b) {
        return a.entries < b.entries;
    }

    std::string str() const;                          // "2,3,1"
    static PermutationA parse(const std::string& s);  // comma separated
};

// u o v, i.e. (uv)(i) = u(v(i)).
PermutationA compose(const PermutationA& u, const PermutationA& v);

// All n! elements in lexicographic order.
std::vector<PermutationA> all_permutations(int n);

// Lexicographically least reduced word (letters 1..n-1).
Word canonical_reduced_word_a(const PermutationA& w);

// Element of the type D Weyl group W~_n: a signed permutation with an even
// number of negative entries.
struct SignedPermutation {
    std::vector<int> entries;

    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> e);  // validates membership

    static SignedPermutation identity(int n);

    int n() const { return static_cast<int>(entries.size()); }
    // Signed application: w(-i) = -w(i), 1-based.
    int apply(int i) const;

    SignedPermutation inverse() const;

    // Closed-form length: inversions plus pairs i<j with w_i + w_j < 0.
    int length() const;

    bool is_identity() const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
        return !(a == b);
    }
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        return a.entries < b.entries;
    }

    std::string str() const;                               // "-1,4,-3,2"
    static SignedPermutation parse(const std::string& s);  // comma separated
};

// Group product u o v with signed composition (uv)(i) = u(v(i)).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);

// Right multiplication by a generator (0 = box) as a one-line operation.
SignedPermutation apply_generator(const SignedPermutation& u, int letter);
// Left multiplication by a generator (acts on values).
SignedPermutation apply_generator_left(const SignedPermutation& u, int letter);

// u multiplied on the right by s_{a_1} ... s_{a_r} in the written order;
// evaluate_word starts from the identity.
SignedPermutation compose(const SignedPermutation& u, const Word& word);
SignedPermutation evaluate_word(int n, const Word& word);

bool is_reduced(int n, const Word& word);

// Every box replaced by 1.
Word flatten(const Word& word);

// Exhaustive set of reduced words; refuses length(w) beyond the bound.
std::vector<Word> reduced_words(const SignedPermutation& w, int max_length = 12);

// Lexicographically least reduced word under box < 1 < 2 < ...
Word canonical_reduced_word(const SignedPermutation& w);

// True when right multiplication by the generator shortens w.
bool is_right_descent(const SignedPermutation& w, int letter);

// Longest elements: w_0 in W~_n and the reversal in S_n.
SignedPermutation longest_element(int n);
PermutationA longest_element_a(int n);

// Maximal Grassmannian element w_lambda for a strict partition with parts
// <= n-1 (parts passed as a plain decreasing vector).
SignedPermutation max_grassmannian(const std::vector<int>& lambda, int n);

// Embedding of W~_n into S_{2n} compatible with the skew diagonal form.
PermutationA phi_embed(const SignedPermutation& w);

// W~_m -> W~_n using the first m components.
SignedPermutation embed(const SignedPermutation& w, int n);

// All 2^(n-1) n! elements, sorted by one-line notation.
std::vector<SignedPermutation> all_elements(int n);

std::string word_str(const Word& w);
Word parse_word(const std::string& s);

// --- polynomial action -------------------------------------------------

// w acting on f by (w f)(x_1,...,x_n) = f(x_{w(1)},...,x_{w(n)}), with
// x_{-i} meaning -x_i.  This is a left action.
Polynomial act(const SignedPermutation& w, const Polynomial& f);

// Divided difference along a word, rightmost letter applied first, so that
// the operator of a reduced word a_1...a_l is the composition of the
// single-letter operators in the written order.  Rejects non-reduced words.
Polynomial divided_difference_word(const Polynomial& f, const Word& word);

// Same composition for a type A word (letters 1..n-1), no reducedness check.
Polynomial divided_difference_word_a(const Polynomial& f, const Word& word);

}  // namespace schubertd
