#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schubertd/partition.hpp"
#include "schubertd/weyl.hpp"

namespace schubertd {

// Row filling of a Young diagram whose row word (bottom row first, each row
// left to right) is a flattened word of the target element, every row being
// a unimodal subsequence of maximum length in the word built so far.
struct KLTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // rows[0] is the top (longest) row

    // Row word a_1 ... a_l read bottom row first.
    std::vector<int> row_word() const {
        std::vector<int> w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            w.insert(w.end(), it->begin(), it->end());
        return w;
    }
};

// Strictly decreasing then strictly increasing; the single allowed equality
// is at the junction with value 1.
bool is_unimodal(const std::vector<int>& a);

// Length of the longest unimodal subsequence (not necessarily contiguous).
int max_unimodal_subsequence(const std::vector<int>& a);

// All Kraskiewicz-Lam tableaux for w of the given shape; empty unless
// |shape| = length(w).  Enumeration refuses length(w) > 20.
std::vector<KLTableau> kl_tableaux(const SignedPermutation& w, const Partition& shape);

// m(T) = l(shape) + 1 - #distinct values of s_{a_1}...s_{a_j}(1), the word
// read as type A generators.
int m_stat(const KLTableau& t);

// Type D Stanley coefficient d^u_lambda = sum over tableaux of 2^m(T).
long long stanley_coeff(const SignedPermutation& u, const Partition& lambda);

// Billey-Haiman coefficient f^w_{lambda,pi}; zero unless the length
// condition l(w pi^{-1}) = l(w) - l(pi) holds.
long long f_coeff(const SignedPermutation& w, const Partition& lambda, const PermutationA& pi);

struct BHExpansion {
    SignedPermutation element;
    // (strict partition, permutation) -> positive coefficient; every key
    // satisfies |lambda| + l(pi) = l(w).
    std::map<std::pair<Partition, PermutationA>, long long> coeffs;
};

BHExpansion bh_expansion(const SignedPermutation& w);

}  // namespace schubertd
