#pragma once

#include <vector>

#include "schubertd/partition.hpp"
#include "schubertd/polynomial.hpp"

namespace schubertd {

// e_k(X_n), p_k(X_n) and e_k(X_n^2) as polynomials in n variables.
Polynomial elementary(int k, int n);
Polynomial power_sum(int k, int n);
Polynomial elementary_squares(int k, int n);

// Pfaffian of an antisymmetric even-sized matrix over the polynomial ring,
// by recursive expansion along the first row.
Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& m);

// P~ polynomials of Pragacz-Ratajski in the abstract alphabet e_1..e_N
// (variable k of the returned polynomial is e_k).  P~_0 = 1, P~_k = e_k/2,
// two rows by the displayed quadratic formula, longer shapes by Pfaffians of
// the pair matrix padded with a trailing zero part.  The pair value at j = 0
// is P~_i itself; the two-index formula is used only for j >= 1.
Polynomial ptilde_pair_sym(int i, int j, int alphabet);
Polynomial ptilde_sym(const Partition& lambda, int alphabet = -1);

// Substitutes e_k -> values[k-1] into a polynomial over the e-alphabet;
// the result lives in a ring with target_nvars variables.
Polynomial specialize_e(const Polynomial& sym, const std::vector<Polynomial>& values,
                        int target_nvars);

// P~_lambda(X_n): the image of ptilde_sym under e_k -> e_k(X_n); memoized.
Polynomial ptilde_x(const Partition& lambda, int n);
Polynomial ptilde_pair_x(int i, int j, int n);

// q_k(Y_m): coefficient of t^k in prod_i (1 + y_i t)/(1 - y_i t).
Polynomial q_fun(int k, int m);

// Schur P-function in m variables: the image of P~_lambda under the ring
// map eta: e_k -> q_k(Y_m).  Vanishes identically for non-strict lambda.
Polynomial schur_p(const Partition& lambda, int m);

}  // namespace schubertd
