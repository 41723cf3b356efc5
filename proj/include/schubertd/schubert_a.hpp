#pragma once

#include "schubertd/weyl.hpp"

namespace schubertd {

// Lascoux-Schutzenberger Schubert polynomial of pi in S_n, as an n-variable
// polynomial: the divided-difference image of x_1^{n-1} x_2^{n-2} ... x_{n-1}
// along pi^{-1} pi_0.  Memoized; pi of smaller rank is extended by fixed
// points first.
Polynomial schubert_a(const PermutationA& pi, int n);

// True when the n'-variable polynomial of the extended permutation restricts
// (extra variables set to zero) to the n-variable one.
bool stability_check(const PermutationA& pi, int n, int n_prime);

}  // namespace schubertd
