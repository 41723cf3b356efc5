#pragma once

#include <string>

#include "schubertd/stanley.hpp"

namespace schubertd {

// Human-readable rendering of D_w as a signed combination of P[lambda] and
// S[pi] factors, with the (-1)^{l(pi)} signs folded into the displayed
// coefficients.  Terms are ordered by |lambda| descending, then by the
// one-line form of pi descending.
std::string render_dw(const SignedPermutation& w, int n);

// One line per element of W~_n, ordered by (length, one-line notation):
// "<one-line> : <rendering>".  `jobs` > 1 computes rows in parallel.
std::string render_table(int n, int jobs = 1);

}  // namespace schubertd
