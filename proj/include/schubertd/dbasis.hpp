#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubertd/partition.hpp"
#include "schubertd/schubert_a.hpp"
#include "schubertd/stanley.hpp"
#include "schubertd/symfunc.hpp"
#include "schubertd/weyl.hpp"

namespace schubertd {

// Index of the basis element D_{lambda,pi} = P~_lambda(X_n) S_pi(-X_n);
// lambda ranges over G_n, pi over S_n.
struct DBasisIndex {
    Partition lambda;
    PermutationA pi;

    int degree() const { return lambda.weight() + pi.length(); }

    friend bool operator<(const DBasisIndex& a, const DBasisIndex& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.pi < b.pi;
    }
    friend bool operator==(const DBasisIndex& a, const DBasisIndex& b) {
        return a.lambda == b.lambda && a.pi == b.pi;
    }
};

// Exact expansion of a polynomial over the D basis.  The Schubert sector is
// the part indexed by strict lambda with parts < n; everything else spans
// the ideal J_n.
struct DExpansion {
    int n = 0;
    std::map<DBasisIndex, Rational> coeffs;

    std::map<DBasisIndex, Rational> schubert_sector() const;  // lambda in F_{n-1}
    std::map<DBasisIndex, Rational> ideal_sector() const;     // the rest
};

Polynomial d_basis(const Partition& lambda, const PermutationA& pi, int n);

// Orthogonal Schubert polynomial: the F_{n-1} part of the Billey-Haiman
// expansion evaluated on the D basis.  Homogeneous of degree l(w).
Polynomial ortho_schubert(const SignedPermutation& w, int n);

// Expands f in the basis {D_{lambda,pi}}.  Two stages: the S_pi(-X_n)
// coefficients are peeled off with divided differences (longest pi first),
// then each symmetric coefficient is expanded in the P~_lambda(X_n) by exact
// Gaussian elimination per degree, with cached factorizations.  The result
// is verified by reconstruction, and must be dyadic whenever f is.
DExpansion expand_in_d_basis(const Polynomial& f, int n);

// h = sum_i e_i(X_n^2) f_i + e_n(X_n) g with the canonical routing: strip a
// part equal to n into g, otherwise strip two copies of the largest repeated
// part.  Rejects h not in J_n, naming the offending Schubert-sector indices.
struct IdealDecomposition {
    std::vector<Polynomial> f;  // f[i] multiplies e_{i+1}(X_n^2), i < n-1
    Polynomial g;               // multiplies e_n(X_n)
};
IdealDecomposition ideal_decompose(const Polynomial& h, int n);

// D_u D_v = sum_w d^w D_w + sum d^{lambda,pi} D_{lambda,pi}.  The Schubert
// constants are nonnegative integers vanishing unless lengths add; the ideal
// constants are expected integral, and any violation is flagged rather than
// assumed away.
struct StructureConstants {
    int n = 0;
    SignedPermutation u, v;
    std::map<SignedPermutation, long long> schubert;
    std::map<DBasisIndex, Rational> ideal;
    std::vector<DBasisIndex> non_integral_flags;
};
StructureConstants structure_constants(const SignedPermutation& u, const SignedPermutation& v,
                                       int n, const std::string& cache_dir = "");

// D_{i(w)}(X_n) with x_{m+1} = ... = x_n = 0, for w in W~_m.
Polynomial restrict_ortho_schubert(const SignedPermutation& w, int m, int n);

// Record for the divided-difference property of D_w.
struct DDPropertyCheck {
    Polynomial lhs;  // del_pi D_w
    Polynomial rhs;  // (-1)^{l(pi)} D_{w pi} or zero
    bool length_condition = false;
    bool matches = false;
};
DDPropertyCheck divided_difference_property(const SignedPermutation& w, const PermutationA& pi,
                                            int n);

// Schubert-class coefficients recovered from a Schubert-sector expansion of
// a homogeneous class of the given degree; the linear system against the
// f-coefficient vectors of the candidate D_w is solved exactly.
std::map<SignedPermutation, Rational> schubert_class_coefficients(
    const std::map<DBasisIndex, Rational>& f_sector, int n, int degree);

// Exact dense linear algebra helpers (shared with the verification suites).
std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m);
bool solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> b,
                 std::vector<Rational>& x);
int rank_exact(std::vector<std::vector<Rational>> m);

// Cache path for a structure-constant entry (sharded by hash prefix).
std::string structure_cache_path(const std::string& cache_dir, int n,
                                 const SignedPermutation& u, const SignedPermutation& v);

}  // namespace schubertd
