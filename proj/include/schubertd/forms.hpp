#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubertd/dbasis.hpp"

namespace schubertd {

// Generator families of the invariant-form algebra on SO(2n)/B.  Index
// pairs are normalized to p < q at construction, flipping the sign.
enum class GenFamily { lower_omega, lower_omega_bar, upper_omega, upper_omega_bar };

std::string gen_label(GenFamily fam, int p, int q);

// Element of the anticommutative algebra on the 4*C(n,2) invariant one-form
// generators.  Terms map ordered generator subsets (bitmask over the
// canonical ordering) to rational coefficients.  The canonical ordering is
// lower pairs lexicographically with omega before omega-bar, then the upper
// pairs, so the top form Omega is the full mask with coefficient one.
class FormElement {
public:
    FormElement() : n_(0) {}
    explicit FormElement(int n);

    static FormElement unit(int n) {
        FormElement f(n);
        f.terms_.emplace(0, Rational(1));
        return f;
    }
    // Single generator with index normalization; p != q required.
    static FormElement generator(int n, GenFamily fam, int p, int q);

    int n() const { return n_; }
    int generator_count() const { return 2 * n_ * (n_ - 1); }
    const std::map<uint64_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(uint64_t mask, const Rational& c);
    Rational coeff(uint64_t mask) const;
    Rational top_coefficient() const;  // coefficient of the full product

    // True when every term uses an even number of generators.
    bool is_even() const;
    // Restriction to terms with exactly `count` generators.
    FormElement graded_part(int count) const;

    FormElement operator-() const;
    FormElement& operator+=(const FormElement& o);
    FormElement& operator-=(const FormElement& o);
    friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
    friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
    friend FormElement operator*(const FormElement& a, const FormElement& b);  // wedge
    FormElement scaled(const Rational& c) const;

    friend bool operator==(const FormElement& a, const FormElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormElement& a, const FormElement& b) { return !(a == b); }

    std::string str() const;

    // Canonical bit position of a normalized generator.
    static int gen_bit(int n, GenFamily fam, int p, int q);
    // Inverse of gen_bit.
    static std::tuple<GenFamily, int, int> bit_gen(int n, int bit);

private:
    int n_;
    std::map<uint64_t, Rational> terms_;
};

using FormMatrix = std::vector<std::vector<FormElement>>;

// Degree-(1,1) blocks Omega_{pq} (lower) and Omega^{pq} (upper).
FormElement omega_block(int n, bool upper, int p, int q);
// The top invariant form: the ordered product of all Omega blocks.
FormElement top_form(int n);

// Chern-Weil data in the skew-diagonal realization (all index remaps folded
// in once and for all).
FormElement x_form(int i, int n);
FormMatrix curvature_E(int k, int n);

enum class Bundle { E, E_star, Q, Q_star };
// c_j of the metrized bundle; Q bundles have rank one.
FormElement chern_form(Bundle bundle, int k, int j, int n);

// Exact integral over SO(2n)/B: top coefficient times prod_{r<n} 2/(2r)!.
Rational integrate(const FormElement& f, int n);

// External Bott-Chern inputs.  Components carry labels "ctilde_pair_<k>"
// for the k-th component of ctilde(E,E*) (k = 2i >= 4) and "ctilde_dual_<n>"
// for ctilde_n(E*); anything the built-in identities do not determine must
// be supplied here.
struct BottChernPlugin {
    int n = 0;
    std::map<std::string, FormElement> components;

    bool has(const std::string& label) const { return components.count(label) != 0; }
    const FormElement& require(const std::string& label) const;
    void validate() const;  // degree check per component
};

// Bott-Chern form of the subbundle sequence, component attached to c_k
// (form type (k-1,k-1)), for k = 2..n.
std::map<int, FormElement> ctilde_og(int n);

// Components of ctilde(E,E*): k = 1 vanishes, k = 2 is assembled from the
// built-in identities, even k >= 4 come from the plugin.
FormElement ctilde_pair_component(int k, int n, const BottChernPlugin& plugin);
// The closed formula for the degree-(1,1) component (used as the oracle).
FormElement prop6_ctilde_pair_2(int n);
FormElement ctilde2_E(int n);  // -sum Omega_{ij}

// Total Chern form difference prod(1 - x_i) - c(E_n) as graded components;
// this is dd^c of the filtration Bott-Chern form, pushed to forms.
std::map<int, FormElement> chern_anomaly(int n);

// Form representative of the product x_1 ... x_n of arithmetic classes.
FormElement top_relation(int n, const BottChernPlugin& plugin);

// Substitute x_i -> x_form(i, n).
FormElement evaluate_at_forms(const Polynomial& p, int n);

// Element of the arithmetic Chow model: a Schubert-basis combination plus a
// purely archimedean form part.
struct ArithClass {
    int n = 0;
    std::map<SignedPermutation, Rational> schubert;
    FormElement form;
};

// The monomial x^k as an arithmetic class, split along the Schubert basis
// with the ideal part pushed to invariant forms.
ArithClass arith_monomial(const std::vector<int>& exponents, int n, const BottChernPlugin& plugin);

// Arithmetic Chern number of a monomial of total degree n^2 - n + 1: the
// form part is checked to be a multiple of the top form and halved-integrated.
Rational arith_degree(const std::vector<int>& exponents, int n, const BottChernPlugin& plugin);

// Form representative of D_{lambda,pi}(xhat) for lambda outside F_{n-1}.
FormElement dtilde_convert(const Partition& lambda, const PermutationA& pi, int n,
                           const BottChernPlugin& plugin);

// Product in the arithmetic Chow model: Schubert times Schubert through the
// lifted structure constants, Schubert times form through wedge with the
// Chern-form image, form times form vanishing for closed invariant forms.
ArithClass chow_product(const ArithClass& a, const ArithClass& b, int n,
                        const BottChernPlugin& plugin);

// (1/2^{n-1}) prod_k c_1(Q_k^*)^{2n-2k}, Poincare dual to a point.
FormElement point_class_form(int n);

}  // namespace schubertd
