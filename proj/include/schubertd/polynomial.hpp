#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubertd/rational.hpp"

namespace schubertd {

// Exponent vector; length equals the ambient variable count.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

// Graded reverse-lexicographic order, ascending (the map's last entry is the
// leading term).  Ties on total degree break on the rightmost differing
// exponent, smaller exponent there meaning larger monomial.
struct GrevlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

// Sparse multivariate polynomial over Rational.  Zero coefficients are never
// stored; the term map is kept in canonical (grevlex) order so that
// serialization and pivoting are deterministic.  Values are immutable in
// spirit: every operation returns a fresh polynomial.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrevlexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("Polynomial: negative variable count");
    }

    static Polynomial constant(int nvars, Rational c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
        return p;
    }
    // x_i with 1-based index i.
    static Polynomial variable(int nvars, int i) {
        if (i < 1 || i > nvars) throw std::invalid_argument("Polynomial: variable index out of range");
        Polynomial p(nvars);
        Exponents e(nvars, 0);
        e[i - 1] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }
    static Polynomial monomial(int nvars, Exponents e, Rational c) {
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("Polynomial: exponent vector length mismatch");
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {  // total degree; -1 for the zero polynomial
        if (terms_.empty()) return -1;
        return total_degree(terms_.rbegin()->first);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = total_degree(terms_.begin()->first);
        return d == total_degree(terms_.rbegin()->first);
    }

    Polynomial homogeneous_part(int d) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) r.terms_.emplace(e, c);
        return r;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("Polynomial: exponent vector length mismatch");
        for (int k : e)
            if (k < 0) throw std::invalid_argument("Polynomial: negative exponent");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_vars(b);
        if (a.degree() >= 0 && b.degree() >= 0 && a.degree() + b.degree() > degree_cap())
            throw std::domain_error("Polynomial: product exceeds degree cap " +
                                    std::to_string(degree_cap()));
        Polynomial r(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    Polynomial scaled(const Rational& c) const {
        Polynomial r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // x_i -> -x_i for all i: every term picks up (-1)^(total degree).
    Polynomial negate_vars() const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, (total_degree(e) % 2 != 0) ? -c : c);
        return r;
    }

    // Action of the simple transposition s_i (swap x_i, x_{i+1}), 1-based.
    Polynomial apply_transposition(int i) const;
    // Action of s_box: (x_1, x_2) -> (-x_2, -x_1).
    Polynomial apply_box() const;

    // Divided difference for generator index in {0 (= box), 1, .., n-1}.
    // The quotient is computed by synthetic division; exactness is asserted.
    Polynomial divided_difference(int index) const;

    // Sets x_{m+1} = ... = x_n = 0 and reinterprets in m variables.
    Polynomial restrict_vars(int m) const;
    // Reinterprets in n' >= nvars variables (new variables absent).
    Polynomial extend_vars(int n_prime) const;

    // Substitutes polynomial values for every variable; the values (and the
    // result) live in a ring with target_nvars variables.
    Polynomial substitute(const std::vector<Polynomial>& values, int target_nvars) const;

    std::string str() const;  // human-readable, canonical descending order

    static int degree_cap();
    static void set_degree_cap(int cap);

private:
    void check_same_vars(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("Polynomial: mismatched variable counts (" +
                                        std::to_string(nvars_) + " vs " +
                                        std::to_string(o.nvars_) + ")");
    }

    int nvars_;
    TermMap terms_;
};

}  // namespace schubertd
