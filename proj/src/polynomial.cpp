#include "schubertd/polynomial.hpp"

#include <atomic>
#include <sstream>

namespace schubertd {

namespace {
std::atomic<int> g_degree_cap{64};
}

int Polynomial::degree_cap() { return g_degree_cap.load(); }

void Polynomial::set_degree_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("degree cap must be positive");
    g_degree_cap.store(cap);
}

Polynomial Polynomial::apply_transposition(int i) const {
    if (i < 1 || i >= nvars_)
        throw std::invalid_argument("apply_transposition: index out of range");
    Polynomial r(nvars_);
    Exponents e;
    for (const auto& [e0, c] : terms_) {
        e = e0;
        std::swap(e[i - 1], e[i]);
        r.add_term(e, c);
    }
    return r;
}

Polynomial Polynomial::apply_box() const {
    if (nvars_ < 2) throw std::invalid_argument("apply_box: needs at least 2 variables");
    Polynomial r(nvars_);
    Exponents e;
    for (const auto& [e0, c] : terms_) {
        e = e0;
        std::swap(e[0], e[1]);
        // (-x2)^a (-x1)^b contributes (-1)^(a+b)
        r.add_term(e, ((e[0] + e[1]) % 2 != 0) ? -c : c);
    }
    return r;
}

// Divides g exactly by (x_u - s * x_v), 0-based u != v, s = +-1, using
// synthetic division in x_u.  Throws if the remainder is nonzero.
static Polynomial divide_linear(const Polynomial& g, int u, int v, int s) {
    const int n = g.nvars();
    // split g by the exponent of x_u
    std::map<int, Polynomial> layers;
    int top = 0;
    for (const auto& [e, c] : g.terms()) {
        int k = e[u];
        top = std::max(top, k);
        auto it = layers.find(k);
        if (it == layers.end()) it = layers.emplace(k, Polynomial(n)).first;
        Exponents e2 = e;
        e2[u] = 0;
        it->second.add_term(e2, c);
    }
    auto layer = [&](int k) -> Polynomial {
        auto it = layers.find(k);
        return it == layers.end() ? Polynomial(n) : it->second;
    };
    // g = sum_k c_k x_u^k; quotient q_k for k = top-1 .. 0 with
    // q_{top-1} = c_top, q_{k-1} = c_k + (s x_v) q_k, remainder c_0 + (s x_v) q_0.
    auto shift_v = [&](const Polynomial& p) {  // multiply by s * x_v
        Polynomial r(n);
        Exponents e;
        for (const auto& [e0, c] : p.terms()) {
            e = e0;
            e[v] += 1;
            r.add_term(e, s < 0 ? -c : c);
        }
        return r;
    };
    Polynomial quotient(n);
    Polynomial carry(n);  // q_k while descending
    for (int k = top; k >= 1; --k) {
        Polynomial qk = layer(k) + carry;
        Exponents e;
        for (const auto& [e0, c] : qk.terms()) {
            e = e0;
            e[u] += k - 1;
            quotient.add_term(e, c);
        }
        carry = shift_v(qk);
    }
    Polynomial remainder = layer(0) + carry;
    if (!remainder.is_zero())
        throw std::logic_error("divided_difference: inexact division (remainder nonzero)");
    return quotient;
}

Polynomial Polynomial::divided_difference(int index) const {
    if (index == 0) {
        if (nvars_ < 2)
            throw std::invalid_argument("divided_difference: box operator needs n >= 2");
        // The box root is oriented as -(x_1 + x_2): with the type A operators
        // divided by x_i - x_{i+1}, this is the unique orientation for which
        // the braid relation with the second transposition holds, making the
        // word operators independent of the chosen reduced word.
        Polynomial num = apply_box() - *this;
        return divide_linear(num, 0, 1, -1);
    }
    if (index < 1 || index >= nvars_)
        throw std::invalid_argument("divided_difference: index out of range");
    Polynomial num = *this - apply_transposition(index);
    return divide_linear(num, index - 1, index, +1);
}

Polynomial Polynomial::restrict_vars(int m) const {
    if (m < 0 || m > nvars_) throw std::invalid_argument("restrict_vars: bad target size");
    Polynomial r(m);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (int i = m; i < nvars_; ++i)
            if (e[i] != 0) {
                keep = false;
                break;
            }
        if (keep) r.add_term(Exponents(e.begin(), e.begin() + m), c);
    }
    return r;
}

Polynomial Polynomial::extend_vars(int n_prime) const {
    if (n_prime < nvars_) throw std::invalid_argument("extend_vars: shrinking not allowed");
    Polynomial r(n_prime);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        e2.resize(n_prime, 0);
        r.add_term(e2, c);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values, int target_nvars) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw std::invalid_argument("substitute: wrong number of values");
    const int m = target_nvars;
    for (const auto& v : values)
        if (v.nvars() != m) throw std::invalid_argument("substitute: inconsistent value rings");
    Polynomial acc(m);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(m, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * values[i];
        acc += t;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a.is_negative()) {
                os << "-";
                a = -a;
            }
            first = false;
        } else if (a.is_negative()) {
            os << " - ";
            a = -a;
        } else {
            os << " + ";
        }
        bool has_vars = total_degree(e) > 0;
        if (!has_vars || a != Rational(1)) {
            os << a.str();
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace schubertd
