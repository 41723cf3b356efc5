#include "schubertd/symfunc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace schubertd {

Polynomial elementary(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("elementary: k out of range");
    // coefficient of t^k in prod (1 + x_i t), built degree by degree
    std::vector<Polynomial> coef(k + 1, Polynomial(n));
    coef[0] = Polynomial::constant(n, Rational(1));
    for (int i = 1; i <= n; ++i) {
        for (int d = std::min(k, i); d >= 1; --d) {
            Polynomial shifted(n);
            Exponents e;
            for (const auto& [e0, c] : coef[d - 1].terms()) {
                e = e0;
                e[i - 1] += 1;
                shifted.add_term(e, c);
            }
            coef[d] += shifted;
        }
    }
    return coef[k];
}

Polynomial power_sum(int k, int n) {
    if (k < 1) throw std::invalid_argument("power_sum: k must be positive");
    Polynomial p(n);
    for (int i = 1; i <= n; ++i) {
        Exponents e(n, 0);
        e[i - 1] = k;
        p.add_term(e, Rational(1));
    }
    return p;
}

Polynomial elementary_squares(int k, int n) {
    Polynomial ek = elementary(k, n);
    Polynomial out(n);
    Exponents e;
    for (const auto& [e0, c] : ek.terms()) {
        e = e0;
        for (auto& v : e) v *= 2;
        out.add_term(e, c);
    }
    return out;
}

Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& m) {
    const size_t dim = m.size();
    if (dim % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    for (const auto& row : m)
        if (row.size() != dim) throw std::invalid_argument("pfaffian: matrix not square");
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j <= i; ++j)
            if (m[i][j] != -m[j][i])
                throw std::invalid_argument("pfaffian: matrix not antisymmetric");
    if (dim == 0) return Polynomial::constant(m.empty() ? 0 : m[0][0].nvars(), Rational(1));
    const int nv = m[0][0].nvars();

    // Recursive expansion over surviving index subsets.
    std::vector<size_t> idx(dim);
    for (size_t i = 0; i < dim; ++i) idx[i] = i;
    struct Rec {
        const std::vector<std::vector<Polynomial>>& m;
        int nv;
        Polynomial run(const std::vector<size_t>& ids) {
            if (ids.empty()) return Polynomial::constant(nv, Rational(1));
            Polynomial acc(nv);
            for (size_t j = 1; j < ids.size(); ++j) {
                std::vector<size_t> rest;
                for (size_t k = 1; k < ids.size(); ++k)
                    if (k != j) rest.push_back(ids[k]);
                Polynomial sub = run(rest);
                Polynomial term = m[ids[0]][ids[j]] * sub;
                // signs alternate: pf = sum_j (-1)^j m_{1j} pf(rest), j ordinal
                if (j % 2 == 0) term = -term;
                acc += term;
            }
            return acc;
        }
    } rec{m, nv};
    return rec.run(idx);
}

Polynomial ptilde_pair_sym(int i, int j, int alphabet) {
    if (i < 0 || j < 0) throw std::invalid_argument("ptilde_pair: negative index");
    const int n = alphabet;
    auto pt = [&](int k) {  // P~_k in the e-alphabet
        if (k == 0) return Polynomial::constant(n, Rational(1));
        if (k > n) throw std::invalid_argument("ptilde_pair: alphabet too small");
        return Polynomial::variable(n, k).scaled(half());
    };
    if (j == 0) return pt(i);  // one-row convention, not the displayed formula
    Polynomial acc = pt(i) * pt(j);
    for (int r = 1; r <= j - 1; ++r) {
        Polynomial t = (pt(i + r) * pt(j - r)).scaled(Rational(2));
        acc += (r % 2 != 0) ? -t : t;
    }
    Polynomial tail = pt(i + j);
    acc += (j % 2 != 0) ? -tail : tail;
    return acc;
}

Polynomial ptilde_sym(const Partition& lambda, int alphabet) {
    int need = lambda.part(1) + lambda.part(2);
    if (lambda.len() == 1) need = lambda.part(1);
    int n = alphabet < 0 ? std::max(need, 0) : alphabet;
    if (n < need) throw std::invalid_argument("ptilde_sym: alphabet too small");
    const int ell = lambda.len();
    if (ell == 0) return Polynomial::constant(n, Rational(1));
    if (ell == 1) return Polynomial::variable(n, lambda.part(1)).scaled(half());
    if (ell == 2) return ptilde_pair_sym(lambda.part(1), lambda.part(2), n);
    const int dim = (ell % 2 == 0) ? ell : ell + 1;  // pad one zero part if odd
    std::vector<std::vector<Polynomial>> m(dim, std::vector<Polynomial>(dim, Polynomial(n)));
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            Polynomial v = ptilde_pair_sym(lambda.part(a + 1), lambda.part(b + 1), n);
            m[a][b] = v;
            m[b][a] = -v;
        }
    return pfaffian(m);
}

Polynomial specialize_e(const Polynomial& sym, const std::vector<Polynomial>& values,
                        int target_nvars) {
    return sym.substitute(values, target_nvars);
}

namespace {
std::map<std::pair<std::vector<int>, int>, Polynomial> g_ptilde_x_cache;
std::mutex g_ptilde_x_mutex;
}  // namespace

Polynomial ptilde_x(const Partition& lambda, int n) {
    {
        std::lock_guard<std::mutex> lock(g_ptilde_x_mutex);
        auto it = g_ptilde_x_cache.find({lambda.parts, n});
        if (it != g_ptilde_x_cache.end()) return it->second;
    }
    Polynomial sym = ptilde_sym(lambda);
    std::vector<Polynomial> values;
    for (int k = 1; k <= sym.nvars(); ++k)
        values.push_back(k <= n ? elementary(k, n) : Polynomial(n));
    Polynomial result = specialize_e(sym, values, n);
    std::lock_guard<std::mutex> lock(g_ptilde_x_mutex);
    g_ptilde_x_cache.emplace(std::make_pair(lambda.parts, n), result);
    return result;
}

Polynomial ptilde_pair_x(int i, int j, int n) {
    Polynomial sym = ptilde_pair_sym(i, j, i + j);
    std::vector<Polynomial> values;
    for (int k = 1; k <= sym.nvars(); ++k)
        values.push_back(k <= n ? elementary(k, n) : Polynomial(n));
    return specialize_e(sym, values, n);
}

Polynomial q_fun(int k, int m) {
    if (k < 0) throw std::invalid_argument("q_fun: negative index");
    std::vector<Polynomial> coef(k + 1, Polynomial(m));
    coef[0] = Polynomial::constant(m, Rational(1));
    // (1 + y t)/(1 - y t) = 1 + 2 sum_{j>=1} y^j t^j, one variable at a time
    for (int i = 1; i <= m; ++i) {
        std::vector<Polynomial> next = coef;
        for (int d = 1; d <= k; ++d) {
            for (int j = 1; j <= d; ++j) {
                Polynomial shifted(m);
                Exponents e;
                for (const auto& [e0, c] : coef[d - j].terms()) {
                    e = e0;
                    e[i - 1] += j;
                    shifted.add_term(e, c * Rational(2));
                }
                next[d] += shifted;
            }
        }
        coef = std::move(next);
    }
    return coef[k];
}

Polynomial schur_p(const Partition& lambda, int m) {
    Polynomial sym = ptilde_sym(lambda);
    std::vector<Polynomial> values;
    for (int k = 1; k <= sym.nvars(); ++k) values.push_back(q_fun(k, m));
    return specialize_e(sym, values, m);
}

}  // namespace schubertd
