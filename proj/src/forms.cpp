#include "schubertd/forms.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace schubertd {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// lex index of the pair (p, q) with 1 <= p < q <= n
int pair_index(int n, int p, int q) { return (p - 1) * (2 * n - p) / 2 + (q - p - 1); }

int crossings(uint64_t a, uint64_t b) {
    // transpositions needed to interleave sorted b into sorted a from the right
    int parity = 0;
    while (b) {
        int bit = std::countr_zero(b);
        b &= b - 1;
        parity ^= std::popcount(a >> (bit + 1)) & 1;
    }
    return parity;
}

}  // namespace

FormElement::FormElement(int n) : n_(n) {
    if (n < 0 || 4 * pair_count(n) > 64)
        throw std::invalid_argument("FormElement: rank out of supported range");
}

int FormElement::gen_bit(int n, GenFamily fam, int p, int q) {
    int base = pair_index(n, p, q) * 2;
    switch (fam) {
        case GenFamily::lower_omega: return base;
        case GenFamily::lower_omega_bar: return base + 1;
        case GenFamily::upper_omega: return 2 * pair_count(n) + base;
        case GenFamily::upper_omega_bar: return 2 * pair_count(n) + base + 1;
    }
    throw std::logic_error("gen_bit: bad family");
}

std::tuple<GenFamily, int, int> FormElement::bit_gen(int n, int bit) {
    bool upper = bit >= 2 * pair_count(n);
    if (upper) bit -= 2 * pair_count(n);
    bool bar = bit % 2 != 0;
    int idx = bit / 2;
    int p = 1;
    while (idx >= n - p) {
        idx -= n - p;
        ++p;
    }
    int q = p + 1 + idx;
    GenFamily fam = upper ? (bar ? GenFamily::upper_omega_bar : GenFamily::upper_omega)
                          : (bar ? GenFamily::lower_omega_bar : GenFamily::lower_omega);
    return {fam, p, q};
}

std::string gen_label(GenFamily fam, int p, int q) {
    const char* base = nullptr;
    switch (fam) {
        case GenFamily::lower_omega: base = "w_l"; break;
        case GenFamily::lower_omega_bar: base = "wb_l"; break;
        case GenFamily::upper_omega: base = "w_u"; break;
        case GenFamily::upper_omega_bar: base = "wb_u"; break;
    }
    return std::string(base) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

FormElement FormElement::generator(int n, GenFamily fam, int p, int q) {
    if (p == q || p < 1 || q < 1 || p > n || q > n)
        throw std::invalid_argument("FormElement::generator: bad index pair");
    bool flipped = p > q;
    if (flipped) std::swap(p, q);
    FormElement f(n);
    f.terms_.emplace(uint64_t(1) << gen_bit(n, fam, p, q), Rational(flipped ? -1 : 1));
    return f;
}

void FormElement::add_term(uint64_t mask, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational FormElement::coeff(uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational FormElement::top_coefficient() const {
    int total = 2 * n_ * (n_ - 1);
    uint64_t full = total >= 64 ? ~uint64_t(0) : (uint64_t(1) << total) - 1;
    return coeff(full);
}

bool FormElement::is_even() const {
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) % 2 != 0) return false;
    return true;
}

FormElement FormElement::graded_part(int count) const {
    FormElement f(n_);
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) == count) f.terms_.emplace(mask, c);
    return f;
}

FormElement FormElement::operator-() const {
    FormElement f(n_);
    for (const auto& [mask, c] : terms_) f.terms_.emplace(mask, -c);
    return f;
}

FormElement& FormElement::operator+=(const FormElement& o) {
    if (o.is_zero()) return *this;
    if (n_ != o.n_) {
        if (is_zero() && n_ == 0)
            n_ = o.n_;
        else
            throw std::invalid_argument("FormElement: rank mismatch");
    }
    for (const auto& [mask, c] : o.terms_) add_term(mask, c);
    return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) { return *this += -o; }

FormElement operator*(const FormElement& a, const FormElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("FormElement: rank mismatch");
    FormElement r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma & mb) continue;  // repeated generator annihilates
            Rational c = ca * cb;
            if (crossings(ma, mb)) c = -c;
            r.add_term(ma | mb, c);
        }
    }
    return r;
}

FormElement FormElement::scaled(const Rational& c) const {
    FormElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [mask, k] : terms_) r.terms_.emplace(mask, k * c);
    return r;
}

std::string FormElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
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
        bool sep = mask == 0 || a != Rational(1);
        if (sep) os << a.str();
        uint64_t rest = mask;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            if (sep) os << "*";
            sep = true;
            auto [fam, p, q] = bit_gen(n_, bit);
            os << gen_label(fam, p, q);
        }
    }
    return os.str();
}

FormElement omega_block(int n, bool upper, int p, int q) {
    GenFamily f1 = upper ? GenFamily::upper_omega : GenFamily::lower_omega;
    GenFamily f2 = upper ? GenFamily::upper_omega_bar : GenFamily::lower_omega_bar;
    return FormElement::generator(n, f1, p, q) * FormElement::generator(n, f2, p, q);
}

FormElement top_form(int n) {
    FormElement f = FormElement::unit(n);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) f = f * omega_block(n, false, p, q);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) f = f * omega_block(n, true, p, q);
    return f;
}

FormElement x_form(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("x_form: index out of range");
    FormElement f(n);
    for (int j = 1; j < i; ++j) f += omega_block(n, false, j, i);
    for (int j = i + 1; j <= n; ++j) f -= omega_block(n, false, i, j);
    for (int p = 1; p <= n; ++p)
        if (p != i) f += omega_block(n, true, std::min(p, i), std::max(p, i));
    return f;
}

FormMatrix curvature_E(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("curvature_E: k out of range");
    FormMatrix m(k, std::vector<FormElement>(k, FormElement(n)));
    for (int a = 1; a <= k; ++a) {
        for (int b = 1; b <= k; ++b) {
            FormElement acc(n);
            // lower family, remapped: (a, j) -> (n+1-j, n+1-a) with j > k
            for (int j = k + 1; j <= n; ++j) {
                acc -= FormElement::generator(n, GenFamily::lower_omega, n + 1 - j, n + 1 - a) *
                       FormElement::generator(n, GenFamily::lower_omega_bar, n + 1 - j, n + 1 - b);
            }
            // upper family, remapped: (p, a) -> (n+1-a, n+1-p) with p != a, b;
            // generator() folds the p-vs-a orientation sign
            for (int p = 1; p <= n; ++p) {
                if (p == a || p == b) continue;
                acc -= FormElement::generator(n, GenFamily::upper_omega, n + 1 - a, n + 1 - p) *
                       FormElement::generator(n, GenFamily::upper_omega_bar, n + 1 - b, n + 1 - p);
            }
            m[a - 1][b - 1] = acc;
        }
    }
    return m;
}

namespace {

FormElement mat_trace(const FormMatrix& m, int n) {
    FormElement t(n);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

FormMatrix mat_mul(const FormMatrix& a, const FormMatrix& b, int n) {
    const size_t sz = a.size();
    FormMatrix r(sz, std::vector<FormElement>(sz, FormElement(n)));
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j)
            for (size_t k = 0; k < sz; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

// Determinant of a matrix of commuting (even) forms, Laplace along row 0.
FormElement det(const FormMatrix& m, int n) {
    const size_t sz = m.size();
    if (sz == 0) return FormElement::unit(n);
    if (sz == 1) return m[0][0];
    FormElement acc(n);
    for (size_t j = 0; j < sz; ++j) {
        if (m[0][j].is_zero()) continue;
        FormMatrix sub(sz - 1, std::vector<FormElement>(sz - 1, FormElement(n)));
        for (size_t r = 1; r < sz; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < sz; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        FormElement t = m[0][j] * det(sub, n);
        if (j % 2 != 0) t = -t;
        acc += t;
    }
    return acc;
}

FormElement chern_E(int k, int j, int n) {
    if (j == 0) return FormElement::unit(n);
    FormMatrix kk = curvature_E(k, n);
    // sum of j x j principal minors
    std::vector<int> idx(j);
    FormElement acc(n);
    // iterate over j-subsets of {0..k-1}
    for (int i = 0; i < j; ++i) idx[i] = i;
    while (true) {
        FormMatrix sub(j, std::vector<FormElement>(j, FormElement(n)));
        for (int r = 0; r < j; ++r)
            for (int c = 0; c < j; ++c) sub[r][c] = kk[idx[r]][idx[c]];
        acc += det(sub, n);
        int p = j - 1;
        while (p >= 0 && idx[p] == k - j + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < j; ++q) idx[q] = idx[q - 1] + 1;
    }
    return acc;
}

FormElement chern_Q(int k, int n) {
    // Prop.-style three-sum with the skew-diagonal remap applied pairwise;
    // Omega blocks are insensitive to the orientation flip.
    FormElement acc(n);
    for (int i = 1; i < k; ++i) acc += omega_block(n, false, n + 1 - k, n + 1 - i);
    for (int j = k + 1; j <= n; ++j) acc -= omega_block(n, false, n + 1 - j, n + 1 - k);
    for (int p = 1; p <= n; ++p)
        if (p != k)
            acc -= omega_block(n, true, std::min(n + 1 - k, n + 1 - p), std::max(n + 1 - k, n + 1 - p));
    return acc;
}

}  // namespace

FormElement chern_form(Bundle bundle, int k, int j, int n) {
    if (j < 0) throw std::invalid_argument("chern_form: negative degree");
    switch (bundle) {
        case Bundle::E:
            if (j > k) return FormElement(n);
            return chern_E(k, j, n);
        case Bundle::E_star: {
            FormElement c = chern_form(Bundle::E, k, j, n);
            return (j % 2 != 0) ? -c : c;
        }
        case Bundle::Q:
            if (j == 0) return FormElement::unit(n);
            if (j > 1) return FormElement(n);  // rank one
            return chern_Q(k, n);
        case Bundle::Q_star: {
            FormElement c = chern_form(Bundle::Q, k, j, n);
            return (j % 2 != 0) ? -c : c;
        }
    }
    throw std::logic_error("chern_form: bad bundle");
}

Rational integrate(const FormElement& f, int n) {
    if (f.n() != n && !f.is_zero()) throw std::invalid_argument("integrate: rank mismatch");
    Rational top = f.top_coefficient();
    if (top.is_zero()) return Rational(0);
    Rational vol(1);
    for (int r = 1; r <= n - 1; ++r) {
        BigInt fact(1);
        for (int t = 2; t <= 2 * r; ++t) fact *= t;
        vol *= Rational(BigInt(2), fact);
    }
    return top * vol;
}

const FormElement& BottChernPlugin::require(const std::string& label) const {
    auto it = components.find(label);
    if (it == components.end())
        throw std::domain_error("requires Bott-Chern input: " + label);
    return it->second;
}

void BottChernPlugin::validate() const {
    for (const auto& [label, form] : components) {
        int expected = -1;
        if (label.rfind("ctilde_pair_", 0) == 0)
            expected = 2 * (std::stoi(label.substr(12)) - 1);
        else if (label.rfind("ctilde_dual_", 0) == 0)
            expected = 2 * (std::stoi(label.substr(12)) - 1);
        else
            throw std::invalid_argument("BottChernPlugin: unknown component label " + label);
        for (const auto& [mask, c] : form.terms()) {
            int cnt = 0;
            for (uint64_t m = mask; m; m &= m - 1) ++cnt;
            if (cnt != expected)
                throw std::invalid_argument("BottChernPlugin: component " + label +
                                            " has a term of wrong degree");
        }
    }
}

std::map<int, FormElement> ctilde_og(int n) {
    std::map<int, FormElement> out;
    FormMatrix kk = curvature_E(n, n);
    FormMatrix power = kk;
    for (int r = 1; r <= n - 1; ++r) {
        if (r > 1) power = mat_mul(power, kk, n);
        Rational harmonic(0);
        for (int i = 1; i <= r; ++i) harmonic += Rational(1, i);
        // (-1)^r H_r p_r(E_n^*) with p_r(E_n^*) = (-1)^r Tr(K^r)
        out.emplace(r + 1, mat_trace(power, n).scaled(harmonic));
    }
    return out;
}

FormElement ctilde2_E(int n) {
    FormElement f(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) f -= omega_block(n, false, i, j);
    return f;
}

FormElement prop6_ctilde_pair_2(int n) {
    FormElement f(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            f -= omega_block(n, false, i, j).scaled(Rational(2));
            f -= omega_block(n, true, i, j).scaled(Rational(2));
        }
    return f;
}

FormElement ctilde_pair_component(int k, int n, const BottChernPlugin& plugin) {
    if (k < 1) throw std::invalid_argument("ctilde_pair_component: k must be positive");
    if (k == 1) return FormElement(n);
    if (k == 2) {
        // assembled degree-(1,1) part of the pairing identity: the sequence
        // term H_1 Tr(K_{E_n}) plus ctilde_2(E) and its dual (equal sign)
        FormElement acc = mat_trace(curvature_E(n, n), n);
        acc += ctilde2_E(n).scaled(Rational(2));
        return acc;
    }
    const FormElement& c = plugin.require("ctilde_pair_" + std::to_string(k));
    if (!c.is_zero() && c.n() != n)
        throw std::invalid_argument("plugin component ctilde_pair_" + std::to_string(k) +
                                    " has rank " + std::to_string(c.n()) + ", expected " +
                                    std::to_string(n));
    return c;
}

std::map<int, FormElement> chern_anomaly(int n) {
    // prod_i (1 - x_i) - c(E_n), split by form type
    std::vector<FormElement> prod(n + 1, FormElement(n));
    prod[0] = FormElement::unit(n);
    for (int i = 1; i <= n; ++i) {
        FormElement xi = x_form(i, n);
        for (int d = std::min(i, n); d >= 1; --d) prod[d] -= prod[d - 1] * xi;
    }
    std::map<int, FormElement> out;
    for (int d = 1; d <= n; ++d) {
        FormElement diff = prod[d] - chern_form(Bundle::E, n, d, n);
        if (!diff.is_zero()) out.emplace(d, diff);
    }
    return out;
}

FormElement top_relation(int n, const BottChernPlugin& plugin) {
    Rational harmonic(0);
    for (int i = 1; i <= n - 1; ++i) harmonic += Rational(1, i);
    FormElement acc = chern_form(Bundle::E_star, n, n - 1, n).scaled(harmonic * half());
    if (n == 2) {
        // ctilde_2(E^*) = +ctilde_2(E); nothing external needed
        acc += ctilde2_E(n);
    } else {
        const FormElement& c = plugin.require("ctilde_dual_" + std::to_string(n));
        if (!c.is_zero() && c.n() != n)
            throw std::invalid_argument("plugin component ctilde_dual_" + std::to_string(n) +
                                        " has mismatched rank");
        acc += c;
    }
    return acc;
}

FormElement evaluate_at_forms(const Polynomial& p, int n) {
    if (p.nvars() != n) throw std::invalid_argument("evaluate_at_forms: variable count != n");
    FormElement acc(n);
    std::vector<FormElement> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(x_form(i, n));
    for (const auto& [e, c] : p.terms()) {
        FormElement t = FormElement::unit(n).scaled(c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * xs[i];
        acc += t;
    }
    return acc;
}

ArithClass arith_monomial(const std::vector<int>& exponents, int n,
                          const BottChernPlugin& plugin) {
    if (static_cast<int>(exponents.size()) != n)
        throw std::invalid_argument("arith_monomial: need one exponent per variable");
    Exponents e(exponents.begin(), exponents.end());
    for (int k : e)
        if (k < 0) throw std::invalid_argument("arith_monomial: negative exponent");
    Polynomial mono = Polynomial::monomial(n, e, Rational(1));
    const int degree = total_degree(e);

    DExpansion ex = expand_in_d_basis(mono, n);
    ArithClass ac;
    ac.n = n;
    ac.form = FormElement(n);
    ac.schubert = schubert_class_coefficients(ex.schubert_sector(), n, degree);

    // the ideal part of the monomial, pushed to forms through the canonical
    // decomposition and the lifted square/top relations
    Polynomial ideal_part = mono;
    for (const auto& [w, c] : ac.schubert) ideal_part -= ortho_schubert(w, n).scaled(c);
    if (ideal_part.is_zero()) return ac;
    IdealDecomposition dec = ideal_decompose(ideal_part, n);
    for (int i = 1; i <= n - 1; ++i) {
        if (dec.f[i - 1].is_zero()) continue;
        FormElement c2i = ctilde_pair_component(2 * i, n, plugin);
        FormElement term = c2i * evaluate_at_forms(dec.f[i - 1], n);
        if (i % 2 != 0) term = -term;
        ac.form += term;
    }
    if (!dec.g.is_zero()) ac.form += top_relation(n, plugin) * evaluate_at_forms(dec.g, n);
    return ac;
}

Rational arith_degree(const std::vector<int>& exponents, int n, const BottChernPlugin& plugin) {
    int total = 0;
    for (int k : exponents) total += k;
    if (total != n * n - n + 1)
        throw std::domain_error("arith_degree: total degree must be n^2 - n + 1 = " +
                                std::to_string(n * n - n + 1));
    ArithClass ac = arith_monomial(exponents, n, plugin);
    if (!ac.schubert.empty())
        throw std::logic_error("arith_degree: unexpected Schubert part in top degree");
    uint64_t full = (uint64_t(1) << (2 * n * (n - 1))) - 1;
    for (const auto& [mask, c] : ac.form.terms())
        if (mask != full)
            throw std::logic_error("arith_degree: form part is not a multiple of the top form");
    return integrate(ac.form, n) * half();
}

FormElement dtilde_convert(const Partition& lambda, const PermutationA& pi, int n,
                           const BottChernPlugin& plugin) {
    if (lambda.in_f(n - 1))
        throw std::invalid_argument("dtilde_convert: lambda lies in F_{n-1}");
    if (!lambda.in_g(n)) throw std::invalid_argument("dtilde_convert: lambda outside G_n");
    if (lambda.part(1) == n) {
        Partition bar = lambda.remove_parts(n, 1);
        FormElement base = evaluate_at_forms(d_basis(bar, pi, n), n);
        return (base * top_relation(n, plugin)).scaled(half());
    }
    int r = lambda.largest_repeated_part();
    if (r == 0) throw std::logic_error("dtilde_convert: unroutable index");
    Partition bar = lambda.remove_parts(r, 2);
    FormElement base = evaluate_at_forms(d_basis(bar, pi, n), n);
    FormElement out = (base * ctilde_pair_component(2 * r, n, plugin)).scaled(Rational(1, 4));
    return (r % 2 != 0) ? -out : out;
}

ArithClass chow_product(const ArithClass& a, const ArithClass& b, int n,
                        const BottChernPlugin& plugin) {
    ArithClass out;
    out.n = n;
    out.form = FormElement(n);
    for (const auto& [u, au] : a.schubert) {
        for (const auto& [v, bv] : b.schubert) {
            Rational scale = au * bv;
            StructureConstants sc = structure_constants(u, v, n);
            for (const auto& [w, d] : sc.schubert) {
                auto [it, inserted] = out.schubert.emplace(w, scale * Rational(d));
                if (!inserted) it->second += scale * Rational(d);
                if (it->second.is_zero()) out.schubert.erase(it);
            }
            for (const auto& [idx, d] : sc.ideal)
                out.form += dtilde_convert(idx.lambda, idx.pi, n, plugin).scaled(scale * d);
        }
    }
    if (!b.form.is_zero())
        for (const auto& [u, au] : a.schubert)
            out.form += (evaluate_at_forms(ortho_schubert(u, n), n) * b.form).scaled(au);
    if (!a.form.is_zero())
        for (const auto& [v, bv] : b.schubert)
            out.form += (evaluate_at_forms(ortho_schubert(v, n), n) * a.form).scaled(bv);
    // form times form: dd^c of a closed invariant representative vanishes
    return out;
}

FormElement point_class_form(int n) {
    FormElement acc = FormElement::unit(n);
    for (int k = 1; k <= n - 1; ++k) {
        FormElement c = chern_form(Bundle::Q_star, k, 1, n);
        for (int t = 0; t < 2 * n - 2 * k; ++t) acc = acc * c;
    }
    Rational scale(1);
    for (int i = 1; i < n; ++i) scale *= half();
    return acc.scaled(scale);
}

}  // namespace schubertd
