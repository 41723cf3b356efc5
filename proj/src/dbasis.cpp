#include "schubertd/dbasis.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>

#include "schubertd/jsonio.hpp"

namespace schubertd {

std::map<DBasisIndex, Rational> DExpansion::schubert_sector() const {
    std::map<DBasisIndex, Rational> out;
    for (const auto& [k, c] : coeffs)
        if (k.lambda.in_f(n - 1)) out.emplace(k, c);
    return out;
}

std::map<DBasisIndex, Rational> DExpansion::ideal_sector() const {
    std::map<DBasisIndex, Rational> out;
    for (const auto& [k, c] : coeffs)
        if (!k.lambda.in_f(n - 1)) out.emplace(k, c);
    return out;
}

namespace {

std::mutex g_cache_mutex;
std::map<std::tuple<std::vector<int>, std::vector<int>, int>, Polynomial> g_dbasis_cache;
std::map<std::pair<std::vector<int>, int>, Polynomial> g_dw_cache;

}  // namespace

Polynomial d_basis(const Partition& lambda, const PermutationA& pi, int n) {
    if (!lambda.in_g(n)) throw std::invalid_argument("d_basis: lambda_1 > n");
    if (pi.n() != n) throw std::invalid_argument("d_basis: permutation rank mismatch");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_dbasis_cache.find({lambda.parts, pi.entries, n});
        if (it != g_dbasis_cache.end()) return it->second;
    }
    Polynomial p = ptilde_x(lambda, n) * schubert_a(pi, n).negate_vars();
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_dbasis_cache.emplace(std::make_tuple(lambda.parts, pi.entries, n), p);
    return p;
}

Polynomial ortho_schubert(const SignedPermutation& w, int n) {
    if (w.n() != n) throw std::invalid_argument("ortho_schubert: rank mismatch");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_dw_cache.find({w.entries, n});
        if (it != g_dw_cache.end()) return it->second;
    }
    Polynomial acc(n);
    for (const auto& [key, f] : bh_expansion(w).coeffs) {
        const auto& [lambda, pi] = key;
        if (!lambda.in_f(n - 1)) continue;
        acc += d_basis(lambda, pi, n).scaled(Rational(f));
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_dw_cache.emplace(std::make_pair(w.entries, n), acc);
    return acc;
}

// --- exact linear algebra -------------------------------------------------

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("invert_matrix: singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational factor = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= factor * m[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

bool solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> b,
                 std::vector<Rational>& x) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(b[p], b[r]);
        Rational pv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= pv;
        b[r] /= pv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return false;  // inconsistent
    if (pivot_col.size() != cols)
        throw std::logic_error("solve_exact: system is not of full column rank");
    x.assign(cols, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return true;
}

int rank_exact(std::vector<std::vector<Rational>> m) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// --- expansion --------------------------------------------------------------

namespace {

// Cached inverse of the P~ basis matrix on sorted monomials, per (n, degree).
struct PtildeBasis {
    std::vector<Partition> lambdas;    // columns
    std::vector<Exponents> monomials;  // rows: weakly decreasing exponents
    std::map<Exponents, size_t, GrevlexLess> monomial_index;
    std::vector<std::vector<Rational>> inverse;
};

std::map<std::pair<int, int>, PtildeBasis> g_ptilde_basis;
std::mutex g_ptilde_basis_mutex;

const PtildeBasis& ptilde_basis(int n, int d) {
    std::lock_guard<std::mutex> lock(g_ptilde_basis_mutex);
    auto it = g_ptilde_basis.find({n, d});
    if (it != g_ptilde_basis.end()) return it->second;
    PtildeBasis basis;
    basis.lambdas = partitions_of(d, n);
    for (const auto& mu : partitions_of(d, d, n)) {
        Exponents e(mu.parts.begin(), mu.parts.end());
        e.resize(n, 0);
        basis.monomial_index.emplace(e, basis.monomials.size());
        basis.monomials.push_back(std::move(e));
    }
    if (basis.lambdas.size() != basis.monomials.size())
        throw std::logic_error("ptilde_basis: index sets of unequal size");
    const size_t sz = basis.lambdas.size();
    std::vector<std::vector<Rational>> m(sz, std::vector<Rational>(sz, Rational(0)));
    for (size_t c = 0; c < sz; ++c) {
        Polynomial p = ptilde_x(basis.lambdas[c], n);
        for (const auto& [e, coef] : p.terms()) {
            auto itm = basis.monomial_index.find(e);
            if (itm != basis.monomial_index.end()) m[itm->second][c] = coef;
        }
    }
    basis.inverse = invert_matrix(std::move(m));
    return g_ptilde_basis.emplace(std::make_pair(n, d), std::move(basis)).first->second;
}

// Expands a homogeneous symmetric polynomial in the P~_lambda(X_n).
std::map<Partition, Rational> expand_symmetric(const Polynomial& sym, int n, int d) {
    const PtildeBasis& basis = ptilde_basis(n, d);
    std::vector<Rational> b(basis.monomials.size(), Rational(0));
    for (const auto& [e, c] : sym.terms()) {
        auto it = basis.monomial_index.find(e);
        if (it != basis.monomial_index.end()) b[it->second] = c;
    }
    std::map<Partition, Rational> out;
    for (size_t i = 0; i < basis.lambdas.size(); ++i) {
        Rational acc(0);
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) acc += basis.inverse[i][j] * b[j];
        if (!acc.is_zero()) out.emplace(basis.lambdas[i], acc);
    }
    return out;
}

bool is_symmetric(const Polynomial& p) {
    for (int i = 1; i < p.nvars(); ++i)
        if (p.apply_transposition(i) != p) return false;
    return true;
}

}  // namespace

DExpansion expand_in_d_basis(const Polynomial& f, int n) {
    if (f.nvars() != n) throw std::invalid_argument("expand_in_d_basis: variable count != n");
    DExpansion ex;
    ex.n = n;
    if (f.is_zero()) return ex;

    bool input_dyadic = true;
    for (const auto& [e, c] : f.terms())
        if (!c.is_dyadic()) input_dyadic = false;

    // Stage 1: peel off S_pi(-X_n) coefficients, longest pi first.  With rem
    // supported on levels <= l(pi), del_pi rem = (-1)^{l(pi)} c_pi exactly.
    std::vector<PermutationA> perms = all_permutations(n);
    std::stable_sort(perms.begin(), perms.end(), [](const PermutationA& a, const PermutationA& b) {
        return a.length() > b.length();
    });
    const int fdeg = f.degree();
    Polynomial rem = f;
    std::map<PermutationA, Polynomial> sym_coeffs;
    size_t i = 0;
    while (i < perms.size()) {
        const int level = perms[i].length();
        std::vector<std::pair<PermutationA, Polynomial>> found;
        for (; i < perms.size() && perms[i].length() == level; ++i) {
            if (level > fdeg) continue;
            Polynomial c = divided_difference_word_a(rem, canonical_reduced_word_a(perms[i]));
            if (c.is_zero()) continue;
            if (level % 2 != 0) c = -c;
            if (!is_symmetric(c))
                throw std::logic_error("expand_in_d_basis: non-symmetric coefficient extracted");
            found.emplace_back(perms[i], std::move(c));
        }
        for (auto& [pi, c] : found) {
            rem -= c * schubert_a(pi, n).negate_vars();
            sym_coeffs.emplace(std::move(pi), std::move(c));
        }
    }
    if (!rem.is_zero()) throw std::logic_error("expand_in_d_basis: nonzero remainder");

    // Stage 2: expand every symmetric coefficient in the P~ basis, degree by
    // degree.
    for (const auto& [pi, c] : sym_coeffs) {
        for (int d = 0; d <= c.degree(); ++d) {
            Polynomial part = c.homogeneous_part(d);
            if (part.is_zero()) continue;
            for (auto& [lambda, coef] : expand_symmetric(part, n, d))
                ex.coeffs.emplace(DBasisIndex{lambda, pi}, coef);
        }
    }

    // Reconstruction and dyadicity checks.
    Polynomial back(n);
    for (const auto& [k, c] : ex.coeffs) {
        back += d_basis(k.lambda, k.pi, n).scaled(c);
        if (input_dyadic && !c.is_dyadic())
            throw std::logic_error("expand_in_d_basis: non-dyadic coefficient from dyadic input");
    }
    if (back != f) throw std::logic_error("expand_in_d_basis: reconstruction failed");
    return ex;
}

IdealDecomposition ideal_decompose(const Polynomial& h, int n) {
    DExpansion ex = expand_in_d_basis(h, n);
    auto offending = ex.schubert_sector();
    if (!offending.empty()) {
        std::ostringstream os;
        os << "ideal_decompose: input not in J_" << n << "; Schubert-sector support:";
        for (const auto& [k, c] : offending)
            os << " (" << k.lambda.str() << "; " << k.pi.str() << ")";
        throw std::domain_error(os.str());
    }
    IdealDecomposition dec;
    dec.f.assign(n - 1, Polynomial(n));
    dec.g = Polynomial(n);
    for (const auto& [k, c] : ex.coeffs) {
        if (k.lambda.part(1) == n) {
            Partition bar = k.lambda.remove_parts(n, 1);
            dec.g += d_basis(bar, k.pi, n).scaled(c * half());
        } else {
            int r = k.lambda.largest_repeated_part();
            if (r == 0) throw std::logic_error("ideal_decompose: unroutable index");
            Partition bar = k.lambda.remove_parts(r, 2);
            dec.f[r - 1] += d_basis(bar, k.pi, n).scaled(c * Rational(1, 4));
        }
    }
    Polynomial check(n);
    for (int i = 1; i <= n - 1; ++i) check += elementary_squares(i, n) * dec.f[i - 1];
    check += elementary(n, n) * dec.g;
    if (check != h) throw std::logic_error("ideal_decompose: reassembly failed");
    return dec;
}

namespace {

std::map<int, std::vector<SignedPermutation>> g_elements_cache;
std::mutex g_elements_mutex;

const std::vector<SignedPermutation>& cached_elements(int n) {
    std::lock_guard<std::mutex> lock(g_elements_mutex);
    auto it = g_elements_cache.find(n);
    if (it == g_elements_cache.end()) it = g_elements_cache.emplace(n, all_elements(n)).first;
    return it->second;
}

}  // namespace

std::map<SignedPermutation, Rational> schubert_class_coefficients(
    const std::map<DBasisIndex, Rational>& f_sector, int n, int degree) {
    std::map<SignedPermutation, Rational> out;
    std::vector<SignedPermutation> candidates;
    for (const auto& w : cached_elements(n))
        if (w.length() == degree) candidates.push_back(w);
    if (candidates.empty()) {
        if (!f_sector.empty())
            throw std::logic_error("schubert_class_coefficients: sector without candidates");
        return out;
    }
    std::map<DBasisIndex, size_t> row_index;
    std::vector<std::map<size_t, Rational>> cols;
    for (const auto& w : candidates) {
        std::map<size_t, Rational> col;
        for (const auto& [key, c] : bh_expansion(w).coeffs) {
            const auto& [lambda, pi] = key;
            if (!lambda.in_f(n - 1)) continue;
            auto [it, _] = row_index.emplace(DBasisIndex{lambda, pi}, row_index.size());
            col[it->second] = Rational(c);
        }
        cols.push_back(std::move(col));
    }
    for (const auto& [k, c] : f_sector) row_index.emplace(k, row_index.size());
    std::vector<std::vector<Rational>> m(row_index.size(),
                                         std::vector<Rational>(candidates.size(), Rational(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, val] : cols[c]) m[r][c] = val;
    std::vector<Rational> b(row_index.size(), Rational(0));
    for (const auto& [k, c] : f_sector) b[row_index.at(k)] = c;
    std::vector<Rational> x;
    if (!solve_exact(std::move(m), std::move(b), x))
        throw std::logic_error("schubert_class_coefficients: sector not in the D_w span");
    for (size_t i = 0; i < candidates.size(); ++i)
        if (!x[i].is_zero()) out.emplace(candidates[i], x[i]);
    return out;
}

std::string structure_cache_path(const std::string& cache_dir, int n, const SignedPermutation& u,
                                 const SignedPermutation& v) {
    std::string key = std::to_string(n) + "|" + u.str() + "|" + v.str();
    // FNV-1a, stable across platforms so cache directories are portable
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    std::string digest = hex.str();
    return cache_dir + "/" + digest.substr(0, 2) + "/" + digest + ".json";
}

StructureConstants structure_constants(const SignedPermutation& u, const SignedPermutation& v,
                                       int n, const std::string& cache_dir) {
    if (u.n() != n || v.n() != n) throw std::invalid_argument("structure_constants: rank mismatch");
    if (!cache_dir.empty()) {
        std::string path = structure_cache_path(cache_dir, n, u, v);
        std::ifstream in(path);
        if (in) {
            StructureConstants sc = structure_constants_from_json_stream(in);
            if (sc.n == n && sc.u == u && sc.v == v) return sc;
        }
    }
    StructureConstants sc;
    sc.n = n;
    sc.u = u;
    sc.v = v;

    Polynomial product = ortho_schubert(u, n) * ortho_schubert(v, n);
    DExpansion ex = expand_in_d_basis(product, n);
    const int target = u.length() + v.length();

    // Schubert part: match the F_{n-1} sector against the f-coefficient
    // vectors of the candidate D_w.
    for (const auto& [w, d] : schubert_class_coefficients(ex.schubert_sector(), n, target)) {
        if (!d.is_integer())
            throw std::logic_error("structure_constants: non-integer Schubert constant");
        sc.schubert.emplace(w, static_cast<long long>(d.num()));
    }

    // Ideal part: the D_w have no ideal-sector support, so the product's
    // ideal sector is the lifted constants directly.
    sc.ideal = ex.ideal_sector();
    for (const auto& [k, c] : sc.ideal)
        if (!c.is_integer()) sc.non_integral_flags.push_back(k);

    if (!cache_dir.empty()) {
        std::string path = structure_cache_path(cache_dir, n, u, v);
        std::filesystem::path p(path);
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            write_structure_constants_json(out, sc);
        }
        std::filesystem::rename(tmp, path, ec);  // atomic publish
    }
    return sc;
}

Polynomial restrict_ortho_schubert(const SignedPermutation& w, int m, int n) {
    if (m >= n) throw std::invalid_argument("restrict_ortho_schubert: need m < n");
    if (w.n() != m) throw std::invalid_argument("restrict_ortho_schubert: w must lie in W~_m");
    return ortho_schubert(embed(w, n), n).restrict_vars(m);
}

DDPropertyCheck divided_difference_property(const SignedPermutation& w, const PermutationA& pi,
                                            int n) {
    if (pi.n() != n || w.n() != n)
        throw std::invalid_argument("divided_difference_property: rank mismatch");
    DDPropertyCheck rec;
    // del_pi here composes the letters of pi's reduced word first letter
    // first (so single-letter steps chain as D_w -> D_{w s_{a_1}} -> ...),
    // which is the reading under which the descent identity lands on D_{w pi}.
    Word word = canonical_reduced_word_a(pi);
    std::reverse(word.begin(), word.end());
    rec.lhs = divided_difference_word_a(ortho_schubert(w, n), word);
    std::vector<int> signed_pi(pi.entries.begin(), pi.entries.end());
    SignedPermutation wpi = compose(w, SignedPermutation(signed_pi));
    rec.length_condition = wpi.length() == w.length() - pi.length();
    if (rec.length_condition) {
        rec.rhs = ortho_schubert(wpi, n);
        if (pi.length() % 2 != 0) rec.rhs = -rec.rhs;
    } else {
        rec.rhs = Polynomial(n);
    }
    rec.matches = rec.lhs == rec.rhs;
    return rec;
}

}  // namespace schubertd
