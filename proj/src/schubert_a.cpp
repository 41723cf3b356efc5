#include "schubertd/schubert_a.hpp"

#include <map>
#include <mutex>

namespace schubertd {

namespace {
std::map<std::pair<std::vector<int>, int>, Polynomial> g_cache;
std::mutex g_mutex;
}  // namespace

Polynomial schubert_a(const PermutationA& pi, int n) {
    if (pi.n() > n) throw std::invalid_argument("schubert_a: permutation rank exceeds n");
    PermutationA p = pi.extend(n);
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_cache.find({p.entries, n});
        if (it != g_cache.end()) return it->second;
    }
    // staircase monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}
    Exponents e(n, 0);
    for (int i = 0; i < n - 1; ++i) e[i] = n - 1 - i;
    Polynomial f = Polynomial::monomial(n, e, Rational(1));
    Word word = canonical_reduced_word_a(compose(p.inverse(), PermutationA::longest(n)));
    Polynomial result = divided_difference_word_a(f, word);
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache.emplace(std::make_pair(p.entries, n), result);
    return result;
}

bool stability_check(const PermutationA& pi, int n, int n_prime) {
    if (n_prime <= n) throw std::invalid_argument("stability_check: need n' > n");
    Polynomial big = schubert_a(pi.extend(n_prime), n_prime);
    return big.restrict_vars(n) == schubert_a(pi, n);
}

}  // namespace schubertd
