// Acceptance suite: one line per criterion, exact expectations, wall-clock
// budgets enforced.  Usage: schubertd_acceptance <golden-table-file>

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "schubertd/forms.hpp"
#include "schubertd/render.hpp"
#include "schubertd/verify.hpp"

using namespace schubertd;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const std::string& what, bool pass, double seconds,
            double budget_seconds, const std::string& detail = "") {
    bool in_budget = seconds <= budget_seconds;
    bool ok = pass && in_budget;
    if (!ok) ++g_failures;
    std::ostringstream os;
    os << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << " ["
       << seconds << " s";
    if (budget_seconds < 1e8) os << " / budget " << budget_seconds << " s";
    os << "]";
    if (!pass && !detail.empty()) os << " -- " << detail;
    if (pass && !in_budget) os << " -- over time budget";
    std::cout << os.str() << "\n";
}

bool run_checks(const std::string& suite, std::string& detail) {
    bool pass = true;
    for (const auto& r : verify::run_suite(suite)) {
        if (!r.pass) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + r.name;
            if (!r.detail.empty()) detail += " (" + r.detail + ")";
        }
    }
    return pass;
}

// Independent oracle for the rank-2 arithmetic degrees: the even subalgebra
// spanned by 1, A = Omega_{12}, B = Omega^{12}, AB is commutative with
// A^2 = B^2 = 0; elements are coefficient quadruples.
struct Mini {
    std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};
    friend Mini operator+(const Mini& x, const Mini& y) {
        Mini r;
        for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
        return r;
    }
    friend Mini operator*(const Mini& x, const Mini& y) {
        Mini r;
        r.c[0] = x.c[0] * y.c[0];
        r.c[1] = x.c[0] * y.c[1] + x.c[1] * y.c[0];
        r.c[2] = x.c[0] * y.c[2] + x.c[2] * y.c[0];
        r.c[3] = x.c[0] * y.c[3] + x.c[3] * y.c[0] + x.c[1] * y.c[2] + x.c[2] * y.c[1];
        return r;
    }
};

// Degrees of the four admissible rank-2 monomials from hand-written ideal
// decompositions, evaluated entirely inside the oracle algebra.
bool oracle_degrees_match() {
    auto of = [](int one, int a, int b, int ab) {
        Mini m;
        m.c = {Rational(one), Rational(a), Rational(b), Rational(ab)};
        return m;
    };
    Mini x1 = of(0, -1, 1, 0), x2 = of(0, 1, 1, 0);
    Mini e = of(0, 2, 2, 0);   // minus the degree-2 pairing component
    Mini t = of(0, -1, 1, 0);  // the x1 x2 relation
    Mini none;
    auto deg = [&](const Mini& f1, const Mini& g) { return (e * f1 + t * g).c[3] * half(); };
    Rational expect[4] = {deg(x1, none + (of(0, -1, -1, 0))),  // x1^3 = E x1 - T x2
                          deg(none, x1),                       // x1^2 x2 = T x1
                          deg(none, x2),                       // x1 x2^2 = T x2
                          deg(x2, none + of(0, 1, -1, 0))};    // x2^3 = E x2 - T x1
    BottChernPlugin plugin;
    std::vector<std::vector<int>> monos = {{3, 0}, {2, 1}, {1, 2}, {0, 3}};
    for (int i = 0; i < 4; ++i)
        if (arith_degree(monos[i], 2, plugin) != expect[i]) return false;
    Rational frozen[4] = {Rational(0), Rational(-1), Rational(0), Rational(3)};
    for (int i = 0; i < 4; ++i)
        if (expect[i] != frozen[i]) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: schubertd_acceptance <golden-table-file>\n";
        return 2;
    }

    {  // 1. Table reproduction, byte-identical to the transcription
        Timer t;
        std::ifstream in(argv[1], std::ios::binary);
        std::stringstream golden;
        golden << in.rdbuf();
        std::string rendered = render_table(3);
        bool pass = in.good() && golden.str() == rendered;
        std::string detail;
        if (!in.good())
            detail = "golden file unreadable";
        else if (!pass)
            detail = "rendered table differs from the transcription";
        report(1, "rank-3 table matches the golden transcription byte for byte", pass,
               t.seconds(), 10.0, detail);
    }
    {  // 2. Dual-path coefficients over W~_3 and sampled W~_4
        Timer t;
        std::string detail;
        bool pass = run_checks("dual-path", detail);
        report(2, "tableau coefficients equal expansion coefficients", pass, t.seconds(), 120.0,
               detail);
    }
    {  // 3. P~ property suite
        Timer t;
        std::string detail;
        bool pass = run_checks("ptilde", detail);
        report(3, "P~ properties (b)(c)(d)(e)(f) and the eta kernel", pass, t.seconds(), 1e9,
               detail);
    }
    {  // 4. divided-difference property and word independence
        Timer t;
        std::string detail;
        bool pass = run_checks("dd-property", detail);
        bool words = run_checks("poly", detail);
        report(4, "divided-difference descent property and word independence", pass && words,
               t.seconds(), 1e9, detail);
    }
    {  // 5. structure constants over all of W~_3
        Timer t;
        std::string detail;
        bool pass = run_checks("structure", detail);
        report(5, "576 lifted products: signs, degrees, symmetry, integrality", pass,
               t.seconds(), 300.0, detail);
    }
    {  // 6. stability under the rank embedding
        Timer t;
        std::string detail;
        bool pass = run_checks("restrict", detail);
        report(6, "restriction identities from W~_2 into W~_3", pass, t.seconds(), 1e9, detail);
    }
    {  // 7. Arakelov suite at n = 2 (and the plugin contract)
        Timer t;
        std::string detail;
        bool pass = run_checks("arakelov", detail);
        bool oracle = oracle_degrees_match();
        if (!oracle) detail += (detail.empty() ? "" : "; ") + std::string("independent oracle");
        report(7, "arithmetic classes: pairing component, degrees, plugin contract",
               pass && oracle, t.seconds(), 1e9, detail);
    }
    {  // 8. exact integration
        Timer t;
        std::string detail;
        bool pass = run_checks("integration", detail);
        report(8, "top-form and point-class integrals are exact", pass, t.seconds(), 60.0,
               detail);
    }
    {  // 9. rationality of arithmetic Chern numbers
        Timer t;
        std::string detail;
        bool pass = run_checks("rationality", detail);
        report(9, "admissible arithmetic degrees are exact rationals", pass, t.seconds(), 1e9,
               detail);
    }

    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
