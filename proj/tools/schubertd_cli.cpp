#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "schubertd/jsonio.hpp"
#include "schubertd/render.hpp"
#include "schubertd/verify.hpp"

using namespace schubertd;

namespace {

// exit codes: 0 ok, 1 domain error, 2 usage error
constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

void emit_error(const std::string& type, const std::string& message) {
    json j;
    j["error"]["type"] = type;
    j["error"]["message"] = message;
    std::cerr << j.dump() << "\n";
}

struct Options {
    std::string format = "text";
    std::string cache_dir;
    std::string plugin_path;
    int jobs = 1;
    int degree_cap = 64;
};

BottChernPlugin plugin_or_empty(const Options& opt) {
    if (opt.plugin_path.empty()) return BottChernPlugin{};
    return load_plugin(opt.plugin_path);
}

Polynomial read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polynomial file: " + path);
    try {
        return poly_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed polynomial file " + path + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact type D Schubert calculus and arithmetic Chern numbers"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    if (const char* env = std::getenv("SCHUBERTD_CACHE_DIR")) opt.cache_dir = env;
    app.add_option("--format", opt.format, "Output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", opt.cache_dir,
                   "Structure-constant cache directory (env SCHUBERTD_CACHE_DIR)");
    app.add_option("--plugin", opt.plugin_path, "Bott-Chern plugin JSON file");
    app.add_option("--jobs", opt.jobs, "Worker threads for batch subcommands")
        ->check(CLI::PositiveNumber);
    app.add_option("--degree-cap", opt.degree_cap, "Polynomial total-degree guard")
        ->check(CLI::PositiveNumber);

    int n = 0;
    std::string w_str, u_str, v_str, lambda_str, pi_str, shape_str, mono_str, poly_file,
        suite = "all";

    CLI::App* dw = app.add_subcommand("dw", "Print the orthogonal Schubert polynomial D_w");
    dw->add_option("--n", n, "Rank")->required();
    dw->add_option("--w", w_str, "Signed permutation, e.g. \"-3,-1,2\"")->required();

    CLI::App* table = app.add_subcommand("table", "Print all D_w for W~_n");
    table->add_option("--n", n, "Rank")->required();

    CLI::App* fcoeff = app.add_subcommand("fcoeff", "Billey-Haiman coefficient f^w_{lambda,pi}");
    fcoeff->add_option("--w", w_str)->required();
    fcoeff->add_option("--lambda", lambda_str, "Strict partition, e.g. \"2,1\" or \"[]\"")
        ->required();
    fcoeff->add_option("--pi", pi_str, "Permutation one-line, e.g. \"2,3,1\"")->required();

    CLI::App* tableaux = app.add_subcommand("tableaux", "Enumerate Kraskiewicz-Lam tableaux");
    tableaux->add_option("--w", w_str)->required();
    tableaux->add_option("--shape", shape_str)->required();

    CLI::App* product = app.add_subcommand("product", "Lifted structure constants of D_u D_v");
    product->add_option("--n", n)->required();
    product->add_option("--u", u_str)->required();
    product->add_option("--v", v_str)->required();

    CLI::App* expand = app.add_subcommand("expand", "Expand a polynomial in the D basis");
    expand->add_option("--n", n)->required();
    expand->add_option("--poly-file", poly_file)->required();

    CLI::App* decompose =
        app.add_subcommand("decompose", "Canonical ideal decomposition of an element of J_n");
    decompose->add_option("--n", n)->required();
    decompose->add_option("--poly-file", poly_file)->required();

    CLI::App* arithdeg = app.add_subcommand("arithdeg", "Arithmetic Chern number of a monomial");
    arithdeg->add_option("--n", n)->required();
    arithdeg->add_option("--mono", mono_str, "Exponents k_1,...,k_n")->required();

    CLI::App* check = app.add_subcommand("check", "Run a named invariant suite");
    std::string suite_help = "Suite name or \"all\":";
    for (const auto& name : verify::suite_names()) suite_help += " " + name;
    check->add_option("--suite", suite, suite_help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.exit(e) == 0) return kOk;
        emit_error("usage", e.what());
        return kUsageError;
    }

    try {
        Polynomial::set_degree_cap(opt.degree_cap);
        const bool as_json = opt.format == "json";

        if (*dw) {
            SignedPermutation w = SignedPermutation::parse(w_str);
            if (w.n() != n) throw std::invalid_argument("--w does not match --n");
            Polynomial p = ortho_schubert(w, n);
            if (as_json) {
                json j;
                j["w"] = w.str();
                j["rendering"] = render_dw(w, n);
                j["polynomial"] = poly_to_json(p);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << w.str() << " : " << render_dw(w, n) << "\n";
                std::cout << poly_to_json(p).dump() << "\n";
            }
        } else if (*table) {
            std::cout << render_table(n, opt.jobs);
        } else if (*fcoeff) {
            SignedPermutation w = SignedPermutation::parse(w_str);
            Partition lambda = Partition::parse(lambda_str);
            PermutationA pi = PermutationA::parse(pi_str);
            long long f = f_coeff(w, lambda, pi);
            if (as_json) {
                json j;
                j["w"] = w.str();
                j["lambda"] = lambda.parts;
                j["pi"] = pi.str();
                j["f"] = f;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << f << "\n";
            }
        } else if (*tableaux) {
            SignedPermutation w = SignedPermutation::parse(w_str);
            Partition shape = Partition::parse(shape_str);
            if (shape.weight() != w.length())
                std::cerr << "note: |shape| = " << shape.weight() << " but length(w) = "
                          << w.length() << "; no tableaux exist\n";
            auto ts = kl_tableaux(w, shape);
            std::cout << tableaux_to_json(ts).dump() << "\n";
        } else if (*product) {
            SignedPermutation u = SignedPermutation::parse(u_str);
            SignedPermutation v = SignedPermutation::parse(v_str);
            StructureConstants sc = structure_constants(u, v, n, opt.cache_dir);
            if (as_json) {
                std::cout << structure_constants_to_json(sc).dump(2) << "\n";
            } else {
                for (const auto& [w, d] : sc.schubert)
                    std::cout << "d[" << w.str() << "] = " << d << "\n";
                for (const auto& [k, d] : sc.ideal)
                    std::cout << "d[" << k.lambda.str() << "; " << k.pi.str()
                              << "] = " << d.str() << "\n";
            }
        } else if (*expand) {
            DExpansion ex = expand_in_d_basis(read_poly_file(poly_file), n);
            if (as_json) {
                std::cout << expansion_to_json(ex).dump(2) << "\n";
            } else {
                for (const auto& [k, c] : ex.coeffs)
                    std::cout << "(" << k.lambda.str() << "; " << k.pi.str()
                              << ") -> " << c.str() << "\n";
            }
        } else if (*decompose) {
            IdealDecomposition dec = ideal_decompose(read_poly_file(poly_file), n);
            json j;
            json fs = json::array();
            for (const auto& f : dec.f) fs.push_back(poly_to_json(f));
            j["f"] = std::move(fs);
            j["g"] = poly_to_json(dec.g);
            std::cout << j.dump(2) << "\n";
        } else if (*arithdeg) {
            std::vector<int> mono;
            std::istringstream is(mono_str);
            std::string tok;
            while (std::getline(is, tok, ',')) mono.push_back(std::stoi(tok));
            Rational r = arith_degree(mono, n, plugin_or_empty(opt));
            if (as_json) {
                json j;
                j["n"] = n;
                j["mono"] = mono;
                j["degree"] = r.str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << r.str() << "\n";
            }
        } else if (*check) {
            auto results = verify::run_suite(suite);
            bool pass = verify::all_passed(results);
            for (const auto& r : results) {
                if (r.pass)
                    std::cout << "ok " << r.name << "\n";
                else
                    std::cout << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail)
                              << "\n";
            }
            return pass ? kOk : kDomainError;
        }
        return kOk;
    } catch (const std::invalid_argument& e) {
        emit_error("usage", e.what());
        return kUsageError;
    } catch (const std::domain_error& e) {
        emit_error("domain", e.what());
        return kDomainError;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kDomainError;
    }
}
