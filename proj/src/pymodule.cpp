#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schubertd/jsonio.hpp"
#include "schubertd/render.hpp"
#include "schubertd/verify.hpp"

namespace py = pybind11;
using namespace schubertd;

namespace {

py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

BottChernPlugin plugin_arg(const std::string& path) {
    return path.empty() ? BottChernPlugin{} : load_plugin(path);
}

}  // namespace

PYBIND11_MODULE(schubertd, m) {
    m.doc() = "Exact type D Schubert calculus and arithmetic Chern numbers";

    m.def("length", [](const std::string& w) { return SignedPermutation::parse(w).length(); },
          py::arg("w"), "Length of a signed permutation given as \"-3,-1,2\"");

    m.def("canonical_word", [](const std::string& w) {
        return canonical_reduced_word(SignedPermutation::parse(w));
    }, py::arg("w"), "Lexicographically least reduced word (0 encodes the box letter)");

    m.def("dw", [](int n, const std::string& w) {
        SignedPermutation sp = SignedPermutation::parse(w);
        json j;
        j["w"] = sp.str();
        j["rendering"] = render_dw(sp, n);
        j["polynomial"] = poly_to_json(ortho_schubert(sp, n));
        return to_py(j);
    }, py::arg("n"), py::arg("w"), "Orthogonal Schubert polynomial D_w");

    m.def("table", [](int n) { return render_table(n); }, py::arg("n"),
          "All D_w for W~_n, one line per element");

    m.def("fcoeff", [](const std::string& w, const std::string& lam, const std::string& pi) {
        return f_coeff(SignedPermutation::parse(w), Partition::parse(lam),
                       PermutationA::parse(pi));
    }, py::arg("w"), py::arg("lam"), py::arg("pi"), "Billey-Haiman coefficient f^w_{lambda,pi}");

    m.def("tableaux", [](const std::string& w, const std::string& shape) {
        return to_py(tableaux_to_json(
            kl_tableaux(SignedPermutation::parse(w), Partition::parse(shape))));
    }, py::arg("w"), py::arg("shape"), "Kraskiewicz-Lam tableaux as lists of rows");

    m.def("stanley_coeff", [](const std::string& u, const std::string& lam) {
        return stanley_coeff(SignedPermutation::parse(u), Partition::parse(lam));
    }, py::arg("u"), py::arg("lam"));

    m.def("product", [](int n, const std::string& u, const std::string& v,
                        const std::string& cache_dir) {
        return to_py(structure_constants_to_json(structure_constants(
            SignedPermutation::parse(u), SignedPermutation::parse(v), n, cache_dir)));
    }, py::arg("n"), py::arg("u"), py::arg("v"), py::arg("cache_dir") = "",
          "Lifted structure constants of D_u D_v");

    m.def("expand", [](int n, const std::string& poly_json) {
        return to_py(expansion_to_json(
            expand_in_d_basis(poly_from_json(json::parse(poly_json)), n)));
    }, py::arg("n"), py::arg("poly_json"), "Expansion in the D basis from polynomial JSON");

    m.def("decompose", [](int n, const std::string& poly_json) {
        IdealDecomposition dec = ideal_decompose(poly_from_json(json::parse(poly_json)), n);
        json j;
        json fs = json::array();
        for (const auto& f : dec.f) fs.push_back(poly_to_json(f));
        j["f"] = std::move(fs);
        j["g"] = poly_to_json(dec.g);
        return to_py(j);
    }, py::arg("n"), py::arg("poly_json"), "Canonical decomposition over the ideal generators");

    m.def("arith_degree", [](int n, const std::vector<int>& mono, const std::string& plugin) {
        return arith_degree(mono, n, plugin_arg(plugin)).str();
    }, py::arg("n"), py::arg("mono"), py::arg("plugin") = "",
          "Arithmetic Chern number of a monomial, as an exact fraction string");

    m.def("schubert_a", [](int n, const std::string& pi) {
        return to_py(poly_to_json(schubert_a(PermutationA::parse(pi), n)));
    }, py::arg("n"), py::arg("pi"), "Type A Schubert polynomial");

    m.def("ptilde", [](const std::string& lam, int n) {
        return to_py(poly_to_json(ptilde_x(Partition::parse(lam), n)));
    }, py::arg("lam"), py::arg("n"), "P~_lambda(X_n)");

    m.def("check", [](const std::string& suite) {
        py::list out;
        for (const auto& r : verify::run_suite(suite)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(std::move(d));
        }
        return out;
    }, py::arg("suite") = "all", "Run a named invariant suite");
}
