#include "schubertd/jsonio.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace schubertd {

json poly_to_json(const Polynomial& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json t;
        t["exp"] = it->first;
        t["coef"] = it->second.str();
        terms.push_back(std::move(t));
    }
    json j;
    j["n"] = p.nvars();
    j["terms"] = std::move(terms);
    return j;
}

Polynomial poly_from_json(const json& j) {
    Polynomial p(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        p.add_term(e, Rational::parse(t.at("coef").get<std::string>()));
    }
    return p;
}

json form_to_json(const FormElement& f) {
    json terms = json::array();
    for (const auto& [mask, c] : f.terms()) {
        json gens = json::array();
        uint64_t rest = mask;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            auto [fam, p, q] = FormElement::bit_gen(f.n(), bit);
            gens.push_back(gen_label(fam, p, q));
        }
        json t;
        t["gens"] = std::move(gens);
        t["coef"] = c.str();
        terms.push_back(std::move(t));
    }
    json j;
    j["n"] = f.n();
    j["terms"] = std::move(terms);
    return j;
}

namespace {

std::pair<GenFamily, std::pair<int, int>> parse_gen_label(const std::string& s) {
    auto open = s.find('(');
    auto comma = s.find(',', open);
    auto close = s.find(')', comma);
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("bad generator label: " + s);
    std::string fam = s.substr(0, open);
    int p = std::stoi(s.substr(open + 1, comma - open - 1));
    int q = std::stoi(s.substr(comma + 1, close - comma - 1));
    GenFamily f;
    if (fam == "w_l")
        f = GenFamily::lower_omega;
    else if (fam == "wb_l")
        f = GenFamily::lower_omega_bar;
    else if (fam == "w_u")
        f = GenFamily::upper_omega;
    else if (fam == "wb_u")
        f = GenFamily::upper_omega_bar;
    else
        throw std::invalid_argument("bad generator family: " + fam);
    return {f, {p, q}};
}

}  // namespace

FormElement form_from_json(const json& j) {
    int n = j.at("n").get<int>();
    FormElement f(n);
    for (const auto& t : j.at("terms")) {
        FormElement term = FormElement::unit(n).scaled(
            Rational::parse(t.at("coef").get<std::string>()));
        for (const auto& g : t.at("gens")) {
            auto [fam, pq] = parse_gen_label(g.get<std::string>());
            term = term * FormElement::generator(n, fam, pq.first, pq.second);
        }
        f += term;
    }
    return f;
}

json tableau_to_json(const KLTableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(row);
    return rows;
}

json tableaux_to_json(const std::vector<KLTableau>& ts) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(tableau_to_json(t));
    return arr;
}

json expansion_to_json(const DExpansion& ex) {
    json terms = json::array();
    for (const auto& [k, c] : ex.coeffs) {
        json t;
        t["lambda"] = k.lambda.parts;
        t["pi"] = k.pi.str();
        t["coef"] = c.str();
        terms.push_back(std::move(t));
    }
    json j;
    j["n"] = ex.n;
    j["terms"] = std::move(terms);
    return j;
}

json structure_constants_to_json(const StructureConstants& sc) {
    json j;
    j["n"] = sc.n;
    j["u"] = sc.u.str();
    j["v"] = sc.v.str();
    json schubert = json::array();
    for (const auto& [w, d] : sc.schubert) {
        json t;
        t["w"] = w.str();
        t["d"] = d;
        schubert.push_back(std::move(t));
    }
    j["schubert"] = std::move(schubert);
    json ideal = json::array();
    for (const auto& [k, d] : sc.ideal) {
        json t;
        t["lambda"] = k.lambda.parts;
        t["pi"] = k.pi.str();
        t["d"] = d.str();
        ideal.push_back(std::move(t));
    }
    j["ideal"] = std::move(ideal);
    return j;
}

StructureConstants structure_constants_from_json(const json& j) {
    StructureConstants sc;
    sc.n = j.at("n").get<int>();
    sc.u = SignedPermutation::parse(j.at("u").get<std::string>());
    sc.v = SignedPermutation::parse(j.at("v").get<std::string>());
    for (const auto& t : j.at("schubert"))
        sc.schubert.emplace(SignedPermutation::parse(t.at("w").get<std::string>()),
                            t.at("d").get<long long>());
    for (const auto& t : j.at("ideal")) {
        DBasisIndex k{Partition(t.at("lambda").get<std::vector<int>>()),
                      PermutationA::parse(t.at("pi").get<std::string>())};
        Rational d = Rational::parse(t.at("d").get<std::string>());
        if (!d.is_integer()) sc.non_integral_flags.push_back(k);
        sc.ideal.emplace(std::move(k), std::move(d));
    }
    return sc;
}

void write_structure_constants_json(std::ostream& os, const StructureConstants& sc) {
    os << structure_constants_to_json(sc).dump(2) << "\n";
}

StructureConstants structure_constants_from_json_stream(std::istream& is) {
    json j = json::parse(is);
    return structure_constants_from_json(j);
}

json arith_class_to_json(const ArithClass& ac) {
    json j;
    j["n"] = ac.n;
    json schubert = json::array();
    for (const auto& [w, a] : ac.schubert) {
        json t;
        t["w"] = w.str();
        t["a"] = a.str();
        schubert.push_back(std::move(t));
    }
    j["schubert"] = std::move(schubert);
    j["form"] = form_to_json(ac.form);
    return j;
}

json bh_expansion_to_json(const BHExpansion& ex) {
    json terms = json::array();
    for (const auto& [key, f] : ex.coeffs) {
        json t;
        t["lambda"] = key.first.parts;
        t["pi"] = key.second.str();
        t["f"] = f;
        terms.push_back(std::move(t));
    }
    json j;
    j["w"] = ex.element.str();
    j["terms"] = std::move(terms);
    return j;
}

BottChernPlugin plugin_from_json(const json& j) {
    BottChernPlugin plugin;
    plugin.n = j.at("n").get<int>();
    for (const auto& [label, fj] : j.at("components").items()) {
        FormElement f = form_from_json(fj);
        if (f.n() != plugin.n)
            throw std::invalid_argument("plugin component " + label + " has mismatched rank");
        plugin.components.emplace(label, std::move(f));
    }
    plugin.validate();
    return plugin;
}

BottChernPlugin load_plugin(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open plugin file: " + path);
    return plugin_from_json(json::parse(in));
}

}  // namespace schubertd
