#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "schubertd/dbasis.hpp"
#include "schubertd/forms.hpp"
#include "schubertd/stanley.hpp"

namespace schubertd {

using json = nlohmann::ordered_json;

// Polynomial wire format: { "n": int, "terms": [ { "exp": [..], "coef": "p/q" } ] }
// with terms in canonical order, leading term first.
json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j);

// FormElement wire format: { "n": int, "terms": [ { "gens": ["w_l(1,2)", ..],
// "coef": "p/q" } ] } with generators in canonical order within each term.
json form_to_json(const FormElement& f);
FormElement form_from_json(const json& j);

json tableau_to_json(const KLTableau& t);
json tableaux_to_json(const std::vector<KLTableau>& ts);

json expansion_to_json(const DExpansion& ex);

json structure_constants_to_json(const StructureConstants& sc);
StructureConstants structure_constants_from_json(const json& j);
void write_structure_constants_json(std::ostream& os, const StructureConstants& sc);
StructureConstants structure_constants_from_json_stream(std::istream& is);

json arith_class_to_json(const ArithClass& ac);

json bh_expansion_to_json(const BHExpansion& ex);

// Plugin file: { "n": int, "components": { "<label>": <FormElement> } }.
BottChernPlugin plugin_from_json(const json& j);
BottChernPlugin load_plugin(const std::string& path);

}  // namespace schubertd
