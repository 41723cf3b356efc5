#include <doctest.h>

#include <random>

#include "schubertd/jsonio.hpp"

using namespace schubertd;

TEST_CASE("polynomial wire format") {
    Polynomial p(3);
    p.add_term({2, 0, 0}, Rational(1));
    p.add_term({0, 1, 1}, Rational(-3, 4));
    json j = poly_to_json(p);
    CHECK(j["n"] == 3);
    // leading term first
    CHECK(j["terms"][0]["exp"] == json::array({2, 0, 0}));
    CHECK(j["terms"][0]["coef"] == "1");
    CHECK(j["terms"][1]["coef"] == "-3/4");
    CHECK(poly_from_json(j) == p);
}

TEST_CASE("round trips on a random corpus") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-6, 6), expd(0, 3);
    for (int t = 0; t < 25; ++t) {
        Polynomial p(3);
        for (int k = 0; k < 5; ++k) {
            int a = num(rng);
            if (a == 0) continue;
            p.add_term({expd(rng), expd(rng), expd(rng)}, Rational(a, 1 << expd(rng)));
        }
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
    for (int t = 0; t < 10; ++t) {
        FormElement f(3);
        f += omega_block(3, false, 1, 2).scaled(Rational(num(rng)));
        f += omega_block(3, true, 2, 3).scaled(Rational(num(rng), 2));
        f += x_form(1, 3) * x_form(2, 3);
        CHECK(form_from_json(form_to_json(f)) == f);
    }
}

TEST_CASE("form serialization uses the canonical labels") {
    FormElement f = omega_block(2, false, 1, 2);
    json j = form_to_json(f);
    CHECK(j["terms"][0]["gens"] == json::array({"w_l(1,2)", "wb_l(1,2)"}));
    CHECK(j["terms"][0]["coef"] == "1");
}

TEST_CASE("structure constants file format") {
    StructureConstants sc = structure_constants(SignedPermutation::parse("-2,-1,3"),
                                                SignedPermutation::parse("-2,-1,3"), 3);
    json j = structure_constants_to_json(sc);
    CHECK(j["n"] == 3);
    CHECK(j["u"] == "-2,-1,3");
    CHECK(j["schubert"][0]["w"] == "-3,-1,2");
    CHECK(j["schubert"][0]["d"] == 1);
    CHECK(j["ideal"][0]["lambda"] == json::array({1, 1}));
    CHECK(j["ideal"][0]["d"] == "1");
    StructureConstants back = structure_constants_from_json(j);
    CHECK(back.schubert == sc.schubert);
    CHECK(back.ideal == sc.ideal);
}

TEST_CASE("plugin parsing") {
    json j;
    j["n"] = 3;
    j["components"]["ctilde_dual_3"] =
        form_to_json(omega_block(3, false, 1, 2) * omega_block(3, true, 1, 2));
    BottChernPlugin plugin = plugin_from_json(j);
    CHECK(plugin.has("ctilde_dual_3"));
    CHECK(!plugin.has("ctilde_pair_4"));
    CHECK_THROWS_WITH_AS(plugin.require("ctilde_pair_4"),
                         doctest::Contains("requires Bott-Chern input"), std::domain_error);
    j["components"]["bogus"] = form_to_json(FormElement(3));
    CHECK_THROWS_AS(plugin_from_json(j), std::invalid_argument);
}

TEST_CASE("bh expansion serialization") {
    json j = bh_expansion_to_json(bh_expansion(SignedPermutation::parse("-2,-1,3")));
    CHECK(j["w"] == "-2,-1,3");
    CHECK(j["terms"][0]["lambda"] == json::array({1}));
    CHECK(j["terms"][0]["f"] == 1);
}
