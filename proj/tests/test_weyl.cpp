#include <doctest.h>

#include "schubertd/weyl.hpp"

using namespace schubertd;

TEST_CASE("membership validation") {
    CHECK_THROWS_AS(SignedPermutation({-1, 2, 3}), std::invalid_argument);  // odd signs
    CHECK_THROWS_AS(SignedPermutation({1, 1}), std::invalid_argument);
    CHECK_NOTHROW(SignedPermutation({-1, 4, -3, 2}));
}

TEST_CASE("composition and generator actions") {
    SignedPermutation w = SignedPermutation::parse("-3,-2,1");
    CHECK(compose(SignedPermutation::identity(3), w) == w);
    CHECK(evaluate_word(3, {1, 2, 0}) == w);
    // right multiplication by the box generator negates and swaps the front
    SignedPermutation u = SignedPermutation::identity(4);
    CHECK(apply_generator(u, 0) == SignedPermutation::parse("-2,-1,3,4"));
    CHECK(compose(w, w.inverse()) == SignedPermutation::identity(3));
}

TEST_CASE("length") {
    CHECK(SignedPermutation::identity(5).length() == 0);
    CHECK(SignedPermutation::parse("-1,4,-3,2").length() == 5);
    CHECK(longest_element(3).length() == 6);
    CHECK(longest_element(4) == SignedPermutation::parse("-1,-2,-3,-4"));
    CHECK(longest_element(3) == SignedPermutation::parse("1,-2,-3"));
    CHECK(longest_element_a(3) == PermutationA::parse("3,2,1"));
}

TEST_CASE("reduced words") {
    CHECK(is_reduced(4, {2, 0, 3, 1, 2}));
    CHECK(!is_reduced(4, {1, 1}));
    auto words = reduced_words(SignedPermutation::parse("-1,-2,3"));
    REQUIRE(words.size() == 2);
    CHECK(words[0] == Word{0, 1});
    CHECK(words[1] == Word{1, 0});
    CHECK_THROWS_AS(reduced_words(longest_element(4), 8), std::domain_error);
    CHECK(canonical_reduced_word(SignedPermutation::parse("-1,-2,3")) == Word{0, 1});
}

TEST_CASE("flatten") {
    CHECK(flatten({2, 0, 3, 1, 2}) == Word{2, 1, 3, 1, 2});
    CHECK(flatten({2, 3, 1}) == Word{2, 3, 1});
    CHECK(flatten({0}) == Word{1});
}

TEST_CASE("maximal Grassmannian elements") {
    CHECK(max_grassmannian({2}, 3) == SignedPermutation::parse("-3,-1,2"));
    CHECK(max_grassmannian({2, 1}, 3) == SignedPermutation::parse("-3,-2,1"));
    CHECK(max_grassmannian({}, 3) == SignedPermutation::identity(3));
    CHECK(max_grassmannian({3, 1}, 4) == SignedPermutation::parse("-4,-2,1,3"));
    CHECK_THROWS_AS(max_grassmannian({3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(max_grassmannian({2, 2}, 4), std::invalid_argument);
}

TEST_CASE("phi embedding") {
    CHECK(phi_embed(SignedPermutation::identity(2)) == PermutationA::identity(4));
    CHECK(phi_embed(SignedPermutation::parse("-2,-1")) == PermutationA::parse("3,4,1,2"));
    // homomorphism on a handful of pairs
    auto elems = all_elements(3);
    for (size_t i = 0; i < elems.size(); i += 5)
        for (size_t j = 0; j < elems.size(); j += 7) {
            CHECK(phi_embed(compose(elems[i], elems[j])) ==
                  compose(phi_embed(elems[i]), phi_embed(elems[j])));
        }
}

TEST_CASE("enumeration sizes") {
    CHECK(all_elements(2).size() == 4);
    CHECK(all_elements(3).size() == 24);
    CHECK(all_elements(4).size() == 192);
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("embedding by first components") {
    SignedPermutation w = SignedPermutation::parse("-2,-1");
    CHECK(embed(w, 4) == SignedPermutation::parse("-2,-1,3,4"));
    CHECK(embed(w, 4).length() == w.length());
}

TEST_CASE("type A words and lengths") {
    PermutationA p = PermutationA::parse("3,1,2");
    CHECK(p.length() == 2);
    CHECK(canonical_reduced_word_a(p) == Word{2, 1});
    CHECK(canonical_reduced_word_a(PermutationA::parse("2,3,1")) == Word{1, 2});
    CHECK(compose(p, p.inverse()) == PermutationA::identity(3));
}
