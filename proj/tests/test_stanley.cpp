#include <doctest.h>

#include "schubertd/stanley.hpp"

using namespace schubertd;

TEST_CASE("unimodality") {
    CHECK(is_unimodal({6, 5, 4, 3, 2, 1}));
    CHECK(is_unimodal({1, 1}));
    CHECK(!is_unimodal({2, 2}));
    CHECK(is_unimodal({3, 2, 1, 1, 2, 3}));
    CHECK(!is_unimodal({1, 1, 1}));
    CHECK(is_unimodal({}));
    CHECK(is_unimodal({5}));
    CHECK(is_unimodal({1, 2, 3}));
    CHECK(!is_unimodal({2, 1, 2, 1}));
}

TEST_CASE("longest unimodal subsequence") {
    CHECK(max_unimodal_subsequence({}) == 0);
    CHECK(max_unimodal_subsequence({1, 2, 1}) == 2);
    CHECK(max_unimodal_subsequence({2, 1, 2}) == 3);
    CHECK(max_unimodal_subsequence({1, 1, 2}) == 3);   // junction pair of ones
    CHECK(max_unimodal_subsequence({2, 2}) == 1);
    // e.g. 3,1,1,2 with the junction pair of ones
    CHECK(max_unimodal_subsequence({3, 1, 2, 1, 2}) == 4);
}

TEST_CASE("tableaux for maximal Grassmannian elements") {
    SignedPermutation w21 = max_grassmannian({2, 1}, 3);
    auto ts = kl_tableaux(w21, Partition({2, 1}));
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].rows[0] == std::vector<int>{2, 1});
    CHECK(ts[0].rows[1] == std::vector<int>{1});
    CHECK(ts[0].row_word() == std::vector<int>{1, 2, 1});
    CHECK(m_stat(ts[0]) == 0);

    // the displayed staircase-free example: rows count down to one
    SignedPermutation w643 = max_grassmannian({6, 4, 3}, 7);
    auto big = kl_tableaux(w643, Partition({6, 4, 3}));
    REQUIRE(big.size() == 1);
    CHECK(big[0].rows[0] == std::vector<int>{6, 5, 4, 3, 2, 1});
    CHECK(big[0].rows[1] == std::vector<int>{4, 3, 2, 1});
    CHECK(big[0].rows[2] == std::vector<int>{3, 2, 1});
    CHECK(m_stat(big[0]) == 0);
}

TEST_CASE("tableau base cases") {
    auto tbox = kl_tableaux(SignedPermutation::parse("-2,-1,3"), Partition({1}));
    REQUIRE(tbox.size() == 1);
    CHECK(tbox[0].rows[0] == std::vector<int>{1});
    CHECK(m_stat(tbox[0]) == 0);

    auto t2 = kl_tableaux(SignedPermutation::parse("1,3,2"), Partition({1}));
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].rows[0] == std::vector<int>{2});
    CHECK(m_stat(t2[0]) == 1);

    // weight mismatch yields the empty list
    CHECK(kl_tableaux(SignedPermutation::parse("1,3,2"), Partition({2})).empty());
}

TEST_CASE("Stanley coefficients") {
    CHECK(stanley_coeff(SignedPermutation::parse("1,3,2"), Partition({1})) == 2);
    CHECK(stanley_coeff(SignedPermutation::parse("-2,-1,3"), Partition({1})) == 1);
    for (const auto& lam : {Partition({1}), Partition({2}), Partition({2, 1})})
        CHECK(stanley_coeff(max_grassmannian(lam.parts, 3), lam) == 1);
    // wrong weight vanishes
    CHECK(stanley_coeff(SignedPermutation::parse("1,3,2"), Partition({2})) == 0);
}

TEST_CASE("f coefficient worked examples") {
    CHECK(f_coeff(SignedPermutation::parse("3,2,1"), Partition({1}),
                  PermutationA::parse("2,3,1")) == 2);
    CHECK(f_coeff(SignedPermutation::parse("2,1,3"), Partition({1}),
                  PermutationA::identity(3)) == 1);
    CHECK(f_coeff(SignedPermutation::parse("3,2,1"), Partition({2}),
                  PermutationA::identity(3)) == 0);  // degree filter
    CHECK_THROWS_AS(f_coeff(SignedPermutation::parse("3,2,1"), Partition({1, 1}),
                            PermutationA::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("expansions") {
    BHExpansion ebox = bh_expansion(SignedPermutation::parse("-2,-1,3"));
    REQUIRE(ebox.coeffs.size() == 1);
    CHECK(ebox.coeffs.begin()->first.first == Partition({1}));
    CHECK(ebox.coeffs.begin()->first.second == PermutationA::identity(3));
    CHECK(ebox.coeffs.begin()->second == 1);

    BHExpansion eid = bh_expansion(SignedPermutation::identity(3));
    REQUIRE(eid.coeffs.size() == 1);
    CHECK(eid.coeffs.begin()->first.first == Partition());

    BHExpansion e321 = bh_expansion(SignedPermutation::parse("-3,-2,1"));
    REQUIRE(e321.coeffs.size() == 1);
    CHECK(e321.coeffs.begin()->first.first == Partition({2, 1}));
    CHECK(e321.coeffs.begin()->second == 1);

    for (const auto& w : all_elements(3))
        for (const auto& [key, f] : bh_expansion(w).coeffs) {
            CHECK(key.first.weight() + key.second.length() == w.length());
            CHECK(f > 0);
        }
}

TEST_CASE("enumeration bound") {
    // W~_6 longest element has length 30, beyond the enumeration guard
    std::vector<int> e;
    for (int i = 1; i <= 6; ++i) e.push_back(-i);
    SignedPermutation w(e);
    CHECK_THROWS_AS(kl_tableaux(w, Partition({30})), std::domain_error);
}
