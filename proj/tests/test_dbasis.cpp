#include <doctest.h>

#include <filesystem>
#include <random>
#include <unistd.h>

#include "schubertd/dbasis.hpp"

using namespace schubertd;

namespace {
Polynomial x(int n, int i) { return Polynomial::variable(n, i); }
}

TEST_CASE("D basis elements") {
    CHECK(d_basis(Partition(), PermutationA::identity(3), 3) ==
          Polynomial::constant(3, Rational(1)));
    Polynomial sum(3);
    for (int i = 1; i <= 3; ++i) sum += x(3, i);
    CHECK(d_basis(Partition({1}), PermutationA::identity(3), 3) == sum.scaled(half()));
    // ((2), s_1): the sign of S_pi(-X) is folded in
    CHECK(d_basis(Partition({2}), PermutationA::parse("2,1,3"), 3) ==
          -(ptilde_x(Partition({2}), 3) * x(3, 1)));
    CHECK_THROWS_AS(d_basis(Partition({4}), PermutationA::identity(3), 3),
                    std::invalid_argument);
}

TEST_CASE("orthogonal Schubert polynomials: worked examples") {
    int n = 3;
    Polynomial sum(n);
    for (int i = 1; i <= n; ++i) sum += x(n, i);
    CHECK(ortho_schubert(SignedPermutation::parse("-2,-1,3"), n) == sum.scaled(half()));
    CHECK(ortho_schubert(SignedPermutation::parse("2,1,3"), n) ==
          sum.scaled(half()) - x(n, 1));
    CHECK(ortho_schubert(SignedPermutation::parse("1,3,2"), n) == x(n, 3));
    CHECK(ortho_schubert(SignedPermutation::parse("-3,-1,2"), n) ==
          ptilde_x(Partition({2}), n));
    CHECK(ortho_schubert(SignedPermutation::identity(n), n) ==
          Polynomial::constant(n, Rational(1)));
    for (const auto& w : all_elements(3)) {
        Polynomial p = ortho_schubert(w, 3);
        CHECK(p.is_homogeneous());
        CHECK(p.degree() == (w.is_identity() ? 0 : w.length()));
    }
}

TEST_CASE("expansion of basis elements is a delta") {
    DBasisIndex idx{Partition({2}), PermutationA::parse("2,1,3")};
    DExpansion ex = expand_in_d_basis(d_basis(idx.lambda, idx.pi, 3), 3);
    REQUIRE(ex.coeffs.size() == 1);
    CHECK(ex.coeffs.begin()->first == idx);
    CHECK(ex.coeffs.begin()->second == Rational(1));
}

TEST_CASE("expansion worked examples") {
    // x1 at n = 2
    DExpansion ex = expand_in_d_basis(x(2, 1), 2);
    REQUIRE(ex.coeffs.size() == 1);
    CHECK(ex.coeffs.begin()->first.lambda == Partition());
    CHECK(ex.coeffs.begin()->first.pi == PermutationA::parse("2,1"));
    CHECK(ex.coeffs.begin()->second == Rational(-1));
    // e_1(X_3^2) = 4 P~_{1,1}(X_3)
    DExpansion sq = expand_in_d_basis(elementary_squares(1, 3), 3);
    REQUIRE(sq.coeffs.size() == 1);
    CHECK(sq.coeffs.begin()->first.lambda == Partition({1, 1}));
    CHECK(sq.coeffs.begin()->second == Rational(4));
}

TEST_CASE("expansion splits into sectors consistently") {
    Polynomial f = x(3, 1) * x(3, 1) + x(3, 2).scaled(half()) * x(3, 3);
    DExpansion ex = expand_in_d_basis(f, 3);
    Polynomial back(3);
    for (const auto& [k, c] : ex.coeffs) back += d_basis(k.lambda, k.pi, 3).scaled(c);
    CHECK(back == f);
    auto schubert = ex.schubert_sector();
    auto ideal = ex.ideal_sector();
    CHECK(schubert.size() + ideal.size() == ex.coeffs.size());
    for (const auto& [k, c] : schubert) CHECK(k.lambda.in_f(2));
    for (const auto& [k, c] : ideal) CHECK(!k.lambda.in_f(2));
}

TEST_CASE("expansion round-trips a random dyadic corpus") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-5, 5), expd(0, 3), den_pow(0, 2);
    for (int n : {2, 3}) {
        for (int t = 0; t < 10; ++t) {
            Polynomial f(n);
            for (int k = 0; k < 7; ++k) {
                Exponents e(n);
                for (int i = 0; i < n; ++i) e[i] = expd(rng);
                int a = num(rng);
                if (a == 0) a = 2;
                f.add_term(e, Rational(BigInt(a), BigInt(1) << den_pow(rng)));
            }
            DExpansion ex = expand_in_d_basis(f, n);  // reconstruction is internal
            for (const auto& [k, c] : ex.coeffs) CHECK(c.is_dyadic());
        }
    }
}

TEST_CASE("ideal decomposition") {
    // h = e_1(X^2) -> f_1 = 1
    IdealDecomposition dec = ideal_decompose(elementary_squares(1, 2), 2);
    CHECK(dec.f[0] == Polynomial::constant(2, Rational(1)));
    CHECK(dec.g.is_zero());

    // x1^3 at n = 2: identity is the contract, routing is canonical
    Polynomial h = Polynomial::monomial(2, {3, 0}, Rational(1));
    IdealDecomposition d3 = ideal_decompose(h, 2);
    CHECK(elementary_squares(1, 2) * d3.f[0] + elementary(2, 2) * d3.g == h);

    // degree-one rejection
    CHECK_THROWS_WITH_AS(ideal_decompose(x(2, 1) + x(2, 2), 2),
                         doctest::Contains("Schubert-sector support"), std::domain_error);
}

TEST_CASE("structure constants worked example") {
    SignedPermutation sbox = SignedPermutation::parse("-2,-1,3");
    StructureConstants sc = structure_constants(sbox, sbox, 3);
    REQUIRE(sc.schubert.size() == 1);
    CHECK(sc.schubert.begin()->first == SignedPermutation::parse("-3,-1,2"));
    CHECK(sc.schubert.begin()->second == 1);
    REQUIRE(sc.ideal.size() == 1);
    CHECK(sc.ideal.begin()->first.lambda == Partition({1, 1}));
    CHECK(sc.ideal.begin()->second == Rational(1));
    CHECK(sc.non_integral_flags.empty());
}

TEST_CASE("structure constants at rank 4") {
    SignedPermutation sbox = SignedPermutation::parse("-2,-1,3,4");
    StructureConstants sc = structure_constants(sbox, sbox, 4);
    REQUIRE(sc.schubert.size() == 1);
    CHECK(sc.schubert.begin()->first == SignedPermutation::parse("-3,-1,2,4"));
    CHECK(sc.schubert.begin()->second == 1);
    REQUIRE(sc.ideal.size() == 1);
    CHECK(sc.ideal.begin()->first.lambda == Partition({1, 1}));
    CHECK(sc.ideal.begin()->second == Rational(1));
}

TEST_CASE("identity is the unit") {
    SignedPermutation e = SignedPermutation::identity(3);
    for (const auto& v : {SignedPermutation::parse("-3,-2,1"), SignedPermutation::parse("1,3,2")}) {
        StructureConstants sc = structure_constants(e, v, 3);
        REQUIRE(sc.schubert.size() == 1);
        CHECK(sc.schubert.begin()->first == v);
        CHECK(sc.schubert.begin()->second == 1);
        CHECK(sc.ideal.empty());
    }
}

TEST_CASE("restriction to a smaller rank") {
    // equality holds modulo J_2 for every element; the longest element picks
    // up the dropped ideal shape P~_2(X_2), all others agree on the nose
    for (const auto& w : all_elements(2)) {
        Polynomial diff = restrict_ortho_schubert(w, 2, 3) - ortho_schubert(w, 2);
        CHECK(expand_in_d_basis(diff, 2).schubert_sector().empty());
    }
    for (const char* s : {"1,2", "2,1", "-2,-1"}) {
        SignedPermutation w = SignedPermutation::parse(s);
        CHECK(restrict_ortho_schubert(w, 2, 3) == ortho_schubert(w, 2));
    }
    SignedPermutation longest = SignedPermutation::parse("-1,-2");
    CHECK(restrict_ortho_schubert(longest, 2, 3) - ortho_schubert(longest, 2) ==
          ptilde_x(Partition({2}), 2));
}

TEST_CASE("divided difference property on D_w") {
    auto rec = divided_difference_property(SignedPermutation::parse("-2,-3,1"),
                                           PermutationA::parse("2,1,3"), 3);
    CHECK(rec.length_condition);
    CHECK(rec.matches);
    CHECK(rec.lhs == -ptilde_x(Partition({2, 1}), 3));

    // length condition failing forces zero
    auto zero = divided_difference_property(SignedPermutation::identity(3),
                                            PermutationA::parse("2,1,3"), 3);
    CHECK(!zero.length_condition);
    CHECK(zero.matches);
    CHECK(zero.lhs.is_zero());
}

TEST_CASE("disk cache round trip") {
    std::string dir = (std::filesystem::temp_directory_path() /
                       ("schubertd_cache_test_" + std::to_string(::getpid())))
                          .string();
    SignedPermutation u = SignedPermutation::parse("2,1,3");
    SignedPermutation v = SignedPermutation::parse("1,3,2");
    StructureConstants first = structure_constants(u, v, 3, dir);
    CHECK(std::filesystem::exists(structure_cache_path(dir, 3, u, v)));
    StructureConstants second = structure_constants(u, v, 3, dir);  // served from disk
    CHECK(first.schubert == second.schubert);
    CHECK(first.ideal == second.ideal);
    std::filesystem::remove_all(dir);
}
