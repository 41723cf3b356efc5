#include <doctest.h>

#include "schubertd/polynomial.hpp"
#include "schubertd/symfunc.hpp"
#include "schubertd/weyl.hpp"

using namespace schubertd;

namespace {
Polynomial x(int n, int i) { return Polynomial::variable(n, i); }
}

TEST_CASE("rational reduction and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-6).str() == "-6");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("dyadic predicate") {
    CHECK(Rational(3, 8).is_dyadic());
    CHECK(Rational(7).is_dyadic());
    CHECK(!Rational(1, 3).is_dyadic());
    CHECK(!Rational(5, 6).is_dyadic());
}

TEST_CASE("difference of squares and annihilation") {
    Polynomial a = x(2, 1) + x(2, 2);
    Polynomial b = x(2, 1) - x(2, 2);
    CHECK(a * b == x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2));
    CHECK((a * Polynomial(2)).is_zero());
}

TEST_CASE("half sum squared matches direct expansion") {
    // oracle: expand sum_i sum_j x_i x_j directly and quarter it
    Polynomial s(3);
    for (int i = 1; i <= 3; ++i) s += x(3, i);
    Polynomial direct(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) direct += x(3, i) * x(3, j);
    CHECK(s.scaled(half()) * s.scaled(half()) == direct.scaled(Rational(1, 4)));
}

TEST_CASE("variable count mismatch is a usage error") {
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(x(2, 1) * x(3, 1), std::invalid_argument);
}

TEST_CASE("divided differences: base cases") {
    CHECK(x(2, 1).divided_difference(1) == Polynomial::constant(2, Rational(1)));
    // the box operator carries the orientation of the root -(x1 + x2)
    CHECK(x(2, 1).divided_difference(0) == Polynomial::constant(2, Rational(-1)));
    // s_i-invariant input is killed
    CHECK(elementary(2, 3).divided_difference(1).is_zero());
    CHECK(elementary(2, 3).divided_difference(2).is_zero());
    // so is box-invariant input
    Polynomial box_sym = elementary_squares(1, 2);
    CHECK(box_sym.divided_difference(0).is_zero());
}

TEST_CASE("divided difference drops degree by one") {
    Polynomial f = x(3, 1) * x(3, 1) * x(3, 2);
    for (int g = 0; g <= 2; ++g) {
        Polynomial d = f.divided_difference(g);
        if (!d.is_zero()) CHECK(d.degree() == f.degree() - 1);
    }
}

TEST_CASE("divided difference along words") {
    // both reduced words of s_box s_1 agree on every input
    Polynomial f = x(2, 1) * x(2, 1);
    Polynomial a = divided_difference_word(f, {0, 1});
    Polynomial b = divided_difference_word(f, {1, 0});
    CHECK(a == b);
    // the staircase collapses to 1 along the type A longest element (n = 2)
    CHECK(divided_difference_word_a(x(2, 1), {1}) == Polynomial::constant(2, Rational(1)));
    CHECK_THROWS_AS(divided_difference_word(x(2, 1), {1, 1}), std::invalid_argument);
    CHECK(divided_difference_word_a(divided_difference_word_a(f, {1}), {1}).is_zero());
}

TEST_CASE("negate_vars parity") {
    CHECK(x(2, 1).negate_vars() == -x(2, 1));
    Polynomial m = x(2, 1) * x(2, 2);
    CHECK(m.negate_vars() == m);
    Polynomial h = x(2, 1) * x(2, 1) * x(2, 2);  // degree 3
    CHECK(h.negate_vars() == -h);
}

TEST_CASE("degree cap guards runaway products") {
    int old_cap = Polynomial::degree_cap();
    Polynomial::set_degree_cap(8);
    Polynomial f = Polynomial::monomial(1, {5}, Rational(1));
    CHECK_THROWS_AS(f * f, std::domain_error);
    Polynomial::set_degree_cap(old_cap);
    CHECK((f * f).degree() == 10);
}

TEST_CASE("canonical term order is graded reverse lexicographic") {
    Polynomial f = x(2, 2) + x(2, 1) * x(2, 1) + x(2, 1) * x(2, 2);
    // ascending map order: degree first, then grevlex tie-break; the leading
    // term x1^2 beats x1 x2
    std::vector<Exponents> order;
    for (const auto& [e, c] : f.terms()) order.push_back(e);
    CHECK(order == std::vector<Exponents>{{0, 1}, {1, 1}, {2, 0}});
    CHECK(f.terms().rbegin()->first == Exponents{2, 0});
}
