#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "powersum/echelon.hpp"
#include "powersum/polynomial.hpp"
#include "powersum/series.hpp"

using namespace powersum;

TEST_CASE("rational helpers") {
    CHECK(rat_to_string(rat(-7, 26)) == "-7/26");
    CHECK(rat_from_string("-7/26") == rat(7, -26));
    CHECK(rat_from_string("42") == Rat(42));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("x"));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(rat_pow(Rat(5), 0) == 1);
    CHECK(*rat_sqrt(rat(49, 9)) == rat(7, 3));
    CHECK(!rat_sqrt(Rat(2)).has_value());
    CHECK(!rat_sqrt(Rat(-4)).has_value());
    CHECK(is_integer(Rat(3)));
    CHECK(rat_to_long(rat(12, 4)) == 3);
    CHECK_THROWS(rat_to_long(rat(1, 2)));
}

TEST_CASE("monomial order is graded lex") {
    Monomial a{{2, 0}}, b{{1, 1}}, c{{0, 2}}, d{{0, 1}};
    CHECK(d < a);  // degree first
    CHECK(b < a);  // then lex on exponents
    CHECK(c < b);
    auto mons = monomials_of_degree(3, 2);
    CHECK(mons.size() == 6);
    CHECK(std::is_sorted(mons.begin(), mons.end()));
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937_64 rng(42);
    auto rand_poly = [&](int nvars) {
        Polynomial p(nvars);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> e(nvars);
            for (auto& x : e) x = (int)(rng() % 3);
            Polynomial mono = Polynomial::constant(nvars, Rat((long)(rng() % 7) - 3));
            for (int v = 0; v < nvars; ++v)
                for (int k = 0; k < e[v]; ++k) mono = mono * Polynomial::variable(nvars, v);
            p += mono;
        }
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = rand_poly(3), q = rand_poly(3), r = rand_poly(3);
        CHECK(p * q == q * p);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::vector<Polynomial> images;
    for (int i = 0; i < 2; ++i) {
        Polynomial im = Polynomial::variable(2, i) * Rat(2) +
                        Polynomial::variable(2, 1 - i, 2) * Rat(-1);
        images.push_back(im);
    }
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial p = x * x + y * Rat(3);
    Polynomial q = x * y - Polynomial::constant(2, Rat(1));
    CHECK((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
    CHECK((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
}

TEST_CASE("derivative satisfies Leibniz") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial p = x * x * y + y * Rat(5);
    Polynomial q = x * y * y - x;
    CHECK((p * q).derivative(0) == p.derivative(0) * q + p * q.derivative(0));
    CHECK((p * q).derivative(1) == p.derivative(1) * q + p * q.derivative(1));
}

TEST_CASE("direction expansion recovers binomial coefficients") {
    // (x0 + x1)^3 expanded along x0 -> x0 + x1 at x0 = 0 ... use p = x0^3
    Polynomial p = Polynomial::variable(2, 0, 3);
    auto coeffs = direction_expansion(p, 0, 1, 3);
    // p(x1 + x0, x1)? convention: x0 -> x0 + x1, coefficients in x0
    REQUIRE(coeffs.size() == 4);
    CHECK(coeffs[0] == Polynomial::variable(2, 1, 3));
    CHECK(coeffs[1] == Polynomial::variable(2, 1, 2) * Rat(3));
    CHECK(coeffs[3] == Polynomial::constant(2, Rat(1)));
}

TEST_CASE("series arithmetic") {
    long D = 12;
    GradedSeries g = GradedSeries::geometric(1, D, 1);
    GradedSeries one = GradedSeries::one(1, D);
    CHECK(g * GradedSeries::one_minus_power(1, D, 1) == one);
    GradedSeries p2 = GradedSeries::inv_pochhammer(1, D, 2);
    CHECK(p2 * GradedSeries::one_minus_power(1, D, 1) * GradedSeries::one_minus_power(1, D, 2) ==
          one);
    // 1/(1-u)^2 has coefficients d+1
    GradedSeries gg = g * g;
    for (long d = 0; d <= D; ++d) CHECK(gg.coeff(d) == d + 1);
    CHECK(g.integral());
    GradedSeries frac(2, 8);
    frac.set_key(3, Rat(1));  // u^{3/2}
    CHECK(!frac.integral());
}

TEST_CASE("series on a lattice multiply by key addition") {
    GradedSeries a(4, 16), b(4, 16);
    a.set_key(2, rat(1, 2));   // u^{1/2}
    b.set_key(6, Rat(4));      // u^{3/2}
    GradedSeries c = a * b;
    CHECK(c.coeff_key(8) == Rat(2));  // u^2
    CHECK(c.coeff(2) == Rat(2));
}

TEST_CASE("echelon rank is insertion-order invariant") {
    std::vector<std::vector<Rat>> vecs = {
        {Rat(1), Rat(2), Rat(3), Rat(0)},
        {Rat(2), Rat(4), Rat(6), Rat(0)},  // dependent
        {Rat(0), Rat(1), Rat(1), Rat(1)},
        {Rat(1), Rat(3), Rat(4), Rat(1)},  // dependent on rows 1+3
        {Rat(5), Rat(0), Rat(0), Rat(7)},
    };
    std::vector<int> perm = {0, 1, 2, 3, 4};
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        EchelonBasis eb(4);
        int rank = 0;
        for (int i : perm)
            if (eb.insert(vecs[i])) ++rank;
        CHECK(rank == 3);
    }
}

TEST_CASE("echelon membership") {
    EchelonBasis eb(3);
    eb.insert({Rat(1), Rat(1), Rat(0)});
    eb.insert({Rat(0), Rat(1), Rat(1)});
    CHECK(eb.contains({Rat(1), Rat(2), Rat(1)}));
    CHECK(!eb.contains({Rat(1), Rat(0), Rat(1)}));
    CHECK(!eb.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("coefficients_in and homogeneous parts") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial p = x * x * y + x * Rat(2) + Polynomial::constant(2, Rat(3));
    auto cs = p.coefficients_in(0, 2);
    CHECK(cs[0] == Polynomial::constant(2, Rat(3)));
    CHECK(cs[1] == Polynomial::constant(2, Rat(2)));
    CHECK(cs[2] == y);
    CHECK(p.homogeneous_part(3) == x * x * y);
    CHECK(p.homogeneous_part(1) == x * Rat(2));
}
