#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powersum/families.hpp"
#include "powersum/genalg.hpp"

using namespace powersum;

namespace {
GeneratorSet two_var_power_sums(const std::vector<Rat>& a, int D) {
    GeneratorSet g;
    g.nvars = 2;
    for (int i = 1; i <= D; ++i)
        g.gens.push_back(Polynomial::variable(2, 0, i) * a[i - 1] +
                         Polynomial::variable(2, 1, i));
    return g;
}
}  // namespace

TEST_CASE("full polynomial ring dims") {
    GeneratorSet g;
    g.nvars = 2;
    g.gens = {Polynomial::variable(2, 0), Polynomial::variable(2, 1)};
    auto dims = graded_dimensions(g, 6);
    for (int d = 0; d <= 6; ++d) CHECK(dims[d] == d + 1);
}

TEST_CASE("type (1,1) algebra dims 1,1,2,3,...") {
    // oracle: the (c,q,t) = (1,2,3) deformation, dims from the closed form
    std::vector<Rat> a;
    for (int i = 1; i <= 8; ++i) a.push_back(cqt_value(Rat(1), Rat(2), Rat(3), i));
    auto dims = graded_dimensions(two_var_power_sums(a, 8), 8);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 1);
    for (int d = 2; d <= 8; ++d) CHECK(dims[d] == d);
}

TEST_CASE("membership") {
    std::vector<Rat> a;
    for (int i = 1; i <= 6; ++i) a.push_back(cqt_value(Rat(1), Rat(2), Rat(3), i));
    GeneratorSet g = two_var_power_sums(a, 6);
    Polynomial q1 = g.gens[0], q2 = g.gens[1];
    CHECK(membership(q1 * q2, g));
    CHECK(membership(q1 * q1 * q1 + q2 * q1 * Rat(5), g));
    // y alone is not in the algebra (dim_1 = 1, spanned by a1*y + z)
    CHECK(!membership(Polynomial::variable(2, 0), g));
}

TEST_CASE("quotient of C[x,y] by (x, y) and freeness") {
    GeneratorSet g;
    g.nvars = 2;
    g.gens = {Polynomial::variable(2, 0), Polynomial::variable(2, 1)};
    auto quot = quotient_by_ideal_dims(g, g.gens, 6);
    CHECK(quot[0] == 1);
    for (int d = 1; d <= 6; ++d) CHECK(quot[d] == 0);
    auto dims = graded_dimensions(g, 6);
    auto verdict = freeness_test(dims, quot, {1, 1}, 6);
    CHECK(verdict.consistent);
    CHECK(verdict.window == 6);
}

TEST_CASE("freeness refutation carries an exact witness") {
    // free prediction from quot (1,0,1) over parameters of degrees 1,2 is
    // 1,1,3,3,5,...; the algebra deviates first at degree 4
    GradedDims alg = {1, 1, 3, 3, 4};
    GradedDims quot = {1, 0, 1, 0, 0};
    auto v = freeness_test(alg, quot, {1, 2}, 4);
    CHECK(!v.consistent);
    CHECK(v.refuted_at == 4);
    CHECK(v.expected == Rat(5));
    CHECK(v.computed == Rat(4));
}

TEST_CASE("ideal generators must be members") {
    GeneratorSet g;
    g.nvars = 2;
    std::vector<Rat> a;
    for (int i = 1; i <= 5; ++i) a.push_back(cqt_value(Rat(1), Rat(2), Rat(3), i));
    g = two_var_power_sums(a, 5);
    CHECK_THROWS(quotient_by_ideal_dims(g, {Polynomial::variable(2, 0)}, 5));
}

TEST_CASE("restriction kernel: identity map has zero kernel") {
    GeneratorSet g;
    g.nvars = 2;
    g.gens = {Polynomial::variable(2, 0), Polynomial::variable(2, 1)};
    auto ker = restriction_kernel_dims(g, identity_images(2), 5);
    for (int d = 0; d <= 5; ++d) CHECK(ker[d] == 0);
}

TEST_CASE("restriction kernel: collapse y=z on C[y,z]") {
    GeneratorSet g;
    g.nvars = 2;
    g.gens = {Polynomial::variable(2, 0), Polynomial::variable(2, 1)};
    // y -> x, z -> x: kernel = (y - z), dims d
    std::vector<Polynomial> images = {Polynomial::variable(1, 0), Polynomial::variable(1, 0)};
    auto ker = restriction_kernel_dims(g, images, 6);
    CHECK(ker[0] == 0);
    for (int d = 1; d <= 6; ++d) CHECK(ker[d] == d);
}

TEST_CASE("generator validation") {
    GeneratorSet g;
    g.nvars = 2;
    g.gens = {Polynomial::variable(2, 0) + Polynomial::constant(2, Rat(1))};
    CHECK_THROWS(g.validate());  // not homogeneous
}
