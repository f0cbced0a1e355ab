#include "voakit/uea.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace voakit;

namespace {

UEAElement random_monomial_sum(std::mt19937& rng, int terms, int length)
{
    std::uniform_int_distribution<int> idx(0, kLieDim - 1), c(-2, 2);
    UEAElement u;
    for (int t = 0; t < terms; ++t) {
        UEAElement m = UEAElement::one();
        for (int i = 0; i < length; ++i) m = multiply(m, UEAElement::generator(idx(rng)));
        u.add(m, Scalar(c(rng)));
    }
    return u;
}

bool is_normal_ordered(const UEAElement& u)
{
    for (const auto& [m, c] : u.terms())
        if (!std::is_sorted(m.begin(), m.end())) return false;
    return true;
}

}  // namespace

TEST(UEA, CommutatorOfGeneratorsIsBracket)
{
    const auto& g = gF();
    for (int a = 0; a < kLieDim; ++a)
        for (int b = 0; b < kLieDim; ++b) {
            auto x = UEAElement::generator(a), y = UEAElement::generator(b);
            EXPECT_EQ(multiply(x, y) - multiply(y, x), UEAElement::from_lie(g.bracket(a, b)));
        }
}

TEST(UEA, MultiplicationIsAssociative)
{
    std::mt19937 rng(21);
    for (int t = 0; t < 30; ++t) {
        auto a = random_monomial_sum(rng, 2, 2), b = random_monomial_sum(rng, 2, 2), c = random_monomial_sum(rng, 2, 2);
        auto left = multiply(multiply(a, b), c);
        EXPECT_EQ(left, multiply(a, multiply(b, c)));
        EXPECT_TRUE(is_normal_ordered(left));
    }
}

TEST(UEA, AdjointIsDerivation)
{
    const auto& g = gF();
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> idx(0, kLieDim - 1);
    for (int t = 0; t < 30; ++t) {
        int x = idx(rng);
        auto u = random_monomial_sum(rng, 2, 2), v = random_monomial_sum(rng, 2, 1);
        EXPECT_EQ(adjoint(x, multiply(u, v)), multiply(adjoint(x, u), v) + multiply(u, adjoint(x, v)));
    }
    auto e = g.e(Weight(1, 1, 0, 0));
    EXPECT_TRUE(adjoint(e, power(UEAElement::generator(e), 3)).is_zero());
    EXPECT_EQ(power(UEAElement::generator(e), 0), UEAElement::one());
}

TEST(UEA, WeightOfHomogeneousElements)
{
    const auto& g = gF();
    Weight a(1, 0, 0, 0), b = Weight::half(1, -1, 1, 1);
    auto u = multiply(UEAElement::generator(g.e(a)), UEAElement::generator(g.f(b)));
    EXPECT_EQ(weight(u), a - b);
    EXPECT_THROW(weight(UEAElement::generator(g.e(a)) + UEAElement::generator(g.e(b))), std::invalid_argument);
}

TEST(UEA, HighestWeightPolynomial)
{
    const auto& g = gF();
    Weight r(1, -1, 0, 0);
    // e f = f e + h_r acts on a highest-weight vector by <mu, r^v>
    auto ef = multiply(UEAElement::generator(g.e(r)), UEAElement::generator(g.f(r)));
    EXPECT_EQ(hw_polynomial(ef), cartan_form(coroot(r)));
    auto fe = multiply(UEAElement::generator(g.f(r)), UEAElement::generator(g.e(r)));
    EXPECT_TRUE(hw_polynomial(fe).is_zero());
    auto h2 = multiply(UEAElement::generator(g.h(1)), UEAElement::generator(g.h(1)));
    Weight mu(3, 1, Scalar(1, 2), 0);
    Scalar expect = dot(mu, g.h_vector(1));
    EXPECT_EQ(evaluate(hw_polynomial(h2), mu), expect * expect);
    EXPECT_THROW(hw_polynomial(UEAElement::generator(g.e(r))), std::invalid_argument);
}

TEST(UEA, ZhuImageOfModes)
{
    const auto& g = gF();
    int x = g.e(Weight(1, 0, 0, 0)), y = g.f(Weight(0, 1, 0, 0));
    VermaModule vm(Scalar(-5, 2));
    StateVector v = vm.act(x, -1, vm.act(y, -2, StateVector::vacuum()));
    EXPECT_EQ(v.size(), 2u);
    // x(-1) y(-2) 1 -> -y x
    EXPECT_EQ(zhu_image(v), Scalar(-1) * multiply(UEAElement::generator(y), UEAElement::generator(x)));
    StateVector bad(mode_monomial({{x, 0}}), 1);
    EXPECT_THROW(zhu_image(bad), std::invalid_argument);
}

TEST(UEA, IdealGeneratorModuleDimensions)
{
    auto u = build_ideal_generator(Family::F, 1);
    EXPECT_EQ(weight(u), Weight(2, 0, 0, 0));
    auto rb = generate_R(u, Label::B4);
    auto rf = generate_R(u, Label::F4);
    EXPECT_EQ(rb.dim(), 44u);
    EXPECT_EQ(rf.dim(), 324u);
    EXPECT_EQ(rf.weight_space(Weight{}).size(), 12u);
    EXPECT_TRUE(rf.contains(u));
    EXPECT_TRUE(rf.contains(Scalar(3) * rb.weight_space(Weight{}).front()));
    EXPECT_EQ(poly_echelon(zero_weight_polynomials(rf)).size(), 11u);
    EXPECT_EQ(poly_echelon(zero_weight_polynomials(rb)).size(), 4u);
}

TEST(UEA, PolynomialSpans)
{
    auto x = SparsePoly::variable(0), y = SparsePoly::variable(1);
    std::vector<SparsePoly> a{x * x, x * x + y, y};
    std::vector<SparsePoly> b{y * Scalar(2), x * x - y};
    EXPECT_EQ(poly_echelon(a).size(), 2u);
    EXPECT_TRUE(same_span(a, b));
    EXPECT_FALSE(same_span(a, {x * x}));
    for (const auto& p : poly_echelon(a)) EXPECT_EQ(p, p.monic());
}

TEST(UEA, ZhuImageExamples)
{
    const auto& g = gF();
    VermaModule vm(Scalar(-5, 2));
    EXPECT_EQ(zhu_image(StateVector::vacuum()), UEAElement::one());
    int x = g.h(2);
    EXPECT_EQ(zhu_image(vm.act(x, -2, StateVector::vacuum())), Scalar(-1) * UEAElement::generator(x));
    EXPECT_EQ(zhu_image(build_singular(vm, Family::F, 1)), build_ideal_generator(Family::F, 1));
}

TEST(UEA, IdealGeneratorIsAdHighestWeight)
{
    const auto& g = gF();
    auto u = build_ideal_generator(Family::F, 1);
    for (const auto& [e, f] : g.chevalley_generators(Label::F4)) EXPECT_TRUE(adjoint(e, u).is_zero());
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(adjoint(g.h(j), u), dot(g.h_vector(j), Weight(2, 0, 0, 0)) * u);
    // f_a^2 u / 2 = u_B' for a = (e1-e2-e3+e4)/2
    int f = g.f(Weight::half(1, -1, -1, 1));
    EXPECT_EQ(Scalar(1, 2) * adjoint(f, adjoint(f, u)), build_ideal_generator(Family::Bprime, 1));
}

TEST(UEA, AdjointIsLieAction)
{
    const auto& g = gF();
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> idx(0, kLieDim - 1);
    for (int t = 0; t < 30; ++t) {
        int x = idx(rng), y = idx(rng);
        auto u = random_monomial_sum(rng, 2, 2);
        EXPECT_EQ(adjoint(g.bracket(basis_element(x), basis_element(y)), u),
                  adjoint(x, adjoint(y, u)) - adjoint(y, adjoint(x, u)));
    }
}

TEST(UEA, ExtremeWeightMultiplicities)
{
    auto rb = generate_R(build_ideal_generator(Family::F, 1), Label::B4);
    EXPECT_EQ(rb.weight_space(Weight(2, 0, 0, 0)).size(), 1u);
    EXPECT_EQ(rb.weight_space(Weight(-2, 0, 0, 0)).size(), 1u);
    const auto& g = gF();
    for (const auto& r : rb.weight_space(Weight{}))
        for (int j = 1; j <= 4; ++j) EXPECT_TRUE(hw_polynomial(adjoint(g.h(j), r)).is_zero());
}
