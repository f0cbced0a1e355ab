#include "voakit/classify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace voakit;

namespace {

SparsePoly x(int i) { return SparsePoly::variable(i); }

LinearForm random_form(std::mt19937& rng)
{
    std::uniform_int_distribution<int> c(-3, 3);
    LinearForm f;
    do {
        for (auto& a : f.coeffs) a = c(rng);
    } while (std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const Scalar& s) { return sgn(s) == 0; }));
    f.constant = rational(c(rng), 2);
    return f;
}

bool same_factors(const FactoredPolynomial& got, const std::vector<LinearForm>& want)
{
    if (got.factors.size() != want.size()) return false;
    std::vector<bool> used(want.size());
    for (const auto& f : got.factors) {
        bool found = false;
        for (std::size_t i = 0; i < want.size() && !found; ++i)
            if (!used[i] && proportional(f, want[i])) used[i] = found = true;
        if (!found) return false;
    }
    return true;
}

// Zeros of the expanded polynomials on a grid of half-integral fundamental coordinates.
std::set<Weight> grid_zeros(const RootSystem& rs, const std::vector<FactoredPolynomial>& ps)
{
    std::set<Weight> out;
    for (int a = -8; a <= 4; ++a)
        for (int b = -8; b <= 4; ++b)
            for (int c = -8; c <= 4; ++c)
                for (int d = -8; d <= 4; ++d) {
                    Weight w = from_fund(rs, {rational(a, 2), rational(b, 2), rational(c, 2), rational(d, 2)});
                    if (std::all_of(ps.begin(), ps.end(), [&](const auto& p) { return sgn(evaluate(p.expanded, w)) == 0; }))
                        out.insert(w);
                }
    return out;
}

std::set<Weight> from_fund_list(const RootSystem& rs, const std::vector<std::array<Scalar, 4>>& list)
{
    std::set<Weight> out;
    for (const auto& c : list) out.insert(from_fund(rs, c));
    return out;
}

}  // namespace

TEST(FactorLinear, Examples)
{
    auto f = factor_linear(x(0) * x(0) - x(1) * x(1));
    EXPECT_TRUE(same_factors(f, {{{1, -1, 0, 0}, 0}, {{1, 1, 0, 0}, 0}}));
    f = factor_linear(x(0) * x(1) + x(0) + x(1) + SparsePoly(1));
    EXPECT_TRUE(same_factors(f, {{{1, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 1}}));
    f = factor_linear(x(2) * x(3));
    EXPECT_TRUE(same_factors(f, {{{0, 0, 1, 0}, 0}, {{0, 0, 0, 1}, 0}}));
    f = factor_linear(x(0) * Scalar(2) + SparsePoly(4));
    EXPECT_EQ(f.scale, 2);
    EXPECT_EQ(f.factors.front(), (LinearForm{{1, 0, 0, 0}, 2}));
    EXPECT_THROW(factor_linear(x(0) * x(0) + SparsePoly(1)), std::domain_error);
    EXPECT_THROW(factor_linear(x(0) * x(0) - SparsePoly(2)), std::domain_error);
    EXPECT_THROW(factor_linear(x(0) * x(0) + x(1) * x(1)), std::domain_error);
    EXPECT_THROW(factor_linear(x(0) * x(0) * x(1)), std::invalid_argument);
    EXPECT_THROW(factor_linear(SparsePoly(3)), std::invalid_argument);
}

TEST(FactorLinear, RandomProductsAndPermutations)
{
    std::mt19937 rng(13);
    for (int t = 0; t < 200; ++t) {
        LinearForm a = random_form(rng), b = random_form(rng);
        Scalar s = rational(1 + t % 5, 1 + t % 3);
        SparsePoly p = a.poly() * b.poly() * s;
        auto f = factor_linear(p);
        EXPECT_EQ(f.expanded, p);
        EXPECT_TRUE(same_factors(f, {a, b})) << p.to_string();
        // permute the variables
        LinearForm pa = a, pb = b;
        std::rotate(pa.coeffs.begin(), pa.coeffs.begin() + 1, pa.coeffs.end());
        std::rotate(pb.coeffs.begin(), pb.coeffs.begin() + 1, pb.coeffs.end());
        EXPECT_TRUE(same_factors(factor_linear(pa.poly() * pb.poly()), {pa, pb}));
    }
}

TEST(FactorLinear, FormsFromCoroots)
{
    LinearForm h = h_form(Weight(0, 0, 0, 1), -1);
    EXPECT_EQ(h(Weight(0, 0, 0, Scalar(1, 2))), 0);
    EXPECT_TRUE(proportional(h, LinearForm{{0, 0, 0, 4}, -2}));
    EXPECT_FALSE(proportional(h, LinearForm{{0, 0, 0, 2}, 1}));
    EXPECT_FALSE(proportional(LinearForm{}, LinearForm{}));
}

TEST(SolveSystem, CategoryOAtMinusFiveHalves)
{
    const Scalar h(1, 2), th(3, 2), fh(5, 2), sh(7, 2);
    const std::vector<std::array<Scalar, 4>> b_list{
        {0, 0, 0, 0},   {0, 0, 0, 1},   {-fh, 0, 0, 0}, {-sh, 0, 0, 1},  {0, -th, 0, 0},  {0, -fh, 0, 1},
        {0, 0, -h, 0},  {0, 0, -th, 1}, {h, -th, 0, 0}, {th, -fh, 0, 1}, {-th, 0, -h, 0}, {-h, 0, -th, 1},
        {0, -h, -h, 0}, {0, h, -th, 1}, {-h, -h, -h, 0}, {-th, h, -th, 1}};
    const std::vector<std::array<Scalar, 4>> f_list{{0, 0, 0, 0}, {-th, 0, 0, 0}, {-h, -h, 0, 0}, {0, -th, 1, 0}};
    for (Label l : {Label::B4, Label::F4}) {
        const auto& rs = root_system(l);
        auto ps = factored_basis(l);
        auto result = solve_system(ps);
        auto pts = result.points();
        EXPECT_TRUE(result.components.empty());
        EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
        std::set<Weight> got(pts.begin(), pts.end());
        EXPECT_EQ(got.size(), pts.size());
        EXPECT_EQ(got, from_fund_list(rs, l == Label::B4 ? b_list : f_list)) << to_string(l);
        EXPECT_EQ(got, grid_zeros(rs, ps)) << to_string(l);
    }
}

TEST(SolveSystem, PositiveDimensionalComponents)
{
    auto r = solve_system({make_factored({{{1, 0, 0, 0}, 0}, {{1, 0, 0, 0}, -1}})});
    EXPECT_TRUE(r.solutions.empty());
    ASSERT_EQ(r.components.size(), 2u);
    for (const auto& c : r.components) EXPECT_EQ(c.dimension(), 3u);
    auto inconsistent = solve_system({make_factored({{{1, 0, 0, 0}, 0}}), make_factored({{{1, 0, 0, 0}, -1}})});
    EXPECT_TRUE(inconsistent.solutions.empty());
    EXPECT_TRUE(inconsistent.components.empty());
}

TEST(ClassifyDominant, CountsAndBoxOracle)
{
    const std::map<Label, std::vector<std::size_t>> counts{{Label::B4, {2, 10, 30}}, {Label::F4, {1, 4, 10}}};
    for (const auto& [l, expect] : counts) {
        const auto& rs = root_system(l);
        for (int n = 1; n <= 3; ++n) {
            auto list = classify_dominant(rs, n);
            EXPECT_EQ(list.size(), expect[static_cast<std::size_t>(n - 1)]) << to_string(l) << " n=" << n;
            std::set<Weight> oracle;
            for (int a = 0; a <= 6; ++a)
                for (int b = 0; b <= 6; ++b)
                    for (int c = 0; c <= 6; ++c)
                        for (int d = 0; d <= 6; ++d) {
                            Weight w = from_fund(rs, {a, b, c, d});
                            if (2 * w[0] <= 2 * n - 1) oracle.insert(w);
                        }
            EXPECT_EQ(std::set<Weight>(list.begin(), list.end()), oracle);
        }
    }
    EXPECT_THROW(classify_dominant(root_system(Label::F4), 0), std::invalid_argument);
}

TEST(Restriction, FundamentalWeightsOfF4OverB4)
{
    auto w = fundamental_weights(root_system(Label::F4));
    EXPECT_EQ(restrict_weight(w[3]), (std::array<Scalar, 4>{1, 0, 0, 0}));
    EXPECT_EQ(restrict_weight(w[0]), (std::array<Scalar, 4>{0, 1, 0, 0}));
    EXPECT_EQ(restrict_weight(w[2]), (std::array<Scalar, 4>{1, 0, 0, 1}));
    EXPECT_EQ(fund_string({Scalar(-3, 2), 0, 1, -1}), "-3/2*w1 + w3 - w4");
    EXPECT_EQ(fund_string({0, 0, 0, 0}, "wb"), "0");
}

TEST(Bookkeeping, ModulesAtMinusThreeHalves)
{
    const auto& B = root_system(Label::B4);
    for (const auto& c : conformal_three_halves_list())
        EXPECT_EQ(lowest_conformal_weight(B, Scalar(-5, 2), from_fund(B, c)), Scalar(-3, 2));
    for (int i = 2; i <= 4; ++i) {
        auto r = decomposition_bookkeeping(lambda_upper(i));
        EXPECT_EQ(r.index, i);
        EXPECT_EQ(r.conformal_weight, Scalar(-3, 2));
        EXPECT_EQ(r.summands.size(), 2u);
        EXPECT_EQ(r.excluded.size(), 4u);
        EXPECT_TRUE(r.passed()) << i;
        EXPECT_EQ(r.summands.front().weight, lambda_upper(i).finite);
    }
    EXPECT_THROW(decomposition_bookkeeping(lambda_upper(1)), std::invalid_argument);
    EXPECT_THROW(lambda_upper(5), std::invalid_argument);
}
