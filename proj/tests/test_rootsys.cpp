#include "voakit/rootsys.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace voakit;

namespace {

const Weight e1 = Weight::unit(0), e2 = Weight::unit(1), e3 = Weight::unit(2), e4 = Weight::unit(3);

// F4: +-e_i, +-e_i +- e_j, (+-1,+-1,+-1,+-1)/2.  B4: the first two families.
std::set<Weight> listed_roots(bool with_spinors)
{
    std::set<Weight> out;
    for (int i = 0; i < 4; ++i) {
        out.insert(Weight::unit(i));
        out.insert(-Weight::unit(i));
        for (int j = i + 1; j < 4; ++j)
            for (int s : {1, -1})
                for (int t : {1, -1}) out.insert(Scalar(s) * Weight::unit(i) + Scalar(t) * Weight::unit(j));
    }
    if (with_spinors)
        for (int m = 0; m < 16; ++m)
            out.insert(Weight::half(m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1, m & 8 ? -1 : 1));
    return out;
}

Weight half_sum_positive(const RootSystem& rs)
{
    Weight s;
    for (const auto& a : rs.positive_roots) s += a;
    return Scalar(1, 2) * s;
}

// Every sum of at most `depth` positive roots.
std::set<Weight> root_sums(const RootSystem& rs, int depth)
{
    std::set<Weight> all, frontier{Weight{}};
    for (int k = 0; k < depth; ++k) {
        std::set<Weight> next;
        for (const auto& v : frontier)
            for (const auto& a : rs.positive_roots)
                if (all.insert(v + a).second) next.insert(v + a);
        frontier = std::move(next);
    }
    return all;
}

}  // namespace

TEST(RootSystem, F4AndB4MatchListedRoots)
{
    const auto& F = root_system(Label::F4);
    const auto& B = root_system(Label::B4);
    EXPECT_EQ(std::set<Weight>(F.roots.begin(), F.roots.end()), listed_roots(true));
    EXPECT_EQ(std::set<Weight>(B.roots.begin(), B.roots.end()), listed_roots(false));
    EXPECT_EQ(F.positive_roots.size(), 24u);
    EXPECT_EQ(B.positive_roots.size(), 16u);
    EXPECT_EQ(F.highest_root, e1 + e2);
    EXPECT_EQ(B.highest_root, e1 + e2);
    EXPECT_EQ(dot(F.highest_root, F.highest_root), 2);
}

TEST(RootSystem, SubsystemsOfTypeB4InsideF4)
{
    const auto& F = root_system(Label::F4);
    for (Label l : {Label::B4, Label::B4prime, Label::B4doubleprime}) {
        const auto& rs = root_system(l);
        EXPECT_EQ(rs.roots.size(), 32u) << to_string(l);
        int shorts = 0;
        for (const auto& r : rs.roots) {
            EXPECT_TRUE(F.is_root(r));
            shorts += rs.is_short(r);
        }
        EXPECT_EQ(shorts, 8) << to_string(l);
        for (const auto& a : rs.positive_roots) EXPECT_TRUE(F.is_positive_root(a)) << to_string(l) << a.tag();
    }
}

TEST(RootSystem, PositiveRootsOrderedByHeight)
{
    for (Label l : {Label::F4, Label::B4}) {
        const auto& rs = root_system(l);
        for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(rs.height(rs.positive_roots[i]), 1);
        for (std::size_t i = 1; i < rs.positive_roots.size(); ++i)
            EXPECT_LE(rs.height(rs.positive_roots[i - 1]), rs.height(rs.positive_roots[i]));
        EXPECT_EQ(rs.height(rs.highest_root), l == Label::F4 ? 11 : 7);
    }
}

TEST(RootSystem, RhoIsHalfSumOfPositiveRoots)
{
    for (Label l : {Label::F4, Label::B4, Label::B4prime, Label::B4doubleprime}) {
        const auto& rs = root_system(l);
        EXPECT_EQ(rho_bar(rs), half_sum_positive(rs)) << to_string(l);
    }
    EXPECT_EQ(rho_bar(root_system(Label::F4)), Weight(Scalar(11, 2), Scalar(5, 2), Scalar(3, 2), Scalar(1, 2)));
}

TEST(RootSystem, FundamentalWeights)
{
    const auto& F = root_system(Label::F4);
    auto w = fundamental_weights(F);
    EXPECT_EQ(w[0], e1 + e2);
    EXPECT_EQ(w[1], Scalar(2) * e1 + e2 + e3);
    EXPECT_EQ(w[2], Weight::half(3, 1, 1, 1));
    EXPECT_EQ(w[3], e1);
    const auto& B = root_system(Label::B4);
    auto wb = fundamental_weights(B);
    EXPECT_EQ(wb[0], e1);
    EXPECT_EQ(wb[1], e1 + e2);
    EXPECT_EQ(wb[2], e1 + e2 + e3);
    EXPECT_EQ(wb[3], Weight::half(1, 1, 1, 1));
    for (const RootSystem* rs : {&F, &B}) {
        auto ws = fundamental_weights(*rs);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(pairing(ws[i], rs->simple_roots[j]), i == j ? 1 : 0);
        std::array<Scalar, 4> c{Scalar(-3, 2), 2, 0, Scalar(1, 2)};
        EXPECT_EQ(fund_coords(*rs, from_fund(*rs, c)), c);
    }
}

TEST(RootSystem, WeylDimensions)
{
    const auto& F = root_system(Label::F4);
    const auto& B = root_system(Label::B4);
    EXPECT_EQ(weyl_dim(F, Weight{}), 1);
    EXPECT_EQ(weyl_dim(F, e1 + e2), 52);
    EXPECT_EQ(weyl_dim(F, e1), 26);
    EXPECT_EQ(weyl_dim(F, Scalar(2) * e1), 324);
    EXPECT_EQ(weyl_dim(B, e1), 9);
    EXPECT_EQ(weyl_dim(B, e1 + e2), 36);
    EXPECT_EQ(weyl_dim(B, Weight::half(1, 1, 1, 1)), 16);
    EXPECT_EQ(weyl_dim(B, Scalar(2) * e1), 44);
    EXPECT_THROW(weyl_dim(B, Scalar(-1) * e1), std::invalid_argument);
}

TEST(RootSystem, PositiveRootSumsAgreeWithEnumeration)
{
    for (Label l : {Label::F4, Label::B4}) {
        const auto& rs = root_system(l);
        auto sums = root_sums(rs, 8);
        int checked = 0;
        for (int a = -1; a <= 2; ++a)
            for (int b = -1; b <= 2; ++b)
                for (int c = -1; c <= 2; ++c)
                    for (int d = -1; d <= 2; ++d) {
                        Weight v = Scalar(a) * rs.simple_roots[0] + Scalar(b) * rs.simple_roots[1] +
                                   Scalar(c) * rs.simple_roots[2] + Scalar(d) * rs.simple_roots[3];
                        EXPECT_EQ(is_positive_root_sum(rs, v), sums.count(v) == 1) << v.tag();
                        ++checked;
                    }
        EXPECT_EQ(checked, 256);
        EXPECT_FALSE(is_positive_root_sum(rs, Scalar(1, 2) * rs.simple_roots[0]));
    }
}

TEST(RootSystem, DualCoxeterAndCentralCharge)
{
    const auto& F = root_system(Label::F4);
    const auto& B = root_system(Label::B4);
    EXPECT_EQ(dual_coxeter(F), 9);
    EXPECT_EQ(dual_coxeter(B), 7);
    EXPECT_EQ(lie_dim(F), 52);
    EXPECT_EQ(lie_dim(B), 36);
    EXPECT_EQ(central_charge(B, Scalar(-5, 2)), -20);
    EXPECT_EQ(central_charge(F, Scalar(-5, 2)), -20);
    EXPECT_NE(central_charge(B, -1), central_charge(F, -1));
    EXPECT_THROW(central_charge(F, -9), std::domain_error);
}

TEST(RootSystem, Labels)
{
    EXPECT_EQ(parse_label("B4'"), Label::B4prime);
    EXPECT_EQ(parse_label("B4doubleprime"), Label::B4doubleprime);
    EXPECT_THROW(parse_label("E8"), std::invalid_argument);
    EXPECT_THROW(coroot(Scalar(2) * e1), std::invalid_argument);
    EXPECT_EQ(coroot(e4), Scalar(2) * e4);
    EXPECT_EQ(coroot(e1 - e2), e1 - e2);
}
