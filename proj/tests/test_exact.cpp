#include "voakit/exact.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace voakit;

namespace {

// Cofactor expansion; independent of the elimination code.
Scalar det(const ExactMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Scalar s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Scalar term = m(0, j) * det(minor);
        s += (j % 2 == 0) ? term : Scalar(-term);
    }
    return s;
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rational(num(rng), den(rng));
        }
    return m;
}

}  // namespace

TEST(Scalar, ParsesCanonicalRationals)
{
    EXPECT_EQ(parse_scalar("-5/2"), Scalar(-5, 2));
    EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
    EXPECT_EQ(parse_scalar("+7"), Scalar(7));
    EXPECT_EQ(parse_scalar("\xE2\x88\x92" "3/2"), Scalar(-3, 2));
    EXPECT_EQ(to_string(parse_scalar("-10/4")), "-5/2");
}

TEST(Scalar, RejectsMalformedLiterals)
{
    for (const char* bad : {"", "1/0", "1//2", "a", "3/", "/3", "1.5"}) EXPECT_THROW(parse_scalar(bad), std::invalid_argument) << bad;
}

TEST(Scalar, ExactSqrt)
{
    EXPECT_EQ(*exact_sqrt(Scalar(9, 4)), Scalar(3, 2));
    EXPECT_EQ(*exact_sqrt(Scalar(0)), Scalar(0));
    EXPECT_FALSE(exact_sqrt(Scalar(2)).has_value());
    EXPECT_FALSE(exact_sqrt(Scalar(-1)).has_value());
    EXPECT_EQ(factorial(5), Scalar(120));
    EXPECT_EQ(rational(4, -6), Scalar(-2, 3));
    EXPECT_EQ(to_string(rational(10, 2)), "5");
}

TEST(SparsePoly, RingOperations)
{
    auto x = SparsePoly::variable(0), y = SparsePoly::variable(1);
    SparsePoly p = (x + y) * (x - y);
    EXPECT_EQ(p, x * x - y * y);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.evaluate({Scalar(3), Scalar(1, 2), 0, 0}), Scalar(35, 4));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p * Scalar(-2)).monic(), p.monic());
    EXPECT_EQ(SparsePoly::linear({1, 0, 0, 2}, Scalar(1, 2)).to_string(), "x1 + 2*x4 + 1/2");
}

TEST(ExactMatrix, RankMatchesDeterminant)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        ExactMatrix m = random_matrix(rng, 4, 4);
        if (trial % 4 == 0)
            for (std::size_t j = 0; j < 4; ++j) m(3, j) = m(0, j) + Scalar(2) * m(1, j);
        bool singular = sgn(det(m)) == 0;
        EXPECT_EQ(rank(m) < 4, singular);
        if (!singular) {
            EXPECT_EQ(m * inverse(m), ExactMatrix::identity(4));
            EXPECT_EQ(inverse(m) * m, ExactMatrix::identity(4));
        } else {
            EXPECT_THROW(inverse(m), std::domain_error);
        }
    }
}

TEST(ExactMatrix, NullspaceVectorsAreAnnihilated)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        ExactMatrix m = random_matrix(rng, 3, 6);
        auto ns = nullspace(m);
        EXPECT_EQ(ns.size(), 6 - rank(m));
        for (const auto& v : ns) {
            ExactMatrix col(6, 1);
            for (std::size_t i = 0; i < 6; ++i) col(i, 0) = v[i];
            EXPECT_EQ(m * col, ExactMatrix(3, 1));
        }
    }
}

TEST(ExactMatrix, SolveConsistentAndInconsistent)
{
    ExactMatrix a{{1, 2}, {2, 4}};
    EXPECT_FALSE(solve(a, {1, 3}).has_value());
    auto x = solve(ExactMatrix{{2, 1}, {1, -1}}, {Scalar(3), Scalar(0)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], Scalar(1));
    EXPECT_EQ((*x)[1], Scalar(1));
}

TEST(EchelonBasis, AgreesWithDenseRank)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        ExactMatrix m = random_matrix(rng, 5, 4);
        for (std::size_t j = 0; j < 4; ++j) m(4, j) = m(0, j) - m(2, j);
        EchelonBasis e;
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t i = 0; i < 5; ++i) {
            e.insert(to_sparse(m.row(i)));
            rows.push_back(m.row(i));
        }
        EXPECT_EQ(e.dim(), rank(m));
        std::vector<Scalar> combo(4);
        for (std::size_t j = 0; j < 4; ++j) combo[j] = Scalar(1, 3) * m(1, j) + m(3, j);
        EXPECT_TRUE(e.contains(to_sparse(combo)));
        EXPECT_TRUE(span_contains(rows, combo));
    }
    EchelonBasis e;
    e.insert(to_sparse({1, 0, 0}));
    EXPECT_FALSE(e.contains(to_sparse({0, 1, 0})));
    EXPECT_FALSE(e.insert(to_sparse({3, 0, 0})));
}

TEST(Indexer, StableIndices)
{
    Indexer<std::string> ix;
    EXPECT_EQ(ix.index("b"), 0u);
    EXPECT_EQ(ix.index("a"), 1u);
    EXPECT_EQ(ix.index("b"), 0u);
    EXPECT_EQ(ix.key(1), "a");
    EXPECT_FALSE(ix.find("c").has_value());
    EXPECT_EQ(ix.size(), 2u);
}
