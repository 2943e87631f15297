#include "stargenus/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

namespace stargenus {
namespace {

Gf2Matrix random_matrix(std::mt19937_64& rng, int n, bool symmetric)
{
    Gf2Matrix m(n);
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = symmetric ? i : 0; j < n; ++j) {
            const bool b = bit(rng);
            m.set(i, j, b);
            if (symmetric)
                m.set(j, i, b);
        }
    return m;
}

// Row echelon on plain bool rows.
int naive_rank(const Gf2Matrix& m)
{
    const int n = m.size();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = m.get(i, j);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = rank;
        while (pivot < n && !a[pivot][col])
            ++pivot;
        if (pivot == n)
            continue;
        std::swap(a[pivot], a[rank]);
        for (int r = 0; r < n; ++r)
            if (r != rank && a[r][col])
                for (int c = 0; c < n; ++c)
                    a[r][c] = a[r][c] != a[rank][c];
        ++rank;
    }
    return rank;
}

TEST(Gf2Rank, Examples)
{
    EXPECT_EQ(Gf2Matrix(3).rank(), 0);
    EXPECT_EQ(Gf2Matrix::identity(5).rank(), 5);
    EXPECT_EQ((Gf2Matrix{{0, 1}, {1, 0}}).rank(), 2);
    EXPECT_EQ((Gf2Matrix{{1, 1}, {1, 1}}).rank(), 1);
    EXPECT_EQ((Gf2Matrix{{1, 1}, {1, 1}}).corank(), 1);
    EXPECT_EQ(Gf2Matrix(0).rank(), 0);
}

TEST(Gf2Rank, MatchesNaiveReference)
{
    std::mt19937_64 rng(42);
    for (int n = 0; n <= 64; ++n) {
        for (int k = 0; k < 4; ++k) {
            const Gf2Matrix m = random_matrix(rng, n, k % 2 == 0);
            EXPECT_EQ(m.rank(), naive_rank(m)) << "n=" << n;
            EXPECT_EQ(m.rank(), m.transpose().rank());
        }
    }
}

TEST(Gf2Rank, WideMatrices)
{
    std::mt19937_64 rng(9);
    for (int n : {65, 100, 130}) {
        const Gf2Matrix m = random_matrix(rng, n, true);
        EXPECT_EQ(m.rank(), naive_rank(m));
    }
}

TEST(PrincipalSubmatrix, Examples)
{
    const Gf2Matrix m{{1, 0, 1}, {0, 0, 1}, {1, 1, 1}};
    const std::vector<int> all{0, 1, 2};
    EXPECT_EQ(principal_submatrix(m, all), m);
    EXPECT_EQ(principal_submatrix(m, std::vector<int>{}).rank(), 0);
    EXPECT_EQ(principal_submatrix(Gf2Matrix::identity(2), std::vector<int>{1}), (Gf2Matrix{{1}}));
    EXPECT_EQ(principal_submatrix(m, std::vector<int>{2, 0}), (Gf2Matrix{{1, 1}, {1, 1}}));
    EXPECT_THROW(principal_submatrix(m, std::vector<int>{3}), std::exception);
}

TEST(PrincipalSubmatrix, RankNeverGrows)
{
    std::mt19937_64 rng(5);
    std::bernoulli_distribution keep(0.5);
    for (int k = 0; k < 200; ++k) {
        const Gf2Matrix m = random_matrix(rng, 12, true);
        std::vector<int> idx;
        for (int i = 0; i < 12; ++i)
            if (keep(rng))
                idx.push_back(i);
        EXPECT_LE(principal_submatrix(m, idx).rank(), m.rank());
    }
}

TEST(Gf2Matrix, Symmetry)
{
    EXPECT_TRUE((Gf2Matrix{{0, 1}, {1, 1}}).is_symmetric());
    EXPECT_FALSE((Gf2Matrix{{0, 1}, {0, 1}}).is_symmetric());
    EXPECT_EQ((Gf2Matrix{{0, 1}, {0, 1}}).transpose(), (Gf2Matrix{{0, 0}, {1, 1}}));
}

} // namespace
} // namespace stargenus
