// Copyright 2026 toric3d Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "toric3d/gf2.h"

using namespace toric3d;

namespace {

BitMatrix random_matrix(size_t rows, size_t cols, double density, std::mt19937 &rng) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, bit(rng));
        }
    }
    return m;
}

oracle::Dense to_dense(const BitMatrix &m) {
    oracle::Dense d;
    for (size_t r = 0; r < m.rows(); r++) {
        d.push_back(m.row_bits(r));
    }
    return d;
}

}  // namespace

TEST(Gf2, SmallExamples) {
    BitMatrix a = BitMatrix::from_sparse_rows(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(gf2::rank(a), 2u);
    auto sol = gf2::solve(a, {1, 1, 0});
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a.multiply(*sol), (Bits{1, 1, 0}));
    // free variable set to zero, pivots ascending
    EXPECT_EQ(*sol, (Bits{0, 1, 0}));
    EXPECT_FALSE(gf2::solve(a, {1, 0, 0}).has_value());
    auto ker = gf2::kernel_basis(a);
    ASSERT_EQ(ker.size(), 1u);
    EXPECT_EQ(ker[0], (Bits{1, 1, 1}));
}

TEST(Gf2, RepeatedSparseEntriesCancel) {
    BitMatrix a = BitMatrix::from_sparse_rows(4, {{1, 1, 2}});
    EXPECT_FALSE(a.get(0, 1));
    EXPECT_TRUE(a.get(0, 2));
}

TEST(Gf2, IdentityAndWideRows) {
    BitMatrix id = BitMatrix::identity(130);
    EXPECT_EQ(gf2::rank(id), 130u);
    Bits v(130, 0);
    v[129] = 1;
    v[64] = 1;
    EXPECT_EQ(id.multiply(v), v);
}

TEST(Gf2, RandomAgainstNaiveElimination) {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; t++) {
        size_t rows = 1 + rng() % 40;
        size_t cols = 1 + rng() % 150;
        BitMatrix a = random_matrix(rows, cols, 0.2 + 0.1 * (t % 4), rng);
        size_t r = gf2::rank(a);
        EXPECT_EQ(r, oracle::rank(to_dense(a)));
        auto ker = gf2::kernel_basis(a);
        EXPECT_EQ(ker.size(), cols - r);
        oracle::Dense kd(ker.begin(), ker.end());
        if (!kd.empty()) {
            EXPECT_EQ(oracle::rank(kd), ker.size());
        }
        for (const auto &k : ker) {
            EXPECT_EQ(a.multiply(k), Bits(rows, 0));
        }
        Bits x(cols);
        for (auto &b : x) {
            b = rng() & 1;
        }
        Bits y = a.multiply(x);
        auto sol = gf2::solve(a, y);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(a.multiply(*sol), y);
        Bits z(rows);
        for (auto &b : z) {
            b = rng() & 1;
        }
        auto dense = to_dense(a);
        std::vector<uint8_t> zr(z.begin(), z.end());
        bool consistent = oracle::rank(dense) == [&] {
            // augmented rank
            auto aug = dense;
            for (size_t i = 0; i < rows; i++) {
                aug[i].push_back(zr[i]);
            }
            return oracle::rank(aug);
        }();
        EXPECT_EQ(gf2::solve(a, z).has_value(), consistent);
    }
}

TEST(Gf2, DimensionMismatchThrows) {
    BitMatrix a(2, 3);
    EXPECT_THROW(a.multiply(Bits(4, 0)), std::invalid_argument);
    EXPECT_THROW(gf2::solve(a, Bits(3, 0)), std::invalid_argument);
}
