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

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>
#include <functional>
#include <limits>
#include <random>

#include "toric3d/blossom.h"

using namespace toric3d;

namespace {

using Matrix = std::vector<std::vector<int64_t>>;  // -1: no edge

// exhaustive search over all matchings (perfect or not)
int64_t brute_force(const Matrix &w, bool perfect, bool minimize) {
    int n = (int)w.size();
    std::vector<bool> used(n, false);
    const int64_t none = minimize ? std::numeric_limits<int64_t>::max() : std::numeric_limits<int64_t>::min();
    std::function<int64_t(int)> rec = [&](int i) -> int64_t {
        while (i < n && used[i]) {
            i++;
        }
        if (i == n) {
            return 0;
        }
        used[i] = true;
        int64_t best = none;
        if (!perfect) {
            best = rec(i + 1);
        }
        for (int j = i + 1; j < n; j++) {
            if (!used[j] && w[i][j] >= 0) {
                used[j] = true;
                int64_t sub = rec(i + 1);
                if (sub != none) {
                    int64_t total = sub + w[i][j];
                    best = minimize ? std::min(best, total) : std::max(best, total);
                }
                used[j] = false;
            }
        }
        used[i] = false;
        return best;
    };
    return rec(0);
}

Matrix random_graph(int n, double density, int max_w, std::mt19937 &rng) {
    Matrix w(n, std::vector<int64_t>(n, -1));
    std::bernoulli_distribution has(density);
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (has(rng)) {
                w[i][j] = w[j][i] = 1 + (int64_t)(rng() % max_w);
            }
        }
    }
    return w;
}

int64_t matched_weight(const Matrix &w, const std::vector<int> &mate) {
    int64_t total = 0;
    for (int i = 0; i < (int)mate.size(); i++) {
        if (mate[i] > i) {
            EXPECT_GE(w[i][mate[i]], 0);
            EXPECT_EQ(mate[mate[i]], i);
            total += w[i][mate[i]];
        }
    }
    return total;
}

}  // namespace

TEST(Blossom, MaxWeightAgainstBruteForce) {
    std::mt19937 rng(11);
    for (int t = 0; t < 400; t++) {
        int n = 1 + (int)(rng() % 10);
        Matrix w = random_graph(n, 0.3 + 0.1 * (t % 7), 1 + (t % 20), rng);
        MaxWeightMatching m(n);
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                if (w[i][j] >= 0) {
                    m.set_edge(i, j, w[i][j]);
                }
            }
        }
        EXPECT_EQ(matched_weight(w, m.solve()), brute_force(w, false, false)) << "trial " << t;
    }
}

TEST(Blossom, MinPerfectAgainstBruteForce) {
    std::mt19937 rng(12);
    for (int t = 0; t < 400; t++) {
        int n = 2 * (1 + (int)(rng() % 5));
        Matrix w = random_graph(n, 0.4 + 0.1 * (t % 6), 1 + (t % 15), rng);
        std::vector<WeightedEdge> edges;
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                if (w[i][j] >= 0) {
                    // zero-cost edges appear in the decoder's boundary graph
                    if (t % 3 == 0 && (i + j) % 4 == 0) {
                        w[i][j] = w[j][i] = 0;
                    }
                    edges.push_back({i, j, w[i][j]});
                }
            }
        }
        int64_t expected = brute_force(w, true, true);
        auto mate = min_weight_perfect_matching(n, edges);
        if (expected == std::numeric_limits<int64_t>::max()) {
            EXPECT_FALSE(mate.has_value()) << "trial " << t;
        } else {
            ASSERT_TRUE(mate.has_value()) << "trial " << t;
            EXPECT_EQ(matched_weight(w, *mate), expected) << "trial " << t;
        }
    }
}

TEST(Blossom, MaxWeightAgainstBoost) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                        boost::property<boost::edge_weight_t, long>>;
    std::mt19937 rng(13);
    for (int t = 0; t < 60; t++) {
        int n = 10 + (int)(rng() % 40);
        Matrix w = random_graph(n, 0.15 + 0.05 * (t % 10), 50, rng);
        Graph g(n);
        MaxWeightMatching m(n);
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                if (w[i][j] >= 0) {
                    boost::add_edge(i, j, (long)w[i][j], g);
                    m.set_edge(i, j, w[i][j]);
                }
            }
        }
        std::vector<boost::graph_traits<Graph>::vertex_descriptor> boost_mate(n);
        boost::maximum_weighted_matching(g, &boost_mate[0]);
        int64_t boost_total = 0;
        for (int i = 0; i < n; i++) {
            int j = (int)boost_mate[i];
            if (j != (int)boost::graph_traits<Graph>::null_vertex() && j > i) {
                boost_total += w[i][j];
            }
        }
        EXPECT_EQ(matched_weight(w, m.solve()), boost_total) << "trial " << t;
    }
}

TEST(Blossom, ParallelEdgesKeepCheapest) {
    auto mate = min_weight_perfect_matching(2, {{0, 1, 5}, {1, 0, 2}});
    ASSERT_TRUE(mate.has_value());
    EXPECT_EQ((*mate)[0], 1);
}

TEST(Blossom, OddAndEmpty) {
    EXPECT_FALSE(min_weight_perfect_matching(3, {{0, 1, 1}, {1, 2, 1}}).has_value());
    EXPECT_TRUE(min_weight_perfect_matching(0, {}).has_value());
    EXPECT_THROW(min_weight_perfect_matching(2, {{0, 1, -1}}), std::invalid_argument);
}
