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

#ifndef TORIC3D_BLOSSOM_H
#define TORIC3D_BLOSSOM_H

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace toric3d {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    int64_t weight = 0;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with dual
/// variables, dense O(V^3) formulation). Only edges with positive weight are considered.
class MaxWeightMatching {
   public:
    explicit MaxWeightMatching(int num_nodes);

    /// Adds or overwrites the undirected edge (u, v). Nodes are 0-based.
    void set_edge(int u, int v, int64_t weight);

    /// Returns the mate of every node, or -1 for unmatched nodes.
    std::vector<int> solve();

   private:
    struct Link {
        int u = 0;
        int v = 0;
        int64_t w = 0;
    };

    Link &g(int a, int b) {
        return g_[(size_t)a * stride_ + b];
    }
    int &flower_from(int a, int b) {
        return flower_from_[(size_t)a * (n_ + 1) + b];
    }
    int64_t slack_of(const Link &e) {
        return lab_[e.u] + lab_[e.v] - g(e.u, e.v).w * 2;
    }

    void update_slack(int u, int x);
    void set_slack(int x);
    void q_push(int x);
    void set_st(int x, int b);
    int get_pr(int b, int xr);
    void set_match(int u, int v);
    void augment(int u, int v);
    int get_lca(int u, int v);
    void add_blossom(int u, int lca, int v);
    void expand_blossom(int b);
    bool on_found_edge(const Link &e);
    bool augment_once();

    int n_;
    int n_x_ = 0;
    size_t stride_;
    std::vector<Link> g_;
    std::vector<int> flower_from_;
    std::vector<int64_t> lab_;
    std::vector<int> match_, slack_, st_, pa_, S_, vis_;
    std::vector<std::vector<int>> flower_;
    std::deque<int> q_;
    int vis_stamp_ = 0;
};

/// Minimum-total-cost perfect matching. Costs must be non-negative. Returns the mate of every
/// node, or nullopt when no perfect matching exists among the given edges.
std::optional<std::vector<int>> min_weight_perfect_matching(int num_nodes, const std::vector<WeightedEdge> &edges);

}  // namespace toric3d

#endif
