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

#include "toric3d/blossom.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace toric3d {

// Internally nodes are 1-based; 0 means "none". Indices above n_ are blossoms.
// S_[x]: 0 = outer (even), 1 = inner (odd), -1 = unlabeled.

MaxWeightMatching::MaxWeightMatching(int num_nodes)
    : n_(num_nodes), stride_((size_t)2 * num_nodes + 1) {
    if (num_nodes < 0) {
        throw std::invalid_argument("negative node count");
    }
    size_t cap = stride_;
    g_.resize(cap * cap);
    for (int u = 1; u <= n_; u++) {
        for (int v = 1; v <= n_; v++) {
            g(u, v) = Link{u, v, 0};
        }
    }
    flower_from_.assign(cap * (size_t)(n_ + 1), 0);
    lab_.assign(cap, 0);
    match_.assign(cap, 0);
    slack_.assign(cap, 0);
    st_.assign(cap, 0);
    pa_.assign(cap, 0);
    S_.assign(cap, -1);
    vis_.assign(cap, 0);
    flower_.assign(cap, {});
}

void MaxWeightMatching::set_edge(int u, int v, int64_t weight) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        throw std::out_of_range("invalid matching edge");
    }
    // doubled so that every dual update stays integral
    g(u + 1, v + 1).w = weight * 2;
    g(v + 1, u + 1).w = weight * 2;
}

void MaxWeightMatching::update_slack(int u, int x) {
    if (!slack_[x] || slack_of(g(u, x)) < slack_of(g(slack_[x], x))) {
        slack_[x] = u;
    }
}

void MaxWeightMatching::set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; u++) {
        if (g(u, x).w > 0 && st_[u] != x && S_[st_[u]] == 0) {
            update_slack(u, x);
        }
    }
}

void MaxWeightMatching::q_push(int x) {
    if (x <= n_) {
        q_.push_back(x);
        return;
    }
    for (int y : flower_[x]) {
        q_push(y);
    }
}

void MaxWeightMatching::set_st(int x, int b) {
    st_[x] = b;
    if (x <= n_) {
        return;
    }
    for (int y : flower_[x]) {
        set_st(y, b);
    }
}

int MaxWeightMatching::get_pr(int b, int xr) {
    auto &f = flower_[b];
    int pr = (int)(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
        std::reverse(f.begin() + 1, f.end());
        return (int)f.size() - pr;
    }
    return pr;
}

void MaxWeightMatching::set_match(int u, int v) {
    match_[u] = g(u, v).v;
    if (u <= n_) {
        return;
    }
    Link e = g(u, v);
    int xr = flower_from(u, e.u);
    int pr = get_pr(u, xr);
    for (int i = 0; i < pr; i++) {
        set_match(flower_[u][i], flower_[u][i ^ 1]);
    }
    set_match(xr, v);
    std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
}

void MaxWeightMatching::augment(int u, int v) {
    for (;;) {
        int xnv = st_[match_[u]];
        set_match(u, v);
        if (!xnv) {
            return;
        }
        set_match(xnv, st_[pa_[xnv]]);
        u = st_[pa_[xnv]];
        v = xnv;
    }
}

int MaxWeightMatching::get_lca(int u, int v) {
    ++vis_stamp_;
    for (; u || v; std::swap(u, v)) {
        if (u == 0) {
            continue;
        }
        if (vis_[u] == vis_stamp_) {
            return u;
        }
        vis_[u] = vis_stamp_;
        u = st_[match_[u]];
        if (u) {
            u = st_[pa_[u]];
        }
    }
    return 0;
}

void MaxWeightMatching::add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) {
        ++b;
    }
    if (b > n_x_) {
        ++n_x_;
    }
    lab_[b] = 0;
    S_[b] = 0;
    match_[b] = match_[lca];
    auto &f = flower_[b];
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
        f.push_back(x);
        f.push_back(y = st_[match_[x]]);
        q_push(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
        f.push_back(x);
        f.push_back(y = st_[match_[x]]);
        q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; x++) {
        g(b, x).w = 0;
        g(x, b).w = 0;
    }
    for (int x = 1; x <= n_; x++) {
        flower_from(b, x) = 0;
    }
    for (int xs : f) {
        for (int x = 1; x <= n_x_; x++) {
            if (g(b, x).w == 0 || slack_of(g(xs, x)) < slack_of(g(b, x))) {
                g(b, x) = g(xs, x);
                g(x, b) = g(x, xs);
            }
        }
        for (int x = 1; x <= n_; x++) {
            if (flower_from(xs, x)) {
                flower_from(b, x) = xs;
            }
        }
    }
    set_slack(b);
}

void MaxWeightMatching::expand_blossom(int b) {
    for (int x : flower_[b]) {
        set_st(x, x);
    }
    int xr = flower_from(b, g(b, pa_[b]).u);
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
        int xs = flower_[b][i];
        int xns = flower_[b][i + 1];
        pa_[xs] = g(xns, xs).u;
        S_[xs] = 1;
        S_[xns] = 0;
        slack_[xs] = 0;
        set_slack(xns);
        q_push(xns);
    }
    S_[xr] = 1;
    pa_[xr] = pa_[b];
    for (size_t i = pr + 1; i < flower_[b].size(); i++) {
        int xs = flower_[b][i];
        S_[xs] = -1;
        set_slack(xs);
    }
    st_[b] = 0;
}

bool MaxWeightMatching::on_found_edge(const Link &e) {
    int u = st_[e.u];
    int v = st_[e.v];
    if (S_[v] == -1) {
        pa_[v] = e.u;
        S_[v] = 1;
        int nu = st_[match_[v]];
        slack_[v] = 0;
        slack_[nu] = 0;
        S_[nu] = 0;
        q_push(nu);
    } else if (S_[v] == 0) {
        int lca = get_lca(u, v);
        if (!lca) {
            augment(u, v);
            augment(v, u);
            return true;
        }
        add_blossom(u, lca, v);
    }
    return false;
}

bool MaxWeightMatching::augment_once() {
    std::fill(S_.begin() + 1, S_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; x++) {
        if (st_[x] == x && !match_[x]) {
            pa_[x] = 0;
            S_[x] = 0;
            q_push(x);
        }
    }
    if (q_.empty()) {
        return false;
    }
    for (;;) {
        while (!q_.empty()) {
            int u = q_.front();
            q_.pop_front();
            if (S_[st_[u]] == 1) {
                continue;
            }
            for (int v = 1; v <= n_; v++) {
                if (g(u, v).w > 0 && st_[u] != st_[v]) {
                    if (slack_of(g(u, v)) == 0) {
                        if (on_found_edge(g(u, v))) {
                            return true;
                        }
                    } else {
                        update_slack(u, st_[v]);
                    }
                }
            }
        }
        int64_t d = std::numeric_limits<int64_t>::max();
        for (int b = n_ + 1; b <= n_x_; b++) {
            if (st_[b] == b && S_[b] == 1) {
                d = std::min(d, lab_[b] / 2);
            }
        }
        for (int x = 1; x <= n_x_; x++) {
            if (st_[x] == x && slack_[x]) {
                if (S_[x] == -1) {
                    d = std::min(d, slack_of(g(slack_[x], x)));
                } else if (S_[x] == 0) {
                    d = std::min(d, slack_of(g(slack_[x], x)) / 2);
                }
            }
        }
        for (int u = 1; u <= n_; u++) {
            if (S_[st_[u]] == 0) {
                if (lab_[u] <= d) {
                    return false;
                }
                lab_[u] -= d;
            } else if (S_[st_[u]] == 1) {
                lab_[u] += d;
            }
        }
        for (int b = n_ + 1; b <= n_x_; b++) {
            if (st_[b] == b) {
                if (S_[st_[b]] == 0) {
                    lab_[b] += d * 2;
                } else if (S_[st_[b]] == 1) {
                    lab_[b] -= d * 2;
                }
            }
        }
        q_.clear();
        for (int x = 1; x <= n_x_; x++) {
            if (st_[x] == x && slack_[x] && st_[slack_[x]] != x && slack_of(g(slack_[x], x)) == 0) {
                if (on_found_edge(g(slack_[x], x))) {
                    return true;
                }
            }
        }
        for (int b = n_ + 1; b <= n_x_; b++) {
            if (st_[b] == b && S_[b] == 1 && lab_[b] == 0) {
                expand_blossom(b);
            }
        }
    }
}

std::vector<int> MaxWeightMatching::solve() {
    n_x_ = n_;
    std::fill(match_.begin(), match_.end(), 0);
    for (int u = 0; u <= n_; u++) {
        st_[u] = u;
        flower_[u].clear();
    }
    int64_t w_max = 0;
    for (int u = 1; u <= n_; u++) {
        for (int v = 1; v <= n_; v++) {
            flower_from(u, v) = (u == v ? u : 0);
            w_max = std::max(w_max, g(u, v).w);
        }
    }
    for (int u = 1; u <= n_; u++) {
        lab_[u] = w_max;
    }
    while (augment_once()) {
    }
    std::vector<int> mate(n_, -1);
    for (int u = 1; u <= n_; u++) {
        if (match_[u]) {
            mate[u - 1] = match_[u] - 1;
        }
    }
    return mate;
}

std::optional<std::vector<int>> min_weight_perfect_matching(int num_nodes, const std::vector<WeightedEdge> &edges) {
    if (num_nodes % 2 != 0) {
        return std::nullopt;
    }
    if (num_nodes == 0) {
        return std::vector<int>{};
    }
    int64_t max_cost = 0;
    for (const auto &e : edges) {
        if (e.weight < 0) {
            throw std::invalid_argument("matching costs must be non-negative");
        }
        max_cost = std::max(max_cost, e.weight);
    }
    // Any matching with more edges outweighs every matching with fewer, so a maximum-weight
    // matching under big - cost is a minimum-cost perfect matching whenever one exists.
    int64_t big = max_cost * (num_nodes / 2 + 1) + 1;
    // parallel edges: keep the cheapest
    std::vector<int64_t> cost((size_t)num_nodes * num_nodes, -1);
    for (const auto &e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= num_nodes || e.v >= num_nodes || e.u == e.v) {
            throw std::out_of_range("invalid matching edge");
        }
        int64_t &c = cost[(size_t)std::min(e.u, e.v) * num_nodes + std::max(e.u, e.v)];
        if (c < 0 || e.weight < c) {
            c = e.weight;
        }
    }
    MaxWeightMatching m(num_nodes);
    for (int u = 0; u < num_nodes; u++) {
        for (int v = u + 1; v < num_nodes; v++) {
            int64_t c = cost[(size_t)u * num_nodes + v];
            if (c >= 0) {
                m.set_edge(u, v, big - c);
            }
        }
    }
    std::vector<int> mate = m.solve();
    for (int x : mate) {
        if (x < 0) {
            return std::nullopt;
        }
    }
    return mate;
}

}  // namespace toric3d
