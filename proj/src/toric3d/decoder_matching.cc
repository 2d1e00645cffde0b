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

#include "toric3d/decoder_matching.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toric3d {

namespace {

bool has_dummy_cells(const CodeSpec &code) {
    return code.num_cells > code.num_x_checks();
}

// Reusable BFS workspace; a stamp marks the cells seen by the current run.
class Bfs {
   public:
    explicit Bfs(const CodeSpec &code)
        : code_(code),
          stamp_(code.num_cells, 0),
          dist_(code.num_cells, 0),
          pred_cell_(code.num_cells, UNREACHED),
          pred_qubit_(code.num_cells, UNREACHED) {
    }

    // Stops early once `target` is discovered, or at the first dummy if requested.
    void run(uint32_t source, uint32_t radius, uint32_t target, bool stop_at_dummy) {
        ++cur_;
        order_.clear();
        first_dummy_ = UNREACHED;
        source_ = source;
        visit(source, 0, UNREACHED, UNREACHED);
        for (size_t head = 0; head < order_.size(); head++) {
            uint32_t u = order_[head];
            if ((code_.cell_is_dummy[u] && u != source) || dist_[u] >= radius) {
                continue;
            }
            for (const auto &[nb, q] : code_.cell_neighbors[u]) {
                if (stamp_[nb] == cur_) {
                    continue;
                }
                visit(nb, dist_[u] + 1, u, q);
                if (code_.cell_is_dummy[nb] && first_dummy_ == UNREACHED) {
                    first_dummy_ = nb;
                    if (stop_at_dummy) {
                        return;
                    }
                }
                if (nb == target) {
                    return;
                }
            }
        }
    }

    bool seen(uint32_t c) const {
        return stamp_[c] == cur_;
    }
    uint32_t dist(uint32_t c) const {
        return seen(c) ? dist_[c] : UNREACHED;
    }
    uint32_t first_dummy() const {
        return first_dummy_;
    }
    const std::vector<uint32_t> &order() const {
        return order_;
    }

    std::vector<uint32_t> path(uint32_t target) const {
        if (!seen(target)) {
            throw std::logic_error("matching path target was not reached");
        }
        std::vector<uint32_t> out;
        for (uint32_t c = target; c != source_; c = pred_cell_[c]) {
            out.push_back(pred_qubit_[c]);
        }
        return out;
    }

    void export_to(DistanceMap &m) const {
        size_t n = code_.num_cells;
        m.dist.assign(n, UNREACHED);
        m.pred_cell.assign(n, UNREACHED);
        m.pred_qubit.assign(n, UNREACHED);
        for (uint32_t c : order_) {
            m.dist[c] = dist_[c];
            m.pred_cell[c] = pred_cell_[c];
            m.pred_qubit[c] = pred_qubit_[c];
        }
        m.nearest_dummy = first_dummy_;
    }

   private:
    void visit(uint32_t c, uint32_t d, uint32_t pred, uint32_t q) {
        stamp_[c] = cur_;
        dist_[c] = d;
        pred_cell_[c] = pred;
        pred_qubit_[c] = q;
        order_.push_back(c);
    }

    const CodeSpec &code_;
    uint32_t cur_ = 0;
    uint32_t source_ = 0;
    uint32_t first_dummy_ = UNREACHED;
    std::vector<uint32_t> stamp_;
    std::vector<uint32_t> dist_;
    std::vector<uint32_t> pred_cell_;
    std::vector<uint32_t> pred_qubit_;
    std::vector<uint32_t> order_;
};

std::vector<uint32_t> defects_of(const CodeSpec &code, const Bits &sigma) {
    if (sigma.size() != code.num_x_checks()) {
        throw std::invalid_argument("syndrome length does not match the number of X checks");
    }
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < sigma.size(); i++) {
        if (sigma[i]) {
            out.push_back(i);
        }
    }
    return out;
}

uint32_t boundary_distance(Bfs &bfs, uint32_t cell) {
    bfs.run(cell, UNREACHED, UNREACHED, true);
    if (bfs.first_dummy() == UNREACHED) {
        throw std::logic_error("defect cannot reach the boundary");
    }
    return bfs.dist(bfs.first_dummy());
}

uint32_t find_root(std::vector<uint32_t> &parent, uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

std::vector<uint32_t> DistanceMap::path_to(uint32_t target) const {
    if (target >= dist.size() || dist[target] == UNREACHED) {
        throw std::out_of_range("path target not reached");
    }
    std::vector<uint32_t> out;
    for (uint32_t c = target; c != source; c = pred_cell[c]) {
        out.push_back(pred_qubit[c]);
    }
    return out;
}

DistanceMap lattice_distances(const CodeSpec &code, uint32_t source, uint32_t max_radius) {
    if (source >= code.num_cells || code.cell_is_dummy[source]) {
        throw std::invalid_argument("distance source must be a real cell");
    }
    Bfs bfs(code);
    bfs.run(source, max_radius, UNREACHED, false);
    DistanceMap m;
    m.source = source;
    bfs.export_to(m);
    return m;
}

AuxGraph build_aux_graph(const CodeSpec &code, const Bits &sigma) {
    AuxGraph g;
    g.defects = defects_of(code, sigma);
    g.has_boundary = has_dummy_cells(code);
    const int k = (int)g.defects.size();
    Bfs bfs(code);
    if (g.has_boundary) {
        for (uint32_t c : g.defects) {
            g.boundary_distance.push_back(boundary_distance(bfs, c));
        }
    }
    for (int i = 0; i < k; i++) {
        bfs.run(g.defects[i], UNREACHED, UNREACHED, false);
        for (int j = i + 1; j < k; j++) {
            uint32_t d = bfs.dist(g.defects[j]);
            if (d == UNREACHED) {
                throw std::logic_error("defects lie in disconnected parts of the lattice");
            }
            g.edges.push_back({i, j, (int64_t)d});
        }
        if (g.has_boundary) {
            g.edges.push_back({i, k + i, (int64_t)g.boundary_distance[i]});
            for (int j = i + 1; j < k; j++) {
                g.edges.push_back({k + i, k + j, 0});
            }
        }
    }
    return g;
}

PhaseDecodeResult decode_phase_detailed(const CodeSpec &code, const Bits &sigma) {
    if (code.family == CodeFamily::welded && code.R > 1) {
        throw std::invalid_argument("matching decoder does not support welded qubits");
    }
    PhaseDecodeResult res;
    res.estimate.assign(code.n, 0);
    std::vector<uint32_t> defects = defects_of(code, sigma);
    if (defects.empty()) {
        return res;
    }
    const uint32_t k = (uint32_t)defects.size();
    Bfs bfs(code);

    if (has_dummy_cells(code)) {
        std::vector<uint32_t> b(k);
        for (uint32_t i = 0; i < k; i++) {
            b[i] = boundary_distance(bfs, defects[i]);
        }
        const uint32_t b_max = *std::max_element(b.begin(), b.end());
        std::vector<uint32_t> index_of(code.num_cells, UNREACHED);
        for (uint32_t i = 0; i < k; i++) {
            index_of[defects[i]] = i;
        }
        std::vector<uint32_t> parent(k);
        std::iota(parent.begin(), parent.end(), 0);
        struct PairEdge {
            uint32_t i, j, d;
        };
        std::vector<PairEdge> pair_edges;
        for (uint32_t i = 0; i < k; i++) {
            bfs.run(defects[i], b[i] + b_max - 1, UNREACHED, false);
            for (uint32_t c : bfs.order()) {
                uint32_t j = index_of[c];
                if (j != UNREACHED && j > i && bfs.dist(c) < b[i] + b[j]) {
                    pair_edges.push_back({i, j, bfs.dist(c)});
                    parent[find_root(parent, i)] = find_root(parent, j);
                }
            }
        }

        std::vector<std::vector<uint32_t>> clusters(k);
        for (uint32_t i = 0; i < k; i++) {
            clusters[find_root(parent, i)].push_back(i);
        }
        std::vector<std::vector<PairEdge>> cluster_edges(k);
        for (const auto &e : pair_edges) {
            cluster_edges[find_root(parent, e.i)].push_back(e);
        }
        std::vector<uint32_t> local(k, 0);
        for (uint32_t root = 0; root < k; root++) {
            const auto &members = clusters[root];
            if (members.empty()) {
                continue;
            }
            if (members.size() == 1) {
                res.pairs.push_back({defects[members[0]], UNREACHED});
                res.matched_weight += b[members[0]];
                continue;
            }
            const int m = (int)members.size();
            for (int a = 0; a < m; a++) {
                local[members[a]] = a;
            }
            std::vector<WeightedEdge> edges;
            for (const auto &e : cluster_edges[root]) {
                edges.push_back({(int)local[e.i], (int)local[e.j], (int64_t)e.d});
            }
            for (int a = 0; a < m; a++) {
                edges.push_back({a, m + a, (int64_t)b[members[a]]});
                for (int c = a + 1; c < m; c++) {
                    edges.push_back({m + a, m + c, 0});
                }
            }
            auto mate = min_weight_perfect_matching(2 * m, edges);
            if (!mate) {
                throw std::logic_error("no perfect matching in a boundary cluster");
            }
            for (int a = 0; a < m; a++) {
                int partner = (*mate)[a];
                if (partner == m + a) {
                    res.pairs.push_back({defects[members[a]], UNREACHED});
                    res.matched_weight += b[members[a]];
                } else if (partner < m && partner > a) {
                    res.pairs.push_back({defects[members[a]], defects[members[partner]]});
                } else if (partner >= m) {
                    throw std::logic_error("defect matched to a foreign boundary node");
                }
            }
        }
    } else {
        if (k % 2 != 0) {
            throw std::logic_error("odd number of defects on a lattice without boundary");
        }
        std::vector<WeightedEdge> edges;
        for (uint32_t i = 0; i < k; i++) {
            bfs.run(defects[i], UNREACHED, UNREACHED, false);
            for (uint32_t j = i + 1; j < k; j++) {
                uint32_t d = bfs.dist(defects[j]);
                if (d == UNREACHED) {
                    throw std::logic_error("defects lie in disconnected parts of the lattice");
                }
                edges.push_back({(int)i, (int)j, (int64_t)d});
            }
        }
        auto mate = min_weight_perfect_matching((int)k, edges);
        if (!mate) {
            throw std::logic_error("no perfect matching among defects");
        }
        for (uint32_t i = 0; i < k; i++) {
            if ((uint32_t)(*mate)[i] > i) {
                res.pairs.push_back({defects[i], defects[(*mate)[i]]});
            }
        }
    }

    std::sort(res.pairs.begin(), res.pairs.end());
    for (const auto &[u, v] : res.pairs) {
        std::vector<uint32_t> path;
        if (v == UNREACHED) {
            bfs.run(u, UNREACHED, UNREACHED, true);
            path = bfs.path(bfs.first_dummy());
        } else {
            bfs.run(u, UNREACHED, v, false);
            path = bfs.path(v);
            res.matched_weight += (int64_t)path.size();
        }
        for (uint32_t q : path) {
            res.estimate[q] ^= 1;
        }
    }
    return res;
}

Bits decode_phase(const CodeSpec &code, const Bits &sigma) {
    return decode_phase_detailed(code, sigma).estimate;
}

}  // namespace toric3d
