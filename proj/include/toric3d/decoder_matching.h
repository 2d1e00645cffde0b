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

#ifndef TORIC3D_DECODER_MATCHING_H
#define TORIC3D_DECODER_MATCHING_H

#include <cstdint>
#include <limits>
#include <vector>

#include "toric3d/blossom.h"
#include "toric3d/css_code.h"

namespace toric3d {

constexpr uint32_t UNREACHED = std::numeric_limits<uint32_t>::max();

/// Breadth-first search over the cell graph. Neighbours are visited in ascending
/// (cell, qubit) order and the first discoverer becomes the predecessor, so recovered
/// shortest paths are canonical.
struct DistanceMap {
    uint32_t source = 0;
    std::vector<uint32_t> dist;        // UNREACHED outside the search radius
    std::vector<uint32_t> pred_cell;   // UNREACHED for the source
    std::vector<uint32_t> pred_qubit;  // qubit joining a cell to its predecessor
    /// First dummy cell discovered, or UNREACHED.
    uint32_t nearest_dummy = UNREACHED;

    /// Qubits on the canonical path from the source to the target cell.
    std::vector<uint32_t> path_to(uint32_t target) const;
};

/// Distances from one real cell. Dummy cells are reached but never expanded; the search
/// stops after the given radius.
DistanceMap lattice_distances(const CodeSpec &code, uint32_t source, uint32_t max_radius = UNREACHED);

/// Complete matching graph of one syndrome. Node i < k is defect i, node k + i is its
/// boundary copy (codes with dummy cells only).
struct AuxGraph {
    std::vector<uint32_t> defects;            // cell indices, ascending
    std::vector<uint32_t> boundary_distance;  // per defect, empty without boundary
    bool has_boundary = false;
    std::vector<WeightedEdge> edges;

    size_t num_nodes() const {
        return has_boundary ? 2 * defects.size() : defects.size();
    }
};

AuxGraph build_aux_graph(const CodeSpec &code, const Bits &sigma);

struct PhaseDecodeResult {
    Bits estimate;
    /// Total weight of the chosen perfect matching.
    int64_t matched_weight = 0;
    /// (defect cell, partner cell) with UNREACHED as partner for a boundary match.
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
};

/// Minimum-weight matching decoder for Z errors. The matching is solved per cluster: pairs
/// whose distance is at least the sum of their boundary distances are never needed, so the
/// remaining graph splits into independent pieces with the same optimum.
PhaseDecodeResult decode_phase_detailed(const CodeSpec &code, const Bits &sigma);
Bits decode_phase(const CodeSpec &code, const Bits &sigma);

}  // namespace toric3d

#endif
