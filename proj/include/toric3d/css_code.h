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

#ifndef TORIC3D_CSS_CODE_H
#define TORIC3D_CSS_CODE_H

#include <array>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "toric3d/gf2.h"
#include "toric3d/lattice3d.h"

namespace toric3d {

enum class CodeFamily : uint8_t { periodic3d, solid, welded };

std::string family_name(CodeFamily family);
CodeFamily parse_family(const std::string &text);

using SparseRows = std::vector<std::vector<uint32_t>>;

struct QubitMeta {
    /// Originates from a rough-boundary half edge.
    bool boundary = false;
    /// Shared by two or more solids after welding.
    bool welded = false;
    /// Indices of the solids containing this qubit (always {0} for unwelded families).
    std::vector<uint32_t> solids;
    /// Edge index inside the component lattice of (one of) the containing solid(s).
    uint32_t geometric_id = 0;
};

/// A CSS code given by its X-check matrix H (rows act on qubits with X and detect Z errors)
/// and its Z-check matrix T.
///
/// Besides the check matrices the code carries a "cell graph": every X check is a cell, solids
/// add dummy cells capping their half edges, and each qubit lists the cell pairs it joins (one
/// pair per containing solid, so welded qubits are hyperedges). The erasure and matching
/// decoders work on this graph.
struct CodeSpec {
    CodeFamily family = CodeFamily::solid;
    int ell = 0;
    int R = 0;
    size_t n = 0;

    SparseRows x_checks;  // H
    SparseRows z_checks;  // T
    SparseRows qubit_x_checks;
    SparseRows qubit_z_checks;

    SparseRows logicals_x;
    SparseRows logicals_z;

    std::vector<QubitMeta> qubit_meta;

    /// Cells [0, x_checks.size()) are the X checks; the rest are dummy cells.
    size_t num_cells = 0;
    std::vector<uint8_t> cell_is_dummy;
    std::vector<std::vector<std::array<uint32_t, 2>>> qubit_ends;
    /// Per cell: (neighbour cell, qubit) pairs sorted ascending.
    std::vector<std::vector<std::array<uint32_t, 2>>> cell_neighbors;

    /// Lattice the code was built from; null for welded codes.
    std::shared_ptr<const Lattice3D> lattice;

    size_t num_x_checks() const {
        return x_checks.size();
    }
    size_t num_z_checks() const {
        return z_checks.size();
    }
};

struct PauliFrame {
    Bits x;
    Bits z;

    static PauliFrame zeros(size_t n) {
        return {Bits(n, 0), Bits(n, 0)};
    }
    bool operator==(const PauliFrame &other) const = default;
};

struct Syndrome {
    Bits sigma;  // X-check outcomes, H·zᵗ
    Bits tau;    // Z-check outcomes, T·xᵗ
};

struct LogicalOutcome {
    bool z_failed = false;
    bool x_failed = false;

    bool any() const {
        return z_failed || x_failed;
    }
};

CodeSpec build_toric3d(std::shared_ptr<const Lattice3D> lattice);
CodeSpec build_toric3d(const Lattice3D &lattice);
CodeSpec build_welded(int ell, int R);

/// Convenience builders keyed by family.
CodeSpec build_code(CodeFamily family, int ell, int R = 1);

Bits apply_rows(const SparseRows &rows, const Bits &v);
Syndrome syndrome(const CodeSpec &code, const PauliFrame &error);

/// Logical classification of a residual with zero syndrome. Throws std::logic_error when the
/// residual has a nonzero syndrome in either sector.
LogicalOutcome is_logical_failure(const CodeSpec &code, const PauliFrame &residual);

/// Odd overlap of `v` with any of the given supports.
bool anticommutes_with_any(const SparseRows &supports, const Bits &v);

/// Exhaustive CSS commutation check of checks and logical representatives. Returns an empty
/// string on success, otherwise a description of the first violation.
std::string commutation_violation(const CodeSpec &code);

struct CodeDimensions {
    size_t rank_h = 0;
    size_t rank_t = 0;
    size_t k = 0;
};
CodeDimensions code_dimensions(const CodeSpec &code);

std::vector<Bits> to_bits(const SparseRows &supports, size_t n);

/// Writes `row_index: col col col ...`, one row per line.
void write_sparse_rows(std::ostream &out, const SparseRows &rows);

}  // namespace toric3d

#endif
