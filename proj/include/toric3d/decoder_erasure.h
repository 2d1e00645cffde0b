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

#ifndef TORIC3D_DECODER_ERASURE_H
#define TORIC3D_DECODER_ERASURE_H

#include <string>
#include <vector>

#include "toric3d/css_code.h"

namespace toric3d {

/// Restricted Tanner graph of one sector: erased qubits that are still unknown ("live"), the
/// checks they touch, and the running syndrome. Assigning a qubit removes it and folds its value
/// into the syndrome of its checks.
class TannerGraph {
   public:
    TannerGraph(const SparseRows &qubit_checks, const SparseRows &check_qubits, const Bits &syndrome,
                const std::vector<uint32_t> &erased);

    /// Peeling: while some check has exactly one live qubit, give that qubit the
    /// check's syndrome bit. Returns the number of assigned qubits.
    size_t peel();

    void assign(uint32_t q, uint8_t value);
    void freeze(uint32_t q) {
        assign(q, 0);
    }

    /// Solves the residual restricted system by elimination. Returns false if inconsistent.
    bool solve_rest();
    /// Sets every live qubit to zero (valid once the syndrome is clear).
    void zero_rest();

    bool is_live(uint32_t q) const {
        return live_[q] != 0;
    }
    size_t num_live() const {
        return num_live_;
    }
    std::vector<uint32_t> live_qubits() const;
    bool syndrome_clear() const {
        return num_defects_ == 0;
    }
    uint8_t syndrome(uint32_t c) const {
        return syn_[c];
    }
    uint32_t degree(uint32_t c) const {
        return degree_[c];
    }
    const Bits &estimate() const {
        return estimate_;
    }
    /// True when an assigned or erased-checkless configuration left a check with syndrome but
    /// no live qubits.
    bool has_orphan_defect() const;

   private:
    void toggle(uint32_t c);

    const SparseRows &qubit_checks_;
    const SparseRows &check_qubits_;
    Bits syn_;
    Bits estimate_;
    std::vector<uint8_t> live_;
    std::vector<uint32_t> degree_;
    std::vector<uint32_t> queue_;
    std::vector<uint32_t> erased_;
    size_t num_live_ = 0;
    size_t num_defects_ = 0;
};

struct PeelResult {
    Bits estimate;                 // assigned bits; zero elsewhere
    std::vector<uint32_t> residual_qubits;
    Bits residual_syndrome;
};

PeelResult peel(const SparseRows &qubit_checks, const SparseRows &check_qubits, const Bits &syndrome,
                const std::vector<uint32_t> &erased);

/// Spanning forest of the erased cell graph, qubits taken in index order. A qubit is left out
/// when it would close a cycle or join two trees that each hold a dummy cell. Returns the
/// excluded (frozen) qubits, ascending.
std::vector<uint32_t> freeze_by_forest_z(const CodeSpec &code, const std::vector<uint32_t> &erased);

struct RegionReport {
    std::vector<std::vector<uint32_t>> regions;     // cells, ascending
    std::vector<std::vector<uint32_t>> candidates;  // qubits, ascending
    std::vector<uint8_t> usable;
};

/// Flood fill over cells; two cells connect through any qubit that is not in `unresolved`.
/// A region's candidate is the sum of the X-check stars of its cells, dummy cells included, so
/// it is exactly the set of unresolved qubits leaving the region. It is usable when nonempty and
/// commuting with every Z check.
/// With `join_hyperedges` off, a passable welded qubit only links the two cells of each solid
/// it belongs to, so every region stays inside one solid.
RegionReport trap(const CodeSpec &code, const Bits &unresolved, bool join_hyperedges = true);

enum class StuckPolicy : uint8_t { declare_failure, gauss };
enum class ZVariant : uint8_t { freeze_first, alternating };

std::string stuck_policy_name(StuckPolicy p);
StuckPolicy parse_stuck_policy(const std::string &text);
std::string z_variant_name(ZVariant v);
ZVariant parse_z_variant(const std::string &text);

struct ErasureDecodeResult {
    Bits estimate;
    bool failure = false;
    size_t frozen = 0;
    size_t trap_passes = 0;
    bool used_gauss = false;
};

/// Z errors from the X-check syndrome `sigma`.
ErasureDecodeResult decode_erasure_z(const CodeSpec &code, const std::vector<uint32_t> &erased, const Bits &sigma,
                                     ZVariant variant = ZVariant::freeze_first);

/// X errors from the Z-check syndrome `tau`.
ErasureDecodeResult decode_erasure_x(const CodeSpec &code, const std::vector<uint32_t> &erased, const Bits &tau,
                                     StuckPolicy policy = StuckPolicy::declare_failure);

/// Freezes an independent subset of the usable candidates: each chosen region gets a qubit
/// that no other chosen candidate contains. Returns the frozen qubits.
std::vector<uint32_t> freeze_trapped(TannerGraph &tanner, const RegionReport &report);

}  // namespace toric3d

#endif
