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

#ifndef TORIC3D_DECODER_TOOM_H
#define TORIC3D_DECODER_TOOM_H

#include <array>
#include <string>
#include <vector>

#include "toric3d/css_code.h"

namespace toric3d {

/// The four faces around a qubit, in the local frame of an edge with direction d and
/// transverse axes (a, b) = (y, z), (x, z), (x, y) for d = x, y, z:
///   e = face spanned by (d, a) at the edge base, w = the same face shifted by -a,
///   n = face spanned by (d, b) at the edge base, s = the same face shifted by -b.
enum class Side : uint8_t { n = 0, e = 1, s = 2, w = 3 };

struct ToomRule {
    Side first;
    Side second;
};

std::string rule_name(ToomRule r);
ToomRule parse_rule(const std::string &text);
/// ne, es, sw, wn, ns, ew.
std::vector<ToomRule> default_rule_order();

enum class SweepOrder : uint8_t {
    /// z-edges plane by plane (z ascending, then y descending, x ascending), then x-edges
    /// (x ascending, z descending, y ascending), then y-edges (y ascending, z descending,
    /// x ascending).
    planes,
    /// Plain qubit index order.
    index,
};

SweepOrder parse_sweep_order(const std::string &text);

/// Per-code data for the Toom decoder. Solid codes only.
class ToomGeometry {
   public:
    explicit ToomGeometry(const CodeSpec &code);

    const CodeSpec &code() const {
        return *code_;
    }
    /// Face (Z-check row) on the given side of a qubit, or NO_ELEMENT.
    uint32_t side_face(uint32_t q, Side s) const {
        return sides_[q][(size_t)s];
    }
    std::vector<uint32_t> order(SweepOrder kind) const;

   private:
    const CodeSpec *code_;
    std::vector<std::array<uint32_t, 4>> sides_;
    std::vector<uint32_t> planes_order_;
};

struct SweepState {
    Bits tau;       // current Z-check syndrome
    Bits estimate;  // accumulated X correction
    ToomRule rule{Side::n, Side::e};
    int i = 0;
    int j = 0;
};

/// One pass of the active rule over the qubits in `order`. Each flip updates tau at once.
/// Returns the number of flipped qubits.
size_t sweep_once(SweepState &state, const ToomGeometry &geom, const std::vector<uint32_t> &order);

/// Clears a residual syndrome made of strings in the z-edge gap planes: each string cuts its
/// plane in two, and the smaller side is flipped. Returns false when the residual does not
/// have that shape or is not cleared.
bool residual_string_fix(SweepState &state, const ToomGeometry &geom);

struct ToomOptions {
    int i_max = 0;  // 0: ceil(ell / 2)
    int j_max = 0;  // 0: ell
    std::vector<ToomRule> rules = default_rule_order();
    SweepOrder sweep_order = SweepOrder::planes;
    bool residual_step = true;
    /// Recompute the syndrome after every flip and throw std::logic_error on mismatch.
    bool check_invariant = false;
};

struct BitflipDecodeResult {
    Bits estimate;
    bool decoder_failure = false;
    bool used_residual_step = false;
    size_t sweeps = 0;
};

BitflipDecodeResult decode_bitflip(const ToomGeometry &geom, const Bits &tau, const ToomOptions &opts = {});
BitflipDecodeResult decode_bitflip(const CodeSpec &code, const Bits &tau, const ToomOptions &opts = {});

}  // namespace toric3d

#endif
