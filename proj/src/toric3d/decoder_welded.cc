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

#include "toric3d/decoder_welded.h"

#include <stdexcept>

namespace toric3d {

WeldedErasure split_welded(const CodeSpec &code, const std::vector<uint32_t> &erased) {
    WeldedErasure out;
    for (uint32_t q : erased) {
        if (q >= code.n) {
            throw std::out_of_range("erased qubit index out of range");
        }
        (code.qubit_meta[q].welded ? out.welded : out.interior).push_back(q);
    }
    return out;
}

ErasureDecodeResult decode_welded_z(const CodeSpec &code, const std::vector<uint32_t> &erased, const Bits &sigma) {
    TannerGraph t(code.qubit_x_checks, code.x_checks, sigma, erased);
    ErasureDecodeResult res;
    t.peel();
    if (!t.syndrome_clear() && t.num_live() > 0) {
        // the welded qubits stay live; they are only left out of the forest
        WeldedErasure parts = split_welded(code, t.live_qubits());
        for (uint32_t q : freeze_by_forest_z(code, parts.interior)) {
            t.freeze(q);
            res.frozen++;
        }
        t.peel();
    }
    if (t.syndrome_clear()) {
        t.zero_rest();
    } else {
        res.used_gauss = true;
        if (!t.solve_rest()) {
            throw std::logic_error("erasure syndrome is inconsistent with the erased qubits");
        }
    }
    res.estimate = t.estimate();
    return res;
}

ErasureDecodeResult decode_welded_x(const CodeSpec &code, const std::vector<uint32_t> &erased, const Bits &tau,
                                    StuckPolicy policy) {
    TannerGraph t(code.qubit_z_checks, code.z_checks, tau, erased);
    ErasureDecodeResult res;
    for (;;) {
        t.peel();
        if (t.syndrome_clear()) {
            t.zero_rest();
            break;
        }
        if (t.num_live() == 0 || t.has_orphan_defect()) {
            throw std::logic_error("erasure syndrome is inconsistent with the erased qubits");
        }
        Bits unresolved(code.n, 0);
        for (uint32_t q : split_welded(code, t.live_qubits()).interior) {
            unresolved[q] = 1;
        }
        RegionReport report = trap(code, unresolved, false);
        res.trap_passes++;
        std::vector<uint32_t> frozen = freeze_trapped(t, report);
        if (!frozen.empty()) {
            res.frozen += frozen.size();
            continue;
        }
        if (policy == StuckPolicy::declare_failure) {
            res.failure = true;
            break;
        }
        res.used_gauss = true;
        if (!t.solve_rest()) {
            throw std::logic_error("erasure syndrome is inconsistent with the erased qubits");
        }
        break;
    }
    res.estimate = t.estimate();
    return res;
}

GaussDecodeResult decode_welded_gauss(const CodeSpec &code, const std::vector<uint32_t> &erased, const Syndrome &s) {
    GaussDecodeResult res;
    TannerGraph tz(code.qubit_x_checks, code.x_checks, s.sigma, erased);
    TannerGraph tx(code.qubit_z_checks, code.z_checks, s.tau, erased);
    res.failure = !tz.solve_rest() || !tx.solve_rest();
    res.estimate.z = tz.estimate();
    res.estimate.x = tx.estimate();
    return res;
}

}  // namespace toric3d
