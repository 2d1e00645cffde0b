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

#ifndef TORIC3D_DECODER_WELDED_H
#define TORIC3D_DECODER_WELDED_H

#include <vector>

#include "toric3d/css_code.h"
#include "toric3d/decoder_erasure.h"

namespace toric3d {

/// Erased qubits split into welded ones and the rest.
struct WeldedErasure {
    std::vector<uint32_t> welded;
    std::vector<uint32_t> interior;
};

WeldedErasure split_welded(const CodeSpec &code, const std::vector<uint32_t> &erased);

/// Z errors from sigma. Peels first; when stuck, the welded qubits are set aside, the remaining
/// unresolved qubits are cut down to a spanning forest, and peeling resumes. Whatever is left
/// goes to elimination.
ErasureDecodeResult decode_welded_z(const CodeSpec &code, const std::vector<uint32_t> &erased, const Bits &sigma);

/// X errors from tau. Peeling alternates with trapping inside each solid, where welded qubits
/// count as resolved. When neither makes progress the policy decides.
ErasureDecodeResult decode_welded_x(const CodeSpec &code, const std::vector<uint32_t> &erased, const Bits &tau,
                                    StuckPolicy policy = StuckPolicy::gauss);

struct GaussDecodeResult {
    PauliFrame estimate;
    bool failure = false;  // only when a syndrome is inconsistent with the erasure
};

/// Both sectors solved directly by elimination on the erased columns.
GaussDecodeResult decode_welded_gauss(const CodeSpec &code, const std::vector<uint32_t> &erased, const Syndrome &s);

}  // namespace toric3d

#endif
