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

#ifndef TORIC3D_NOISE_H
#define TORIC3D_NOISE_H

#include <cstdint>
#include <random>
#include <vector>

#include "toric3d/css_code.h"

namespace toric3d {

/// Random stream owned by a single trial. The stream is a pure function of
/// (master seed, sweep point, trial index), so results do not depend on scheduling.
class TrialRng {
   public:
    explicit TrialRng(uint64_t master_seed, uint64_t point_index = 0, uint64_t trial_index = 0);

    uint64_t next() {
        return engine_();
    }
    /// Uniform double in [0, 1) built from the top 53 bits.
    double uniform() {
        return (double)(engine_() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p) {
        return uniform() < p;
    }

   private:
    std::mt19937_64 engine_;
};

struct ErasureSample {
    std::vector<uint32_t> erased;  // ascending
    Bits mask;                     // 1 on erased qubits
    PauliFrame induced;
};

PauliFrame sample_bitflip(size_t n, double p, TrialRng &rng);
PauliFrame sample_phaseflip(size_t n, double p, TrialRng &rng);

/// Erases each qubit with probability p and applies a uniformly random Pauli (I, X, Y or Z)
/// on every erased qubit.
ErasureSample sample_erasure(size_t n, double p, TrialRng &rng);

/// Builds an erasure sample from explicit data; the induced frame must be supported on `erased`.
ErasureSample make_erasure(size_t n, std::vector<uint32_t> erased, PauliFrame induced);

}  // namespace toric3d

#endif
