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

#include "toric3d/noise.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toric3d {

namespace {

std::mt19937_64 seeded_engine(uint64_t master_seed, uint64_t point_index, uint64_t trial_index) {
    std::seed_seq seq{
        (uint32_t)master_seed,
        (uint32_t)(master_seed >> 32),
        (uint32_t)point_index,
        (uint32_t)(point_index >> 32),
        (uint32_t)trial_index,
        (uint32_t)(trial_index >> 32),
    };
    return std::mt19937_64(seq);
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability must lie in [0, 1], got " + std::to_string(p));
    }
}

}  // namespace

TrialRng::TrialRng(uint64_t master_seed, uint64_t point_index, uint64_t trial_index)
    : engine_(seeded_engine(master_seed, point_index, trial_index)) {
}

PauliFrame sample_bitflip(size_t n, double p, TrialRng &rng) {
    check_probability(p);
    PauliFrame f = PauliFrame::zeros(n);
    for (size_t q = 0; q < n; q++) {
        f.x[q] = rng.bernoulli(p);
    }
    return f;
}

PauliFrame sample_phaseflip(size_t n, double p, TrialRng &rng) {
    check_probability(p);
    PauliFrame f = PauliFrame::zeros(n);
    for (size_t q = 0; q < n; q++) {
        f.z[q] = rng.bernoulli(p);
    }
    return f;
}

ErasureSample sample_erasure(size_t n, double p, TrialRng &rng) {
    check_probability(p);
    ErasureSample s;
    s.mask.assign(n, 0);
    s.induced = PauliFrame::zeros(n);
    for (uint32_t q = 0; q < n; q++) {
        if (rng.bernoulli(p)) {
            uint64_t pauli = rng.next() >> 62;
            s.erased.push_back(q);
            s.mask[q] = 1;
            s.induced.x[q] = pauli & 1;
            s.induced.z[q] = (pauli >> 1) & 1;
        }
    }
    return s;
}

ErasureSample make_erasure(size_t n, std::vector<uint32_t> erased, PauliFrame induced) {
    ErasureSample s;
    std::sort(erased.begin(), erased.end());
    erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
    s.mask.assign(n, 0);
    for (uint32_t q : erased) {
        if (q >= n) {
            throw std::out_of_range("erased qubit index out of range");
        }
        s.mask[q] = 1;
    }
    if (induced.x.size() != n || induced.z.size() != n) {
        throw std::invalid_argument("induced frame length does not match code length");
    }
    for (size_t q = 0; q < n; q++) {
        if ((induced.x[q] || induced.z[q]) && !s.mask[q]) {
            throw std::invalid_argument("induced error on a qubit that is not erased");
        }
    }
    s.erased = std::move(erased);
    s.induced = std::move(induced);
    return s;
}

}  // namespace toric3d
