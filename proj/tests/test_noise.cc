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

#include <gtest/gtest.h>

#include <cmath>

#include "toric3d/noise.h"

using namespace toric3d;

TEST(Noise, StreamsAreReproducible) {
    TrialRng a(42, 3, 17), b(42, 3, 17), c(42, 3, 18), d(42, 4, 17);
    uint64_t x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
    EXPECT_NE(x, d.next());
}

TEST(Noise, BernoulliRate) {
    TrialRng rng(1);
    const size_t n = 200000;
    for (double p : {0.0, 0.05, 0.3, 1.0}) {
        PauliFrame f = sample_bitflip(n, p, rng);
        size_t k = 0;
        for (auto b : f.x) {
            k += b;
        }
        double sigma = std::sqrt(n * p * (1 - p)) + 1e-9;
        EXPECT_LE(std::abs((double)k - n * p), 5 * sigma) << p;
        EXPECT_EQ(f.z, Bits(n, 0));
    }
}

TEST(Noise, ErasurePaulisAreUniform) {
    TrialRng rng(2);
    const size_t n = 100000;
    ErasureSample s = sample_erasure(n, 0.4, rng);
    size_t counts[4] = {0, 0, 0, 0};
    for (uint32_t q : s.erased) {
        counts[s.induced.x[q] + 2 * s.induced.z[q]]++;
    }
    double m = s.erased.size() / 4.0;
    for (size_t c : counts) {
        EXPECT_LE(std::abs(c - m), 5 * std::sqrt(m));
    }
    for (size_t q = 0; q < n; q++) {
        if (!s.mask[q]) {
            EXPECT_FALSE(s.induced.x[q] || s.induced.z[q]);
        }
    }
}

TEST(Noise, RejectsBadInput) {
    TrialRng rng(3);
    EXPECT_THROW(sample_bitflip(10, 1.5, rng), std::invalid_argument);
    EXPECT_THROW(sample_erasure(10, -0.1, rng), std::invalid_argument);
    EXPECT_THROW(sample_phaseflip(10, std::nan(""), rng), std::invalid_argument);
    PauliFrame f = PauliFrame::zeros(4);
    f.x[2] = 1;
    EXPECT_THROW(make_erasure(4, {1}, f), std::invalid_argument);
    EXPECT_THROW(make_erasure(4, {7}, PauliFrame::zeros(4)), std::out_of_range);
    EXPECT_NO_THROW(make_erasure(4, {2, 2}, f));
}
