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

#include "toric3d/decoder_toom.h"
#include "toric3d/noise.h"

using namespace toric3d;

namespace {

Bits x_syndrome(const CodeSpec &c, const Bits &x) {
    return apply_rows(c.z_checks, x);
}

Bits plane_error(const CodeSpec &c, int g, const std::vector<std::pair<int, int>> &cells) {
    Bits x(c.n, 0);
    for (auto [px, py] : cells) {
        x[c.lattice->edge_at({px, py, g}, Axis::z)] ^= 1;
    }
    return x;
}

PauliFrame residual(const CodeSpec &c, const Bits &x, const Bits &est) {
    PauliFrame r = PauliFrame::zeros(c.n);
    for (size_t q = 0; q < c.n; q++) {
        r.x[q] = x[q] ^ est[q];
    }
    return r;
}

}  // namespace

TEST(Toom, RuleNames) {
    std::string names;
    for (auto r : default_rule_order()) {
        names += rule_name(r) + " ";
    }
    EXPECT_EQ(names, "ne es sw wn ns ew ");
    EXPECT_EQ(rule_name(parse_rule("wn")), "wn");
    EXPECT_THROW(parse_rule("nn"), std::invalid_argument);
    EXPECT_THROW(parse_rule("nq"), std::invalid_argument);
}

TEST(Toom, SidesOfInteriorZEdge) {
    CodeSpec c = build_code(CodeFamily::solid, 3);
    ToomGeometry geom(c);
    const Lattice3D &lat = *c.lattice;
    uint32_t q = lat.edge_at({1, 1, 1}, Axis::z);
    EXPECT_EQ(geom.side_face(q, Side::e), lat.face_at({1, 1, 1}, Axis::y));
    EXPECT_EQ(geom.side_face(q, Side::w), lat.face_at({0, 1, 1}, Axis::y));
    EXPECT_EQ(geom.side_face(q, Side::n), lat.face_at({1, 1, 1}, Axis::x));
    EXPECT_EQ(geom.side_face(q, Side::s), lat.face_at({1, 0, 1}, Axis::x));
    // corner column lacks its west and south faces
    uint32_t corner = lat.edge_at({0, 0, 1}, Axis::z);
    EXPECT_EQ(geom.side_face(corner, Side::w), NO_ELEMENT);
    EXPECT_EQ(geom.side_face(corner, Side::s), NO_ELEMENT);
    EXPECT_THROW(ToomGeometry(build_code(CodeFamily::periodic3d, 3)), std::invalid_argument);
}

TEST(Toom, SweepOrderIsAPermutation) {
    CodeSpec c = build_code(CodeFamily::solid, 3);
    ToomGeometry geom(c);
    auto order = geom.order(SweepOrder::planes);
    std::vector<uint32_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (uint32_t q = 0; q < c.n; q++) {
        EXPECT_EQ(sorted[q], q);
    }
    EXPECT_EQ(c.lattice->edges()[order.front()].dir, Axis::z);
    EXPECT_EQ(c.lattice->edges()[order.back()].dir, Axis::y);
}

TEST(Toom, ZeroSyndrome) {
    CodeSpec c = build_code(CodeFamily::solid, 3);
    auto r = decode_bitflip(c, Bits(c.num_z_checks(), 0));
    EXPECT_EQ(r.estimate, Bits(c.n, 0));
    EXPECT_FALSE(r.decoder_failure);
    EXPECT_EQ(r.sweeps, 0u);
}

TEST(Toom, SingleQubitErrorsAreCorrectedExactly) {
    for (int l : {2, 3, 4}) {
        CodeSpec c = build_code(CodeFamily::solid, l);
        ToomGeometry geom(c);
        for (uint32_t q = 0; q < c.n; q++) {
            Bits x(c.n, 0);
            x[q] = 1;
            auto r = decode_bitflip(geom, x_syndrome(c, x));
            ASSERT_FALSE(r.decoder_failure) << q;
            EXPECT_EQ(r.estimate, x) << "ell " << l << " qubit " << q;
        }
    }
}

TEST(Toom, SingleSweepShrinksAFaceLoop) {
    CodeSpec c = build_code(CodeFamily::solid, 4);
    ToomGeometry geom(c);
    Bits x = plane_error(c, 2, {{2, 2}});
    SweepState s{x_syndrome(c, x), Bits(c.n, 0), parse_rule("ne")};
    size_t before = std::count(s.tau.begin(), s.tau.end(), 1);
    sweep_once(s, geom, geom.order(SweepOrder::planes));
    size_t after = std::count(s.tau.begin(), s.tau.end(), 1);
    EXPECT_LT(after, before);
    EXPECT_EQ(after, 0u);
}

TEST(Toom, BookkeepingAfterEverySingleFlip) {
    CodeSpec c = build_code(CodeFamily::solid, 3);
    ToomGeometry geom(c);
    TrialRng rng(4);
    PauliFrame e = sample_bitflip(c.n, 0.15, rng);
    Bits tau0 = x_syndrome(c, e.x);
    SweepState s{tau0, Bits(c.n, 0), parse_rule("ne")};
    for (auto rule : default_rule_order()) {
        s.rule = rule;
        for (uint32_t q : geom.order(SweepOrder::planes)) {
            sweep_once(s, geom, {q});
            Bits expect = x_syndrome(c, s.estimate);
            for (size_t f = 0; f < expect.size(); f++) {
                ASSERT_EQ(expect[f] ^ tau0[f], s.tau[f]);
            }
        }
    }
}

TEST(Toom, ResidualStringSingleRow) {
    for (int l : {3, 4, 5}) {
        CodeSpec c = build_code(CodeFamily::solid, l);
        ToomGeometry geom(c);
        std::vector<std::pair<int, int>> row;
        for (int y = 0; y <= l; y++) {
            row.push_back({0, y});
        }
        Bits x = plane_error(c, 1, row);
        SweepState s{x_syndrome(c, x), Bits(c.n, 0)};
        ASSERT_TRUE(residual_string_fix(s, geom));
        EXPECT_EQ(s.estimate, x);
        EXPECT_EQ(s.tau, Bits(c.num_z_checks(), 0));
    }
}

TEST(Toom, ResidualTwoParallelStrings) {
    const int l = 5;
    CodeSpec c = build_code(CodeFamily::solid, l);
    ToomGeometry geom(c);
    std::vector<std::pair<int, int>> rows;
    for (int y = 0; y <= l; y++) {
        rows.push_back({0, y});
        rows.push_back({l, y});
    }
    Bits x = plane_error(c, 3, rows);
    SweepState s{x_syndrome(c, x), Bits(c.n, 0)};
    ASSERT_TRUE(residual_string_fix(s, geom));
    EXPECT_EQ(s.estimate, x);
}

TEST(Toom, ResidualKinkedString) {
    const int l = 4;
    CodeSpec c = build_code(CodeFamily::solid, l);
    ToomGeometry geom(c);
    // staircase region in the corner, cut off by a bent string
    Bits x = plane_error(c, 0, {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}});
    SweepState s{x_syndrome(c, x), Bits(c.n, 0)};
    ASSERT_TRUE(residual_string_fix(s, geom));
    EXPECT_EQ(s.estimate, x);
}

TEST(Toom, ResidualRejectsOtherShapes) {
    CodeSpec c = build_code(CodeFamily::solid, 3);
    ToomGeometry geom(c);
    Bits x(c.n, 0);
    x[c.lattice->edge_at({1, 1, 1}, Axis::x)] = 1;
    SweepState s{x_syndrome(c, x), Bits(c.n, 0)};
    EXPECT_FALSE(residual_string_fix(s, geom));
    SweepState empty{Bits(c.num_z_checks(), 0), Bits(c.n, 0)};
    EXPECT_TRUE(residual_string_fix(empty, geom));
}

TEST(Toom, NorthEastInvariantPatternsNeedOtherRules) {
    const int l = 5;
    CodeSpec c = build_code(CodeFamily::solid, l);
    ToomGeometry geom(c);
    auto order = geom.order(SweepOrder::planes);
    size_t invariant = 0;
    // every pattern inside the 3x3 north-east corner of an interior gap plane, where the
    // missing east and north faces stop the ne rule
    for (int mask = 1; mask < 512; mask++) {
        std::vector<std::pair<int, int>> cells;
        for (int b = 0; b < 9; b++) {
            if (mask >> b & 1) {
                cells.push_back({l - 2 + b / 3, l - 2 + b % 3});
            }
        }
        Bits x = plane_error(c, 2, cells);
        Bits tau = x_syndrome(c, x);
        SweepState s{tau, Bits(c.n, 0), parse_rule("ne")};
        sweep_once(s, geom, order);
        if (s.tau == tau) {
            invariant++;
            ToomOptions ne_only;
            ne_only.rules = {parse_rule("ne")};
            ne_only.residual_step = false;
            EXPECT_TRUE(decode_bitflip(geom, tau, ne_only).decoder_failure);
            auto r = decode_bitflip(geom, tau);
            ASSERT_FALSE(r.decoder_failure) << mask;
            EXPECT_FALSE(is_logical_failure(c, residual(c, x, r.estimate)).x_failed) << mask;
        }
    }
    EXPECT_GT(invariant, 0u);
}

TEST(Toom, RandomErrorsKeepBookkeeping) {
    CodeSpec c = build_code(CodeFamily::solid, 4);
    ToomGeometry geom(c);
    TrialRng rng(8);
    ToomOptions opts;
    opts.check_invariant = true;
    size_t failures = 0;
    for (int t = 0; t < 300; t++) {
        PauliFrame e = sample_bitflip(c.n, 0.05, rng);
        auto r = decode_bitflip(geom, x_syndrome(c, e.x), opts);
        if (r.decoder_failure) {
            failures++;
            continue;
        }
        EXPECT_NO_THROW(is_logical_failure(c, residual(c, e.x, r.estimate)));
    }
    EXPECT_LT(failures, 30u);
}
