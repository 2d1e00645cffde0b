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

#include <set>

#include "toric3d/lattice3d.h"

using namespace toric3d;

TEST(Lattice, SolidCounts) {
    for (int l = 1; l <= 5; l++) {
        Lattice3D lat = Lattice3D::solid(l);
        size_t n = 3 * l * l * l + 5 * l * l + 3 * l + 1;
        EXPECT_EQ(lat.edges().size(), n) << l;
        EXPECT_EQ(lat.num_real_vertices(), (size_t)(l + 1) * (l + 1) * l);
        EXPECT_EQ(lat.vertices().size() - lat.num_real_vertices(), (size_t)2 * (l + 1) * (l + 1));
        size_t vertical = 0, horizontal = 0, weight3 = 0;
        for (const auto &f : lat.faces()) {
            (f.normal == Axis::z ? horizontal : vertical)++;
            weight3 += f.weight == 3;
        }
        EXPECT_EQ(vertical, (size_t)2 * l * (l + 1) * (l + 1));
        EXPECT_EQ(horizontal, (size_t)l * l * l);
        EXPECT_EQ(weight3, (size_t)4 * l * (l + 1));
    }
}

TEST(Lattice, SolidEllOne) {
    Lattice3D lat = Lattice3D::solid(1);
    EXPECT_EQ(lat.edges().size(), 12u);
    EXPECT_EQ(lat.num_real_vertices(), 4u);
    EXPECT_EQ(lat.faces().size(), 9u);
    EXPECT_EQ(lat.cubes().size(), 0u);
    size_t half = 0;
    for (const auto &e : lat.edges()) {
        half += e.half;
    }
    EXPECT_EQ(half, 8u);
}

TEST(Lattice, PeriodicCounts) {
    for (int l = 2; l <= 5; l++) {
        Lattice3D lat = Lattice3D::periodic(l);
        size_t v = (size_t)l * l * l;
        EXPECT_EQ(lat.vertices().size(), v);
        EXPECT_EQ(lat.edges().size(), 3 * v);
        EXPECT_EQ(lat.faces().size(), 3 * v);
        EXPECT_EQ(lat.cubes().size(), v);
        for (uint32_t x = 0; x < v; x++) {
            EXPECT_EQ(lat.edges_of_vertex(x).size(), 6u);
        }
        for (uint32_t e = 0; e < lat.edges().size(); e++) {
            EXPECT_EQ(lat.faces_of_edge(e).size(), 4u);
        }
    }
}

TEST(Lattice, IncidenceIsConsistent) {
    for (auto lat : {Lattice3D::solid(3), Lattice3D::periodic(3)}) {
        // every face is a closed loop: each of its vertices is touched by exactly two of its edges
        for (const auto &f : lat.faces()) {
            if (f.weight != 4) {
                continue;
            }
            std::multiset<uint32_t> ends;
            for (uint32_t e : f.edges) {
                ends.insert(lat.edges()[e].ends[0]);
                ends.insert(lat.edges()[e].ends[1]);
            }
            for (uint32_t v : ends) {
                EXPECT_EQ(ends.count(v), 2u);
            }
        }
        for (uint32_t v = 0; v < lat.vertices().size(); v++) {
            for (uint32_t e : lat.edges_of_vertex(v)) {
                const auto &ends = lat.edges()[e].ends;
                EXPECT_TRUE(ends[0] == v || ends[1] == v);
            }
        }
    }
}

TEST(Lattice, Lookups) {
    Lattice3D lat = Lattice3D::solid(2);
    EXPECT_EQ(lat.vertex_at({3, 0, 1}), NO_ELEMENT);
    uint32_t v = lat.vertex_at({1, 2, 1});
    ASSERT_NE(v, NO_ELEMENT);
    EXPECT_EQ(lat.vertices()[v].pos, (Coord{1, 2, 1}));
    EXPECT_FALSE(lat.vertices()[v].dummy);
    uint32_t bottom = lat.edge_at({0, 0, 0}, Axis::z);
    ASSERT_NE(bottom, NO_ELEMENT);
    EXPECT_TRUE(lat.edges()[bottom].half);
    EXPECT_EQ(lat.edge_at({0, 0, 0}, Axis::x), NO_ELEMENT);

    Lattice3D per = Lattice3D::periodic(3);
    EXPECT_EQ(per.vertex_at({-1, 0, 0}), per.vertex_at({2, 0, 0}));
    EXPECT_EQ(per.edge_at({3, 1, 1}, Axis::y), per.edge_at({0, 1, 1}, Axis::y));
}

TEST(Lattice, RejectsSmallSizes) {
    EXPECT_THROW(Lattice3D::solid(0), std::invalid_argument);
    EXPECT_THROW(Lattice3D::periodic(1), std::invalid_argument);
}

TEST(Lattice, DualView) {
    Lattice3D lat = Lattice3D::solid(1);
    DualView d = DualView::of(lat);
    EXPECT_EQ(d.num_real_cells, 4u);
    EXPECT_EQ(d.num_cells, 12u);
    EXPECT_EQ(d.face_cells.size(), 12u);
}
