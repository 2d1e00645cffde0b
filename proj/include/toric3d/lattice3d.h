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

#ifndef TORIC3D_LATTICE3D_H
#define TORIC3D_LATTICE3D_H

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace toric3d {

enum class LatticeKind : uint8_t { periodic, solid };

enum class Axis : uint8_t { x = 0, y = 1, z = 2 };

constexpr uint32_t NO_ELEMENT = UINT32_MAX;

struct Coord {
    int x = 0;
    int y = 0;
    int z = 0;

    int operator[](Axis a) const {
        return a == Axis::x ? x : (a == Axis::y ? y : z);
    }
    Coord shifted(Axis a, int amount) const;
    bool operator==(const Coord &other) const = default;
};

struct Vertex {
    Coord pos;
    bool dummy = false;
};

/// An edge runs from `base` to `base + dir`. Half edges have exactly one dummy endpoint.
struct Edge {
    Coord base;
    Axis dir = Axis::x;
    bool half = false;
    std::array<uint32_t, 2> ends{NO_ELEMENT, NO_ELEMENT};
};

/// A face spans the two axes orthogonal to `normal`, starting at `base`.
/// Rough-boundary faces have weight 3 (the missing slot holds NO_ELEMENT).
struct Face {
    Coord base;
    Axis normal = Axis::z;
    uint8_t weight = 0;
    std::array<uint32_t, 4> edges{NO_ELEMENT, NO_ELEMENT, NO_ELEMENT, NO_ELEMENT};
};

struct Cube {
    Coord base;
    std::array<uint32_t, 6> faces{};
};

/// Cubic cell complex, either a 3-torus of side ell or the "solid" slab with rough top and
/// bottom boundaries.
///
/// Solid coordinates: real vertices at x,y in [0, ell], z in [1, ell]. Every (x, y) column
/// carries a half edge below z=1 and above z=ell; the free end of each half edge is a dummy
/// vertex at z=0 or z=ell+1. Dummy vertices carry no check and are indexed after all real
/// vertices. All other element classes are indexed lexicographically by (x, y, z, orientation).
class Lattice3D {
   public:
    static Lattice3D periodic(int ell);
    static Lattice3D solid(int ell);

    LatticeKind kind() const {
        return kind_;
    }
    int ell() const {
        return ell_;
    }

    const std::vector<Vertex> &vertices() const {
        return vertices_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const std::vector<Face> &faces() const {
        return faces_;
    }
    const std::vector<Cube> &cubes() const {
        return cubes_;
    }

    size_t num_real_vertices() const {
        return num_real_vertices_;
    }

    const std::vector<uint32_t> &edges_of_vertex(uint32_t v) const {
        return vertex_edges_[v];
    }
    const std::vector<uint32_t> &faces_of_edge(uint32_t e) const {
        return edge_faces_[e];
    }
    const std::vector<uint32_t> &cubes_of_face(uint32_t f) const {
        return face_cubes_[f];
    }

    /// Lookups by coordinate. Periodic lattices wrap; solids return NO_ELEMENT outside the slab.
    uint32_t vertex_at(Coord c) const;
    uint32_t edge_at(Coord base, Axis dir) const;
    uint32_t face_at(Coord base, Axis normal) const;

    /// One line per element with coordinates and flags.
    void dump(std::ostream &out) const;

   private:
    Lattice3D(LatticeKind kind, int ell);
    void build();
    bool wrap(Coord &c) const;
    size_t slot(Coord c) const;

    LatticeKind kind_;
    int ell_;
    int span_xy_;  // coordinate extent in x and y
    int span_z_;   // coordinate extent in z (includes dummy layers for solids)
    size_t num_real_vertices_ = 0;

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<Cube> cubes_;

    std::vector<std::vector<uint32_t>> vertex_edges_;
    std::vector<std::vector<uint32_t>> edge_faces_;
    std::vector<std::vector<uint32_t>> face_cubes_;

    // Dense coordinate tables: slot(c) * 3 + orientation.
    std::vector<uint32_t> vertex_table_;
    std::vector<uint32_t> edge_table_;
    std::vector<uint32_t> face_table_;
};

/// Dual picture used for bit-flip decoding: each lattice vertex becomes a dual cell, each
/// lattice edge (qubit) becomes the dual face shared by its two end cells, and lattice cubes
/// become dual vertices. Dummy vertices of a solid become degree-1 "pocket" cells.
struct DualView {
    const Lattice3D *lattice = nullptr;
    size_t num_cells = 0;
    size_t num_real_cells = 0;
    std::vector<bool> cell_is_dummy;
    /// Dual faces (= lattice edges) bounding each cell.
    std::vector<std::vector<uint32_t>> cell_faces;
    /// The two cells sharing each dual face.
    std::vector<std::array<uint32_t, 2>> face_cells;
    /// Dual vertices are lattice cubes.
    size_t num_dual_vertices = 0;

    static DualView of(const Lattice3D &lattice);
};

std::string axis_name(Axis a);

}  // namespace toric3d

#endif
