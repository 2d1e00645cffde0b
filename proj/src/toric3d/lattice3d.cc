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

#include "toric3d/lattice3d.h"

#include <stdexcept>

namespace toric3d {

namespace {

constexpr std::array<Axis, 3> AXES{Axis::x, Axis::y, Axis::z};

// The two axes spanning a face with the given normal, in cyclic-free ascending order.
std::array<Axis, 2> face_axes(Axis normal) {
    switch (normal) {
        case Axis::x:
            return {Axis::y, Axis::z};
        case Axis::y:
            return {Axis::x, Axis::z};
        default:
            return {Axis::x, Axis::y};
    }
}

}  // namespace

std::string axis_name(Axis a) {
    return a == Axis::x ? "x" : (a == Axis::y ? "y" : "z");
}

Coord Coord::shifted(Axis a, int amount) const {
    Coord c = *this;
    switch (a) {
        case Axis::x:
            c.x += amount;
            break;
        case Axis::y:
            c.y += amount;
            break;
        case Axis::z:
            c.z += amount;
            break;
    }
    return c;
}

Lattice3D::Lattice3D(LatticeKind kind, int ell) : kind_(kind), ell_(ell) {
    if (kind == LatticeKind::periodic) {
        span_xy_ = ell;
        span_z_ = ell;
    } else {
        span_xy_ = ell + 1;
        span_z_ = ell + 2;
    }
}

Lattice3D Lattice3D::periodic(int ell) {
    if (ell < 2) {
        throw std::invalid_argument("periodic lattice needs ell >= 2, got " + std::to_string(ell));
    }
    Lattice3D lattice(LatticeKind::periodic, ell);
    lattice.build();
    return lattice;
}

Lattice3D Lattice3D::solid(int ell) {
    if (ell < 1) {
        throw std::invalid_argument("solid lattice needs ell >= 1, got " + std::to_string(ell));
    }
    Lattice3D lattice(LatticeKind::solid, ell);
    lattice.build();
    return lattice;
}

bool Lattice3D::wrap(Coord &c) const {
    if (kind_ == LatticeKind::periodic) {
        auto mod = [&](int v) {
            int r = v % ell_;
            return r < 0 ? r + ell_ : r;
        };
        c = {mod(c.x), mod(c.y), mod(c.z)};
        return true;
    }
    return c.x >= 0 && c.x < span_xy_ && c.y >= 0 && c.y < span_xy_ && c.z >= 0 && c.z < span_z_;
}

size_t Lattice3D::slot(Coord c) const {
    return ((size_t)c.x * span_xy_ + c.y) * span_z_ + c.z;
}

uint32_t Lattice3D::vertex_at(Coord c) const {
    if (!wrap(c)) {
        return NO_ELEMENT;
    }
    return vertex_table_[slot(c)];
}

uint32_t Lattice3D::edge_at(Coord base, Axis dir) const {
    if (!wrap(base)) {
        return NO_ELEMENT;
    }
    return edge_table_[slot(base) * 3 + (size_t)dir];
}

uint32_t Lattice3D::face_at(Coord base, Axis normal) const {
    if (!wrap(base)) {
        return NO_ELEMENT;
    }
    return face_table_[slot(base) * 3 + (size_t)normal];
}

void Lattice3D::build() {
    size_t slots = (size_t)span_xy_ * span_xy_ * span_z_;
    vertex_table_.assign(slots, NO_ELEMENT);
    edge_table_.assign(slots * 3, NO_ELEMENT);
    face_table_.assign(slots * 3, NO_ELEMENT);

    auto for_each_coord = [&](auto &&body) {
        for (int x = 0; x < span_xy_; x++) {
            for (int y = 0; y < span_xy_; y++) {
                for (int z = 0; z < span_z_; z++) {
                    body(Coord{x, y, z});
                }
            }
        }
    };
    auto is_dummy_layer = [&](int z) {
        return kind_ == LatticeKind::solid && (z == 0 || z == ell_ + 1);
    };

    // Real vertices first, then dummies.
    for (bool dummy_pass : {false, true}) {
        for_each_coord([&](Coord c) {
            if (is_dummy_layer(c.z) == dummy_pass) {
                vertex_table_[slot(c)] = (uint32_t)vertices_.size();
                vertices_.push_back({c, dummy_pass});
            }
        });
        if (!dummy_pass) {
            num_real_vertices_ = vertices_.size();
        }
    }

    for_each_coord([&](Coord c) {
        for (Axis dir : AXES) {
            uint32_t a = vertex_at(c);
            uint32_t b = vertex_at(c.shifted(dir, 1));
            if (a == NO_ELEMENT || b == NO_ELEMENT) {
                continue;
            }
            bool da = vertices_[a].dummy;
            bool db = vertices_[b].dummy;
            if (da && db) {
                continue;
            }
            edge_table_[slot(c) * 3 + (size_t)dir] = (uint32_t)edges_.size();
            edges_.push_back({c, dir, da || db, {a, b}});
        }
    });

    for_each_coord([&](Coord c) {
        for (Axis normal : AXES) {
            auto [a, b] = face_axes(normal);
            std::array<uint32_t, 4> slots_e{
                edge_at(c, a),
                edge_at(c.shifted(b, 1), a),
                edge_at(c, b),
                edge_at(c.shifted(a, 1), b),
            };
            Face f{c, normal, 0, {NO_ELEMENT, NO_ELEMENT, NO_ELEMENT, NO_ELEMENT}};
            for (uint32_t e : slots_e) {
                if (e != NO_ELEMENT) {
                    f.edges[f.weight++] = e;
                }
            }
            // Faces need all four corners; a rough-boundary face lacks one dummy-dummy edge.
            bool corners = vertex_at(c) != NO_ELEMENT && vertex_at(c.shifted(a, 1)) != NO_ELEMENT &&
                           vertex_at(c.shifted(b, 1)) != NO_ELEMENT &&
                           vertex_at(c.shifted(a, 1).shifted(b, 1)) != NO_ELEMENT;
            if (!corners || f.weight < 3) {
                continue;
            }
            face_table_[slot(c) * 3 + (size_t)normal] = (uint32_t)faces_.size();
            faces_.push_back(f);
        }
    });

    for_each_coord([&](Coord c) {
        Cube cube{c, {}};
        size_t k = 0;
        for (Axis normal : AXES) {
            for (int offset : {0, 1}) {
                uint32_t f = face_at(c.shifted(normal, offset), normal);
                if (f == NO_ELEMENT || faces_[f].weight != 4) {
                    return;
                }
                cube.faces[k++] = f;
            }
        }
        cubes_.push_back(cube);
    });

    vertex_edges_.assign(vertices_.size(), {});
    for (uint32_t e = 0; e < edges_.size(); e++) {
        for (uint32_t v : edges_[e].ends) {
            vertex_edges_[v].push_back(e);
        }
    }
    edge_faces_.assign(edges_.size(), {});
    for (uint32_t f = 0; f < faces_.size(); f++) {
        for (size_t k = 0; k < faces_[f].weight; k++) {
            edge_faces_[faces_[f].edges[k]].push_back(f);
        }
    }
    face_cubes_.assign(faces_.size(), {});
    for (uint32_t q = 0; q < cubes_.size(); q++) {
        for (uint32_t f : cubes_[q].faces) {
            face_cubes_[f].push_back(q);
        }
    }
}

void Lattice3D::dump(std::ostream &out) const {
    out << "# lattice " << (kind_ == LatticeKind::periodic ? "periodic" : "solid") << " ell=" << ell_ << "\n";
    for (size_t i = 0; i < vertices_.size(); i++) {
        const auto &v = vertices_[i];
        out << "vertex " << i << " " << v.pos.x << " " << v.pos.y << " " << v.pos.z << (v.dummy ? " dummy" : "")
            << "\n";
    }
    for (size_t i = 0; i < edges_.size(); i++) {
        const auto &e = edges_[i];
        out << "edge " << i << " " << e.base.x << " " << e.base.y << " " << e.base.z << " " << axis_name(e.dir)
            << " ends=" << e.ends[0] << "," << e.ends[1] << (e.half ? " half" : "") << "\n";
    }
    for (size_t i = 0; i < faces_.size(); i++) {
        const auto &f = faces_[i];
        out << "face " << i << " " << f.base.x << " " << f.base.y << " " << f.base.z << " n" << axis_name(f.normal)
            << " edges=";
        for (size_t k = 0; k < f.weight; k++) {
            out << (k ? "," : "") << f.edges[k];
        }
        out << "\n";
    }
    for (size_t i = 0; i < cubes_.size(); i++) {
        const auto &c = cubes_[i];
        out << "cube " << i << " " << c.base.x << " " << c.base.y << " " << c.base.z << "\n";
    }
}

DualView DualView::of(const Lattice3D &lattice) {
    DualView view;
    view.lattice = &lattice;
    view.num_cells = lattice.vertices().size();
    view.num_real_cells = lattice.num_real_vertices();
    view.cell_is_dummy.resize(view.num_cells);
    view.cell_faces.resize(view.num_cells);
    for (uint32_t v = 0; v < view.num_cells; v++) {
        view.cell_is_dummy[v] = lattice.vertices()[v].dummy;
        view.cell_faces[v] = lattice.edges_of_vertex(v);
    }
    view.face_cells.reserve(lattice.edges().size());
    for (const auto &e : lattice.edges()) {
        view.face_cells.push_back(e.ends);
    }
    view.num_dual_vertices = lattice.cubes().size();
    return view;
}

}  // namespace toric3d
