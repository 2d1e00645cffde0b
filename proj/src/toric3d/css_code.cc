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

#include "toric3d/css_code.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace toric3d {

std::string family_name(CodeFamily family) {
    switch (family) {
        case CodeFamily::periodic3d:
            return "periodic3d";
        case CodeFamily::solid:
            return "solid";
        case CodeFamily::welded:
            return "welded";
    }
    return "?";
}

CodeFamily parse_family(const std::string &text) {
    if (text == "periodic3d" || text == "periodic") {
        return CodeFamily::periodic3d;
    }
    if (text == "solid") {
        return CodeFamily::solid;
    }
    if (text == "welded") {
        return CodeFamily::welded;
    }
    throw std::invalid_argument("unknown code family '" + text + "'");
}

namespace {

SparseRows transpose(const SparseRows &rows, size_t cols) {
    SparseRows out(cols);
    for (uint32_t r = 0; r < rows.size(); r++) {
        for (uint32_t c : rows[r]) {
            out[c].push_back(r);
        }
    }
    return out;
}

void finish(CodeSpec &code) {
    code.qubit_x_checks = transpose(code.x_checks, code.n);
    code.qubit_z_checks = transpose(code.z_checks, code.n);
    code.cell_neighbors.assign(code.num_cells, {});
    for (uint32_t q = 0; q < code.n; q++) {
        for (const auto &ends : code.qubit_ends[q]) {
            code.cell_neighbors[ends[0]].push_back({ends[1], q});
            code.cell_neighbors[ends[1]].push_back({ends[0], q});
        }
    }
    for (auto &adj : code.cell_neighbors) {
        std::sort(adj.begin(), adj.end());
    }
    std::string violation = commutation_violation(code);
    if (!violation.empty()) {
        throw std::logic_error("code construction failed its commutation self-check: " + violation);
    }
}

}  // namespace

CodeSpec build_toric3d(const Lattice3D &lattice) {
    return build_toric3d(std::make_shared<const Lattice3D>(lattice));
}

CodeSpec build_toric3d(std::shared_ptr<const Lattice3D> lattice) {
    const Lattice3D &lat = *lattice;
    CodeSpec code;
    code.family = lat.kind() == LatticeKind::periodic ? CodeFamily::periodic3d : CodeFamily::solid;
    code.ell = lat.ell();
    code.R = 1;
    code.n = lat.edges().size();

    for (uint32_t v = 0; v < lat.num_real_vertices(); v++) {
        code.x_checks.push_back(lat.edges_of_vertex(v));
    }
    for (const auto &f : lat.faces()) {
        code.z_checks.emplace_back(f.edges.begin(), f.edges.begin() + f.weight);
    }

    code.num_cells = lat.vertices().size();
    code.cell_is_dummy.resize(code.num_cells);
    for (size_t v = 0; v < code.num_cells; v++) {
        code.cell_is_dummy[v] = lat.vertices()[v].dummy;
    }
    code.qubit_ends.resize(code.n);
    code.qubit_meta.resize(code.n);
    for (uint32_t e = 0; e < code.n; e++) {
        const Edge &edge = lat.edges()[e];
        code.qubit_ends[e] = {edge.ends};
        code.qubit_meta[e] = QubitMeta{edge.half, false, {0}, e};
    }

    int ell = lat.ell();
    if (code.family == CodeFamily::periodic3d) {
        for (Axis a : {Axis::x, Axis::y, Axis::z}) {
            std::vector<uint32_t> loop;
            for (int t = 0; t < ell; t++) {
                loop.push_back(lat.edge_at(Coord{}.shifted(a, t), a));
            }
            std::sort(loop.begin(), loop.end());
            code.logicals_z.push_back(loop);

            std::vector<uint32_t> plane;
            for (uint32_t e = 0; e < code.n; e++) {
                const Edge &edge = lat.edges()[e];
                if (edge.dir == a && edge.base[a] == 0) {
                    plane.push_back(e);
                }
            }
            code.logicals_x.push_back(plane);
        }
    } else {
        std::vector<uint32_t> string;
        for (int z = 0; z <= ell; z++) {
            string.push_back(lat.edge_at({0, 0, z}, Axis::z));
        }
        std::sort(string.begin(), string.end());
        code.logicals_z.push_back(string);

        std::vector<uint32_t> plane;
        for (uint32_t e = 0; e < code.n; e++) {
            const Edge &edge = lat.edges()[e];
            if (edge.dir == Axis::z && edge.base.z == 0) {
                plane.push_back(e);
            }
        }
        code.logicals_x.push_back(plane);
    }

    code.lattice = std::move(lattice);
    finish(code);
    return code;
}

CodeSpec build_welded(int ell, int R) {
    if (ell < 1 || R < 1) {
        throw std::invalid_argument("welded code needs ell >= 1 and R >= 1");
    }
    Lattice3D lat = Lattice3D::solid(ell);
    const size_t num_solids = (size_t)R * R * R;
    const size_t per_layer = (size_t)R * R;
    const size_t side = (size_t)ell + 1;
    const size_t real_per_solid = lat.num_real_vertices();
    const size_t dummy_per_solid = lat.vertices().size() - real_per_solid;

    CodeSpec code;
    code.family = CodeFamily::welded;
    code.ell = ell;
    code.R = R;

    // Weld plane j in [0, R] joins the top boundaries of layer j-1 with the bottom boundaries of
    // layer j. Half edges at the same (x, y) of every adjacent solid become one qubit.
    auto weld_plane = [&](size_t solid, const Edge &e) -> size_t {
        size_t layer = solid / per_layer;
        return e.base.z == 0 ? layer : layer + 1;
    };
    std::vector<uint32_t> welded_id((size_t)(R + 1) * side * side, NO_ELEMENT);
    std::vector<std::vector<uint32_t>> edge_map(num_solids, std::vector<uint32_t>(lat.edges().size()));

    uint32_t next = 0;
    for (size_t s = 0; s < num_solids; s++) {
        for (uint32_t e = 0; e < lat.edges().size(); e++) {
            const Edge &edge = lat.edges()[e];
            if (edge.half) {
                size_t key = (weld_plane(s, edge) * side + edge.base.x) * side + edge.base.y;
                if (welded_id[key] == NO_ELEMENT) {
                    welded_id[key] = next++;
                    code.qubit_meta.push_back(QubitMeta{true, false, {}, e});
                }
                edge_map[s][e] = welded_id[key];
            } else {
                edge_map[s][e] = next++;
                code.qubit_meta.push_back(QubitMeta{false, false, {}, e});
            }
        }
    }
    code.n = next;

    auto cell_of = [&](size_t s, uint32_t v) -> uint32_t {
        if (v < real_per_solid) {
            return (uint32_t)(s * real_per_solid + v);
        }
        return (uint32_t)(num_solids * real_per_solid + s * dummy_per_solid + (v - real_per_solid));
    };
    code.num_cells = num_solids * (real_per_solid + dummy_per_solid);
    code.cell_is_dummy.assign(code.num_cells, 0);
    std::fill(code.cell_is_dummy.begin() + num_solids * real_per_solid, code.cell_is_dummy.end(), 1);

    code.qubit_ends.resize(code.n);
    for (size_t s = 0; s < num_solids; s++) {
        for (uint32_t e = 0; e < lat.edges().size(); e++) {
            uint32_t q = edge_map[s][e];
            const Edge &edge = lat.edges()[e];
            code.qubit_ends[q].push_back({cell_of(s, edge.ends[0]), cell_of(s, edge.ends[1])});
            code.qubit_meta[q].solids.push_back((uint32_t)s);
        }
    }
    for (auto &meta : code.qubit_meta) {
        meta.welded = meta.solids.size() >= 2;
    }

    // X checks keep their shape; they only see the shared welded qubit instead of a half edge.
    code.x_checks.resize(num_solids * real_per_solid);
    for (size_t s = 0; s < num_solids; s++) {
        for (uint32_t v = 0; v < real_per_solid; v++) {
            auto &row = code.x_checks[s * real_per_solid + v];
            for (uint32_t e : lat.edges_of_vertex(v)) {
                row.push_back(edge_map[s][e]);
            }
            std::sort(row.begin(), row.end());
        }
    }

    // Interior faces carry over. Rough-boundary faces that share welded qubits are merged by
    // support union: the two welded qubits once, plus each solid's horizontal edge.
    std::map<std::tuple<size_t, int, int, int>, size_t> welded_rows;
    for (size_t s = 0; s < num_solids; s++) {
        for (const Face &f : lat.faces()) {
            if (f.weight == 4) {
                std::vector<uint32_t> row;
                for (uint32_t e : f.edges) {
                    row.push_back(edge_map[s][e]);
                }
                std::sort(row.begin(), row.end());
                code.z_checks.push_back(std::move(row));
                continue;
            }
            size_t plane = 0;
            std::vector<uint32_t> welded;
            uint32_t horizontal = NO_ELEMENT;
            for (size_t k = 0; k < f.weight; k++) {
                const Edge &edge = lat.edges()[f.edges[k]];
                if (edge.half) {
                    plane = weld_plane(s, edge);
                    welded.push_back(edge_map[s][f.edges[k]]);
                } else {
                    horizontal = edge_map[s][f.edges[k]];
                }
            }
            auto key = std::make_tuple(plane, f.base.x, f.base.y, (int)f.normal);
            auto it = welded_rows.find(key);
            if (it == welded_rows.end()) {
                it = welded_rows.emplace(key, code.z_checks.size()).first;
                code.z_checks.push_back(welded);
            }
            code.z_checks[it->second].push_back(horizontal);
        }
    }
    for (auto &row : code.z_checks) {
        std::sort(row.begin(), row.end());
    }

    // Logical Z threads every solid along the (0, 0) column; logical X is the bottom weld plane.
    std::vector<uint32_t> zlog;
    for (size_t s = 0; s < num_solids; s++) {
        for (int z = 0; z <= ell; z++) {
            zlog.push_back(edge_map[s][lat.edge_at({0, 0, z}, Axis::z)]);
        }
    }
    std::sort(zlog.begin(), zlog.end());
    zlog.erase(std::unique(zlog.begin(), zlog.end()), zlog.end());
    code.logicals_z.push_back(zlog);

    std::vector<uint32_t> xlog;
    for (size_t x = 0; x < side; x++) {
        for (size_t y = 0; y < side; y++) {
            xlog.push_back(welded_id[x * side + y]);
        }
    }
    std::sort(xlog.begin(), xlog.end());
    code.logicals_x.push_back(xlog);

    finish(code);
    return code;
}

CodeSpec build_code(CodeFamily family, int ell, int R) {
    switch (family) {
        case CodeFamily::periodic3d:
            return build_toric3d(Lattice3D::periodic(ell));
        case CodeFamily::solid:
            return build_toric3d(Lattice3D::solid(ell));
        case CodeFamily::welded:
            return build_welded(ell, R);
    }
    throw std::invalid_argument("unknown code family");
}

Bits apply_rows(const SparseRows &rows, const Bits &v) {
    Bits out(rows.size(), 0);
    for (size_t r = 0; r < rows.size(); r++) {
        uint8_t acc = 0;
        for (uint32_t c : rows[r]) {
            acc ^= v[c];
        }
        out[r] = acc;
    }
    return out;
}

Syndrome syndrome(const CodeSpec &code, const PauliFrame &error) {
    if (error.x.size() != code.n || error.z.size() != code.n) {
        throw std::invalid_argument("syndrome: frame length does not match code length");
    }
    return {apply_rows(code.x_checks, error.z), apply_rows(code.z_checks, error.x)};
}

bool anticommutes_with_any(const SparseRows &supports, const Bits &v) {
    for (const auto &support : supports) {
        uint8_t acc = 0;
        for (uint32_t q : support) {
            acc ^= v[q];
        }
        if (acc) {
            return true;
        }
    }
    return false;
}

LogicalOutcome is_logical_failure(const CodeSpec &code, const PauliFrame &residual) {
    Syndrome s = syndrome(code, residual);
    auto nonzero = [](const Bits &b) {
        return std::any_of(b.begin(), b.end(), [](uint8_t v) { return v != 0; });
    };
    if (nonzero(s.sigma) || nonzero(s.tau)) {
        throw std::logic_error("is_logical_failure: residual has a nonzero syndrome");
    }
    return {anticommutes_with_any(code.logicals_x, residual.z), anticommutes_with_any(code.logicals_z, residual.x)};
}

std::string commutation_violation(const CodeSpec &code) {
    std::vector<uint32_t> count(code.num_z_checks(), 0);
    std::vector<uint32_t> touched;
    for (size_t r = 0; r < code.num_x_checks(); r++) {
        for (uint32_t q : code.x_checks[r]) {
            for (uint32_t f : code.qubit_z_checks[q]) {
                if (count[f]++ == 0) {
                    touched.push_back(f);
                }
            }
        }
        for (uint32_t f : touched) {
            if (count[f] & 1) {
                std::ostringstream msg;
                msg << "X check " << r << " anticommutes with Z check " << f;
                return msg.str();
            }
            count[f] = 0;
        }
        touched.clear();
    }

    Bits v(code.n, 0);
    auto load = [&](const std::vector<uint32_t> &support) {
        std::fill(v.begin(), v.end(), 0);
        for (uint32_t q : support) {
            v[q] ^= 1;
        }
    };
    for (size_t i = 0; i < code.logicals_x.size(); i++) {
        load(code.logicals_x[i]);
        Bits t = apply_rows(code.z_checks, v);
        if (std::any_of(t.begin(), t.end(), [](uint8_t b) { return b; })) {
            return "logical X " + std::to_string(i) + " anticommutes with a Z check";
        }
        for (size_t j = 0; j < code.logicals_z.size(); j++) {
            uint8_t acc = 0;
            for (uint32_t q : code.logicals_z[j]) {
                acc ^= v[q];
            }
            if (acc != (i == j ? 1 : 0)) {
                return "logical X " + std::to_string(i) + " has the wrong pairing with logical Z " + std::to_string(j);
            }
        }
    }
    for (size_t i = 0; i < code.logicals_z.size(); i++) {
        load(code.logicals_z[i]);
        Bits s = apply_rows(code.x_checks, v);
        if (std::any_of(s.begin(), s.end(), [](uint8_t b) { return b; })) {
            return "logical Z " + std::to_string(i) + " anticommutes with an X check";
        }
    }
    return "";
}

CodeDimensions code_dimensions(const CodeSpec &code) {
    CodeDimensions d;
    d.rank_h = gf2::rank(BitMatrix::from_sparse_rows(code.n, code.x_checks));
    d.rank_t = gf2::rank(BitMatrix::from_sparse_rows(code.n, code.z_checks));
    d.k = code.n - d.rank_h - d.rank_t;
    return d;
}

std::vector<Bits> to_bits(const SparseRows &supports, size_t n) {
    std::vector<Bits> out;
    for (const auto &support : supports) {
        Bits b(n, 0);
        for (uint32_t q : support) {
            b[q] ^= 1;
        }
        out.push_back(std::move(b));
    }
    return out;
}

void write_sparse_rows(std::ostream &out, const SparseRows &rows) {
    for (size_t r = 0; r < rows.size(); r++) {
        out << r << ":";
        for (uint32_t c : rows[r]) {
            out << " " << c;
        }
        out << "\n";
    }
}

}  // namespace toric3d
