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

#include "toric3d/decoder_toom.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace toric3d {

namespace {

constexpr char SIDE_CHARS[4] = {'n', 'e', 's', 'w'};

std::pair<Axis, Axis> transverse(Axis d) {
    switch (d) {
        case Axis::x:
            return {Axis::y, Axis::z};
        case Axis::y:
            return {Axis::x, Axis::z};
        default:
            return {Axis::x, Axis::y};
    }
}

bool all_zero(const Bits &v) {
    return std::none_of(v.begin(), v.end(), [](uint8_t b) { return b != 0; });
}

void flip_qubit(SweepState &state, const CodeSpec &code, uint32_t q) {
    state.estimate[q] ^= 1;
    for (uint32_t f : code.qubit_z_checks[q]) {
        state.tau[f] ^= 1;
    }
}

uint32_t find_root(std::vector<uint32_t> &parent, uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

std::string rule_name(ToomRule r) {
    return {SIDE_CHARS[(size_t)r.first], SIDE_CHARS[(size_t)r.second]};
}

ToomRule parse_rule(const std::string &text) {
    auto side = [&](char c) -> Side {
        for (size_t i = 0; i < 4; i++) {
            if (SIDE_CHARS[i] == c) {
                return (Side)i;
            }
        }
        throw std::invalid_argument("unknown Toom rule '" + text + "'");
    };
    if (text.size() != 2 || text[0] == text[1]) {
        throw std::invalid_argument("unknown Toom rule '" + text + "'");
    }
    return {side(text[0]), side(text[1])};
}

std::vector<ToomRule> default_rule_order() {
    return {{Side::n, Side::e}, {Side::e, Side::s}, {Side::s, Side::w},
            {Side::w, Side::n}, {Side::n, Side::s}, {Side::e, Side::w}};
}

SweepOrder parse_sweep_order(const std::string &text) {
    if (text == "planes") {
        return SweepOrder::planes;
    }
    if (text == "index") {
        return SweepOrder::index;
    }
    throw std::invalid_argument("unknown sweep order '" + text + "'");
}

ToomGeometry::ToomGeometry(const CodeSpec &code) : code_(&code) {
    if (code.family != CodeFamily::solid || !code.lattice) {
        throw std::invalid_argument("the Toom decoder needs a solid code");
    }
    const Lattice3D &lat = *code.lattice;
    sides_.resize(code.n);
    for (uint32_t q = 0; q < code.n; q++) {
        const Edge &edge = lat.edges()[q];
        auto [a, b] = transverse(edge.dir);
        Coord c = edge.base;
        std::array<uint32_t, 4> &s = sides_[q];
        s[(size_t)Side::e] = lat.face_at(c, b);
        s[(size_t)Side::w] = lat.face_at(c.shifted(a, -1), b);
        s[(size_t)Side::n] = lat.face_at(c, a);
        s[(size_t)Side::s] = lat.face_at(c.shifted(b, -1), a);
        for (uint32_t f : s) {
            if (f == NO_ELEMENT) {
                continue;
            }
            const auto &row = code.z_checks[f];
            if (std::find(row.begin(), row.end(), q) == row.end()) {
                throw std::logic_error("Toom side face does not contain its qubit");
            }
        }
    }

    std::vector<uint32_t> zs, xs, ys;
    for (uint32_t q = 0; q < code.n; q++) {
        Axis d = lat.edges()[q].dir;
        (d == Axis::z ? zs : d == Axis::x ? xs : ys).push_back(q);
    }
    auto pos = [&](uint32_t q) { return lat.edges()[q].base; };
    std::sort(zs.begin(), zs.end(), [&](uint32_t p, uint32_t q) {
        Coord u = pos(p), v = pos(q);
        return std::make_tuple(u.z, -u.y, u.x) < std::make_tuple(v.z, -v.y, v.x);
    });
    std::sort(xs.begin(), xs.end(), [&](uint32_t p, uint32_t q) {
        Coord u = pos(p), v = pos(q);
        return std::make_tuple(u.x, -u.z, u.y) < std::make_tuple(v.x, -v.z, v.y);
    });
    std::sort(ys.begin(), ys.end(), [&](uint32_t p, uint32_t q) {
        Coord u = pos(p), v = pos(q);
        return std::make_tuple(u.y, -u.z, u.x) < std::make_tuple(v.y, -v.z, v.x);
    });
    planes_order_ = zs;
    planes_order_.insert(planes_order_.end(), xs.begin(), xs.end());
    planes_order_.insert(planes_order_.end(), ys.begin(), ys.end());
}

std::vector<uint32_t> ToomGeometry::order(SweepOrder kind) const {
    if (kind == SweepOrder::planes) {
        return planes_order_;
    }
    std::vector<uint32_t> out(code_->n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

size_t sweep_once(SweepState &state, const ToomGeometry &geom, const std::vector<uint32_t> &order) {
    const CodeSpec &code = geom.code();
    size_t flips = 0;
    for (uint32_t q : order) {
        uint32_t f1 = geom.side_face(q, state.rule.first);
        uint32_t f2 = geom.side_face(q, state.rule.second);
        if (f1 == NO_ELEMENT || f2 == NO_ELEMENT) {
            continue;
        }
        if (state.tau[f1] && state.tau[f2]) {
            flip_qubit(state, code, q);
            flips++;
        }
    }
    return flips;
}

bool residual_string_fix(SweepState &state, const ToomGeometry &geom) {
    const CodeSpec &code = geom.code();
    const Lattice3D &lat = *code.lattice;
    const int ell = lat.ell();
    const int side = ell + 1;

    // Syndrome faces grouped by gap plane; each vertical face separates two z-edges.
    std::vector<std::vector<uint32_t>> by_plane(side);
    for (uint32_t f = 0; f < state.tau.size(); f++) {
        if (!state.tau[f]) {
            continue;
        }
        const Face &face = lat.faces()[f];
        if (face.normal == Axis::z) {
            return false;
        }
        by_plane[face.base.z].push_back(f);
    }

    const int cells = side * side;
    auto cell = [&](int x, int y) { return x * side + y; };
    // endpoint (i, j) of the dual grid, i and j in [-1, ell]
    auto point = [&](int i, int j) { return (uint32_t)((i + 1) * (side + 1) + (j + 1)); };

    for (int g = 0; g <= ell; g++) {
        const auto &faces = by_plane[g];
        if (faces.empty()) {
            continue;
        }
        std::vector<uint32_t> parent((size_t)(side + 1) * (side + 1));
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<std::pair<uint32_t, uint32_t>> ends;
        for (uint32_t f : faces) {
            const Face &face = lat.faces()[f];
            int x = face.base.x, y = face.base.y;
            auto e = face.normal == Axis::y ? std::pair{point(x, y - 1), point(x, y)}
                                            : std::pair{point(x - 1, y), point(x, y)};
            ends.push_back(e);
            parent[find_root(parent, e.first)] = find_root(parent, e.second);
        }

        std::vector<std::vector<size_t>> strings(parent.size());
        for (size_t i = 0; i < faces.size(); i++) {
            strings[find_root(parent, ends[i].first)].push_back(i);
        }
        for (const auto &members : strings) {
            if (members.empty()) {
                continue;
            }
            // cut[c][0]: blocked towards +x, cut[c][1]: blocked towards +y
            std::vector<std::array<uint8_t, 2>> cut(cells, {0, 0});
            for (size_t i : members) {
                const Face &face = lat.faces()[faces[i]];
                cut[cell(face.base.x, face.base.y)][face.normal == Axis::y ? 0 : 1] = 1;
            }
            std::vector<int> comp(cells, -1);
            int num_comp = 0;
            std::vector<int> sizes;
            for (int start = 0; start < cells; start++) {
                if (comp[start] >= 0) {
                    continue;
                }
                std::vector<int> stack{start};
                comp[start] = num_comp;
                int size = 0;
                while (!stack.empty()) {
                    int c = stack.back();
                    stack.pop_back();
                    size++;
                    int x = c / side, y = c % side;
                    auto go = [&](int nx, int ny, bool blocked) {
                        if (nx < 0 || ny < 0 || nx >= side || ny >= side || blocked) {
                            return;
                        }
                        int d = cell(nx, ny);
                        if (comp[d] < 0) {
                            comp[d] = num_comp;
                            stack.push_back(d);
                        }
                    };
                    go(x + 1, y, cut[c][0]);
                    go(x, y + 1, cut[c][1]);
                    go(x - 1, y, x > 0 && cut[cell(x - 1, y)][0]);
                    go(x, y - 1, y > 0 && cut[cell(x, y - 1)][1]);
                }
                sizes.push_back(size);
                num_comp++;
            }
            if (num_comp != 2) {
                return false;
            }
            for (size_t i : members) {
                const Face &face = lat.faces()[faces[i]];
                int x = face.base.x, y = face.base.y;
                int other = face.normal == Axis::y ? cell(x + 1, y) : cell(x, y + 1);
                if (comp[cell(x, y)] == comp[other]) {
                    return false;
                }
            }
            int flip = sizes[0] < sizes[1] ? 0 : sizes[1] < sizes[0] ? 1 : 1 - comp[cell(0, 0)];
            for (int c = 0; c < cells; c++) {
                if (comp[c] == flip) {
                    flip_qubit(state, code, lat.edge_at({c / side, c % side, g}, Axis::z));
                }
            }
        }
    }
    return all_zero(state.tau);
}

BitflipDecodeResult decode_bitflip(const ToomGeometry &geom, const Bits &tau, const ToomOptions &opts) {
    const CodeSpec &code = geom.code();
    if (tau.size() != code.num_z_checks()) {
        throw std::invalid_argument("syndrome length does not match the number of Z checks");
    }
    const int i_max = opts.i_max > 0 ? opts.i_max : (code.ell + 1) / 2;
    const int j_max = opts.j_max > 0 ? opts.j_max : code.ell;
    const std::vector<uint32_t> order = geom.order(opts.sweep_order);

    BitflipDecodeResult res;
    SweepState state;
    state.tau = tau;
    state.estimate.assign(code.n, 0);

    auto check = [&] {
        if (!opts.check_invariant) {
            return;
        }
        Bits expect = apply_rows(code.z_checks, state.estimate);
        for (size_t f = 0; f < expect.size(); f++) {
            if ((expect[f] ^ tau[f]) != state.tau[f]) {
                throw std::logic_error("Toom syndrome bookkeeping diverged");
            }
        }
    };

    bool done = all_zero(state.tau);
    for (state.i = 0; state.i < i_max && !done; state.i++) {
        for (ToomRule rule : opts.rules) {
            state.rule = rule;
            for (state.j = 0; state.j < j_max; state.j++) {
                if (all_zero(state.tau)) {
                    break;
                }
                size_t flips = sweep_once(state, geom, order);
                res.sweeps++;
                check();
                if (flips == 0) {
                    break;
                }
            }
            if (all_zero(state.tau)) {
                done = true;
                break;
            }
        }
    }
    if (!done) {
        if (opts.residual_step) {
            res.used_residual_step = true;
            done = residual_string_fix(state, geom);
            check();
        }
        res.decoder_failure = !done;
    }
    res.estimate = std::move(state.estimate);
    return res;
}

BitflipDecodeResult decode_bitflip(const CodeSpec &code, const Bits &tau, const ToomOptions &opts) {
    ToomGeometry geom(code);
    return decode_bitflip(geom, tau, opts);
}

}  // namespace toric3d
