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

#include "toric3d/decoder_erasure.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toric3d {

namespace {

std::vector<uint32_t> checked_erasure(const std::vector<uint32_t> &erased, size_t n) {
    std::vector<uint32_t> out = erased;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!out.empty() && out.back() >= n) {
        throw std::out_of_range("erased qubit index out of range");
    }
    return out;
}

class CellForest {
   public:
    explicit CellForest(const CodeSpec &code) : parent_(code.num_cells), dummy_(code.cell_is_dummy) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // Adds the qubit if it keeps the forest acyclic with at most one dummy per tree.
    bool try_add(const std::vector<std::array<uint32_t, 2>> &ends) {
        roots_.clear();
        size_t cells = 0;
        for (const auto &pair : ends) {
            for (uint32_t c : pair) {
                roots_.push_back(find(c));
                cells++;
            }
        }
        std::sort(roots_.begin(), roots_.end());
        // two end cells already in one tree: the qubit would close a cycle
        size_t distinct = std::unique(roots_.begin(), roots_.end()) - roots_.begin();
        if (distinct < cells) {
            return false;
        }
        size_t dummies = 0;
        for (size_t i = 0; i < distinct; i++) {
            dummies += dummy_[roots_[i]];
        }
        if (dummies > 1) {
            return false;
        }
        uint32_t root = roots_[0];
        for (size_t i = 1; i < distinct; i++) {
            parent_[roots_[i]] = root;
            dummy_[root] |= dummy_[roots_[i]];
        }
        return true;
    }

   private:
    uint32_t find(uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    std::vector<uint32_t> parent_;
    std::vector<uint8_t> dummy_;
    std::vector<uint32_t> roots_;
};

}  // namespace

TannerGraph::TannerGraph(const SparseRows &qubit_checks, const SparseRows &check_qubits, const Bits &syndrome,
                         const std::vector<uint32_t> &erased)
    : qubit_checks_(qubit_checks), check_qubits_(check_qubits), syn_(syndrome) {
    if (syndrome.size() != check_qubits.size()) {
        throw std::invalid_argument("syndrome length does not match the number of checks");
    }
    erased_ = checked_erasure(erased, qubit_checks.size());
    estimate_.assign(qubit_checks.size(), 0);
    live_.assign(qubit_checks.size(), 0);
    degree_.assign(check_qubits.size(), 0);
    for (uint32_t q : erased_) {
        live_[q] = 1;
        for (uint32_t c : qubit_checks_[q]) {
            degree_[c]++;
        }
    }
    num_live_ = erased_.size();
    for (uint8_t b : syn_) {
        num_defects_ += b;
    }
}

void TannerGraph::toggle(uint32_t c) {
    syn_[c] ^= 1;
    if (syn_[c]) {
        num_defects_++;
    } else {
        num_defects_--;
    }
}

void TannerGraph::assign(uint32_t q, uint8_t value) {
    if (!live_[q]) {
        throw std::logic_error("qubit assigned twice");
    }
    live_[q] = 0;
    num_live_--;
    estimate_[q] = value;
    for (uint32_t c : qubit_checks_[q]) {
        degree_[c]--;
        if (value) {
            toggle(c);
        }
        if (degree_[c] == 1) {
            queue_.push_back(c);
        }
    }
}

size_t TannerGraph::peel() {
    queue_.clear();
    for (uint32_t q : erased_) {
        if (live_[q]) {
            for (uint32_t c : qubit_checks_[q]) {
                if (degree_[c] == 1) {
                    queue_.push_back(c);
                }
            }
        }
    }
    std::sort(queue_.begin(), queue_.end());
    queue_.erase(std::unique(queue_.begin(), queue_.end()), queue_.end());
    size_t assigned = 0;
    for (size_t head = 0; head < queue_.size(); head++) {
        uint32_t c = queue_[head];
        if (degree_[c] != 1) {
            continue;
        }
        for (uint32_t q : check_qubits_[c]) {
            if (live_[q]) {
                assign(q, syn_[c]);
                assigned++;
                break;
            }
        }
    }
    queue_.clear();
    return assigned;
}

std::vector<uint32_t> TannerGraph::live_qubits() const {
    std::vector<uint32_t> out;
    for (uint32_t q : erased_) {
        if (live_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

bool TannerGraph::has_orphan_defect() const {
    for (size_t c = 0; c < syn_.size(); c++) {
        if (syn_[c] && degree_[c] == 0) {
            return true;
        }
    }
    return false;
}

bool TannerGraph::solve_rest() {
    if (has_orphan_defect()) {
        return false;
    }
    std::vector<uint32_t> qubits = live_qubits();
    if (qubits.empty()) {
        return syndrome_clear();
    }
    std::vector<uint32_t> checks;
    for (uint32_t q : qubits) {
        checks.insert(checks.end(), qubit_checks_[q].begin(), qubit_checks_[q].end());
    }
    std::sort(checks.begin(), checks.end());
    checks.erase(std::unique(checks.begin(), checks.end()), checks.end());
    std::vector<uint32_t> column(qubit_checks_.size(), 0);
    for (uint32_t i = 0; i < qubits.size(); i++) {
        column[qubits[i]] = i;
    }
    BitMatrix a(checks.size(), qubits.size());
    Bits rhs(checks.size());
    for (size_t r = 0; r < checks.size(); r++) {
        rhs[r] = syn_[checks[r]];
        for (uint32_t q : check_qubits_[checks[r]]) {
            if (live_[q]) {
                a.flip(r, column[q]);
            }
        }
    }
    auto sol = gf2::solve(std::move(a), rhs);
    if (!sol) {
        return false;
    }
    for (uint32_t i = 0; i < qubits.size(); i++) {
        assign(qubits[i], (*sol)[i]);
    }
    return syndrome_clear();
}

void TannerGraph::zero_rest() {
    for (uint32_t q : erased_) {
        if (live_[q]) {
            assign(q, 0);
        }
    }
}

PeelResult peel(const SparseRows &qubit_checks, const SparseRows &check_qubits, const Bits &syndrome,
                const std::vector<uint32_t> &erased) {
    TannerGraph t(qubit_checks, check_qubits, syndrome, erased);
    t.peel();
    PeelResult r;
    r.estimate = t.estimate();
    r.residual_qubits = t.live_qubits();
    r.residual_syndrome.resize(check_qubits.size());
    for (uint32_t c = 0; c < check_qubits.size(); c++) {
        r.residual_syndrome[c] = t.syndrome(c);
    }
    return r;
}

std::vector<uint32_t> freeze_by_forest_z(const CodeSpec &code, const std::vector<uint32_t> &erased) {
    CellForest forest(code);
    std::vector<uint32_t> frozen;
    for (uint32_t q : checked_erasure(erased, code.n)) {
        if (!forest.try_add(code.qubit_ends[q])) {
            frozen.push_back(q);
        }
    }
    return frozen;
}

RegionReport trap(const CodeSpec &code, const Bits &unresolved, bool join_hyperedges) {
    if (unresolved.size() != code.n) {
        throw std::invalid_argument("unresolved mask length does not match code length");
    }
    RegionReport report;
    std::vector<int32_t> region_of(code.num_cells, -1);
    std::vector<uint32_t> count(code.n, 0);
    std::vector<uint8_t> parity(code.num_z_checks(), 0);
    std::vector<uint32_t> stack;
    for (uint32_t start = 0; start < code.num_cells; start++) {
        if (region_of[start] >= 0) {
            continue;
        }
        const int32_t id = (int32_t)report.regions.size();
        std::vector<uint32_t> cells;
        std::vector<uint32_t> touched;
        region_of[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            uint32_t u = stack.back();
            stack.pop_back();
            cells.push_back(u);
            for (const auto &[nb, q] : code.cell_neighbors[u]) {
                if (unresolved[q]) {
                    if (count[q]++ == 0) {
                        touched.push_back(q);
                    }
                    continue;
                }
                if (!join_hyperedges) {
                    if (region_of[nb] < 0) {
                        region_of[nb] = id;
                        stack.push_back(nb);
                    }
                    continue;
                }
                for (const auto &pair : code.qubit_ends[q]) {
                    for (uint32_t c : pair) {
                        if (region_of[c] < 0) {
                            region_of[c] = id;
                            stack.push_back(c);
                        }
                    }
                }
            }
        }
        std::sort(cells.begin(), cells.end());
        std::vector<uint32_t> candidate;
        for (uint32_t q : touched) {
            if (count[q] % 2 == 1) {
                candidate.push_back(q);
            }
            count[q] = 0;
        }
        std::sort(candidate.begin(), candidate.end());
        bool usable = !candidate.empty();
        if (usable) {
            std::vector<uint32_t> faces;
            for (uint32_t q : candidate) {
                for (uint32_t f : code.qubit_z_checks[q]) {
                    parity[f] ^= 1;
                    faces.push_back(f);
                }
            }
            for (uint32_t f : faces) {
                if (parity[f]) {
                    usable = false;
                }
            }
            for (uint32_t f : faces) {
                parity[f] = 0;
            }
        }
        report.regions.push_back(std::move(cells));
        report.candidates.push_back(std::move(candidate));
        report.usable.push_back(usable);
    }
    return report;
}

std::vector<uint32_t> freeze_trapped(TannerGraph &tanner, const RegionReport &report) {
    std::vector<uint32_t> frozen;
    std::vector<uint32_t> covered;  // qubits of already chosen candidates, sorted
    for (size_t i = 0; i < report.candidates.size(); i++) {
        if (!report.usable[i]) {
            continue;
        }
        const auto &cand = report.candidates[i];
        bool blocked = false;
        for (uint32_t q : frozen) {
            if (std::binary_search(cand.begin(), cand.end(), q)) {
                blocked = true;
                break;
            }
        }
        if (blocked) {
            continue;
        }
        for (uint32_t q : cand) {
            if (tanner.is_live(q) && !std::binary_search(covered.begin(), covered.end(), q)) {
                tanner.freeze(q);
                frozen.push_back(q);
                covered.insert(covered.end(), cand.begin(), cand.end());
                std::sort(covered.begin(), covered.end());
                break;
            }
        }
    }
    return frozen;
}

std::string stuck_policy_name(StuckPolicy p) {
    return p == StuckPolicy::gauss ? "gauss" : "declare_failure";
}

StuckPolicy parse_stuck_policy(const std::string &text) {
    if (text == "gauss") {
        return StuckPolicy::gauss;
    }
    if (text == "declare_failure" || text == "fail") {
        return StuckPolicy::declare_failure;
    }
    throw std::invalid_argument("unknown stuck policy '" + text + "'");
}

std::string z_variant_name(ZVariant v) {
    return v == ZVariant::alternating ? "alternating" : "freeze_first";
}

ZVariant parse_z_variant(const std::string &text) {
    if (text == "alternating") {
        return ZVariant::alternating;
    }
    if (text == "freeze_first") {
        return ZVariant::freeze_first;
    }
    throw std::invalid_argument("unknown decoder variant '" + text + "'");
}

ErasureDecodeResult decode_erasure_z(const CodeSpec &code, const std::vector<uint32_t> &erased, const Bits &sigma,
                                     ZVariant variant) {
    TannerGraph t(code.qubit_x_checks, code.x_checks, sigma, erased);
    ErasureDecodeResult res;
    if (variant == ZVariant::freeze_first) {
        for (uint32_t q : freeze_by_forest_z(code, erased)) {
            t.freeze(q);
            res.frozen++;
        }
        t.peel();
    } else {
        for (;;) {
            t.peel();
            if (t.num_live() == 0 || t.syndrome_clear()) {
                break;
            }
            std::vector<uint32_t> live = t.live_qubits();
            std::vector<uint32_t> rejected = freeze_by_forest_z(code, live);
            if (rejected.empty()) {
                break;
            }
            t.freeze(rejected.front());
            res.frozen++;
        }
    }
    if (t.syndrome_clear()) {
        t.zero_rest();
    } else {
        res.used_gauss = true;
        if (!t.solve_rest()) {
            throw std::logic_error("erasure syndrome is inconsistent with the erased qubits");
        }
    }
    res.estimate = t.estimate();
    return res;
}

ErasureDecodeResult decode_erasure_x(const CodeSpec &code, const std::vector<uint32_t> &erased, const Bits &tau,
                                     StuckPolicy policy) {
    TannerGraph t(code.qubit_z_checks, code.z_checks, tau, erased);
    ErasureDecodeResult res;
    for (;;) {
        t.peel();
        if (t.syndrome_clear()) {
            t.zero_rest();
            break;
        }
        if (t.num_live() == 0 || t.has_orphan_defect()) {
            throw std::logic_error("erasure syndrome is inconsistent with the erased qubits");
        }
        Bits unresolved(code.n, 0);
        for (uint32_t q : t.live_qubits()) {
            unresolved[q] = 1;
        }
        RegionReport report = trap(code, unresolved);
        res.trap_passes++;
        std::vector<uint32_t> frozen = freeze_trapped(t, report);
        if (!frozen.empty()) {
            res.frozen += frozen.size();
            continue;
        }
        if (policy == StuckPolicy::declare_failure) {
            res.failure = true;
            break;
        }
        res.used_gauss = true;
        if (!t.solve_rest()) {
            throw std::logic_error("erasure syndrome is inconsistent with the erased qubits");
        }
        break;
    }
    res.estimate = t.estimate();
    return res;
}

}  // namespace toric3d
