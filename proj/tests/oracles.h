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

// Small, deliberately naive reference implementations used by the tests.

#ifndef TORIC3D_TESTS_ORACLES_H
#define TORIC3D_TESTS_ORACLES_H

#include <cstdint>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<uint8_t>>;

inline Dense dense_rows(const std::vector<std::vector<uint32_t>> &rows, size_t cols) {
    Dense out(rows.size(), std::vector<uint8_t>(cols, 0));
    for (size_t r = 0; r < rows.size(); r++) {
        for (uint32_t c : rows[r]) {
            out[r][c] ^= 1;
        }
    }
    return out;
}

// plain Gaussian elimination, one byte per entry
inline size_t rank(Dense a) {
    size_t rank = 0;
    size_t cols = a.empty() ? 0 : a[0].size();
    for (size_t c = 0; c < cols && rank < a.size(); c++) {
        size_t p = rank;
        while (p < a.size() && !a[p][c]) {
            p++;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (size_t r = 0; r < a.size(); r++) {
            if (r != rank && a[r][c]) {
                for (size_t k = 0; k < cols; k++) {
                    a[r][k] ^= a[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

// basis of {x : a x = 0}, naive reduced row echelon form
inline Dense kernel(Dense a, size_t cols) {
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < a.size(); c++) {
        size_t p = rank;
        while (p < a.size() && !a[p][c]) {
            p++;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (size_t r = 0; r < a.size(); r++) {
            if (r != rank && a[r][c]) {
                for (size_t k = 0; k < cols; k++) {
                    a[r][k] ^= a[rank][k];
                }
            }
        }
        pivot_col.push_back((int)c);
        rank++;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) {
        is_pivot[c] = true;
    }
    Dense out;
    for (size_t f = 0; f < cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<uint8_t> v(cols, 0);
        v[f] = 1;
        for (size_t r = 0; r < rank; r++) {
            if (a[r][f]) {
                v[pivot_col[r]] = 1;
            }
        }
        out.push_back(v);
    }
    return out;
}

inline bool in_rowspace(const Dense &a, const std::vector<uint8_t> &v) {
    Dense b = a;
    size_t r0 = rank(b);
    b.push_back(v);
    return rank(b) == r0;
}

inline std::vector<uint8_t> multiply(const Dense &a, const std::vector<uint8_t> &v) {
    std::vector<uint8_t> out(a.size(), 0);
    for (size_t r = 0; r < a.size(); r++) {
        uint8_t s = 0;
        for (size_t c = 0; c < v.size(); c++) {
            s ^= a[r][c] & v[c];
        }
        out[r] = s;
    }
    return out;
}

// Does some vector supported on `erased` have zero syndrome under `checks` yet anticommute
// with one of `logicals`?
inline bool supports_logical(const std::vector<std::vector<uint32_t>> &checks,
                             const std::vector<std::vector<uint32_t>> &logicals, const std::vector<uint32_t> &erased,
                             size_t n) {
    if (erased.empty()) {
        return false;
    }
    std::vector<int> col(n, -1);
    for (size_t i = 0; i < erased.size(); i++) {
        col[erased[i]] = (int)i;
    }
    Dense a;
    for (const auto &row : checks) {
        std::vector<uint8_t> r(erased.size(), 0);
        bool any = false;
        for (uint32_t q : row) {
            if (col[q] >= 0) {
                r[col[q]] ^= 1;
                any = true;
            }
        }
        if (any) {
            a.push_back(r);
        }
    }
    for (const auto &v : kernel(a, erased.size())) {
        for (const auto &l : logicals) {
            int par = 0;
            for (uint32_t q : l) {
                if (col[q] >= 0) {
                    par ^= v[col[q]];
                }
            }
            if (par) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace oracle

#endif
