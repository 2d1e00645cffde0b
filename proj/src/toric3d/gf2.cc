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

#include "toric3d/gf2.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace toric3d {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {
}

BitMatrix BitMatrix::from_sparse_rows(size_t cols, const std::vector<std::vector<uint32_t>> &rows) {
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        for (uint32_t c : rows[r]) {
            if (c >= cols) {
                throw std::out_of_range("sparse row entry exceeds column count");
            }
            m.flip(r, c);
        }
    }
    return m;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.flip(k, k);
    }
    return m;
}

void BitMatrix::set(size_t r, size_t c, bool v) {
    uint64_t mask = uint64_t{1} << (c & 63);
    uint64_t &w = data_[r * words_ + (c >> 6)];
    w = v ? (w | mask) : (w & ~mask);
}

void BitMatrix::xor_row_into(size_t src, size_t dst) {
    const uint64_t *s = data_.data() + src * words_;
    uint64_t *d = data_.data() + dst * words_;
    for (size_t k = 0; k < words_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t k = 0; k < words_; k++) {
        std::swap(data_[a * words_ + k], data_[b * words_ + k]);
    }
}

Bits BitMatrix::multiply(const Bits &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("BitMatrix::multiply: vector length does not match column count");
    }
    std::vector<uint64_t> packed(words_, 0);
    for (size_t c = 0; c < cols_; c++) {
        if (v[c]) {
            packed[c >> 6] |= uint64_t{1} << (c & 63);
        }
    }
    Bits out(rows_, 0);
    for (size_t r = 0; r < rows_; r++) {
        uint64_t acc = 0;
        const uint64_t *row_data = data_.data() + r * words_;
        for (size_t k = 0; k < words_; k++) {
            acc ^= row_data[k] & packed[k];
        }
        out[r] = (uint8_t)(std::popcount(acc) & 1);
    }
    return out;
}

void BitMatrix::push_row(const Bits &bits) {
    if (bits.size() != cols_) {
        throw std::invalid_argument("BitMatrix::push_row: row length does not match column count");
    }
    data_.resize(data_.size() + words_, 0);
    rows_++;
    for (size_t c = 0; c < cols_; c++) {
        if (bits[c]) {
            flip(rows_ - 1, c);
        }
    }
}

Bits BitMatrix::row_bits(size_t r) const {
    Bits out(cols_, 0);
    for (size_t c = 0; c < cols_; c++) {
        out[c] = get(r, c);
    }
    return out;
}

namespace gf2 {

namespace {

// Reduces `a` (and optionally the right-hand side) to reduced row echelon form. Returns the
// pivot column of each of the first `rank` rows.
std::vector<size_t> reduce(BitMatrix &a, Bits *rhs) {
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t col = 0; col < a.cols() && next_row < a.rows(); col++) {
        size_t word = col >> 6;
        uint64_t mask = uint64_t{1} << (col & 63);
        size_t found = a.rows();
        for (size_t r = next_row; r < a.rows(); r++) {
            if (a.row(r)[word] & mask) {
                found = r;
                break;
            }
        }
        if (found == a.rows()) {
            continue;
        }
        a.swap_rows(found, next_row);
        if (rhs) {
            std::swap((*rhs)[found], (*rhs)[next_row]);
        }
        for (size_t r = 0; r < a.rows(); r++) {
            if (r != next_row && (a.row(r)[word] & mask)) {
                a.xor_row_into(next_row, r);
                if (rhs) {
                    (*rhs)[r] ^= (*rhs)[next_row];
                }
            }
        }
        pivots.push_back(col);
        next_row++;
    }
    return pivots;
}

}  // namespace

size_t rank(BitMatrix a) {
    return reduce(a, nullptr).size();
}

std::optional<Bits> solve(BitMatrix a, const Bits &y) {
    if (y.size() != a.rows()) {
        throw std::invalid_argument("gf2::solve: right-hand side length does not match row count");
    }
    Bits rhs = y;
    auto pivots = reduce(a, &rhs);
    for (size_t r = pivots.size(); r < a.rows(); r++) {
        if (rhs[r]) {
            return std::nullopt;
        }
    }
    Bits x(a.cols(), 0);
    for (size_t r = 0; r < pivots.size(); r++) {
        x[pivots[r]] = rhs[r];
    }
    return x;
}

std::vector<Bits> kernel_basis(BitMatrix a) {
    auto pivots = reduce(a, nullptr);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<Bits> basis;
    for (size_t free_col = 0; free_col < a.cols(); free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        Bits v(a.cols(), 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); r++) {
            if (a.get(r, free_col)) {
                v[pivots[r]] = 1;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gf2

}  // namespace toric3d
