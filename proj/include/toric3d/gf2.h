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

#ifndef TORIC3D_GF2_H
#define TORIC3D_GF2_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace toric3d {

/// Unpacked bit sequence: one byte per entry, each 0 or 1.
using Bits = std::vector<uint8_t>;

/// Dense bit-packed matrix over GF(2). Rows are stored as 64-bit words.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    /// Builds a matrix from sparse rows (lists of column indices). Repeated columns cancel.
    static BitMatrix from_sparse_rows(size_t cols, const std::vector<std::vector<uint32_t>> &rows);
    static BitMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t words_per_row() const {
        return words_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * words_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool v);
    void flip(size_t r, size_t c) {
        data_[r * words_ + (c >> 6)] ^= uint64_t{1} << (c & 63);
    }

    std::span<uint64_t> row(size_t r) {
        return {data_.data() + r * words_, words_};
    }
    std::span<const uint64_t> row(size_t r) const {
        return {data_.data() + r * words_, words_};
    }
    void xor_row_into(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);

    /// A · vᵗ.
    Bits multiply(const Bits &v) const;

    /// Appends a row given as unpacked bits.
    void push_row(const Bits &bits);

    Bits row_bits(size_t r) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> data_;
};

namespace gf2 {

size_t rank(BitMatrix a);

/// Canonical particular solution of A·xᵗ = y: pivots taken in ascending column order, free
/// variables zero. Returns nullopt when the system is inconsistent.
std::optional<Bits> solve(BitMatrix a, const Bits &y);

/// Basis of the null space, one vector per free column (in ascending column order).
std::vector<Bits> kernel_basis(BitMatrix a);

}  // namespace gf2

}  // namespace toric3d

#endif
