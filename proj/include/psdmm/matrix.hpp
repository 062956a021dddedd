/* Copyright (c) the psdmm authors.
 * This source code is licensed under the Apache 2.0 license found in the
 * LICENSE file in the root directory of this source tree.
 */
#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "psdmm/field.hpp"

namespace psdmm {

/// Dense row-major matrix over F_q. Entries are canonical residues; the
/// modulus rides along so mixed-field operations are rejected.
class MatrixF {
 public:
  MatrixF(std::size_t rows, std::size_t cols, const Modulus& mod)
      : rows_(rows), cols_(cols), mod_(mod), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  const Modulus& mod() const { return mod_; }

  std::uint64_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint64_t v) {
    data_[r * cols_ + c] = mod_.reduce(v);
  }
  FieldElement elem(std::size_t r, std::size_t c) const {
    return FieldElement{at(r, c), mod_.value()};
  }

  const std::vector<std::uint64_t>& data() const { return data_; }
  std::vector<std::uint64_t>& data() { return data_; }

  bool is_zero() const;

  friend bool operator==(const MatrixF& a, const MatrixF& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.mod_ == b.mod_ &&
           a.data_ == b.data_;
  }
  friend bool operator!=(const MatrixF& a, const MatrixF& b) {
    return !(a == b);
  }

  /// this += other * scalar (elementwise). Shapes and moduli must agree.
  void add_scaled(const MatrixF& other, FieldElement scalar);
  void add_in_place(const MatrixF& other);

  MatrixF scaled(FieldElement scalar) const;

 private:
  std::size_t rows_, cols_;
  Modulus mod_;
  std::vector<std::uint64_t> data_;
};

MatrixF operator+(const MatrixF& a, const MatrixF& b);
MatrixF operator-(const MatrixF& a, const MatrixF& b);

/// Exact product over F_q. Throws DimensionMismatch / ModulusMismatch.
MatrixF matmul(const MatrixF& a, const MatrixF& b);

/// Identity matrix.
MatrixF identity_matrix(std::size_t n, const Modulus& mod);

/// i.i.d. uniform entries, deterministic under the rng seed.
MatrixF random_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                      const Modulus& mod);

/// A matrix cut into a grid_rows x grid_cols grid of equal contiguous blocks.
/// Blocks are materialized copies; block (k, j) covers base rows
/// [k*rows/grid_rows, ...) and the analogous column range.
class BlockGrid {
 public:
  BlockGrid(const MatrixF& base, std::size_t grid_rows, std::size_t grid_cols);

  std::size_t grid_rows() const { return grid_rows_; }
  std::size_t grid_cols() const { return grid_cols_; }
  std::size_t block_rows() const { return block_rows_; }
  std::size_t block_cols() const { return block_cols_; }

  const MatrixF& block(std::size_t k, std::size_t j) const {
    return blocks_[k * grid_cols_ + j];
  }

 private:
  std::size_t grid_rows_, grid_cols_, block_rows_, block_cols_;
  std::vector<MatrixF> blocks_;
};

BlockGrid partition(const MatrixF& mat, std::size_t grid_rows,
                    std::size_t grid_cols);

/// Inverse of partition: stitch a grid of equally-shaped blocks back into one
/// matrix. Throws RaggedBlocks when shapes or row lengths disagree.
MatrixF assemble_blocks(const std::vector<std::vector<MatrixF>>& blocks);

/// Fixture text format: first line "rows cols q", then rows*cols
/// whitespace-separated integers in [0, q).
void write_matrix_text(std::ostream& os, const MatrixF& m);
MatrixF read_matrix_text(std::istream& is);

}  // namespace psdmm
