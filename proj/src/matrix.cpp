/* Copyright (c) the psdmm authors.
 * This source code is licensed under the Apache 2.0 license found in the
 * LICENSE file in the root directory of this source tree.
 */
#include "psdmm/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace psdmm {

namespace {

void check_same_shape(const MatrixF& a, const MatrixF& b) {
  if (a.mod() != b.mod()) throw ModulusMismatch("matrices from different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes differ");
}

}  // namespace

bool MatrixF::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t v) { return v == 0; });
}

void MatrixF::add_scaled(const MatrixF& other, FieldElement scalar) {
  check_same_shape(*this, other);
  if (scalar.modulus != mod_.value())
    throw ModulusMismatch("scalar from a different field");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] = mod_.add(data_[i], mod_.mul(other.data_[i], scalar.value));
}

void MatrixF::add_in_place(const MatrixF& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] = mod_.add(data_[i], other.data_[i]);
}

MatrixF MatrixF::scaled(FieldElement scalar) const {
  MatrixF out(rows_, cols_, mod_);
  out.add_scaled(*this, scalar);
  return out;
}

MatrixF operator+(const MatrixF& a, const MatrixF& b) {
  MatrixF out = a;
  out.add_in_place(b);
  return out;
}

MatrixF operator-(const MatrixF& a, const MatrixF& b) {
  check_same_shape(a, b);
  MatrixF out(a.rows(), a.cols(), a.mod());
  for (std::size_t i = 0; i < a.data().size(); ++i)
    out.data()[i] = a.mod().sub(a.data()[i], b.data()[i]);
  return out;
}

MatrixF matmul(const MatrixF& a, const MatrixF& b) {
  if (a.mod() != b.mod()) throw ModulusMismatch("matrices from different fields");
  if (a.cols() != b.rows())
    throw DimensionMismatch("matmul: inner dimensions disagree");
  const Modulus& mod = a.mod();
  MatrixF out(a.rows(), b.cols(), mod);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.data()[i * b.cols() + j] = mod.add(
            out.data()[i * b.cols() + j], mod.mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

MatrixF identity_matrix(std::size_t n, const Modulus& mod) {
  MatrixF out(n, n, mod);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

MatrixF random_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                      const Modulus& mod) {
  MatrixF out(rows, cols, mod);
  for (auto& v : out.data()) v = rng.below(mod.value());
  return out;
}

BlockGrid::BlockGrid(const MatrixF& base, std::size_t grid_rows,
                     std::size_t grid_cols)
    : grid_rows_(grid_rows), grid_cols_(grid_cols) {
  if (grid_rows == 0 || grid_cols == 0 || base.rows() % grid_rows != 0 ||
      base.cols() % grid_cols != 0)
    throw IndivisibleDimensions("grid does not divide matrix dimensions");
  block_rows_ = base.rows() / grid_rows;
  block_cols_ = base.cols() / grid_cols;
  blocks_.reserve(grid_rows * grid_cols);
  for (std::size_t k = 0; k < grid_rows; ++k) {
    for (std::size_t j = 0; j < grid_cols; ++j) {
      MatrixF blk(block_rows_, block_cols_, base.mod());
      for (std::size_t r = 0; r < block_rows_; ++r)
        for (std::size_t c = 0; c < block_cols_; ++c)
          blk.set(r, c, base.at(k * block_rows_ + r, j * block_cols_ + c));
      blocks_.push_back(std::move(blk));
    }
  }
}

BlockGrid partition(const MatrixF& mat, std::size_t grid_rows,
                    std::size_t grid_cols) {
  return BlockGrid(mat, grid_rows, grid_cols);
}

MatrixF assemble_blocks(const std::vector<std::vector<MatrixF>>& blocks) {
  if (blocks.empty() || blocks[0].empty())
    throw RaggedBlocks("empty block grid");
  const std::size_t gr = blocks.size();
  const std::size_t gc = blocks[0].size();
  const MatrixF& first = blocks[0][0];
  for (const auto& row : blocks) {
    if (row.size() != gc) throw RaggedBlocks("block rows differ in length");
    for (const auto& b : row) {
      if (b.rows() != first.rows() || b.cols() != first.cols() ||
          b.mod() != first.mod())
        throw RaggedBlocks("blocks differ in shape or field");
    }
  }
  MatrixF out(gr * first.rows(), gc * first.cols(), first.mod());
  for (std::size_t k = 0; k < gr; ++k)
    for (std::size_t j = 0; j < gc; ++j)
      for (std::size_t r = 0; r < first.rows(); ++r)
        for (std::size_t c = 0; c < first.cols(); ++c)
          out.set(k * first.rows() + r, j * first.cols() + c,
                  blocks[k][j].at(r, c));
  return out;
}

void write_matrix_text(std::ostream& os, const MatrixF& m) {
  os << m.rows() << ' ' << m.cols() << ' ' << m.mod().value() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << m.at(r, c);
      os << (c + 1 == m.cols() ? '\n' : ' ');
    }
  }
}

MatrixF read_matrix_text(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  std::uint64_t q = 0;
  if (!(is >> rows >> cols >> q))
    throw ParseFailure("matrix text: bad header");
  Modulus mod(q);
  MatrixF out(rows, cols, mod);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t v;
      if (!(is >> v)) throw ParseFailure("matrix text: truncated entries");
      if (v >= q) throw ParseFailure("matrix text: entry out of range");
      out.set(r, c, v);
    }
  }
  return out;
}

}  // namespace psdmm
