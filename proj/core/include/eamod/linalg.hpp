#pragma once

// Dense matrices over a FieldCtx.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "eamod/gf.hpp"
#include "eamod/poly.hpp"

namespace eamod {

using Vec = std::vector<Fel>;

class MatF {
 public:
  MatF(FieldCtx field, std::size_t rows, std::size_t cols);
  /// Row-major integers reduced into the prime subfield.
  MatF(FieldCtx field, std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> entries);

  static MatF identity(const FieldCtx& field, std::size_t n);
  static MatF zero(const FieldCtx& field, std::size_t rows, std::size_t cols) {
    return MatF(field, rows, cols);
  }
  /// Matrix whose columns are the given vectors (all of length rows).
  static MatF from_columns(const FieldCtx& field, std::size_t rows, std::span<const Vec> columns);

  const FieldCtx& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Fel operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Fel& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Fel> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec column(std::size_t j) const;
  const std::vector<Fel>& data() const { return data_; }

  bool is_zero() const;
  MatF transpose() const;
  MatF scaled(Fel s) const;
  MatF pow(unsigned e) const;
  MatF block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  Vec apply(std::span<const Fel> v) const;

  friend MatF operator+(const MatF& a, const MatF& b);
  friend MatF operator-(const MatF& a, const MatF& b);
  friend MatF operator*(const MatF& a, const MatF& b);
  friend bool operator==(const MatF& a, const MatF& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  FieldCtx field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fel> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  MatF rref;
  std::vector<std::size_t> pivots;
};

Echelon row_echelon(MatF a);

std::size_t rank(const MatF& a);

/// Basis of the right null space, returned as the rows of a matrix in
/// reduced echelon form; size is cols - rank.
std::vector<Vec> kernel_basis(const MatF& a);

std::optional<MatF> inverse(const MatF& a);
Fel determinant(MatF a);

/// Kronecker product; the left factor indexes the outer blocks.
MatF kron(const MatF& a, const MatF& b);
MatF block_diagonal(std::span<const MatF> blocks);

/// Evaluates a polynomial at a square matrix (Horner).
MatF eval_poly(const Poly& f, const MatF& a);

/// Monic minimal polynomial of a square matrix, found as the first linear
/// dependency among I, A, A^2, ...
Poly minimal_polynomial(const MatF& a);

}  // namespace eamod
