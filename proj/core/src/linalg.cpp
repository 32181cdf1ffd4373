#include "eamod/linalg.hpp"

#include <utility>

#include "eamod/error.hpp"

namespace eamod {

MatF::MatF(FieldCtx field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Fel(0)) {}

MatF::MatF(FieldCtx field, std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> entries)
    : MatF(std::move(field), rows, cols) {
  if (entries.size() != rows * cols) fail(ErrorCode::DimensionMismatch, "initializer size");
  std::size_t i = 0;
  for (auto v : entries) data_[i++] = field_.from_int(v);
}

MatF MatF::identity(const FieldCtx& field, std::size_t n) {
  MatF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

MatF MatF::from_columns(const FieldCtx& field, std::size_t rows, std::span<const Vec> columns) {
  MatF m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec MatF::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool MatF::is_zero() const {
  for (Fel x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

MatF MatF::transpose() const {
  MatF t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatF MatF::scaled(Fel s) const {
  MatF r = *this;
  for (auto& x : r.data_) x = field_.mul(x, s);
  return r;
}

MatF MatF::pow(unsigned e) const {
  if (!is_square()) fail(ErrorCode::DimensionMismatch, "power of non-square matrix");
  MatF result = identity(field_, rows_);
  MatF base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MatF MatF::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) fail(ErrorCode::DimensionMismatch, "block out of range");
  MatF b(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Vec MatF::apply(std::span<const Fel> v) const {
  if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "vector length");
  Vec out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    Fel acc = field_.zero();
    for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

MatF operator+(const MatF& a, const MatF& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum");
  MatF r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return r;
}

MatF operator-(const MatF& a, const MatF& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference");
  MatF r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return r;
}

MatF operator*(const MatF& a, const MatF& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
  const FieldCtx& F = a.field_;
  MatF c(F, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Fel* out = c.data_.data() + i * c.cols_;
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Fel s = a(i, l);
      if (s.is_zero()) continue;
      const Fel* in = b.data_.data() + l * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!in[j].is_zero()) out[j] = F.add(out[j], F.mul(s, in[j]));
      }
    }
  }
  return c;
}

namespace {

// row[dst] -= factor * row[src], for columns from start onwards
void eliminate(MatF& m, std::size_t dst, std::size_t src, Fel factor, std::size_t start) {
  const FieldCtx& F = m.field();
  const Fel neg = F.neg(factor);
  for (std::size_t j = start; j < m.cols(); ++j) {
    const Fel s = m(src, j);
    if (!s.is_zero()) m(dst, j) = F.add(m(dst, j), F.mul(neg, s));
  }
}

}  // namespace

Echelon row_echelon(MatF a) {
  const FieldCtx& F = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    }
    const Fel inv = F.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && !a(i, c).is_zero()) eliminate(a, i, r, a(i, c), c);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const MatF& input) {
  MatF a = input;
  const FieldCtx& F = a.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    }
    const Fel inv = F.inv(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (!a(i, c).is_zero()) eliminate(a, i, r, F.mul(a(i, c), inv), c);
    }
    ++r;
  }
  return r;
}

std::vector<Vec> kernel_basis(const MatF& a) {
  const FieldCtx& F = a.field();
  const auto [rref, pivots] = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols(), F.zero());
    v[f] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(rref(r, f));
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  MatF rows(F, basis.size(), a.cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows(i, j) = basis[i][j];
  const auto reduced = row_echelon(std::move(rows));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
    const auto r = reduced.rref.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::optional<MatF> inverse(const MatF& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  const FieldCtx& F = a.field();
  MatF aug(F, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F.one();
  }
  const auto e = row_echelon(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.rref.block(0, n, n, n);
}

Fel determinant(MatF a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const FieldCtx& F = a.field();
  const std::size_t n = a.rows();
  Fel det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, a(c, c));
    const Fel inv = F.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (!a(i, c).is_zero()) eliminate(a, i, c, F.mul(a(i, c), inv), c);
    }
  }
  return det;
}

MatF kron(const MatF& a, const MatF& b) {
  const FieldCtx& F = a.field();
  MatF k(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Fel s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = F.mul(s, b(r, c));
    }
  return k;
}

MatF block_diagonal(std::span<const MatF> blocks) {
  if (blocks.empty()) fail(ErrorCode::BadParams, "block_diagonal needs at least one block");
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  MatF m(blocks.front().field(), rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

MatF eval_poly(const Poly& f, const MatF& a) {
  const FieldCtx& F = a.field();
  MatF acc(F, a.rows(), a.cols());
  const MatF id = MatF::identity(F, a.rows());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * a + id.scaled(f.coeffs()[i]);
  }
  return acc;
}

Poly minimal_polynomial(const MatF& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "minimal polynomial of non-square matrix");
  const FieldCtx& F = a.field();
  const std::size_t n = a.rows();
  const std::size_t len = n * n;

  struct Reduced {
    Vec v;               // reduced flattened power, v[pivot] = 1
    std::size_t pivot;
    Vec combo;           // coefficients over I, A, A^2, ...
  };
  std::vector<Reduced> basis;
  MatF power = MatF::identity(F, n);
  for (std::size_t d = 0; d <= n; ++d) {
    Vec v = power.data();
    Vec combo(d + 1, F.zero());
    combo[d] = F.one();
    for (const auto& b : basis) {
      const Fel c = v[b.pivot];
      if (c.is_zero()) continue;
      const Fel nc = F.neg(c);
      for (std::size_t j = 0; j < len; ++j) {
        if (!b.v[j].is_zero()) v[j] = F.add(v[j], F.mul(nc, b.v[j]));
      }
      for (std::size_t j = 0; j < b.combo.size(); ++j) combo[j] = F.add(combo[j], F.mul(nc, b.combo[j]));
    }
    std::size_t pivot = 0;
    while (pivot < len && v[pivot].is_zero()) ++pivot;
    if (pivot == len) return Poly(F, std::move(combo)).monic();
    const Fel inv = F.inv(v[pivot]);
    for (auto& x : v) x = F.mul(x, inv);
    for (auto& x : combo) x = F.mul(x, inv);
    basis.push_back({std::move(v), pivot, std::move(combo)});
    power = power * a;
  }
  fail(ErrorCode::BadParams, "minimal polynomial search exceeded matrix size");
}

}  // namespace eamod
