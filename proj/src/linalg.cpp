#include "ffkakeya/linalg.hpp"

#include <algorithm>

#include "ffkakeya/error.hpp"

namespace ffkakeya {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

std::vector<Elem> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

std::vector<Elem> Matrix::apply(const std::vector<Elem>& v) const {
  if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "vector length != column count");
  std::vector<Elem> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = field_.zero();
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = field_.add(acc, field_.mul(at(r, c), v[c]));
    }
    out[r] = acc;
  }
  return out;
}

Echelon row_reduce(Matrix m) {
  const Field f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && f.is_zero(m.at(r, c))) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(pivot_row, r);
    const Elem inv = f.inv(m.at(pivot_row, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(pivot_row, j) = f.mul(m.at(pivot_row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row) continue;
      const Elem factor = m.at(i, c);
      if (f.is_zero(factor)) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        const Elem pj = m.at(pivot_row, j);
        if (!f.is_zero(pj)) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, pj));
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

namespace {

std::vector<Elem> null_vector_for(const Echelon& ech, std::size_t free_col) {
  const Field& f = ech.reduced.field();
  std::vector<Elem> v(ech.reduced.cols(), f.zero());
  v[free_col] = f.one();
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    v[ech.pivots[i]] = f.neg(ech.reduced.at(i, free_col));
  }
  return v;
}

std::vector<std::size_t> free_columns(const Echelon& ech) {
  std::vector<std::size_t> free;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ech.reduced.cols(); ++c) {
    if (k < ech.pivots.size() && ech.pivots[k] == c) {
      ++k;
    } else {
      free.push_back(c);
    }
  }
  return free;
}

}  // namespace

std::vector<std::vector<Elem>> nullspace_basis(const Matrix& m) {
  const Echelon ech = row_reduce(m);
  std::vector<std::vector<Elem>> basis;
  for (auto c : free_columns(ech)) basis.push_back(null_vector_for(ech, c));
  return basis;
}

std::optional<std::vector<Elem>> canonical_null_vector(const Matrix& m) {
  const Echelon ech = row_reduce(m);
  const auto free = free_columns(ech);
  if (free.empty()) return std::nullopt;
  return null_vector_for(ech, free.front());
}

}  // namespace ffkakeya
