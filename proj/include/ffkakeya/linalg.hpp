#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ffkakeya/field.hpp"

namespace ffkakeya {

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::vector<Elem> row(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);
  /// out[r] = sum_c M[r][c] v[c].
  std::vector<Elem> apply(const std::vector<Elem>& v) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination scanning columns left to right and taking the
/// first row with a nonzero entry as pivot.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// One basis vector per free column, in column order: the free variable is
/// set to 1, the other free variables to 0.
std::vector<std::vector<Elem>> nullspace_basis(const Matrix& m);

/// The basis vector belonging to the first free column, or nothing when the
/// nullspace is trivial.
std::optional<std::vector<Elem>> canonical_null_vector(const Matrix& m);

}  // namespace ffkakeya
