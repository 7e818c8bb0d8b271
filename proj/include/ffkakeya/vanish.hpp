#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffkakeya/field.hpp"
#include "ffkakeya/linalg.hpp"
#include "ffkakeya/multi_index.hpp"
#include "ffkakeya/sparse_poly.hpp"

namespace ffkakeya {

/// Find a nonzero P of degree <= max_degree vanishing on `points` with
/// multiplicity `mult`. Points are deduplicated and sorted on construction.
class VanishProblem {
 public:
  VanishProblem(Field field, std::size_t arity, std::vector<Point> points,
                std::uint32_t max_degree, std::uint32_t mult);

  const Field& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Point>& points() const { return points_; }
  std::uint32_t max_degree() const { return max_degree_; }
  std::uint32_t mult() const { return mult_; }

  /// binom(D + n, n): monomials of degree <= D.
  std::uint64_t unknown_count() const;
  /// |A| binom(M + n - 1, n): one row per point and derivative order < M.
  std::uint64_t constraint_count() const;
  /// constraint_count < unknown_count, which forces a nonzero solution.
  bool counting_inequality_holds() const;

 private:
  Field field_;
  std::size_t arity_;
  std::vector<Point> points_;
  std::uint32_t max_degree_;
  std::uint32_t mult_;
};

inline constexpr std::uint64_t kMaxSystemEntries = 100'000'000;

/// Row (a, beta), column alpha holds binom(alpha, beta) a^(alpha - beta), the
/// coefficient of c_alpha in P^(beta)(a). Columns are the monomials of degree
/// <= D by degree then lex; rows run over points in order, then beta by
/// degree then lex.
struct LinearSystem {
  std::vector<MultiIndex> columns;
  std::vector<std::pair<std::size_t, MultiIndex>> row_labels;  // (point index, beta)
  Matrix matrix;
};

LinearSystem build_system(const VanishProblem& problem);

/// The canonical nullspace vector as a polynomial, or nothing if only the
/// zero polynomial qualifies. Any returned polynomial has been re-checked
/// against the multiplicity module.
std::optional<SparsePoly> find_vanishing_poly(const VanishProblem& problem);

bool nullspace_trivial(const VanishProblem& problem);

}  // namespace ffkakeya
