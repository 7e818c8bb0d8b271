#include "ffkakeya/vanish.hpp"

#include <algorithm>

#include "ffkakeya/error.hpp"
#include "ffkakeya/multiplicity.hpp"

namespace ffkakeya {

VanishProblem::VanishProblem(Field field, std::size_t arity, std::vector<Point> points,
                             std::uint32_t max_degree, std::uint32_t mult)
    : field_(std::move(field)),
      arity_(arity),
      points_(std::move(points)),
      max_degree_(max_degree),
      mult_(mult) {
  if (arity_ < 1) fail(ErrorCode::InvalidArgument, "arity must be >= 1");
  if (mult_ < 1) fail(ErrorCode::InvalidArgument, "multiplicity must be >= 1");
  for (const auto& a : points_) {
    if (a.size() != arity_) fail(ErrorCode::ArityMismatch, "point arity differs from problem arity");
    for (auto x : a) {
      if (!field_.contains(x)) fail(ErrorCode::MixedFields, "point coordinate not in field");
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::uint64_t VanishProblem::unknown_count() const { return binom(max_degree_ + arity_, arity_); }

std::uint64_t VanishProblem::constraint_count() const {
  return points_.size() * binom(mult_ + arity_ - 1, arity_);
}

bool VanishProblem::counting_inequality_holds() const {
  return constraint_count() < unknown_count();
}

LinearSystem build_system(const VanishProblem& problem) {
  const std::uint64_t unknowns = problem.unknown_count();
  const std::uint64_t constraints = problem.constraint_count();
  if (unknowns != 0 && constraints > kMaxSystemEntries / unknowns) {
    fail(ErrorCode::SizeGuard, "linear system has " + std::to_string(constraints) + " x " +
                                   std::to_string(unknowns) + " entries (limit 10^8)");
  }
  const Field& f = problem.field();
  const std::size_t n = problem.arity();
  auto columns = indices_up_to(n, problem.max_degree());
  std::vector<MultiIndex> betas;
  if (problem.mult() > 0) betas = indices_up_to(n, problem.mult() - 1);

  Matrix matrix(f, problem.points().size() * betas.size(), columns.size());
  std::vector<std::pair<std::size_t, MultiIndex>> labels;
  labels.reserve(matrix.rows());

  // pow[i][e] = a_i^e for the current point.
  std::vector<std::vector<Elem>> pw(n, std::vector<Elem>(problem.max_degree() + 1));
  std::size_t row = 0;
  for (std::size_t pi = 0; pi < problem.points().size(); ++pi) {
    const Point& a = problem.points()[pi];
    for (std::size_t i = 0; i < n; ++i) {
      Elem acc = f.one();
      for (auto& slot : pw[i]) {
        slot = acc;
        acc = f.mul(acc, a[i]);
      }
    }
    for (const auto& beta : betas) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const MultiIndex& alpha = columns[c];
        if (!beta.le(alpha)) continue;
        const std::uint32_t b = binom_multi_mod(alpha, beta, f.p());
        if (b == 0) continue;
        Elem v = f.from_int(b);
        for (std::size_t i = 0; i < n && !f.is_zero(v); ++i) {
          v = f.mul(v, pw[i][alpha[i] - beta[i]]);
        }
        matrix.at(row, c) = v;
      }
      labels.emplace_back(pi, beta);
      ++row;
    }
  }
  return LinearSystem{std::move(columns), std::move(labels), std::move(matrix)};
}

std::optional<SparsePoly> find_vanishing_poly(const VanishProblem& problem) {
  const LinearSystem sys = build_system(problem);
  const auto v = canonical_null_vector(sys.matrix);
  if (!v) return std::nullopt;
  SparsePoly poly(problem.field(), problem.arity());
  for (std::size_t c = 0; c < sys.columns.size(); ++c) poly.add_term(sys.columns[c], (*v)[c]);

  if (poly.is_zero() || poly.degree() > Degree(problem.max_degree())) {
    fail(ErrorCode::InvariantViolation, "nullspace vector does not give a valid polynomial");
  }
  if (!vanishes_with_mult(poly, problem.points(), problem.mult()).ok) {
    fail(ErrorCode::InvariantViolation, "nullspace polynomial fails the multiplicity re-check");
  }
  return poly;
}

bool nullspace_trivial(const VanishProblem& problem) {
  const LinearSystem sys = build_system(problem);
  return rank(sys.matrix) == sys.columns.size();
}

}  // namespace ffkakeya
