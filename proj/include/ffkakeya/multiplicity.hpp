#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffkakeya/field.hpp"
#include "ffkakeya/multi_index.hpp"
#include "ffkakeya/sparse_poly.hpp"

namespace ffkakeya {

/// mult(P, a). `mult` is empty for the zero polynomial (infinite
/// multiplicity); otherwise `witness` is the lex-least beta with
/// |beta| == mult and P^(beta)(a) != 0.
struct MultReport {
  Point point;
  std::optional<std::uint64_t> mult;
  std::optional<MultiIndex> witness;

  bool infinite() const { return !mult.has_value(); }
  /// mult >= m, treating infinity as larger than everything.
  bool at_least(std::uint64_t m) const { return !mult || *mult >= m; }
};

/// P^(beta)(a) = sum_alpha c_alpha binom(alpha, beta) a^(alpha - beta).
Elem hasse_value_at(const SparsePoly& poly, const MultiIndex& beta, std::span<const Elem> point);

/// Exact multiplicity, searching beta by increasing |beta| and lex within a
/// level. A nonzero P always has a nonvanishing derivative of order at most
/// deg(P), so the search stops there.
MultReport mult_at(const SparsePoly& poly, std::span<const Elem> point);

struct VanishResult {
  bool ok = true;
  std::optional<Point> point;
  std::optional<MultiIndex> beta;
};

/// True iff mult(P, a) >= m for every a in the set; otherwise the first
/// offending point and the beta of order < m witnessing it.
VanishResult vanishes_with_mult(const SparsePoly& poly, std::span<const Point> points,
                                std::uint64_t m);

struct SchwartzZippelAudit {
  std::uint64_t total_mult = 0;
  std::uint64_t bound = 0;
  bool ok = true;
};

inline constexpr std::uint64_t kMaxAuditPoints = 10'000'000;

/// Sum of mult(P, a) over a in A^n against deg(P) |A|^(n-1). `subset` lists
/// distinct elements of P's field. Work is split over `jobs` threads.
SchwartzZippelAudit schwartz_zippel_audit(const SparsePoly& poly, std::span<const Elem> subset,
                                          unsigned jobs = 1);

/// Consistency check for the corollary: a polynomial vanishing on all of
/// F_q^n with multiplicity m and deg < m q must be zero. Returns false only
/// if P is a nonzero polynomial meeting both hypotheses.
bool corollary_zero_check(const SparsePoly& poly, std::uint64_t m);

/// Enumerates F_q^n in lex order of coordinates.
std::vector<Point> all_points(const Field& field, std::size_t n);

}  // namespace ffkakeya
