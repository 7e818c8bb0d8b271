#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffkakeya/field.hpp"
#include "ffkakeya/sparse_poly.hpp"

namespace ffkakeya {

/// A finite subset of F_q^n, kept sorted (lex on coordinates) and duplicate
/// free.
class PointSet {
 public:
  PointSet(Field field, std::size_t n, std::vector<Point> points = {});

  const Field& field() const { return field_; }
  std::size_t dimension() const { return n_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const Point& p) const;

  friend bool operator==(const PointSet&, const PointSet&);

 private:
  Field field_;
  std::size_t n_;
  std::vector<Point> points_;
};

/// Translation and lower-order part chosen for one dilation factor rho.
struct RhoChoice {
  Point a;
  SparsePoly lower;  // n-1 variables, degree < ell
};

/// S must contain {a(rho) + rho (lam, g(lam) + lower_rho(lam)) : lam in F_q^(n-1)}
/// for every rho in F_q. `per_rho[i]` belongs to the field element with
/// code i, so the vector has exactly q entries.
class BrkInstance {
 public:
  BrkInstance(Field field, std::size_t n, std::uint32_t ell, SparsePoly g,
              std::vector<RhoChoice> per_rho);

  /// Every a(rho) = 0 and every lower part zero.
  static BrkInstance uniform(const Field& field, std::size_t n, std::uint32_t ell,
                             const SparsePoly& g);

  const Field& field() const { return field_; }
  std::size_t dimension() const { return n_; }
  std::uint32_t ell() const { return ell_; }
  const SparsePoly& g() const { return g_; }
  const std::vector<RhoChoice>& per_rho() const { return per_rho_; }
  const RhoChoice& choice(Elem rho) const { return per_rho_.at(rho.code); }
  /// g + lower_rho.
  SparsePoly g_rho(Elem rho) const;

 private:
  Field field_;
  std::size_t n_;
  std::uint32_t ell_;
  SparsePoly g_;
  std::vector<RhoChoice> per_rho_;
};

/// Points a + rho (lam, g_rho(lam)) for one rho, lam in lex order.
std::vector<Point> surface_points(const BrkInstance& inst, Elem rho);

PointSet generate_set(const BrkInstance& inst);

struct BrkVerification {
  bool ok = true;
  std::optional<Elem> rho;
  std::optional<Point> missing;
};

BrkVerification verify_brk(const PointSet& set, const BrkInstance& inst);

/// (q-1)^n / (ell + 1 - 2 ell / q)^n = ((q-1) q)^n / ((ell+1) q - 2 ell)^n as
/// a reduced fraction.
struct TheoremBound {
  unsigned __int128 num = 0;
  unsigned __int128 den = 1;
  std::uint64_t ceiling = 0;

  std::string fraction() const;
  double approx() const;
};

TheoremBound theorem_bound(std::uint32_t q, std::uint32_t n, std::uint32_t ell);

struct ProofParams {
  std::uint64_t k = 0;
  std::uint64_t D = 0;
  std::uint64_t M = 0;
};

/// D = k(q-1) - 1 and M = (ell+1) k - 2 ell k / q, for k a positive multiple of q.
ProofParams proof_params(std::uint32_t q, std::uint32_t ell, std::uint64_t k);

/// The first w in [0, k) with ell (D - w) >= (M - w) q, if any.
std::optional<std::uint64_t> first_inequality_failure(std::uint32_t q, std::uint32_t ell,
                                                      std::uint64_t D, std::uint64_t M,
                                                      std::uint64_t k);

enum class SearchMode { Exhaustive, Greedy };

struct SearchOptions {
  SearchMode mode = SearchMode::Greedy;
  std::uint64_t seed = 0;
  unsigned restarts = 8;
  unsigned jobs = 1;
};

inline constexpr std::uint64_t kMaxExhaustiveConfigurations = 100'000'000;

struct SearchResult {
  std::uint64_t min_size = 0;
  BrkInstance witness;
  bool exact = false;                 // exhaustive: min_size is the true minimum
  std::uint64_t configurations = 0;  // size of the configuration space searched
  TheoremBound bound;
};

/// Minimises |generate_set| over a(rho) and the lower-order parts with g
/// fixed. Exhaustive mode enumerates every configuration (n == 2 only, at
/// most 10^8 of them); greedy mode gives an upper bound.
SearchResult min_brk_search(const Field& field, std::size_t n, std::uint32_t ell,
                            const SparsePoly& g, const SearchOptions& options);

/// A Kakeya set in F_q^n. The trivial one is all of F_q^n; the other is the
/// union over b in F_q^(n-1) of the lines {(t b + b*b, t)} (b*b taken
/// coordinatewise), plus a lower-dimensional copy of itself in the hyperplane
/// x_n = 0 for the remaining directions. Always post-verified.
PointSet kakeya_set(const Field& field, std::size_t n, bool besicovitch);

struct KakeyaVerification {
  bool ok = true;
  std::optional<Point> direction;  // a direction with no full line
};

KakeyaVerification verify_kakeya(const PointSet& set);

std::string to_decimal(unsigned __int128 v);

}  // namespace ffkakeya
