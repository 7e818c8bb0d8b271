#pragma once

// Replays of the polynomial-method argument on concrete instances. Each check
// produces a Certificate; statements that quantify over all polynomials are
// exercised through their contrapositive on seeded random instances.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffkakeya/brkset.hpp"
#include "ffkakeya/field.hpp"
#include "ffkakeya/json_io.hpp"
#include "ffkakeya/multi_index.hpp"
#include "ffkakeya/rng.hpp"
#include "ffkakeya/sparse_poly.hpp"

namespace ffkakeya {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct Certificate {
  std::string check;
  std::uint64_t seed = 0;
  Json inputs = Json::object();
  std::vector<Json> steps;
  bool pass = true;
  std::optional<Json> witness;

  /// {"check", "seed", "inputs", "steps", "verdict", "witness"?} in that order.
  Json to_json() const;
  std::string dump() const;
};

// ---------------------------------------------------------------------------
// Key lemma

/// Exponents with pairwise distinct |alpha| < k(q-1), coefficients c_alpha
/// and a nonzero scalar b.
class KeyLemmaInstance {
 public:
  KeyLemmaInstance(Field field, std::size_t n, std::uint64_t k, std::vector<MultiIndex> indices,
                   std::vector<Elem> coeffs, Elem b);

  const Field& field() const { return field_; }
  std::size_t arity() const { return n_; }
  std::uint64_t k() const { return k_; }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  Elem b() const { return b_; }
  bool all_zero() const;

  Json to_json() const;

 private:
  Field field_;
  std::size_t n_;
  std::uint64_t k_;
  std::vector<MultiIndex> indices_;
  std::vector<Elem> coeffs_;
  Elem b_;
};

/// f_beta(rho) = sum_alpha b^(alpha_n - beta_n) c_alpha binom(alpha, beta) rho^(|alpha| - |beta|)
/// for every |beta| < k and nonzero rho. Terms with binom(alpha, beta) = 0
/// are skipped, so negative exponents never arise.
std::map<std::pair<MultiIndex, Elem>, Elem> key_lemma_table(const KeyLemmaInstance& inst);

Certificate check_key_lemma(std::uint64_t trials, const Field& field, std::size_t n,
                            std::uint64_t k, std::uint64_t seed, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Derivatives vanish along a surface

struct Curve {
  Point a;
  Elem rho;
  SparsePoly g;  // n-1 variables, degree ell
};

struct DerivParams {
  std::uint64_t k = 0;
  std::uint64_t D = 0;
  std::uint64_t M = 0;
};

/// Points a + rho (lam, g(lam)), lam in F_q^(n-1).
std::vector<Point> curve_points(const Curve& curve);

/// Substitution x = a + rho (s, g(s)) as n polynomials in n-1 variables.
std::vector<SparsePoly> curve_map(const Curve& curve);

/// Verifies that P^(beta)(a + rho (s, g(s))) is the zero polynomial for all
/// |beta| < k. Raises PreconditionFailed naming the failed hypothesis when P
/// is zero, deg(P) > D, ell is out of range, the degree/multiplicity
/// inequality fails for some w < k, or P does not vanish on the surface with
/// multiplicity M.
Certificate check_derivs_zero(const SparsePoly& poly, const Curve& curve,
                              const DerivParams& params);

// ---------------------------------------------------------------------------
// Weighted-homogeneous polynomials along (s, f(s))

/// First (beta, rho), beta by degree then lex and rho in element order, with
/// Q^(beta)(rho (s, f(s))) nonzero and |beta| < k.
std::optional<std::pair<MultiIndex, Elem>> proposition_witness(const SparsePoly& q_poly,
                                                               const SparsePoly& f,
                                                               std::uint64_t k);

/// A random nonzero Q whose exponents all have weighted degree m for one m,
/// with deg(Q) < k(q-1).
SparsePoly random_weighted_homogeneous(const Field& field, std::size_t n, std::uint32_t ell,
                                       std::uint64_t k, Rng& rng);

Certificate check_proposition(std::uint64_t trials, const Field& field, std::size_t n,
                              std::uint32_t ell, std::uint64_t k, const SparsePoly& f,
                              std::uint64_t seed, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Degree-2 planar case and the general reduction

/// Builds S from the instance (default: a(rho) = 0, g = s^2, no lower part)
/// and checks the counting inequality binom(M+1, 2)|S| >= binom(D+2, 2) and
/// that no nonzero P of degree <= D vanishes on S with multiplicity M, for
/// D = k(q-1) - 1 and M = 3k - 4k/q.
Certificate check_warmup(std::uint32_t q, std::uint64_t k,
                         const std::optional<BrkInstance>& instance = std::nullopt);

/// General form for any instance: binom(M+n-1, n)|S| >= binom(D+n, n) and a
/// trivial nullspace for the proof parameters of k.
Certificate check_theorem_instance(const BrkInstance& inst, std::uint64_t k);

// ---------------------------------------------------------------------------
// Exponent bookkeeping

/// Groups exponents by a_1 + ... + a_{n-1} + ell a_n.
std::map<std::uint64_t, std::vector<MultiIndex>> weighted_partition(std::span<const MultiIndex> indices,
                                                                    std::uint32_t ell);

/// Groups exponents by alpha' + alpha_n e, where alpha' drops the last
/// coordinate and e (arity n-1) is the lex-least exponent of f.
std::map<MultiIndex, std::vector<MultiIndex>> lex_classes(std::span<const MultiIndex> indices,
                                                          const MultiIndex& e);

/// True iff the |alpha| in the group are pairwise distinct.
bool distinct_totals(std::span<const MultiIndex> group);

}  // namespace ffkakeya
