#pragma once

// Randomised and exhaustive property suites over the library. Each suite
// returns a Certificate whose steps summarise the cases checked; the first
// counterexample, if any, becomes the witness.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ffkakeya/field.hpp"
#include "ffkakeya/replay.hpp"
#include "ffkakeya/rng.hpp"
#include "ffkakeya/sparse_poly.hpp"

namespace ffkakeya {

/// Random polynomial with at most `max_terms` terms of total degree <= max_deg.
/// May be zero.
SparsePoly random_poly(const Field& field, std::size_t n, std::uint32_t max_deg,
                       std::size_t max_terms, Rng& rng);

/// A random polynomial with mult >= e at `a`: a power of a random affine
/// form through a, times a random factor.
SparsePoly random_poly_vanishing_at(const Field& field, const Point& a, std::uint32_t e,
                                    std::uint32_t extra_deg, Rng& rng);

/// hasse_derivative against the expand_shift oracle over q in {2,3,5,7,9},
/// n <= 3, deg <= 6, for every beta up to deg + 1.
Certificate check_hasse_oracle(std::uint64_t trials_per_field, std::uint64_t seed, unsigned jobs = 1);

/// mult(P^(beta), a) >= mult(P, a) - |beta|; mult(P o h, lam) >= mult(P, h(lam))
/// for univariate h; (P + Q)^(beta) = P^(beta) + Q^(beta).
Certificate check_multiplicity_lemmas(std::uint64_t trials, std::uint64_t seed, unsigned jobs = 1);

/// binom(|alpha|, w) = sum_{|beta| = w} binom(alpha, beta) over the integers,
/// exhaustively.
Certificate check_vandermonde(std::size_t max_arity, std::uint32_t max_total, std::uint32_t max_w);

/// Random problems with binom(M+n-1, n)|A| < binom(D+n, n) always yield a
/// nonzero P of degree <= D that vanishes on A with multiplicity M.
Certificate check_existence(std::uint64_t trials, std::uint64_t seed, unsigned jobs = 1);

/// sum over A^n of mult(P, a) <= deg(P) |A|^(n-1) for random nonzero P over
/// q in {3,5,7}, n <= 3, plus the equality case P = x1 x2, A = F_3.
Certificate check_schwartz_zippel(std::uint64_t trials, std::uint64_t seed, unsigned jobs = 1);

/// Field axioms on all elements (small fields) or random triples.
Certificate check_field_laws(std::uint64_t seed);

/// Lex order laws and the lex-least exponent of f^k and x^beta f.
Certificate check_lex_laws(std::uint64_t trials, std::uint64_t seed);

/// Generated sets contain every surface, round-trip through JSON, and the
/// Kakeya constructions cover every direction.
Certificate check_set_laws(std::uint64_t trials, std::uint64_t seed);

/// Within each class of weighted_partition and lex_classes, |alpha| values
/// are pairwise distinct.
Certificate check_partition_laws(std::uint64_t trials, std::uint64_t seed);

struct SuiteOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Every suite above plus the replay checks at their reference parameters.
/// Writes one line per suite to `log`.
std::vector<SuiteOutcome> run_selftest(std::uint64_t seed, unsigned jobs, std::ostream& log);

}  // namespace ffkakeya
