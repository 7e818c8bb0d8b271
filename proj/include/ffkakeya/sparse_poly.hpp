#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ffkakeya/field.hpp"
#include "ffkakeya/multi_index.hpp"

namespace ffkakeya {

/// Total degree of a polynomial. The zero polynomial has degree -infinity,
/// which compares below every finite degree and has no integer value.
class Degree {
 public:
  static constexpr Degree neg_infinity() { return Degree(); }
  constexpr explicit Degree(std::int64_t value) : finite_(true), value_(value) {}

  constexpr bool is_neg_infinity() const { return !finite_; }
  std::int64_t value() const;
  std::string to_string() const;

  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const Degree&, const Degree&) = default;

 private:
  constexpr Degree() = default;
  bool finite_ = false;
  std::int64_t value_ = 0;
};

/// Multivariate polynomial over F_q stored as exponent -> nonzero coefficient.
/// Terms iterate in ascending lex order of exponents.
class SparsePoly {
 public:
  using Terms = std::map<MultiIndex, Elem>;

  SparsePoly(Field field, std::size_t arity);

  static SparsePoly constant(const Field& field, std::size_t arity, Elem c);
  /// The coordinate function x_i (0-based).
  static SparsePoly variable(const Field& field, std::size_t arity, std::size_t i);
  static SparsePoly monomial(const Field& field, const MultiIndex& exp, Elem c);

  const Field& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Degree degree() const;
  Elem coeff(const MultiIndex& exp) const;
  /// True for nonzero polynomials whose terms all have total degree d.
  bool is_homogeneous_of_degree(std::uint64_t d) const;

  /// Adds c x^exp, dropping the term if the coefficient cancels.
  void add_term(const MultiIndex& exp, Elem c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly operator-() const;
  SparsePoly scaled(Elem c) const;
  /// x^shift * f.
  SparsePoly shifted(const MultiIndex& shift) const;
  SparsePoly pow(std::uint32_t k) const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

  Elem evaluate(std::span<const Elem> point) const;

  std::string to_string() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  void check_compatible(const SparsePoly& other) const;

  Field field_;
  std::size_t arity_;
  Terms terms_;
};

/// P^(beta) via the termwise binomial formula, binomials reduced mod p.
SparsePoly hasse_derivative(const SparsePoly& poly, const MultiIndex& beta);

/// Every nonzero Hasse derivative of P, read off from a brute-force expansion
/// of P(x + y) in 2n variables. Independent of the binomial formula.
std::map<MultiIndex, SparsePoly> expand_shift(const SparsePoly& poly);

/// P(h_1, ..., h_n). The h_i share one field and one arity, which becomes the
/// arity of the result.
SparsePoly compose(const SparsePoly& poly, std::span<const SparsePoly> h);

struct LeadingTerm {
  MultiIndex exponent;
  Elem coeff;
};

/// The lex-least exponent of a nonzero polynomial with its coefficient.
LeadingTerm min_lex_exponent(const SparsePoly& poly);

}  // namespace ffkakeya
