#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ffkakeya {

/// Exponents are kept below this bound so binomials and weighted degrees
/// never overflow 64-bit arithmetic.
inline constexpr std::uint32_t kMaxExponent = 1u << 20;

/// Exponent vector (a_1, ..., a_n). The defaulted three-way comparison is the
/// lexicographic order; comparing indices of different arity through
/// lex_compare raises ArityMismatch.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t arity) : exps_(arity, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> exps);
  explicit MultiIndex(std::vector<std::uint32_t> exps);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exps() const { return exps_; }

  /// |a| = a_1 + ... + a_n.
  std::uint64_t total() const;
  bool is_zero() const;

  /// Componentwise a_i <= b_i.
  bool le(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Requires other.le(*this).
  MultiIndex operator-(const MultiIndex& other) const;
  MultiIndex scaled(std::uint32_t k) const;

  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b);

/// Integer binomial, zero when k > n. Raises SizeGuard on 64-bit overflow.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

/// Product of componentwise binomials over the integers; zero as soon as some
/// b_i > a_i. Raises SizeGuard on overflow.
std::uint64_t binom_multi(const MultiIndex& a, const MultiIndex& b);

/// binom(n, k) mod p by Lucas' theorem; exact for any n.
std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// binom_multi(a, b) reduced mod p, without forming the integer product.
std::uint32_t binom_multi_mod(const MultiIndex& a, const MultiIndex& b, std::uint32_t p);

/// a_1 + ... + a_{n-1} + ell * a_n. Raises BadEll for ell < 2.
std::uint64_t weighted_degree(const MultiIndex& alpha, std::uint32_t ell);

/// All indices of the given arity with |a| == total, in ascending lex order.
std::vector<MultiIndex> indices_of_total(std::size_t arity, std::uint32_t total);

/// All indices with |a| <= max_total, ordered by total degree and then lex.
/// This is the column order of the vanishing-polynomial linear systems.
std::vector<MultiIndex> indices_up_to(std::size_t arity, std::uint32_t max_total);

}  // namespace ffkakeya
