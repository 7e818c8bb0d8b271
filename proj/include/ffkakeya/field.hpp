#pragma once

// Finite fields F_q, q = p^m, in the power basis of F_p[t]/(modulus).
//
// Elements are stored as a compact code: the rank of the coefficient vector
// (c_0, c_1, ..., c_{m-1}) in lexicographic order, where c_0 is the constant
// coefficient. Code 0 is the zero element and comparing codes compares the
// coefficient vectors lexicographically, so every enumeration or sort of
// elements in the library follows one canonical order. For prime fields the
// code is the residue itself.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffkakeya {

/// A field element relative to some Field. Carries no reference to its field;
/// hot loops (polynomials, matrices) store these and do arithmetic through
/// the owning Field.
struct Elem {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

using Point = std::vector<Elem>;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {
struct FieldData;
}

class Field {
 public:
  /// Builds F_{p^m}. For m > 1 without a modulus, the first monic irreducible
  /// of degree m is taken, scanning the non-leading coefficients
  /// (c_0, ..., c_{m-1}) as the base-p number c_0 + c_1 p + ... (smallest
  /// first). Modulus coefficients are listed constant term first.
  static Field make(std::uint32_t p, std::uint32_t m = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// F_q with the default modulus; q must be a prime power.
  static Field of_order(std::uint32_t q);

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;
  /// Empty for prime fields, otherwise m+1 coefficients ending in 1.
  const std::vector<std::uint32_t>& modulus() const;
  bool is_prime_field() const { return m() == 1; }

  Elem zero() const { return Elem{0}; }
  Elem one() const;
  bool is_zero(Elem a) const { return a.code == 0; }
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t v) const;
  Elem from_repr(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> repr(Elem a) const;
  bool contains(Elem a) const { return a.code < q(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// All q elements, zero first, in code order.
  std::vector<Elem> elements() const;
  std::vector<Elem> nonzero_elements() const;

  std::string to_string(Elem a) const;
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

bool is_prime(std::uint64_t n);

/// True iff the monic polynomial (constant term first) has no factor of
/// degree 1..deg/2 over F_p.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// Value type pairing an element with its field. All binary operations check
/// that both operands live in the same field.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_.code == 0; }
  std::vector<std::uint32_t> repr() const { return field_.repr(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  Elem value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

std::vector<FieldElement> all_elements(const Field& field);

}  // namespace ffkakeya
