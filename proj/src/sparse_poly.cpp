#include "ffkakeya/sparse_poly.hpp"

#include <sstream>

#include "ffkakeya/error.hpp"

namespace ffkakeya {

std::int64_t Degree::value() const {
  if (!finite_) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial is -infinity");
  return value_;
}

std::string Degree::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

SparsePoly::SparsePoly(Field field, std::size_t arity) : field_(std::move(field)), arity_(arity) {}

SparsePoly SparsePoly::constant(const Field& field, std::size_t arity, Elem c) {
  SparsePoly out(field, arity);
  out.add_term(MultiIndex(arity), c);
  return out;
}

SparsePoly SparsePoly::variable(const Field& field, std::size_t arity, std::size_t i) {
  if (i >= arity) fail(ErrorCode::ArityMismatch, "variable index out of range");
  MultiIndex e(arity);
  e[i] = 1;
  return monomial(field, e, field.one());
}

SparsePoly SparsePoly::monomial(const Field& field, const MultiIndex& exp, Elem c) {
  SparsePoly out(field, exp.arity());
  out.add_term(exp, c);
  return out;
}

Degree SparsePoly::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return Degree(static_cast<std::int64_t>(d));
}

Elem SparsePoly::coeff(const MultiIndex& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? field_.zero() : it->second;
}

bool SparsePoly::is_homogeneous_of_degree(std::uint64_t d) const {
  if (terms_.empty()) return false;
  for (const auto& [e, c] : terms_) {
    if (e.total() != d) return false;
  }
  return true;
}

void SparsePoly::add_term(const MultiIndex& exp, Elem c) {
  if (exp.arity() != arity_) {
    fail(ErrorCode::ArityMismatch, "term arity " + std::to_string(exp.arity()) +
                                       " in a polynomial of arity " + std::to_string(arity_));
  }
  if (!field_.contains(c)) fail(ErrorCode::InvalidArgument, "coefficient not in field");
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

void SparsePoly::check_compatible(const SparsePoly& other) const {
  if (!(field_ == other.field_)) {
    fail(ErrorCode::MixedFields, field_.describe() + " vs " + other.field_.describe());
  }
  if (arity_ != other.arity_) {
    fail(ErrorCode::ArityMismatch,
         "arity " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, field_.neg(c));
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(field_, arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, field_.neg(c));
  return out;
}

SparsePoly SparsePoly::scaled(Elem c) const {
  SparsePoly out(field_, arity_);
  if (field_.is_zero(c)) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, field_.mul(v, c));
  return out;
}

SparsePoly SparsePoly::shifted(const MultiIndex& shift) const {
  SparsePoly out(field_, arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_compatible(b);
  SparsePoly out(a.field_, a.arity_);
  const Field& f = a.field_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, f.mul(ca, cb));
  }
  return out;
}

SparsePoly SparsePoly::pow(std::uint32_t k) const {
  SparsePoly result = constant(field_, arity_, field_.one());
  SparsePoly base = *this;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

Elem SparsePoly::evaluate(std::span<const Elem> point) const {
  if (point.size() != arity_) {
    fail(ErrorCode::ArityMismatch, "point arity " + std::to_string(point.size()) +
                                       " vs polynomial arity " + std::to_string(arity_));
  }
  for (auto x : point) {
    if (!field_.contains(x)) fail(ErrorCode::MixedFields, "point coordinate not in field");
  }
  Elem acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < arity_ && !field_.is_zero(t); ++i) {
      if (e[i] != 0) t = field_.mul(t, field_.pow(point[i], e[i]));
    }
    acc = field_.add(acc, t);
  }
  return acc;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex exponent first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == field_.one();
    if (!unit || e.is_zero()) {
      if (field_.is_prime_field()) {
        os << field_.to_string(c);
      } else {
        os << "(" << field_.to_string(c) << ")";
      }
    }
    bool need_star = !unit || e.is_zero();
    for (std::size_t i = 0; i < e.arity(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.field_ == b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

SparsePoly hasse_derivative(const SparsePoly& poly, const MultiIndex& beta) {
  if (beta.arity() != poly.arity()) {
    fail(ErrorCode::ArityMismatch, "derivative order arity " + std::to_string(beta.arity()) +
                                       " vs polynomial arity " + std::to_string(poly.arity()));
  }
  const Field& f = poly.field();
  SparsePoly out(f, poly.arity());
  for (const auto& [alpha, c] : poly.terms()) {
    if (!beta.le(alpha)) continue;
    const std::uint32_t b = binom_multi_mod(alpha, beta, f.p());
    if (b == 0) continue;
    out.add_term(alpha - beta, f.mul(c, f.from_int(b)));
  }
  return out;
}

std::map<MultiIndex, SparsePoly> expand_shift(const SparsePoly& poly) {
  const std::size_t n = poly.arity();
  const Field& f = poly.field();
  // Variables 0..n-1 are x, n..2n-1 are y.
  std::vector<SparsePoly> sums;
  sums.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sums.push_back(SparsePoly::variable(f, 2 * n, i) + SparsePoly::variable(f, 2 * n, n + i));
  }
  SparsePoly shifted(f, 2 * n);
  for (const auto& [alpha, c] : poly.terms()) {
    SparsePoly term = SparsePoly::constant(f, 2 * n, c);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t r = 0; r < alpha[i]; ++r) term = term * sums[i];
    }
    shifted += term;
  }
  std::map<MultiIndex, SparsePoly> out;
  for (const auto& [e, c] : shifted.terms()) {
    std::vector<std::uint32_t> xe(e.exps().begin(), e.exps().begin() + n);
    std::vector<std::uint32_t> ye(e.exps().begin() + n, e.exps().end());
    auto [it, inserted] = out.try_emplace(MultiIndex(std::move(ye)), f, n);
    it->second.add_term(MultiIndex(std::move(xe)), c);
  }
  return out;
}

SparsePoly compose(const SparsePoly& poly, std::span<const SparsePoly> h) {
  if (h.size() != poly.arity()) {
    fail(ErrorCode::ArityMismatch, "substituting " + std::to_string(h.size()) +
                                       " polynomials into arity " + std::to_string(poly.arity()));
  }
  const Field& f = poly.field();
  std::size_t out_arity = 0;
  if (!h.empty()) {
    out_arity = h[0].arity();
    for (const auto& hi : h) {
      if (!(hi.field() == f)) fail(ErrorCode::MixedFields, "substitution over a different field");
      if (hi.arity() != out_arity) fail(ErrorCode::ArityMismatch, "substitutions differ in arity");
    }
  }
  // powers[i][e] = h_i^e, filled on demand.
  std::vector<std::vector<SparsePoly>> powers(h.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SparsePoly::constant(f, out_arity, f.one()));
    while (cache.size() <= e) cache.push_back(cache.back() * h[i]);
    return cache[e];
  };
  SparsePoly out(f, out_arity);
  for (const auto& [alpha, c] : poly.terms()) {
    SparsePoly term = SparsePoly::constant(f, out_arity, c);
    for (std::size_t i = 0; i < h.size() && !term.is_zero(); ++i) {
      if (alpha[i] != 0) term = term * power(i, alpha[i]);
    }
    out += term;
  }
  return out;
}

LeadingTerm min_lex_exponent(const SparsePoly& poly) {
  if (poly.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no exponents");
  const auto& [e, c] = *poly.terms().begin();
  return {e, c};
}

}  // namespace ffkakeya
