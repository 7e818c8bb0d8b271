#include "ffkakeya/multi_index.hpp"

#include <sstream>

#include "ffkakeya/error.hpp"

namespace ffkakeya {

namespace {

void check_exponents(const std::vector<std::uint32_t>& exps) {
  for (auto e : exps) {
    if (e >= kMaxExponent) fail(ErrorCode::SizeGuard, "exponent exceeds 2^20");
  }
}

void check_arity(const MultiIndex& a, const MultiIndex& b) {
  if (a.arity() != b.arity()) {
    fail(ErrorCode::ArityMismatch,
         "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  }
}

void fill_total(std::size_t pos, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
                std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t v = 0; v <= remaining; ++v) {
    cur[pos] = v;
    fill_total(pos + 1, remaining - v, cur, out);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> exps) : exps_(exps) {
  check_exponents(exps_);
}

MultiIndex::MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  check_exponents(exps_);
}

std::uint64_t MultiIndex::total() const {
  std::uint64_t s = 0;
  for (auto e : exps_) s += e;
  return s;
}

bool MultiIndex::is_zero() const {
  for (auto e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

bool MultiIndex::le(const MultiIndex& other) const {
  check_arity(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  check_arity(*this, other);
  std::vector<std::uint32_t> out(exps_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.exps_[i];
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!other.le(*this)) fail(ErrorCode::InvalidArgument, "exponent subtraction underflows");
  std::vector<std::uint32_t> out(exps_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.exps_[i];
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::scaled(std::uint32_t k) const {
  std::vector<std::uint32_t> out(exps_);
  for (auto& e : out) {
    const std::uint64_t v = static_cast<std::uint64_t>(e) * k;
    if (v >= kMaxExponent) fail(ErrorCode::SizeGuard, "exponent exceeds 2^20");
    e = static_cast<std::uint32_t>(v);
  }
  return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << ",";
    os << exps_[i];
  }
  os << ")";
  return os.str();
}

std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b) {
  check_arity(a, b);
  return a <=> b;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // result * (n - i) / (i + 1) stays integral at every step.
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > UINT64_MAX) fail(ErrorCode::SizeGuard, "binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t binom_multi(const MultiIndex& a, const MultiIndex& b) {
  check_arity(a, b);
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (b[i] > a[i]) return 0;
  }
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (__builtin_mul_overflow(result, binom(a[i], b[i]), &result)) {
      fail(ErrorCode::SizeGuard, "multi-index binomial overflows 64 bits");
    }
  }
  return result;
}

std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n != 0 || k != 0) {
    const std::uint64_t ni = n % p;
    const std::uint64_t ki = k % p;
    if (ki > ni) return 0;
    // Small binomial mod p via the multiplicative formula with inverses.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1u) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t binom_multi_mod(const MultiIndex& a, const MultiIndex& b, std::uint32_t p) {
  check_arity(a, b);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (b[i] > a[i]) return 0;
  }
  for (std::size_t i = 0; i < a.arity() && result != 0; ++i) {
    result = result * binom_mod(a[i], b[i], p) % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint64_t weighted_degree(const MultiIndex& alpha, std::uint32_t ell) {
  if (ell < 2) fail(ErrorCode::BadEll, "weight ell must be >= 2, got " + std::to_string(ell));
  if (alpha.arity() < 2) fail(ErrorCode::ArityMismatch, "weighted degree needs arity >= 2");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i + 1 < alpha.arity(); ++i) s += alpha[i];
  return s + static_cast<std::uint64_t>(ell) * alpha[alpha.arity() - 1];
}

std::vector<MultiIndex> indices_of_total(std::size_t arity, std::uint32_t total) {
  std::vector<MultiIndex> out;
  if (arity == 0) {
    if (total == 0) out.emplace_back(std::vector<std::uint32_t>{});
    return out;
  }
  std::vector<std::uint32_t> cur(arity, 0);
  fill_total(0, total, cur, out);
  return out;
}

std::vector<MultiIndex> indices_up_to(std::size_t arity, std::uint32_t max_total) {
  std::vector<MultiIndex> out;
  for (std::uint32_t t = 0; t <= max_total; ++t) {
    auto level = indices_of_total(arity, t);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace ffkakeya
