#include "ffkakeya/field.hpp"

#include <algorithm>
#include <sstream>

#include "ffkakeya/error.hpp"

namespace ffkakeya {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  // weight[i] = p^(m-1-i): the place value of coefficient c_i inside a code.
  std::vector<std::uint32_t> weight;
  std::uint32_t one_code = 1;
  // Full operation tables, only for small extension fields.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint32_t> inv_table;
  std::vector<std::uint32_t> neg_table;

  void decode(std::uint32_t code, std::uint32_t* digits) const {
    for (std::uint32_t i = 0; i < m; ++i) {
      digits[i] = (code / weight[i]) % p;
    }
  }

  std::uint32_t encode(const std::uint32_t* digits) const {
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < m; ++i) code += digits[i] * weight[i];
    return code;
  }

  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) {
      std::uint32_t s = a + b;
      return s >= p ? s - p : s;
    }
    std::uint32_t da[32], db[32];
    decode(a, da);
    decode(b, db);
    for (std::uint32_t i = 0; i < m; ++i) {
      da[i] += db[i];
      if (da[i] >= p) da[i] -= p;
    }
    return encode(da);
  }

  std::uint32_t neg_raw(std::uint32_t a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    std::uint32_t da[32];
    decode(a, da);
    for (std::uint32_t i = 0; i < m; ++i) da[i] = da[i] == 0 ? 0 : p - da[i];
    return encode(da);
  }

  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) {
      return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t da[32], db[32];
    decode(a, da);
    decode(b, db);
    std::uint64_t prod[64] = {};
    for (std::uint32_t i = 0; i < m; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j) {
        prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p;
      }
    }
    // Reduce by the monic modulus from the top down.
    for (std::uint32_t d = 2 * m - 2; d >= m; --d) {
      const std::uint64_t c = prod[d];
      if (c != 0) {
        prod[d] = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
          const std::uint64_t sub = c * modulus[i] % p;
          prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
        }
      }
    }
    std::uint32_t out[32];
    for (std::uint32_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(out);
  }

  std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = one_code;
    std::uint32_t base = a;
    while (e != 0) {
      if (e & 1u) result = mul_raw(result, base);
      base = mul_raw(base, base);
      e >>= 1;
    }
    return result;
  }
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo a monic divisor.
Poly poly_rem_monic(Poly a, const Poly& divisor, std::uint32_t p) {
  const std::size_t dd = divisor.size() - 1;
  trim(a);
  while (a.size() > dd) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      const std::uint64_t sub = c * divisor[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  if (monic.size() < 2) return false;
  const std::size_t deg = monic.size() - 1;
  if (deg == 1) return true;
  const Poly f(monic.begin(), monic.end());
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic divisor candidate of degree d: coefficients c_0..c_{d-1}
    // run over all of F_p^d.
    Poly cand(d + 1, 0);
    cand[d] = 1;
    while (true) {
      if (poly_rem_monic(f, cand, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++cand[i] == p) cand[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t m,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (m < 1) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      fail(ErrorCode::FieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
  }

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->q = static_cast<std::uint32_t>(q);
  d->weight.resize(m);
  {
    std::uint32_t w = 1;
    for (std::uint32_t i = m; i-- > 0;) {
      d->weight[i] = w;
      w *= p;
    }
  }
  d->one_code = d->weight[0];

  if (m > 1) {
    if (modulus) {
      const auto& mod = *modulus;
      if (mod.size() != m + 1 || mod.back() != 1) {
        fail(ErrorCode::InvalidModulus, "modulus must be monic of degree " + std::to_string(m));
      }
      for (auto c : mod) {
        if (c >= p) fail(ErrorCode::InvalidModulus, "modulus coefficient out of range");
      }
      if (!is_irreducible(mod, p)) {
        fail(ErrorCode::ReducibleModulus, "modulus factors over F_" + std::to_string(p));
      }
      d->modulus = mod;
    } else {
      Poly cand(m + 1, 0);
      cand[m] = 1;
      while (!is_irreducible(cand, p)) {
        std::uint32_t i = 0;
        while (i < m && ++cand[i] == p) cand[i++] = 0;
      }
      d->modulus = cand;
    }
  } else if (modulus && !modulus->empty()) {
    const auto& mod = *modulus;
    if (mod.size() != 2 || mod[1] != 1 || mod[0] >= p) {
      fail(ErrorCode::InvalidModulus, "prime field modulus must be absent or monic linear");
    }
  }

  if (m > 1 && q <= 256) {
    d->add_table.resize(q * q);
    d->mul_table.resize(q * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        d->add_table[a * q + b] = static_cast<std::uint16_t>(d->add_raw(a, b));
        d->mul_table[a * q + b] = static_cast<std::uint16_t>(d->mul_raw(a, b));
      }
    }
  }
  d->inv_table.assign(q, 0);
  d->neg_table.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    d->neg_table[a] = d->neg_raw(a);
    if (a == 0) continue;
    d->inv_table[a] = m == 1 ? inv_mod_prime(a, p) : d->pow_raw(a, q - 2);
  }
  return Field(std::move(d));
}

Field Field::of_order(std::uint32_t q) {
  if (q < 2) fail(ErrorCode::NonPrime, "field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) fail(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  return make(p, m);
}

std::uint32_t Field::p() const { return d_->p; }
std::uint32_t Field::m() const { return d_->m; }
std::uint32_t Field::q() const { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }
Elem Field::one() const { return Elem{d_->one_code}; }

Elem Field::from_int(std::int64_t v) const {
  const std::int64_t p = d_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Elem{static_cast<std::uint32_t>(r) * d_->one_code};
}

Elem Field::from_repr(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != d_->m) {
    fail(ErrorCode::InvalidArgument, "element needs " + std::to_string(d_->m) + " coefficients");
  }
  for (auto c : coeffs) {
    if (c >= d_->p) fail(ErrorCode::InvalidArgument, "coefficient out of range [0, p)");
  }
  return Elem{d_->encode(coeffs.data())};
}

std::vector<std::uint32_t> Field::repr(Elem a) const {
  std::vector<std::uint32_t> out(d_->m);
  d_->decode(a.code, out.data());
  return out;
}

Elem Field::add(Elem a, Elem b) const {
  if (!d_->add_table.empty()) return Elem{d_->add_table[a.code * d_->q + b.code]};
  return Elem{d_->add_raw(a.code, b.code)};
}

Elem Field::neg(Elem a) const { return Elem{d_->neg_table[a.code]}; }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (!d_->mul_table.empty()) return Elem{d_->mul_table[a.code * d_->q + b.code]};
  return Elem{d_->mul_raw(a.code, b.code)};
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) fail(ErrorCode::DivisionByZero, "zero has no inverse");
  return Elem{d_->inv_table[a.code]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(d_->q);
  for (std::uint32_t i = 0; i < d_->q; ++i) out[i] = Elem{i};
  return out;
}

std::vector<Elem> Field::nonzero_elements() const {
  std::vector<Elem> out;
  out.reserve(d_->q - 1);
  for (std::uint32_t i = 1; i < d_->q; ++i) out.push_back(Elem{i});
  return out;
}

std::string Field::to_string(Elem a) const {
  if (d_->m == 1) return std::to_string(a.code);
  const auto r = repr(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = r.size(); i-- > 0;) {
    if (r[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || r[i] != 1) os << r[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << d_->q;
  if (d_->m > 1) {
    os << " = F_" << d_->p << "[t]/(";
    bool first = true;
    for (std::size_t i = d_->modulus.size(); i-- > 0;) {
      const auto c = d_->modulus[i];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->m == b.d_->m && a.d_->modulus == b.d_->modulus;
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) fail(ErrorCode::InvalidArgument, "element code out of range");
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorCode::MixedFields, a.field().describe() + " vs " + b.field().describe());
  }
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.div(a.value_, b.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  fail(ErrorCode::InvalidArgument, "unknown arithmetic op");
}

std::vector<FieldElement> all_elements(const Field& field) {
  std::vector<FieldElement> out;
  out.reserve(field.q());
  for (auto e : field.elements()) out.emplace_back(field, e);
  return out;
}

}  // namespace ffkakeya
