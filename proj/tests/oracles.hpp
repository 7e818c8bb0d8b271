#pragma once

// Reference implementations used only by the tests. They avoid the library's
// tables, Lucas reduction and binomial formula so that agreement means
// something.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "ffkakeya/field.hpp"
#include "ffkakeya/sparse_poly.hpp"

namespace oracle {

using ffkakeya::Elem;
using ffkakeya::Field;
using ffkakeya::MultiIndex;
using ffkakeya::Point;
using ffkakeya::SparsePoly;

// Coefficient vectors (constant term first) multiplied as polynomials and
// reduced mod the monic modulus by long division.
inline std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b,
                                              const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t m = modulus.size() - 1;
  std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > m;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) {
      prod[d - m + i] = (prod[d - m + i] + (p - c) * modulus[i]) % p;
    }
  }
  std::vector<std::uint32_t> out(m, 0);
  for (std::size_t i = 0; i < m && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

// Pascal's triangle over the integers.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

inline std::uint64_t binom_multi(const MultiIndex& a, const MultiIndex& b) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < a.arity(); ++i) r *= binom(a[i], b[i]);
  return r;
}

// Dense-ish polynomial as exponent vector -> coefficient, multiplied termwise.
using Terms = std::map<std::vector<std::uint32_t>, Elem>;

inline Terms mul(const Field& f, const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<std::uint32_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Elem& slot = out[e];
      slot = f.add(slot, f.mul(ca, cb));
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.code == 0; });
  return out;
}

// P(a + y) expanded in y by repeated multiplication of (a_i + y_i).
inline Terms shift_at(const SparsePoly& p, const Point& a) {
  const Field& f = p.field();
  const std::size_t n = p.arity();
  Terms total;
  for (const auto& [alpha, c] : p.terms()) {
    Terms term{{std::vector<std::uint32_t>(n, 0), c}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> unit(n, 0);
      unit[i] = 1;
      Terms lin;
      if (a[i].code != 0) lin[std::vector<std::uint32_t>(n, 0)] = a[i];
      lin[unit] = f.one();
      for (std::uint32_t r = 0; r < alpha[i]; ++r) term = mul(f, term, lin);
    }
    for (const auto& [e, v] : term) {
      Elem& slot = total[e];
      slot = f.add(slot, v);
    }
  }
  std::erase_if(total, [](const auto& kv) { return kv.second.code == 0; });
  return total;
}

// Smallest |gamma| with a nonzero coefficient of y^gamma in P(a + y);
// nothing for the zero polynomial.
inline std::optional<std::uint64_t> mult(const SparsePoly& p, const Point& a) {
  const Terms t = shift_at(p, a);
  if (t.empty()) return std::nullopt;
  std::uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : t) best = std::min<std::uint64_t>(best, std::accumulate(e.begin(), e.end(), 0ull));
  return best;
}

// Rank by plain elimination on a copy; rows are vectors of codes.
inline std::size_t rank(const Field& f, std::vector<std::vector<Elem>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].code == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Elem inv = f.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].code == 0) continue;
      const Elem factor = f.mul(rows[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

// Minimum BRK-type set size over F_3^2 with g = s^2, by enumerating every
// translation a(rho) in F_3^2 and every lower part c1 s + c0 for each rho.
inline std::size_t brute_min_q3() {
  constexpr int q = 3;
  std::vector<std::vector<std::uint16_t>> surfaces(q);  // rho -> 81 bitmasks
  for (int rho = 0; rho < q; ++rho) {
    for (int a1 = 0; a1 < q; ++a1)
      for (int a2 = 0; a2 < q; ++a2)
        for (int c1 = 0; c1 < q; ++c1)
          for (int c0 = 0; c0 < q; ++c0) {
            std::uint16_t mask = 0;
            for (int lam = 0; lam < q; ++lam) {
              const int x = (a1 + rho * lam) % q;
              const int y = (a2 + rho * (lam * lam + c1 * lam + c0)) % q;
              mask |= static_cast<std::uint16_t>(1u << (x * q + y));
            }
            surfaces[rho].push_back(mask);
          }
  }
  std::size_t best = 99;
  for (auto m0 : surfaces[0])
    for (auto m1 : surfaces[1])
      for (auto m2 : surfaces[2]) {
        best = std::min<std::size_t>(best, std::bitset<16>(m0 | m1 | m2).count());
      }
  return best;
}

}  // namespace oracle
