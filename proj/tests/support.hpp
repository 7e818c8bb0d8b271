#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ffkakeya/field.hpp"
#include "ffkakeya/sparse_poly.hpp"

namespace testing {

using Term = std::pair<std::vector<std::uint32_t>, std::int64_t>;

// Polynomial from (exponent, integer coefficient) pairs.
inline ffkakeya::SparsePoly poly(const ffkakeya::Field& f, std::size_t n, std::initializer_list<Term> terms) {
  ffkakeya::SparsePoly p(f, n);
  for (const auto& [e, c] : terms) p.add_term(ffkakeya::MultiIndex(e), f.from_int(c));
  return p;
}

inline ffkakeya::Point pt(const ffkakeya::Field& f, std::initializer_list<std::int64_t> xs) {
  ffkakeya::Point p;
  for (auto x : xs) p.push_back(f.from_int(x));
  return p;
}

inline ffkakeya::Elem el(std::uint32_t code) { return ffkakeya::Elem{code}; }

}  // namespace testing

#define CHECK_CODE(expr, ec)                      \
  do {                                            \
    bool thrown_ = false;                         \
    try {                                         \
      (void)(expr);                               \
    } catch (const ffkakeya::Error& e_) {         \
      thrown_ = true;                             \
      CHECK(e_.code() == ffkakeya::ErrorCode::ec); \
    }                                             \
    CHECK_MESSAGE(thrown_, #expr " did not throw"); \
  } while (0)
