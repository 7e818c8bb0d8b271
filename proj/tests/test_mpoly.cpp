#include <doctest.h>

#include "ffkakeya/error.hpp"
#include "ffkakeya/multi_index.hpp"
#include "ffkakeya/rng.hpp"
#include "ffkakeya/sparse_poly.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ffkakeya;
using testing::poly;

TEST_CASE("lex_compare") {
  CHECK(lex_compare(MultiIndex{1, 5}, MultiIndex{2, 0}) == std::strong_ordering::less);
  CHECK(lex_compare(MultiIndex{2, 0, 7}, MultiIndex{2, 0, 7}) == std::strong_ordering::equal);
  CHECK(lex_compare(MultiIndex{0, 3}, MultiIndex{0, 2}) == std::strong_ordering::greater);
  CHECK_CODE(lex_compare(MultiIndex{1}, MultiIndex{1, 0}), ArityMismatch);
}

TEST_CASE("min_lex_exponent") {
  const Field f3 = Field::make(3);
  const auto lt = min_lex_exponent(poly(f3, 2, {{{2, 0}, 1}, {{1, 1}, 1}}));
  CHECK(lt.exponent == MultiIndex{1, 1});
  CHECK(lt.coeff == f3.one());
  const auto single = min_lex_exponent(poly(f3, 1, {{{2}, 2}}));
  CHECK(single.exponent == MultiIndex{2});
  CHECK(single.coeff == f3.from_int(2));
  CHECK_CODE(min_lex_exponent(SparsePoly(f3, 2)), ZeroPolynomial);
}

TEST_CASE("binom_multi") {
  CHECK(binom_multi(MultiIndex{2, 1}, MultiIndex{1, 0}) == 2);
  CHECK(binom_multi(MultiIndex{1, 1}, MultiIndex{2, 0}) == 0);
  CHECK_CODE(binom_multi(MultiIndex{1}, MultiIndex{1, 0}), ArityMismatch);
  CHECK_CODE(binom(200, 100), SizeGuard);
}

TEST_CASE("binomials agree with Pascal's triangle") {
  for (std::uint64_t n = 0; n <= 60; ++n)
    for (std::uint64_t k = 0; k <= n + 1; ++k) {
      CHECK(binom(n, k) == oracle::binom(n, k));
      for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(binom_mod(n, k, p) == oracle::binom(n, k) % p);
    }
}

TEST_CASE("weighted_degree") {
  CHECK(weighted_degree(MultiIndex{1, 0, 2}, 2) == 5);
  CHECK(weighted_degree(MultiIndex{0, 0, 0}, 7) == 0);
  CHECK(weighted_degree(MultiIndex{3, 1}, 3) == 6);
  CHECK_CODE(weighted_degree(MultiIndex{1, 1}, 1), BadEll);
}

TEST_CASE("index enumeration") {
  const auto lvl = indices_of_total(2, 2);
  CHECK(lvl == std::vector<MultiIndex>{{0, 2}, {1, 1}, {2, 0}});
  const auto up = indices_up_to(2, 1);
  CHECK(up == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(indices_up_to(3, 4).size() == oracle::binom(7, 3));
}

TEST_CASE("degree sentinel") {
  const Field f = Field::make(5);
  CHECK(SparsePoly(f, 2).degree().is_neg_infinity());
  CHECK(SparsePoly(f, 2).degree() < Degree(0));
  CHECK_CODE(SparsePoly(f, 2).degree().value(), ZeroPolynomial);
  CHECK(poly(f, 2, {{{2, 1}, 1}, {{0, 1}, 3}}).degree() == Degree(3));
}

TEST_CASE("hasse_derivative examples") {
  const Field f3 = Field::make(3);
  const auto x3 = poly(f3, 1, {{{3}, 1}});
  CHECK(hasse_derivative(x3, MultiIndex{2}).is_zero());
  CHECK(hasse_derivative(x3, MultiIndex{3}) == poly(f3, 1, {{{0}, 1}}));
  const Field f5 = Field::make(5);
  CHECK(hasse_derivative(poly(f5, 2, {{{2, 1}, 1}}), MultiIndex{1, 0}) == poly(f5, 2, {{{1, 1}, 2}}));
  CHECK_CODE(hasse_derivative(x3, MultiIndex{1, 0}), ArityMismatch);
}

TEST_CASE("expand_shift examples") {
  const Field f5 = Field::make(5);
  const auto x = poly(f5, 1, {{{1}, 1}});
  const auto m = expand_shift(x);
  REQUIRE(m.size() == 2);
  CHECK(m.at(MultiIndex{0}) == x);
  CHECK(m.at(MultiIndex{1}) == poly(f5, 1, {{{0}, 1}}));

  const Field f2 = Field::make(2);
  const auto sq = expand_shift(poly(f2, 1, {{{2}, 1}}));
  CHECK(sq.size() == 2);
  CHECK(sq.count(MultiIndex{1}) == 0);
  CHECK(sq.at(MultiIndex{2}) == poly(f2, 1, {{{0}, 1}}));
}

TEST_CASE("compose examples") {
  const Field f5 = Field::make(5);
  const auto t = poly(f5, 1, {{{1}, 1}});
  const auto t2 = poly(f5, 1, {{{2}, 1}});
  const auto parabola = poly(f5, 2, {{{0, 1}, 1}, {{2, 0}, -1}});
  CHECK(compose(parabola, std::vector{t, t2}).is_zero());
  CHECK(compose(poly(f5, 2, {{{1, 1}, 1}}), std::vector{t, t}) == t2);

  const Field f3 = Field::make(3);
  const auto sum = poly(f3, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
  const auto h1 = poly(f3, 1, {{{1}, 2}});
  const auto h2 = poly(f3, 1, {{{1}, 1}, {{0}, 1}});
  CHECK(compose(sum, std::vector{h1, h2}) == poly(f3, 1, {{{0}, 1}}));
  CHECK_CODE(compose(sum, std::vector{h1}), ArityMismatch);
}

TEST_CASE("polynomial ring laws on random inputs") {
  for (std::uint32_t q : {2u, 3u, 4u, 7u}) {
    const Field f = Field::of_order(q);
    Rng rng(q);
    for (int trial = 0; trial < 40; ++trial) {
      auto rp = [&] {
        SparsePoly p(f, 2);
        for (int i = 0; i < 4; ++i)
          p.add_term(MultiIndex{static_cast<std::uint32_t>(rng.below(4)), static_cast<std::uint32_t>(rng.below(4))},
                     Elem{static_cast<std::uint32_t>(rng.below(q))});
        return p;
      };
      const auto a = rp(), b = rp(), c = rp();
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      const Point x{Elem{static_cast<std::uint32_t>(rng.below(q))}, Elem{static_cast<std::uint32_t>(rng.below(q))}};
      CHECK((a * b).evaluate(x) == f.mul(a.evaluate(x), b.evaluate(x)));
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree().value() == a.degree().value() + b.degree().value());
    }
  }
}

TEST_CASE("min_lex_exponent of products adds") {
  const Field f = Field::make(7);
  const auto p = poly(f, 2, {{{2, 0}, 1}, {{1, 3}, 2}});
  const auto r = poly(f, 2, {{{0, 2}, 3}, {{1, 0}, 1}});
  CHECK(min_lex_exponent(p * r).exponent == min_lex_exponent(p).exponent + min_lex_exponent(r).exponent);
  CHECK(min_lex_exponent(p.pow(3)).exponent == MultiIndex{3, 9});
}
