#include <doctest.h>

#include "ffkakeya/error.hpp"
#include "ffkakeya/multiplicity.hpp"
#include "ffkakeya/properties.hpp"
#include "ffkakeya/rng.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ffkakeya;
using testing::poly;
using testing::pt;

TEST_CASE("mult_at examples") {
  const Field f = Field::make(5);
  const auto origin = pt(f, {0, 0});
  CHECK(mult_at(poly(f, 2, {{{2, 0}, 1}}), origin).mult == 2);
  const auto r = mult_at(poly(f, 2, {{{2, 1}, 1}}), origin);
  CHECK(r.mult == 3);
  REQUIRE(r.witness);
  CHECK(*r.witness == MultiIndex{2, 1});
  CHECK(mult_at(SparsePoly(f, 2), origin).infinite());
  CHECK(mult_at(poly(f, 2, {{{0, 0}, 3}}), origin).mult == 0);
  CHECK_CODE(mult_at(poly(f, 2, {{{1, 0}, 1}}), pt(f, {0})), ArityMismatch);
}

TEST_CASE("mult_at agrees with brute-force expansion") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    Rng rng(q * 7);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng.below(3);
      Point a;
      for (std::size_t i = 0; i < n; ++i) a.push_back(Elem{static_cast<std::uint32_t>(rng.below(q))});
      const auto p = trial % 2 ? random_poly(f, n, 5, 5, rng)
                               : random_poly_vanishing_at(f, a, static_cast<std::uint32_t>(rng.range(1, 4)), 2, rng);
      CHECK(mult_at(p, a).mult == oracle::mult(p, a));
    }
  }
}

TEST_CASE("vanishes_with_mult on the squared parabola") {
  const Field f = Field::make(7);
  const auto par = poly(f, 2, {{{0, 1}, 1}, {{2, 0}, -1}});
  const auto p = par * par;
  std::vector<Point> pts;
  for (int l = 0; l < 7; ++l) pts.push_back(pt(f, {l, l * l}));
  CHECK(vanishes_with_mult(p, pts, 2).ok);
  const auto r = vanishes_with_mult(p, pts, 3);
  CHECK_FALSE(r.ok);
  REQUIRE(r.point);
  REQUIRE(r.beta);
  CHECK(r.beta->total() < 3);
  CHECK(*r.point == pts.front());
  CHECK(vanishes_with_mult(p, std::vector<Point>{}, 99).ok);
}

TEST_CASE("schwartz_zippel_audit examples") {
  const Field f3 = Field::make(3);
  const auto a3 = f3.elements();
  const auto x1x2 = schwartz_zippel_audit(poly(f3, 2, {{{1, 1}, 1}}), a3);
  CHECK(x1x2.total_mult == 6);
  CHECK(x1x2.bound == 6);
  CHECK(x1x2.ok);

  const Field f2 = Field::make(2);
  const auto x1 = schwartz_zippel_audit(poly(f2, 2, {{{1, 0}, 1}}), f2.elements());
  CHECK(x1.total_mult == 2);
  CHECK(x1.bound == 2);
  CHECK(x1.ok);

  const auto one = schwartz_zippel_audit(poly(f3, 2, {{{0, 0}, 1}}), a3);
  CHECK(one.total_mult == 0);
  CHECK(one.bound == 0);
  CHECK(one.ok);
  CHECK_CODE(schwartz_zippel_audit(SparsePoly(f3, 2), a3), ZeroPolynomial);
}

TEST_CASE("schwartz_zippel_audit on a proper subset") {
  const Field f = Field::make(7);
  const std::vector<Elem> sub{f.from_int(0), f.from_int(1), f.from_int(3)};
  const auto p = poly(f, 2, {{{2, 0}, 1}, {{1, 0}, -1}});  // x(x-1)
  const auto r = schwartz_zippel_audit(p, sub);
  CHECK(r.total_mult == 6);
  CHECK(r.bound == 6);
}

TEST_CASE("corollary_zero_check") {
  const Field f3 = Field::make(3);
  CHECK(corollary_zero_check(poly(f3, 1, {{{3}, 1}, {{1}, -1}}), 1));
  CHECK(corollary_zero_check(SparsePoly(f3, 2), 4));
  Rng rng(11);
  int checked = 0;
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::make(q);
    for (int i = 0; i < 50; ++i) {
      const std::uint64_t m = rng.range(1, 2);
      auto p = random_poly(f, 2, static_cast<std::uint32_t>(m * q - 1), 6, rng);
      if (p.is_zero()) continue;
      ++checked;
      CHECK(corollary_zero_check(p, m));
      CHECK_FALSE(vanishes_with_mult(p, all_points(f, 2), m).ok);
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("all_points enumerates lex order") {
  const auto pts = all_points(Field::make(2), 2);
  REQUIRE(pts.size() == 4);
  CHECK(pts[1] == Point{Elem{0}, Elem{1}});
  CHECK(pts[2] == Point{Elem{1}, Elem{0}});
}
