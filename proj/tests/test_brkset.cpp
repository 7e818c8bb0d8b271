#include <doctest.h>

#include "ffkakeya/brkset.hpp"
#include "ffkakeya/error.hpp"
#include "ffkakeya/json_io.hpp"
#include "ffkakeya/multiplicity.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ffkakeya;
using testing::poly;
using testing::pt;

namespace {

BrkInstance parabola_instance(const Field& f) { return BrkInstance::uniform(f, 2, 2, poly(f, 1, {{{2}, 1}})); }

}  // namespace

TEST_CASE("generate_set for q=3, g=s^2") {
  const Field f = Field::make(3);
  const auto s = generate_set(parabola_instance(f));
  const PointSet expect(f, 2, {pt(f, {0, 0}), pt(f, {1, 1}), pt(f, {2, 1}), pt(f, {2, 2}), pt(f, {1, 2})});
  CHECK(s == expect);
  CHECK(s.size() == 5);
}

TEST_CASE("rho = 0 contributes only a(0)") {
  const Field f = Field::make(5);
  auto per = parabola_instance(f).per_rho();
  per[0].a = pt(f, {1, 1});
  const BrkInstance inst(f, 2, 2, poly(f, 1, {{{2}, 1}}), per);
  const auto pts = surface_points(inst, f.zero());
  for (const auto& p : pts) CHECK(p == pt(f, {1, 1}));
  const auto s = generate_set(inst);
  CHECK(s.contains(pt(f, {1, 1})));
  CHECK(s.size() <= 1 + 4 * 5);
}

TEST_CASE("verify_brk") {
  const Field f = Field::make(5);
  const auto inst = parabola_instance(f);
  const auto s = generate_set(inst);
  CHECK(verify_brk(s, inst).ok);
  auto pts = s.points();
  const Point dropped = pts.back();
  pts.pop_back();
  const auto v = verify_brk(PointSet(f, 2, pts), inst);
  CHECK_FALSE(v.ok);
  REQUIRE(v.missing);
  CHECK(*v.missing == dropped);
  CHECK(verify_brk(PointSet(f, 2, all_points(f, 2)), inst).ok);
}

TEST_CASE("instance validation") {
  const Field f = Field::make(3);
  CHECK_CODE(BrkInstance::uniform(f, 2, 3, poly(f, 1, {{{3}, 1}})), EllOutOfRange);
  CHECK_CODE(BrkInstance::uniform(f, 2, 2, poly(f, 1, {{{2}, 1}, {{1}, 1}})), InvalidArgument);
  CHECK_CODE(BrkInstance::uniform(f, 2, 1, poly(f, 1, {{{1}, 1}})), EllOutOfRange);
}

TEST_CASE("theorem_bound") {
  const auto b3 = theorem_bound(3, 2, 2);
  CHECK(b3.fraction() == "36/25");
  CHECK(b3.ceiling == 2);
  const auto b5 = theorem_bound(5, 2, 2);
  // 1600/484 in lowest terms.
  CHECK(b5.num * 484 == b5.den * 1600);
  CHECK(b5.fraction() == "400/121");
  CHECK(b5.ceiling == 4);
  CHECK(b5.approx() == doctest::Approx(3.306).epsilon(0.001));
  CHECK_CODE(theorem_bound(3, 2, 3), EllOutOfRange);
}

TEST_CASE("theorem_bound against a direct rational evaluation") {
  for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u})
    for (std::uint64_t n = 2; n <= 5; ++n)
      for (std::uint64_t ell = 2; ell < q && ell < 6; ++ell) {
        unsigned __int128 num = 1, den = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
          num *= (q - 1) * q;
          den *= (ell + 1) * q - 2 * ell;
        }
        const auto b = theorem_bound(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(n),
                                     static_cast<std::uint32_t>(ell));
        CHECK(b.num * den == b.den * num);
        CHECK(b.ceiling == static_cast<std::uint64_t>((num + den - 1) / den));
      }
}

TEST_CASE("proof_params") {
  const auto p3 = proof_params(3, 2, 3);
  CHECK(p3.D == 5);
  CHECK(p3.M == 5);
  CHECK(2 * p3.D < p3.M * 3);
  CHECK(2 * (p3.D - 2) < (p3.M - 2) * 3);
  CHECK_FALSE(first_inequality_failure(3, 2, p3.D, p3.M, 3));
  const auto p5 = proof_params(5, 2, 5);
  CHECK(p5.D == 19);
  CHECK(p5.M == 11);
  CHECK_CODE(proof_params(3, 2, 4), NotMultipleOfQ);
  CHECK(first_inequality_failure(5, 2, 4, 2, 2) == 1u);
}

TEST_CASE("min_brk_search greedy respects the bound") {
  const Field f = Field::make(5);
  SearchOptions opts;
  opts.seed = 3;
  opts.restarts = 2;
  const auto r = min_brk_search(f, 2, 2, poly(f, 1, {{{2}, 1}}), opts);
  CHECK(r.min_size >= 4);
  CHECK_FALSE(r.exact);
  CHECK(generate_set(r.witness).size() == r.min_size);
  CHECK(r.min_size <= generate_set(parabola_instance(f)).size());
}

TEST_CASE("min_brk_search is independent of the job count") {
  const Field f = Field::make(5);
  SearchOptions opts;
  opts.seed = 9;
  opts.restarts = 3;
  const auto g = poly(f, 1, {{{2}, 1}});
  const auto a = min_brk_search(f, 2, 2, g, opts);
  opts.jobs = 3;
  const auto b = min_brk_search(f, 2, 2, g, opts);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("exhaustive search guards its size") {
  const Field f = Field::make(7);
  SearchOptions opts;
  opts.mode = SearchMode::Exhaustive;
  CHECK_CODE(min_brk_search(f, 2, 2, poly(f, 1, {{{2}, 1}}), opts), SearchSpaceTooLarge);
}

TEST_CASE("kakeya_set") {
  const auto t3 = kakeya_set(Field::make(3), 2, false);
  CHECK(t3.size() == 9);
  CHECK(verify_kakeya(t3).ok);
  CHECK(kakeya_set(Field::make(2), 2, false).size() == 4);
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    for (std::size_t n : {2u, 3u}) {
      const auto s = kakeya_set(f, n, true);
      CHECK(verify_kakeya(s).ok);
      std::uint64_t full = 1;
      for (std::size_t i = 0; i < n; ++i) full *= q;
      CHECK(s.size() < full);
    }
  }
  const Field f = Field::make(3);
  const auto v = verify_kakeya(PointSet(f, 2, {pt(f, {0, 0})}));
  CHECK_FALSE(v.ok);
  CHECK(v.direction);
}
