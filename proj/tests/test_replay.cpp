#include <doctest.h>

#include <string>

#include "ffkakeya/error.hpp"
#include "ffkakeya/multiplicity.hpp"
#include "ffkakeya/replay.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ffkakeya;
using testing::poly;
using testing::pt;

namespace {

// f_beta(rho) straight from the defining sum, with integer binomials.
Elem key_entry(const KeyLemmaInstance& inst, const MultiIndex& beta, Elem rho) {
  const Field& f = inst.field();
  const std::size_t n = inst.arity();
  Elem acc = f.zero();
  for (std::size_t i = 0; i < inst.indices().size(); ++i) {
    const MultiIndex& a = inst.indices()[i];
    const std::uint64_t bin = oracle::binom_multi(a, beta);
    if (bin == 0) continue;
    Elem term = f.mul(inst.coeffs()[i], f.from_int(static_cast<std::int64_t>(bin % f.p())));
    for (std::uint64_t j = 0; j < a[n - 1] - beta[n - 1]; ++j) term = f.mul(term, inst.b());
    for (std::uint64_t j = 0; j < a.total() - beta.total(); ++j) term = f.mul(term, rho);
    acc = f.add(acc, term);
  }
  return acc;
}

Curve parabola(const Field& f) { return Curve{pt(f, {0, 0}), f.one(), poly(f, 1, {{{2}, 1}})}; }

}  // namespace

TEST_CASE("key_lemma_table matches the defining sum") {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    Rng rng(q);
    for (int trial = 0; trial < 30; ++trial) {
      const std::uint64_t k = rng.range(1, 3);
      const std::uint32_t cap = static_cast<std::uint32_t>(k * (q - 1));
      std::vector<MultiIndex> idx;
      std::vector<Elem> cs;
      std::vector<bool> used(cap, false);
      for (int t = 0; t < 3; ++t) {
        const auto tot = static_cast<std::uint32_t>(rng.below(cap));
        if (used[tot]) continue;
        used[tot] = true;
        const auto first = static_cast<std::uint32_t>(rng.below(tot + 1));
        idx.push_back(MultiIndex{first, tot - first});
        cs.push_back(Elem{static_cast<std::uint32_t>(rng.below(q))});
      }
      const KeyLemmaInstance inst(f, 2, k, idx, cs, Elem{static_cast<std::uint32_t>(rng.range(1, q - 1))});
      const auto table = key_lemma_table(inst);
      CHECK(table.size() == indices_up_to(2, static_cast<std::uint32_t>(k - 1)).size() * (q - 1));
      for (const auto& [key, v] : table) CHECK(v == key_entry(inst, key.first, key.second));
    }
  }
}

TEST_CASE("key lemma with zero coefficients") {
  const Field f = Field::make(5);
  const KeyLemmaInstance inst(f, 2, 2, {MultiIndex{1, 0}, MultiIndex{0, 2}}, {f.zero(), f.zero()}, f.one());
  CHECK(inst.all_zero());
  for (const auto& [key, v] : key_lemma_table(inst)) CHECK(v == f.zero());
}

TEST_CASE("key lemma instance validation") {
  const Field f = Field::make(5);
  CHECK_CODE(KeyLemmaInstance(f, 2, 2, {MultiIndex{1, 0}, MultiIndex{0, 1}}, {f.one(), f.one()}, f.one()),
             InvalidArgument);
  CHECK_CODE(KeyLemmaInstance(f, 2, 2, {MultiIndex{8, 0}}, {f.one()}, f.one()), InvalidArgument);
  CHECK_CODE(KeyLemmaInstance(f, 2, 2, {MultiIndex{1, 0}}, {f.one()}, f.zero()), InvalidArgument);
}

TEST_CASE("check_key_lemma") {
  const Field f = Field::make(5);
  const auto cert = check_key_lemma(500, f, 2, 2, kDefaultSeed);
  CHECK(cert.pass);
  CHECK(cert.steps.size() == 500);
  CHECK(check_key_lemma(0, f, 2, 2, 1).pass);
  CHECK(check_key_lemma(40, f, 2, 2, 5, 1).dump() == check_key_lemma(40, f, 2, 2, 5, 3).dump());
}

TEST_CASE("derivs_zero on the parabola at q=5, k=1") {
  const Field f = Field::make(5);
  const auto p = poly(f, 2, {{{0, 1}, 1}, {{2, 0}, -1}});
  CHECK(check_derivs_zero(p, parabola(f), DerivParams{1, 2, 1}).pass);
}

TEST_CASE("derivs_zero on the squared parabola") {
  const Field f7 = Field::make(7);
  const auto par7 = poly(f7, 2, {{{0, 1}, 1}, {{2, 0}, -1}});
  const auto cert = check_derivs_zero(par7 * par7, parabola(f7), DerivParams{2, 4, 2});
  CHECK(cert.pass);
  // preconditions plus one step per beta in {(0,0),(0,1),(1,0)}
  CHECK(cert.steps.size() == 4);

  const Field f5 = Field::make(5);
  const auto par5 = poly(f5, 2, {{{0, 1}, 1}, {{2, 0}, -1}});
  try {
    (void)check_derivs_zero(par5 * par5, parabola(f5), DerivParams{2, 4, 2});
    FAIL("expected a precondition failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
    CHECK(std::string(e.what()).find("w = 1") != std::string::npos);
  }
}

TEST_CASE("derivs_zero precondition order") {
  const Field f = Field::make(7);
  const auto par = poly(f, 2, {{{0, 1}, 1}, {{2, 0}, -1}});
  CHECK_CODE(check_derivs_zero(SparsePoly(f, 2), parabola(f), DerivParams{2, 4, 2}), PreconditionFailed);
  CHECK_CODE(check_derivs_zero(par * par * par, parabola(f), DerivParams{2, 4, 2}), PreconditionFailed);
  // P = x_2 vanishes nowhere on the parabola except at the origin.
  CHECK_CODE(check_derivs_zero(poly(f, 2, {{{0, 1}, 1}}), parabola(f), DerivParams{1, 2, 1}), PreconditionFailed);
}

TEST_CASE("curve_map traces the curve points") {
  const Field f = Field::make(5);
  const Curve c{pt(f, {1, 3}), f.from_int(2), poly(f, 1, {{{2}, 1}, {{1}, 4}})};
  const auto h = curve_map(c);
  const auto pts = curve_points(c);
  REQUIRE(pts.size() == 5);
  for (std::uint32_t l = 0; l < 5; ++l) {
    const Point lam{Elem{l}};
    CHECK(pts[l] == Point{h[0].evaluate(lam), h[1].evaluate(lam)});
  }
}

TEST_CASE("proposition witness for Q = x2 - x1^2") {
  const Field f = Field::make(5);
  const auto q = poly(f, 2, {{{0, 1}, 1}, {{2, 0}, -1}});
  const auto w = proposition_witness(q, poly(f, 1, {{{2}, 1}}), 1);
  REQUIRE(w);
  CHECK(w->first == MultiIndex{0, 0});
  CHECK(w->second == f.from_int(2));
}

TEST_CASE("check_proposition") {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Field f = Field::make(q);
    const auto cert2 = check_proposition(20, f, 2, 2, 2, poly(f, 1, {{{2}, 1}}), kDefaultSeed);
    CHECK(cert2.pass);
    const auto cert3 = check_proposition(10, f, 3, 2, 1, poly(f, 2, {{{1, 1}, 1}}), kDefaultSeed);
    CHECK(cert3.pass);
  }
  const Field f = Field::make(5);
  CHECK_CODE(check_proposition(1, f, 2, 2, 1, SparsePoly(f, 1), 1), InvalidArgument);
}

TEST_CASE("random weighted-homogeneous polynomials") {
  const Field f = Field::make(7);
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto q = random_weighted_homogeneous(f, 3, 2, 2, rng);
    REQUIRE_FALSE(q.is_zero());
    CHECK(q.degree().value() < 12);
    std::vector<MultiIndex> idx;
    for (const auto& [e, c] : q.terms()) idx.push_back(e);
    CHECK(weighted_partition(idx, 2).size() == 1);
  }
}

TEST_CASE("check_warmup") {
  const auto c3 = check_warmup(3, 3);
  CHECK(c3.pass);
  const std::string doc = c3.dump();
  CHECK(doc.find("\"rank\": 21") != std::string::npos);
  CHECK(check_warmup(5, 5).pass);
  CHECK_CODE(check_warmup(2, 2), PreconditionFailed);
  CHECK_CODE(check_warmup(3, 4), NotMultipleOfQ);
}

TEST_CASE("check_theorem_instance") {
  const Field f = Field::of_order(4);
  const auto inst = BrkInstance::uniform(f, 2, 2, poly(f, 1, {{{2}, 1}}));
  CHECK(check_theorem_instance(inst, 4).pass);
}

TEST_CASE("weighted_partition") {
  const std::vector<MultiIndex> a{{1, 0}, {0, 1}};
  const auto pa = weighted_partition(a, 2);
  REQUIRE(pa.size() == 2);
  CHECK(pa.at(1) == std::vector<MultiIndex>{{1, 0}});
  CHECK(pa.at(2) == std::vector<MultiIndex>{{0, 1}});
  CHECK(weighted_partition(std::vector<MultiIndex>{}, 2).empty());
  const std::vector<MultiIndex> b{{2, 0}, {0, 1}};
  const auto pb = weighted_partition(b, 2);
  REQUIRE(pb.size() == 1);
  CHECK(pb.at(2).size() == 2);
  CHECK_CODE(weighted_partition(b, 1), BadEll);
}

TEST_CASE("lex classes have distinct totals") {
  const std::vector<MultiIndex> idx = indices_up_to(3, 6);
  const MultiIndex e{1, 1};
  for (const auto& [m, group] : weighted_partition(idx, 2)) {
    for (const auto& [key, cls] : lex_classes(group, e)) CHECK(distinct_totals(cls));
  }
  CHECK_FALSE(distinct_totals(std::vector<MultiIndex>{{1, 0}, {0, 1}}));
}

TEST_CASE("certificate layout") {
  Certificate c;
  c.check = "demo";
  c.seed = 7;
  c.pass = false;
  c.witness = Json::object();
  const auto j = c.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check", "seed", "inputs", "steps", "verdict", "witness"});
  CHECK(j["verdict"] == "fail");
}
