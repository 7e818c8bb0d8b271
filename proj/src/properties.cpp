#include "ffkakeya/properties.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "ffkakeya/brkset.hpp"
#include "ffkakeya/error.hpp"
#include "ffkakeya/json_io.hpp"
#include "ffkakeya/multiplicity.hpp"
#include "ffkakeya/parallel.hpp"
#include "ffkakeya/vanish.hpp"

namespace ffkakeya {

namespace {

Elem random_elem(const Field& f, Rng& rng) { return Elem{static_cast<std::uint32_t>(rng.below(f.q()))}; }

Elem random_nonzero(const Field& f, Rng& rng) {
  return Elem{static_cast<std::uint32_t>(1 + rng.below(f.q() - 1))};
}

Point random_point(const Field& f, std::size_t n, Rng& rng) {
  Point p(n);
  for (auto& x : p) x = random_elem(f, rng);
  return p;
}

MultiIndex random_index_of_total(std::size_t arity, std::uint32_t total, Rng& rng) {
  MultiIndex a(arity);
  for (std::uint32_t u = 0; u < total; ++u) ++a[rng.below(arity)];
  return a;
}

MultiIndex random_index(std::size_t arity, std::uint32_t max_total, Rng& rng) {
  return random_index_of_total(arity, static_cast<std::uint32_t>(rng.below(max_total + 1)), rng);
}

SparsePoly random_nonzero_poly(const Field& f, std::size_t n, std::uint32_t max_deg,
                               std::size_t max_terms, Rng& rng) {
  for (;;) {
    SparsePoly p = random_poly(f, n, max_deg, max_terms, rng);
    if (!p.is_zero()) return p;
  }
}

// Homogeneous of degree d, nonzero.
SparsePoly random_homogeneous(const Field& f, std::size_t n, std::uint32_t d, Rng& rng) {
  const auto monos = indices_of_total(n, d);
  for (;;) {
    SparsePoly p(f, n);
    for (const auto& m : monos) {
      if (rng.chance(1, 2)) p.add_term(m, random_nonzero(f, rng));
    }
    if (!p.is_zero()) return p;
  }
}

const std::vector<std::uint32_t>& small_orders() {
  static const std::vector<std::uint32_t> v{2, 3, 4, 5, 7};
  return v;
}

// Accumulates per-trial results into a suite certificate.
struct Outcome {
  bool ok = true;
  std::uint64_t cases = 0;
  Json witness;
};

void fold(Certificate& cert, const std::string& step, std::vector<Outcome>& results, Json extra = Json::object()) {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  for (auto& r : results) {
    cases += r.cases;
    if (!r.ok) {
      ++failures;
      if (cert.pass) {
        cert.pass = false;
        cert.witness = std::move(r.witness);
      }
    }
  }
  Json s;
  s["step"] = step;
  s["trials"] = results.size();
  s["cases"] = cases;
  s["failures"] = failures;
  for (auto& [k, v] : extra.items()) s[k] = v;
  cert.steps.push_back(std::move(s));
}

Certificate start(const std::string& name, std::uint64_t seed) {
  Certificate c;
  c.check = name;
  c.seed = seed;
  return c;
}

}  // namespace

SparsePoly random_poly(const Field& field, std::size_t n, std::uint32_t max_deg, std::size_t max_terms,
                       Rng& rng) {
  SparsePoly p(field, n);
  const std::uint64_t terms = rng.below(max_terms + 1);
  for (std::uint64_t i = 0; i < terms; ++i) {
    p.add_term(random_index(n, max_deg, rng), random_nonzero(field, rng));
  }
  return p;
}

SparsePoly random_poly_vanishing_at(const Field& field, const Point& a, std::uint32_t e,
                                    std::uint32_t extra_deg, Rng& rng) {
  const std::size_t n = a.size();
  SparsePoly form(field, n);
  while (form.is_zero()) {
    for (std::size_t i = 0; i < n; ++i) {
      const Elem c = random_elem(field, rng);
      if (field.is_zero(c)) continue;
      form += (SparsePoly::variable(field, n, i) - SparsePoly::constant(field, n, a[i])).scaled(c);
    }
  }
  return form.pow(e) * random_nonzero_poly(field, n, extra_deg, 4, rng);
}

// ---------------------------------------------------------------------------

Certificate check_hasse_oracle(std::uint64_t trials_per_field, std::uint64_t seed, unsigned jobs) {
  Certificate cert = start("hasse_oracle", seed);
  cert.inputs["orders"] = {2, 3, 5, 7, 9};
  cert.inputs["trials_per_field"] = trials_per_field;
  cert.inputs["max_arity"] = 3;
  cert.inputs["max_degree"] = 6;
  const std::vector<std::uint32_t> orders{2, 3, 5, 7, 9};
  for (std::size_t fi = 0; fi < orders.size(); ++fi) {
    const Field f = Field::of_order(orders[fi]);
    auto results = parallel_map<Outcome>(trials_per_field, jobs, [&](std::uint64_t t) {
      Rng rng = Rng::derive(seed, fi * trials_per_field + t);
      const std::size_t n = 1 + rng.below(3);
      const SparsePoly p = random_poly(f, n, 6, 8, rng);
      const auto shifted = expand_shift(p);
      const std::uint32_t top = p.is_zero() ? 1 : static_cast<std::uint32_t>(p.degree().value()) + 1;
      Outcome o;
      for (const auto& beta : indices_up_to(n, top)) {
        ++o.cases;
        const auto it = shifted.find(beta);
        const SparsePoly expect = it == shifted.end() ? SparsePoly(f, n) : it->second;
        if (!(hasse_derivative(p, beta) == expect)) {
          o.ok = false;
          o.witness = {{"P", to_json(p)}, {"beta", to_json(beta)}};
          break;
        }
      }
      return o;
    });
    fold(cert, "q=" + std::to_string(orders[fi]), results);
  }
  return cert;
}

Certificate check_multiplicity_lemmas(std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
  Certificate cert = start("multiplicity_lemmas", seed);
  cert.inputs["trials"] = trials;
  const auto& orders = small_orders();

  // mult(P^(beta), a) >= mult(P, a) - |beta|
  auto deriv = parallel_map<Outcome>(trials, jobs, [&](std::uint64_t t) {
    Rng rng = Rng::derive(seed, 3 * t);
    const Field f = Field::of_order(orders[rng.below(orders.size())]);
    const std::size_t n = 1 + rng.below(3);
    const Point a = random_point(f, n, rng);
    SparsePoly p = rng.chance(1, 10) ? SparsePoly(f, n)
                                     : random_poly_vanishing_at(f, a, rng.below(4), 3, rng);
    const Point b = rng.chance(3, 4) ? a : random_point(f, n, rng);
    const MultiIndex beta = random_index(n, 4, rng);
    const auto m = mult_at(p, b);
    const auto dm = mult_at(hasse_derivative(p, beta), b);
    Outcome o;
    o.cases = 1;
    const bool ok = m.infinite() ? dm.infinite()
                                 : dm.at_least(*m.mult > beta.total() ? *m.mult - beta.total() : 0);
    if (!ok) {
      o.ok = false;
      o.witness = {{"lemma", "derivative"}, {"P", to_json(p)}, {"point", to_json(f, b)},
                   {"beta", to_json(beta)}};
    }
    return o;
  });
  fold(cert, "derivative", deriv);

  // mult(P o h, lam) >= mult(P, h(lam)) for univariate h
  auto comp = parallel_map<Outcome>(trials, jobs, [&](std::uint64_t t) {
    Rng rng = Rng::derive(seed, 3 * t + 1);
    const Field f = Field::of_order(orders[rng.below(orders.size())]);
    const std::size_t n = 1 + rng.below(3);
    const Elem lam = random_elem(f, rng);
    const Point a = random_point(f, n, rng);
    std::vector<SparsePoly> h;
    const SparsePoly t_minus_lam = SparsePoly::variable(f, 1, 0) - SparsePoly::constant(f, 1, lam);
    const bool through_a = rng.chance(3, 4);
    for (std::size_t i = 0; i < n; ++i) {
      if (through_a) {
        h.push_back(SparsePoly::constant(f, 1, a[i]) + t_minus_lam * random_poly(f, 1, 2, 3, rng));
      } else {
        h.push_back(random_poly(f, 1, 3, 4, rng));
      }
    }
    Point at(n);
    for (std::size_t i = 0; i < n; ++i) at[i] = h[i].evaluate(std::vector<Elem>{lam});
    const SparsePoly p = random_poly_vanishing_at(f, at, rng.below(4), 2, rng);
    const auto m = mult_at(p, at);
    const auto cm = mult_at(compose(p, h), std::vector<Elem>{lam});
    Outcome o;
    o.cases = 1;
    if (!(m.infinite() ? cm.infinite() : cm.at_least(*m.mult))) {
      o.ok = false;
      Json hj = Json::array();
      for (const auto& hi : h) hj.push_back(to_json(hi));
      o.witness = {{"lemma", "composition"}, {"P", to_json(p)}, {"h", hj}, {"lambda", to_json(f, lam)}};
    }
    return o;
  });
  fold(cert, "composition", comp);

  // (P + Q)^(beta) = P^(beta) + Q^(beta)
  auto add = parallel_map<Outcome>(trials, jobs, [&](std::uint64_t t) {
    Rng rng = Rng::derive(seed, 3 * t + 2);
    const Field f = Field::of_order(orders[rng.below(orders.size())]);
    const std::size_t n = 1 + rng.below(3);
    const SparsePoly p = random_poly(f, n, 6, 6, rng);
    const SparsePoly q = random_poly(f, n, 6, 6, rng);
    const MultiIndex beta = random_index(n, 6, rng);
    Outcome o;
    o.cases = 1;
    if (!(hasse_derivative(p + q, beta) == hasse_derivative(p, beta) + hasse_derivative(q, beta))) {
      o.ok = false;
      o.witness = {{"lemma", "additivity"}, {"P", to_json(p)}, {"Q", to_json(q)}, {"beta", to_json(beta)}};
    }
    return o;
  });
  fold(cert, "additivity", add);
  return cert;
}

Certificate check_vandermonde(std::size_t max_arity, std::uint32_t max_total, std::uint32_t max_w) {
  Certificate cert = start("vandermonde", 0);
  cert.inputs["max_arity"] = max_arity;
  cert.inputs["max_total"] = max_total;
  cert.inputs["max_w"] = max_w;
  for (std::size_t n = 1; n <= max_arity; ++n) {
    std::vector<Outcome> results(1);
    Outcome& o = results[0];
    for (const auto& alpha : indices_up_to(n, max_total)) {
      for (std::uint32_t w = 0; w <= max_w; ++w) {
        std::uint64_t rhs = 0;
        for (const auto& beta : indices_of_total(n, w)) rhs += binom_multi(alpha, beta);
        const std::uint64_t lhs = binom(alpha.total(), w);
        ++o.cases;
        if (lhs != rhs && o.ok) {
          o.ok = false;
          o.witness = {{"alpha", to_json(alpha)}, {"w", w}, {"lhs", lhs}, {"rhs", rhs}};
        }
      }
    }
    fold(cert, "arity=" + std::to_string(n), results);
  }
  return cert;
}

Certificate check_existence(std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
  Certificate cert = start("existence", seed);
  cert.inputs["trials"] = trials;
  const auto& orders = small_orders();
  auto results = parallel_map<Outcome>(trials, jobs, [&](std::uint64_t t) {
    Rng rng = Rng::derive(seed, t);
    for (;;) {
      const Field f = Field::of_order(orders[rng.below(orders.size())]);
      const std::size_t n = 1 + rng.below(3);
      const auto M = static_cast<std::uint32_t>(1 + rng.below(3));
      const auto D = static_cast<std::uint32_t>(rng.below(n == 3 ? 7 : 10));
      const std::uint64_t per_point = binom(M + n - 1, n);
      const std::uint64_t unknowns = binom(D + n, n);
      std::uint64_t space = 1;
      for (std::size_t i = 0; i < n; ++i) space *= f.q();
      const std::uint64_t smax = std::min((unknowns - 1) / per_point, space);
      if (smax < 1) continue;
      const std::uint64_t s = 1 + rng.below(smax);
      std::set<Point> pts;
      while (pts.size() < s) pts.insert(random_point(f, n, rng));
      const VanishProblem problem(f, n, std::vector<Point>(pts.begin(), pts.end()), D, M);
      Outcome o;
      o.cases = 1;
      const auto p = problem.counting_inequality_holds() ? find_vanishing_poly(problem) : std::nullopt;
      const bool ok = p && !p->is_zero() && p->degree().value() <= D &&
                      vanishes_with_mult(*p, problem.points(), M).ok;
      if (!ok) {
        o.ok = false;
        Json pj = Json::array();
        for (const auto& x : problem.points()) pj.push_back(to_json(f, x));
        o.witness = {{"field", to_json(f)}, {"n", n}, {"D", D}, {"M", M}, {"points", pj}};
      }
      return o;
    }
  });
  fold(cert, "random_problems", results);
  return cert;
}

Certificate check_schwartz_zippel(std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
  Certificate cert = start("schwartz_zippel", seed);
  cert.inputs["trials"] = trials;
  cert.inputs["orders"] = {3, 5, 7};
  const std::vector<std::uint32_t> orders{3, 5, 7};
  std::vector<std::uint64_t> tight(trials, 0);
  auto results = parallel_map<Outcome>(trials, jobs, [&](std::uint64_t t) {
    Rng rng = Rng::derive(seed, t);
    const Field f = Field::of_order(orders[rng.below(orders.size())]);
    const std::size_t n = 1 + rng.below(3);
    const SparsePoly p = rng.chance(1, 2)
                             ? random_nonzero_poly(f, n, 6, 6, rng)
                             : random_poly_vanishing_at(f, random_point(f, n, rng),
                                                        static_cast<std::uint32_t>(1 + rng.below(3)), 2, rng);
    auto elems = f.elements();
    for (std::size_t i = elems.size(); i > 1; --i) std::swap(elems[i - 1], elems[rng.below(i)]);
    elems.resize(1 + rng.below(elems.size()));
    std::sort(elems.begin(), elems.end());
    const auto audit = schwartz_zippel_audit(p, elems);
    Outcome o;
    o.cases = 1;
    if (audit.total_mult == audit.bound) tight[t] = 1;
    if (!audit.ok) {
      o.ok = false;
      Json aj = Json::array();
      for (auto e : elems) aj.push_back(to_json(f, e));
      o.witness = {{"P", to_json(p)}, {"A", aj}, {"total", audit.total_mult}, {"bound", audit.bound}};
    }
    return o;
  });
  std::uint64_t tight_count = 0;
  for (auto x : tight) tight_count += x;
  fold(cert, "random_polynomials", results, {{"tight_cases", tight_count}});

  const Field f3 = Field::of_order(3);
  const SparsePoly xy = SparsePoly::monomial(f3, MultiIndex{1, 1}, f3.one());
  const auto audit = schwartz_zippel_audit(xy, f3.elements());
  Json s;
  s["step"] = "equality_case";
  s["P"] = to_json(xy);
  s["total"] = audit.total_mult;
  s["bound"] = audit.bound;
  s["equal"] = audit.total_mult == audit.bound;
  cert.steps.push_back(std::move(s));
  if ((!audit.ok || audit.total_mult != 6 || audit.bound != 6) && cert.pass) {
    cert.pass = false;
    cert.witness = {{"equality_case_total", audit.total_mult}, {"bound", audit.bound}};
  }
  return cert;
}

Certificate check_field_laws(std::uint64_t seed) {
  Certificate cert = start("field_laws", seed);
  const std::vector<std::uint32_t> orders{2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 121, 256, 257, 625, 4096};
  cert.inputs["orders"] = orders;
  for (std::size_t fi = 0; fi < orders.size(); ++fi) {
    const Field f = Field::of_order(orders[fi]);
    Rng rng = Rng::derive(seed, fi);
    std::vector<Outcome> results(1);
    Outcome& o = results[0];
    auto check = [&](bool ok, const std::string& law, std::vector<Elem> xs) {
      ++o.cases;
      if (!ok && o.ok) {
        o.ok = false;
        Json ej = Json::array();
        for (auto x : xs) ej.push_back(to_json(f, x));
        o.witness = {{"field", to_json(f)}, {"law", law}, {"elements", ej}};
      }
    };
    const bool exhaustive = f.q() <= 9;
    const std::uint64_t samples = exhaustive ? 0 : 3000;
    auto triple = [&](Elem a, Elem b, Elem c) {
      check(f.add(a, b) == f.add(b, a), "add commutative", {a, b});
      check(f.mul(a, b) == f.mul(b, a), "mul commutative", {a, b});
      check(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "add associative", {a, b, c});
      check(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), "mul associative", {a, b, c});
      check(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "distributive", {a, b, c});
      check(f.sub(f.add(a, b), b) == a, "sub inverts add", {a, b});
    };
    if (exhaustive) {
      for (auto a : f.elements())
        for (auto b : f.elements())
          for (auto c : f.elements()) triple(a, b, c);
    } else {
      for (std::uint64_t i = 0; i < samples; ++i) {
        triple(random_elem(f, rng), random_elem(f, rng), random_elem(f, rng));
      }
    }
    for (auto a : f.elements()) {
      check(f.add(a, f.neg(a)) == f.zero(), "additive inverse", {a});
      check(f.mul(a, f.one()) == a, "multiplicative identity", {a});
      check(f.pow(a, f.q()) == a, "a^q = a", {a});
      if (!f.is_zero(a)) check(f.mul(a, f.inv(a)) == f.one(), "multiplicative inverse", {a});
    }
    fold(cert, "q=" + std::to_string(f.q()), results, {{"modulus", to_json(f)}});
  }
  const bool f4 = Field::of_order(4).modulus() == std::vector<std::uint32_t>{1, 1, 1};
  const bool f9 = Field::of_order(9).modulus() == std::vector<std::uint32_t>{1, 0, 1};
  cert.steps.push_back({{"step", "default_moduli"}, {"F4_t2_t_1", f4}, {"F9_t2_1", f9}});
  if ((!f4 || !f9) && cert.pass) {
    cert.pass = false;
    cert.witness = {{"default_moduli", "unexpected"}};
  }
  return cert;
}

Certificate check_lex_laws(std::uint64_t trials, std::uint64_t seed) {
  Certificate cert = start("lex_laws", seed);
  cert.inputs["trials"] = trials;
  const auto& orders = small_orders();
  std::vector<Outcome> order(trials), leading(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::derive(seed, t);
    const std::size_t n = 1 + rng.below(4);
    const MultiIndex a = random_index(n, 6, rng), b = random_index(n, 6, rng), c = random_index(n, 6, rng);
    Outcome& o = order[t];
    o.cases = 1;
    const bool trans = !(a <= b && b <= c) || a <= c;
    const bool anti = !(a <= b && b <= a) || a == b;
    const bool shift = !(a < b) || (a + c < b + c);
    const bool total = (a < b) || (b < a) || (a == b);
    if (!(trans && anti && shift && total)) {
      o.ok = false;
      o.witness = {{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
    }

    const Field f = Field::of_order(orders[rng.below(orders.size())]);
    const SparsePoly p = random_nonzero_poly(f, n, 4, 5, rng);
    const auto lt = min_lex_exponent(p);
    const auto k = static_cast<std::uint32_t>(rng.below(5));
    const auto lk = min_lex_exponent(p.pow(k));
    const MultiIndex beta = random_index(n, 4, rng);
    const auto lb = min_lex_exponent(p.shifted(beta));
    Outcome& l = leading[t];
    l.cases = 1;
    if (!(lk.exponent == lt.exponent.scaled(k) && lk.coeff == f.pow(lt.coeff, k) &&
          lb.exponent == lt.exponent + beta && lb.coeff == lt.coeff)) {
      l.ok = false;
      l.witness = {{"f", to_json(p)}, {"k", k}, {"beta", to_json(beta)}};
    }
  }
  fold(cert, "order_laws", order);
  fold(cert, "least_exponent", leading);

  std::vector<Outcome> enumeration(1);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t d = 0; d <= 6; ++d) {
      const auto idx = indices_up_to(n, d);
      ++enumeration[0].cases;
      bool ok = idx.size() == binom(d + n, n);
      for (std::size_t i = 1; ok && i < idx.size(); ++i) {
        const auto ta = idx[i - 1].total(), tb = idx[i].total();
        ok = ta < tb || (ta == tb && idx[i - 1] < idx[i]);
      }
      if (!ok && enumeration[0].ok) {
        enumeration[0].ok = false;
        enumeration[0].witness = {{"arity", n}, {"max_total", d}};
      }
    }
  }
  fold(cert, "degree_then_lex_enumeration", enumeration);
  return cert;
}

Certificate check_set_laws(std::uint64_t trials, std::uint64_t seed) {
  Certificate cert = start("set_laws", seed);
  cert.inputs["trials"] = trials;
  const std::vector<std::uint32_t> orders{3, 4, 5, 7};
  std::vector<Outcome> brk(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::derive(seed, t);
    const Field f = Field::of_order(orders[rng.below(orders.size())]);
    const std::size_t n = f.q() <= 5 && rng.chance(1, 3) ? 3 : 2;
    const auto ell = static_cast<std::uint32_t>(2 + rng.below(std::min<std::uint32_t>(f.q() - 2, 2)));
    const SparsePoly g = random_homogeneous(f, n - 1, ell, rng);
    std::vector<RhoChoice> per;
    for (std::uint32_t r = 0; r < f.q(); ++r) {
      per.push_back(RhoChoice{random_point(f, n, rng), random_poly(f, n - 1, ell - 1, 3, rng)});
    }
    const BrkInstance inst(f, n, ell, g, std::move(per));
    const PointSet s = generate_set(inst);
    const auto bound = theorem_bound(f.q(), static_cast<std::uint32_t>(n), ell);
    const bool covered = verify_brk(s, inst).ok;
    const bool bounded = s.size() >= bound.ceiling;
    const bool set_rt = set_from_json(parse_json(to_json(s).dump(), "set")) == s;
    const bool inst_rt = to_json(instance_from_json(parse_json(to_json(inst).dump(), "instance"))).dump() ==
                         to_json(inst).dump();
    Outcome& o = brk[t];
    o.cases = 4;
    if (!(covered && bounded && set_rt && inst_rt)) {
      o.ok = false;
      o.witness = {{"instance", to_json(inst)}, {"covered", covered}, {"above_bound", bounded},
                   {"set_roundtrip", set_rt}, {"instance_roundtrip", inst_rt}};
    }
  }
  fold(cert, "brk_instances", brk);

  std::vector<Outcome> kakeya(1);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (std::size_t n : {2u, 3u}) {
      const Field f = Field::of_order(q);
      for (bool besicovitch : {false, true}) {
        ++kakeya[0].cases;
        const PointSet s = kakeya_set(f, n, besicovitch);
        if (!verify_kakeya(s).ok && kakeya[0].ok) {
          kakeya[0].ok = false;
          kakeya[0].witness = {{"q", q}, {"n", n}, {"besicovitch", besicovitch}};
        }
      }
    }
  }
  fold(cert, "kakeya_sets", kakeya);
  return cert;
}

Certificate check_partition_laws(std::uint64_t trials, std::uint64_t seed) {
  Certificate cert = start("partition_laws", seed);
  cert.inputs["trials"] = trials;
  std::vector<Outcome> results(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::derive(seed, t);
    const std::size_t n = 2 + rng.below(2);
    const auto ell = static_cast<std::uint32_t>(2 + rng.below(3));
    const auto all = indices_up_to(n, 8);
    std::vector<MultiIndex> idx;
    for (const auto& a : all) {
      if (rng.chance(1, 3)) idx.push_back(a);
    }
    const MultiIndex e = random_index_of_total(n - 1, ell, rng);
    Outcome& o = results[t];
    std::size_t seen = 0;
    for (const auto& [j, group] : weighted_partition(idx, ell)) {
      seen += group.size();
      for (const auto& a : group) {
        ++o.cases;
        if (weighted_degree(a, ell) != j) o.ok = false;
      }
      if (n == 2 && !distinct_totals(group)) o.ok = false;
      for (const auto& [key, cls] : lex_classes(group, e)) {
        ++o.cases;
        if (!distinct_totals(cls)) o.ok = false;
      }
    }
    if (seen != idx.size()) o.ok = false;
    if (!o.ok) o.witness = {{"n", n}, {"ell", ell}, {"e", to_json(e)}};
  }
  fold(cert, "random_index_sets", results);
  return cert;
}

// ---------------------------------------------------------------------------

std::vector<SuiteOutcome> run_selftest(std::uint64_t seed, unsigned jobs, std::ostream& log) {
  std::vector<SuiteOutcome> out;
  auto record = [&](const std::string& name, const std::function<Certificate()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteOutcome s;
    s.name = name;
    try {
      const Certificate c = fn();
      s.pass = c.pass;
      if (!c.pass && c.witness) s.detail = c.witness->dump();
    } catch (const std::exception& e) {
      s.pass = false;
      s.detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << (s.pass ? "PASS " : "FAIL ") << name << " (" << static_cast<long>(secs * 1000) << " ms)";
    if (!s.detail.empty()) log << ": " << s.detail;
    log << '\n';
    out.push_back(std::move(s));
  };

  record("field_laws", [&] { return check_field_laws(seed); });
  record("lex_laws", [&] { return check_lex_laws(300, seed); });
  record("hasse_oracle", [&] { return check_hasse_oracle(100, seed, jobs); });
  record("multiplicity_lemmas", [&] { return check_multiplicity_lemmas(100, seed, jobs); });
  record("vandermonde", [&] { return check_vandermonde(4, 8, 8); });
  record("existence", [&] { return check_existence(60, seed, jobs); });
  record("schwartz_zippel", [&] { return check_schwartz_zippel(100, seed, jobs); });
  record("set_laws", [&] { return check_set_laws(40, seed); });
  record("partition_laws", [&] { return check_partition_laws(200, seed); });
  record("key_lemma", [&] { return check_key_lemma(200, Field::of_order(5), 2, 2, seed, jobs); });
  record("proposition", [&] {
    const Field f = Field::of_order(5);
    return check_proposition(60, f, 2, 2, 2, SparsePoly::monomial(f, MultiIndex{2}, f.one()), seed, jobs);
  });
  record("derivs_zero", [&] {
    const Field f = Field::of_order(7);
    const SparsePoly x1 = SparsePoly::variable(f, 2, 0), x2 = SparsePoly::variable(f, 2, 1);
    const SparsePoly p = (x2 - x1 * x1).pow(2);
    const SparsePoly s2 = SparsePoly::monomial(f, MultiIndex{2}, f.one());
    Certificate c = check_derivs_zero(p, Curve{Point(2, f.zero()), f.one(), s2}, {2, 4, 2});
    // The same polynomial over F_5 violates the degree/multiplicity inequality.
    const Field f5 = Field::of_order(5);
    const SparsePoly y1 = SparsePoly::variable(f5, 2, 0), y2 = SparsePoly::variable(f5, 2, 1);
    try {
      check_derivs_zero((y2 - y1 * y1).pow(2),
                        Curve{Point(2, f5.zero()), f5.one(), SparsePoly::monomial(f5, MultiIndex{2}, f5.one())},
                        {2, 4, 2});
      c.pass = false;
      c.witness = Json{{"q5_variant", "accepted"}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionFailed) throw;
    }
    return c;
  });
  for (auto [q, k] : {std::pair{3u, 3ull}, std::pair{3u, 6ull}, std::pair{5u, 5ull}}) {
    record("warmup q=" + std::to_string(q) + " k=" + std::to_string(k), [&] { return check_warmup(q, k); });
  }
  record("theorem_instance", [&] {
    Rng rng = Rng::derive(seed, 0);
    const Field f = Field::of_order(4);
    std::vector<RhoChoice> per;
    for (std::uint32_t r = 0; r < f.q(); ++r) per.push_back({random_point(f, 2, rng), random_poly(f, 1, 1, 2, rng)});
    const BrkInstance inst(f, 2, 2, SparsePoly::monomial(f, MultiIndex{2}, f.one()), std::move(per));
    return check_theorem_instance(inst, 4);
  });
  record("min_search_greedy", [&] {
    const Field f = Field::of_order(3);
    SearchOptions opts;
    opts.seed = seed;
    opts.jobs = jobs;
    const auto r = min_brk_search(f, 2, 2, SparsePoly::monomial(f, MultiIndex{2}, f.one()), opts);
    Certificate c = start("min_search_greedy", seed);
    c.steps.push_back(to_json(r));
    c.pass = r.min_size >= r.bound.ceiling;
    return c;
  });
  return out;
}

}  // namespace ffkakeya
