#include "ffkakeya/replay.hpp"

#include <algorithm>
#include <set>

#include "ffkakeya/error.hpp"
#include "ffkakeya/multiplicity.hpp"
#include "ffkakeya/parallel.hpp"
#include "ffkakeya/vanish.hpp"

namespace ffkakeya {

Json Certificate::to_json() const {
  Json j;
  j["check"] = check;
  j["seed"] = seed;
  j["inputs"] = inputs;
  Json s = Json::array();
  for (const auto& step : steps) s.push_back(step);
  j["steps"] = std::move(s);
  j["verdict"] = pass ? "pass" : "fail";
  if (witness) j["witness"] = *witness;
  return j;
}

std::string Certificate::dump() const { return to_json().dump(2); }

namespace {

std::uint64_t degree_cap(const Field& f, std::uint64_t k) { return k * (f.q() - 1); }

Elem random_elem(const Field& f, Rng& rng) { return Elem{static_cast<std::uint32_t>(rng.below(f.q()))}; }

Elem random_nonzero(const Field& f, Rng& rng) {
  return Elem{static_cast<std::uint32_t>(1 + rng.below(f.q() - 1))};
}

// Uniformly random placement of `total` units into `arity` coordinates.
MultiIndex random_index_of_total(std::size_t arity, std::uint32_t total, Rng& rng) {
  MultiIndex a(arity);
  for (std::uint32_t u = 0; u < total; ++u) ++a[rng.below(arity)];
  return a;
}

[[noreturn]] void precondition(const std::string& what) {
  fail(ErrorCode::PreconditionFailed, what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Key lemma

KeyLemmaInstance::KeyLemmaInstance(Field field, std::size_t n, std::uint64_t k,
                                   std::vector<MultiIndex> indices, std::vector<Elem> coeffs, Elem b)
    : field_(std::move(field)), n_(n), k_(k), indices_(std::move(indices)),
      coeffs_(std::move(coeffs)), b_(b) {
  if (n_ < 1) fail(ErrorCode::InvalidArgument, "arity must be >= 1");
  if (k_ < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  if (indices_.size() != coeffs_.size()) {
    fail(ErrorCode::InvalidArgument, "one coefficient per exponent required");
  }
  if (!field_.contains(b_) || field_.is_zero(b_)) fail(ErrorCode::InvalidArgument, "b must be nonzero");
  const std::uint64_t cap = degree_cap(field_, k_);
  std::set<std::uint64_t> totals;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const auto& a = indices_[i];
    if (a.arity() != n_) fail(ErrorCode::ArityMismatch, "exponent " + a.to_string() + " has wrong arity");
    if (a.total() >= cap) {
      fail(ErrorCode::InvalidArgument,
           "|" + a.to_string() + "| must be < k(q-1) = " + std::to_string(cap));
    }
    if (!totals.insert(a.total()).second) {
      fail(ErrorCode::InvalidArgument, "exponents must have pairwise distinct |alpha|; " +
                                           a.to_string() + " repeats total " +
                                           std::to_string(a.total()));
    }
    if (!field_.contains(coeffs_[i])) fail(ErrorCode::MixedFields, "coefficient not in field");
  }
}

bool KeyLemmaInstance::all_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](Elem c) { return field_.is_zero(c); });
}

Json KeyLemmaInstance::to_json() const {
  Json j;
  j["field"] = ffkakeya::to_json(field_);
  j["n"] = n_;
  j["k"] = k_;
  Json terms = Json::array();
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    Json t;
    t["alpha"] = ffkakeya::to_json(indices_[i]);
    t["c"] = ffkakeya::to_json(field_, coeffs_[i]);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["b"] = ffkakeya::to_json(field_, b_);
  return j;
}

std::map<std::pair<MultiIndex, Elem>, Elem> key_lemma_table(const KeyLemmaInstance& inst) {
  const Field& f = inst.field();
  const std::size_t n = inst.arity();
  std::map<std::pair<MultiIndex, Elem>, Elem> table;
  for (const auto& beta : indices_up_to(n, static_cast<std::uint32_t>(inst.k() - 1))) {
    for (auto rho : f.nonzero_elements()) {
      Elem acc = f.zero();
      for (std::size_t i = 0; i < inst.indices().size(); ++i) {
        const auto& alpha = inst.indices()[i];
        const std::uint32_t bin = binom_multi_mod(alpha, beta, f.p());
        if (bin == 0) continue;
        Elem t = f.mul(inst.coeffs()[i], f.from_int(bin));
        t = f.mul(t, f.pow(inst.b(), alpha[n - 1] - beta[n - 1]));
        t = f.mul(t, f.pow(rho, alpha.total() - beta.total()));
        acc = f.add(acc, t);
      }
      table.emplace(std::make_pair(beta, rho), acc);
    }
  }
  return table;
}

namespace {

KeyLemmaInstance random_key_lemma_instance(const Field& f, std::size_t n, std::uint64_t k, Rng& rng) {
  const std::uint64_t cap = degree_cap(f, k);
  const std::uint64_t gap = f.q() - 1;
  if (cap > gap && rng.chance(1, 2)) {
    // f_0(rho) = rho^t (rho^(q-1) - 1) vanishes at every nonzero rho, so the
    // nonzero entry has to come from some beta != 0.
    const Elem b = random_nonzero(f, rng);
    const auto t0 = static_cast<std::uint32_t>(rng.below(cap - gap));
    MultiIndex lo = random_index_of_total(n, t0, rng);
    MultiIndex hi = random_index_of_total(n, t0 + static_cast<std::uint32_t>(gap), rng);
    const Elem scale = random_nonzero(f, rng);
    const Elem c_lo = f.neg(f.mul(scale, f.inv(f.pow(b, lo[n - 1]))));
    const Elem c_hi = f.mul(scale, f.inv(f.pow(b, hi[n - 1])));
    return KeyLemmaInstance(f, n, k, {std::move(lo), std::move(hi)}, {c_lo, c_hi}, b);
  }
  const std::uint64_t terms = 1 + rng.below(std::min<std::uint64_t>(cap, 5));
  std::set<std::uint32_t> totals;
  while (totals.size() < terms) totals.insert(static_cast<std::uint32_t>(rng.below(cap)));
  std::vector<MultiIndex> indices;
  std::vector<Elem> coeffs;
  for (auto t : totals) {
    indices.push_back(random_index_of_total(n, t, rng));
    coeffs.push_back(random_elem(f, rng));
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [&](Elem c) { return f.is_zero(c); })) {
    coeffs[rng.below(coeffs.size())] = random_nonzero(f, rng);
  }
  return KeyLemmaInstance(f, n, k, std::move(indices), std::move(coeffs), random_nonzero(f, rng));
}

}  // namespace

Certificate check_key_lemma(std::uint64_t trials, const Field& field, std::size_t n,
                            std::uint64_t k, std::uint64_t seed, unsigned jobs) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  Certificate cert;
  cert.check = "key_lemma";
  cert.seed = seed;
  cert.inputs["field"] = to_json(field);
  cert.inputs["n"] = n;
  cert.inputs["k"] = k;
  cert.inputs["trials"] = trials;

  struct Outcome {
    Json step;
    bool ok = true;
  };
  auto results = parallel_map<Outcome>(trials, jobs, [&](std::uint64_t t) {
    Rng rng = Rng::derive(seed, t);
    const auto inst = random_key_lemma_instance(field, n, k, rng);
    Outcome o;
    o.step["trial"] = t;
    o.step["instance"] = inst.to_json();
    for (const auto& [key, value] : key_lemma_table(inst)) {
      if (!field.is_zero(value)) {
        Json w;
        w["beta"] = to_json(key.first);
        w["rho"] = to_json(field, key.second);
        w["value"] = to_json(field, value);
        o.step["nonzero_entry"] = std::move(w);
        return o;
      }
    }
    o.ok = false;
    o.step["nonzero_entry"] = nullptr;
    return o;
  });
  for (auto& r : results) {
    if (!r.ok && cert.pass) {
      cert.pass = false;
      cert.witness = r.step["instance"];
    }
    cert.steps.push_back(std::move(r.step));
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Derivatives along a surface

namespace {

void check_curve(const Curve& curve) {
  const Field& f = curve.g.field();
  const std::size_t n = curve.g.arity() + 1;
  if (curve.a.size() != n) fail(ErrorCode::DimensionMismatch, "translation must have n coordinates");
  for (auto x : curve.a) {
    if (!f.contains(x)) fail(ErrorCode::MixedFields, "translation not in field");
  }
  if (!f.contains(curve.rho)) fail(ErrorCode::MixedFields, "rho not in field");
}

}  // namespace

std::vector<Point> curve_points(const Curve& curve) {
  check_curve(curve);
  const Field& f = curve.g.field();
  const std::size_t n = curve.a.size();
  std::vector<Point> out;
  for (const auto& lam : all_points(f, n - 1)) {
    Point p(n);
    for (std::size_t i = 0; i + 1 < n; ++i) p[i] = f.add(curve.a[i], f.mul(curve.rho, lam[i]));
    p[n - 1] = f.add(curve.a[n - 1], f.mul(curve.rho, curve.g.evaluate(lam)));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SparsePoly> curve_map(const Curve& curve) {
  check_curve(curve);
  const Field& f = curve.g.field();
  const std::size_t n = curve.a.size();
  std::vector<SparsePoly> h;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h.push_back(SparsePoly::constant(f, n - 1, curve.a[i]) +
                SparsePoly::variable(f, n - 1, i).scaled(curve.rho));
  }
  h.push_back(SparsePoly::constant(f, n - 1, curve.a[n - 1]) + curve.g.scaled(curve.rho));
  return h;
}

Certificate check_derivs_zero(const SparsePoly& poly, const Curve& curve, const DerivParams& params) {
  const Field& f = poly.field();
  if (!(curve.g.field() == f)) fail(ErrorCode::MixedFields, "curve and polynomial fields differ");
  if (curve.g.arity() + 1 != poly.arity()) {
    fail(ErrorCode::ArityMismatch, "g must have one variable fewer than P");
  }
  check_curve(curve);

  const Degree gdeg = curve.g.degree();
  if (gdeg.is_neg_infinity() || gdeg.value() < 2 || gdeg.value() >= static_cast<std::int64_t>(f.q())) {
    precondition("ell = deg(g) must satisfy 2 <= ell < q, got " + gdeg.to_string());
  }
  const auto ell = static_cast<std::uint32_t>(gdeg.value());
  if (poly.is_zero()) precondition("P must be nonzero");
  if (poly.degree().value() > static_cast<std::int64_t>(params.D)) {
    precondition("deg(P) = " + poly.degree().to_string() + " exceeds D = " + std::to_string(params.D));
  }
  if (auto w = first_inequality_failure(f.q(), ell, params.D, params.M, params.k)) {
    precondition("ell(D-w) < (M-w)q fails at w = " + std::to_string(*w) + ": " +
                 std::to_string(ell) + "*(" + std::to_string(params.D) + "-" + std::to_string(*w) +
                 ") >= (" + std::to_string(params.M) + "-" + std::to_string(*w) + ")*" +
                 std::to_string(f.q()));
  }
  const auto pts = curve_points(curve);
  const auto vr = vanishes_with_mult(poly, pts, params.M);
  if (!vr.ok) {
    precondition("P does not vanish with multiplicity " + std::to_string(params.M) + " at " +
                 to_json(f, *vr.point).dump() + " (beta " + vr.beta->to_string() + ")");
  }

  Certificate cert;
  cert.check = "derivs_zero";
  cert.inputs["P"] = to_json(poly);
  Json c;
  c["a"] = to_json(f, curve.a);
  c["rho"] = to_json(f, curve.rho);
  c["g"] = to_json(curve.g);
  cert.inputs["curve"] = std::move(c);
  cert.inputs["k"] = params.k;
  cert.inputs["D"] = params.D;
  cert.inputs["M"] = params.M;

  Json pre;
  pre["step"] = "preconditions";
  pre["ell"] = ell;
  pre["deg_P"] = poly.degree().value();
  pre["curve_points"] = pts.size();
  cert.steps.push_back(std::move(pre));

  const auto h = curve_map(curve);
  if (params.k == 0) return cert;
  for (const auto& beta : indices_up_to(poly.arity(), static_cast<std::uint32_t>(params.k - 1))) {
    const SparsePoly composed = compose(hasse_derivative(poly, beta), h);
    Json s;
    s["step"] = "composed_derivative";
    s["beta"] = to_json(beta);
    s["zero"] = composed.is_zero();
    if (!composed.is_zero()) {
      s["poly"] = to_json(composed);
      if (cert.pass) {
        cert.pass = false;
        Json w;
        w["beta"] = to_json(beta);
        w["composed"] = to_json(composed);
        cert.witness = std::move(w);
      }
    }
    cert.steps.push_back(std::move(s));
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Weighted-homogeneous polynomials

std::optional<std::pair<MultiIndex, Elem>> proposition_witness(const SparsePoly& q_poly,
                                                               const SparsePoly& f, std::uint64_t k) {
  const Field& fd = q_poly.field();
  const std::size_t n = q_poly.arity();
  if (k == 0) return std::nullopt;
  std::vector<std::vector<SparsePoly>> maps;
  for (auto rho : fd.nonzero_elements()) maps.push_back(curve_map(Curve{Point(n, fd.zero()), rho, f}));
  for (const auto& beta : indices_up_to(n, static_cast<std::uint32_t>(k - 1))) {
    const SparsePoly d = hasse_derivative(q_poly, beta);
    if (d.is_zero()) continue;
    const auto rhos = fd.nonzero_elements();
    for (std::size_t i = 0; i < rhos.size(); ++i) {
      if (!compose(d, maps[i]).is_zero()) return std::make_pair(beta, rhos[i]);
    }
  }
  return std::nullopt;
}

namespace {

// Nonzero weighted-homogeneous polynomial of total degree < cap.
SparsePoly weighted_homogeneous_below(const Field& field, std::size_t n, std::uint32_t ell,
                                      std::uint64_t cap, Rng& rng) {
  const std::uint64_t max_m = static_cast<std::uint64_t>(ell) * (cap - 1);
  for (;;) {
    const std::uint64_t m = rng.below(max_m + 1);
    std::vector<MultiIndex> support;
    for (std::uint64_t an = 0; an * ell <= m; ++an) {
      const std::uint64_t rest = m - an * ell;
      if (rest + an >= cap) continue;
      for (auto head : indices_of_total(n - 1, static_cast<std::uint32_t>(rest))) {
        std::vector<std::uint32_t> e(head.exps().begin(), head.exps().end());
        e.push_back(static_cast<std::uint32_t>(an));
        support.emplace_back(std::move(e));
      }
    }
    if (support.empty()) continue;
    SparsePoly q(field, n);
    for (const auto& a : support) {
      if (rng.chance(1, 2)) q.add_term(a, random_nonzero(field, rng));
    }
    if (q.is_zero()) q.add_term(support[rng.below(support.size())], random_nonzero(field, rng));
    return q;
  }
}

}  // namespace

SparsePoly random_weighted_homogeneous(const Field& field, std::size_t n, std::uint32_t ell,
                                       std::uint64_t k, Rng& rng) {
  if (n < 2) fail(ErrorCode::DimensionMismatch, "n must be >= 2");
  if (ell < 2) fail(ErrorCode::BadEll, "ell must be >= 2");
  const std::uint64_t cap = degree_cap(field, k);
  if (cap < 1) fail(ErrorCode::InvalidArgument, "k(q-1) must be positive");
  return weighted_homogeneous_below(field, n, ell, cap, rng);
}

Certificate check_proposition(std::uint64_t trials, const Field& field, std::size_t n,
                              std::uint32_t ell, std::uint64_t k, const SparsePoly& f,
                              std::uint64_t seed, unsigned jobs) {
  if (n < 2) fail(ErrorCode::DimensionMismatch, "n must be >= 2");
  if (ell < 2) fail(ErrorCode::BadEll, "ell must be >= 2");
  if (!(f.field() == field)) fail(ErrorCode::MixedFields, "f over a different field");
  if (f.arity() != n - 1) fail(ErrorCode::ArityMismatch, "f must have n-1 variables");
  if (!f.is_homogeneous_of_degree(ell)) {
    fail(ErrorCode::InvalidArgument, "f must be nonzero and homogeneous of degree ell");
  }
  if (degree_cap(field, k) < 2) fail(ErrorCode::InvalidArgument, "need k(q-1) >= 2");

  Certificate cert;
  cert.check = "proposition";
  cert.seed = seed;
  cert.inputs["field"] = to_json(field);
  cert.inputs["n"] = n;
  cert.inputs["ell"] = ell;
  cert.inputs["k"] = k;
  cert.inputs["f"] = to_json(f);
  cert.inputs["trials"] = trials;

  struct Outcome {
    Json step;
    bool ok = true;
  };
  auto results = parallel_map<Outcome>(trials, jobs, [&](std::uint64_t t) {
    Rng rng = Rng::derive(seed, t);
    // Half the trials use Q = (x_n - f(x')) R, which vanishes identically
    // along rho = 1, so a witness must come from another rho or beta.
    const std::uint64_t cap = degree_cap(field, k);
    const bool along_graph = cap > ell && rng.chance(1, 2);
    SparsePoly q = random_weighted_homogeneous(field, n, ell, k, rng);
    if (along_graph) {
      SparsePoly lifted(field, n);
      for (const auto& [e, c] : f.terms()) {
        std::vector<std::uint32_t> x(e.exps().begin(), e.exps().end());
        x.push_back(0);
        lifted.add_term(MultiIndex(std::move(x)), c);
      }
      const SparsePoly graph = SparsePoly::variable(field, n, n - 1) - lifted;
      q = graph * weighted_homogeneous_below(field, n, ell, cap - ell, rng);
    }
    Outcome o;
    o.step["trial"] = t;
    o.step["vanishes_at_rho_1"] = along_graph;
    o.step["weighted_degree"] = weighted_degree(q.terms().begin()->first, ell);
    o.step["Q"] = to_json(q);
    if (auto w = proposition_witness(q, f, k)) {
      Json j;
      j["beta"] = to_json(w->first);
      j["rho"] = to_json(field, w->second);
      o.step["witness"] = std::move(j);
    } else {
      o.ok = false;
      o.step["witness"] = nullptr;
    }
    return o;
  });
  for (auto& r : results) {
    if (!r.ok && cert.pass) {
      cert.pass = false;
      cert.witness = r.step["Q"];
    }
    cert.steps.push_back(std::move(r.step));
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Counting argument on generated sets

namespace {

Json big(unsigned __int128 v) {
  if (v <= UINT64_MAX) return Json(static_cast<std::uint64_t>(v));
  return Json(to_decimal(v));
}

// binom(a, b) in 128 bits; SizeGuard on overflow.
unsigned __int128 binom128(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
  for (std::uint64_t i = 1; i <= b; ++i) {
    // r * (a - b + i) / i stays integral at every step.
    if (r > limit / (a - b + i)) fail(ErrorCode::SizeGuard, "binomial exceeds 128 bits");
    r = r * (a - b + i) / i;
  }
  return r;
}

Certificate counting_certificate(const std::string& name, const BrkInstance& inst, std::uint64_t k) {
  const Field& f = inst.field();
  const std::size_t n = inst.dimension();
  const ProofParams pp = proof_params(f.q(), inst.ell(), k);
  if (pp.D > UINT32_MAX || pp.M > UINT32_MAX) fail(ErrorCode::SizeGuard, "D or M out of range");

  Certificate cert;
  cert.check = name;
  cert.inputs["q"] = f.q();
  cert.inputs["k"] = k;
  cert.inputs["instance"] = to_json(inst);

  Json params;
  params["step"] = "parameters";
  params["D"] = pp.D;
  params["M"] = pp.M;
  params["ell_D_lt_Mq"] = static_cast<unsigned __int128>(inst.ell()) * pp.D <
                          static_cast<unsigned __int128>(pp.M) * f.q();
  params["inequality_all_w"] = !first_inequality_failure(f.q(), inst.ell(), pp.D, pp.M, k).has_value();
  cert.steps.push_back(params);

  const PointSet s = generate_set(inst);
  const auto ver = verify_brk(s, inst);
  Json set_step;
  set_step["step"] = "generate_set";
  set_step["size"] = s.size();
  set_step["contains_all_surfaces"] = ver.ok;
  cert.steps.push_back(std::move(set_step));
  if (!ver.ok) {
    cert.pass = false;
    cert.witness = Json{{"missing", to_json(f, *ver.missing)}};
  }

  const unsigned __int128 lhs = binom128(pp.M + n - 1, n) * s.size();
  const unsigned __int128 rhs = binom128(pp.D + n, n);
  Json count;
  count["step"] = "counting_inequality";
  count["lhs"] = big(lhs);
  count["rhs"] = big(rhs);
  count["holds"] = lhs >= rhs;
  cert.steps.push_back(std::move(count));
  if (lhs < rhs && cert.pass) {
    cert.pass = false;
    cert.witness = Json{{"lhs", big(lhs)}, {"rhs", big(rhs)}};
  }

  const VanishProblem problem(f, n, s.points(), static_cast<std::uint32_t>(pp.D),
                              static_cast<std::uint32_t>(pp.M));
  const LinearSystem sys = build_system(problem);
  const std::size_t r = rank(sys.matrix);
  Json null;
  null["step"] = "nullspace";
  null["rows"] = sys.matrix.rows();
  null["unknowns"] = sys.matrix.cols();
  null["rank"] = r;
  null["trivial"] = r == sys.matrix.cols();
  cert.steps.push_back(std::move(null));
  if (r != sys.matrix.cols() && cert.pass) {
    cert.pass = false;
    cert.witness = to_json(*find_vanishing_poly(problem));
  }
  return cert;
}

}  // namespace

Certificate check_warmup(std::uint32_t q, std::uint64_t k, const std::optional<BrkInstance>& instance) {
  if (q <= 2) precondition("q > 2 required, got q = " + std::to_string(q));
  const Field f = Field::of_order(q);
  const SparsePoly square = SparsePoly::monomial(f, MultiIndex{2}, f.one());
  if (k == 0 || k % q != 0) {
    fail(ErrorCode::NotMultipleOfQ,
         "k=" + std::to_string(k) + " is not a positive multiple of q=" + std::to_string(q));
  }
  if (instance) {
    if (!(instance->field() == f)) fail(ErrorCode::MixedFields, "instance field differs from F_q");
    if (instance->dimension() != 2 || instance->ell() != 2 || !(instance->g() == square)) {
      fail(ErrorCode::InvalidArgument, "warm-up instance must be planar with g = s^2");
    }
    for (const auto& c : instance->per_rho()) {
      if (!c.lower.is_zero()) fail(ErrorCode::InvalidArgument, "warm-up instance takes no lower part");
    }
  }
  const BrkInstance inst = instance ? *instance : BrkInstance::uniform(f, 2, 2, square);
  return counting_certificate("warmup", inst, k);
}

Certificate check_theorem_instance(const BrkInstance& inst, std::uint64_t k) {
  return counting_certificate("theorem_instance", inst, k);
}

// ---------------------------------------------------------------------------
// Exponent bookkeeping

std::map<std::uint64_t, std::vector<MultiIndex>> weighted_partition(std::span<const MultiIndex> indices,
                                                                    std::uint32_t ell) {
  if (ell < 2) fail(ErrorCode::BadEll, "ell must be >= 2, got " + std::to_string(ell));
  std::map<std::uint64_t, std::vector<MultiIndex>> out;
  for (const auto& a : indices) out[weighted_degree(a, ell)].push_back(a);
  for (auto& [j, group] : out) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
  return out;
}

std::map<MultiIndex, std::vector<MultiIndex>> lex_classes(std::span<const MultiIndex> indices,
                                                          const MultiIndex& e) {
  std::map<MultiIndex, std::vector<MultiIndex>> out;
  for (const auto& a : indices) {
    if (a.arity() != e.arity() + 1) fail(ErrorCode::ArityMismatch, "e must have arity n-1");
    std::vector<std::uint32_t> key(e.arity());
    for (std::size_t i = 0; i < e.arity(); ++i) key[i] = a[i] + a[e.arity()] * e[i];
    out[MultiIndex(std::move(key))].push_back(a);
  }
  for (auto& [key, group] : out) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
  return out;
}

bool distinct_totals(std::span<const MultiIndex> group) {
  std::set<std::uint64_t> seen;
  for (const auto& a : group) {
    if (!seen.insert(a.total()).second) return false;
  }
  return true;
}

}  // namespace ffkakeya
