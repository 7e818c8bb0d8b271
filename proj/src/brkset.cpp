#include "ffkakeya/brkset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <thread>

#include "ffkakeya/error.hpp"
#include "ffkakeya/multiplicity.hpp"
#include "ffkakeya/rng.hpp"

namespace ffkakeya {

// ---------------------------------------------------------------------------
// PointSet / BrkInstance

PointSet::PointSet(Field field, std::size_t n, std::vector<Point> points)
    : field_(std::move(field)), n_(n), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.size() != n_) fail(ErrorCode::DimensionMismatch, "point dimension differs from set");
    for (auto x : p) {
      if (!field_.contains(x)) fail(ErrorCode::MixedFields, "point coordinate not in field");
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool operator==(const PointSet& a, const PointSet& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.points_ == b.points_;
}

BrkInstance::BrkInstance(Field field, std::size_t n, std::uint32_t ell, SparsePoly g,
                         std::vector<RhoChoice> per_rho)
    : field_(std::move(field)), n_(n), ell_(ell), g_(std::move(g)), per_rho_(std::move(per_rho)) {
  if (n_ < 2) fail(ErrorCode::DimensionMismatch, "dimension must be >= 2");
  if (ell_ < 2 || ell_ >= field_.q()) {
    fail(ErrorCode::EllOutOfRange, "need 2 <= ell < q, got ell=" + std::to_string(ell_));
  }
  if (!(g_.field() == field_)) fail(ErrorCode::MixedFields, "g over a different field");
  if (g_.arity() != n_ - 1) fail(ErrorCode::ArityMismatch, "g must have n-1 variables");
  if (!g_.is_homogeneous_of_degree(ell_)) {
    fail(ErrorCode::InvalidArgument, "g must be nonzero and homogeneous of degree ell");
  }
  if (per_rho_.size() != field_.q()) {
    fail(ErrorCode::InvalidArgument, "need exactly q per-rho entries, got " +
                                         std::to_string(per_rho_.size()));
  }
  for (const auto& c : per_rho_) {
    if (c.a.size() != n_) fail(ErrorCode::DimensionMismatch, "translation has wrong dimension");
    for (auto x : c.a) {
      if (!field_.contains(x)) fail(ErrorCode::MixedFields, "translation not in field");
    }
    if (!(c.lower.field() == field_)) fail(ErrorCode::MixedFields, "lower part over another field");
    if (c.lower.arity() != n_ - 1) fail(ErrorCode::ArityMismatch, "lower part needs n-1 variables");
    if (c.lower.degree() >= Degree(ell_)) {
      fail(ErrorCode::InvalidArgument, "lower part must have degree < ell");
    }
  }
}

BrkInstance BrkInstance::uniform(const Field& field, std::size_t n, std::uint32_t ell,
                                 const SparsePoly& g) {
  std::vector<RhoChoice> per_rho;
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    per_rho.push_back({Point(n, field.zero()), SparsePoly(field, n >= 1 ? n - 1 : 0)});
  }
  return BrkInstance(field, n, ell, g, std::move(per_rho));
}

SparsePoly BrkInstance::g_rho(Elem rho) const { return g_ + choice(rho).lower; }

std::vector<Point> surface_points(const BrkInstance& inst, Elem rho) {
  const Field& f = inst.field();
  const std::size_t n = inst.dimension();
  const RhoChoice& ch = inst.choice(rho);
  const SparsePoly gr = inst.g_rho(rho);
  std::vector<Point> out;
  if (f.is_zero(rho)) {
    out.push_back(ch.a);
    return out;
  }
  for (const auto& lam : all_points(f, n - 1)) {
    Point p(n);
    for (std::size_t i = 0; i + 1 < n; ++i) p[i] = f.add(ch.a[i], f.mul(rho, lam[i]));
    p[n - 1] = f.add(ch.a[n - 1], f.mul(rho, gr.evaluate(lam)));
    out.push_back(std::move(p));
  }
  return out;
}

PointSet generate_set(const BrkInstance& inst) {
  std::vector<Point> pts;
  for (auto rho : inst.field().elements()) {
    auto s = surface_points(inst, rho);
    pts.insert(pts.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  return PointSet(inst.field(), inst.dimension(), std::move(pts));
}

BrkVerification verify_brk(const PointSet& set, const BrkInstance& inst) {
  if (!(set.field() == inst.field())) fail(ErrorCode::MixedFields, "set and instance fields differ");
  if (set.dimension() != inst.dimension()) {
    fail(ErrorCode::DimensionMismatch, "set and instance dimensions differ");
  }
  BrkVerification result;
  for (auto rho : inst.field().elements()) {
    for (auto& p : surface_points(inst, rho)) {
      if (!set.contains(p)) {
        result.ok = false;
        result.rho = rho;
        result.missing = std::move(p);
        return result;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Bounds and parameters

std::string to_decimal(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::string TheoremBound::fraction() const { return to_decimal(num) + "/" + to_decimal(den); }

double TheoremBound::approx() const { return static_cast<double>(num) / static_cast<double>(den); }

namespace {

void check_ell(std::uint32_t q, std::uint32_t ell) {
  if (ell < 2 || ell >= q) {
    fail(ErrorCode::EllOutOfRange,
         "need 2 <= ell < q, got ell=" + std::to_string(ell) + " q=" + std::to_string(q));
  }
}

unsigned __int128 checked_pow(unsigned __int128 base, std::uint32_t e) {
  unsigned __int128 r = 1;
  const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
  for (std::uint32_t i = 0; i < e; ++i) {
    if (base != 0 && r > limit / base) fail(ErrorCode::SizeGuard, "bound exceeds 128-bit range");
    r *= base;
  }
  return r;
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TheoremBound theorem_bound(std::uint32_t q, std::uint32_t n, std::uint32_t ell) {
  check_ell(q, ell);
  if (n < 2) fail(ErrorCode::DimensionMismatch, "dimension must be >= 2");
  const unsigned __int128 base_num = static_cast<unsigned __int128>(q - 1) * q;
  const unsigned __int128 base_den = static_cast<unsigned __int128>(ell + 1) * q - 2ull * ell;
  const auto g = gcd128(base_num, base_den);
  TheoremBound b;
  b.num = checked_pow(base_num / g, n);
  b.den = checked_pow(base_den / g, n);
  const unsigned __int128 c = (b.num + b.den - 1) / b.den;
  if (c > UINT64_MAX) fail(ErrorCode::SizeGuard, "bound ceiling exceeds 64 bits");
  b.ceiling = static_cast<std::uint64_t>(c);
  return b;
}

std::optional<std::uint64_t> first_inequality_failure(std::uint32_t q, std::uint32_t ell,
                                                      std::uint64_t D, std::uint64_t M,
                                                      std::uint64_t k) {
  for (std::uint64_t w = 0; w < k; ++w) {
    // ell (D - w) < (M - w) q, in signed arithmetic since D - w may be negative.
    const __int128 lhs = static_cast<__int128>(ell) * (static_cast<__int128>(D) - w);
    const __int128 rhs = (static_cast<__int128>(M) - w) * q;
    if (!(lhs < rhs)) return w;
  }
  return std::nullopt;
}

ProofParams proof_params(std::uint32_t q, std::uint32_t ell, std::uint64_t k) {
  check_ell(q, ell);
  if (k == 0 || k % q != 0) {
    fail(ErrorCode::NotMultipleOfQ,
         "k=" + std::to_string(k) + " is not a positive multiple of q=" + std::to_string(q));
  }
  ProofParams pp;
  pp.k = k;
  pp.D = k * (q - 1) - 1;
  pp.M = (ell + 1ull) * k - 2ull * ell * (k / q);
  if (pp.M < 1) fail(ErrorCode::InvariantViolation, "multiplicity M < 1");
  if (auto w = first_inequality_failure(q, ell, pp.D, pp.M, k)) {
    fail(ErrorCode::InvariantViolation,
         "degree/multiplicity inequality fails at w=" + std::to_string(*w));
  }
  return pp;
}

// ---------------------------------------------------------------------------
// Minimal-set search

namespace {

// Enumerates the per-rho choices (a, lower) of a search. Choice index
// idx = rank(a) * q^L + rank(lower coefficients), both ranks lex in code
// order, with lower coefficients listed in degree-then-lex monomial order.
class ChoiceSpace {
 public:
  ChoiceSpace(const Field& f, std::size_t n, std::uint32_t ell, const SparsePoly& g)
      : f_(f), n_(n), q_(f.q()), monomials_(indices_up_to(n - 1, ell - 1)),
        lambdas_(all_points(f, n - 1)) {
    point_count_ = 1;
    for (std::size_t i = 0; i < n; ++i) point_count_ *= q_;
    a_count_ = point_count_;
    lower_count_ = 1;
    for (std::size_t j = 0; j < monomials_.size(); ++j) {
      if (lower_count_ > (UINT64_MAX / q_)) {
        lower_count_ = UINT64_MAX;
        break;
      }
      lower_count_ *= q_;
    }
    g_vals_.reserve(lambdas_.size());
    for (const auto& lam : lambdas_) g_vals_.push_back(g.evaluate(lam));
    mono_vals_.assign(monomials_.size(), {});
    for (std::size_t j = 0; j < monomials_.size(); ++j) {
      const auto mono = SparsePoly::monomial(f, monomials_[j], f.one());
      for (const auto& lam : lambdas_) mono_vals_[j].push_back(mono.evaluate(lam));
    }
  }

  std::uint64_t point_count() const { return point_count_; }
  std::uint64_t choices_per_rho() const {
    if (lower_count_ == UINT64_MAX || a_count_ > UINT64_MAX / lower_count_) return UINT64_MAX;
    return a_count_ * lower_count_;
  }
  std::size_t lower_terms() const { return monomials_.size(); }

  RhoChoice decode(std::uint64_t idx) const {
    std::vector<Elem> coeffs(monomials_.size());
    for (std::size_t j = monomials_.size(); j-- > 0;) {
      coeffs[j] = Elem{static_cast<std::uint32_t>(idx % q_)};
      idx /= q_;
    }
    Point a(n_);
    for (std::size_t i = n_; i-- > 0;) {
      a[i] = Elem{static_cast<std::uint32_t>(idx % q_)};
      idx /= q_;
    }
    SparsePoly lower(f_, n_ - 1);
    for (std::size_t j = 0; j < monomials_.size(); ++j) lower.add_term(monomials_[j], coeffs[j]);
    return {std::move(a), std::move(lower)};
  }

  std::uint32_t rank(const Point& p) const {
    std::uint32_t r = 0;
    for (auto x : p) r = r * q_ + x.code;
    return r;
  }

  /// Ranks of the surface points for rho under choice idx (duplicates kept
  /// out: for rho != 0 the map lam -> point is injective).
  void surface(Elem rho, std::uint64_t idx, std::vector<std::uint32_t>& out) const {
    out.clear();
    std::vector<Elem> coeffs(monomials_.size());
    for (std::size_t j = monomials_.size(); j-- > 0;) {
      coeffs[j] = Elem{static_cast<std::uint32_t>(idx % q_)};
      idx /= q_;
    }
    Point a(n_);
    for (std::size_t i = n_; i-- > 0;) {
      a[i] = Elem{static_cast<std::uint32_t>(idx % q_)};
      idx /= q_;
    }
    if (f_.is_zero(rho)) {
      out.push_back(rank(a));
      return;
    }
    Point p(n_);
    for (std::size_t l = 0; l < lambdas_.size(); ++l) {
      const auto& lam = lambdas_[l];
      Elem v = g_vals_[l];
      for (std::size_t j = 0; j < monomials_.size(); ++j) {
        if (!f_.is_zero(coeffs[j])) v = f_.add(v, f_.mul(coeffs[j], mono_vals_[j][l]));
      }
      for (std::size_t i = 0; i + 1 < n_; ++i) p[i] = f_.add(a[i], f_.mul(rho, lam[i]));
      p[n_ - 1] = f_.add(a[n_ - 1], f_.mul(rho, v));
      out.push_back(rank(p));
    }
  }

 private:
  Field f_;
  std::size_t n_;
  std::uint32_t q_;
  std::vector<MultiIndex> monomials_;
  std::vector<Point> lambdas_;
  std::vector<Elem> g_vals_;
  std::vector<std::vector<Elem>> mono_vals_;
  std::uint64_t point_count_ = 0;
  std::uint64_t a_count_ = 0;
  std::uint64_t lower_count_ = 0;
};

using Bits = std::vector<std::uint64_t>;

struct Surface {
  Bits bits;
  std::uint64_t choice;  // first (smallest) choice index producing it
};

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

struct Best {
  std::uint64_t size = UINT64_MAX;
  std::vector<std::uint64_t> config;  // choice index per rho code
};

bool better(const Best& a, const Best& b) {
  if (a.size != b.size) return a.size < b.size;
  return a.config < b.config;
}

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(std::vector<std::vector<Surface>> per_rho, std::size_t words)
      : per_rho_(std::move(per_rho)), words_(words) {}

  Best run_block(std::size_t first_choice) {
    Best best;
    std::vector<std::uint64_t> config(per_rho_.size());
    std::vector<Bits> acc(per_rho_.size() + 1, Bits(words_, 0));
    const Surface& s = per_rho_[0][first_choice];
    config[0] = s.choice;
    for (std::size_t w = 0; w < words_; ++w) acc[1][w] = s.bits[w];
    dfs(1, acc, config, best);
    return best;
  }

  std::size_t first_level_size() const { return per_rho_[0].size(); }

 private:
  void dfs(std::size_t level, std::vector<Bits>& acc, std::vector<std::uint64_t>& config,
           Best& best) {
    const std::size_t current = popcount(acc[level]);
    if (current >= best.size) return;
    if (level == per_rho_.size()) {
      best.size = current;
      best.config = config;
      return;
    }
    for (const Surface& s : per_rho_[level]) {
      for (std::size_t w = 0; w < words_; ++w) acc[level + 1][w] = acc[level][w] | s.bits[w];
      config[level] = s.choice;
      dfs(level + 1, acc, config, best);
    }
  }

  std::vector<std::vector<Surface>> per_rho_;
  std::size_t words_;
};

BrkInstance instance_from_config(const Field& f, std::size_t n, std::uint32_t ell,
                                 const SparsePoly& g, const ChoiceSpace& space,
                                 const std::vector<std::uint64_t>& config) {
  std::vector<RhoChoice> per_rho;
  per_rho.reserve(config.size());
  for (auto idx : config) per_rho.push_back(space.decode(idx));
  return BrkInstance(f, n, ell, g, std::move(per_rho));
}

SearchResult exhaustive_search(const Field& f, std::size_t n, std::uint32_t ell,
                               const SparsePoly& g, const SearchOptions& options) {
  if (n != 2) fail(ErrorCode::SearchSpaceTooLarge, "exhaustive search supports n = 2 only");
  const ChoiceSpace space(f, n, ell, g);
  const std::uint32_t q = f.q();
  const std::uint64_t per = space.choices_per_rho();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < q; ++i) {
    if (per != 0 && total > kMaxExhaustiveConfigurations / per) {
      fail(ErrorCode::SearchSpaceTooLarge, "configuration count exceeds 10^8");
    }
    total *= per;
  }

  const std::size_t words = (space.point_count() + 63) / 64;
  std::vector<std::vector<Surface>> per_rho(q);
  std::vector<std::uint32_t> pts;
  for (std::uint32_t r = 0; r < q; ++r) {
    std::vector<Surface>& list = per_rho[r];
    std::set<Bits> seen;
    for (std::uint64_t idx = 0; idx < per; ++idx) {
      space.surface(Elem{r}, idx, pts);
      Bits bits(words, 0);
      for (auto p : pts) bits[p / 64] |= 1ull << (p % 64);
      if (!seen.insert(bits).second) continue;
      list.push_back({std::move(bits), idx});
    }
  }

  ExhaustiveSearch search(std::move(per_rho), words);
  const std::size_t blocks = search.first_level_size();
  std::vector<Best> results(blocks);
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(blocks)));
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      for (std::size_t b = j; b < blocks; b += jobs) results[b] = search.run_block(b);
    });
  }
  for (auto& w : workers) w.join();

  Best best;
  for (const auto& r : results) {
    if (r.size != UINT64_MAX && better(r, best)) best = r;
  }
  SearchResult out{best.size, instance_from_config(f, n, ell, g, space, best.config), true, total,
                   theorem_bound(q, static_cast<std::uint32_t>(n), ell)};
  return out;
}

constexpr std::uint64_t kMaxGreedyChoices = 1u << 16;
constexpr unsigned kMaxImprovementPasses = 16;

SearchResult greedy_search(const Field& f, std::size_t n, std::uint32_t ell, const SparsePoly& g,
                           const SearchOptions& options) {
  const ChoiceSpace space(f, n, ell, g);
  const std::uint32_t q = f.q();
  if (space.point_count() > 50'000'000) fail(ErrorCode::SearchSpaceTooLarge, "q^n too large");
  const std::uint64_t per = space.choices_per_rho();

  Best best;
  const unsigned restarts = std::max(1u, options.restarts);
  std::vector<std::uint32_t> pts;
  for (unsigned r = 0; r < restarts; ++r) {
    Rng rng = Rng::derive(options.seed, r);
    // Candidate choice indices, sampled when the space is large.
    std::vector<std::uint64_t> candidates;
    if (per <= kMaxGreedyChoices) {
      candidates.resize(per);
      std::iota(candidates.begin(), candidates.end(), 0);
    } else {
      for (std::uint64_t i = 0; i < kMaxGreedyChoices; ++i) candidates.push_back(rng.below(per));
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    std::vector<std::uint32_t> order(q);
    std::iota(order.begin(), order.end(), 0);
    for (std::uint32_t i = q; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    std::vector<std::uint32_t> cover(space.point_count(), 0);
    std::vector<std::uint64_t> config(q, 0);
    auto apply = [&](std::uint32_t rho, std::uint64_t idx, int delta) {
      space.surface(Elem{rho}, idx, pts);
      for (auto p : pts) cover[p] = static_cast<std::uint32_t>(static_cast<int>(cover[p]) + delta);
    };
    auto best_choice = [&](std::uint32_t rho) {
      std::uint64_t best_idx = 0;
      std::uint64_t best_new = UINT64_MAX;
      for (auto idx : candidates) {
        space.surface(Elem{rho}, idx, pts);
        std::uint64_t fresh = 0;
        for (auto p : pts) fresh += cover[p] == 0;
        if (fresh < best_new) {
          best_new = fresh;
          best_idx = idx;
        }
      }
      return std::make_pair(best_idx, best_new);
    };

    for (auto rho : order) {
      config[rho] = best_choice(rho).first;
      apply(rho, config[rho], +1);
    }
    for (unsigned pass = 0; pass < kMaxImprovementPasses; ++pass) {
      bool improved = false;
      for (auto rho : order) {
        apply(rho, config[rho], -1);
        space.surface(Elem{rho}, config[rho], pts);
        std::uint64_t current = 0;
        for (auto p : pts) current += cover[p] == 0;
        auto [idx, fresh] = best_choice(rho);
        if (fresh < current) {
          config[rho] = idx;
          improved = true;
        }
        apply(rho, config[rho], +1);
      }
      if (!improved) break;
    }
    Best cand;
    cand.size = static_cast<std::uint64_t>(std::count_if(cover.begin(), cover.end(),
                                                         [](std::uint32_t c) { return c != 0; }));
    cand.config = config;
    if (best.config.empty() || cand.size < best.size) best = cand;
  }
  std::uint64_t total = UINT64_MAX;
  {
    unsigned __int128 t = 1;
    bool overflow = false;
    for (std::uint32_t i = 0; i < q && !overflow; ++i) {
      t *= per;
      overflow = t > UINT64_MAX || per == UINT64_MAX;
    }
    if (!overflow) total = static_cast<std::uint64_t>(t);
  }
  return SearchResult{best.size, instance_from_config(f, n, ell, g, space, best.config), false,
                      total, theorem_bound(q, static_cast<std::uint32_t>(n), ell)};
}

}  // namespace

SearchResult min_brk_search(const Field& field, std::size_t n, std::uint32_t ell,
                            const SparsePoly& g, const SearchOptions& options) {
  check_ell(field.q(), ell);
  if (n < 2) fail(ErrorCode::DimensionMismatch, "dimension must be >= 2");
  if (!(g.field() == field)) fail(ErrorCode::MixedFields, "g over a different field");
  if (g.arity() != n - 1) fail(ErrorCode::ArityMismatch, "g must have n-1 variables");
  if (!g.is_homogeneous_of_degree(ell)) {
    fail(ErrorCode::InvalidArgument, "g must be nonzero and homogeneous of degree ell");
  }
  SearchResult result = options.mode == SearchMode::Exhaustive
                            ? exhaustive_search(field, n, ell, g, options)
                            : greedy_search(field, n, ell, g, options);
  if (generate_set(result.witness).size() != result.min_size) {
    fail(ErrorCode::InvariantViolation, "witness does not reproduce the reported size");
  }
  if (result.min_size < result.bound.ceiling) {
    fail(ErrorCode::InvariantViolation,
         "set of size " + std::to_string(result.min_size) + " beats the lower bound " +
             result.bound.fraction());
  }
  return result;
}

// ---------------------------------------------------------------------------
// Kakeya sets

namespace {

std::vector<Point> besicovitch_points(const Field& f, std::size_t n) {
  if (n == 1) {
    std::vector<Point> line;
    for (auto x : f.elements()) line.push_back({x});
    return line;
  }
  std::vector<Point> out;
  for (const auto& b : all_points(f, n - 1)) {
    for (auto t : f.elements()) {
      Point p(n);
      for (std::size_t i = 0; i + 1 < n; ++i) p[i] = f.add(f.mul(t, b[i]), f.mul(b[i], b[i]));
      p[n - 1] = t;
      out.push_back(std::move(p));
    }
  }
  for (auto& p : besicovitch_points(f, n - 1)) {
    p.push_back(f.zero());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

PointSet kakeya_set(const Field& field, std::size_t n, bool besicovitch) {
  if (n < 2) fail(ErrorCode::DimensionMismatch, "dimension must be >= 2");
  PointSet set = besicovitch ? PointSet(field, n, besicovitch_points(field, n))
                             : PointSet(field, n, all_points(field, n));
  const auto check = verify_kakeya(set);
  if (!check.ok) fail(ErrorCode::InvariantViolation, "constructed set misses a direction");
  return set;
}

KakeyaVerification verify_kakeya(const PointSet& set) {
  const Field& f = set.field();
  const std::size_t n = set.dimension();
  KakeyaVerification result;
  for (const auto& b : all_points(f, n)) {
    // One representative per direction: first nonzero coordinate equal to 1.
    auto nz = std::find_if(b.begin(), b.end(), [&](Elem x) { return !f.is_zero(x); });
    if (nz == b.end() || *nz != f.one()) continue;
    bool found = false;
    for (const auto& a : set.points()) {
      bool line = true;
      Point p(n);
      for (auto t : f.elements()) {
        for (std::size_t i = 0; i < n; ++i) p[i] = f.add(a[i], f.mul(t, b[i]));
        if (!set.contains(p)) {
          line = false;
          break;
        }
      }
      if (line) {
        found = true;
        break;
      }
    }
    if (!found) {
      result.ok = false;
      result.direction = b;
      return result;
    }
  }
  return result;
}

}  // namespace ffkakeya
