#include "ffkakeya/multiplicity.hpp"

#include <algorithm>
#include <thread>

#include "ffkakeya/error.hpp"

namespace ffkakeya {

namespace {

void check_point(const SparsePoly& poly, std::span<const Elem> point) {
  if (point.size() != poly.arity()) {
    fail(ErrorCode::ArityMismatch, "point arity " + std::to_string(point.size()) +
                                       " vs polynomial arity " + std::to_string(poly.arity()));
  }
  for (auto x : point) {
    if (!poly.field().contains(x)) fail(ErrorCode::MixedFields, "point coordinate not in field");
  }
}

// Powers a_i^e for e <= max_exp, for each coordinate of a point.
class PointPowers {
 public:
  PointPowers(const Field& f, std::span<const Elem> point, std::uint32_t max_exp)
      : stride_(max_exp + 1), table_(point.size() * stride_) {
    for (std::size_t i = 0; i < point.size(); ++i) {
      Elem acc = f.one();
      for (std::uint32_t e = 0; e <= max_exp; ++e) {
        table_[i * stride_ + e] = acc;
        acc = f.mul(acc, point[i]);
      }
    }
  }
  Elem get(std::size_t i, std::uint32_t e) const { return table_[i * stride_ + e]; }

 private:
  std::size_t stride_;
  std::vector<Elem> table_;
};

std::uint32_t max_exponent(const SparsePoly& poly) {
  std::uint32_t m = 0;
  for (const auto& [e, c] : poly.terms()) {
    for (auto v : e.exps()) m = std::max(m, v);
  }
  return m;
}

Elem hasse_value(const SparsePoly& poly, const MultiIndex& beta, const PointPowers& pw) {
  const Field& f = poly.field();
  Elem acc = f.zero();
  for (const auto& [alpha, c] : poly.terms()) {
    if (!beta.le(alpha)) continue;
    const std::uint32_t b = binom_multi_mod(alpha, beta, f.p());
    if (b == 0) continue;
    Elem t = f.mul(c, f.from_int(b));
    for (std::size_t i = 0; i < alpha.arity() && !f.is_zero(t); ++i) {
      t = f.mul(t, pw.get(i, alpha[i] - beta[i]));
    }
    acc = f.add(acc, t);
  }
  return acc;
}

// First beta (by |beta|, then lex) of order < limit with P^(beta)(a) != 0.
std::optional<MultiIndex> first_nonvanishing(const SparsePoly& poly, const PointPowers& pw,
                                             std::uint64_t limit) {
  for (std::uint64_t w = 0; w < limit; ++w) {
    for (const auto& beta : indices_of_total(poly.arity(), static_cast<std::uint32_t>(w))) {
      if (!poly.field().is_zero(hasse_value(poly, beta, pw))) return beta;
    }
  }
  return std::nullopt;
}

}  // namespace

Elem hasse_value_at(const SparsePoly& poly, const MultiIndex& beta, std::span<const Elem> point) {
  check_point(poly, point);
  if (beta.arity() != poly.arity()) fail(ErrorCode::ArityMismatch, "derivative order arity");
  PointPowers pw(poly.field(), point, max_exponent(poly));
  return hasse_value(poly, beta, pw);
}

MultReport mult_at(const SparsePoly& poly, std::span<const Elem> point) {
  check_point(poly, point);
  MultReport report;
  report.point.assign(point.begin(), point.end());
  if (poly.is_zero()) return report;
  PointPowers pw(poly.field(), point, max_exponent(poly));
  const auto d = static_cast<std::uint64_t>(poly.degree().value());
  auto beta = first_nonvanishing(poly, pw, d + 1);
  if (!beta) fail(ErrorCode::InvariantViolation, "no nonvanishing derivative up to deg(P)");
  report.mult = beta->total();
  report.witness = std::move(beta);
  return report;
}

VanishResult vanishes_with_mult(const SparsePoly& poly, std::span<const Point> points,
                                std::uint64_t m) {
  VanishResult result;
  if (poly.is_zero()) {
    for (const auto& a : points) check_point(poly, a);
    return result;
  }
  const std::uint32_t max_exp = max_exponent(poly);
  for (const auto& a : points) {
    check_point(poly, a);
    PointPowers pw(poly.field(), a, max_exp);
    if (auto beta = first_nonvanishing(poly, pw, m)) {
      result.ok = false;
      result.point = a;
      result.beta = std::move(beta);
      return result;
    }
  }
  return result;
}

std::vector<Point> all_points(const Field& field, std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= field.q();
    if (count > kMaxAuditPoints) fail(ErrorCode::SizeGuard, "q^n exceeds 10^7");
  }
  std::vector<Point> out;
  out.reserve(count);
  Point cur(n, field.zero());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    out.push_back(cur);
    for (std::size_t i = n; i-- > 0;) {
      if (++cur[i].code < field.q()) break;
      cur[i].code = 0;
    }
  }
  return out;
}

SchwartzZippelAudit schwartz_zippel_audit(const SparsePoly& poly, std::span<const Elem> subset,
                                          unsigned jobs) {
  if (poly.is_zero()) fail(ErrorCode::ZeroPolynomial, "bound undefined for degree -infinity");
  const std::size_t n = poly.arity();
  const std::uint64_t size = subset.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= size;
    if (count > kMaxAuditPoints) fail(ErrorCode::SizeGuard, "|A|^n exceeds 10^7");
  }
  for (auto x : subset) {
    if (!poly.field().contains(x)) fail(ErrorCode::MixedFields, "subset element not in field");
  }

  std::uint64_t power = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) power *= size;

  SchwartzZippelAudit audit;
  audit.bound = static_cast<std::uint64_t>(poly.degree().value()) * power;

  const std::uint32_t max_exp = max_exponent(poly);
  auto partial = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t sum = 0;
    Point a(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = n; i-- > 0;) {
        a[i] = subset[rest % size];
        rest /= size;
      }
      PointPowers pw(poly.field(), a, max_exp);
      const auto d = static_cast<std::uint64_t>(poly.degree().value());
      auto beta = first_nonvanishing(poly, pw, d + 1);
      sum += beta->total();
    }
    return sum;
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  if (jobs == 1) {
    audit.total_mult = partial(0, count);
  } else {
    std::vector<std::uint64_t> sums(jobs, 0);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t begin = count * j / jobs;
      const std::uint64_t end = count * (j + 1) / jobs;
      workers.emplace_back([&, j, begin, end] { sums[j] = partial(begin, end); });
    }
    for (auto& w : workers) w.join();
    for (auto s : sums) audit.total_mult += s;
  }
  audit.ok = audit.total_mult <= audit.bound;
  return audit;
}

bool corollary_zero_check(const SparsePoly& poly, std::uint64_t m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "multiplicity must be >= 1");
  if (poly.is_zero()) return true;
  const auto d = static_cast<std::uint64_t>(poly.degree().value());
  if (d >= m * poly.field().q()) return true;
  const auto points = all_points(poly.field(), poly.arity());
  return !vanishes_with_mult(poly, points, m).ok;
}

}  // namespace ffkakeya
