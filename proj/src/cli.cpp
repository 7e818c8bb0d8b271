#include "ffkakeya/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "ffkakeya/brkset.hpp"
#include "ffkakeya/error.hpp"
#include "ffkakeya/json_io.hpp"
#include "ffkakeya/properties.hpp"
#include "ffkakeya/replay.hpp"
#include "ffkakeya/vanish.hpp"

namespace ffkakeya::cli {

namespace {

struct FieldArgs {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::string modulus;
  bool given() const { return q != 0 || p != 0; }
};

void add_field_options(CLI::App* sub, FieldArgs& fa) {
  sub->add_option("--q", fa.q, "field order (prime power, default modulus)");
  sub->add_option("--p", fa.p, "characteristic");
  sub->add_option("--m", fa.m, "extension degree");
  sub->add_option("--modulus", fa.modulus, "monic modulus coefficients, constant first, comma separated");
}

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v > UINT32_MAX) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bad modulus coefficient \"" + item + "\"");
    }
  }
  return out;
}

Field make_field(const FieldArgs& fa, std::uint32_t default_q) {
  if (fa.p != 0) {
    std::optional<std::vector<std::uint32_t>> mod;
    if (!fa.modulus.empty()) mod = parse_list(fa.modulus);
    const Field f = Field::make(fa.p, fa.m, std::move(mod));
    if (fa.q != 0 && fa.q != f.q()) fail(ErrorCode::InvalidArgument, "--q disagrees with --p/--m");
    return f;
  }
  if (!fa.modulus.empty()) fail(ErrorCode::InvalidArgument, "--modulus requires --p");
  const std::uint32_t q = fa.q != 0 ? fa.q : default_q;
  if (q == 0) fail(ErrorCode::InvalidArgument, "a field is required (--q or --p/--m)");
  return Field::of_order(q);
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value) {
  if (opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("FFKAKEYA_SEED"); env != nullptr && *env != '\0') {
    const std::string s(env);
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(s, &used);
      if (used == s.size() && s.find('-') == std::string::npos) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorCode::InvalidArgument, "FFKAKEYA_SEED is not a nonnegative integer: \"" + s + "\"");
  }
  return kDefaultSeed;
}

SparsePoly default_form(const Field& f, std::size_t arity, std::uint32_t ell) {
  MultiIndex e(arity);
  e[0] = ell;
  return SparsePoly::monomial(f, e, f.one());
}

// Value from the command line if given (opt may be null), else from the
// params document, else the default.
std::uint64_t pick(const CLI::Option* opt, std::uint64_t flag_value, const Json& params, const char* key,
                   std::uint64_t fallback) {
  if (opt != nullptr && opt->count() > 0) return flag_value;
  if (params.contains(key)) {
    const Json& v = params[key];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      fail(ErrorCode::ParseError, std::string("/") + key + ": expected a nonnegative integer");
    }
    return v.get<std::uint64_t>();
  }
  return fallback;
}

std::uint32_t narrow(std::uint64_t v, const char* what) {
  if (v > UINT32_MAX) fail(ErrorCode::InvalidArgument, std::string(what) + " out of range");
  return static_cast<std::uint32_t>(v);
}

struct ReplayArgs {
  std::string check;
  std::string params_path;
  FieldArgs field;
  std::uint64_t n = 0, k = 0, ell = 0, trials = 0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* ell_opt = nullptr;
  CLI::Option* trials_opt = nullptr;
};

Field replay_field(const ReplayArgs& ra, const Json& params, std::uint32_t default_q) {
  if (ra.field.given()) return make_field(ra.field, default_q);
  if (params.contains("field")) return field_from_json(params["field"], "/field");
  FieldArgs fa;
  fa.q = narrow(pick(nullptr, 0, params, "q", default_q), "q");
  return make_field(fa, default_q);
}

Certificate run_replay(const ReplayArgs& ra, std::uint64_t seed, unsigned jobs) {
  Json params = Json::object();
  if (!ra.params_path.empty()) params = load_json_file(ra.params_path);
  if (!params.is_object()) fail(ErrorCode::ParseError, ra.params_path + ": expected a JSON object");
  auto get = [&](CLI::Option* opt, std::uint64_t v, const char* key, std::uint64_t fallback) {
    return pick(opt, v, params, key, fallback);
  };
  const std::string& c = ra.check;

  if (c == "key_lemma") {
    const Field f = replay_field(ra, params, 5);
    return check_key_lemma(get(ra.trials_opt, ra.trials, "trials", 500), f, get(ra.n_opt, ra.n, "n", 2),
                           get(ra.k_opt, ra.k, "k", 2), seed, jobs);
  }
  if (c == "proposition") {
    const Field f = replay_field(ra, params, 5);
    const std::size_t n = get(ra.n_opt, ra.n, "n", 2);
    const auto ell = narrow(get(ra.ell_opt, ra.ell, "ell", 2), "ell");
    if (n < 2) fail(ErrorCode::DimensionMismatch, "n must be >= 2");
    const SparsePoly fpoly = params.contains("f") ? poly_from_json(params["f"], f, "/f") : default_form(f, n - 1, ell);
    return check_proposition(get(ra.trials_opt, ra.trials, "trials", 200), f, n, ell,
                             get(ra.k_opt, ra.k, "k", 2), fpoly, seed, jobs);
  }
  if (c == "warmup") {
    std::optional<BrkInstance> inst;
    if (params.contains("instance")) inst = instance_from_json(params["instance"], "/instance");
    const Field f = inst ? inst->field() : replay_field(ra, params, 3);
    Certificate cert = check_warmup(f.q(), get(ra.k_opt, ra.k, "k", f.q()), inst);
    cert.seed = seed;
    return cert;
  }
  if (c == "theorem_instance") {
    const BrkInstance inst = [&] {
      if (params.contains("instance")) return instance_from_json(params["instance"], "/instance");
      const Field f = replay_field(ra, params, 3);
      const std::size_t n = get(ra.n_opt, ra.n, "n", 2);
      const auto ell = narrow(get(ra.ell_opt, ra.ell, "ell", 2), "ell");
      if (n < 2) fail(ErrorCode::DimensionMismatch, "n must be >= 2");
      return BrkInstance::uniform(f, n, ell, default_form(f, n - 1, ell));
    }();
    Certificate cert = check_theorem_instance(inst, get(ra.k_opt, ra.k, "k", inst.field().q()));
    cert.seed = seed;
    return cert;
  }
  if (c == "derivs_zero") {
    Certificate cert = [&] {
      if (params.contains("P")) {
        const SparsePoly p = poly_from_json(params["P"], "/P");
        const Field& f = p.field();
        if (!params.contains("curve")) fail(ErrorCode::ParseError, "/: missing key \"curve\"");
        const Json& cj = params["curve"];
        const SparsePoly g = poly_from_json(cj.at("g"), f, "/curve/g");
        const Point a = cj.contains("a") ? point_from_json(f, cj["a"], "/curve/a") : Point(p.arity(), f.zero());
        const Elem rho = cj.contains("rho") ? elem_from_json(f, cj["rho"], "/curve/rho") : f.one();
        return check_derivs_zero(p, Curve{a, rho, g},
                                 {get(ra.k_opt, ra.k, "k", 1), pick(nullptr, 0, params, "D", 0),
                                  pick(nullptr, 0, params, "M", 0)});
      }
      // Default instance: P = (x2 - x1^2)^2 on the parabola, k = 2, D = 4, M = 2.
      const Field f = replay_field(ra, params, 7);
      const SparsePoly x1 = SparsePoly::variable(f, 2, 0), x2 = SparsePoly::variable(f, 2, 1);
      return check_derivs_zero((x2 - x1 * x1).pow(2), Curve{Point(2, f.zero()), f.one(), default_form(f, 1, 2)},
                               {2, 4, 2});
    }();
    cert.seed = seed;
    return cert;
  }
  if (c == "hasse_oracle") return check_hasse_oracle(get(ra.trials_opt, ra.trials, "trials", 500), seed, jobs);
  if (c == "multiplicity_lemmas") {
    return check_multiplicity_lemmas(get(ra.trials_opt, ra.trials, "trials", 300), seed, jobs);
  }
  if (c == "vandermonde") {
    Certificate cert = check_vandermonde(get(ra.n_opt, ra.n, "max_arity", 4), 8, 8);
    cert.seed = seed;
    return cert;
  }
  if (c == "existence") return check_existence(get(ra.trials_opt, ra.trials, "trials", 200), seed, jobs);
  if (c == "schwartz_zippel") {
    return check_schwartz_zippel(get(ra.trials_opt, ra.trials, "trials", 300), seed, jobs);
  }
  fail(ErrorCode::InvalidArgument, "unknown check \"" + c + "\"");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial-method toolkit over finite fields", "ffkakeya"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned jobs = 1;
  std::string out_path;
  std::uint64_t seed_flag = 0;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--out", out_path, "write the output document to FILE");
  CLI::Option* seed_opt = app.add_option("--seed", seed_flag, "random seed (falls back to FFKAKEYA_SEED)");

  // bound
  auto* bound = app.add_subcommand("bound", "lower bound for BRK-type sets");
  std::uint32_t b_q = 0, b_n = 0, b_ell = 0;
  bound->add_option("--q", b_q)->required();
  bound->add_option("--n", b_n)->required();
  bound->add_option("--ell", b_ell)->required();

  // build-set
  auto* build = app.add_subcommand("build-set", "generate the set of an instance");
  std::string bs_instance;
  bool bs_kakeya = false, bs_trivial = false;
  std::size_t bs_n = 2;
  FieldArgs bs_field;
  build->add_option("--instance", bs_instance, "instance JSON");
  build->add_flag("--kakeya", bs_kakeya, "build a Kakeya set instead");
  build->add_flag("--trivial", bs_trivial, "with --kakeya: all of F_q^n");
  build->add_option("--n", bs_n, "dimension for --kakeya");
  add_field_options(build, bs_field);

  // verify-set
  auto* verify = app.add_subcommand("verify-set", "check that a set contains an instance");
  std::string vs_set, vs_instance;
  bool vs_kakeya = false;
  verify->add_option("--set", vs_set, "set JSON")->required();
  verify->add_option("--instance", vs_instance, "instance JSON");
  verify->add_flag("--kakeya", vs_kakeya, "check the Kakeya property instead");

  // vanish
  auto* vanish = app.add_subcommand("vanish", "find a polynomial vanishing on a set");
  std::string v_set, v_system;
  std::uint32_t v_degree = 0, v_mult = 0;
  vanish->add_option("--set", v_set, "set JSON")->required();
  vanish->add_option("--degree", v_degree, "maximum degree D")->required();
  vanish->add_option("--mult", v_mult, "multiplicity M")->required();
  vanish->add_option("--system", v_system, "also write the linear system JSON to FILE");

  // min-search
  auto* search = app.add_subcommand("min-search", "search for small BRK-type sets");
  FieldArgs ms_field;
  std::size_t ms_n = 2;
  std::uint32_t ms_ell = 2;
  std::string ms_g, ms_mode = "greedy";
  unsigned ms_restarts = 8;
  add_field_options(search, ms_field);
  search->add_option("--n", ms_n);
  search->add_option("--ell", ms_ell);
  search->add_option("--g", ms_g, "homogeneous form g as polynomial JSON (default s_1^ell)");
  search->add_option("--mode", ms_mode)->check(CLI::IsMember({"exhaustive", "greedy"}));
  search->add_option("--restarts", ms_restarts);

  // replay
  auto* replay = app.add_subcommand("replay", "replay a proof step and emit a certificate");
  ReplayArgs ra;
  replay->add_option("--check", ra.check, "key_lemma, derivs_zero, proposition, warmup, theorem_instance, "
                                          "hasse_oracle, multiplicity_lemmas, vandermonde, existence, "
                                          "schwartz_zippel")
      ->required();
  replay->add_option("--params", ra.params_path, "parameters JSON");
  add_field_options(replay, ra.field);
  ra.n_opt = replay->add_option("--n", ra.n);
  ra.k_opt = replay->add_option("--k", ra.k);
  ra.ell_opt = replay->add_option("--ell", ra.ell);
  ra.trials_opt = replay->add_option("--trials", ra.trials);

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run every property suite");

  std::vector<std::string> argv_store{"ffkakeya"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  if (!out_path.empty()) {
    file = std::make_unique<std::ofstream>(out_path);
    if (!*file) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& doc = file ? *file : out;

  try {
    if (*bound) {
      const auto b = theorem_bound(b_q, b_n, b_ell);
      doc << b.fraction() << " (ceil " << b.ceiling << ")\n";
      return kExitPass;
    }
    if (*build) {
      if (bs_kakeya) {
        const Field f = make_field(bs_field, 0);
        doc << to_json(kakeya_set(f, bs_n, !bs_trivial)).dump(2) << '\n';
        return kExitPass;
      }
      if (bs_instance.empty()) fail(ErrorCode::InvalidArgument, "--instance or --kakeya required");
      const auto inst = instance_from_json(load_json_file(bs_instance), "");
      doc << to_json(generate_set(inst)).dump(2) << '\n';
      return kExitPass;
    }
    if (*verify) {
      const PointSet s = set_from_json(load_json_file(vs_set), "");
      Json report;
      bool ok = false;
      if (vs_kakeya) {
        const auto kv = verify_kakeya(s);
        ok = kv.ok;
        report["ok"] = ok;
        if (kv.direction) report["direction"] = to_json(s.field(), *kv.direction);
      } else {
        if (vs_instance.empty()) fail(ErrorCode::InvalidArgument, "--instance or --kakeya required");
        const auto inst = instance_from_json(load_json_file(vs_instance), "");
        const auto v = verify_brk(s, inst);
        ok = v.ok;
        report["ok"] = ok;
        if (v.rho) report["rho"] = to_json(s.field(), *v.rho);
        if (v.missing) report["missing"] = to_json(s.field(), *v.missing);
      }
      doc << report.dump(2) << '\n';
      return ok ? kExitPass : kExitFail;
    }
    if (*vanish) {
      const PointSet s = set_from_json(load_json_file(v_set), "");
      const VanishProblem problem(s.field(), s.dimension(), s.points(), v_degree, v_mult);
      if (!v_system.empty()) {
        std::ofstream sys(v_system);
        if (!sys) fail(ErrorCode::InvalidArgument, "cannot write " + v_system);
        sys << to_json(build_system(problem)).dump(2) << '\n';
      }
      const auto p = find_vanishing_poly(problem);
      if (p) {
        doc << to_json(*p).dump(2) << '\n';
      } else {
        doc << "none\n";
      }
      return kExitPass;
    }
    if (*search) {
      const Field f = make_field(ms_field, 0);
      const SparsePoly g = ms_g.empty() ? default_form(f, ms_n - 1, ms_ell)
                                        : poly_from_json(load_json_file(ms_g), f, "");
      SearchOptions opts;
      opts.mode = ms_mode == "exhaustive" ? SearchMode::Exhaustive : SearchMode::Greedy;
      opts.seed = resolve_seed(seed_opt, seed_flag);
      opts.restarts = ms_restarts;
      opts.jobs = jobs;
      if (ms_n < 2) fail(ErrorCode::DimensionMismatch, "n must be >= 2");
      doc << to_json(min_brk_search(f, ms_n, ms_ell, g, opts)).dump(2) << '\n';
      return kExitPass;
    }
    if (*replay) {
      const Certificate cert = run_replay(ra, resolve_seed(seed_opt, seed_flag), jobs);
      doc << cert.dump() << '\n';
      return cert.pass ? kExitPass : kExitFail;
    }
    if (*selftest) {
      const auto results = run_selftest(resolve_seed(seed_opt, seed_flag), jobs, doc);
      std::size_t failed = 0;
      for (const auto& r : results) failed += r.pass ? 0 : 1;
      doc << (failed == 0 ? "selftest: all " + std::to_string(results.size()) + " suites passed"
                          : "selftest: " + std::to_string(failed) + " of " + std::to_string(results.size()) +
                                " suites failed")
          << '\n';
      return failed == 0 ? kExitPass : kExitFail;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvariantViolation ? kExitFail : kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ffkakeya::cli
