#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ffkakeya/brkset.hpp"
#include "ffkakeya/cli.hpp"
#include "ffkakeya/json_io.hpp"
#include "support.hpp"

using namespace ffkakeya;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("ffkakeya_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("bound") {
  const auto r = run({"bound", "--q", "5", "--n", "2", "--ell", "2"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out == "400/121 (ceil 4)\n");
  CHECK(run({"bound", "--q", "3", "--n", "2", "--ell", "2"}).out == "36/25 (ceil 2)\n");
  const auto bad = run({"bound", "--q", "3", "--n", "2", "--ell", "3"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("EllOutOfRange") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"bound", "--q", "5"}).code == cli::kExitUsage);
  CHECK(run({"replay", "--check", "nope"}).code == cli::kExitUsage);
  CHECK(run({"replay", "--check", "warmup", "--q", "3", "--k", "4"}).code == cli::kExitUsage);
}

TEST_CASE("replay warmup") {
  const auto r = run({"replay", "--check", "warmup", "--q", "3", "--k", "3"});
  CHECK(r.code == cli::kExitPass);
  const auto j = parse_json(r.out, "stdout");
  CHECK(j["check"] == "warmup");
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("replay derivs_zero default instance") {
  CHECK(run({"replay", "--check", "derivs_zero"}).code == cli::kExitPass);
  const auto r = run({"replay", "--check", "derivs_zero", "--q", "5"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("PreconditionFailed") != std::string::npos);
}

TEST_CASE("replay output is deterministic for a seed") {
  const std::vector<std::string> args{"--seed", "17", "replay", "--check", "key_lemma", "--q", "5",
                                      "--n", "2", "--k", "2", "--trials", "30"};
  const auto a = run(args);
  auto with_jobs = args;
  with_jobs.insert(with_jobs.begin(), {"--jobs", "3"});
  const auto b = run(with_jobs);
  CHECK(a.code == cli::kExitPass);
  CHECK(a.out == b.out);
}

TEST_CASE("replay params file") {
  const auto dir = scratch();
  write(dir / "prop.json", R"({"q": 5, "n": 2, "ell": 2, "k": 1, "trials": 5,
    "f": {"arity": 1, "terms": [{"exp": [2], "coeff": 1}]}})");
  const auto r = run({"replay", "--check", "proposition", "--params", (dir / "prop.json").string()});
  CHECK(r.code == cli::kExitPass);
  write(dir / "broken.json", "{\"q\": ");
  CHECK(run({"replay", "--check", "proposition", "--params", (dir / "broken.json").string()}).code ==
        cli::kExitUsage);
}

TEST_CASE("build-set and verify-set round trip") {
  const auto dir = scratch();
  const Field f = Field::make(5);
  const auto inst = BrkInstance::uniform(f, 2, 2, testing::poly(f, 1, {{{2}, 1}}));
  write(dir / "inst.json", to_json(inst).dump(2));
  const auto built = run({"--out", (dir / "set.json").string(), "build-set", "--instance", (dir / "inst.json").string()});
  CHECK(built.code == cli::kExitPass);
  const auto v = run({"verify-set", "--set", (dir / "set.json").string(), "--instance", (dir / "inst.json").string()});
  CHECK(v.code == cli::kExitPass);
  CHECK(parse_json(v.out, "stdout")["ok"] == true);

  // Drop one point and verification must fail with exit 1.
  Json s = load_json_file((dir / "set.json").string());
  s["points"].erase(s["points"].size() - 1);
  write(dir / "short.json", s.dump());
  const auto bad = run({"verify-set", "--set", (dir / "short.json").string(), "--instance", (dir / "inst.json").string()});
  CHECK(bad.code == cli::kExitFail);
  CHECK(parse_json(bad.out, "stdout").contains("missing"));
}

TEST_CASE("kakeya build and verify") {
  const auto dir = scratch();
  CHECK(run({"--out", (dir / "k.json").string(), "build-set", "--kakeya", "--q", "5", "--n", "2"}).code == cli::kExitPass);
  CHECK(run({"verify-set", "--set", (dir / "k.json").string(), "--kakeya"}).code == cli::kExitPass);
  const auto t = run({"build-set", "--kakeya", "--trivial", "--q", "2", "--n", "2"});
  CHECK(set_from_json(parse_json(t.out, "stdout")).size() == 4);
}

TEST_CASE("vanish") {
  const auto dir = scratch();
  write(dir / "origin.json", R"({"field": {"p": 3, "m": 1}, "n": 2, "points": [[0, 0]]})");
  const auto none = run({"vanish", "--set", (dir / "origin.json").string(), "--degree", "1", "--mult", "2"});
  CHECK(none.code == cli::kExitPass);
  CHECK(none.out == "none\n");
  const auto some = run({"vanish", "--set", (dir / "origin.json").string(), "--degree", "2", "--mult", "2",
                         "--system", (dir / "sys.json").string()});
  CHECK(some.code == cli::kExitPass);
  CHECK_FALSE(poly_from_json(parse_json(some.out, "stdout")).is_zero());
  CHECK(fs::exists(dir / "sys.json"));
}

TEST_CASE("min-search greedy") {
  const auto r = run({"--seed", "2", "min-search", "--q", "5", "--n", "2", "--ell", "2", "--mode", "greedy",
                      "--restarts", "2"});
  CHECK(r.code == cli::kExitPass);
  const auto j = parse_json(r.out, "stdout");
  CHECK(j["min_size"].get<std::uint64_t>() >= 4);
}

TEST_CASE("missing input file") {
  const auto r = run({"verify-set", "--set", "/nonexistent.json", "--kakeya"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("ParseError") != std::string::npos);
}
