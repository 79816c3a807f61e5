#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grtor/commands.hpp"
#include "grtor/error.hpp"

using namespace grtor;

namespace {

std::string jobs(const std::string& name) { return std::string(GRTOR_JOBS_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

JobSpec load(const std::string& name) { return parse_job(slurp(jobs(name))); }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("grtor_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int code = -1;
  std::string out;
};

#ifdef GRTOR_CLI
Run cli(const std::string& args) {
  Run r;
  std::string cmd = std::string(GRTOR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
#endif

const char* kLocalJob = R"(
[ring]
variables = X, Y
setting = local
[M]
ideal = X^2 - Y^3
[N]
ideal = X^2 - Y^5
)";

}  // namespace

TEST_CASE("job files parse") {
  auto job = load("example1_local.job");
  CHECK(job.ring.setting == Setting::Local);
  CHECK(job.m->ideal.generators.size() == 1);
  CHECK(job.i_max == 2);
  CHECK(job.j_max == 12);
  CHECK(!job.cap);
  auto res = load("example2_2223.job");
  CHECK(res.n->kind == JobModule::Kind::Residue);
  CHECK(res.ring.quotient.size() == 1);
  auto pres = load("presentation_graded.job");
  CHECK(pres.m->presentation.rank == 2);
  CHECK(pres.m->presentation.relations.size() == 1);
}

TEST_CASE("job errors carry the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_job(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("[ring]\nvariables = x\ncolour = red\n") == 3);
  CHECK(line_of("[ring]\nvariables = x, y\n[M]\nideal = x^2 + z\n") == 4);
  CHECK(line_of("[ring]\nvariables = x\n[bounds]\njmax = many\n") == 4);
  CHECK(line_of("[ring]\nvariables = x\n[P]\n") == 3);
  CHECK(line_of("variables = x\n") == 1);
  CHECK(line_of("[ring]\nvariables = x\nsetting = global\n") == 3);
  CHECK(line_of("[ring]\nvariables = x, y\nsetting = graded\nquotient = x^2 + y\n") == 4);
  try {
    parse_job("[ring]\nvariables = x, y\n[M]\nideal = x^2 + z\n");
  } catch (const ParseError& e) {
    CHECK(e.column() == 15);
  }
}

TEST_CASE("field override") {
  auto job = parse_job(kLocalJob, FieldSpec::prime(7));
  CHECK(job.ring.ring->field() == FieldSpec::prime(7));
}

TEST_CASE("gr of the example modules") {
  CommandOptions o;
  auto m = cmd_gr(load("example1_local.job"), o);
  CHECK(m.output.find("M: initial ideal (X^2)") != std::string::npos);
  auto sum = cmd_gr(load("example1_gr_sum.job"), o);
  CHECK(sum.output.find("initial ideal (X^2, Y^3)") != std::string::npos);
  CHECK(sum.output.find("colength: 6") != std::string::npos);
  auto graded = cmd_gr(load("example1_graded.job"), o);
  CHECK(graded.output.find("initial ideal (x^2)") != std::string::npos);
}

TEST_CASE("tor-gr series output") {
  CommandOptions o;
  o.format = OutputFormat::Series;
  auto r = cmd_tor_gr(load("example1_graded.job"), o);
  auto s = parse_series(r.output);
  CHECK(s.i_max() == 2);
  CHECK(s.j_max() == 10);
  CHECK(s.layer_sums() == std::vector<long long>{21, 17, 0});
  o.format = OutputFormat::Json;
  auto j = nlohmann::json::parse(cmd_tor_gr(load("example1_graded.job"), o).output);
  CHECK(j["validity_window"]["j_max"] == 10);
  CHECK(j["series"]["layers"][1] == "z*t^2 + 2*z*t^3 + 2*z*t^4 + 2*z*t^5 + 2*z*t^6 + 2*z*t^7 + 2*z*t^8 + 2*z*t^9 + 2*z*t^10");
}

TEST_CASE("free module Tor sits in degree zero") {
  auto job = parse_job("[ring]\nvariables = x, y\n[M]\nrank = 2\ndegrees = 0, 0\n[N]\nideal = x, y^2\n");
  CommandOptions o;
  o.i_max = 3;
  o.j_max = 4;
  o.format = OutputFormat::Series;
  auto s = parse_series(cmd_tor_gr(job, o).output);
  CHECK(s.to_string() == "2 + 2*t");
}

TEST_CASE("theorem check on example 1") {
  CommandOptions o;
  auto t = check_theorem(load("example1_local.job"), resolve_bounds(load("example1_local.job"), o));
  CHECK(t.verified());
  CHECK(t.window_j == 11);
  CHECK(t.run.certificate.size() == 19);
  auto r = cmd_check_theorem(load("example1_local.job"), o);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("homogeneous local input passes with an empty certificate") {
  auto job = parse_job("[ring]\nvariables = X, Y\nsetting = local\n[M]\nideal = X^2, X*Y\n[N]\nideal = Y^3\n");
  CommandOptions o;
  o.j_max = 9;
  auto t = check_theorem(job, resolve_bounds(job, o));
  CHECK(t.verified());
  CHECK(t.run.certificate.empty());
}

TEST_CASE("exhausted windows") {
  auto job = parse_job(kLocalJob);
  CommandOptions o;
  o.j_max = 0;
  auto r = cmd_check_theorem(job, o);
  CHECK(r.exit_code == kExitWindow);
  auto deep = parse_job("[ring]\nvariables = X, Y\nsetting = local\n[M]\nideal = X^2 - Y^9\n[N]\nresidue\n");
  o.j_max = 2;
  o.cap = 3;
  try {
    cmd_check_theorem(deep, o);
    FAIL("expected a cap error");
  } catch (const CapExceeded& e) {
    CHECK(exit_code_for(e) == kExitWindow);
  }
}

TEST_CASE("graded rings are refused by check-theorem") {
  CommandOptions o;
  CHECK_THROWS_AS(cmd_check_theorem(load("example1_graded.job"), o), UsageError);
}

TEST_CASE("synthetic checks") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = check_synthetic(random_filtered_complex(seed).complex);
    CHECK(t.verified());
  }
}

TEST_CASE("cancel command") {
  BigradedSeries s(1, 3), t(1, 3);
  s.set(1, 1, 1);
  s.set(0, 2, 1);
  CommandOptions o;
  auto ok = cmd_cancel(s, t, o);
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.output.find("0 1 2") != std::string::npos);
  BigradedSeries bad(1, 3);
  bad.set(1, 3, 1);
  bad.set(0, 2, 1);
  CHECK(cmd_cancel(bad, t, o).exit_code == kExitUnverified);
}

#ifdef GRTOR_CLI
TEST_CASE("binary exit codes and determinism") {
  auto a = cli("check-theorem " + jobs("example1_local.job") + " --format json");
  auto b = cli("check-theorem " + jobs("example1_local.job") + " --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["validity_window"]["j_max"] == 11);
  CHECK(j["certificate"].size() == 19);

  CHECK(cli("tor-gr " + jobs("example1_graded.job")).code == 0);
  CHECK(cli("tor-gr /nonexistent.job").code == 1);
  CHECK(cli("tor-gr " + jobs("example1_graded.job") + " --format xml").code == 1);
  CHECK(cli("frobnicate").code == 1);
  CHECK(cli("check-theorem " + jobs("example1_local.job") + " --jmax 0").code == 3);
  CHECK(cli("gr " + jobs("example1_gr_sum.job") + " --char 32003").out.find("colength: 6") != std::string::npos);

  auto complex = cli("random-complex --seed 5");
  REQUIRE(complex.code == 0);
  auto path = temp_file("complex.txt", complex.out);
  auto syn = cli("check-theorem --synthetic " + path);
  CHECK(syn.code == 0);
  CHECK(syn.out.find("verdict: PASS") != std::string::npos);

  auto src = temp_file("src.txt", "1 3\n1 1 1\n0 2 1\n");
  auto zero = temp_file("zero.txt", "1 3\n");
  auto far = temp_file("far.txt", "1 3\n1 3 1\n0 2 1\n");
  CHECK(cli("cancel " + src + " " + zero).code == 0);
  CHECK(cli("cancel " + far + " " + zero).code == 2);
  auto top = temp_file("top.txt", "1 3\n1 3 1\n");
  CHECK(cli("cancel " + top + " " + zero).code == 0);
  CHECK(cli("cancel " + top + " " + zero + " --strict").code == 2);
}
#endif

#ifdef GRTOR_CLI
TEST_CASE("shipped data files") {
  std::string data = GRTOR_TEST_DATA;
  auto src = data + "/example1_source.series";
  auto tgt = data + "/example1_target.series";
  auto fresh = cli("tor-gr " + jobs("example1_local.job") + " --format series");
  CHECK(fresh.out == slurp(src));
  auto c = cli("cancel " + src + " " + tgt);
  CHECK(c.code == 0);
  CHECK(c.out.find("feasible-up-to-boundary") != std::string::npos);
  CHECK(cli("cancel " + src + " " + tgt + " --strict").code == 2);
  auto syn = cli("check-theorem --synthetic " + data + "/random_seed42.complex");
  CHECK(syn.code == 0);
  CHECK(cli("random-complex --seed 42").out == slurp(data + "/random_seed42.complex"));
}
#endif
