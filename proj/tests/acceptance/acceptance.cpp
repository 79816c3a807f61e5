// One [PASS]/[FAIL] line per acceptance criterion. Exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grtor/cancel.hpp"
#include "grtor/commands.hpp"
#include "grtor/local_filtered.hpp"
#include "grtor/resolution.hpp"
#include "grtor/spectral.hpp"
#include "grtor/standard_basis.hpp"

using namespace grtor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  int failures = 0;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    if (++failures <= 3) detail += (failures > 1 ? "; " : "") + what;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

JobSpec job(const std::string& name) { return parse_job(slurp(std::string(GRTOR_JOBS_DIR) + "/" + name)); }

std::string cell(const Cell& c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

std::optional<Cell> first_difference(const BigradedSeries& a, const BigradedSeries& b) {
  for (int i = 0; i <= a.i_max(); ++i)
    for (int j = 0; j <= a.j_max(); ++j)
      if (a.at(i, j) != b.at(i, j)) return Cell{i, j};
  return std::nullopt;
}

Outcome ac1() {
  Outcome o;
  CommandOptions opts;
  opts.i_max = 2;
  opts.j_max = 10;
  opts.format = OutputFormat::Series;
  auto r = cmd_tor_gr(job("example1_graded.job"), opts);
  auto s = parse_series(r.output);
  BigradedSeries want(2, 10);
  want.set(0, 0, 1);
  for (int j = 1; j <= 10; ++j) want.set(0, j, 2);
  want.set(1, 2, 1);
  for (int j = 3; j <= 10; ++j) want.set(1, j, 2);
  o.require(r.exit_code == kExitOk, "tor-gr exit code");
  if (auto d = first_difference(s, want)) o.require(false, "series differs at " + cell(*d));
  o.require(s.layer_sums()[2] == 0, "Tor_2 nonzero");
  if (o.pass) o.detail = "Tor_0 = " + std::to_string(s.layer_sums()[0]) + " units, Tor_1 = " + std::to_string(s.layer_sums()[1]) + ", Tor_2 = 0";
  return o;
}

Outcome ac2() {
  Outcome o;
  auto r = PolyRing::make(FieldSpec::rationals(), {"X", "Y"});
  RingSpec loc{r, Setting::Local, {}};
  auto t = tor_local_low({loc, parse_polynomial_list(r, "X^2 - Y^3")}, {loc, parse_polynomial_list(r, "X^2 - Y^5")}, 20, 40);
  long long mass = 0;
  for (long long v : t.tor0_series) mass += v;
  o.require(t.tor1_zero, "Tor_1 is nonzero");
  o.require(mass == 6, "gr(Tor_0) has mass " + std::to_string(mass));
  o.require(t.tor0_length == 6, "colength differs");
  if (o.pass) o.detail = "Tor_1 = 0, gr(Tor_0) = 1 + 2t + 2t^2 + t^3";
  return o;
}

Outcome ac3() {
  Outcome o;
  auto j = job("example1_local.job");
  CommandOptions opts;
  auto t = check_theorem(j, resolve_bounds(j, opts));
  CancellationCertificate want;
  want.steps.push_back({0, 2, 3});
  for (int a = 3; a <= t.window_j; ++a) {
    want.steps.push_back({0, a, a + 1});
    want.steps.push_back({0, a, a + 1});
  }
  want.canonicalize();
  o.require(t.verified(), "verdict is not PASS");
  o.require(t.run.certificate == want, "certificate differs from the expected cancellations");
  o.require(cmd_check_theorem(j, opts).exit_code == kExitOk, "check-theorem exit code");
  if (o.pass) o.detail = std::to_string(want.size()) + " steps, window j <= " + std::to_string(t.window_j) + ", verdict PASS";
  return o;
}

BigradedSeries example2_series(int n, int m, int d, int e, bool swapped) {
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  auto r = PolyRing::make(FieldSpec::rationals(), names);
  const Scalar one = Scalar::one(r->field());
  RingSpec g{r, Setting::Graded, {Polynomial(r, Monomial::variable(n, 0, e), one)}};
  IdealPresentation ideal{g, {Polynomial(r, Monomial::variable(n, 0, d), one)}};
  for (int k = 1; k < m; ++k)
    ideal.generators.push_back(Polynomial(r, Monomial::variable(n, 0, d - 1) * Monomial::variable(n, k), one));
  IdealPresentation maximal{g, {}};
  for (int k = 0; k < n; ++k) maximal.generators.push_back(Polynomial::variable(r, static_cast<std::size_t>(k)));
  auto mm = ModulePresentation::cyclic(ideal), kk = ModulePresentation::cyclic(maximal);
  return swapped ? tor_series(kk, mm, 6, 12) : tor_series(mm, kk, 6, 12);
}

bool support_bullets(const BigradedSeries& s, int d, int e, std::string& why) {
  for (const auto& [c, v] : s.coefficients()) {
    bool ok;
    if (c.i == 0) {
      ok = c.j == 0;
    } else if (c.i % 2 == 1) {
      ok = c.j == (c.i - 1) * e / 2 + d;
    } else {
      ok = c.j == (c.i - 2) * e / 2 + d + 1 || c.j == c.i * e / 2;
    }
    if (!ok) {
      why = "Tor_" + std::to_string(c.i) + " has degree " + std::to_string(c.j);
      return false;
    }
  }
  return true;
}

// Every target below s obtained by removing one or two units.
bool rigid(const BigradedSeries& s) {
  for (const auto& [c1, v1] : s.coefficients()) {
    BigradedSeries t = s;
    t.add(c1.i, c1.j, -1);
    if (decide_cancellation(s, t).feasible()) return false;
    for (const auto& [c2, v2] : t.coefficients()) {
      BigradedSeries u = t;
      u.add(c2.i, c2.j, -1);
      if (decide_cancellation(s, u).feasible()) return false;
    }
  }
  return true;
}

Outcome ac4() {
  Outcome o;
  std::string notes;
  for (auto [n, m, d, e] : {std::array{2, 2, 2, 3}, std::array{3, 3, 2, 4}}) {
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(d) + "," + std::to_string(e) + ")";
    auto s = example2_series(n, m, d, e, false);
    auto closed = example2_closed_form(n, m, d, e, 6, 12);
    const bool symmetric = s == example2_series(n, m, d, e, true);
    o.require(symmetric, tag + " Tor(M,k) and Tor(k,M) disagree");
    if (auto diff = first_difference(s, closed)) {
      o.require(false, tag + " closed form differs at " + cell(*diff) + ": computed " + std::to_string(s.at(diff->i, diff->j)) +
                           ", formula " + std::to_string(closed.at(diff->i, diff->j)));
    }
    std::string why;
    if (!support_bullets(s, d, e, why)) o.require(false, tag + " degree support: " + why);
    o.require(rigid(s), tag + " admits a cancellation");
    notes += tag + (s == closed ? " matches" : " differs") + (rigid(s) ? ", rigid" : ", not rigid") + "; ";
  }
  if (o.pass) o.detail = notes;
  else o.detail += " [" + notes.substr(0, notes.size() - 2) + "]";
  return o;
}

Outcome ac5() {
  Outcome o;
  int good = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomComplexParams p;
    p.i_max = 1 + static_cast<int>(seed % 4);
    p.max_dim = 8;
    p.max_level = 6;
    p.strictly_graded = seed % 10 == 0;
    p.field = FieldSpec::prime(32003);
    auto rc = random_filtered_complex(seed, p);
    const auto& l = rc.complex;
    auto run = run_to_stability(l);
    bool ok = l.squares_to_zero() && l.is_filtered();
    std::vector<SpectralPage> pages = run.pages;
    pages.push_back(page(l, run.stop_page + 1));
    for (std::size_t k = 0; k + 1 < pages.size(); ++k)
      for (int i = 0; i <= l.i_max; ++i)
        for (int j = 0; j <= l.j_max; ++j) {
          ok = ok && pages[k + 1].dims.at(i, j) <= pages[k].dims.at(i, j);
          ok = ok && run.infinity.dims.at(i, j) <= pages[k].dims.at(i, j);
        }
    for (int r = 1; r <= run.stop_page; ++r)
      for (int i = 1; i <= l.i_max; ++i)
        for (int j = 0; j + r <= l.j_max; ++j)
          ok = ok && transition_counts(l, r, i, j).coker_iota == transition_counts(l, r, i - 1, j + r).ker_pi;
    ok = ok && verify_certificate(run.page1().dims, run.certificate, run.infinity.dims).ok();
    for (const auto& p2 : pages) ok = ok && p2.dims.alternating_sum() == run.page1().dims.alternating_sum();
    ok = ok && pages.back().dims == run.infinity.dims && run.infinity.dims == rc.infinity;
    ok = ok && run.page1().dims == rc.page1 && run.certificate == rc.certificate;
    ok = ok && level_homology(gr_complex(l)) == run.page1().dims;
    if (ok) ++good;
    else o.require(false, "seed " + std::to_string(seed) + " violates a property");
  }
  if (o.pass) o.detail = std::to_string(good) + "/200 complexes";
  return o;
}

struct Unit {
  int i;
  int j;
};

// Can the units be split into pairs (i+1, a), (i, b) with a < b?
bool pairable(std::vector<Unit>& units) {
  if (units.empty()) return true;
  Unit u = units.back();
  units.pop_back();
  for (std::size_t k = 0; k < units.size(); ++k) {
    Unit v = units[k];
    bool ok = (u.i == v.i + 1 && u.j < v.j) || (v.i == u.i + 1 && v.j < u.j);
    if (!ok) continue;
    units.erase(units.begin() + static_cast<std::ptrdiff_t>(k));
    bool rest = pairable(units);
    units.insert(units.begin() + static_cast<std::ptrdiff_t>(k), v);
    if (rest) {
      units.push_back(u);
      return true;
    }
  }
  units.push_back(u);
  return false;
}

bool agree(const BigradedSeries& source, const BigradedSeries& target) {
  std::vector<Unit> units;
  for (const auto& [c, v] : source.coefficients())
    for (long long k = 0; k < v - target.at(c.i, c.j); ++k) units.push_back({c.i, c.j});
  bool negative = false;
  for (const auto& [c, v] : target.coefficients()) negative = negative || v > source.at(c.i, c.j);
  auto d = decide_cancellation(source, target);
  const bool truth = !negative && pairable(units);
  if (d.feasible() != truth) return false;
  return !d.feasible() || verify_certificate(source, d.certificate, target).ok();
}

Outcome ac6() {
  Outcome o;
  constexpr int kI = 3, kJ = 5, kCells = (kI + 1) * (kJ + 1);
  long long exhaustive = 0;
  BigradedSeries zero(kI, kJ);
  BigradedSeries s(kI, kJ);
  std::function<void(int, int)> walk = [&](int from, int left) {
    ++exhaustive;
    if (!agree(s, zero)) o.require(false, "disagreement on " + s.to_string());
    if (left == 0) return;
    for (int c = from; c < kCells; ++c) {
      s.add(c / (kJ + 1), c % (kJ + 1), 1);
      walk(c, left - 1);
      s.add(c / (kJ + 1), c % (kJ + 1), -1);
    }
  };
  walk(0, 7);
  std::mt19937_64 rng(12345);
  long long sampled = 0;
  for (int t = 0; t < 200000; ++t) {
    BigradedSeries target(kI, kJ), source(kI, kJ);
    const int base = static_cast<int>(rng() % 4);
    for (int k = 0; k < base; ++k) target.add(static_cast<int>(rng() % (kI + 1)), static_cast<int>(rng() % (kJ + 1)), 1);
    source = target;
    const int units = 8 + static_cast<int>(rng() % 5);
    // Half the samples are built from valid pairs, so feasible cases are common.
    for (int k = 0; k < units;) {
      if (t % 2 == 0 && k + 1 < units) {
        int i = static_cast<int>(rng() % kI), a = static_cast<int>(rng() % kJ);
        int b = a + 1 + static_cast<int>(rng() % (kJ - a));
        source.add(i + 1, a, 1);
        source.add(i, b, 1);
        k += 2;
      } else {
        source.add(static_cast<int>(rng() % (kI + 1)), static_cast<int>(rng() % (kJ + 1)), 1);
        ++k;
      }
    }
    ++sampled;
    if (!agree(source, target)) o.require(false, "disagreement on " + source.to_string() + " vs " + target.to_string());
  }
  if (o.pass) o.detail = std::to_string(exhaustive) + " exhaustive multisets (<= 7 units) + " + std::to_string(sampled) + " sampled with 8-12 units";
  return o;
}

Outcome ac7() {
  Outcome o;
  auto r = PolyRing::make(FieldSpec::rationals(), {"X", "Y"});
  RingSpec loc{r, Setting::Local, {}};
  const std::vector<const char*> ideals{
      "X*Y, X^2 + Y^3",           "X^2 - Y^3",
      "X^2 + Y^5, X*Y + Y^4",     "X^3 - Y^4, X*Y^2",
      "X^2 - X*Y^2, Y^3 + X^3, X^2*Y", "X*Y - Y^3, X^3 + Y^5",
      "X^2 + Y^3 + X*Y^2, X*Y^2 + Y^4", "X + Y^2, Y^3",
      "X^2 + Y^3, Y^2 + X^3",     "X^2, X*Y, Y^3",
  };
  const int j_max = 14;
  int with_cancellation = 0;
  for (const char* gens : ideals) {
    IdealPresentation ideal{loc, parse_polynomial_list(r, gens)};
    auto lift = lift_cyclic(ideal, 3, j_max + 4);
    auto l = filtered_tensor(lift.resolution, {loc, parse_polynomial_list(r, "X, Y")}, 2, j_max);
    auto run = run_to_stability(l);
    const std::string tag = std::string("(") + gens + ")";
    auto graded = run.page1().dims.layer_sums();
    auto local = run.infinity.reliable().layer_sums();
    for (const auto& [c, v] : run.page1().dims.coefficients()) o.require(c.j <= run.window_j, tag + " graded Betti beyond the window");
    bool equal = true;
    for (std::size_t i = 0; i < graded.size(); ++i) {
      o.require(local[i] <= graded[i], tag + " local Betti exceeds graded at i=" + std::to_string(i));
      equal = equal && local[i] == graded[i];
    }
    o.require(equal == run.certificate.empty(), tag + " equality does not match an empty certificate");
    // independent oracle: minimal number of generators and Hilbert-Burch
    LocalTruncatedQuotient a(r, ideal.generators, j_max + 1);
    std::vector<Polynomial> m_times;
    for (const auto& g : ideal.generators)
      for (std::size_t v = 0; v < 2; ++v) m_times.push_back(g * Polynomial::variable(r, v));
    LocalTruncatedQuotient b(r, m_times, j_max + 1);
    const long long mu = b.dimension() - a.dimension();
    o.require(local[0] == 1 && local[1] == mu && local[2] == mu - 1, tag + " local Betti differ from (1, mu, mu - 1)");
    o.require(verify_certificate(run.page1().dims, run.certificate, run.infinity.dims).ok(), tag + " certificate does not verify");
    if (!run.certificate.empty()) ++with_cancellation;
  }
  if (o.pass) o.detail = "10 ideals, " + std::to_string(with_cancellation) + " with cancellations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit;
  };
  const std::vector<Criterion> criteria{{"AC1", ac1, 1},  {"AC2", ac2, 1},  {"AC3", ac3, 5}, {"AC4", ac4, 10},
                                        {"AC5", ac5, 30}, {"AC6", ac6, 60}, {"AC7", ac7, 30}};
  int failed = 0;
  for (const auto& [name, fn, limit] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < limit, "over the " + std::to_string(static_cast<int>(limit)) + " s budget");
    std::printf("[%s] %s %.2fs %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
