#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grtor/error.hpp"
#include "grtor/graded_ring.hpp"
#include "grtor/resolution.hpp"

using namespace grtor;

namespace {

std::vector<Polynomial> P(const RingPtr& r, const char* text) { return parse_polynomial_list(r, text); }

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (long long t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  return c;
}

// HF of k[x_1..x_n] at degree d
long long hf_poly(int n, int d) { return d < 0 ? 0 : binom(d + n - 1, n - 1); }

BigradedSeries product_series(const std::vector<std::pair<int, int>>& head, int e, int i_max, int j_max) {
  BigradedSeries s(i_max, j_max);
  for (int k = 0; 2 * k <= i_max; ++k)
    for (auto [i, j] : head)
      if (i + 2 * k <= i_max && j + k * e <= j_max) s.add(i + 2 * k, j + k * e, 1);
  return s;
}

}  // namespace

TEST_CASE("Koszul resolution of the residue field") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y", "z"});
  RingSpec g{r, Setting::Graded, {}};
  auto res = minimal_resolution(ModulePresentation::cyclic({g, P(r, "x, y, z")}), 5);
  CHECK(is_complex(res));
  CHECK(is_minimal(res));
  auto b = betti_series(res, 6);
  CHECK(b.to_string() == "1 + 3*z*t + 3*z^2*t^2 + z^3*t^3");
}

TEST_CASE("example 1 graded Tor") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  RingSpec g{r, Setting::Graded, {}};
  auto m = ModulePresentation::cyclic({g, P(r, "x^2")});
  auto s = tor_series(m, m, 2, 10);
  BigradedSeries want(2, 10);
  want.set(0, 0, 1);
  for (int j = 1; j <= 10; ++j) want.set(0, j, 2);
  want.set(1, 2, 1);
  for (int j = 3; j <= 10; ++j) want.set(1, j, 2);
  CHECK(s == want);
}

TEST_CASE("Eliahou-Kervaire matches the resolution") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x1", "x2", "x3"});
  RingSpec g{r, Setting::Graded, {}};
  for (const char* gens : {"x1^2, x1*x2, x1*x3, x2^2", "x1, x2^2, x2*x3", "x1^3, x1^2*x2, x1*x2^2, x2^3, x1^2*x3"}) {
    IdealPresentation ideal{g, P(r, gens)};
    auto res = minimal_resolution(ModulePresentation::cyclic(ideal), 4);
    auto b = betti_series(res, 9);
    auto ek = ek_betti_stable(ideal, 3, 9);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 9; ++j) CHECK(b.at(i + 1, j) == ek.at(i, j));
  }
  CHECK_THROWS_AS(ek_betti_stable({g, P(r, "x2^2")}, 2, 4), UsageError);
}

TEST_CASE("Betti numbers reproduce the Hilbert function") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y", "z"});
  RingSpec g{r, Setting::Graded, {}};
  std::mt19937 rng(31);
  for (int t = 0; t < 12; ++t) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      int d = 2 + static_cast<int>(rng() % 2);
      auto monos = monomials_of_degree(3, d);
      Polynomial f(r);
      for (int u = 0; u < 2; ++u) f += Polynomial(r, monos[rng() % monos.size()], Scalar(r->field(), 1L + static_cast<long>(rng() % 3)));
      if (!f.is_zero()) gens.push_back(f);
    }
    IdealPresentation ideal{g, gens};
    const int j_max = 8;
    auto res = minimal_resolution(ModulePresentation::cyclic(ideal), 4, j_max);
    CHECK(is_complex(res));
    CHECK(is_minimal(res));
    auto b = betti_series(res, j_max);
    RingSpec q{r, Setting::Graded, gens};
    GradedQuotient quotient(q);
    for (int j = 0; j <= j_max; ++j) {
      long long euler = 0;
      for (const auto& [cell, c] : b.coefficients()) euler += (cell.i % 2 ? -1 : 1) * c * hf_poly(3, j - cell.j);
      CHECK(euler == quotient.hilbert_function(j));
    }
  }
}

TEST_CASE("presented module resolution") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  RingSpec g{r, Setting::Graded, {}};
  ModulePresentation m;
  m.spec = g;
  m.rank = 2;
  m.column_degrees = {0, 1};
  m.relations = {P(r, "x^2, -y")};
  auto res = minimal_resolution(m, 3);
  CHECK(is_complex(res));
  CHECK(betti_series(res, 5).to_string() == "1 + t + z*t^2");
  ModulePresentation bad = m;
  bad.relations = {P(r, "x, -y")};
  CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("unit relations are pruned") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  RingSpec g{r, Setting::Graded, {}};
  ModulePresentation m;
  m.spec = g;
  m.rank = 2;
  m.column_degrees = {0, 0};
  m.relations = {P(r, "1, -1"), P(r, "x, 0")};
  auto res = minimal_resolution(m, 2);
  CHECK(is_minimal(res));
  CHECK(betti_series(res, 3).to_string() == "1 + z*t");
}

TEST_CASE("Tor is symmetric") {
  auto r = PolyRing::make(FieldSpec::prime(32003), {"x", "y", "z"});
  RingSpec g{r, Setting::Graded, P(r, "x^3")};
  auto m = ModulePresentation::cyclic({g, P(r, "x^2, x*y")});
  auto n = ModulePresentation::cyclic({g, P(r, "y^2, z")});
  CHECK(tor_symmetry_check(m, n, 4, 9));
}

TEST_CASE("example 2 with two generators follows the closed form") {
  for (auto [n, e] : {std::pair{2, 3}, std::pair{3, 4}}) {
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
    auto r = PolyRing::make(FieldSpec::rationals(), names);
    RingSpec g{r, Setting::Graded, {Polynomial(r, Monomial::variable(n, 0, e), Scalar::one(r->field()))}};
    IdealPresentation ideal{g, {}};
    for (int k = 0; k < 2; ++k)
      ideal.generators.push_back(Polynomial(r, Monomial::variable(n, 0) * Monomial::variable(n, k), Scalar::one(r->field())));
    IdealPresentation maximal{g, {}};
    for (int k = 0; k < n; ++k) maximal.generators.push_back(Polynomial::variable(r, static_cast<std::size_t>(k)));
    auto s = tor_series(ModulePresentation::cyclic(ideal), ModulePresentation::cyclic(maximal), 6, 12);
    CHECK(s == example2_closed_form(n, 2, 2, e, 6, 12));
  }
}

TEST_CASE("example 2 with three generators follows the Koszul-shaped product") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x1", "x2", "x3"});
  RingSpec g{r, Setting::Graded, P(r, "x1^4")};
  auto m = ModulePresentation::cyclic({g, P(r, "x1^2, x1*x2, x1*x3")});
  auto k = ModulePresentation::cyclic({g, P(r, "x1, x2, x3")});
  auto s = tor_series(m, k, 6, 12);
  CHECK(s == product_series({{0, 0}, {1, 2}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {2, 3}, {3, 4}}, 4, 6, 12));
  CHECK(s != example2_closed_form(3, 3, 2, 4, 6, 12));
}

TEST_CASE("closed form preconditions") {
  CHECK_THROWS_AS(example2_closed_form(2, 3, 2, 3, 6, 12), UsageError);
  CHECK_THROWS_AS(example2_closed_form(2, 2, 3, 3, 6, 12), UsageError);
  CHECK(example2_closed_form(2, 2, 2, 3, 2, 3).to_string() == "1 + 2*z*t^2 + 2*z^2*t^3");
}
