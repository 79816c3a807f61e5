#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "grtor/error.hpp"
#include "grtor/groebner.hpp"
#include "grtor/standard_basis.hpp"

using namespace grtor;

namespace {

std::vector<Polynomial> P(const RingPtr& r, const char* text) { return parse_polynomial_list(r, text); }

Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  const auto& a = f.leading_term(MonomialOrder::Degrevlex);
  const auto& b = g.leading_term(MonomialOrder::Degrevlex);
  Monomial l = Monomial::lcm(a.mono, b.mono);
  return f.mul_term(l / a.mono, b.coef) - g.mul_term(l / b.mono, a.coef);
}

bool buchberger_criterion(const std::vector<Polynomial>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j)
      if (!normal_form(s_poly(gb[i], gb[j]), gb).is_zero()) return false;
  return true;
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int terms, int lo, int hi) {
  Polynomial p(r);
  for (int k = 0; k < terms; ++k) {
    int d = lo + static_cast<int>(rng() % (hi - lo + 1));
    auto monos = monomials_of_degree(r->nvars(), d);
    p += Polynomial(r, monos[rng() % monos.size()], Scalar(r->field(), static_cast<long>(rng() % 7) - 3));
  }
  return p;
}

}  // namespace

TEST_CASE("twisted cubic generators are a reduced basis") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y", "z", "w"});
  auto gens = P(r, "x*z - y^2, x*w - y*z, y*w - z^2");
  auto gb = groebner_basis(gens);
  CHECK(gb.size() == 3);
  CHECK(buchberger_criterion(gb));
  for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("random bases satisfy Buchberger's criterion and are order independent") {
  auto r = PolyRing::make(FieldSpec::prime(32003), {"x", "y", "z"});
  std::mt19937 rng(17);
  for (int t = 0; t < 15; ++t) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, rng, 3, 1, 3));
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    auto gb = groebner_basis(gens);
    CHECK(buchberger_criterion(gb));
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
    std::reverse(gens.begin(), gens.end());
    CHECK(groebner_basis(gens) == gb);
  }
}

TEST_CASE("syzygies annihilate and Koszul has three") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y", "z"});
  std::vector<PolyVector> cols;
  for (const auto& f : P(r, "x, y, z")) cols.push_back({f});
  SyzygyOptions opts;
  opts.row_degrees = {0};
  auto syz = syzygies(r, 1, cols, opts);
  CHECK(syz.size() == 3);
  for (const auto& s : syz) {
    Polynomial sum(r);
    for (std::size_t k = 0; k < 3; ++k) sum += s[k] * cols[k][0];
    CHECK(sum.is_zero());
  }
}

TEST_CASE("module basis normal forms") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  std::vector<PolyVector> gens{{P(r, "x")[0], P(r, "y")[0]}, {P(r, "y")[0], Polynomial(r)}};
  ModuleGroebnerBasis gb(r, 2, gens);
  CHECK(gb.contains(gens[0]));
  CHECK(gb.contains({P(r, "x*y")[0], P(r, "y^2")[0]}));
  CHECK(!gb.contains({Polynomial(r), P(r, "y")[0]}));
}

TEST_CASE("minimal generator selection") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  std::vector<PolyVector> cand;
  for (const auto& f : P(r, "x^2*y, x^2, x*y, y^3, x*y + x^2")) cand.push_back({f});
  auto idx = select_minimal(r, cand, std::vector<int>{0}, {});
  CHECK(idx == std::vector<std::size_t>{1, 2, 3});
  auto modq = select_minimal(r, cand, std::vector<int>{0}, P(r, "x^2"));
  CHECK(modq == std::vector<std::size_t>{2, 3});
}

TEST_CASE("ideal arithmetic") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  RingSpec g{r, Setting::Graded, {}};
  IdealPresentation a{g, P(r, "x^2, y")}, b{g, P(r, "x, y^2")};
  CHECK(ideal_intersection(a, b).generators == groebner_basis(P(r, "x^2, x*y, y^2")));
  CHECK(ideal_intersection({g, P(r, "x")}, {g, P(r, "y")}).generators == P(r, "x*y"));
  CHECK(ideal_product(a, b).generators.size() == 4);
  CHECK(ideal_sum(a, b).generators.size() == 4);
  RingSpec other{PolyRing::make(FieldSpec::rationals(), {"x", "y", "z"}), Setting::Graded, {}};
  CHECK_THROWS_AS(ideal_sum(a, {other, {}}), UsageError);
}

TEST_CASE("Mora basis of the example sum") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"X", "Y"});
  RingSpec loc{r, Setting::Local, {}};
  StandardBasis sb({loc, P(r, "X^2 - Y^3, X^2 - Y^5")}, 20);
  CHECK(sb.initial_ideal().generators == P(r, "X^2, Y^3"));
  CHECK(sb.colength() == 6);
  std::vector<long long> hf;
  for (int d = 0; d < 5; ++d) hf.push_back(sb.hilbert_function(d));
  CHECK(hf == std::vector<long long>{1, 2, 2, 1, 0});
  CHECK(sb.contains(P(r, "Y^3")[0]));
  CHECK(!sb.contains(P(r, "Y^2")[0]));
}

TEST_CASE("local units") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"X", "Y"});
  RingSpec loc{r, Setting::Local, {}};
  StandardBasis unit({loc, P(r, "1 + X")}, 10);
  CHECK(unit.colength() == 0);
  StandardBasis sb({loc, P(r, "X - X^2, Y^2")}, 10);
  CHECK(sb.contains(P(r, "X")[0]));
  CHECK(sb.colength() == 2);
  StandardBasis curve({loc, P(r, "X^2 - Y^3")}, 10);
  CHECK(!curve.colength());
  CHECK(curve.hilbert_function(7) == 2);
}

TEST_CASE("cap guard") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"X", "Y"});
  RingSpec loc{r, Setting::Local, {}};
  CHECK_THROWS_AS(StandardBasis({loc, P(r, "X^6 + Y^7")}, 5), CapExceeded);
}

TEST_CASE("standard basis agrees with truncated linear algebra") {
  auto r = PolyRing::make(FieldSpec::prime(32003), {"X", "Y"});
  RingSpec loc{r, Setting::Local, {}};
  std::mt19937 rng(23);
  int finite = 0;
  for (int t = 0; t < 25; ++t) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) {
      Polynomial f = random_poly(r, rng, 3, 2, 5);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    StandardBasis sb({loc, gens}, 40);
    LocalTruncatedQuotient tq(r, gens, 16);
    for (int d = 0; d < 12; ++d) CHECK(sb.hilbert_function(d) == tq.hilbert_function(d));
    if (auto c = sb.colength(); c && *c < 60) {
      ++finite;
      LocalTruncatedQuotient big(r, gens, 30);
      CHECK(big.dimension() == *c);
    }
  }
  CHECK(finite > 3);
}

TEST_CASE("truncated quotient normal forms are linear") {
  auto r = PolyRing::make(FieldSpec::rationals(), {"X", "Y"});
  LocalTruncatedQuotient t(r, P(r, "X^2 - Y^5"), 8);
  auto f = P(r, "X^3 + Y")[0], g = P(r, "X*Y^2 - 3*X^2")[0];
  CHECK(t.normal_form(f + g) == t.normal_form(f) + t.normal_form(g));
  CHECK(t.normal_form(P(r, "X^2")[0]) == t.normal_form(P(r, "Y^5")[0]));
  CHECK(t.normal_form(P(r, "Y^8")[0]).is_zero());
  for (const auto& m : t.standard_monomials()) CHECK(m.degree() < 8);
}
