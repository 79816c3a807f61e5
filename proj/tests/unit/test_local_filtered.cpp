#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grtor/error.hpp"
#include "grtor/local_filtered.hpp"
#include "grtor/spectral.hpp"
#include "grtor/standard_basis.hpp"

using namespace grtor;

namespace {

struct Fixture {
  RingPtr r = PolyRing::make(FieldSpec::rationals(), {"X", "Y"});
  RingSpec loc{r, Setting::Local, {}};
  IdealPresentation ideal(const char* text) const { return {loc, parse_polynomial_list(r, text)}; }
  Polynomial poly(const char* text) const { return parse_polynomial(r, text); }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "principal ideals lift without corrections") {
  auto lift = lift_cyclic(ideal("X^2 - Y^3"), 3, 12);
  const auto& f = lift.resolution;
  CHECK(f.length() == 1);
  CHECK(f.shifts == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(f.differential(1)[0][0] == poly("X^2 - Y^3"));
  CHECK(lift.initial_ideal.generators == std::vector<Polynomial>{poly("X^2")});
  CHECK(is_lift_of(f, lift.graded));
  CHECK(f.filtration(1).kind == StableFiltration::Kind::ShiftedMAdic);
}

TEST_CASE_FIXTURE(Fixture, "two generator lift needs a correction") {
  auto lift = lift_cyclic(ideal("X*Y, X^2 + Y^3"), 3, 14);
  const auto& f = lift.resolution;
  CHECK(squares_to_zero(f));
  CHECK(is_lift_of(f, lift.graded));
  CHECK(f.rank(1) == 3);
  CHECK(f.rank(2) == 2);
  bool differs = false;
  for (std::size_t k = 0; k < f.rank(2); ++k) differs = differs || !(f.differential(2)[k] == lift.graded.differential(2)[k]);
  CHECK(differs);
}

TEST_CASE_FIXTURE(Fixture, "lifts satisfy both postconditions") {
  for (const char* gens : {"X^2 + Y^5, X*Y + Y^4", "X^3 - Y^4, X*Y^2", "X^2 - X*Y^2, Y^3 + X^3, X^2*Y", "X*Y - Y^3, X^3 + Y^5",
                           "X^2 + Y^3 + X*Y^2, X*Y^2 + Y^4"}) {
    CAPTURE(gens);
    auto lift = lift_cyclic(ideal(gens), 3, 16);
    CHECK(squares_to_zero(lift.resolution));
    CHECK(is_lift_of(lift.resolution, lift.graded));
  }
}

TEST_CASE_FIXTURE(Fixture, "lift input checks") {
  RingSpec graded{r, Setting::Graded, {}};
  CHECK_THROWS_AS(lift_cyclic({graded, parse_polynomial_list(r, "X^2")}, 2, 8), UsageError);
  auto lift = lift_cyclic(ideal("X*Y, X^2 + Y^3"), 3, 14);
  CHECK_THROWS_AS(lift_resolution(lift.graded, {}, 14), UsageError);
}

TEST_CASE_FIXTURE(Fixture, "tensoring with R gives the truncated resolution") {
  auto lift = lift_cyclic(ideal("X*Y, X^2 + Y^3"), 3, 10);
  auto l = filtered_tensor(lift.resolution, IdealPresentation{loc, {}}, 3, 6);
  CHECK(l.truncated);
  CHECK(!l.open_top);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 6; ++j) {
      long long want = 0;
      for (int a : lift.resolution.shifts[static_cast<std::size_t>(i)]) want += j >= a ? j - a + 1 : 0;
      CHECK(l.level_count(i, j) == static_cast<std::size_t>(want));
    }
}

TEST_CASE_FIXTURE(Fixture, "example 1 complex") {
  auto lift = lift_cyclic(ideal("X^2 - Y^3"), 3, 15);
  auto l = filtered_tensor(lift.resolution, ideal("X^2 - Y^5"), 2, 12);
  CHECK(l.is_filtered());
  CHECK(l.squares_to_zero());
  CHECK(l.dim(0) == 25);
  CHECK(l.dim(1) == 21);
  CHECK(l.dim(2) == 0);
  auto gr = level_homology(gr_complex(l));
  CHECK(gr.at(0, 5) == 2);
  CHECK(gr.at(1, 2) == 1);
  CHECK(gr.at(1, 12) == 2);
  CHECK(gr.at(0, 0) == 1);
  CHECK_THROWS_AS(filtered_tensor(lift.resolution, ideal("X^2 - Y^5"), 2, 16), UsageError);
}

TEST_CASE_FIXTURE(Fixture, "open top when the resolution continues") {
  auto lift = lift_cyclic(ideal("X*Y, X^2 + Y^3"), 3, 10);
  auto l = filtered_tensor(lift.resolution, ideal("X, Y"), 1, 8);
  CHECK(l.open_top);
  auto p = page(l, 1);
  CHECK(p.state(1, 2) == CellState::Indeterminate);
  CHECK(p.state(0, 0) == CellState::Value);
}

TEST_CASE_FIXTURE(Fixture, "homogeneous input has no cancellations") {
  auto lift = lift_cyclic(ideal("X^2, X*Y^2"), 3, 12);
  auto l = filtered_tensor(lift.resolution, ideal("Y^3"), 2, 10);
  auto run = run_to_stability(l);
  CHECK(run.certificate.empty());
  CHECK(run.page1().dims == run.infinity.dims);
  CHECK(level_homology(gr_complex(l)) == run.page1().dims);
}

TEST_CASE_FIXTURE(Fixture, "example 1 low Tor") {
  auto t = tor_local_low(ideal("X^2 - Y^3"), ideal("X^2 - Y^5"), 10, 30);
  CHECK(t.tor1_zero);
  CHECK(t.tor0_length == 6);
  long long total = 0;
  for (long long v : t.tor0_series) total += v;
  CHECK(total == 6);
  CHECK(t.tor0_series[3] == 1);
}

TEST_CASE_FIXTURE(Fixture, "principal self Tor") {
  auto t = tor_local_low(ideal("X^2 - Y^3"), ideal("X^2 - Y^3"), 8, 30);
  CHECK(!t.tor1_zero);
  CHECK(!t.tor0_length);
  CHECK(t.tor1_series == std::vector<long long>{0, 0, 1, 2, 2, 2, 2, 2, 2});
}

TEST_CASE_FIXTURE(Fixture, "unit sum") {
  auto t = tor_local_low(ideal("1 + X"), ideal("Y"), 4, 10);
  CHECK(t.tor0_length == 0);
  CHECK(t.tor1_zero);
}

TEST_CASE_FIXTURE(Fixture, "low Tor agrees with the spectral pipeline") {
  for (auto [a, b] : {std::pair{"X^2 - Y^3", "X^2 - Y^5"}, std::pair{"X*Y, X^2 + Y^3", "X - Y^2"}, std::pair{"X^3 + Y^4", "X*Y"}}) {
    CAPTURE(a);
    const int j_max = 10;
    auto t = tor_local_low(ideal(a), ideal(b), j_max, 30);
    auto lift = lift_cyclic(ideal(a), 3, j_max + 4);
    auto run = run_to_stability(filtered_tensor(lift.resolution, ideal(b), 2, j_max));
    for (int j = 0; j <= run.window_j; ++j) CHECK(run.infinity.dims.at(0, j) == t.tor0_series[static_cast<std::size_t>(j)]);
  }
}
