#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grtor/error.hpp"
#include "grtor/spectral.hpp"

using namespace grtor;

namespace {

// L_1 = <c> at level p, L_0 = <b> at level q, d c = b
FilteredComplex pair_complex(int p, int q, int j_max) {
  FilteredComplex l;
  l.field = FieldSpec::prime(32003);
  l.i_max = 1;
  l.j_max = j_max;
  l.levels = {{q}, {p}};
  Matrix d(l.field, 1, 1);
  d(0, 0) = Scalar(l.field, 5L);
  l.differentials.push_back(d);
  return l;
}

}  // namespace

TEST_CASE("a single pair cancels on page q - p") {
  auto l = pair_complex(1, 4, 6);
  for (int r = 1; r <= 3; ++r) CHECK(page(l, r).dims.to_string() == "t^4 + z*t");
  CHECK(page(l, 4).dims.is_zero());
  CHECK(cancellations_at_page(l, 2).empty());
  auto c = cancellations_at_page(l, 3);
  REQUIRE(c.size() == 1);
  CHECK(c[0].to_cancellation() == Cancellation{0, 1, 4});
  auto run = run_to_stability(l);
  CHECK(run.r_used == 3);
  CHECK(run.stop_page == 4);
  CHECK(run.certificate.steps == std::vector<Cancellation>{{0, 1, 4}});
  CHECK(run.infinity.dims.is_zero());
  CHECK(run.verification.ok());
}

TEST_CASE("level preserving pairs never reach page 1") {
  auto l = pair_complex(2, 2, 4);
  CHECK(page(l, 1).dims.is_zero());
  CHECK(run_to_stability(l).certificate.empty());
}

TEST_CASE("differentials that lower the level are rejected") {
  auto l = pair_complex(3, 1, 4);
  CHECK(!l.is_filtered());
  CHECK_THROWS_AS(l.validate(), UsageError);
}

TEST_CASE("truncation marks cells near the top") {
  auto l = pair_complex(1, 4, 6);
  l.truncated = true;
  auto p2 = page(l, 2);
  CHECK(p2.state(0, 6) == CellState::ZeroByBound);
  CHECK(p2.state(0, 5) == CellState::Value);
  auto p3 = page(l, 3);
  CHECK(p3.state(0, 4) == CellState::Value);
  CHECK(p3.state(1, 6) == CellState::ZeroByBound);
  auto run = run_to_stability(l);
  CHECK(run.window_j == 3);
  CHECK(run.infinity.state(0, 4) == CellState::Indeterminate);
  CHECK(run.infinity.state(1, 5) == CellState::ZeroByBound);
}

TEST_CASE("gr keeps only level preserving entries") {
  auto l = pair_complex(1, 4, 6);
  CHECK(gr_complex(l).differentials[0].is_zero());
  CHECK(level_homology(gr_complex(l)).to_string() == "t^4 + z*t");
  CHECK_THROWS_AS(level_homology(l), UsageError);
}

TEST_CASE("serialization round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto rc = random_filtered_complex(seed);
    CHECK(parse_filtered_complex(serialize(rc.complex)) == rc.complex);
  }
  auto text = serialize(pair_complex(1, 4, 6));
  auto broken = text;
  broken.replace(broken.find("levels 4"), 8, "levels 9");
  CHECK_THROWS_AS(parse_filtered_complex(broken), ParseError);
  CHECK_THROWS_AS(parse_filtered_complex("filtered-complex 2\n"), ParseError);
}

TEST_CASE("random complexes reproduce their scaffold") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    RandomComplexParams p;
    p.strictly_graded = seed % 4 == 0;
    if (seed % 5 == 0) p.field = FieldSpec::rationals();
    auto rc = random_filtered_complex(seed, p);
    CAPTURE(seed);
    REQUIRE(rc.complex.squares_to_zero());
    REQUIRE(rc.complex.is_filtered());
    auto run = run_to_stability(rc.complex);
    CHECK(run.page1().dims == rc.page1);
    CHECK(run.infinity.dims == rc.infinity);
    CHECK(run.certificate == rc.certificate);
    CHECK(run.pages.back().dims == run.infinity.dims);
    if (p.strictly_graded) CHECK(run.certificate.empty());
  }
}

TEST_CASE("random complexes are deterministic in the seed") {
  CHECK(random_filtered_complex(9).complex == random_filtered_complex(9).complex);
  CHECK(!(random_filtered_complex(9).complex == random_filtered_complex(10).complex));
}

TEST_CASE("page transitions balance") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto l = random_filtered_complex(seed).complex;
    for (int r = 1; r <= 7; ++r) {
      auto now = page(l, r), next = page(l, r + 1);
      for (int i = 1; i <= l.i_max; ++i)
        for (int j = 0; j + r <= l.j_max; ++j) {
          auto out = transition_counts(l, r, i, j);
          auto in = transition_counts(l, r, i - 1, j + r);
          CHECK(out.coker_iota == in.ker_pi);
          CHECK(now.dims.at(i, j) - next.dims.at(i, j) == out.coker_iota + out.ker_pi);
        }
    }
  }
}
