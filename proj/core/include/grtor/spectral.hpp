#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grtor/filtered_complex.hpp"
#include "grtor/series.hpp"

namespace grtor {

enum class CellState : std::uint8_t { Value, Indeterminate, ZeroByBound };

std::string_view to_string(CellState state) noexcept;

/// dim E_r(i, j) of the spectral sequence of a filtered complex; page 1 is
/// the homology of gr L. Dimensions are those of the given finite complex;
/// states say which cells are guaranteed for the complex it truncates.
struct SpectralPage {
  int r = 1;
  bool infinite = false;
  BigradedSeries dims;
  /// Cells that are not plain values.
  std::map<Cell, CellState> states;

  CellState state(int i, int j) const;
  bool determinate(int i, int j) const { return state(i, j) != CellState::Indeterminate; }
  /// dims restricted to determinate cells.
  BigradedSeries reliable() const;
};

/// r-th differential kills `multiplicity` classes at (i, j) against classes
/// at (i - 1, j + r).
struct PageCancellation {
  int r = 1;
  int i = 1;
  int j = 0;
  long long multiplicity = 1;

  Cancellation to_cancellation() const noexcept { return Cancellation{i - 1, j, j + r}; }
  friend bool operator==(const PageCancellation&, const PageCancellation&) = default;
};

struct PageTransition {
  long long coker_iota = 0;
  long long ker_pi = 0;
};

/// Units leaving E_r(i, j) between pages r and r + 1, split into cycles that
/// stop being cycles and classes that become boundaries.
PageTransition transition_counts(const FilteredComplex& l, int r, int i, int j);

SpectralPage page(const FilteredComplex& l, int r);
/// gr of homology with the induced filtration, computed directly. Truncated
/// complexes are reliable for j <= j_max - max(r_used, 1).
SpectralPage infinity_page(const FilteredComplex& l, int r_used = 1);
std::vector<PageCancellation> cancellations_at_page(const FilteredComplex& l, int r);

struct SpectralRun {
  std::vector<SpectralPage> pages;
  SpectralPage infinity;
  std::vector<PageCancellation> cancellations;
  CancellationCertificate certificate;
  /// First r > level span with E_r = E_{r+1}.
  int stop_page = 1;
  /// Largest page with a nonzero differential (at least 1).
  int r_used = 1;
  /// Largest internal degree of the reliable region.
  int window_j = 0;
  /// Highest reliable homological degree.
  int window_i = 0;
  bool window_exhausted = false;
  VerifyResult verification;

  const SpectralPage& page1() const { return pages.front(); }
};

SpectralRun run_to_stability(const FilteredComplex& l);

struct RandomComplexParams {
  int i_max = 3;
  int max_dim = 8;
  int max_level = 6;
  bool strictly_graded = false;
  FieldSpec field = FieldSpec::prime(32003);
};

/// A filtered complex together with its known spectral sequence.
struct RandomComplex {
  FilteredComplex complex;
  BigradedSeries page1;
  BigradedSeries infinity;
  CancellationCertificate certificate;
};

/// Scaffold of homology classes and pairs c -> b (level of b >= level of c)
/// conjugated by random filtered automorphisms and a basis permutation.
/// Deterministic in the seed.
RandomComplex random_filtered_complex(std::uint64_t seed, const RandomComplexParams& params = {});

}  // namespace grtor
