#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grtor/filtered_complex.hpp"
#include "grtor/groebner.hpp"
#include "grtor/resolution.hpp"

namespace grtor {

/// M^j = M (j <= 0 shifted), m^j M for m-adic; on a free module with
/// generators in degrees a_k, F^j = sum m^{j - a_k} e_k.
struct StableFiltration {
  enum class Kind : std::uint8_t { MAdic, ShiftedMAdic };
  Kind kind = Kind::MAdic;
  std::vector<int> shifts;
  /// m M^j = M^{j+1} for every j >= stability_bound.
  int stability_bound = 0;
};

/// Free resolution over k[x]_(x) whose entries are polynomials truncated so
/// that row r of d_i keeps degrees <= cap - (shift of row r).
struct FilteredResolution {
  RingPtr ring;
  std::vector<std::vector<int>> shifts;
  /// maps[i - 1] holds the columns of d_i.
  std::vector<std::vector<PolyVector>> maps;
  int cap = 0;
  int i_max = 0;

  std::size_t rank(std::size_t i) const noexcept { return i < shifts.size() ? shifts[i].size() : 0; }
  const std::vector<PolyVector>& differential(std::size_t i) const;
  StableFiltration filtration(std::size_t i) const;
  /// Homological length actually computed (last i with F_i != 0).
  int length() const noexcept { return static_cast<int>(shifts.size()) - 1; }
};

/// Columns of d_i are filtered and their level-a_k parts are the graded
/// columns of gres.
bool is_lift_of(const FilteredResolution& f, const GradedFreeResolution& gres);
/// d_{i-1} d_i vanishes in every level <= cap.
bool squares_to_zero(const FilteredResolution& f);

/// Lifts gres (over k[x], no quotient) given a lift of d_1, correcting the
/// higher differentials order by order up to level cap.
/// Throws LiftWindowExceeded when a correction has no solution.
FilteredResolution lift_resolution(const GradedFreeResolution& gres, const std::vector<PolyVector>& first_differential,
                                   int cap);

struct CyclicLift {
  FilteredResolution resolution;
  /// Minimal resolution of gr(R/I) = k[x]/in(I).
  GradedFreeResolution graded;
  IdealPresentation initial_ideal;
};

/// Lift of the minimal resolution of k[x]/in(I) to a resolution of R/I,
/// I in the local setting, up to homological degree i_max.
CyclicLift lift_cyclic(const IdealPresentation& ideal, int i_max, int cap);

/// L = F (x) R/J' with the tensor filtration (shifted m-adic on F, m-adic on
/// R/J'), cut at level j_max + 1. Needs cap >= j_max. L_i exists for
/// i <= min(i_max, length of F); open_top marks a nonzero F_{i_max + 1}.
FilteredComplex filtered_tensor(const FilteredResolution& f, const IdealPresentation& other, int i_max, int j_max);

struct LocalTorLow {
  /// dim_k R/(I + J), nullopt when infinite.
  std::optional<long long> tor0_length;
  /// Hilbert function of gr_m(R/(I + J)) for j = 0..j_max.
  std::vector<long long> tor0_series;
  bool tor1_zero = true;
  /// Hilbert function of gr((I cap J)/IJ) with the filtration induced from R.
  std::vector<long long> tor1_series;
};

/// Tor_0 = R/(I + J) and Tor_1 = (I cap J)/IJ by standard bases.
LocalTorLow tor_local_low(const IdealPresentation& i, const IdealPresentation& j, int j_max, int cap);

}  // namespace grtor
