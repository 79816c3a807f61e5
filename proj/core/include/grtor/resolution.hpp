#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grtor/groebner.hpp"
#include "grtor/series.hpp"

namespace grtor {

/// F_0 <- F_1 <- ... <- F_len over G = spec. Column k of d_i lies in F_{i-1}
/// and has degree shifts[i][k].
struct GradedFreeResolution {
  RingSpec spec;
  std::vector<std::vector<int>> shifts;
  /// maps[i - 1] holds the columns of d_i.
  std::vector<std::vector<PolyVector>> maps;
  int i_max = 0;
  /// Generators above this degree were discarded; exact in degrees <= it.
  std::optional<int> max_degree;
  bool minimal = true;

  std::size_t rank(std::size_t i) const noexcept { return i < shifts.size() ? shifts[i].size() : 0; }
  /// Columns of d_i for i >= 1; empty past the end.
  const std::vector<PolyVector>& differential(std::size_t i) const;
};

/// Minimal graded free resolution up to homological degree i_max.
GradedFreeResolution minimal_resolution(const ModulePresentation& module, int i_max,
                                        std::optional<int> max_degree = std::nullopt);

/// d_i d_{i+1} = 0 modulo the quotient ideal, for every i.
bool is_complex(const GradedFreeResolution& res);
/// No differential entry is a nonzero constant.
bool is_minimal(const GradedFreeResolution& res);

/// Throws UsageError on a non-minimal resolution.
BigradedSeries betti_series(const GradedFreeResolution& res, int j_max);

/// sum dim Tor_i^G(M, N)_j z^i t^j, strand by strand.
BigradedSeries tor_series(const ModulePresentation& m, const ModulePresentation& n, int i_max, int j_max);
bool tor_symmetry_check(const ModulePresentation& m, const ModulePresentation& n, int i_max, int j_max);

/// Eliahou-Kervaire Betti numbers of a stable monomial ideal I:
/// beta_{i, deg u + i} = sum over minimal generators u of C(max(u) - 1, i).
/// Throws UsageError naming the first violation of stability.
BigradedSeries ek_betti_stable(const IdealPresentation& ideal, int i_max, int j_max);

/// (1 + m z t^d + (m-1) z^2 t^{d+1}) * sum_k z^{2k} t^{ke}, truncated.
BigradedSeries example2_closed_form(int n, int m, int d, int e, int i_max, int j_max);

}  // namespace grtor
