#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grtor/linalg.hpp"
#include "grtor/series.hpp"

namespace grtor {

/// L_0 <- L_1 <- ... <- L_{i_max} of finite-dimensional spaces. Basis element
/// b of L_i sits at filtration level levels[i][b] in [0, j_max]; L_i^j is
/// spanned by the elements of level >= j.
struct FilteredComplex {
  FieldSpec field;
  int i_max = 0;
  int j_max = 0;
  /// Quotient by L^{j_max+1} of a larger complex, so data near j_max are
  /// only partially reliable.
  bool truncated = false;
  /// L_{i_max} has a nonzero incoming differential that was cut off.
  bool open_top = false;
  std::vector<std::vector<int>> levels;
  /// differentials[i - 1] is d_i : L_i -> L_{i-1}, a dim L_{i-1} x dim L_i matrix.
  std::vector<Matrix> differentials;

  std::size_t dim(int i) const;
  /// Zero matrix of the right shape outside 1..i_max.
  Matrix d(int i) const;
  int min_level() const;
  int max_level() const;
  /// Number of basis elements of L_i at level exactly j.
  std::size_t level_count(int i, int j) const;

  /// Checks shapes, level range, d^2 = 0 and d(L^j) in L^j.
  void validate() const;
  bool is_filtered() const;
  bool squares_to_zero() const;

  friend bool operator==(const FilteredComplex&, const FilteredComplex&) = default;
};

/// Keeps only the level-preserving part of each differential.
FilteredComplex gr_complex(const FilteredComplex& l);
/// Homology of a complex whose differential preserves levels, split by level.
/// Throws UsageError if some entry changes level.
BigradedSeries level_homology(const FilteredComplex& l);
/// sum_{i,j} (number of level-j basis elements of L_i) z^i t^j
BigradedSeries level_counts(const FilteredComplex& l);

/// Text exchange format: header lines, one "degree" line per L_i with its
/// level vector, sparse "row col scalar" triples per differential, "end".
std::string serialize(const FilteredComplex& l);
FilteredComplex parse_filtered_complex(std::string_view text);

}  // namespace grtor
