#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "grtor/series.hpp"

namespace grtor {

struct DecideOptions {
  /// Units of the difference that could only pair with a partner beyond the
  /// truncation (at j = j_max with i >= 1, or at i = i_max) may stay unmatched.
  bool truncation_boundary = false;
};

enum class DecisionStatus : std::uint8_t { Feasible, FeasibleUpToBoundary, Infeasible };

std::string_view to_string(DecisionStatus status) noexcept;

struct CancellationDecision {
  DecisionStatus status = DecisionStatus::Infeasible;
  /// Canonically ordered. Partial (the matched pairs) when infeasible.
  CancellationCertificate certificate;
  /// First cell where source - target is negative.
  std::optional<Cell> negative_witness;
  std::size_t unmatched_units = 0;
  /// One entry per unit left unmatched at the truncation boundary.
  std::vector<Cell> boundary_indeterminate;

  bool feasible() const noexcept { return status != DecisionStatus::Infeasible; }
};

/// Decides whether target arises from source by negative consecutive
/// cancellations. Throws UsageError when the truncation bounds differ.
CancellationDecision decide_cancellation(const BigradedSeries& source, const BigradedSeries& target,
                                         const DecideOptions& options = {});

}  // namespace grtor
