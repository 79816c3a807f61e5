#include "grtor/cancel.hpp"

#include <algorithm>

#include "grtor/error.hpp"
#include "grtor/matching.hpp"

namespace grtor {

std::string_view to_string(DecisionStatus status) noexcept {
  switch (status) {
    case DecisionStatus::Feasible: return "feasible";
    case DecisionStatus::FeasibleUpToBoundary: return "feasible-up-to-boundary";
    case DecisionStatus::Infeasible: return "infeasible";
  }
  return "?";
}

CancellationDecision decide_cancellation(const BigradedSeries& source, const BigradedSeries& target,
                                         const DecideOptions& options) {
  if (!source.same_bounds(target)) throw UsageError("series truncation bounds differ");
  CancellationDecision out;

  std::vector<Cell> left;   // even i
  std::vector<Cell> right;  // odd i
  for (int i = 0; i <= source.i_max(); ++i) {
    for (int j = 0; j <= source.j_max(); ++j) {
      long long d = source.at(i, j) - target.at(i, j);
      if (d < 0) {
        if (!out.negative_witness) out.negative_witness = Cell{i, j};
        continue;
      }
      for (long long k = 0; k < d; ++k) (i % 2 == 0 ? left : right).push_back(Cell{i, j});
    }
  }
  if (out.negative_witness) return out;

  BipartiteMatcher matcher(left.size(), right.size());
  for (std::size_t l = 0; l < left.size(); ++l) {
    for (std::size_t r = 0; r < right.size(); ++r) {
      const Cell& u = left[l];
      const Cell& v = right[r];
      if ((u.i == v.i + 1 && u.j < v.j) || (v.i == u.i + 1 && v.j < u.j)) matcher.add_edge(l, r);
    }
  }

  auto at_boundary = [&](const Cell& c) {
    return (c.i >= 1 && c.j == source.j_max()) || c.i == source.i_max();
  };

  if (options.truncation_boundary) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t l = 0; l < left.size(); ++l) {
        if (at_boundary(left[l]) == (pass == 1)) matcher.augment_from_left(l);
      }
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t r = 0; r < right.size(); ++r) {
        if (at_boundary(right[r]) == (pass == 1)) matcher.augment_from_right(r);
      }
    }
  } else {
    matcher.maximize();
  }

  for (std::size_t l = 0; l < left.size(); ++l) {
    std::size_t r = matcher.mate_of_left(l);
    if (r == BipartiteMatcher::npos) continue;
    const Cell& hi = left[l].i > right[r].i ? left[l] : right[r];
    const Cell& lo = left[l].i > right[r].i ? right[r] : left[l];
    out.certificate.steps.push_back(Cancellation{lo.i, hi.j, lo.j});
  }
  out.certificate.canonicalize();

  std::vector<Cell> unmatched;
  for (std::size_t l = 0; l < left.size(); ++l) {
    if (matcher.mate_of_left(l) == BipartiteMatcher::npos) unmatched.push_back(left[l]);
  }
  for (std::size_t r = 0; r < right.size(); ++r) {
    if (matcher.mate_of_right(r) == BipartiteMatcher::npos) unmatched.push_back(right[r]);
  }
  out.unmatched_units = unmatched.size();
  if (unmatched.empty()) {
    out.status = DecisionStatus::Feasible;
    return out;
  }
  if (options.truncation_boundary) {
    bool all_boundary = true;
    for (const Cell& c : unmatched) all_boundary = all_boundary && at_boundary(c);
    if (all_boundary) {
      std::sort(unmatched.begin(), unmatched.end());
      out.boundary_indeterminate = std::move(unmatched);
      out.status = DecisionStatus::FeasibleUpToBoundary;
      return out;
    }
  }
  out.status = DecisionStatus::Infeasible;
  return out;
}

}  // namespace grtor
