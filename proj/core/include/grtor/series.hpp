#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grtor {

/// Position (homological degree i, internal degree j) in a bigraded series.
struct Cell {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Truncated series sum c_{i,j} z^i t^j with 0 <= i <= i_max, 0 <= j <= j_max.
/// Stored coefficients are strictly positive.
class BigradedSeries {
 public:
  BigradedSeries() = default;
  BigradedSeries(int i_max, int j_max);

  int i_max() const noexcept { return i_max_; }
  int j_max() const noexcept { return j_max_; }
  bool in_grid(int i, int j) const noexcept { return i >= 0 && j >= 0 && i <= i_max_ && j <= j_max_; }

  /// Zero outside the grid.
  long long at(int i, int j) const noexcept;
  /// Throws NegativeCoefficient for c < 0 and UsageError outside the grid.
  void set(int i, int j, long long c);
  void add(int i, int j, long long delta);

  const std::map<Cell, long long>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long long total_units() const noexcept;
  /// Per-layer evaluation at t = 1, indexed by i.
  std::vector<long long> layer_sums() const;
  /// sum (-1)^i c_{i,j}
  long long alternating_sum() const noexcept;
  /// Same bounds, coefficients with j > j_limit dropped.
  BigradedSeries restricted_to(int j_limit) const;
  bool same_bounds(const BigradedSeries& other) const noexcept {
    return i_max_ == other.i_max_ && j_max_ == other.j_max_;
  }

  BigradedSeries& operator+=(const BigradedSeries& other);
  friend BigradedSeries operator+(BigradedSeries a, const BigradedSeries& b) { return a += b; }
  friend bool operator==(const BigradedSeries&, const BigradedSeries&) = default;

  /// "z^i*t^j" monomials joined by " + ", e.g. "1 + 2*t + z*t^2".
  std::string to_string() const;

 private:
  int i_max_ = 0;
  int j_max_ = 0;
  std::map<Cell, long long> coeffs_;
};

/// a - b; throws NegativeCoefficient at the first negative cell.
BigradedSeries subtract_nonnegative(const BigradedSeries& a, const BigradedSeries& b);

/// Header line "imax jmax" followed by "i j c" lines; '#' starts a comment.
std::string format_series(const BigradedSeries& s);
BigradedSeries parse_series(std::string_view text);
/// Betti-diagram layout: rows j - i, columns i, '.' for zero.
std::string format_betti_table(const BigradedSeries& s);

/// Removal of z^{i+1} t^a + z^i t^b, with a < b. Its page is b - a.
struct Cancellation {
  int i = 0;
  int a = 0;
  int b = 0;

  int page() const noexcept { return b - a; }
  friend auto operator<=>(const Cancellation&, const Cancellation&) = default;
};

struct CancellationCertificate {
  std::vector<Cancellation> steps;

  /// Ascending page, then i, then a.
  void canonicalize();
  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }
  friend bool operator==(const CancellationCertificate&, const CancellationCertificate&) = default;
};

std::string format_certificate(const CancellationCertificate& cert);
CancellationCertificate parse_certificate(std::string_view text);

/// Decrements (c.i + 1, c.a) and (c.i, c.b). Throws InvalidCancellation when
/// a >= b and CancellationInfeasible when either coefficient is zero.
BigradedSeries subtract_cancellation(const BigradedSeries& h, const Cancellation& c);

enum class VerifyReason {
  Ok,
  InvalidStep,
  InfeasibleStep,
  TargetMismatch,
  BoundsMismatch,
};

std::string_view to_string(VerifyReason reason) noexcept;

struct VerifyResult {
  VerifyReason reason = VerifyReason::Ok;
  std::size_t failed_step = 0;
  std::optional<Cell> mismatch;

  bool ok() const noexcept { return reason == VerifyReason::Ok; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Applies the steps in order and compares with the target. With
/// compare_up_to_j set, only cells with j <= that limit are compared.
VerifyResult verify_certificate(const BigradedSeries& source, const CancellationCertificate& cert,
                                const BigradedSeries& target, std::optional<int> compare_up_to_j = std::nullopt);

}  // namespace grtor
