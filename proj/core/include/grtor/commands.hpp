#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>

#include "grtor/filtered_complex.hpp"
#include "grtor/job.hpp"
#include "grtor/series.hpp"
#include "grtor/spectral.hpp"

namespace grtor {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnverified = 2;
inline constexpr int kExitWindow = 3;

enum class OutputFormat : std::uint8_t { Table, Series, Json };

OutputFormat parse_output_format(std::string_view text);

struct CommandOptions {
  std::optional<int> i_max;
  std::optional<int> j_max;
  std::optional<int> cap;
  OutputFormat format = OutputFormat::Table;
  /// cancel: require every unit to pair, even at the truncation boundary.
  bool strict = false;
};

struct Bounds {
  int i_max = 6;
  int j_max = 12;
  int cap = 20;
};

/// Options override the job file; cap defaults to j_max + i_max + 2.
Bounds resolve_bounds(const JobSpec& job, const CommandOptions& options);

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
};

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e) noexcept;

/// gr(M) and gr(N) of the job with respect to the m-adic filtration.
struct GradedSide {
  RingSpec ring;
  ModulePresentation m;
  ModulePresentation n;
};
GradedSide graded_side(const JobSpec& job, int cap);

struct TheoremCheck {
  /// Tor^{gr R}(gr M, gr N).
  BigradedSeries source;
  SpectralRun run;
  int window_i = 0;
  int window_j = 0;
  /// Page 1 equals the source series on the cells where it is determinate.
  bool page1_matches = false;
  /// source minus the certificate equals page infinity in the window.
  VerifyResult verification;
  bool window_exhausted = false;

  bool verified() const noexcept { return !window_exhausted && page1_matches && verification.ok(); }
};

/// Regular local R, cyclic M and N.
TheoremCheck check_theorem(const JobSpec& job, const Bounds& bounds);
/// The source series is the level homology of gr L, computed independently
/// of the spectral engine.
TheoremCheck check_synthetic(const FilteredComplex& l);

/// Applies the steps to source and compares with target on i <= window_i,
/// j <= window_j.
VerifyResult verify_in_window(const BigradedSeries& source, const CancellationCertificate& cert,
                              const BigradedSeries& target, int window_i, int window_j);

CommandResult cmd_gr(const JobSpec& job, const CommandOptions& options);
CommandResult cmd_tor_gr(const JobSpec& job, const CommandOptions& options);
CommandResult cmd_check_theorem(const JobSpec& job, const CommandOptions& options);
CommandResult cmd_check_synthetic(const FilteredComplex& l, const CommandOptions& options);
CommandResult cmd_cancel(const BigradedSeries& source, const BigradedSeries& target, const CommandOptions& options);
CommandResult cmd_random_complex(std::uint64_t seed, const RandomComplexParams& params);

}  // namespace grtor
