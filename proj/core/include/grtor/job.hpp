#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "grtor/groebner.hpp"
#include "grtor/scalar.hpp"

namespace grtor {

struct JobModule {
  enum class Kind : std::uint8_t { Ideal, Residue, Presentation };
  Kind kind = Kind::Ideal;
  /// Ideal and Residue (the maximal ideal).
  IdealPresentation ideal;
  ModulePresentation presentation;

  bool cyclic() const noexcept { return kind != Kind::Presentation; }
};

struct JobSpec {
  RingSpec ring;
  std::optional<JobModule> m;
  std::optional<JobModule> n;
  std::optional<int> i_max;
  std::optional<int> j_max;
  std::optional<int> cap;
};

/// Sections [ring], [M], [N], [bounds] of "key = value" lines; '#' starts a
/// comment. See README for the keys. A given field replaces the file's.
/// Throws ParseError with the line of the offending entry.
JobSpec parse_job(std::string_view text, std::optional<FieldSpec> field = std::nullopt);

}  // namespace grtor
