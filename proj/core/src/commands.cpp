#include "grtor/commands.hpp"

#include <sstream>

#include <json.hpp>

#include "grtor/cancel.hpp"
#include "grtor/error.hpp"
#include "grtor/local_filtered.hpp"
#include "grtor/resolution.hpp"
#include "grtor/standard_basis.hpp"

namespace grtor {

using nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "series") return OutputFormat::Series;
  if (text == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + std::string(text) + "' (table, series, json)");
}

Bounds resolve_bounds(const JobSpec& job, const CommandOptions& options) {
  Bounds b;
  b.i_max = options.i_max.value_or(job.i_max.value_or(6));
  b.j_max = options.j_max.value_or(job.j_max.value_or(12));
  b.cap = options.cap.value_or(job.cap.value_or(b.j_max + b.i_max + 2));
  if (b.i_max < 0 || b.j_max < 0) throw UsageError("bounds must be nonnegative");
  if (b.cap < b.j_max) throw UsageError("cap must be at least j_max");
  return b;
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const CapExceeded*>(&e) != nullptr || dynamic_cast<const LiftWindowExceeded*>(&e) != nullptr) {
    return kExitWindow;
  }
  return kExitUsage;
}

namespace {

const JobModule& need(const std::optional<JobModule>& m, const char* name) {
  if (!m) throw UsageError(std::string("job has no [") + name + "] section");
  return *m;
}

IdealPresentation with_quotient(const JobSpec& job, const JobModule& m) {
  IdealPresentation out = m.ideal;
  out.generators.insert(out.generators.end(), job.ring.quotient.begin(), job.ring.quotient.end());
  out.spec.quotient.clear();
  return out;
}

ordered_json series_json(const BigradedSeries& s) {
  ordered_json cells = ordered_json::array();
  for (const auto& [cell, c] : s.coefficients()) cells.push_back({cell.i, cell.j, c});
  ordered_json layers = ordered_json::array();
  for (int i = 0; i <= s.i_max(); ++i) {
    BigradedSeries layer(s.i_max(), s.j_max());
    for (int j = 0; j <= s.j_max(); ++j) {
      if (s.at(i, j) > 0) layer.set(i, j, s.at(i, j));
    }
    layers.push_back(layer.to_string());
  }
  return {{"i_max", s.i_max()}, {"j_max", s.j_max()}, {"cells", cells}, {"layers", layers}};
}

ordered_json certificate_json(const CancellationCertificate& cert) {
  ordered_json steps = ordered_json::array();
  for (const auto& c : cert.steps) steps.push_back({{"i", c.i}, {"a", c.a}, {"b", c.b}, {"page", c.page()}});
  return steps;
}

std::string layer_lines(const BigradedSeries& s, const std::string& indent) {
  std::ostringstream out;
  for (int i = 0; i <= s.i_max(); ++i) {
    BigradedSeries layer(s.i_max(), s.j_max());
    for (int j = 0; j <= s.j_max(); ++j) {
      if (s.at(i, j) > 0) layer.set(i, j, s.at(i, j));
    }
    out << indent << "i=" << i << ": " << layer.to_string() << "\n";
  }
  return out.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct ModuleGr {
  std::string name;
  std::vector<std::string> initial_ideal;
  std::vector<long long> hilbert;
  std::optional<long long> colength;
};

ModuleGr gr_of(const JobSpec& job, const JobModule& m, const std::string& name, const Bounds& b) {
  if (!m.cyclic()) throw UsageError("gr needs a cyclic module ([" + name + "] uses a presentation)");
  ModuleGr out;
  out.name = name;
  IdealPresentation ideal = with_quotient(job, m);
  ideal.spec.setting = Setting::Local;
  StandardBasis sb(ideal, b.cap);
  if (job.ring.setting == Setting::Graded) {
    for (const auto& g : m.ideal.generators) out.initial_ideal.push_back(g.to_string());
  } else {
    for (const auto& g : sb.initial_ideal().generators) out.initial_ideal.push_back(g.to_string());
  }
  for (int d = 0; d <= b.j_max; ++d) out.hilbert.push_back(sb.hilbert_function(d));
  out.colength = sb.colength();
  return out;
}

BigradedSeries hilbert_series(const std::vector<long long>& h) {
  BigradedSeries s(0, static_cast<int>(h.size()) - 1);
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d] > 0) s.set(0, static_cast<int>(d), h[d]);
  }
  return s;
}

}  // namespace

GradedSide graded_side(const JobSpec& job, int cap) {
  const JobModule& m = need(job.m, "M");
  const JobModule& n = need(job.n, "N");
  if (job.ring.setting == Setting::Graded) return GradedSide{job.ring, m.presentation, n.presentation};
  if (!m.cyclic() || !n.cyclic()) throw UsageError("the local setting needs cyclic modules");
  GradedSide out;
  out.ring = RingSpec{job.ring.ring, Setting::Graded, {}};
  if (!job.ring.quotient.empty()) {
    IdealPresentation q{RingSpec{job.ring.ring, Setting::Local, {}}, job.ring.quotient};
    out.ring.quotient = StandardBasis(q, cap).initial_ideal().generators;
  }
  auto gr = [&](const JobModule& x) {
    IdealPresentation in = StandardBasis(with_quotient(job, x), cap).initial_ideal();
    in.spec = out.ring;
    return ModulePresentation::cyclic(in);
  };
  out.m = gr(m);
  out.n = gr(n);
  return out;
}

VerifyResult verify_in_window(const BigradedSeries& source, const CancellationCertificate& cert,
                              const BigradedSeries& target, int window_i, int window_j) {
  VerifyResult result;
  if (!source.same_bounds(target)) {
    result.reason = VerifyReason::BoundsMismatch;
    return result;
  }
  BigradedSeries h = source;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    try {
      h = subtract_cancellation(h, cert.steps[k]);
    } catch (const InvalidCancellation&) {
      result.reason = VerifyReason::InvalidStep;
      result.failed_step = k;
      return result;
    } catch (const CancellationInfeasible&) {
      result.reason = VerifyReason::InfeasibleStep;
      result.failed_step = k;
      return result;
    }
  }
  for (int i = 0; i <= std::min(window_i, source.i_max()); ++i) {
    for (int j = 0; j <= std::min(window_j, source.j_max()); ++j) {
      if (h.at(i, j) != target.at(i, j)) {
        result.reason = VerifyReason::TargetMismatch;
        result.mismatch = Cell{i, j};
        return result;
      }
    }
  }
  return result;
}

namespace {

TheoremCheck finish(BigradedSeries source, SpectralRun run) {
  TheoremCheck t;
  t.window_i = run.window_i;
  t.window_j = run.window_j;
  t.window_exhausted = run.window_exhausted;
  t.page1_matches = true;
  const SpectralPage& p1 = run.page1();
  for (int i = 0; i <= source.i_max(); ++i) {
    for (int j = 0; j <= source.j_max(); ++j) {
      if (p1.determinate(i, j) && p1.dims.at(i, j) != source.at(i, j)) t.page1_matches = false;
    }
  }
  t.verification = verify_in_window(source, run.certificate, run.infinity.dims, t.window_i, t.window_j);
  t.source = std::move(source);
  t.run = std::move(run);
  return t;
}

}  // namespace

TheoremCheck check_theorem(const JobSpec& job, const Bounds& bounds) {
  if (job.ring.setting != Setting::Local || !job.ring.quotient.empty()) {
    throw UsageError("check-theorem needs a local ring without quotient (or --synthetic)");
  }
  const JobModule& m = need(job.m, "M");
  const JobModule& n = need(job.n, "N");
  if (!m.cyclic() || !n.cyclic()) throw UsageError("check-theorem needs cyclic modules");
  GradedSide g = graded_side(job, bounds.cap);
  BigradedSeries source = tor_series(g.m, g.n, bounds.i_max, bounds.j_max);
  CyclicLift lift = lift_cyclic(m.ideal, bounds.i_max + 1, bounds.cap);
  FilteredComplex l = filtered_tensor(lift.resolution, n.ideal, bounds.i_max, bounds.j_max);
  return finish(std::move(source), run_to_stability(l));
}

TheoremCheck check_synthetic(const FilteredComplex& l) {
  l.validate();
  return finish(level_homology(gr_complex(l)), run_to_stability(l));
}

CommandResult cmd_gr(const JobSpec& job, const CommandOptions& options) {
  Bounds b = resolve_bounds(job, options);
  std::vector<ModuleGr> mods;
  if (job.m) mods.push_back(gr_of(job, *job.m, "M", b));
  if (job.n) mods.push_back(gr_of(job, *job.n, "N", b));
  if (mods.empty()) throw UsageError("job has neither [M] nor [N]");
  std::ostringstream out;
  switch (options.format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["command"] = "gr";
      j["modules"] = ordered_json::array();
      for (const auto& m : mods) {
        ordered_json e;
        e["name"] = m.name;
        e["initial_ideal"] = m.initial_ideal;
        e["hilbert"] = m.hilbert;
        e["colength"] = m.colength ? ordered_json(*m.colength) : ordered_json(nullptr);
        j["modules"].push_back(e);
      }
      j["validity_window"] = {{"j_max", b.j_max}};
      out << dump(j);
      break;
    }
    case OutputFormat::Series:
      for (const auto& m : mods) {
        out << "# " << m.name << " initial ideal:";
        for (const auto& g : m.initial_ideal) out << " " << g;
        out << "\n" << format_series(hilbert_series(m.hilbert));
      }
      break;
    case OutputFormat::Table:
      for (const auto& m : mods) {
        out << m.name << ": initial ideal (";
        for (std::size_t k = 0; k < m.initial_ideal.size(); ++k) out << (k ? ", " : "") << m.initial_ideal[k];
        out << ")\n  hilbert series: " << hilbert_series(m.hilbert).to_string() << "\n";
        out << "  colength: " << (m.colength ? std::to_string(*m.colength) : std::string("infinite")) << "\n";
      }
      break;
  }
  return {kExitOk, out.str()};
}

CommandResult cmd_tor_gr(const JobSpec& job, const CommandOptions& options) {
  Bounds b = resolve_bounds(job, options);
  GradedSide g = graded_side(job, b.cap);
  BigradedSeries s = tor_series(g.m, g.n, b.i_max, b.j_max);
  std::ostringstream out;
  switch (options.format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["command"] = "tor-gr";
      j["series"] = series_json(s);
      j["validity_window"] = {{"i_max", b.i_max}, {"j_max", b.j_max}};
      out << dump(j);
      break;
    }
    case OutputFormat::Series:
      out << format_series(s);
      break;
    case OutputFormat::Table:
      out << "Tor series by homological degree:\n" << layer_lines(s, "  ") << "\n" << format_betti_table(s);
      break;
  }
  return {kExitOk, out.str()};
}

namespace {

CommandResult report(const TheoremCheck& t, const CommandOptions& options, const char* command) {
  const int code = t.verified() ? kExitOk : (t.window_exhausted ? kExitWindow : kExitUnverified);
  const std::string verdict = t.verified() ? "PASS" : (t.window_exhausted ? "WINDOW-EXHAUSTED" : "FAIL");
  std::ostringstream out;
  switch (options.format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["command"] = command;
      j["source"] = series_json(t.source);
      j["page1"] = series_json(t.run.page1().dims);
      j["page_infinity"] = series_json(t.run.infinity.dims);
      j["certificate"] = certificate_json(t.run.certificate);
      j["pages_used"] = t.run.r_used;
      j["stop_page"] = t.run.stop_page;
      j["page1_matches_source"] = t.page1_matches;
      j["verification"] = std::string(to_string(t.verification.reason));
      if (t.verification.mismatch) j["mismatch"] = {t.verification.mismatch->i, t.verification.mismatch->j};
      j["validity_window"] = {{"i_max", t.window_i}, {"j_max", t.window_j}};
      j["verdict"] = verdict;
      out << dump(j);
      break;
    }
    case OutputFormat::Series:
      out << "# source\n" << format_series(t.source);
      out << "# page infinity\n" << format_series(t.run.infinity.dims);
      out << format_certificate(t.run.certificate);
      out << "# window i <= " << t.window_i << ", j <= " << t.window_j << "\n# verdict " << verdict << "\n";
      break;
    case OutputFormat::Table:
      out << "source (Tor over the associated graded ring):\n" << layer_lines(t.source, "  ");
      out << "page 1 (determinate cells):\n" << layer_lines(t.run.page1().reliable(), "  ");
      out << "page infinity (determinate cells):\n" << layer_lines(t.run.infinity.reliable(), "  ");
      out << "certificate (" << t.run.certificate.size() << " steps, i a b):\n";
      for (const auto& c : t.run.certificate.steps) out << "  " << c.i << " " << c.a << " " << c.b << "\n";
      out << "last nonzero page: " << t.run.r_used << ", stable from page " << t.run.stop_page << "\n";
      out << "window: i <= " << t.window_i << ", j <= " << t.window_j << "\n";
      out << "page 1 matches source: " << (t.page1_matches ? "yes" : "no") << "\n";
      out << "verification: " << to_string(t.verification.reason);
      if (t.verification.mismatch) out << " at (" << t.verification.mismatch->i << ", " << t.verification.mismatch->j << ")";
      out << "\nverdict: " << verdict << "\n";
      break;
  }
  return {code, out.str()};
}

}  // namespace

CommandResult cmd_check_theorem(const JobSpec& job, const CommandOptions& options) {
  return report(check_theorem(job, resolve_bounds(job, options)), options, "check-theorem");
}

CommandResult cmd_check_synthetic(const FilteredComplex& l, const CommandOptions& options) {
  return report(check_synthetic(l), options, "check-theorem");
}

CommandResult cmd_cancel(const BigradedSeries& source, const BigradedSeries& target, const CommandOptions& options) {
  DecideOptions opts;
  opts.truncation_boundary = !options.strict;
  CancellationDecision d = decide_cancellation(source, target, opts);
  std::ostringstream out;
  switch (options.format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["command"] = "cancel";
      j["status"] = std::string(to_string(d.status));
      j["certificate"] = certificate_json(d.certificate);
      if (d.negative_witness) j["negative_witness"] = {d.negative_witness->i, d.negative_witness->j};
      j["unmatched_units"] = d.unmatched_units;
      ordered_json boundary = ordered_json::array();
      for (const auto& c : d.boundary_indeterminate) boundary.push_back({c.i, c.j});
      j["boundary_indeterminate"] = boundary;
      j["validity_window"] = {{"i_max", source.i_max()}, {"j_max", source.j_max()}};
      out << dump(j);
      break;
    }
    case OutputFormat::Series:
    case OutputFormat::Table:
      out << "# status " << to_string(d.status) << "\n";
      if (d.negative_witness) out << "# negative at (" << d.negative_witness->i << ", " << d.negative_witness->j << ")\n";
      if (!d.feasible() && !d.negative_witness) out << "# unmatched units " << d.unmatched_units << "\n";
      for (const auto& c : d.boundary_indeterminate) out << "# boundary unit at (" << c.i << ", " << c.j << ")\n";
      out << format_certificate(d.certificate);
      break;
  }
  return {d.feasible() ? kExitOk : kExitUnverified, out.str()};
}

CommandResult cmd_random_complex(std::uint64_t seed, const RandomComplexParams& params) {
  return {kExitOk, serialize(random_filtered_complex(seed, params).complex)};
}

}  // namespace grtor
