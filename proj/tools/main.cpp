#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grtor/commands.hpp"
#include "grtor/error.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw grtor::UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tor over associated graded rings and negative consecutive cancellations"};
  app.require_subcommand(1);

  std::optional<int> i_max;
  std::optional<int> j_max;
  std::optional<int> cap;
  std::optional<std::uint64_t> characteristic;
  std::string field_name;
  std::string format = "table";
  std::uint64_t seed = 1;
  bool strict = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--imax", i_max, "largest homological degree (default 6)");
    sub->add_option("--jmax", j_max, "largest internal degree (default 12)");
    sub->add_option("--format", format, "table, series or json")->check(CLI::IsMember({"table", "series", "json"}));
  };
  auto ring_flags = [&](CLI::App* sub) {
    sub->add_option("--cap", cap, "degree cap for local computations (default jmax + imax + 2)");
    sub->add_option("--char", characteristic, "prime characteristic, overrides the job file");
    sub->add_option("--field", field_name, "QQ or GF(p), overrides the job file");
  };

  std::string job_path;
  auto* gr = app.add_subcommand("gr", "initial ideal and Hilbert series of gr(M), gr(N)");
  gr->add_option("job", job_path, "job file")->required();
  common(gr);
  ring_flags(gr);

  auto* tor = app.add_subcommand("tor-gr", "Tor series over the associated graded ring");
  tor->add_option("job", job_path, "job file")->required();
  common(tor);
  ring_flags(tor);

  std::string synthetic;
  auto* check = app.add_subcommand("check-theorem", "spectral sequence, certificate and verdict");
  check->add_option("job", job_path, "job file");
  check->add_option("--synthetic", synthetic, "filtered complex file instead of a job");
  common(check);
  ring_flags(check);

  std::string source_path;
  std::string target_path;
  auto* cancel = app.add_subcommand("cancel", "decide negative consecutive cancellation between two series");
  cancel->add_option("source", source_path, "series file")->required();
  cancel->add_option("target", target_path, "series file")->required();
  cancel->add_flag("--strict", strict, "pair every unit, including those at the truncation boundary");
  cancel->add_option("--format", format, "table, series or json")->check(CLI::IsMember({"table", "series", "json"}));

  grtor::RandomComplexParams params;
  auto* random = app.add_subcommand("random-complex", "print a seeded random filtered complex");
  random->add_option("--seed", seed, "random seed");
  random->add_option("--imax", params.i_max, "largest homological degree");
  random->add_option("--max-dim", params.max_dim, "largest dimension per degree");
  random->add_option("--max-level", params.max_level, "largest filtration level");
  random->add_flag("--strict-graded", params.strictly_graded, "level-preserving differential");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? grtor::kExitOk : grtor::kExitUsage;
  }

  try {
    grtor::CommandOptions options;
    options.i_max = i_max;
    options.j_max = j_max;
    options.cap = cap;
    options.format = grtor::parse_output_format(format);
    options.strict = strict;

    std::optional<grtor::FieldSpec> field;
    if (!field_name.empty()) field = grtor::FieldSpec::parse(field_name);
    if (characteristic) field = *characteristic == 0 ? grtor::FieldSpec::rationals() : grtor::FieldSpec::prime(*characteristic);

    grtor::CommandResult result;
    if (random->parsed()) {
      result = grtor::cmd_random_complex(seed, params);
    } else if (cancel->parsed()) {
      result = grtor::cmd_cancel(grtor::parse_series(read_file(source_path)), grtor::parse_series(read_file(target_path)),
                                 options);
    } else if (check->parsed() && !synthetic.empty()) {
      if (!job_path.empty()) throw grtor::UsageError("give a job file or --synthetic, not both");
      result = grtor::cmd_check_synthetic(grtor::parse_filtered_complex(read_file(synthetic)), options);
    } else {
      if (job_path.empty()) throw grtor::UsageError("missing job file");
      grtor::JobSpec job = grtor::parse_job(read_file(job_path), field);
      if (gr->parsed()) {
        result = grtor::cmd_gr(job, options);
      } else if (tor->parsed()) {
        result = grtor::cmd_tor_gr(job, options);
      } else {
        result = grtor::cmd_check_theorem(job, options);
      }
    }
    std::cout << result.output;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "grtor: " << e.what() << "\n";
    return grtor::exit_code_for(e);
  }
}
