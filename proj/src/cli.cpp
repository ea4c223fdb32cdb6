#include "mgp/cli.hpp"

#include <cstdlib>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mgp/density.hpp"
#include "mgp/diagnostics.hpp"
#include "mgp/errors.hpp"
#include "mgp/io.hpp"
#include "mgp/model.hpp"
#include "mgp/simulate.hpp"
#include "mgp/stdf.hpp"

namespace mgp::cli {

namespace {

struct Common {
  std::string model_path;
  std::optional<double> mvn_tol;
};

MixtureModel load(const Common& c, std::ostream& err) {
  ModelOptions opts;
  io::ModelSpec spec = io::read_model_file(c.model_path);
  if (c.mvn_tol) spec.mvn_tol = *c.mvn_tol;
  MixtureModel model = io::build_model(spec, opts);
  for (const auto& w : model.warnings()) err << "warning: " << w << "\n";
  return model;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MGP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("MGP_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-")
    out << text;
  else
    io::write_text(out_path, text);
}

int cmd_validate(const Common& c, const std::vector<std::string>& stdf_at, bool echo,
                 std::ostream& out, std::ostream& err) {
  const MixtureModel model = load(c, err);
  if (echo) {
    out << io::model_to_json(model);
    return kOk;
  }
  out << "d = " << model.dim() << "\n";
  out << "r = " << model.factors() << "\n";
  out << "signatures:";
  for (const auto& s : signatures(model)) out << " " << s.to_string();
  out << "\nextreme directions:";
  for (const auto& s : extreme_directions(model)) out << " " << s.to_string();
  out << "\n" << std::fixed << std::setprecision(6);
  out << "l(1) = " << model.ell_one() << "\n";
  out << "face weights:";
  out << std::setprecision(4);
  for (double w : model.face_weights().weights) out << " " << w;
  out << "\n";
  out << std::defaultfloat << std::setprecision(10);
  for (const std::string& point : stdf_at) {
    std::vector<double> y;
    std::stringstream ss(point);
    std::string field;
    while (std::getline(ss, field, ',')) y.push_back(io::parse_double(field));
    if (y.size() != model.dim()) throw ParseError("--stdf-at point has wrong dimension");
    out << "stdf(" << point << ") = " << mixture_stdf(model, y) << "\n";
  }
  return kOk;
}

int cmd_simulate(const Common& c, std::size_t n, std::optional<std::uint64_t> seed,
                 std::size_t workers, std::optional<double> scale, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  const MixtureModel model = load(c, err);
  SimulationConfig config;
  config.n = n;
  config.seed = resolve_seed(seed);
  config.workers = workers;
  const SampleBatch batch = sample_batch(model, config);
  emit(io::points_to_csv(batch.points, model.dim(), scale), out_path, out);
  return kOk;
}

int cmd_density(const Common& c, const std::string& points_path, bool oracle,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  const MixtureModel model = load(c, err);
  const auto rows = io::parse_points_csv(io::read_text(points_path), model.dim());
  std::string text = oracle ? "log_density,oracle_density,rel_discrepancy\n" : "log_density\n";
  for (const auto& row : rows) {
    double ld = -std::numeric_limits<double>::infinity();
    std::optional<MgpPoint> point;
    try {
      point = MgpPoint::from_dense(row);
    } catch (const PreconditionError&) {
      // All coordinates -inf: off the support.
    }
    if (point) ld = log_density(model, *point);
    text += io::format_double(ld);
    if (oracle) {
      const double q = point ? density_oracle(model, *point).value : 0.0;
      const double closed = std::exp(ld);
      const double rel = q > 0.0 ? std::abs(closed - q) / q : std::abs(closed - q);
      text += "," + io::format_double(q) + "," + io::format_double(rel);
    }
    text += "\n";
  }
  emit(text, out_path, out);
  return kOk;
}

int cmd_report(const Common& c, std::size_t n, std::optional<std::uint64_t> seed,
               std::size_t workers, std::ostream& out, std::ostream& err) {
  const MixtureModel model = load(c, err);
  SimulationConfig config;
  config.n = n;
  config.seed = resolve_seed(seed);
  config.workers = workers;
  const SampleBatch batch = sample_batch(model, config);
  const FaceReport report = face_report(model, batch);

  out << "extreme direction   empirical   true     z\n";
  for (const FaceRow& row : report.rows) {
    out << std::left << std::setw(20) << row.direction.to_string() << std::right << std::fixed
        << std::setprecision(4) << std::setw(9) << row.empirical_prob << std::setw(9)
        << row.true_prob << std::setprecision(2) << std::setw(8) << row.z_score << "\n";
  }
  out << "n = " << n << ", proposals = " << batch.proposals << "\n";
  if (n < 1000) {
    out << "distribution checks skipped (need n >= 1000)\n";
    return kOk;
  }
  const DistributionChecks checks = distribution_checks(model, batch);
  out << "\ncheck                                   statistic  threshold  result\n";
  for (const CheckResult& chk : checks.checks) {
    out << std::left << std::setw(40) << chk.name << std::right << std::setprecision(4)
        << std::setw(10) << chk.statistic << std::setw(11) << chk.threshold << "  "
        << (chk.passed ? "pass" : "FAIL") << "\n";
  }
  return checks.all_passed() ? kOk : kChecksFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multivariate generalized Pareto mixture models: validation, simulation, densities"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("model", common.model_path, "Model file (JSON)")->required();
    sub->add_option("--mvn-tol", common.mvn_tol, "Standard-error target for normal CDFs");
  };

  std::vector<std::string> stdf_at;
  bool echo = false;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a model and print its summary");
  add_common(validate_cmd);
  validate_cmd->add_option("--stdf-at", stdf_at, "Evaluate the stdf at x1,...,xd (repeatable)")
      ->take_all();
  validate_cmd->add_flag("--echo", echo, "Print the canonical model document");

  std::size_t n = 1000;
  std::optional<std::uint64_t> seed;
  std::size_t workers = 1;
  std::optional<double> scale;
  std::string out_path;
  auto* simulate_cmd = app.add_subcommand("simulate", "Draw samples and write them as CSV");
  add_common(simulate_cmd);
  simulate_cmd->add_option("-n,--samples", n, "Number of samples")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", seed, "RNG seed (falls back to MGP_SEED, then 0)");
  simulate_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--transform", scale, "Write scale*(exp(Y/scale)-1) instead of Y")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--out", out_path, "Output file (default stdout)");

  std::string points_path;
  bool oracle = false;
  auto* density_cmd = app.add_subcommand("density", "Log-densities of points given as CSV");
  add_common(density_cmd);
  density_cmd->add_option("points", points_path, "Points CSV with header row")->required();
  density_cmd->add_flag("--oracle", oracle, "Add the quadrature value and relative discrepancy");
  density_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* report_cmd = app.add_subcommand("report", "Face frequencies and distribution checks");
  add_common(report_cmd);
  report_cmd->add_option("-n,--samples", n, "Number of samples")->check(CLI::PositiveNumber);
  report_cmd->add_option("--seed", seed, "RNG seed (falls back to MGP_SEED, then 0)");
  report_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageOrParse;
  }

  try {
    if (*validate_cmd) return cmd_validate(common, stdf_at, echo, out, err);
    if (*simulate_cmd) return cmd_simulate(common, n, seed, workers, scale, out_path, out, err);
    if (*density_cmd) return cmd_density(common, points_path, oracle, out_path, out, err);
    if (*report_cmd) return cmd_report(common, n, seed, workers, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidModel;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsageOrParse;
}

}  // namespace mgp::cli
