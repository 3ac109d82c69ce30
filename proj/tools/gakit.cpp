#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gakit/cli/check.hpp"
#include "gakit/cli/deform.hpp"
#include "gakit/cli/evaluate.hpp"
#include "gakit/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::optional<double> tolerance_from_env() {
  const char* raw = std::getenv("GAKIT_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != std::string(raw).size() || !(v >= 0.0)) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw gakit::ArgumentError(std::string("GAKIT_TOLERANCE is not a nonnegative number: ") + raw);
  }
}

std::optional<gakit::MetricTensor> load_metric(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return gakit::json_io::metric_from_json(gakit::json_io::load_file(path));
}

gakit::cli::SessionConfig make_session(int n, const std::string& metric_path) {
  auto metric = load_metric(metric_path);
  if (metric && n == 0) n = metric->dim();
  gakit::cli::SessionConfig cfg(n == 0 ? 3 : n, std::move(metric));
  cfg.tolerance = tolerance_from_env();
  return cfg;
}

int run_eval(int n, const std::string& metric_path, const std::string& expr, bool hodge) {
  const auto cfg = make_session(n, metric_path);
  auto ast = gakit::cli::parse(expr, cfg.n);
  if (hodge) ast = gakit::cli::make_unary(gakit::cli::UnaryOp::hodge, ast);
  std::cout << gakit::cli::format_value(gakit::cli::eval(*ast, cfg), cfg.precision) << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"gakit: geometric algebra with arbitrary metrics"};
  app.require_subcommand(1);

  int n = 0;
  std::string metric_path;
  std::string eta_path;
  std::string expr;
  std::uint64_t seed = 0;
  int trials = 100;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a multivector expression");
  eval_cmd->add_option("-n,--dim", n, "dimension (default: metric dimension, else 3)");
  eval_cmd->add_option("--metric", metric_path, "metric JSON file")->check(CLI::ExistingFile);
  eval_cmd->add_option("expr", expr, "expression")->required();

  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge dual of an expression under the session metric");
  hodge_cmd->add_option("-n,--dim", n, "dimension (default: metric dimension, else 3)");
  hodge_cmd->add_option("--metric", metric_path, "metric JSON file")->check(CLI::ExistingFile);
  hodge_cmd->add_option("expr", expr, "expression")->required();

  auto* check_cmd = app.add_subcommand("check", "run the identity-verification harness");
  check_cmd->add_option("--seed", seed, "random seed")->required();
  check_cmd->add_option("--trials", trials, "trials per identity")->required();
  check_cmd->add_option("-n,--dim", n, "dimension (default: metric dimension, else 4)");
  check_cmd->add_option("--metric", metric_path, "metric JSON file")->check(CLI::ExistingFile);

  auto* deform_cmd = app.add_subcommand("deform", "gauge extensor h with g = h^T eta h");
  deform_cmd->add_option("--metric", metric_path, "metric JSON file")->required()->check(CLI::ExistingFile);
  deform_cmd->add_option("--eta", eta_path, "target metric JSON file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(n, metric_path, expr, false);
    if (hodge_cmd->parsed()) return run_eval(n, metric_path, expr, true);
    if (check_cmd->parsed()) {
      if (n == 0 && metric_path.empty()) n = 4;
      const auto cfg = make_session(n, metric_path);
      const auto report = gakit::cli::check_identities(cfg, seed, trials);
      std::cout << report.text();
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
    const auto g = load_metric(metric_path);
    const auto eta = load_metric(eta_path);
    const auto report = gakit::cli::deform(*g, eta);
    std::cout << report.to_json().dump(2) << '\n';
    const double tol = tolerance_from_env().value_or(gakit::cli::kDeformTolerance);
    if (!(report.residual < tol)) {
      std::cerr << "error: congruence residual " << report.residual << " exceeds " << tol << '\n';
      return kExitNumeric;
    }
    return kExitOk;
  } catch (const gakit::cli::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gakit::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gakit::Error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
}
