#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gklab/error.hpp"
#include "gklab/experiments.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitPartial = 3;
constexpr int kExitInternal = 4;

std::string kind_list() {
  std::string out;
  for (auto kind : gklab::all_kinds()) {
    out += (out.empty() ? "" : ", ") + std::string(gklab::to_string(kind));
  }
  return out;
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw gklab::Error(gklab::ErrorCode::validation,
                       "config: cannot open '" + path + "'");
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw gklab::Error(gklab::ErrorCode::validation,
                       "config: " + std::string(e.what()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grunwald-Kantorovich operator experiments"};
  app.set_version_flag("--version", "gklab 1.0.0");

  std::string kind_name;
  std::string config_path;
  std::vector<int> n_set;
  std::vector<std::string> functions;
  std::vector<double> p_set;
  std::vector<double> m_set;
  std::optional<double> eps;
  std::optional<std::size_t> grid;
  std::optional<double> alpha;
  std::string out;

  app.add_option("kind", kind_name, "Experiment kind: " + kind_list())->required();
  app.add_option("--config", config_path, "JSON experiment config");
  app.add_option("--n", n_set, "Degrees, comma separated")->delimiter(',');
  app.add_option("--functions", functions, "Corpus functions, comma separated")
      ->delimiter(',');
  app.add_option("--p", p_set, "Exponents, comma separated")->delimiter(',');
  app.add_option("--m", m_set, "Hat heights for l1-unbounded, comma separated")
      ->delimiter(',');
  app.add_option("--eps", eps, "Interior margin for maximal and weighted");
  app.add_option("--grid", grid, "Evaluation grid size");
  app.add_option("--alpha", alpha, "Power weight exponent for weighted");
  app.add_option("--out", out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const auto kind = gklab::parse_kind(kind_name);
    if (!kind) {
      throw gklab::Error(gklab::ErrorCode::usage, "unknown experiment '" +
                                                      kind_name + "' (known: " +
                                                      kind_list() + ")");
    }
    gklab::ExperimentConfig config =
        config_path.empty()
            ? gklab::default_config(*kind)
            : gklab::config_from_json(*kind, load_config(config_path));
    if (!n_set.empty()) config.n_set = n_set;
    if (!functions.empty()) config.functions = functions;
    if (!p_set.empty()) config.p_set = p_set;
    if (!m_set.empty()) config.m_set = m_set;
    if (eps) config.eps = *eps;
    if (grid) config.grid = *grid;
    if (alpha) config.weight = gklab::WeightSpec::power(*alpha);
    if (!out.empty()) config.out = out;
    gklab::validate(config);

    const gklab::Report report = gklab::run_experiment(config);
    gklab::write_report(report, config.out);

    std::size_t failed_checks = 0;
    for (const auto& [name, check] : report.summary["checks"].items()) {
      if (!check["pass"].get<bool>()) ++failed_checks;
    }
    std::printf("%s: %zu rows (%zu failed), %zu/%zu checks pass, wrote %s\n",
                std::string(gklab::to_string(*kind)).c_str(), report.rows.size(),
                report.failed_rows,
                report.summary["checks"].size() - failed_checks,
                report.summary["checks"].size(), config.out.string().c_str());
    return report.failed_rows > 0 ? kExitPartial : 0;
  } catch (const gklab::Error& e) {
    std::fprintf(stderr, "gklab: %s\n", e.what());
    const bool user_error = e.code() == gklab::ErrorCode::validation ||
                            e.code() == gklab::ErrorCode::usage;
    return user_error ? kExitValidation : kExitInternal;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gklab: internal error: %s\n", e.what());
    return kExitInternal;
  }
}
