#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gklab/numerics.hpp"

namespace gklab {

enum class ExperimentKind {
  lebesgue,
  converge_sup,
  converge_lp,
  rates,
  prop_integrals,
  l1_unbounded,
  maximal,
  kfunctional,
  korovkin,
  weighted,
};

std::string_view to_string(ExperimentKind kind) noexcept;
std::optional<ExperimentKind> parse_kind(std::string_view name) noexcept;
const std::vector<ExperimentKind>& all_kinds();

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::korovkin;
  std::vector<int> n_set;
  std::vector<std::string> functions;
  std::vector<double> p_set;
  std::vector<double> m_set;
  WeightSpec weight;
  double eps = 0.3;
  std::size_t grid = 8193;
  QuadratureSpec quad;
  std::filesystem::path out = "out";
};

/// The configuration that reproduces the corresponding acceptance check.
ExperimentConfig default_config(ExperimentKind kind);

/// Starts from default_config(kind) and overrides every field present in
/// `doc`. A "kind" field, if present, must name `kind`. Throws a validation
/// error naming the offending field path.
ExperimentConfig config_from_json(ExperimentKind kind, const nlohmann::json& doc);

/// Throws a validation error with a field path, e.g. "n[2]: ...".
void validate(const ExperimentConfig& config);

/// Canonical echo of the config. The output directory is not part of it.
nlohmann::json to_json(const ExperimentConfig& config);

/// 16 hex digits of FNV-1a over the canonical JSON echo.
std::string config_hash(const ExperimentConfig& config);

using Cell = std::variant<long long, double, std::string>;

struct Report {
  ExperimentKind kind = ExperimentKind::korovkin;
  std::string config_hash;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json summary;
  std::size_t failed_rows = 0;

  std::size_t column_index(std::string_view column) const;
  /// Numeric column; integer cells are widened, text cells become NaN.
  std::vector<double> numbers(std::string_view column) const;
  std::vector<std::string> strings(std::string_view column) const;

  /// CSV with a leading config_hash column; floats printed with 17
  /// significant digits.
  std::string csv() const;
};

/// Worker count: GKLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
unsigned worker_count();

Report run_experiment(const ExperimentConfig& config);

/// Writes <dir>/<kind>.csv and <dir>/<kind>.summary.json.
void write_report(const Report& report, const std::filesystem::path& dir);

}  // namespace gklab
