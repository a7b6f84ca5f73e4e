#include "gklab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "gklab/adversarial.hpp"
#include "gklab/analysis.hpp"
#include "gklab/corpus.hpp"
#include "gklab/error.hpp"
#include "gklab/kernels.hpp"
#include "gklab/operators.hpp"

namespace gklab {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::string_view kVersion = "gklab 1.0.0";

struct KindName {
  ExperimentKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {ExperimentKind::lebesgue, "lebesgue"},
    {ExperimentKind::converge_sup, "converge-sup"},
    {ExperimentKind::converge_lp, "converge-lp"},
    {ExperimentKind::rates, "rates"},
    {ExperimentKind::prop_integrals, "prop-integrals"},
    {ExperimentKind::l1_unbounded, "l1-unbounded"},
    {ExperimentKind::maximal, "maximal"},
    {ExperimentKind::kfunctional, "kfunctional"},
    {ExperimentKind::korovkin, "korovkin"},
    {ExperimentKind::weighted, "weighted"},
};

std::vector<int> octaves(int from, int to) {
  std::vector<int> out;
  for (int n = from; n <= to; n *= 2) out.push_back(n);
  return out;
}

[[noreturn]] void invalid(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::validation, path + ": " + why);
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_kind(std::string_view name) noexcept {
  for (const auto& entry : kKindNames) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

const std::vector<ExperimentKind>& all_kinds() {
  static const std::vector<ExperimentKind> kinds = [] {
    std::vector<ExperimentKind> out;
    for (const auto& entry : kKindNames) out.push_back(entry.kind);
    return out;
  }();
  return kinds;
}

// ---------------------------------------------------------------------------
// Configuration

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  c.p_set = {1.0};
  c.m_set = {2.0, 10.0, 100.0};
  switch (kind) {
    case ExperimentKind::lebesgue:
      for (int n = 1; n <= 64; ++n) c.n_set.push_back(n);
      for (int n : {128, 256, 512, 1024}) c.n_set.push_back(n);
      break;
    case ExperimentKind::converge_sup:
      c.n_set = octaves(8, 512);
      c.functions = {"sine", "square", "kink", "rough"};
      break;
    case ExperimentKind::converge_lp:
      c.n_set = octaves(8, 512);
      c.functions = corpus_names();
      c.p_set = {1.0, 2.0, 3.0};
      break;
    case ExperimentKind::rates:
      c.n_set = octaves(8, 512);
      c.functions = {"sine"};
      c.p_set = {1.0, 2.0};
      break;
    case ExperimentKind::prop_integrals:
      c.n_set = octaves(16, 1024);
      c.p_set = {1.0, 2.0, 3.0};
      break;
    case ExperimentKind::l1_unbounded:
      c.n_set = {2, 4, 8, 16};
      break;
    case ExperimentKind::maximal:
      c.n_set = octaves(4, 256);
      c.functions = {"const_one", "sine", "kink", "step", "root_singular"};
      c.grid = 4097;
      break;
    case ExperimentKind::kfunctional:
      c.n_set = octaves(8, 512);
      c.functions = corpus_names();
      c.p_set = {1.0, 2.0};
      break;
    case ExperimentKind::korovkin:
      c.n_set = octaves(16, 512);
      break;
    case ExperimentKind::weighted:
      c.n_set = octaves(8, 512);
      c.functions = {"step"};
      c.p_set = {2.0};
      c.weight = WeightSpec::power(0.5);
      break;
  }
  return c;
}

namespace {

template <class T>
T read_number(const json& value, const std::string& path) {
  if constexpr (std::is_integral_v<T>) {
    if (!value.is_number_integer()) invalid(path, "expected an integer");
    if (value.is_number_unsigned()) {
      const auto v = value.get<std::uint64_t>();
      if (v > std::uint64_t(std::numeric_limits<T>::max())) {
        invalid(path, "out of range");
      }
      return T(v);
    }
    const auto v = value.get<std::int64_t>();
    if (v < std::int64_t(std::numeric_limits<T>::min()) ||
        (v > 0 && std::uint64_t(v) > std::uint64_t(std::numeric_limits<T>::max()))) {
      invalid(path, "out of range");
    }
    return T(v);
  } else {
    if (!value.is_number()) invalid(path, "expected a number");
    return value.get<T>();
  }
}

template <class T>
std::vector<T> read_list(const json& value, const std::string& path) {
  if (!value.is_array()) invalid(path, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string item = path + "[" + std::to_string(i) + "]";
    if constexpr (std::is_same_v<T, std::string>) {
      if (!value[i].is_string()) invalid(item, "expected a string");
      out.push_back(value[i].get<std::string>());
    } else {
      out.push_back(read_number<T>(value[i], item));
    }
  }
  return out;
}

void reject_unknown(const json& object, const std::string& prefix,
                    std::initializer_list<std::string_view> known) {
  for (const auto& [key, _] : object.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      invalid(prefix + key, "unknown field");
    }
  }
}

}  // namespace

ExperimentConfig config_from_json(ExperimentKind kind, const json& doc) {
  if (!doc.is_object()) invalid("$", "config must be a JSON object");
  reject_unknown(doc, "",
                 {"kind", "n", "functions", "p", "m", "eps", "grid", "weight",
                  "quadrature", "out"});
  ExperimentConfig c = default_config(kind);
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) invalid("kind", "expected a string");
    const auto named = doc["kind"].get<std::string>();
    if (named != to_string(kind)) {
      invalid("kind", "config is for '" + named + "' but '" +
                          std::string(to_string(kind)) + "' was requested");
    }
  }
  if (doc.contains("n")) c.n_set = read_list<int>(doc["n"], "n");
  if (doc.contains("functions")) {
    c.functions = read_list<std::string>(doc["functions"], "functions");
  }
  if (doc.contains("p")) c.p_set = read_list<double>(doc["p"], "p");
  if (doc.contains("m")) c.m_set = read_list<double>(doc["m"], "m");
  if (doc.contains("eps")) c.eps = read_number<double>(doc["eps"], "eps");
  if (doc.contains("grid")) c.grid = read_number<std::size_t>(doc["grid"], "grid");
  if (doc.contains("out")) {
    if (!doc["out"].is_string()) invalid("out", "expected a string");
    c.out = doc["out"].get<std::string>();
  }
  if (doc.contains("weight")) {
    const json& w = doc["weight"];
    if (!w.is_object()) invalid("weight", "expected an object");
    reject_unknown(w, "weight.", {"kind", "alpha"});
    std::string wkind = "power";
    if (w.contains("kind")) {
      if (!w["kind"].is_string()) invalid("weight.kind", "expected a string");
      wkind = w["kind"].get<std::string>();
    }
    if (wkind == "unweighted") {
      c.weight = WeightSpec::none();
    } else if (wkind == "power") {
      const double alpha =
          w.contains("alpha") ? read_number<double>(w["alpha"], "weight.alpha")
                              : c.weight.alpha;
      c.weight = WeightSpec::power(alpha);
    } else {
      invalid("weight.kind", "expected 'unweighted' or 'power'");
    }
  }
  if (doc.contains("quadrature")) {
    const json& q = doc["quadrature"];
    if (!q.is_object()) invalid("quadrature", "expected an object");
    reject_unknown(q, "quadrature.",
                   {"order", "subpanels", "split_at_breakpoints"});
    if (q.contains("order")) {
      c.quad.order = read_number<int>(q["order"], "quadrature.order");
    }
    if (q.contains("subpanels")) {
      c.quad.subpanels = read_number<int>(q["subpanels"], "quadrature.subpanels");
    }
    if (q.contains("split_at_breakpoints")) {
      if (!q["split_at_breakpoints"].is_boolean()) {
        invalid("quadrature.split_at_breakpoints", "expected a boolean");
      }
      c.quad.split_at_breakpoints = q["split_at_breakpoints"].get<bool>();
    }
  }
  validate(c);
  return c;
}

void validate(const ExperimentConfig& c) {
  if (c.n_set.empty()) invalid("n", "must not be empty");
  for (std::size_t i = 0; i < c.n_set.size(); ++i) {
    const std::string path = "n[" + std::to_string(i) + "]";
    if (c.n_set[i] < 1) invalid(path, "degree must be >= 1");
    if (c.n_set[i] > 65536) invalid(path, "degree must be <= 65536");
    if (i > 0 && c.n_set[i] <= c.n_set[i - 1]) {
      invalid(path, "degrees must be strictly ascending");
    }
  }
  if (c.grid < 1025) invalid("grid", "must be >= 1025");
  if (c.kind == ExperimentKind::maximal && c.grid > kMaximalGridLimit) {
    invalid("grid", "the maximal experiment supports at most " +
                        std::to_string(kMaximalGridLimit) + " points");
  }
  for (std::size_t i = 0; i < c.p_set.size(); ++i) {
    if (!(c.p_set[i] >= 1.0) || !std::isfinite(c.p_set[i])) {
      invalid("p[" + std::to_string(i) + "]", "exponent must be finite and >= 1");
    }
  }
  for (std::size_t i = 0; i < c.m_set.size(); ++i) {
    if (!(c.m_set[i] > 0.0) || !std::isfinite(c.m_set[i])) {
      invalid("m[" + std::to_string(i) + "]", "height must be finite and > 0");
    }
  }
  if (!(c.eps > 0.0 && c.eps < kPi / 2.0)) invalid("eps", "must lie in (0, pi/2)");
  if (c.quad.order < 2) invalid("quadrature.order", "must be >= 2");
  if (c.quad.order > 64) invalid("quadrature.order", "must be <= 64");
  if (c.quad.subpanels < 1) invalid("quadrature.subpanels", "must be >= 1");

  const bool uses_p = c.kind == ExperimentKind::converge_lp ||
                      c.kind == ExperimentKind::rates ||
                      c.kind == ExperimentKind::prop_integrals ||
                      c.kind == ExperimentKind::kfunctional ||
                      c.kind == ExperimentKind::weighted;
  if (uses_p && c.p_set.empty()) invalid("p", "must not be empty");
  if (c.kind == ExperimentKind::l1_unbounded && c.m_set.empty()) {
    invalid("m", "must not be empty");
  }
  if (c.weight.kind == WeightSpec::Kind::power) {
    for (double p : c.p_set) {
      if (!(c.weight.alpha > -1.0 && c.weight.alpha < p - 1.0)) {
        invalid("weight.alpha",
                "power weight needs -1 < alpha < p - 1 for every p");
      }
    }
  }

  const bool uses_functions = c.kind == ExperimentKind::converge_sup ||
                              c.kind == ExperimentKind::converge_lp ||
                              c.kind == ExperimentKind::rates ||
                              c.kind == ExperimentKind::maximal ||
                              c.kind == ExperimentKind::kfunctional ||
                              c.kind == ExperimentKind::weighted;
  if (uses_functions && c.functions.empty()) invalid("functions", "must not be empty");
  for (std::size_t i = 0; i < c.functions.size(); ++i) {
    const std::string path = "functions[" + std::to_string(i) + "]";
    const auto& names = corpus_names();
    if (std::find(names.begin(), names.end(), c.functions[i]) == names.end()) {
      std::string list;
      for (const auto& name : names) list += (list.empty() ? "" : ", ") + name;
      invalid(path, "unknown function '" + c.functions[i] + "' (known: " + list + ")");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (c.functions[j] == c.functions[i]) invalid(path, "duplicate function");
    }
    const FunctionSpec f = corpus_get(c.functions[i]);
    if (c.kind == ExperimentKind::converge_sup && !f.is_continuous()) {
      invalid(path, "'" + f.name + "' is not continuous; sup-norm experiments need C[0, pi]");
    }
    if (uses_p && c.kind != ExperimentKind::prop_integrals) {
      for (double p : c.p_set) {
        if (!f.in_lp(p)) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%g", p);
          invalid(path, "'" + f.name + "' is not in L^" + buf);
        }
      }
    }
  }
}

json to_json(const ExperimentConfig& c) {
  json weight = {{"kind", c.weight.kind == WeightSpec::Kind::power ? "power" : "unweighted"}};
  if (c.weight.kind == WeightSpec::Kind::power) weight["alpha"] = c.weight.alpha;
  return {
      {"kind", std::string(to_string(c.kind))},
      {"n", c.n_set},
      {"functions", c.functions},
      {"p", c.p_set},
      {"m", c.m_set},
      {"eps", c.eps},
      {"grid", c.grid},
      {"weight", weight},
      {"quadrature",
       {{"order", c.quad.order},
        {"subpanels", c.quad.subpanels},
        {"split_at_breakpoints", c.quad.split_at_breakpoints}}},
  };
}

std::string config_hash(const ExperimentConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json(c).dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Report

std::size_t Report::column_index(std::string_view column) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == column) return i;
  }
  throw Error(ErrorCode::invalid_argument,
              "no column '" + std::string(column) + "' in " +
                  std::string(to_string(kind)) + " report");
}

std::vector<double> Report::numbers(std::string_view column) const {
  const std::size_t c = column_index(column);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const Cell& cell = row[c];
    if (const auto* d = std::get_if<double>(&cell)) {
      out.push_back(*d);
    } else if (const auto* i = std::get_if<long long>(&cell)) {
      out.push_back(double(*i));
    } else {
      out.push_back(kNaN);
    }
  }
  return out;
}

std::vector<std::string> Report::strings(std::string_view column) const {
  const std::size_t c = column_index(column);
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const Cell& cell = row[c];
    if (const auto* s = std::get_if<std::string>(&cell)) {
      out.push_back(*s);
    } else if (const auto* i = std::get_if<long long>(&cell)) {
      out.push_back(std::to_string(*i));
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(cell));
      out.push_back(buf);
    }
  }
  return out;
}

namespace {

std::string csv_field(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) {
    if (std::isnan(*d)) return "nan";
    if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  const auto& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

std::string Report::csv() const {
  std::string out = "config_hash";
  for (const auto& c : columns) out += "," + c;
  out += "\n";
  for (const auto& row : rows) {
    out += config_hash;
    for (const auto& cell : row) out += "," + csv_field(cell);
    out += "\n";
  }
  return out;
}

void write_report(const Report& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string stem(to_string(report.kind));
  {
    std::ofstream csv(dir / (stem + ".csv"), std::ios::binary);
    csv << report.csv();
    if (!csv) throw Error(ErrorCode::invalid_argument, "cannot write " + (dir / (stem + ".csv")).string());
  }
  std::ofstream summary(dir / (stem + ".summary.json"), std::ios::binary);
  summary << report.summary.dump(2) << "\n";
  if (!summary) {
    throw Error(ErrorCode::invalid_argument,
                "cannot write " + (dir / (stem + ".summary.json")).string());
  }
}

// ---------------------------------------------------------------------------
// Runner plumbing

unsigned worker_count() {
  if (const char* env = std::getenv("GKLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return unsigned(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Row = std::vector<Cell>;
using Rows = std::vector<Row>;

// Runs fn(0..count-1) on the worker pool; results keep index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(worker_count(), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Row failed_row(Row prefix, std::size_t numeric_cells, const std::string& why) {
  for (std::size_t i = 0; i < numeric_cells; ++i) prefix.emplace_back(kNaN);
  prefix.emplace_back(why);
  return prefix;
}

Rows flatten(std::vector<Rows> parts) {
  Rows out;
  for (auto& part : parts) {
    for (auto& row : part) out.push_back(std::move(row));
  }
  return out;
}

json fit_json(const std::optional<RateFit>& fit) {
  if (!fit) return nullptr;
  return {{"slope", fit->slope},
          {"intercept", fit->intercept},
          {"r_squared", fit->r_squared},
          {"points", fit->points_used}};
}

template <class Fit>
std::optional<RateFit> try_fit(Fit fit, const std::vector<double>& x,
                               const std::vector<double>& y) {
  try {
    return fit(x, y);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::insufficient_data) throw;
    return std::nullopt;
  }
}

std::optional<RateFit> try_rate(const std::vector<double>& x,
                                const std::vector<double>& y) {
  return try_fit([](auto& a, auto& b) { return rate_fit(a, b); }, x, y);
}

std::optional<RateFit> try_trend(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  return try_fit([](auto& a, auto& b) { return trend_fit(a, b); }, x, y);
}

void add_check(json& summary, const std::string& name, double value,
               double lo, double hi) {
  const bool pass = std::isfinite(value) && value >= lo && value <= hi;
  json entry = {{"value", value}, {"pass", pass}};
  if (std::isfinite(lo)) entry["min"] = lo;
  if (std::isfinite(hi)) entry["max"] = hi;
  summary["checks"][name] = entry;
}

void add_slope_check(json& summary, const std::string& name,
                     const std::optional<RateFit>& fit, double target,
                     double band) {
  add_check(summary, name, fit ? fit->slope : kNaN, target - band,
            target + band);
}

std::string p_label(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "p=%g", p);
  return buf;
}

// Rows selected by a predicate, as parallel (n, value) series.
struct Series {
  std::vector<double> n;
  std::vector<double> v;
};

Series select(const Report& r, std::string_view value,
              const std::function<bool(std::size_t)>& keep) {
  const auto ns = r.numbers("n");
  const auto vs = r.numbers(value);
  Series s;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (keep(i)) {
      s.n.push_back(ns[i]);
      s.v.push_back(vs[i]);
    }
  }
  return s;
}

// Largest ratio between successive values, and last over first.
std::pair<double, double> octave_ratios(const std::vector<double>& v) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i] / v[i - 1]);
  const double overall = v.size() >= 2 ? v.back() / v.front() : kNaN;
  return {v.size() >= 2 ? worst : kNaN, overall};
}

// Per-n maximum of a column across all other keys.
Series max_per_n(const Report& r, std::string_view value,
                 const std::function<bool(std::size_t)>& keep) {
  const Series all = select(r, value, keep);
  Series out;
  for (std::size_t i = 0; i < all.n.size(); ++i) {
    if (!out.n.empty() && out.n.back() == all.n[i]) {
      if (!(out.v.back() >= all.v[i])) out.v.back() = all.v[i];
    } else {
      out.n.push_back(all.n[i]);
      out.v.push_back(all.v[i]);
    }
  }
  return out;
}

double finite_max(const std::vector<double>& v) {
  double best = kNaN;
  for (double x : v) {
    if (std::isfinite(x) && !(best >= x)) best = x;
  }
  return best;
}

double lp_error(const FunctionSpec& f, const KernelExpansion& gk, double p,
                double a, double b, const WeightSpec& weight,
                const QuadratureSpec& quad) {
  FunctionSpec diff = derive(f, f.name + " - GK f",
                             [&f, &gk](double t) { return f(t) - gk(t); });
  diff.resolution = std::max(f.resolution, 8 * gk.degree());
  return lp_norm(diff, p, a, b, weight, quad);
}

std::vector<FunctionSpec> load_functions(const ExperimentConfig& c) {
  std::vector<FunctionSpec> out;
  for (const auto& name : c.functions) out.push_back(corpus_get(name));
  return out;
}

// ---------------------------------------------------------------------------
// Experiment kinds

void run_lebesgue(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "lebesgue_grunwald", "lebesgue_lagrange", "partition_error",
               "cardinal_error", "nodal_weight", "failure"};
  const Grid grid = Grid::full(c.grid);
  r.rows = parallel_map<Row>(c.n_set.size(), [&](std::size_t i) -> Row {
    const int n = c.n_set[i];
    const KernelBasis basis(n);
    const NodeSet nodes = chebyshev_nodes(n);
    std::vector<double> values(std::size_t(n), 0.0);
    double lam_g = 0.0, lam_l = 0.0, partition = 0.0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double t = grid.point(g);
      basis.evaluate(t, KernelKind::grunwald, values);
      CompensatedSum sum, abs_sum;
      for (double v : values) {
        sum += v;
        abs_sum += std::abs(v);
      }
      partition = std::max(partition, std::abs(sum.value() - 1.0));
      lam_g = std::max(lam_g, abs_sum.value());
      lam_l = std::max(lam_l, basis.lebesgue(t, KernelKind::lagrange));
    }
    double cardinal = 0.0;
    for (int j = 1; j <= n; ++j) {
      basis.evaluate(nodes.theta(j), KernelKind::lagrange, values);
      for (int k = 1; k <= n; ++k) {
        cardinal = std::max(cardinal, std::abs(values[std::size_t(k - 1)] -
                                               (k == j ? 1.0 : 0.0)));
      }
    }
    return {(long long)n, lam_g, lam_l, partition, cardinal,
            basis.kernel(1, nodes.theta(1)), std::string()};
  });

  const auto ns = r.numbers("n");
  auto late = [&](std::size_t i) { return ns[i] >= 16; };
  const auto g = select(r, "lebesgue_grunwald", late);
  const auto l = select(r, "lebesgue_lagrange", late);
  const auto gf = try_trend(g.n, g.v);
  const auto lf = try_trend(l.n, l.v);
  json& s = r.summary;
  s["fits"]["lebesgue_grunwald_vs_ln_n"] = fit_json(gf);
  s["fits"]["lebesgue_lagrange_vs_ln_n"] = fit_json(lf);
  s["constants"]["c1_estimate"] = finite_max(r.numbers("lebesgue_grunwald"));
  add_slope_check(s, "lebesgue_grunwald_slope", gf, 0.0, 0.05);
  add_slope_check(s, "lebesgue_lagrange_slope", lf, 2.0 / kPi, 0.05);
  add_check(s, "partition_error", finite_max(r.numbers("partition_error")), 0.0, 1e-8);
  const auto small =
      select(r, "cardinal_error", [&](std::size_t i) { return ns[i] <= 256; });
  add_check(s, "cardinal_error", finite_max(small.v), 0.0, 1e-10);
}

void run_converge_sup(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "function", "sup_error", "envelope_constant", "failure"};
  const Grid grid = Grid::full(c.grid);
  const auto functions = load_functions(c);
  const std::size_t nf = functions.size();
  r.rows = parallel_map<Row>(c.n_set.size() * nf, [&](std::size_t cell) -> Row {
    const int n = c.n_set[cell / nf];
    const FunctionSpec& f = functions[cell % nf];
    Row prefix{(long long)n, f.name};
    try {
      const auto values = gk_operator(chebyshev_nodes(n), f, c.quad).apply(grid);
      const auto exact = sample(f, grid);
      double err = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) {
        err = std::max(err, std::abs(values[i] - exact[i]));
      }
      const EnvelopeFit env = envelope_check(n, f, grid, c.quad);
      prefix.insert(prefix.end(), {err, env.constant, std::string()});
      return prefix;
    } catch (const Error& e) {
      return failed_row(prefix, 2, e.what());
    }
  });

  json& s = r.summary;
  const auto names = r.strings("function");
  double envelope_max = kNaN;
  for (const auto& f : functions) {
    auto mine = [&](std::size_t i) { return names[i] == f.name; };
    const auto e = select(r, "sup_error", mine);
    const auto env = select(r, "envelope_constant", mine);
    s["fits"][f.name]["sup_error"] = fit_json(try_rate(e.n, e.v));
    const auto envelope_fit = try_trend(env.n, env.v);
    s["fits"][f.name]["envelope_constant_vs_ln_n"] = fit_json(envelope_fit);
    const auto [worst, overall] = octave_ratios(e.v);
    add_check(s, f.name + ".max_octave_ratio", worst, 0.0, 1.1);
    add_check(s, f.name + ".final_over_initial", overall, 0.0, 0.1);
    add_slope_check(s, f.name + ".envelope_slope", envelope_fit, 0.0, 0.1);
    const double m = finite_max(env.v);
    if (!(envelope_max >= m)) envelope_max = m;
  }
  s["constants"]["envelope_constant_max"] = envelope_max;
}

void run_converge_lp(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "function", "p", "norm_f", "norm_gk", "ratio", "error",
               "operator_bound", "failure"};
  const Grid grid = Grid::full(c.grid);
  const auto functions = load_functions(c);
  const std::size_t nf = functions.size();

  struct Bounds {
    double l1 = 0.0;
    double sup = 0.0;
  };
  const auto bounds = parallel_map<Bounds>(c.n_set.size(), [&](std::size_t i) {
    const int n = c.n_set[i];
    return Bounds{gk_l1_operator_norm(n, c.quad),
                  lebesgue_constant(n, KernelKind::grunwald, grid)};
  });

  auto parts = parallel_map<Rows>(c.n_set.size() * nf, [&](std::size_t cell) {
    const std::size_t ni = cell / nf;
    const int n = c.n_set[ni];
    const FunctionSpec& f = functions[cell % nf];
    Rows rows;
    std::optional<KernelExpansion> gk;
    std::string means_failure;
    try {
      gk.emplace(gk_operator(chebyshev_nodes(n), f, c.quad));
    } catch (const Error& e) {
      means_failure = e.what();
    }
    for (double p : c.p_set) {
      Row prefix{(long long)n, f.name, p};
      if (!gk) {
        rows.push_back(failed_row(prefix, 5, means_failure));
        continue;
      }
      try {
        const double norm_f = lp_norm(f, p, 0.0, kPi, {}, c.quad);
        const double norm_gk =
            lp_norm(gk->as_function("GK f"), p, 0.0, kPi, {}, c.quad);
        const double err = lp_error(f, *gk, p, 0.0, kPi, {}, c.quad);
        const double bound = std::pow(bounds[ni].l1, 1.0 / p) *
                             std::pow(bounds[ni].sup, 1.0 - 1.0 / p);
        prefix.insert(prefix.end(),
                      {norm_f, norm_gk, norm_gk / norm_f, err, bound, std::string()});
        rows.push_back(prefix);
      } catch (const Error& e) {
        rows.push_back(failed_row(prefix, 5, e.what()));
      }
    }
    return rows;
  });
  r.rows = flatten(std::move(parts));

  json& s = r.summary;
  const auto ps = r.numbers("p");
  const auto names = r.strings("function");
  const auto ratio = r.numbers("ratio");
  const auto bound = r.numbers("operator_bound");
  double l1_max = 0.0;
  for (const auto& b : bounds) l1_max = std::max(l1_max, b.l1);
  s["constants"]["l1_operator_norm_max"] = l1_max;
  for (std::size_t i = 0; i < c.n_set.size(); ++i) {
    s["constants"]["l1_operator_norm"][std::to_string(c.n_set[i])] = bounds[i].l1;
  }
  for (double p : c.p_set) {
    const std::string label = p_label(p);
    auto mine = [&](std::size_t i) { return ps[i] == p; };
    const auto per_n = max_per_n(r, "ratio", mine);
    const auto trend = try_trend(per_n.n, per_n.v);
    s["fits"][label]["max_ratio_vs_ln_n"] = fit_json(trend);
    s["constants"][label]["C_p_estimate"] = finite_max(per_n.v);
    add_slope_check(s, label + ".ratio_trend", trend, 0.0, 0.1);
    double worst = kNaN;
    for (std::size_t i = 0; i < ratio.size(); ++i) {
      if (!mine(i)) continue;
      const double q = ratio[i] / bound[i];
      if (!(worst >= q)) worst = q;
    }
    add_check(s, label + ".ratio_over_operator_bound", worst, 0.0, 1.0 + 1e-9);
    for (const auto& f : functions) {
      const auto e = select(r, "error", [&](std::size_t i) {
        return mine(i) && names[i] == f.name;
      });
      s["fits"][label][f.name + ".error"] = fit_json(try_rate(e.n, e.v));
      if (!e.v.empty() && e.v.front() > 1e-10) {
        add_check(s, label + "." + f.name + ".error_final_over_initial",
                  octave_ratios(e.v).second, 0.0, 0.2);
      }
    }
  }
}

void run_rates(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "function", "p", "error", "m_n", "ratio", "failure"};
  const auto functions = load_functions(c);
  const std::size_t nf = functions.size();
  auto parts = parallel_map<Rows>(c.n_set.size() * nf, [&](std::size_t cell) {
    const int n = c.n_set[cell / nf];
    const FunctionSpec& f = functions[cell % nf];
    Rows rows;
    for (double p : c.p_set) {
      Row prefix{(long long)n, f.name, p};
      try {
        const auto gk = gk_operator(chebyshev_nodes(n), f, c.quad);
        const double err = lp_error(f, gk, p, 0.0, kPi, {}, c.quad);
        const double m = m_n(p, n);
        prefix.insert(prefix.end(), {err, m, err / m, std::string()});
        rows.push_back(prefix);
      } catch (const Error& e) {
        rows.push_back(failed_row(prefix, 3, e.what()));
      }
    }
    return rows;
  });
  r.rows = flatten(std::move(parts));

  json& s = r.summary;
  const auto ps = r.numbers("p");
  const auto names = r.strings("function");
  for (const auto& f : functions) {
    for (double p : c.p_set) {
      const std::string key = f.name + "." + p_label(p);
      auto mine = [&](std::size_t i) { return ps[i] == p && names[i] == f.name; };
      const auto e = select(r, "error", mine);
      const auto q = select(r, "ratio", mine);
      s["fits"][key]["error"] = fit_json(try_rate(e.n, e.v));
      const auto qf = try_rate(q.n, q.v);
      s["fits"][key]["ratio_to_m_n"] = fit_json(qf);
      s["constants"][key]["R_estimate"] = finite_max(q.v);
      add_slope_check(s, key + ".ratio_slope", qf, 0.0, 0.15);
    }
  }
}

void run_prop_integrals(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "p", "k_label", "k", "norm_i", "norm_ii", "norm_i_scaled",
               "norm_ii_scaled", "failure"};
  static const std::string labels[] = {"center", "first"};
  const std::size_t np = c.p_set.size();
  r.rows = parallel_map<Row>(c.n_set.size() * np * 2, [&](std::size_t cell) -> Row {
    const int n = c.n_set[cell / (2 * np)];
    const double p = c.p_set[(cell / 2) % np];
    const std::string& label = labels[cell % 2];
    const int k = label == "center" ? (n + 1) / 2 : 1;
    Row prefix{(long long)n, p, label, (long long)k};
    try {
      const double ni = prop_norm_i(n, k, p, c.quad);
      const double nii = prop_norm_ii(n, k, p, c.quad);
      const double nn = double(n);
      const double model_i = p == 1.0 ? (1.0 + std::log(nn)) / (nn * nn)
                                      : std::pow(nn, -(1.0 + 1.0 / p));
      const double model_ii = std::pow(nn, -1.0 / p);
      prefix.insert(prefix.end(),
                    {ni, nii, ni / model_i, nii / model_ii, std::string()});
      return prefix;
    } catch (const Error& e) {
      return failed_row(prefix, 4, e.what());
    }
  });

  json& s = r.summary;
  const auto ps = r.numbers("p");
  const auto ls = r.strings("k_label");
  for (double p : c.p_set) {
    for (const auto& label : labels) {
      const std::string key = p_label(p) + ".k=" + label;
      auto mine = [&](std::size_t i) { return ps[i] == p && ls[i] == label; };
      const auto ni = select(r, "norm_i", mine);
      const auto nii = select(r, "norm_ii", mine);
      const auto scaled = select(r, "norm_i_scaled", mine);
      const auto fi = try_rate(ni.n, ni.v);
      const auto fii = try_rate(nii.n, nii.v);
      const auto fs = try_rate(scaled.n, scaled.v);
      s["fits"][key]["norm_i"] = fit_json(fi);
      s["fits"][key]["norm_ii"] = fit_json(fii);
      s["fits"][key]["norm_i_scaled"] = fit_json(fs);
      if (!scaled.v.empty()) {
        s["constants"][key]["norm_i_scaled_min"] =
            *std::min_element(scaled.v.begin(), scaled.v.end());
        s["constants"][key]["norm_i_scaled_max"] = finite_max(scaled.v);
      }
      add_slope_check(s, key + ".norm_ii_slope", fii, -1.0 / p, 0.1);
      if (p == 1.0) add_slope_check(s, key + ".norm_i_scaled_slope", fs, 0.0, 0.15);
      if (p == 2.0) add_slope_check(s, key + ".norm_i_slope", fi, -1.5, 0.15);
    }
  }
}

void run_l1_unbounded(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "m", "N", "c_n", "fnorm", "gnorm", "gnorm_expected",
               "ratio", "gk_ratio", "l1_operator_norm", "failure"};
  const std::size_t nm = c.m_set.size();
  r.rows = parallel_map<Row>(c.n_set.size() * nm, [&](std::size_t cell) -> Row {
    const int n = c.n_set[cell / nm];
    const double m = c.m_set[cell % nm];
    Row prefix{(long long)n, m};
    try {
      const BlowUp b = l1_blowup(n, m, c.quad);
      prefix.insert(prefix.end(),
                    {(long long)b.N, b.c_n, b.fnorm, b.gnorm, 0.5 * m * b.c_n,
                     b.ratio, b.gk_ratio, gk_l1_operator_norm(n, c.quad),
                     std::string()});
      return prefix;
    } catch (const Error& e) {
      return failed_row(prefix, 8, e.what());
    }
  });

  json& s = r.summary;
  const auto ms = r.numbers("m");
  const auto ratio = r.numbers("ratio");
  const auto gnorm = r.numbers("gnorm");
  const auto expected = r.numbers("gnorm_expected");
  const auto gk = r.numbers("gk_ratio");
  const auto opnorm = r.numbers("l1_operator_norm");
  double min_excess = kNaN, max_dev = kNaN, max_gk = kNaN, max_gk_share = kNaN;
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    const double excess = ratio[i] / ms[i];
    const double dev = std::abs(gnorm[i] / expected[i] - 1.0);
    const double share = gk[i] / opnorm[i];
    if (!(min_excess <= excess)) min_excess = excess;
    if (!(max_dev >= dev)) max_dev = dev;
    if (!(max_gk >= gk[i])) max_gk = gk[i];
    if (!(max_gk_share >= share)) max_gk_share = share;
  }
  s["constants"]["gk_ratio_max"] = max_gk;
  s["constants"]["blowup_ratio_max"] = finite_max(ratio);
  add_check(s, "min_ratio_over_m", min_excess, 1.0 + 1e-12,
            std::numeric_limits<double>::infinity());
  add_check(s, "gnorm_relative_deviation", max_dev, 0.0, 0.005);
  add_check(s, "gk_ratio_over_operator_norm", max_gk_share, 0.0, 1.0 + 1e-9);
}

void run_maximal(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "function", "ratio", "failure"};
  const Grid grid = Grid::full(c.grid);
  const auto functions = load_functions(c);
  const std::size_t nf = functions.size();

  struct Maximal {
    std::vector<double> values;
    std::string failure;
  };
  const auto mfs = parallel_map<Maximal>(nf, [&](std::size_t i) {
    try {
      return Maximal{maximal_function(functions[i], grid, c.quad), {}};
    } catch (const Error& e) {
      return Maximal{{}, e.what()};
    }
  });

  r.rows = parallel_map<Row>(c.n_set.size() * nf, [&](std::size_t cell) -> Row {
    const int n = c.n_set[cell / nf];
    const std::size_t fi = cell % nf;
    Row prefix{(long long)n, functions[fi].name};
    if (!mfs[fi].failure.empty()) return failed_row(prefix, 1, mfs[fi].failure);
    try {
      const auto gk = gk_operator(chebyshev_nodes(n), functions[fi], c.quad);
      prefix.insert(prefix.end(),
                    {maximal_ratio(gk, mfs[fi].values, c.eps, grid), std::string()});
      return prefix;
    } catch (const Error& e) {
      return failed_row(prefix, 1, e.what());
    }
  });

  json& s = r.summary;
  const auto names = r.strings("function");
  const auto per_n = max_per_n(r, "ratio", [](std::size_t) { return true; });
  const auto trend = try_trend(per_n.n, per_n.v);
  s["fits"]["max_ratio_vs_ln_n"] = fit_json(trend);
  s["constants"]["C_eps_estimate"] = finite_max(per_n.v);
  add_slope_check(s, "ratio_trend", trend, 0.0, 0.1);
  add_check(s, "C_eps_finite", finite_max(per_n.v), 0.0,
            std::numeric_limits<double>::max());
  for (const auto& f : functions) {
    const auto mine = select(r, "ratio", [&](std::size_t i) { return names[i] == f.name; });
    s["fits"][f.name]["ratio_vs_ln_n"] = fit_json(try_trend(mine.n, mine.v));
    if (f.name == "const_one") {
      double dev = 0.0;
      for (double v : mine.v) dev = std::max(dev, std::abs(v - 1.0));
      add_check(s, "const_one_deviation", dev, 0.0, 1e-8);
    }
  }
}

void run_kfunctional(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "function", "p", "error", "m_n", "k_upper", "bandwidth",
               "ratio", "failure"};
  const Grid grid = Grid::full(c.grid);
  const auto functions = load_functions(c);
  const std::size_t nf = functions.size();
  const std::size_t np = c.p_set.size();

  struct Profile {
    std::optional<KFunctionalProfile> profile;
    std::string failure;
  };
  const auto profiles = parallel_map<Profile>(nf * np, [&](std::size_t i) {
    try {
      return Profile{k_functional_profile(functions[i / np], c.p_set[i % np],
                                          c.quad, grid),
                     {}};
    } catch (const Error& e) {
      return Profile{std::nullopt, e.what()};
    }
  });

  auto parts = parallel_map<Rows>(c.n_set.size() * nf, [&](std::size_t cell) {
    const int n = c.n_set[cell / nf];
    const std::size_t fi = cell % nf;
    const FunctionSpec& f = functions[fi];
    Rows rows;
    std::optional<KernelExpansion> gk;
    std::string means_failure;
    try {
      gk.emplace(gk_operator(chebyshev_nodes(n), f, c.quad));
    } catch (const Error& e) {
      means_failure = e.what();
    }
    for (std::size_t pi = 0; pi < np; ++pi) {
      const double p = c.p_set[pi];
      Row prefix{(long long)n, f.name, p};
      const Profile& prof = profiles[fi * np + pi];
      if (!gk || !prof.profile) {
        rows.push_back(failed_row(prefix, 5, gk ? prof.failure : means_failure));
        continue;
      }
      try {
        const double err = lp_error(f, *gk, p, 0.0, kPi, {}, c.quad);
        const double m = m_n(p, n);
        const double k = prof.profile->evaluate(m);
        const double ratio = k > 1e-12 ? err / k : kNaN;
        prefix.insert(prefix.end(), {err, m, k, prof.profile->best_bandwidth(m),
                                     ratio, std::string()});
        rows.push_back(prefix);
      } catch (const Error& e) {
        rows.push_back(failed_row(prefix, 5, e.what()));
      }
    }
    return rows;
  });
  r.rows = flatten(std::move(parts));

  json& s = r.summary;
  const auto ps = r.numbers("p");
  const auto ns = r.numbers("n");
  const auto ratio = r.numbers("ratio");
  for (double p : c.p_set) {
    const std::string label = p_label(p);
    // R_N: the smallest constant valid for every row with n <= N.
    std::vector<double> prefix_max;
    for (int n : c.n_set) {
      double best = prefix_max.empty() ? 0.0 : prefix_max.back();
      for (std::size_t i = 0; i < ratio.size(); ++i) {
        if (ps[i] == p && ns[i] == n && std::isfinite(ratio[i])) {
          best = std::max(best, ratio[i]);
        }
      }
      prefix_max.push_back(best);
    }
    double drift = kNaN;
    for (std::size_t i = 0; i < c.n_set.size(); ++i) {
      for (std::size_t j = i + 1; j < c.n_set.size(); ++j) {
        if (c.n_set[j] != 2 * c.n_set[i]) continue;
        const double d = std::abs(prefix_max[j] / prefix_max[i] - 1.0);
        if (!(drift >= d)) drift = d;
      }
    }
    s["constants"][label]["R_estimate"] = prefix_max.back();
    for (std::size_t i = 0; i < c.n_set.size(); ++i) {
      s["constants"][label]["R_up_to_n"][std::to_string(c.n_set[i])] = prefix_max[i];
    }
    add_check(s, label + ".R_doubling_drift", drift, 0.0, 0.25);
  }
}

void run_korovkin(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "e0", "e1", "e2", "failure"};
  const Grid grid = Grid::full(c.grid);
  r.rows = parallel_map<Row>(c.n_set.size(), [&](std::size_t i) -> Row {
    const int n = c.n_set[i];
    try {
      const KorovkinProbe probe = korovkin_probe(n, grid, c.quad);
      return {(long long)n, probe.e0, probe.e1, probe.e2, std::string()};
    } catch (const Error& e) {
      return failed_row({(long long)n}, 3, e.what());
    }
  });

  json& s = r.summary;
  const auto all = [](std::size_t) { return true; };
  const auto e1 = select(r, "e1", all);
  const auto e2 = select(r, "e2", all);
  const auto f1 = try_rate(e1.n, e1.v);
  s["fits"]["e1"] = fit_json(f1);
  s["fits"]["e2"] = fit_json(try_rate(e2.n, e2.v));
  add_check(s, "e0_max", finite_max(r.numbers("e0")), 0.0, 1e-10);
  add_check(s, "e1_final_over_initial", octave_ratios(e1.v).second, 0.0, 0.1);
  add_check(s, "e2_final_over_initial", octave_ratios(e2.v).second, 0.0, 0.1);
  add_check(s, "e1_slope", f1 ? f1->slope : kNaN,
            -std::numeric_limits<double>::infinity(), -0.5);
}

void run_weighted(const ExperimentConfig& c, Report& r) {
  r.columns = {"n", "function", "p", "alpha", "error", "failure"};
  const auto functions = load_functions(c);
  const std::size_t nf = functions.size();
  const double a = c.eps;
  const double b = kPi - c.eps;
  const double alpha =
      c.weight.kind == WeightSpec::Kind::power ? c.weight.alpha : 0.0;
  auto parts = parallel_map<Rows>(c.n_set.size() * nf, [&](std::size_t cell) {
    const int n = c.n_set[cell / nf];
    const FunctionSpec& f = functions[cell % nf];
    Rows rows;
    for (double p : c.p_set) {
      Row prefix{(long long)n, f.name, p, alpha};
      try {
        const auto gk = gk_operator(chebyshev_nodes(n), f, c.quad);
        prefix.insert(prefix.end(),
                      {lp_error(f, gk, p, a, b, c.weight, c.quad), std::string()});
        rows.push_back(prefix);
      } catch (const Error& e) {
        rows.push_back(failed_row(prefix, 1, e.what()));
      }
    }
    return rows;
  });
  r.rows = flatten(std::move(parts));

  json& s = r.summary;
  s["interval"] = {a, b};
  const auto ps = r.numbers("p");
  const auto names = r.strings("function");
  for (const auto& f : functions) {
    for (double p : c.p_set) {
      const std::string key = f.name + "." + p_label(p);
      const auto e = select(r, "error", [&](std::size_t i) {
        return ps[i] == p && names[i] == f.name;
      });
      s["fits"][key]["error"] = fit_json(try_rate(e.n, e.v));
      add_check(s, key + ".max_octave_ratio", octave_ratios(e.v).first, 0.0,
                1.0 - 1e-12);
    }
  }
}

}  // namespace

Report run_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.kind = config.kind;
  r.config_hash = config_hash(config);
  r.summary = json::object();
  r.summary["checks"] = json::object();
  switch (config.kind) {
    case ExperimentKind::lebesgue: run_lebesgue(config, r); break;
    case ExperimentKind::converge_sup: run_converge_sup(config, r); break;
    case ExperimentKind::converge_lp: run_converge_lp(config, r); break;
    case ExperimentKind::rates: run_rates(config, r); break;
    case ExperimentKind::prop_integrals: run_prop_integrals(config, r); break;
    case ExperimentKind::l1_unbounded: run_l1_unbounded(config, r); break;
    case ExperimentKind::maximal: run_maximal(config, r); break;
    case ExperimentKind::kfunctional: run_kfunctional(config, r); break;
    case ExperimentKind::korovkin: run_korovkin(config, r); break;
    case ExperimentKind::weighted: run_weighted(config, r); break;
  }
  const std::size_t failure_col = r.column_index("failure");
  for (const auto& row : r.rows) {
    if (!std::get<std::string>(row[failure_col]).empty()) ++r.failed_rows;
  }

  bool all_pass = true;
  for (const auto& [_, check] : r.summary["checks"].items()) {
    all_pass = all_pass && check["pass"].get<bool>();
  }
  r.summary["kind"] = std::string(to_string(config.kind));
  r.summary["version"] = kVersion;
  r.summary["config"] = to_json(config);
  r.summary["config_hash"] = r.config_hash;
  r.summary["rows"] = r.rows.size();
  r.summary["failed_rows"] = r.failed_rows;
  r.summary["all_checks_pass"] = all_pass;
  r.summary["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace gklab
