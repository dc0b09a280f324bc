// Batch front-end: point-set ingestion, staircase reduction, subset
// selection, and fixture emission on top of the libspdiv C API.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spdiv.h"

namespace {

// Exit codes: 0 success, 2 usage/config, 3 data/parse, 4 not a staircase,
// 5 numerical failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNotStaircase = 4;
constexpr int kExitNumerical = 5;

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

int exit_code_for(spdiv_status status) {
  switch (status) {
    case SPDIV_OK: return kExitOk;
    case SPDIV_ERR_DIMENSION_MISMATCH:
    case SPDIV_ERR_NON_FINITE:
    case SPDIV_ERR_DUPLICATE_POINT: return kExitData;
    case SPDIV_ERR_NOT_A_STAIRCASE:
    case SPDIV_ERR_NOT_MONOTONE_FRONT: return kExitNotStaircase;
    case SPDIV_ERR_SINGULAR_MATRIX: return kExitNumerical;
    default: return kExitUsage;
  }
}

void check(spdiv_status status) {
  if (status != SPDIV_OK)
    throw CliError(exit_code_for(status), std::string(spdiv_status_name(status)) + ": " +
                                              spdiv_last_error());
}

struct PointSet {
  std::vector<double> coords;  // row-major
  size_t n = 0;
  size_t d = 0;
};

bool parse_double(const std::string& field, double* out) {
  const char* begin = field.c_str();
  char* end = nullptr;
  *out = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  return end != begin && end && *end == '\0';
}

PointSet parse_csv(const std::string& text) {
  PointSet ps;
  std::istringstream in(text);
  std::string line;
  size_t row = 0;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<double> values;
    std::stringstream fields(line);
    std::string field;
    bool numeric = true;
    size_t col = 0;
    while (std::getline(fields, field, ',')) {
      ++col;
      double v;
      if (!parse_double(field, &v)) {
        if (first_data_row) { numeric = false; break; }  // header row
        throw CliError(kExitData, "parse error at row " + std::to_string(row) + ", column " +
                                      std::to_string(col) + ": '" + field + "'");
      }
      if (!std::isfinite(v))
        throw CliError(kExitData, "non-finite value at row " + std::to_string(row) +
                                      ", column " + std::to_string(col));
      values.push_back(v);
    }
    if (!numeric) continue;  // skipped header

    if (first_data_row) {
      ps.d = values.size();
      first_data_row = false;
    } else if (values.size() != ps.d) {
      throw CliError(kExitData, "dimension mismatch at row " + std::to_string(row) + ": got " +
                                    std::to_string(values.size()) + " columns, expected " +
                                    std::to_string(ps.d));
    }
    ps.coords.insert(ps.coords.end(), values.begin(), values.end());
    ++ps.n;
  }
  if (ps.n == 0) throw CliError(kExitData, "input contains no points");
  return ps;
}

PointSet parse_json_points(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CliError(kExitData, std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_array() || doc.empty())
    throw CliError(kExitData, "JSON input must be a non-empty array of coordinate arrays");
  PointSet ps;
  for (size_t i = 0; i < doc.size(); ++i) {
    const auto& row = doc[i];
    if (!row.is_array() || row.empty())
      throw CliError(kExitData, "JSON row " + std::to_string(i + 1) +
                                    " is not a non-empty array");
    if (i == 0) ps.d = row.size();
    if (row.size() != ps.d)
      throw CliError(kExitData, "dimension mismatch at JSON row " + std::to_string(i + 1));
    for (const auto& v : row) {
      if (!v.is_number())
        throw CliError(kExitData, "non-numeric entry at JSON row " + std::to_string(i + 1));
      const double x = v.get<double>();
      if (!std::isfinite(x))
        throw CliError(kExitData, "non-finite value at JSON row " + std::to_string(i + 1));
      ps.coords.push_back(x);
    }
    ++ps.n;
  }
  return ps;
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitData, "cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  const size_t first = text.find_first_not_of(" \t\r\n");
  const bool looks_json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  if (looks_json || (first != std::string::npos && text[first] == '['))
    return parse_json_points(text);
  return parse_csv(text);
}

// Deterministic JSON writer: fixed field order, doubles at 17 significant
// digits.
std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class JsonWriter {
 public:
  std::string str() const { return out_; }
  void begin_object() { out_ += '{'; fresh_ = true; }
  void end_object() { out_ += '}'; fresh_ = false; }
  void key(const std::string& k) {
    if (!fresh_) out_ += ',';
    fresh_ = false;
    out_ += '"'; out_ += k; out_ += "\":";
  }
  void value_null() { out_ += "null"; }
  void value_bool(bool b) { out_ += b ? "true" : "false"; }
  void value_int(long long v) { out_ += std::to_string(v); }
  void value_double(double v) {
    if (std::isinf(v)) { out_ += "\"inf\""; return; }
    out_ += fmt_double(v);
  }
  void value_string(const std::string& s) { out_ += '"'; out_ += s; out_ += '"'; }
  template <typename T, typename Fn>
  void value_array(const std::vector<T>& xs, Fn&& emit) {
    out_ += '[';
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) out_ += ',';
      emit(xs[i]);
    }
    out_ += ']';
  }

 private:
  std::string out_;
  bool fresh_ = true;
};

struct RunConfig {
  std::string input_path;
  std::string objective = "sp";
  size_t k = 1;
  double q = 1.0;
  std::string format = "json";
  std::string output_path;
  bool validate = false;
  size_t max_brute_n = 16;
};

struct ReductionView {
  std::vector<size_t> order;
  std::vector<int> sigma;
  std::vector<double> t;
};

struct SelectionView {
  std::vector<size_t> rows;             // 1-based original input rows
  std::vector<size_t> reduced_indices;  // 1-based positions on the chain
  double value = 0.0;
  std::vector<double> gap_contributions;
};

struct ValidationView {
  double oracle_value = 0.0;
  double abs_delta = 0.0;
  bool pass = false;
};

void emit_config(JsonWriter& w, const RunConfig& cfg, bool with_selection) {
  w.key("config");
  w.begin_object();
  w.key("input"); w.value_string(cfg.input_path);
  if (with_selection) {
    w.key("objective"); w.value_string(cfg.objective);
    w.key("k"); w.value_int(static_cast<long long>(cfg.k));
    w.key("q"); w.value_double(cfg.q);
  }
  w.key("format"); w.value_string(cfg.format);
  w.key("validate"); w.value_bool(cfg.validate);
  w.key("max_brute_n"); w.value_int(static_cast<long long>(cfg.max_brute_n));
  w.key("index_base"); w.value_int(1);
  w.key("version"); w.value_string(spdiv_version());
  w.end_object();
}

void emit_reduction(JsonWriter& w, const ReductionView& red) {
  w.key("reduction");
  w.begin_object();
  w.key("order");
  w.value_array(red.order, [&](size_t v) { w.value_int(static_cast<long long>(v + 1)); });
  w.key("sigma");
  w.value_array(red.sigma, [&](int v) { w.value_int(v); });
  w.key("t");
  w.value_array(red.t, [&](double v) { w.value_double(v); });
  w.end_object();
}

std::string report_json(const RunConfig& cfg, const ReductionView& red,
                        const SelectionView* sel, const ValidationView* val) {
  JsonWriter w;
  w.begin_object();
  emit_config(w, cfg, sel != nullptr);
  emit_reduction(w, red);
  w.key("selection");
  if (sel) {
    w.begin_object();
    w.key("rows");
    w.value_array(sel->rows, [&](size_t v) { w.value_int(static_cast<long long>(v)); });
    w.key("reduced_indices");
    w.value_array(sel->reduced_indices,
                  [&](size_t v) { w.value_int(static_cast<long long>(v)); });
    w.key("value"); w.value_double(sel->value);
    w.key("objective"); w.value_string(cfg.objective);
    w.key("gap_contributions");
    w.value_array(sel->gap_contributions, [&](double v) { w.value_double(v); });
    w.end_object();
  } else {
    w.value_null();
  }
  w.key("validation");
  if (val) {
    w.begin_object();
    w.key("oracle_value"); w.value_double(val->oracle_value);
    w.key("abs_delta"); w.value_double(val->abs_delta);
    w.key("pass"); w.value_bool(val->pass);
    w.end_object();
  } else {
    w.value_null();
  }
  w.end_object();
  return w.str() + "\n";
}

std::string report_csv(const RunConfig& cfg, const ReductionView& red,
                       const SelectionView* sel, const ValidationView* val) {
  std::string out;
  auto num = [](double v) { return std::isinf(v) ? std::string("inf") : fmt_double(v); };
  if (sel) {
    out += "objective,k,q,value\n";
    out += cfg.objective + "," + std::to_string(cfg.k) + "," + fmt_double(cfg.q) + "," +
           num(sel->value) + "\n";
    out += "row,reduced_index,t,gap_contribution\n";
    for (size_t i = 0; i < sel->rows.size(); ++i) {
      out += std::to_string(sel->rows[i]) + "," + std::to_string(sel->reduced_indices[i]) +
             "," + fmt_double(red.t[sel->reduced_indices[i] - 1]) + ",";
      if (i > 0) out += fmt_double(sel->gap_contributions[i - 1]);
      out += "\n";
    }
    if (val) {
      out += "oracle_value,abs_delta,pass\n";
      out += num(val->oracle_value) + "," + fmt_double(val->abs_delta) + "," +
             (val->pass ? "true" : "false") + "\n";
    }
  } else {
    std::string sigma_line = "sigma";
    for (int s : red.sigma) sigma_line += "," + std::to_string(s);
    out += sigma_line + "\n";
    out += "reduced_index,row,t\n";
    for (size_t i = 0; i < red.order.size(); ++i)
      out += std::to_string(i + 1) + "," + std::to_string(red.order[i] + 1) + "," +
             fmt_double(red.t[i]) + "\n";
  }
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kExitData, "cannot open output file: " + path);
  out << content;
}

using ReductionHandle = std::unique_ptr<spdiv_reduction, decltype(&spdiv_reduction_destroy)>;
using PointsHandle = std::unique_ptr<spdiv_points, decltype(&spdiv_points_destroy)>;
using SelectionHandle = std::unique_ptr<spdiv_selection, decltype(&spdiv_selection_destroy)>;

ReductionView reduce_points(const PointSet& ps, PointsHandle& points_out,
                            ReductionHandle& red_out) {
  spdiv_points* points = nullptr;
  check(spdiv_points_create(ps.coords.data(), ps.n, ps.d, &points));
  points_out.reset(points);

  spdiv_reduction* red = nullptr;
  check(spdiv_detect_staircase(points, &red));
  red_out.reset(red);

  ReductionView view;
  const size_t n = spdiv_reduction_size(red);
  const size_t d = spdiv_reduction_dim(red);
  view.order.assign(spdiv_reduction_order(red), spdiv_reduction_order(red) + n);
  view.sigma.assign(spdiv_reduction_sigma(red), spdiv_reduction_sigma(red) + d);
  view.t.assign(spdiv_reduction_line_coords(red), spdiv_reduction_line_coords(red) + n);
  return view;
}

int cmd_reduce(const RunConfig& cfg) {
  const PointSet ps = load_points(cfg.input_path);
  PointsHandle points(nullptr, spdiv_points_destroy);
  ReductionHandle red(nullptr, spdiv_reduction_destroy);
  const ReductionView view = reduce_points(ps, points, red);
  const std::string report = cfg.format == "json" ? report_json(cfg, view, nullptr, nullptr)
                                                  : report_csv(cfg, view, nullptr, nullptr);
  write_output(cfg.output_path, report);
  return kExitOk;
}

int cmd_select(const RunConfig& cfg) {
  const PointSet ps = load_points(cfg.input_path);
  PointsHandle points(nullptr, spdiv_points_destroy);
  ReductionHandle red(nullptr, spdiv_reduction_destroy);
  const ReductionView view = reduce_points(ps, points, red);

  const spdiv_objective objective =
      cfg.objective == "sp" ? SPDIV_OBJECTIVE_SP : SPDIV_OBJECTIVE_MPD;

  spdiv_selection* sel_raw = nullptr;
  check(spdiv_select(view.t.data(), view.t.size(), objective, cfg.k, cfg.q, &sel_raw));
  SelectionHandle sel(sel_raw, spdiv_selection_destroy);

  SelectionView sel_view;
  const size_t k = spdiv_selection_size(sel_raw);
  const size_t* idx = spdiv_selection_indices(sel_raw);
  for (size_t i = 0; i < k; ++i) {
    sel_view.reduced_indices.push_back(idx[i] + 1);
    sel_view.rows.push_back(view.order[idx[i]] + 1);
  }
  sel_view.value = spdiv_selection_value(sel_raw);
  if (k > 1)
    sel_view.gap_contributions.assign(spdiv_selection_gap_contributions(sel_raw),
                                      spdiv_selection_gap_contributions(sel_raw) + k - 1);

  std::optional<ValidationView> validation;
  if (cfg.validate && view.t.size() <= cfg.max_brute_n) {
    spdiv_selection* oracle_raw = nullptr;
    check(spdiv_select_brute_force(view.t.data(), view.t.size(), objective, cfg.k, cfg.q,
                                   cfg.max_brute_n, &oracle_raw));
    SelectionHandle oracle(oracle_raw, spdiv_selection_destroy);
    ValidationView v;
    v.oracle_value = spdiv_selection_value(oracle_raw);
    v.abs_delta = (std::isinf(v.oracle_value) && std::isinf(sel_view.value))
                      ? 0.0
                      : std::abs(v.oracle_value - sel_view.value);
    v.pass = v.abs_delta <= 1e-9;
    validation = v;
  }

  const std::string report =
      cfg.format == "json"
          ? report_json(cfg, view, &sel_view, validation ? &*validation : nullptr)
          : report_csv(cfg, view, &sel_view, validation ? &*validation : nullptr);
  write_output(cfg.output_path, report);
  return kExitOk;
}

int cmd_fixture(const std::string& name, const std::string& output_path) {
  const char* csv = spdiv_fixture_csv(name.c_str());
  if (csv == nullptr) throw CliError(kExitUsage, spdiv_last_error());
  write_output(output_path, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Solow-Polasky / max-min diversity subset selection on ordered l1 chains"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string fixture_name;
  std::string fixture_output;

  auto* select = app.add_subcommand("select", "Reduce a point set and pick an optimal subset");
  select->add_option("--input", cfg.input_path, "CSV or JSON point file")->required();
  select->add_option("--objective", cfg.objective, "Objective")
      ->check(CLI::IsMember({"sp", "mpd"}))
      ->default_val("sp");
  select->add_option("--k", cfg.k, "Subset cardinality")
      ->required()
      ->check(CLI::PositiveNumber);
  select->add_option("--q", cfg.q, "Kernel parameter (SP only)")
      ->check(CLI::PositiveNumber)
      ->default_val(1.0);
  select->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  select->add_option("--output", cfg.output_path, "Output file (default stdout)");
  select->add_flag("--validate", cfg.validate, "Cross-check against the brute-force oracle");
  select->add_option("--max-brute-n", cfg.max_brute_n, "Brute-force size cap")
      ->default_val(16);

  auto* reduce = app.add_subcommand("reduce", "Detect a staircase ordering and emit it");
  reduce->add_option("--input", cfg.input_path, "CSV or JSON point file")->required();
  reduce->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  reduce->add_option("--output", cfg.output_path, "Output file (default stdout)");

  auto* fixture = app.add_subcommand("fixture", "Write an embedded example point set");
  fixture->add_option("--name", fixture_name, "pareto5, parabola20, or staircase3d")
      ->required();
  fixture->add_option("--output", fixture_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (select->parsed()) return cmd_select(cfg);
    if (reduce->parsed()) return cmd_reduce(cfg);
    return cmd_fixture(fixture_name, fixture_output);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
