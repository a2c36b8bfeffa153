// partclass: exact counts, asymptotics, table reproduction and self-checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "partclass/partclass.h"

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kVerifyFail = 1, kUsage = 2, kCoverage = 3, kDomain = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(pc_status status) {
  switch (status) {
    case PC_OK: return kOk;
    case PC_ERR_COVERAGE:
    case PC_ERR_RESOURCE:
    case PC_ERR_GUARD:
    case PC_ERR_FORMAT:
    case PC_ERR_IO: return kCoverage;
    case PC_ERR_INVALID_ARGUMENT: return kUsage;
    default: return kDomain;
  }
}

void check(pc_status status) {
  if (status != PC_OK) throw Failure{exit_code_for(status), std::string(pc_status_name(status)) + " error: " + pc_last_error()};
}

struct RunConfig {
  std::vector<long> n_list;
  long modulus = 3;
  long residue = 1;
  long precision_bits = 0;
  long truncation = 0;
  std::string format = "text";
  std::string cache;
  bool with_exact = false;
  bool timing = false;
  long max_n = 0;
  int which = 1;
  std::vector<std::string> suites;
  long max_modulus = 30;
};

class Context {
 public:
  explicit Context(long precision_bits) { check(pc_context_create(precision_bits, &ctx_)); }
  ~Context() { pc_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  pc_context* get() const { return ctx_; }

 private:
  pc_context* ctx_ = nullptr;
};

// Loads the cache when it covers max_n, otherwise builds and (re)writes it.
void prepare_table(const Context& ctx, const std::string& cache, long max_n) {
  if (!cache.empty() && std::filesystem::exists(cache)) {
    check(pc_table_load(ctx.get(), cache.c_str()));
    if (pc_table_max_n(ctx.get()) >= max_n) return;
  }
  check(pc_table_ensure(ctx.get(), max_n));
  if (!cache.empty()) check(pc_table_save(ctx.get(), cache.c_str()));
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pc_string_free(s);
  return out;
}

json str_or_null(const char* s) { return s ? json(s) : json(nullptr); }

struct Row {
  json record;
  long precision_bits = 0;
};

json make_record(long n, long modulus, std::optional<long> r) {
  json rec;
  rec["n"] = n;
  rec["N"] = modulus;
  rec["r"] = r ? json(*r) : json(nullptr);
  rec["exact"] = nullptr;
  rec["estimate"] = nullptr;
  rec["ratio"] = nullptr;
  rec["terms"] = json::object();
  rec["timing_ms"] = nullptr;
  return rec;
}

json timing_value(bool enabled, std::chrono::steady_clock::time_point start) {
  if (!enabled) return nullptr;
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

Row asym_row(const Context& ctx, long n, long modulus, long r, long truncation, bool with_exact, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  pc_record out{};
  check(pc_asymptotic(ctx.get(), n, modulus, r, truncation, with_exact ? 1 : 0, &out));
  Row row;
  row.precision_bits = out.precision_bits;
  json& rec = row.record = make_record(n, modulus, r == 0 ? std::nullopt : std::optional<long>(r));
  rec["exact"] = str_or_null(out.exact);
  rec["estimate"] = str_or_null(out.estimate);
  rec["ratio"] = str_or_null(out.ratio);
  json terms = json::object();
  if (r == 0) {
    terms["prefactor"] = str_or_null(out.prefactor);
    terms["log_factor"] = str_or_null(out.log_factor);
  } else {
    terms["main1"] = str_or_null(out.main1);
    terms["main2"] = str_or_null(out.main2);
    if (out.t1) terms["t1"] = out.t1;
    if (out.t2) terms["t2"] = out.t2;
  }
  rec["terms"] = terms;
  if (out.ratio_cell) rec["cell"] = out.ratio_cell;
  pc_record_free(&out);
  rec["timing_ms"] = timing_value(timing, start);
  return row;
}

// ---- output ----

const std::vector<std::string> kCsvColumns = {"n",  "N",  "r",         "exact",      "estimate", "ratio",    "main1",
                                              "main2", "t1", "t2", "prefactor", "log_factor", "cell", "timing_ms"};

std::string csv_cell(const json& rec, const std::string& column) {
  const json* v = nullptr;
  if (rec.contains(column)) {
    v = &rec[column];
  } else if (rec["terms"].contains(column)) {
    v = &rec["terms"][column];
  }
  if (!v || v->is_null()) return "";
  if (v->is_string()) return v->get<std::string>();
  return v->dump();
}

void print_csv(const std::vector<json>& records) {
  std::string line;
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) line += (i ? "," : "") + kCsvColumns[i];
  std::cout << line << '\n';
  for (const auto& rec : records) {
    line.clear();
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) line += (i ? "," : "") + csv_cell(rec, kCsvColumns[i]);
    std::cout << line << '\n';
  }
}

void print_json(const std::vector<json>& records, long precision_bits) {
  json doc;
  doc["meta"] = {{"version", pc_version()}, {"precision_bits", precision_bits}};
  doc["records"] = records;
  std::cout << doc.dump(2) << '\n';
}

void print_text_records(const std::vector<json>& records) {
  for (const auto& rec : records) {
    std::ostringstream line;
    line << "n=" << rec["n"].dump() << " N=" << rec["N"].dump() << " r=" << (rec["r"].is_null() ? "0" : rec["r"].dump());
    auto add = [&](const std::string& key, const json& v) {
      if (!v.is_null()) line << ' ' << key << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    };
    add("estimate", rec["estimate"]);
    for (const auto& [key, v] : rec["terms"].items()) add(key, v);
    add("exact", rec["exact"]);
    add("ratio", rec["ratio"]);
    add("timing_ms", rec["timing_ms"]);
    std::cout << line.str() << '\n';
  }
}

void emit(const RunConfig& config, const std::vector<json>& records, long precision_bits) {
  if (config.format == "json") {
    print_json(records, precision_bits);
  } else if (config.format == "csv") {
    print_csv(records);
  } else {
    print_text_records(records);
  }
}

long max_of(const std::vector<long>& values) { return *std::max_element(values.begin(), values.end()); }

long reduced_residue(long r, long modulus) {
  if (modulus < 1) throw Failure{kDomain, "domain error: modulus must be >= 1"};
  return ((r % modulus) + modulus) % modulus;
}

long run_precision(const RunConfig& config) {
  if (config.precision_bits > 0) return config.precision_bits;
  long bits = 0;
  for (long n : config.n_list) bits = std::max(bits, pc_auto_precision_bits(n));
  return bits;
}

// ---- commands ----

int cmd_exact(const RunConfig& config) {
  const long r = reduced_residue(config.residue, config.modulus);
  Context ctx(config.precision_bits);
  for (long n : config.n_list) {
    if (n < 0) throw Failure{kDomain, "domain error: n must be >= 0"};
  }
  prepare_table(ctx, config.cache, max_of(config.n_list));
  std::vector<json> records;
  for (long n : config.n_list) {
    const auto start = std::chrono::steady_clock::now();
    char* value = nullptr;
    check(pc_exact_count(ctx.get(), n, config.modulus, r, &value));
    json rec = make_record(n, config.modulus, r == 0 ? std::nullopt : std::optional<long>(r));
    rec["exact"] = take(value);
    rec["timing_ms"] = timing_value(config.timing, start);
    records.push_back(std::move(rec));
  }
  if (config.format == "text") {
    for (const auto& rec : records) std::cout << rec["exact"].get<std::string>() << '\n';
  } else {
    emit(config, records, run_precision(config));
  }
  return kOk;
}

int cmd_asym(const RunConfig& config) {
  const long r = reduced_residue(config.residue, config.modulus);
  Context ctx(config.precision_bits);
  if (config.with_exact) prepare_table(ctx, config.cache, max_of(config.n_list));
  std::vector<json> records;
  long bits = 0;
  for (long n : config.n_list) {
    Row row = asym_row(ctx, n, config.modulus, r, config.truncation, config.with_exact, config.timing);
    bits = std::max(bits, row.precision_bits);
    records.push_back(std::move(row.record));
  }
  emit(config, records, bits);
  return kOk;
}

const std::vector<long> kTableColumns = {10, 100, 1000, 10000, 100000};

int cmd_table(const RunConfig& config) {
  std::vector<long> columns;
  for (long n : kTableColumns) {
    if (config.max_n <= 0 || n <= config.max_n) columns.push_back(n);
  }
  if (columns.empty()) throw Failure{kUsage, "usage error: --max-n excludes every table column"};
  struct Line {
    long modulus;
    long r;
  };
  const std::vector<Line> lines = config.which == 1 ? std::vector<Line>{{3, 1}} : std::vector<Line>{{1, 0}, {3, 0}, {6, 0}};

  // One precision for the whole table so that columns are mutually consistent.
  RunConfig sized = config;
  sized.n_list = columns;
  const long bits = run_precision(sized);
  Context ctx(bits);
  prepare_table(ctx, config.cache, max_of(columns));

  std::vector<std::future<Row>> cells;
  for (const Line& line : lines) {
    for (long n : columns) {
      cells.push_back(std::async(std::launch::async, [&ctx, &config, line, n] {
        return asym_row(ctx, n, line.modulus, line.r, 0, true, config.timing);
      }));
    }
  }
  std::vector<json> records;
  for (auto& cell : cells) records.push_back(cell.get().record);

  if (config.format != "text") {
    emit(config, records, bits);
    return kOk;
  }
  std::ostringstream out;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%-8s", "n");
  out << buffer;
  for (long n : columns) {
    std::snprintf(buffer, sizeof buffer, " %10ld", n);
    out << buffer;
  }
  out << '\n';
  std::size_t index = 0;
  for (const Line& line : lines) {
    const std::string label = config.which == 1 ? "Q(n)" : "Q_" + std::to_string(line.modulus) + "(n)";
    std::snprintf(buffer, sizeof buffer, "%-8s", label.c_str());
    out << buffer;
    for (std::size_t c = 0; c < columns.size(); ++c, ++index) {
      std::snprintf(buffer, sizeof buffer, " %10s", records[index]["cell"].get<std::string>().c_str());
      out << buffer;
    }
    out << '\n';
  }
  std::cout << out.str();
  return kOk;
}

int cmd_verify(const RunConfig& config) {
  std::vector<std::string> suites = config.suites;
  if (suites.empty()) {
    for (std::size_t i = 0; i < pc_suite_count(); ++i) {
      if (pc_suite_is_default(pc_suite_name(i))) suites.emplace_back(pc_suite_name(i));
    }
  }
  for (const auto& name : suites) {
    bool known = false;
    for (std::size_t i = 0; i < pc_suite_count(); ++i) known = known || name == pc_suite_name(i);
    if (!known) throw Failure{kUsage, "usage error: unknown suite '" + name + "'"};
  }

  bool all_passed = true;
  json reports = json::array();
  for (const auto& name : suites) {
    pc_suite_report report{};
    check(pc_verify_suite(name.c_str(), config.max_modulus, &report));
    all_passed = all_passed && report.passed;
    const long millis = static_cast<long>(report.millis + 0.5);
    if (config.format == "json") {
      reports.push_back({{"suite", report.name},
                         {"passed", report.passed != 0},
                         {"checks", report.checks},
                         {"detail", report.detail},
                         {"timing_ms", millis}});
    } else if (config.format == "csv") {
      if (reports.empty()) std::cout << "suite,passed,checks,timing_ms\n";
      reports.push_back(report.name);
      std::cout << report.name << ',' << (report.passed ? "true" : "false") << ',' << report.checks << ',' << millis
                << '\n';
    } else {
      std::cout << (report.passed ? "PASS " : "FAIL ") << report.name << " (" << report.checks << " checks, " << millis
                << " ms) " << report.detail << std::endl;
    }
    pc_suite_report_free(&report);
  }
  if (config.format == "json") {
    json doc;
    doc["meta"] = {{"version", pc_version()}, {"passed", all_passed}};
    doc["suites"] = reports;
    std::cout << doc.dump(2) << '\n';
  } else if (config.format == "text") {
    std::cout << (all_passed ? "all suites passed" : "some suites FAILED") << '\n';
  }
  return all_passed ? kOk : kVerifyFail;
}

int cmd_cache_build(const RunConfig& config) {
  if (config.cache.empty()) throw Failure{kUsage, "usage error: cache-build needs --cache"};
  if (config.max_n < 0) throw Failure{kUsage, "usage error: --max-n must be >= 0"};
  Context ctx(config.precision_bits);
  check(pc_table_ensure(ctx.get(), config.max_n));
  check(pc_table_save(ctx.get(), config.cache.c_str()));
  std::cout << "wrote p(0.." << config.max_n << ") to " << config.cache << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parts of integer partitions in residue classes: exact counts and asymptotics"};
  app.require_subcommand(1);
  RunConfig config;

  const auto formats = CLI::IsMember({"text", "csv", "json"});
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--precision-bits", config.precision_bits, "Working precision (default: automatic per n)")
        ->check(CLI::Range(64L, 1L << 24));
    cmd->add_option("--format", config.format, "Output format")->check(formats);
    cmd->add_option("--cache", config.cache, "PTABLE v1 cache of p(n)");
    cmd->add_flag("--timing", config.timing, "Record per-record timing in ms");
  };
  auto add_query = [&](CLI::App* cmd) {
    cmd->add_option("--n", config.n_list, "Comma-separated list of n")->required()->delimiter(',');
    cmd->add_option("-N,--modulus", config.modulus, "Modulus N")->check(CLI::PositiveNumber);
    cmd->add_option("--r", config.residue, "Residue r (reduced mod N; 0 selects the class of multiples of N)");
  };

  auto* exact = app.add_subcommand("exact", "Exact total count of parts = r mod N");
  add_query(exact);
  add_common(exact);

  auto* asym = app.add_subcommand("asym", "Asymptotic estimate (r = 0, or 1 <= r < N/2 coprime to N)");
  add_query(asym);
  add_common(asym);
  asym->add_option("--truncation-k", config.truncation, "Evaluate the Bessel series up to k <= K")
      ->check(CLI::PositiveNumber);
  asym->add_flag("--with-exact", config.with_exact, "Also compute the exact value and the ratio");

  auto* table = app.add_subcommand("table", "Ratios of exact counts to the asymptotic main terms");
  add_common(table);
  table->add_option("--which", config.which, "1: Q(n) for r = 1 mod 3; 2: Q_N(n) for the zero class, N = 1, 3, 6")->required()->check(CLI::IsMember({1, 2}));
  table->add_option("--max-n", config.max_n, "Drop columns with n above this");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", config.suites, "Suite name(s), comma-separated")->delimiter(',');
  verify->add_option("--max-modulus", config.max_modulus, "Largest modulus for the character suites")
      ->check(CLI::Range(3L, 1000L));
  verify->add_option("--format", config.format, "Output format")->check(formats);

  auto* cache_build = app.add_subcommand("cache-build", "Write p(0..max-n) to a PTABLE v1 file");
  cache_build->add_option("--max-n", config.max_n, "Largest n")->required();
  cache_build->add_option("--cache", config.cache, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (exact->parsed()) return cmd_exact(config);
    if (asym->parsed()) return cmd_asym(config);
    if (table->parsed()) return cmd_table(config);
    if (verify->parsed()) return cmd_verify(config);
    if (cache_build->parsed()) return cmd_cache_build(config);
  } catch (const Failure& f) {
    std::cerr << f.message << '\n';
    return f.code;
  }
  return kUsage;
}
