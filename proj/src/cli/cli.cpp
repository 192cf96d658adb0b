#include "spivey/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "spivey/bell.hpp"
#include "spivey/prob_bell.hpp"
#include "spivey/report_io.hpp"

namespace spivey::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RawOptions {
  std::string family;
  std::vector<std::string> identities;
  std::vector<std::string> rvs;
  int n_max = -1;
  int l_max = -1;
  int j_max = -1;
  int sum_max = 6;
  std::vector<int> r_values;
  std::string format = "json";
  std::string out;
  int workers = 0;
  bool with_timing = false;
  bool self_test_mismatch = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App& sub, RawOptions& o) {
  sub.add_option("--rv", o.rvs, "Random variable, e.g. poisson:1 (repeatable)");
  sub.add_option("--n-max", o.n_max, "Largest n")->check(CLI::NonNegativeNumber);
  sub.add_option("--l-max", o.l_max, "Largest l")->check(CLI::NonNegativeNumber);
  sub.add_option("--j-max", o.j_max, "Largest j")->check(CLI::NonNegativeNumber);
  sub.add_option("--sum-max", o.sum_max, "Largest n+l (or n+j)")->capture_default_str()->check(CLI::NonNegativeNumber);
  sub.add_option("--r", o.r_values, "r values for r-families (repeatable)")->check(CLI::PositiveNumber);
  sub.add_option("--format", o.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--out", o.out, "Output path (default: standard output)");
  sub.add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
}

RunConfig finish_config(Command command, const RawOptions& o, bool explicit_n, bool explicit_l,
                        bool explicit_j) {
  RunConfig c;
  c.command = command;
  c.family = o.family;
  c.rv_specs = o.rvs;
  for (const auto& spec : o.rvs) {
    try {
      c.rvs.push_back(parse_rv(spec));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--rv: ") + e.what());
    }
  }
  c.sum_max = static_cast<unsigned>(o.sum_max);
  c.n_max = explicit_n ? static_cast<unsigned>(o.n_max) : c.sum_max;
  c.l_max = explicit_l ? static_cast<unsigned>(o.l_max) : c.sum_max;
  c.j_max = explicit_j ? static_cast<unsigned>(o.j_max) : c.sum_max;
  for (int r : o.r_values) c.r_values.push_back(static_cast<unsigned>(r));
  c.format = o.format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (!o.out.empty()) c.out_path = o.out;
  c.workers = o.workers > 0 ? static_cast<unsigned>(o.workers) : std::max(1U, std::thread::hardware_concurrency());
  c.with_timing = o.with_timing;
  c.self_test_mismatch = o.self_test_mismatch;
  if (command == Command::verify) {
    const std::vector<std::string> names = o.identities.empty() ? std::vector<std::string>{"all"} : o.identities;
    for (const auto& name : names) {
      if (name == "all") {
        for (IdentityId id : kAllIdentities) c.identities.push_back(id);
        continue;
      }
      const auto id = parse_identity(name);
      if (!id) throw UsageError("--identity: unknown identity '" + name + "'");
      c.identities.push_back(*id);
    }
    std::sort(c.identities.begin(), c.identities.end());
    c.identities.erase(std::unique(c.identities.begin(), c.identities.end()), c.identities.end());
  }
  return c;
}

// Writes to the --out file, or to `out` when no path was given. Returns
// false if the file cannot be opened or written.
bool emit(const RunConfig& config, std::ostream& out, std::ostream& err, const std::string& text) {
  if (!config.out_path) {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << *config.out_path << "' for writing\n";
    return false;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing '" << *config.out_path << "'\n";
    return false;
  }
  return true;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

struct TableRow {
  std::optional<std::string> rv;
  std::optional<unsigned> r;
  unsigned n = 0;
  std::optional<unsigned> k;
  std::string poly;

  auto key() const { return std::tie(rv, r, n, k); }
};

struct FamilyInfo {
  bool probabilistic;
  bool has_k;
  bool has_r;
};

const std::map<std::string, FamilyInfo>& family_info() {
  static const std::map<std::string, FamilyInfo> kInfo = {
      {"stirling-deg", {false, true, false}},   {"bell-deg", {false, false, false}},
      {"stirling-r-deg", {false, true, true}},  {"bell-r-deg", {false, false, true}},
      {"stirling-prob", {true, true, false}},   {"bell-prob", {true, false, false}},
      {"stirling-r-prob", {true, true, true}},  {"bell-r-prob", {true, false, true}},
  };
  return kInfo;
}

std::vector<TableRow> build_table(const RunConfig& config) {
  const FamilyInfo info = family_info().at(config.family);
  const std::string& f = config.family;
  const unsigned n_max = config.n_max;
  std::vector<unsigned> r_values = config.r_values.empty() ? std::vector<unsigned>{1} : config.r_values;
  if (!info.has_r) r_values = {0};
  std::vector<RandomVariableModel> rvs = config.rvs;
  if (rvs.empty()) rvs.push_back(RandomVariableModel::point(1));

  std::vector<TableRow> rows;
  auto push = [&](const std::optional<std::string>& rv, unsigned r, unsigned n, std::optional<unsigned> k,
                  const MPoly& p) {
    TableRow row;
    row.rv = rv;
    if (info.has_r) row.r = r;
    row.n = n;
    row.k = k;
    row.poly = p.to_string();
    rows.push_back(std::move(row));
  };

  if (!info.probabilistic) {
    for (unsigned r : r_values) {
      if (f == "stirling-deg" || f == "bell-deg") {
        const StirlingTableDeg table(n_max);
        for (unsigned n = 0; n <= n_max; ++n) {
          if (info.has_k) {
            for (unsigned k = 0; k <= n; ++k) push(std::nullopt, r, n, k, table.at(n, k));
          } else {
            push(std::nullopt, r, n, std::nullopt, table.bell(n));
          }
        }
      } else {
        const RStirlingTableDeg table(n_max, r);
        for (unsigned n = 0; n <= n_max; ++n) {
          if (info.has_k) {
            for (unsigned k = 0; k <= n; ++k) push(std::nullopt, r, n, k, table.at(n, k));
          } else {
            push(std::nullopt, r, n, std::nullopt, table.bell(n));
          }
        }
      }
    }
  } else {
    for (const auto& rv : rvs) {
      const std::string spec = rv.spec();
      for (unsigned r : r_values) {
        if (f == "bell-prob") {
          const auto bell = prob_bell_deg_upto(rv, n_max);
          for (unsigned n = 0; n <= n_max; ++n) push(spec, r, n, std::nullopt, bell[n]);
        } else if (f == "bell-r-prob") {
          const auto bell = prob_bell_r_deg_upto(rv, n_max, r);
          for (unsigned n = 0; n <= n_max; ++n) push(spec, r, n, std::nullopt, bell[n]);
        } else {
          for (unsigned n = 0; n <= n_max; ++n) {
            const auto row = f == "stirling-prob" ? prob_stirling2_deg_row(rv, n) : std::vector<MPoly>{};
            for (unsigned k = 0; k <= n; ++k) {
              push(spec, r, n, k, f == "stirling-prob" ? row[k] : prob_stirling2_r_deg(rv, n, k, r));
            }
          }
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows, const FamilyInfo& info, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json array = Json::array();
    for (const auto& row : rows) {
      Json obj;
      obj["n"] = row.n;
      if (row.k) obj["k"] = *row.k;
      if (row.r) obj["r"] = *row.r;
      if (row.rv) obj["rv"] = *row.rv;
      obj["poly"] = row.poly;
      array.push_back(std::move(obj));
    }
    return array.dump(2) + "\n";
  }
  std::ostringstream csv;
  csv << "n";
  if (info.has_k) csv << ",k";
  if (info.has_r) csv << ",r";
  if (info.probabilistic) csv << ",rv";
  csv << ",poly\n";
  for (const auto& row : rows) {
    csv << row.n;
    if (row.k) csv << "," << *row.k;
    if (row.r) csv << "," << *row.r;
    if (row.rv) csv << "," << csv_field(*row.rv);
    csv << "," << csv_field(row.poly) << "\n";
  }
  return csv.str();
}

Json config_echo(const RunConfig& config) {
  Json echo;
  echo["command"] = "verify";
  Json ids = Json::array();
  for (IdentityId id : config.identities) ids.push_back(std::string(identity_name(id)));
  echo["identities"] = ids;
  Json rvs = Json::array();
  for (const auto& rv : config.rvs) rvs.push_back(rv.spec());
  echo["rvs"] = rvs;
  echo["n_max"] = config.n_max;
  echo["l_max"] = config.l_max;
  echo["j_max"] = config.j_max;
  echo["sum_max"] = config.sum_max;
  echo["r"] = config.r_values;
  return echo;
}

}  // namespace

const std::vector<std::string>& table_families() {
  static const std::vector<std::string> kFamilies = [] {
    std::vector<std::string> names;
    for (const auto& [name, info] : family_info()) names.push_back(name);
    return names;
  }();
  return kFamilies;
}

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!family_info().contains(config.family)) {
    err << "error: --family: unknown family '" << config.family << "'\n";
    return kExitUsage;
  }
  const auto rows = build_table(config);
  const std::string text = render_table(rows, family_info().at(config.family), config.format);
  return emit(config, out, err, text) ? kExitOk : kExitIo;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  GridConfig grid;
  grid.identities = config.identities;
  grid.rvs = config.rvs.empty() ? standard_rv_suite() : config.rvs;
  grid.sum_max = config.sum_max;
  grid.n_max = config.n_max;
  grid.l_max = config.l_max;
  grid.j_max = config.j_max;
  grid.r_values = config.r_values.empty() ? std::vector<unsigned>{1, 2, 3} : config.r_values;
  grid.workers = config.workers;
  grid.perturb_rhs = config.self_test_mismatch;

  const auto reports = run_grid(grid);

  RunConfig echoed = config;
  echoed.rvs = grid.rvs;
  echoed.r_values = grid.r_values;
  if (config.out_path) {
    const std::string text = report_document(reports, config_echo(echoed), config.with_timing).dump(2) + "\n";
    if (!emit(config, out, err, text)) return kExitIo;
  }
  for (const auto& r : reports) {
    if (r.equal) continue;
    err << "FAIL " << identity_name(r.identity) << " " << report_to_json(r, false)["params"].dump() << "\n"
        << "  lhs: " << r.lhs << "\n"
        << "  rhs: " << r.rhs << "\n";
  }
  out << summary_line(reports) << "\n";
  return count_failures(reports) == 0 ? kExitOk : kExitFailure;
}

int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  std::vector<RandomVariableModel> rvs = config.rvs;
  if (rvs.empty()) rvs.push_back(RandomVariableModel::poisson(1));

  struct Row {
    std::string strategy;
    unsigned n;
    unsigned l;
    std::string rv;
    double micros;
  };
  std::vector<Row> rows;
  bool mismatch = false;

  for (const auto& rv : rvs) {
    const std::string spec = rv.spec();
    for (unsigned n = 0; n <= config.n_max; ++n) {
      for (unsigned l = 0; l <= config.l_max && n + l <= config.sum_max; ++l) {
        // Lower-index values are the cache the decomposition reuses.
        const auto cached = prob_bell_deg_upto(rv, l);

        auto start = Clock::now();
        MPoly direct = prob_bell_deg_via_exp(rv, l + n);
        const auto direct_time = Clock::now() - start;

        start = Clock::now();
        MPoly decomposed = thm21_rhs(rv, n, l, cached);
        const auto decomposed_time = Clock::now() - start;

        if (config.self_test_mismatch) decomposed += MPoly(1);
        if (direct != decomposed) {
          mismatch = true;
          err << "MISMATCH rv=" << spec << " n=" << n << " l=" << l << "\n"
              << "  direct:     " << direct.to_string() << "\n"
              << "  decomposed: " << decomposed.to_string() << "\n";
          continue;
        }
        auto micros = [](auto d) { return std::chrono::duration<double, std::micro>(d).count(); };
        rows.push_back({"direct", n, l, spec, micros(direct_time)});
        rows.push_back({"spivey", n, l, spec, micros(decomposed_time)});
      }
    }
  }
  if (mismatch) return kExitFailure;

  std::ostringstream csv;
  csv << "strategy,n,l,rv,wall_us\n" << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    csv << r.strategy << "," << r.n << "," << r.l << "," << csv_field(r.rv) << "," << r.micros << "\n";
  }
  return emit(config, out, err, csv.str()) ? kExitOk : kExitIo;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degenerate and probabilistic Bell polynomials with Spivey-type identity checks"};
  app.require_subcommand(1);

  RawOptions table_opts;
  RawOptions verify_opts;
  RawOptions bench_opts;

  auto* table = app.add_subcommand("table", "Emit a table of one polynomial family");
  add_common_options(*table, table_opts);
  table->add_option("--family", table_opts.family, "Family to tabulate")
      ->required()
      ->check(CLI::IsMember(table_families()));

  auto* verify = app.add_subcommand("verify", "Verify identities over a parameter grid");
  add_common_options(*verify, verify_opts);
  verify->add_option("--identity", verify_opts.identities, "Identity to check, or 'all' (repeatable)");
  verify->add_flag("--with-timing", verify_opts.with_timing, "Include per-cell timings in the report");
  verify->add_flag("--self-test-mismatch", verify_opts.self_test_mismatch, "Perturb every right-hand side")
      ->group("");

  auto* bench = app.add_subcommand("bench", "Time decomposition reuse against direct series extraction");
  add_common_options(*bench, bench_opts);
  bench->add_flag("--self-test-mismatch", bench_opts.self_test_mismatch, "Perturb the decomposed result")
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CLI::App* sub = table->parsed() ? table : verify->parsed() ? verify : bench;
    const RawOptions& o = sub == table ? table_opts : sub == verify ? verify_opts : bench_opts;
    const Command command = sub == table ? Command::table : sub == verify ? Command::verify : Command::bench;
    const RunConfig config =
        finish_config(command, o, sub->count("--n-max") > 0, sub->count("--l-max") > 0, sub->count("--j-max") > 0);
    switch (command) {
      case Command::table: return run_table(config, out, err);
      case Command::verify: return run_verify(config, out, err);
      case Command::bench: return run_bench(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spivey::cli
