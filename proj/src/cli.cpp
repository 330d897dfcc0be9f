#include "fewdist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fewdist/errors.hpp"
#include "fewdist/geometry.hpp"
#include "fewdist/io.hpp"
#include "fewdist/search.hpp"
#include "fewdist/setcalc.hpp"
#include "fewdist/sweeps.hpp"
#include "fewdist/verify.hpp"

namespace fewdist {
namespace {

enum class Format { Json, Csv };

struct GlobalOptions {
  std::string format = "json";
  std::string output;
  std::uint64_t max_pairs = Limits{}.max_pairs;
  std::uint64_t max_bitmap_bits = Limits{}.max_bitmap_bits;

  Limits limits() const {
    Limits l;
    l.max_pairs = max_pairs;
    l.max_bitmap_bits = max_bitmap_bits;
    return l;
  }
  Format fmt() const { return format == "csv" ? Format::Csv : Format::Json; }
};

/// A usage problem detected after flag parsing.
struct UsageError : Error {
  using Error::Error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return csv_field(v.get<std::string>());
  if (v.is_null()) return "";
  return csv_field(v.dump());
}

std::string csv_rows(const std::vector<std::string>& columns, const std::vector<Json>& rows) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + csv_field(columns[i]);
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      if (row.contains(columns[i])) out += csv_cell(row[columns[i]]);
    }
    out += '\n';
  }
  return out;
}

std::string render_object(const Json& obj, Format fmt) {
  if (fmt == Format::Json) return obj.dump() + "\n";
  std::vector<std::string> columns;
  for (const auto& [key, value] : obj.items()) columns.push_back(key);
  return csv_rows(columns, {obj});
}

std::string render_records(const std::vector<AuditRecord>& records, Format fmt) {
  std::vector<Json> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(r.to_json());
  if (fmt == Format::Json) {
    std::string out;
    for (const auto& row : rows) out += row.dump() + "\n";
    return out;
  }
  return csv_rows({"statement_id", "sizes", "lhs", "rhs", "ratio", "approx_ratio", "holds", "witnesses", "notes", "error"},
                  rows);
}

int records_exit_code(const std::vector<AuditRecord>& records) {
  int code = kExitOk;
  for (const auto& r : records) {
    if (r.error) code = std::max(code, r.feasibility_error ? int{kExitInfeasible} : int{kExitFailure});
    if (r.holds == Holds::False) code = std::max(code, int{kExitFailure});
  }
  return code;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item.front() == '-') throw UsageError("--sizes: '" + item + "' is not a size");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

Json load_json_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config '" + path + "': " + e.what());
  }
}

// --- verbs ------------------------------------------------------------------

struct StatsArgs {
  std::string file;
  bool points = false;
  bool product = false;
  bool diff = false;
  bool distances = false;
  bool ratio = false;
  bool slopes = false;
};

Json run_stats(const StatsArgs& a, const Limits& limits) {
  const bool none = !a.diff && !a.distances && !a.ratio && !a.slopes;
  Json out = Json::object();
  if (a.points) {
    if (a.diff || a.ratio) throw UsageError("--diff and --ratio need a set file, not --points");
    if (a.product) throw UsageError("--product needs a set file, not --points");
    const PointSet p = read_points_file(a.file);
    if (a.distances || none) out["delta_card"] = distance_set(p, limits).size();
    if (a.slopes || none) out["slope_card"] = slope_set(p, limits).size();
    return out;
  }
  const NumSet s = read_set_file(a.file);
  if (s.empty()) throw DomainError("empty set");
  if (a.diff || none) out["diff_card"] = difference_set(s, s, limits).size();
  if (a.distances || none) out["delta_card"] = product_distance_set(s, limits).size();
  if (a.ratio || (none && !s.contains_zero())) out["ratio_card"] = ratio_set(s, s, limits).size();
  if (a.slopes || (none && s.size() >= 2)) out["slope_card"] = slope_set(PointSet::product(s, s), limits).size();
  return out;
}

struct VerifyArgs {
  std::string statement;
  std::string file;
  bool points = false;
  bool product = false;
  bool exhaustive = false;
  unsigned m = 1;
  unsigned n = 1;
  std::string depth = "ratio-only";
};

std::vector<AuditRecord> run_verify(const VerifyArgs& a, const Limits& limits) {
  const auto id = parse_statement_id(a.statement);
  if (!id) throw UsageError("unknown statement id '" + a.statement + "'");
  const AuditDepth depth = a.depth == "full-chain" ? AuditDepth::FullChain : AuditDepth::RatioOnly;
  if (a.exhaustive) {
    if (!a.file.empty()) throw UsageError("--exhaustive-small takes no input file");
    return exhaustive_small(*id, depth, limits);
  }
  if (a.file.empty()) throw UsageError("verify needs an input file or --exhaustive-small");

  const bool point_statement = *id == StatementId::Ungar || (*id == StatementId::Solymosi && a.points);
  if (a.points && !point_statement) throw UsageError("statement '" + a.statement + "' takes a set file");

  std::vector<AuditRecord> out;
  if (a.points) {
    const PointSet p = read_points_file(a.file);
    out.push_back(guarded_audit(*id, [&] {
      return *id == StatementId::Ungar ? check_ungar(p, limits) : check_solymosi_points(p, limits);
    }));
    return out;
  }
  const NumSet s = read_set_file(a.file);
  out.push_back(guarded_audit(*id, [&]() -> AuditRecord {
    switch (*id) {
      case StatementId::Differencing: return check_differencing(s, limits);
      case StatementId::Plunnecke: return check_plunnecke(s, a.m, a.n, limits);
      case StatementId::Solymosi: return check_solymosi_construction(s, limits);
      case StatementId::ProductSumset: return check_product_sumset(s, limits);
      case StatementId::Ungar: {
        // A set file stands for the product A x A.
        AuditRecord r = check_ungar(PointSet::product(s, s), limits);
        r.notes.emplace_back("instance: A x A");
        return r;
      }
      case StatementId::MainTheorem: return check_main_theorem(s, depth, limits);
      case StatementId::RudinExponent: return check_rudin_exponent(s, limits);
    }
    throw UsageError("unknown statement");
  }));
  return out;
}

Json run_richline(const std::string& file, const Limits& limits) {
  const NumSet a = read_set_file(file);
  const RichLine line = rich_line(a, limits);
  Json out;
  out["d"] = line.d.to_string();
  out["count"] = line.points.size();
  out["bound"] = rich_line_bound(a, limits).to_string();
  Json pts = Json::array();
  for (const auto& p : line.points) pts.push_back({p.x.to_string(), p.y.to_string()});
  out["witnesses"] = std::move(pts);
  Json hist = Json::array();
  for (const auto& b : rep_histogram(a, limits)) hist.push_back({b.d.to_string(), b.count});
  out["histogram"] = std::move(hist);
  out["notes"] = {"non-trivial line read as d != 0 (main diagonal excluded)",
                  "ties broken by smallest |numerator|, then denominator, positive first"};
  return out;
}

struct ScanArgs {
  std::vector<std::string> families;
  std::string sizes;
  std::string config;
};

std::vector<AuditRecord> run_scan(const ScanArgs& a, const Limits& limits) {
  std::vector<std::string> families = a.families;
  std::vector<std::size_t> sizes = parse_sizes(a.sizes);
  if (!a.config.empty()) {
    const Json cfg = load_json_config(a.config);
    for (const auto& [key, value] : cfg.items()) {
      if (key == "families") {
        if (!value.is_array()) throw UsageError("config field 'families' must be an array of strings");
        for (const auto& f : value) families.push_back(f.get<std::string>());
      } else if (key == "sizes") {
        if (!value.is_array()) throw UsageError("config field 'sizes' must be an array of integers");
        for (const auto& n : value) sizes.push_back(n.get<std::size_t>());
      } else {
        throw UsageError("unknown config field '" + key + "'");
      }
    }
  }
  std::vector<FamilySpec> specs;
  for (const auto& f : families) {
    try {
      specs.push_back(FamilySpec::parse(f));
    } catch (const DomainError& e) {
      throw UsageError(std::string("--family: ") + e.what());
    }
  }
  return scan(specs, sizes, limits);
}

struct SearchArgs {
  std::string config;
  std::optional<std::size_t> n;
  std::optional<std::int64_t> universe;
  std::optional<std::string> objective;
  std::optional<std::uint64_t> iterations;
  std::optional<double> temperature;
  std::optional<double> cooling;
  std::optional<std::uint64_t> restarts;
  std::optional<std::uint64_t> trace_every;
  std::optional<std::uint64_t> seed;
};

SearchConfig search_config(const SearchArgs& a) {
  SearchConfig c;
  std::optional<std::uint64_t> seed = a.seed;
  auto objective_of = [](const std::string& s) {
    auto o = parse_objective(s);
    if (!o) throw UsageError("field 'objective' must be min-distances or max-rho, got '" + s + "'");
    return *o;
  };
  if (!a.config.empty()) {
    const Json cfg = load_json_config(a.config);
    for (const auto& [key, value] : cfg.items()) {
      try {
        if (key == "n") c.n = value.get<std::size_t>();
        else if (key == "universe") c.universe = value.get<std::int64_t>();
        else if (key == "objective") c.objective = objective_of(value.get<std::string>());
        else if (key == "iterations") c.iterations = value.get<std::uint64_t>();
        else if (key == "initial_temperature") c.initial_temperature = value.get<double>();
        else if (key == "cooling_rate") c.cooling_rate = value.get<double>();
        else if (key == "restarts") c.restarts = value.get<std::uint64_t>();
        else if (key == "trace_every") c.trace_every = value.get<std::uint64_t>();
        else if (key == "seed") seed = seed ? seed : std::optional(value.get<std::uint64_t>());
        else throw UsageError("unknown config field '" + key + "'");
      } catch (const Json::exception&) {
        throw UsageError("config field '" + key + "' has the wrong type");
      }
    }
  }
  if (a.n) c.n = *a.n;
  if (a.universe) c.universe = *a.universe;
  if (a.objective) c.objective = objective_of(*a.objective);
  if (a.iterations) c.iterations = *a.iterations;
  if (a.temperature) c.initial_temperature = *a.temperature;
  if (a.cooling) c.cooling_rate = *a.cooling;
  if (a.restarts) c.restarts = *a.restarts;
  if (a.trace_every) c.trace_every = *a.trace_every;
  if (!seed) throw UsageError("search needs --seed (or a 'seed' config field)");
  c.seed = *seed;
  try {
    c.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact set-algebra workbench for distinct distances of Cartesian products", "fewdist"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", g.output, "Write the report here instead of standard output");
  app.add_option("--max-pairs", g.max_pairs, "Refuse enumerations above this many pairs");
  app.add_option("--max-bitmap-bits", g.max_bitmap_bits, "Largest dense bitmap of the integer path");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Exact cardinalities of derived sets");
  stats_cmd->add_option("file", stats.file, "Set file (or point file with --points)")->required();
  stats_cmd->add_flag("--points", stats.points, "Input is a point file");
  stats_cmd->add_flag("--product", stats.product, "Input set A stands for the point set A x A");
  stats_cmd->add_flag("--diff", stats.diff, "|A - A|");
  stats_cmd->add_flag("--distances", stats.distances, "|Delta| of the point set");
  stats_cmd->add_flag("--ratio", stats.ratio, "|A / A|");
  stats_cmd->add_flag("--slopes", stats.slopes, "number of slopes of the point set");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Audit one statement on an instance");
  verify_cmd->add_option("statement", verify.statement,
                         "differencing | plunnecke | solymosi | product-sumset | ungar | main-theorem | rudin")
      ->required();
  verify_cmd->add_option("file", verify.file, "Set file (or point file with --points)");
  verify_cmd->add_flag("--points", verify.points, "Input is a point file (ungar, solymosi)");
  verify_cmd->add_flag("--product", verify.product, "Input set A stands for A x A (ungar)");
  verify_cmd->add_flag("--exhaustive-small", verify.exhaustive, "Run the built-in small-instance sweep");
  verify_cmd->add_option("--m", verify.m, "Plunnecke: number of added copies");
  verify_cmd->add_option("--n", verify.n, "Plunnecke: number of subtracted copies");
  verify_cmd->add_option("--depth", verify.depth, "Main theorem audit depth")
      ->check(CLI::IsMember({"ratio-only", "full-chain"}));

  std::string richline_file;
  auto* richline_cmd = app.add_subcommand("richline", "Richest non-trivial line a - b = d of A x A");
  richline_cmd->add_option("file", richline_file, "Set file")->required();

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Main-theorem and Rudin-exponent reports over set families");
  scan_cmd->add_option("--family", scan_args.families, "Family spec, e.g. ap, gp:ratio=2, random:universe=100,seed=1");
  scan_cmd->add_option("--sizes", scan_args.sizes, "Comma-separated sizes");
  scan_cmd->add_option("--config", scan_args.config, "JSON config with 'families' and 'sizes'");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Simulated annealing for few-distance sets");
  search_cmd->add_option("--config", search.config, "JSON config (flags override)");
  search_cmd->add_option("--n", search.n, "Set size");
  search_cmd->add_option("--universe", search.universe, "Search over [0, U]");
  search_cmd->add_option("--objective", search.objective, "min-distances | max-rho");
  search_cmd->add_option("--iterations", search.iterations, "Iterations per restart");
  search_cmd->add_option("--temperature", search.temperature, "Initial temperature");
  search_cmd->add_option("--cooling", search.cooling, "Geometric cooling rate in (0, 1)");
  search_cmd->add_option("--restarts", search.restarts, "Independent restarts (seed + index)");
  search_cmd->add_option("--trace-every", search.trace_every, "Trace sampling period");
  search_cmd->add_option("--seed", search.seed, "RNG seed (required)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Limits limits = g.limits();
  std::string report;
  int code = kExitOk;
  try {
    if (stats_cmd->parsed()) {
      report = render_object(run_stats(stats, limits), g.fmt());
    } else if (verify_cmd->parsed()) {
      const auto records = run_verify(verify, limits);
      report = render_records(records, g.fmt());
      code = records_exit_code(records);
    } else if (richline_cmd->parsed()) {
      report = render_object(run_richline(richline_file, limits), g.fmt());
    } else if (scan_cmd->parsed()) {
      const auto records = run_scan(scan_args, limits);
      report = render_records(records, g.fmt());
      code = records_exit_code(records);
    } else if (search_cmd->parsed()) {
      const SearchConfig config = search_config(search);
      const SearchState state = anneal(config, limits);
      report = render_object(search_to_json(state), g.fmt());
      for (const auto& r : state.restarts) {
        if (r.error) code = kExitInfeasible;
      }
    }
  } catch (const UsageError& e) {
    err << "fewdist: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "fewdist: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FeasibilityError& e) {
    err << "fewdist: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "fewdist: " << e.what() << '\n';
    return kExitFailure;
  }

  if (g.output.empty()) {
    out << report;
  } else {
    std::ofstream file(g.output, std::ios::binary);
    if (!file) {
      err << "fewdist: cannot write '" << g.output << "'\n";
      return kExitUsage;
    }
    file << report;
  }
  return code;
}

}  // namespace fewdist
