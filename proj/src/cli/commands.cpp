#include "blockatlas/cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "blockatlas/cli/grid.hpp"

namespace blockatlas::cli {

namespace {

struct Produced {
  Json results;
  int exit_code = 0;
};

using Handler = std::function<Produced(const Options&, const Context&)>;

bool uses_type(const std::string& command) {
  return command == "unipotent" || command == "series" || command == "blocks" ||
         command == "fusion" || command == "dseries-check" || command == "defect-bounds";
}

Json inputs_json(const std::string& command, const Options& o, const Context& context) {
  Json in = Json::object();
  if (!o.type.empty()) in["type"] = o.type;
  if (o.rank) in["rank"] = o.rank;
  if (o.d) in["d"] = o.d;
  if (o.q) in["q"] = o.q;
  if (o.ell) in["ell"] = o.ell;
  if (o.dmax) in["dmax"] = o.dmax;
  if (!o.dset.empty()) in["D"] = o.dset;
  if (!o.datum.empty()) in["datum"] = o.datum;
  if (o.p) in["p"] = o.p;
  if (!o.config.empty()) in["config"] = o.config;
  if (!o.data.empty()) in["data"] = o.data;
  if (uses_type(command)) {
    in["bounds"] = {{"max_partition_size", context.bounds.max_partition_size},
                    {"max_symbol_rank", context.bounds.max_symbol_rank}};
  }
  return in;
}

Json report_head(const std::string& command, Json inputs) {
  Json out;
  out["schema"] = kReportSchema;
  out["engine_version"] = kEngineVersion;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["seed"] = 0;
  return out;
}

Json error_json(const std::exception& e, ErrorKind kind) {
  Json out;
  out["kind"] = std::string(error_kind_name(kind));
  out["message"] = e.what();
  if (const auto* src = dynamic_cast<const SourceError*>(&e)) {
    out["source"] = src->source();
    out["line"] = src->line();
    out["column"] = src->column();
  }
  return out;
}

GroupType require_type(const Options& o) {
  ensure(!o.type.empty(), ErrorKind::InvalidArgument, "--type is required");
  return GroupType::make(o.type, o.rank);
}

template <typename T>
T require(T value, const char* flag) {
  ensure(value != T{}, ErrorKind::InvalidArgument, std::string(flag) + " is required");
  return value;
}

std::shared_ptr<const SeriesSource> series_source(const GroupType& type, const Context& context) {
  if (type.is_classical()) return std::make_shared<ClassicalSeries>(type, context.bounds);
  if (context.tables) {
    auto it = context.tables->find(type);
    if (it != context.tables->end()) return it->second;
  }
  fail(ErrorKind::NotSupported,
       "no unipotent data for " + type.name() + "; supply a table with --data");
}

Produced cmd_unipotent(const Options& o, const Context& c) {
  const GroupType type = require_type(o);
  const auto source = series_source(type, c);
  return {{{"type", type.name()},
           {"count", source->labels().size()},
           {"labels", labels_json(source->labels())}}};
}

Produced cmd_series(const Options& o, const Context& c) {
  const GroupType type = require_type(o);
  const int d = require(o.d, "--d");
  ensure(d >= 1, ErrorKind::InvalidArgument, "d must be positive");
  const auto source = series_source(type, c);
  auto series = source->series(d);
  if (!series)
    fail(ErrorKind::NotSupported, "no " + std::to_string(d) + "-series data for " + type.name());
  validate(*series);
  return {to_json(*series)};
}

Produced cmd_blocks(const Options& o, const Context& c) {
  const GroupType type = require_type(o);
  const auto q = PrimePower::make(require(o.q, "--q"));
  const auto blocks = ell_blocks(type, q, require(o.ell, "--ell"), c.bounds);
  return {to_json(blocks)};
}

Produced cmd_fusion(const Options& o, const Context& c) {
  const GroupType type = require_type(o);
  const auto q = PrimePower::make(require(o.q, "--q"));
  const int dmax = o.dmax ? o.dmax : default_d_max(type);
  const auto source = series_source(type, c);
  const auto result = fusion_closure(*source, q, dmax);
  verify_certificate(result, *source);
  return {to_json(result)};
}

Produced cmd_dseries(const Options& o, const Context& c) {
  const GroupType type = require_type(o);
  const auto ds = parse_int_set(require(o.dset, "--D"));
  const auto source = series_source(type, c);
  Json out = {{"type", type.name()}, {"D", ds}};
  out.update(to_json(is_single_d_series(*source, ds)));
  return {out};
}

Produced cmd_defect_bounds(const Options& o, const Context& c) {
  const GroupType type = require_type(o);
  const auto rows = defect_bound_report(type, c.bounds);
  Json out = {{"type", type.name()}};
  Json list = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    list.push_back(to_json(r));
    all = all && r.satisfied;
  }
  out["rows"] = std::move(list);
  out["all_satisfied"] = all;
  out["derived"] = type.rank >= 2 ? to_json(derived_inequality_check(type, c.bounds)) : Json();
  return {out};
}

Produced cmd_zsygmondy(const Options& o, const Context&) {
  const std::uint64_t q = require(o.q, "--q");
  const int d = require(o.d, "--d");
  const auto primes = primitive_primes(q, d);
  const auto odd = primitive_prime(q, d, GoodnessFilter::odd());
  return {{{"q", q},
           {"d", d},
           {"primitive_primes", primes},
           {"odd_witness", odd ? Json(*odd) : Json("none")}}};
}

Produced cmd_pi1(const Options& o, const Context&) {
  const auto datum = load_datum(require(o.datum, "--datum"));
  const auto parts = derived_and_abelianized(datum);
  const auto target = kottwitz_target(datum);
  Json out = {{"datum", datum.name},
              {"quasi_split", datum.quasi_split},
              {"pi1", to_json(parts.pi1)},
              {"kottwitz_target", to_json(target.group)},
              {"pi1_der", to_json(parts.pi1_der.group)},
              {"cochar_ab", to_json(parts.cochar_ab)}};
  if (o.p) {
    ensure(is_prime(o.p), ErrorKind::InvalidArgument, "p must be prime");
    out["p"] = o.p;
    out["kottwitz_p_torsion"] = to_json(p_torsion(target.group, o.p).group);
  }
  return {out};
}

Produced cmd_components(const Options& o, const Context&) {
  const auto datum = load_datum(require(o.datum, "--datum"));
  const std::uint64_t p = require(o.p, "--p");
  const auto lemma = lemma_checks(datum, p);
  return {{{"datum", datum.name},
           {"p", p},
           {"component_group", to_json(dual_side_torsor(datum, p))},
           {"centre_component_group", to_json(p_torsion(kottwitz_target(datum).group, p).group)},
           {"checks", to_json(lemma)}},
          lemma.all() ? 0 : 1};
}

Produced cmd_bijection(const Options& o, const Context&) {
  const auto datum = load_datum(require(o.datum, "--datum"));
  const auto report = bijection_check(datum, require(o.p, "--p"));
  Json out = {{"datum", datum.name}};
  out.update(to_json(report));
  return {out, report.equal ? 0 : 1};
}

Produced cmd_cornqs(const Options& o, const Context&) {
  const auto datum = load_datum(require(o.datum, "--datum"));
  const auto report = cornqs_check(datum, require(o.p, "--p"));
  Json out = {{"datum", datum.name}};
  out.update(to_json(report));
  return {out, report.consistent ? 0 : 1};
}

Produced cmd_grid(const Options& o, const Context& c) {
  const std::string path = require(o.config, "--config");
  const auto config = parse_grid(read_file(path), path);
  auto run = run_grid(config, c);
  return {std::move(run.results), run.exit_code};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"unipotent", cmd_unipotent},   {"series", cmd_series},
      {"blocks", cmd_blocks},         {"fusion", cmd_fusion},
      {"dseries-check", cmd_dseries}, {"defect-bounds", cmd_defect_bounds},
      {"zsygmondy", cmd_zsygmondy},   {"pi1", cmd_pi1},
      {"components", cmd_components}, {"bijection", cmd_bijection},
      {"cornqs", cmd_cornqs},         {"grid", cmd_grid},
  };
  return table;
}

Outcome failure(Json head, const std::exception& e, ErrorKind kind, int code) {
  head["error"] = error_json(e, kind);
  return {code, std::move(head)};
}

}  // namespace

Bounds bounds_from_environment() {
  Bounds bounds;
  const char* raw = std::getenv("BLOCKATLAS_MAX_RANK");
  if (!raw || !*raw) return bounds;
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  ensure(used == std::string(raw).size() && n >= 1, ErrorKind::InvalidArgument,
         "BLOCKATLAS_MAX_RANK must be a positive integer");
  bounds.max_symbol_rank = n;
  bounds.max_partition_size = n + 1;
  return bounds;
}

std::set<int> parse_int_set(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '{' || ch == '}' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::set<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    ensure(used == token.size() && value >= 1, ErrorKind::InvalidArgument,
           "'" + token + "' is not a positive integer");
    out.insert(value);
  }
  ensure(!out.empty(), ErrorKind::InvalidArgument, "the set D must be non-empty");
  return out;
}

Outcome run_command(const std::string& command, const Options& options, const Context& context) {
  Json head = report_head(command, inputs_json(command, options, context));
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    const Error e(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
    return failure(std::move(head), e, e.kind(), 2);
  }
  try {
    Produced produced = it->second(options, context);
    head["results"] = std::move(produced.results);
    return {produced.exit_code, std::move(head)};
  } catch (const Error& e) {
    return failure(std::move(head), e, e.kind(), e.kind() == ErrorKind::InvariantViolation ? 1 : 2);
  } catch (const std::exception& e) {
    return failure(std::move(head), e, ErrorKind::InvariantViolation, 1);
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unipotent block fusion and torsor computations", "blockatlas"};
  app.require_subcommand(1);
  Options options;
  bool pretty = false;

  struct CommandInfo {
    const char* name;
    const char* help;
    std::vector<std::string> flags;
  };
  const std::vector<CommandInfo> commands{
      {"unipotent", "List unipotent labels", {"type", "rank", "data"}},
      {"series", "Partition labels into d-series", {"type", "rank", "d", "data"}},
      {"blocks", "Unipotent ell-blocks for q", {"type", "rank", "q", "ell"}},
      {"fusion", "Fusion closure over good odd primes", {"type", "rank", "q", "dmax", "data"}},
      {"dseries-check", "Is everything one D-series?", {"type", "rank", "D", "data"}},
      {"defect-bounds", "Defect bounds of 1-series", {"type", "rank"}},
      {"zsygmondy", "Primitive prime divisors of q^d - 1", {"q", "d"}},
      {"pi1", "Fundamental group and Kottwitz target", {"datum", "p"}},
      {"components", "Dual-side component group checks", {"datum", "p"}},
      {"bijection", "Compare the two torsor groups", {"datum", "p"}},
      {"cornqs", "Primitivity criterion for the depth-zero idempotent", {"datum", "p"}},
      {"grid", "Run a batch grid", {"config", "data"}},
  };
  for (const auto& info : commands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    sub->add_flag("--pretty", pretty, "Plain-text rendering instead of JSON");
    for (const auto& f : info.flags) {
      if (f == "type") sub->add_option("--type", options.type, "A 2A B C D 2D G2 F4 E6 2E6 E7 E8 3D4");
      if (f == "rank") sub->add_option("--rank", options.rank, "Rank n");
      if (f == "d") sub->add_option("--d", options.d, "Integer d");
      if (f == "q") sub->add_option("--q", options.q, "Prime power q");
      if (f == "ell") sub->add_option("--ell", options.ell, "Prime ell");
      if (f == "dmax") sub->add_option("--dmax", options.dmax, "Largest d considered");
      if (f == "D") sub->add_option("--D", options.dset, "Set of d, e.g. 1,6");
      if (f == "datum") sub->add_option("--datum", options.datum, "catalog:<name> or a JSON file");
      if (f == "p") sub->add_option("--p", options.p, "Residue characteristic p");
      if (f == "config") sub->add_option("--config", options.config, "Grid config file");
      if (f == "data") sub->add_option("--data", options.data, "Exceptional-type table (JSON)");
    }
  }

  std::string command = "none";
  try {
    app.parse(argc, argv);
    command = app.get_subcommands().front()->get_name();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();
    const Error wrapped(ErrorKind::InvalidArgument, e.what());
    Json report = report_head(command, Json::object());
    report["error"] = error_json(wrapped, wrapped.kind());
    out << report.dump(2) << '\n';
    return 2;
  }

  Context context;
  Outcome outcome;
  try {
    context.bounds = bounds_from_environment();
    if (!options.data.empty())
      context.tables = std::make_shared<const ExceptionalTables>(load_exceptional(options.data));
    outcome = run_command(command, options, context);
  } catch (const Error& e) {
    outcome = failure(report_head(command, inputs_json(command, options, context)), e, e.kind(), 2);
  }
  out << (pretty ? render_text(outcome.report) : outcome.report.dump(2) + "\n");
  return outcome.exit_code;
}

}  // namespace blockatlas::cli
