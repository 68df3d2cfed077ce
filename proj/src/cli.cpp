#include "qwalk/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "qwalk/corpus.hpp"
#include "qwalk/generator.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/random.hpp"
#include "qwalk/serialize.hpp"
#include "qwalk/spectral_map.hpp"
#include "qwalk/szegedy.hpp"
#include "qwalk/walk_sim.hpp"

namespace qwalk {

const char* to_string(Command c) {
  switch (c) {
    case Command::validate: return "validate";
    case Command::spectrum: return "spectrum";
    case Command::generator: return "generator";
    case Command::simulate: return "simulate";
    case Command::localize: return "localize";
    case Command::infer_graph: return "infer-graph";
    case Command::fuzz: return "fuzz";
  }
  return "?";
}

namespace {

const std::map<std::string, Command> kCommands{
    {"validate", Command::validate}, {"spectrum", Command::spectrum},   {"generator", Command::generator},
    {"simulate", Command::simulate}, {"localize", Command::localize},   {"infer-graph", Command::infer_graph},
    {"fuzz", Command::fuzz}};

const char* kTopHelp =
    "usage: qwalk <command> [options]\n"
    "commands:\n"
    "  validate     run the invariant suite on one walk\n"
    "  spectrum     predicted spectrum of U (CSV: angle,re,im,multiplicity,provenance)\n"
    "  generator    generator H with block dimensions and spectra (JSON)\n"
    "  simulate     distributions nu_n (CSV: n,label,nu)\n"
    "  localize     limit distribution and localization report (JSON)\n"
    "  infer-graph  digraph G_U of an operator and block unitarity check (JSON)\n"
    "  fuzz         invariant suite over seeded random instances\n"
    "run 'qwalk <command> --help' for options\n";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

json read_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

std::string format_double(double x) {
  std::ostringstream ss;
  ss << std::setprecision(17) << x;
  return ss.str();
}

// Config values arrive either as JSON scalars from a file or as strings
// from the command line.
std::string text_of(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw UsageError("'" + key + "' expects a string or number");
}

std::size_t to_count(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  unsigned long long n = 0;
  try {
    if (text.empty() || text[0] == '-' || text[0] == '+') throw std::invalid_argument("sign");
    n = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError("'" + key + "' expects a non-negative integer, got '" + text + "'");
  }
  if (used != text.size()) throw UsageError("'" + key + "' expects a non-negative integer, got '" + text + "'");
  return static_cast<std::size_t>(n);
}

double to_double(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(x))
    throw UsageError("'" + key + "' expects a finite number, got '" + text + "'");
  return x;
}

bool to_bool(const json& v, const std::string& key) {
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "true") return true;
    if (s == "false") return false;
  }
  throw UsageError("'" + key + "' expects a boolean");
}

std::pair<std::size_t, std::size_t> to_range(const std::string& text, const std::string& key) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("'" + key + "' expects a..b, got '" + text + "'");
  const auto a = to_count(text.substr(0, dots), key);
  const auto b = to_count(text.substr(dots + 2), key);
  if (a > b) throw UsageError("'" + key + "' range is empty: '" + text + "'");
  return {a, b};
}

bool is_source_key(const std::string& key) {
  return key == "graph" || key == "fixture" || key == "random" || key == "operator";
}

void apply_key(RunConfig& cfg, const std::string& key, const json& v) {
  if (key == "graph") cfg.graph_path = text_of(v, key);
  else if (key == "fixture") cfg.fixture = text_of(v, key);
  else if (key == "random") cfg.random_spec = text_of(v, key);
  else if (key == "operator") cfg.operator_path = text_of(v, key);
  else if (key == "blocks") cfg.blocks = text_of(v, key);
  else if (key == "weight") cfg.weight_mode = text_of(v, key);
  else if (key == "theta") {
    if (v.is_array()) {
      std::string joined;
      for (const auto& x : v) joined += (joined.empty() ? "" : ",") + text_of(x, key);
      cfg.theta = joined;
    } else {
      cfg.theta = text_of(v, key);
    }
  } else if (key == "steps") cfg.steps = to_count(text_of(v, key), key);
  else if (key == "init") cfg.init = v.is_array() ? v.dump() : text_of(v, key);
  else if (key == "window") cfg.window = to_range(text_of(v, key), key);
  else if (key == "output") cfg.output = text_of(v, key);
  else if (key == "walk-out") cfg.walk_out = text_of(v, key);
  else if (key == "format") cfg.format = text_of(v, key);
  else if (key == "tol-ker") cfg.tol_ker = to_double(text_of(v, key), key);
  else if (key == "verify") cfg.verify = to_bool(v, key);
  else if (key == "cesaro") cfg.cesaro = to_bool(v, key);
  else if (key == "limit") cfg.limit = to_bool(v, key);
  else if (key == "no-derived") cfg.no_derived = to_bool(v, key);
  else if (key == "seeds") cfg.seeds = to_range(text_of(v, key), key);
  else throw UsageError("unknown config key '" + key + "'");
}

void check_config(const RunConfig& cfg) {
  const int sources = int(cfg.graph_path.has_value()) + int(cfg.fixture.has_value()) +
                      int(cfg.random_spec.has_value()) + int(cfg.operator_path.has_value());
  if (cfg.command == Command::fuzz) {
    if (sources != 0) throw UsageError("fuzz takes --seeds, not an input source");
  } else if (sources != 1) {
    throw UsageError(sources == 0 ? "an input source is required (--graph, --fixture or --random)"
                                  : "exactly one input source may be given");
  }
  if (cfg.operator_path && cfg.command != Command::infer_graph)
    throw UsageError("--operator is only valid for infer-graph");
  if (cfg.blocks && !cfg.operator_path) throw UsageError("--blocks requires --operator");
  if (cfg.weight_mode != "grover" && cfg.weight_mode != "explicit")
    throw UsageError("--weight must be grover or explicit");
  if (cfg.weight_mode == "explicit" && !cfg.graph_path)
    throw UsageError("--weight explicit requires --graph with a weights table");
  if (cfg.theta && !cfg.graph_path && !cfg.fixture) throw UsageError("--theta requires a graph source");
  if (!(cfg.tol_ker > 0.0)) throw UsageError("--tol-ker must be positive");

  const bool tabular = cfg.command == Command::spectrum || cfg.command == Command::simulate;
  if (!cfg.format.empty()) {
    if (cfg.command == Command::fuzz) {
      if (cfg.format != "text") throw UsageError("fuzz only supports --format text");
    } else if (cfg.format != "json" && !(tabular && cfg.format == "csv")) {
      throw UsageError(std::string("unsupported --format '") + cfg.format + "' for " + to_string(cfg.command));
    }
  }
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  if (args.empty() || args[0] == "-h" || args[0] == "--help") {
    cfg.help = true;
    cfg.help_text = kTopHelp;
    return cfg;
  }
  const auto cmd = kCommands.find(args[0]);
  if (cmd == kCommands.end()) throw UsageError("unknown command '" + args[0] + "'");
  cfg.command = cmd->second;

  CLI::App app("qwalk " + args[0], "qwalk " + args[0]);
  std::map<std::string, std::string> values;
  const std::vector<std::pair<std::string, std::string>> value_options{
      {"graph", "graph JSON file"},
      {"fixture", "builtin graph: cycle:N, complete:N, path-loops:N, edge"},
      {"random", "random abstract instance H:K:SEED, or SEED for the corpus dimensions"},
      {"operator", "operator JSON file (infer-graph)"},
      {"blocks", "partition for --operator, e.g. a=0;b=1,2 (default: singletons)"},
      {"weight", "grover (default) or explicit"},
      {"theta", "1-form: one value for every edge or a comma list per edge (default 0)"},
      {"steps", "number of steps N (default 100)"},
      {"init", "arc:<id>, vertex-uniform:<v>, random:<seed> or a JSON vector (default arc:0)"},
      {"window", "localize window a..b (default 0..N)"},
      {"output", "output file (default stdout)"},
      {"walk-out", "also write the walk instance JSON to this file"},
      {"format", "csv or json"},
      {"tol-ker", "kernel tolerance (default 1e-9)"},
      {"seeds", "fuzz seed range a..b (default 1..50)"},
  };
  for (const auto& [name, desc] : value_options) app.add_option("--" + name, values[name], desc);
  const std::vector<std::pair<std::string, std::string>> flag_options{
      {"verify", "run the verification for the command and exit 1 on failure"},
      {"cesaro", "append Cesaro mean rows (n = -2)"},
      {"limit", "append limit distribution rows (n = -1)"},
      {"no-derived", "omit C, U, T from --walk-out"},
  };
  std::map<std::string, bool> flags;
  for (const auto& [name, desc] : flag_options) app.add_flag("--" + name, flags[name], desc);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with option values; flags override it");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    cfg.help = true;
    cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  bool cli_source = false;
  for (const auto& [name, desc] : value_options)
    if (app.count("--" + name) > 0 && is_source_key(name)) cli_source = true;

  if (!config_path.empty()) {
    const json file = read_json(config_path);
    if (!file.is_object()) throw UsageError("config file must hold a JSON object");
    for (const auto& [key, value] : file.items()) {
      if (cli_source && is_source_key(key)) continue;
      apply_key(cfg, key, value);
    }
  }
  for (const auto& [name, desc] : value_options)
    if (app.count("--" + name) > 0) apply_key(cfg, name, json(values[name]));
  for (const auto& [name, desc] : flag_options)
    if (app.count("--" + name) > 0) apply_key(cfg, name, json(flags[name]));

  check_config(cfg);
  return cfg;
}

Vector parse_initial_state(const std::string& spec, Index dim, const Graph* g) {
  Vector psi = Vector::Zero(dim);
  if (!spec.empty() && spec[0] == '[') {
    json v;
    try {
      v = json::parse(spec);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("malformed initial state vector: ") + e.what());
    }
    if (static_cast<Index>(v.size()) != dim)
      throw UsageError("initial state has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
    for (Index i = 0; i < dim; ++i) {
      const auto& x = v[static_cast<std::size_t>(i)];
      if (x.is_number()) psi[i] = Complex(x.get<double>(), 0.0);
      else if (x.is_array() && x.size() == 2) psi[i] = Complex(x[0].get<double>(), x[1].get<double>());
      else throw UsageError("initial state entries must be numbers or [re, im] pairs");
    }
    return psi;
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("unknown initial state '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "arc") {
    std::optional<std::size_t> idx;
    if (g != nullptr) idx = g->parse_arc_label(arg);
    if (!idx) idx = to_count(arg, "init");
    if (static_cast<Index>(*idx) >= dim) throw UsageError("initial arc '" + arg + "' out of range");
    psi[static_cast<Index>(*idx)] = 1.0;
    return psi;
  }
  if (kind == "vertex-uniform") {
    if (g == nullptr) throw UsageError("vertex-uniform needs a graph source");
    const auto v = g->find_vertex(arg);
    if (!v) throw UsageError("unknown vertex '" + arg + "'");
    const auto& arcs = g->out_arcs(*v);
    const double amp = 1.0 / std::sqrt(static_cast<double>(arcs.size()));
    for (auto a : arcs) psi[static_cast<Index>(a)] = amp;
    return psi;
  }
  if (kind == "random") {
    SeededRng rng(to_count(arg, "init"));
    return rng.unit_vector(dim);
  }
  throw UsageError("unknown initial state '" + spec + "'");
}

namespace {

struct Input {
  std::optional<Graph> graph;
  std::optional<Weight> weight;
  std::optional<OneForm> theta;
  ValidationReport structures;
  std::optional<WalkInstance> inst;
};

OneForm parse_theta(const std::string& text, const Graph& g) {
  std::vector<double> per_edge;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) per_edge.push_back(to_double(item, "theta"));
  if (per_edge.size() == 1) return OneForm::constant(g, per_edge[0]);
  if (per_edge.size() != g.num_edges())
    throw UsageError("--theta needs one value or " + std::to_string(g.num_edges()) + " values");
  return OneForm::from_edges(g, per_edge);
}

WalkInstance random_source(const std::string& spec) {
  std::vector<std::size_t> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(to_count(item, "random"));
  if (parts.size() == 1) return seeded_random_instance(parts[0]);
  if (parts.size() != 3) throw UsageError("--random expects H:K:SEED or SEED");
  return random_instance(static_cast<Index>(parts[0]), static_cast<Index>(parts[1]), parts[2]);
}

// Graph inputs are validated first so a bad weight or 1-form shows up as a
// report rather than an exception.
Input load_input(const RunConfig& cfg) {
  Input in;
  if (cfg.random_spec) {
    in.inst = random_source(*cfg.random_spec);
    return in;
  }
  std::optional<OneForm> file_theta;
  if (cfg.graph_path) {
    auto doc = graph_from_json(read_json(*cfg.graph_path));
    in.graph = std::move(doc.graph);
    if (cfg.weight_mode == "explicit") {
      if (!doc.weight) throw UsageError("--weight explicit but the graph file has no weights");
      in.weight = std::move(doc.weight);
    }
    file_theta = std::move(doc.one_form);
  } else {
    in.graph = fixture_graph(*cfg.fixture);
  }
  if (!in.weight) in.weight = grover_weight(*in.graph);
  if (cfg.theta) in.theta = parse_theta(*cfg.theta, *in.graph);
  else if (file_theta) in.theta = std::move(file_theta);
  else in.theta = OneForm::zero(*in.graph);

  in.structures = validate_structures(*in.graph, &*in.weight, &*in.theta);
  if (in.structures.passed()) in.inst = twisted_szegedy(*in.graph, *in.weight, *in.theta);
  return in;
}

const WalkInstance& require_instance(const Input& in) {
  if (!in.inst) {
    std::ostringstream msg;
    msg << "input fails validation:";
    for (const auto& v : in.structures.violations()) msg << ' ' << v.rule << '@' << v.location;
    throw DomainError(msg.str());
  }
  return *in.inst;
}

Partition parse_blocks(const std::string& text, Index dim) {
  std::vector<Block> blocks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--blocks entries look like label=i,j");
    Block b{item.substr(0, eq), {}};
    std::stringstream idx(item.substr(eq + 1));
    std::string i;
    while (std::getline(idx, i, ',')) b.indices.push_back(static_cast<Index>(to_count(i, "blocks")));
    blocks.push_back(std::move(b));
  }
  try {
    return Partition(dim, std::move(blocks));
  } catch (const Error& e) {
    throw UsageError(std::string("--blocks: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << text;
  f.flush();
  if (!f) throw IoError("error writing '" + path + "'");
}

struct Result {
  std::string text;
  int code = exit_code::ok;
};

Result cmd_validate(const RunConfig& cfg, const Input& in) {
  json j;
  bool ok = in.structures.passed();
  if (in.graph) j["structures"] = report_to_json(in.structures);
  json checks = json::array();
  if (in.inst) {
    for (const auto& r : invariant_suite(*in.inst, cfg.tol_ker)) {
      ok = ok && r.report.passed();
      json c = report_to_json(r.report);
      c["check"] = r.check;
      checks.push_back(std::move(c));
    }
  }
  j["checks"] = std::move(checks);
  j["passed"] = ok;
  return {j.dump(2) + "\n", ok ? exit_code::ok : exit_code::validation};
}

Result cmd_spectrum(const RunConfig& cfg, const WalkInstance& inst, std::ostream& err) {
  const auto tdec = hermitian_eig(inst.T(), cfg.tol_ker);
  const auto atlas = boundary_subspaces(inst, tdec, cfg.tol_ker);
  const auto pred = mapped_spectrum(tdec, atlas);
  std::optional<ValidationReport> report;
  if (cfg.verify) report = verify_spectral_mapping(inst, pred);
  const int code = (report && !report->passed()) ? exit_code::validation : exit_code::ok;

  if (cfg.format == "json") {
    json entries = json::array();
    for (const auto& e : pred.entries)
      entries.push_back({{"angle", e.angle},
                         {"re", std::cos(e.angle)},
                         {"im", std::sin(e.angle)},
                         {"multiplicity", e.multiplicity},
                         {"provenance", to_string(e.provenance)}});
    json j{{"entries", std::move(entries)}, {"M_plus", atlas.M_plus}, {"M_minus", atlas.M_minus}};
    if (report) j["validation"] = report_to_json(*report);
    return {j.dump(2) + "\n", code};
  }
  std::ostringstream csv;
  csv << "angle,re,im,multiplicity,provenance\n";
  for (const auto& e : pred.entries)
    csv << format_double(e.angle) << ',' << format_double(std::cos(e.angle)) << ','
        << format_double(std::sin(e.angle)) << ',' << e.multiplicity << ',' << to_string(e.provenance) << '\n';
  if (report && !report->passed()) err << report_to_json(*report).dump(2) << '\n';
  return {csv.str(), code};
}

Result cmd_generator(const RunConfig& cfg, const WalkInstance& inst) {
  const auto gen = generator_of(inst);
  json j = generator_to_json(gen);
  int code = exit_code::ok;
  if (cfg.verify) {
    auto report = verify_generator(inst, gen);
    if (!report.passed()) code = exit_code::validation;
    j["validation"] = report_to_json(report);
  }
  return {j.dump(2) + "\n", code};
}

Result cmd_simulate(const RunConfig& cfg, const WalkInstance& inst, const Input& in) {
  const auto part = inst.partition();
  const Vector psi0 = parse_initial_state(cfg.init, inst.dim_H(), in.graph ? &*in.graph : nullptr);
  const auto trace = evolve_and_measure(inst.U(), part, psi0, cfg.steps);
  std::optional<Distribution> limit;
  if (cfg.limit) limit = limit_distribution(generator_of(inst), part, psi0);

  if (cfg.format == "json") {
    json j{{"labels", trace.labels}, {"distributions", trace.distributions}};
    if (cfg.cesaro && trace.cesaro) j["cesaro"] = *trace.cesaro;
    if (limit) j["limit"] = *limit;
    return {j.dump(2) + "\n", exit_code::ok};
  }
  std::ostringstream csv;
  csv << "n,label,nu\n";
  auto rows = [&](long long n, const Distribution& d) {
    for (std::size_t x = 0; x < d.size(); ++x) csv << n << ',' << trace.labels[x] << ',' << format_double(d[x]) << '\n';
  };
  for (std::size_t n = 0; n < trace.distributions.size(); ++n) rows(static_cast<long long>(n), trace.distributions[n]);
  if (cfg.cesaro && trace.cesaro) rows(-2, *trace.cesaro);
  if (limit) rows(-1, *limit);
  return {csv.str(), exit_code::ok};
}

Result cmd_localize(const RunConfig& cfg, const WalkInstance& inst, const Input& in) {
  const auto part = inst.partition();
  const Vector psi0 = parse_initial_state(cfg.init, inst.dim_H(), in.graph ? &*in.graph : nullptr);
  const auto atlas = boundary_subspaces(inst, cfg.tol_ker);
  const auto gen = generator_of(inst);
  const auto window = cfg.window.value_or(std::pair<std::size_t, std::size_t>{0, cfg.steps});
  const auto rep = localization_report(inst, atlas, gen, part, psi0, window);
  return {localization_to_json(rep).dump(2) + "\n", exit_code::ok};
}

Result cmd_infer_graph(const RunConfig& cfg, const Input* in) {
  Operator W;
  std::optional<Partition> part;
  if (cfg.operator_path) {
    W = operator_from_json(read_json(*cfg.operator_path));
    if (W.rows() != W.cols()) throw DimensionError("infer-graph: operator must be square");
    part = cfg.blocks ? parse_blocks(*cfg.blocks, W.rows()) : Partition::singletons(W.rows());
  } else {
    const auto& inst = require_instance(*in);
    W = inst.U();
    part = inst.partition();
  }
  const auto dg = infer_graph(W, *part);
  const auto report = block_unitarity_check(W, *part);
  json j{{"digraph", digraph_to_json(dg)}, {"block_unitarity", report_to_json(report)}};
  return {j.dump(2) + "\n", report.passed() ? exit_code::ok : exit_code::validation};
}

Result cmd_fuzz(const RunConfig& cfg) {
  std::ostringstream t;
  std::size_t passed = 0;
  std::size_t total = 0;
  t << std::left << std::setw(6) << "seed" << std::setw(7) << "dim_H" << std::setw(7) << "dim_K";
  bool header_done = false;
  std::ostringstream body;
  for (auto s = cfg.seeds.first; s <= cfg.seeds.second; ++s) {
    const auto inst = seeded_random_instance(s);
    const auto results = invariant_suite(inst, cfg.tol_ker);
    if (!header_done) {
      for (const auto& r : results) t << std::setw(18) << r.check;
      t << "result\n";
      header_done = true;
    }
    bool ok = true;
    body << std::left << std::setw(6) << s << std::setw(7) << inst.dim_H() << std::setw(7) << inst.dim_K();
    for (const auto& r : results) {
      body << std::setw(18) << (r.report.passed() ? "pass" : "FAIL");
      ok = ok && r.report.passed();
    }
    body << (ok ? "pass" : "FAIL") << '\n';
    ++total;
    if (ok) ++passed;
  }
  t << body.str() << passed << '/' << total << " instances passed\n";
  return {t.str(), passed == total ? exit_code::ok : exit_code::validation};
}

Result dispatch(const RunConfig& cfg, std::ostream& err) {
  if (cfg.command == Command::fuzz) return cmd_fuzz(cfg);
  if (cfg.command == Command::infer_graph && cfg.operator_path) return cmd_infer_graph(cfg, nullptr);

  const Input in = load_input(cfg);
  if (cfg.walk_out && in.inst) write_text(*cfg.walk_out, walk_to_json(*in.inst, !cfg.no_derived).dump(2) + "\n");
  switch (cfg.command) {
    case Command::validate: return cmd_validate(cfg, in);
    case Command::spectrum: return cmd_spectrum(cfg, require_instance(in), err);
    case Command::generator: return cmd_generator(cfg, require_instance(in));
    case Command::simulate: return cmd_simulate(cfg, require_instance(in), in);
    case Command::localize: return cmd_localize(cfg, require_instance(in), in);
    case Command::infer_graph: return cmd_infer_graph(cfg, &in);
    case Command::fuzz: break;
  }
  throw UsageError("unhandled command");
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.help) {
    out << cfg.help_text;
    return exit_code::ok;
  }
  try {
    const Result r = dispatch(cfg, err);
    if (cfg.output) write_text(*cfg.output, r.text);
    else out << r.text;
    return r.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_code::io;
  } catch (const json::exception& e) {
    err << "usage error: malformed input: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::validation;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_code::io;
  }
  return run_command(cfg, out, err);
}

}  // namespace qwalk
