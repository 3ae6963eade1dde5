#include "cli.hpp"

#include "dedekind/cuts/cut.hpp"
#include "dedekind/dsl/parser.hpp"
#include "dedekind/peano/axioms.hpp"
#include "dedekind/peano/models.hpp"
#include "dedekind/recfn/eval.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace dedekind::cli {

namespace {

using nlohmann::json;

constexpr const char* kLinearFixture = "zero: 0\n0 -> 1\n1 -> 2\n2 -> 3\nfrontier: 3\n";
constexpr const char* kCycleFixture = "zero: 0\n0 -> 1\n1 -> 2\n2 -> 0\nfrontier:\n";
constexpr const char* kNonstandardFixture =
    "zero: 0\n0 -> 1\n1 -> 2\na -> b\nb -> a\nfrontier: 2\n";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Thrown to leave a command with an already-classified failure.
struct Failure {
  int code;
  std::string error_class;
  std::string message;
  json detail = json::object();
};

class Session {
 public:
  Session(CliConfig config, std::ostream& out, std::ostream& err)
      : config_(std::move(config)), out_(out), err_(err) {}

  bool json_mode() const { return config_.format == OutputFormat::json; }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

  int fail(const Failure& f) {
    if (json_mode()) {
      json j = {{"kind", "error"}, {"class", f.error_class}, {"message", f.message}};
      for (const auto& [k, v] : f.detail.items()) j[k] = v;
      emit(j);
    } else {
      err_ << "error: " << f.message << '\n';
    }
    return f.code;
  }

  const CliConfig& config() const { return config_; }
  std::ostream& out() { return out_; }

 private:
  CliConfig config_;
  std::ostream& out_;
  std::ostream& err_;
};

dsl::Program load_program(const std::string& path) {
  std::string source;
  try {
    source = read_file(path);
  } catch (const std::exception& e) {
    throw Failure{kUsage, "usage", e.what()};
  }
  auto result = dsl::parse(source);
  if (auto* d = std::get_if<dsl::ParseDiagnostic>(&result)) {
    json detail = {{"file", path}, {"line", d->line}, {"column", d->column}, {"expected", d->expected}};
    if (!d->path.empty()) detail["path"] = d->path;
    throw Failure{kUsage, "parse", path + ":" + d->render(), detail};
  }
  return std::get<dsl::Program>(std::move(result));
}

json natural_json(const Natural& n) { return n.str(); }

const char* kind_name(recfn::TraceEntry::Kind k) {
  switch (k) {
    case recfn::TraceEntry::Kind::base: return "base";
    case recfn::TraceEntry::Kind::step: return "step";
    case recfn::TraceEntry::Kind::probe: return "probe";
  }
  return "?";
}

std::string args_text(const std::vector<Natural>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    s += args[i].str();
  }
  return s;
}

int cmd_eval(Session& s, const std::string& file, const std::string& name,
             const std::vector<std::string>& raw_args, bool trace) {
  const dsl::Program program = load_program(file);
  const dsl::Definition* def = program.find(name);
  if (def == nullptr) throw Failure{kUsage, "usage", "'" + name + "' is not defined in " + file};

  std::vector<Natural> args;
  for (const auto& a : raw_args) {
    try {
      args.push_back(parse_natural(a));
    } catch (const std::invalid_argument& e) {
      throw Failure{kUsage, "usage", e.what()};
    }
  }
  if (args.size() != def->arity) {
    throw Failure{kUsage, "arity",
                  name + " expects " + std::to_string(def->arity) + " argument" +
                      (def->arity == 1 ? "" : "s") + ", got " + std::to_string(args.size()),
                  {{"expected_arity", def->arity}, {"given", args.size()}}};
  }

  const recfn::Evaluator evaluator(program.definitions());
  recfn::EvalBudget budget(s.config().fuel);
  const recfn::TracedOutcome result = trace ? evaluator.eval_trace(recfn::ref(name), args, budget)
                                            : recfn::TracedOutcome{evaluator.eval(recfn::ref(name), args, budget), {}};

  int code = kOk;
  json j;
  if (const auto* v = std::get_if<recfn::Value>(&result.outcome)) {
    j = {{"kind", "value"}, {"value", natural_json(v->value)}};
  } else if (const auto* f = std::get_if<recfn::FuelExhausted>(&result.outcome)) {
    j = {{"kind", "fuel_exhausted"}, {"consumed", f->consumed}};
    code = kFuel;
  } else {
    const auto& m = std::get<recfn::ArityMismatch>(result.outcome);
    j = {{"kind", "arity_mismatch"}, {"details", m.details}};
    code = kUsage;
  }
  j["name"] = name;
  j["fuel"] = s.config().fuel;
  j["consumed"] = budget.consumed;

  if (s.json_mode()) {
    if (trace) {
      json log = json::array();
      for (const auto& e : result.log) {
        json args_json = json::array();
        for (const auto& a : e.args) args_json.push_back(natural_json(a));
        log.push_back({{"kind", kind_name(e.kind)}, {"label", e.label}, {"args", args_json}});
      }
      j["trace"] = std::move(log);
    }
    s.emit(j);
  } else {
    for (const auto& e : result.log) {
      s.out() << kind_name(e.kind) << ' ' << e.label << '(' << args_text(e.args) << ")\n";
    }
    s.out() << recfn::describe(result.outcome) << '\n';
  }
  return code;
}

int cmd_check(Session& s, const std::string& file) {
  const dsl::Program program = load_program(file);
  if (s.json_mode()) {
    json defs = json::array();
    for (const auto& d : program.defs) defs.push_back({{"name", d.name}, {"arity", d.arity}});
    s.emit({{"kind", "program"}, {"file", file}, {"definitions", defs}});
  } else {
    for (const auto& d : program.defs) s.out() << d.name << '/' << d.arity << '\n';
  }
  return kOk;
}

peano::Model resolve_model(const std::string& spec) {
  static const std::map<std::string, const char*> fixtures = {
      {"linear", kLinearFixture}, {"cycle", kCycleFixture}, {"nonstandard", kNonstandardFixture}};
  if (spec == "unary") return peano::unary_model();
  if (spec == "binary") return peano::binary_model();
  if (spec == "decimal") return peano::decimal_model();
  try {
    if (const auto it = fixtures.find(spec); it != fixtures.end()) {
      return peano::Model(peano::parse_structure(it->second), spec);
    }
    return peano::Model(peano::parse_structure(read_file(spec)), spec);
  } catch (const peano::ModelError& e) {
    const std::string where = e.line() ? ":" + std::to_string(e.line()) : "";
    throw Failure{kUsage, "parse", spec + where + ": " + e.what()};
  } catch (const std::runtime_error& e) {
    throw Failure{kUsage, "usage", e.what()};
  }
}

void print_report(Session& s, const std::string& model, const peano::AxiomReport& r) {
  auto mark = [](bool ok) { return ok ? "✓" : "✗"; };
  s.out() << "model " << model << ", " << r.fragment_depth << " elements examined\n";
  s.out() << "D1 zero is not a successor: " << mark(r.d1_holds);
  if (r.d1_counterexample) s.out() << "  (" << *r.d1_counterexample << " -> zero)";
  s.out() << "\nD2 successor is injective:  " << mark(r.d2_holds);
  if (r.d2_counterexample) {
    s.out() << "  (" << r.d2_counterexample->first << " and " << r.d2_counterexample->second
            << " share a successor)";
  }
  s.out() << "\nD3 induction:               " << mark(r.d3_holds);
  if (r.d3_counterexample) s.out() << "  (" << *r.d3_counterexample << " not reached from zero)";
  s.out() << '\n';
}

json report_json(const std::string& model, const peano::AxiomReport& r) {
  json j = peano::to_json(r);
  j["kind"] = "axioms";
  j["model"] = model;
  return j;
}

int cmd_axioms(Session& s, const std::string& spec, std::size_t depth, bool strict) {
  const peano::Model model = resolve_model(spec);
  peano::AxiomReport report;
  try {
    report = peano::check_axioms(model.examined_fragment(depth), strict
                                                                     ? peano::InductionCheck::all_subsets
                                                                     : peano::InductionCheck::reachability);
  } catch (const std::domain_error& e) {
    throw Failure{kUsage, "usage", e.what()};
  }
  if (s.json_mode()) {
    s.emit(report_json(spec, report));
  } else {
    print_report(s, spec, report);
  }
  return report.all_hold() ? kOk : kAxiomFailure;
}

std::string quoted(const std::string& id) { return json(id).dump(); }

int cmd_iso(Session& s, const std::string& spec_a, const std::string& spec_b, std::size_t depth) {
  const peano::Model a = resolve_model(spec_a);
  const peano::Model b = resolve_model(spec_b);
  peano::ModelIso iso;
  try {
    iso = peano::build_iso(a, b, depth);
  } catch (const peano::AxiomRefusal& refusal) {
    if (s.json_mode()) {
      s.emit({{"kind", "iso_refused"},
              {"message", refusal.what()},
              {"report", report_json(refusal.model(), refusal.report())}});
    } else {
      s.out() << refusal.what() << '\n';
      print_report(s, refusal.model(), refusal.report());
    }
    return kAxiomFailure;
  } catch (const std::domain_error& e) {
    throw Failure{kUsage, "usage", e.what()};
  }
  if (s.json_mode()) {
    json pairs = json::array();
    for (const auto& [x, y] : iso.pairs) pairs.push_back({x, y});
    s.emit({{"kind", "iso"}, {"model_a", spec_a}, {"model_b", spec_b}, {"depth", depth}, {"pairs", pairs}});
  } else {
    for (const auto& [x, y] : iso.pairs) s.out() << '(' << quoted(x) << ',' << quoted(y) << ")\n";
  }
  return kOk;
}

int cmd_cut(Session& s, const std::string& form, const std::string& operand) {
  const numbers::RatClass eps = [&] {
    try {
      return numbers::parse_rational(s.config().eps);
    } catch (const std::exception& e) {
      throw Failure{kUsage, "usage", std::string("bad eps: ") + e.what()};
    }
  }();
  if (eps.sign() <= 0) throw Failure{kUsage, "usage", "eps must be positive"};

  std::optional<cuts::Cut> cut;
  try {
    if (form == "sqrt") {
      cut = cuts::cut_sqrt(parse_natural(operand));
    } else if (form == "rat") {
      cut = cuts::cut_from_rational(numbers::parse_rational(operand));
    } else {
      throw Failure{kUsage, "usage", "unknown cut form '" + form + "' (expected sqrt or rat)"};
    }
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, "usage", e.what()};
  } catch (const std::domain_error& e) {
    throw Failure{kUsage, "usage", e.what()};
  }

  try {
    const std::string rendered = cuts::render_decimal(*cut, eps);
    if (s.json_mode()) {
      const auto sep = rendered.find(" ± ");
      s.emit({{"kind", "cut"},
              {"form", form},
              {"operand", operand},
              {"decimal", rendered.substr(0, sep)},
              {"eps", numbers::to_string(eps)},
              {"approx", numbers::to_string(cuts::approx(*cut, eps))},
              {"rendered", rendered}});
    } else {
      s.out() << rendered << '\n';
    }
  } catch (const cuts::CutInvariantError& e) {
    throw Failure{kInvariantViolation, "invariant", e.what()};
  }
  return kOk;
}

}  // namespace

CliConfig load_config(const std::string& path, CliConfig base) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw std::runtime_error("config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config '" + path + "' must be a JSON object");
  try {
    if (j.contains("fuel")) base.fuel = j.at("fuel").get<std::uint64_t>();
    if (j.contains("eps")) base.eps = j.at("eps").get<std::string>();
    if (j.contains("format")) {
      const auto f = j.at("format").get<std::string>();
      if (f != "text" && f != "json") throw std::runtime_error("format must be text or json");
      base.format = f == "json" ? OutputFormat::json : OutputFormat::text;
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("config '" + path + "': " + e.what());
  }
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic foundations toolkit: recursive functions, models of N, cuts", "dedekind"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> fuel_flag;
  std::optional<std::string> eps_flag;
  std::optional<std::string> format_flag;
  app.add_option("--config", config_path, "JSON config with fuel, eps, format")->check(CLI::ExistingFile);
  app.add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "Evaluate a definition from a .rf program");
  std::string eval_file, eval_name;
  std::vector<std::string> eval_args;
  bool trace = false;
  eval->add_option("file", eval_file)->required();
  eval->add_option("name", eval_name)->required();
  eval->add_option("args", eval_args);
  eval->add_option("--fuel", fuel_flag, "Step budget")->check(CLI::PositiveNumber);
  eval->add_flag("--trace", trace, "Log recursion unrollings and search probes");

  auto* check = app.add_subcommand("check", "Parse and arity-check a .rf program");
  std::string check_file;
  check->add_option("file", check_file)->required();

  auto* axioms = app.add_subcommand("axioms", "Check D1-D3 on a model");
  std::string axioms_model;
  std::size_t axioms_depth = 16;
  bool strict = false;
  axioms->add_option("--model", axioms_model,
                     "Model file, or builtin: linear, cycle, nonstandard, unary, binary, decimal")
      ->required();
  axioms->add_option("--depth", axioms_depth, "Fragment size for rule models");
  axioms->add_flag("--strict", strict, "Decide induction by enumerating subsets (<= 12 elements)");

  auto* iso = app.add_subcommand("iso", "Build the isomorphism prefix between two models");
  std::string model_a, model_b;
  std::size_t iso_depth = 8;
  iso->add_option("--model-a", model_a)->required();
  iso->add_option("--model-b", model_b)->required();
  iso->add_option("--depth", iso_depth);

  auto* cut = app.add_subcommand("cut", "Approximate a Dedekind cut");
  std::string cut_form, cut_operand;
  cut->add_option("form", cut_form, "sqrt or rat")->required()->check(CLI::IsMember({"sqrt", "rat"}));
  cut->add_option("operand", cut_operand, "n for sqrt, p/q for rat")->required();
  cut->add_option("--eps", eps_flag, "Precision, e.g. 1e-6 or 1/1000");

  std::vector<const char*> argv{"dedekind"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CliConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path, config);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (fuel_flag) config.fuel = *fuel_flag;
  if (eps_flag) config.eps = *eps_flag;
  if (format_flag) config.format = *format_flag == "json" ? OutputFormat::json : OutputFormat::text;

  Session session(config, out, err);
  if (config.fuel < 1) return session.fail({kUsage, "usage", "fuel must be at least 1"});
  try {
    if (*eval) return cmd_eval(session, eval_file, eval_name, eval_args, trace);
    if (*check) return cmd_check(session, check_file);
    if (*axioms) return cmd_axioms(session, axioms_model, axioms_depth, strict);
    if (*iso) return cmd_iso(session, model_a, model_b, iso_depth);
    return cmd_cut(session, cut_form, cut_operand);
  } catch (const Failure& f) {
    return session.fail(f);
  }
}

}  // namespace dedekind::cli
