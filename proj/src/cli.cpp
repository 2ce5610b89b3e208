#include "rikit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rikit/parser.hpp"
#include "rikit/suites.hpp"

namespace rikit {

namespace {

using nlohmann::json;

constexpr Fuel kDefaultFuel = 1000000;

// Positional program arguments name either a file or inline source.
std::string slurp(const std::string& file_or_text) {
  std::ifstream in(file_or_text);
  if (!in.good()) return file_or_text;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ValueRef value_of_text(const std::string& text, Fuel fuel) {
  Outcome out = eval(parse(slurp(text)), fuel);
  if (!out.is_done()) {
    throw std::runtime_error("value argument did not evaluate: " + show_outcome(out));
  }
  return out.value;
}

// A code argument is either its (quote ...) serialization or the program
// text itself.
Code code_of_text(const std::string& text) {
  Term::Ptr t = parse(slurp(text));
  if (t->kind == TermKind::Quote) return Code{t->kids[0]};
  return encode(t);
}

json value_json(const ValueRef& v) {
  if (const BigInt* i = as_int(v)) return json{{"kind", "int"}, {"value", i->str()}};
  if (const bool* b = as_bool(v)) return json{{"kind", "bool"}, {"value", *b}};
  if (const Symbol* s = as_sym(v)) return json{{"kind", "sym"}, {"value", s->str()}};
  if (as_ground(v) != nullptr) return json{{"kind", "unit"}};
  if (const auto* p = as_pair(v)) {
    return json{{"kind", "pair"}, {"first", value_json(p->first)}, {"second", value_json(p->second)}};
  }
  if (const auto* t = as_tagged(v)) {
    return json{{"kind", t->is_left ? "inl" : "inr"}, {"inner", value_json(t->inner)}};
  }
  if (const Code* c = as_code(v)) return json{{"kind", "code"}, {"term", print_term(c->term)}};
  return json{{"kind", "closure"}};
}

json outcome_json(const Outcome& o) {
  switch (o.tag) {
    case Outcome::Tag::Done:
      return json{{"outcome", "done"}, {"value", value_json(o.value)}};
    case Outcome::Tag::OutOfFuel:
      return json{{"outcome", "out-of-fuel"}};
    case Outcome::Tag::Error:
      return json{{"outcome", "error"}, {"kind", err_kind_name(o.err)}, {"detail", o.detail}};
  }
  return {};
}

void emit_trace(std::ostream& out, const EvalTrace& trace) {
  out << "trace (" << trace.charged << " charged steps";
  if (trace.truncated) out << ", first " << trace.steps.size() << " shown";
  out << "):\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    out << "  " << i << ": " << trace.steps[i] << "\n";
  }
}

int emit_outcome(const Outcome& out, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << outcome_json(out).dump(2) << "\n";
  } else {
    os << show_outcome(out) << "\n";
  }
  return out.is_done() ? 0 : 1;
}

json trace_report_json(const MealyMachine& m, const TraceReport& report) {
  json steps = json::array();
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const TraceStep& s = report.steps[i];
    json step{{"index", i},
              {"state", s.state.str()},
              {"input", s.input.str()},
              {"trueOutput", s.true_output.str()},
              {"outputsMatch", s.outputs_match},
              {"nextBeliefMatches", s.next_belief_matches}};
    if (s.predicted_output) {
      step["predictedOutput"] = value_json(*s.predicted_output);
    } else {
      step["predictedOutput"] = nullptr;
      step["note"] = s.note;
    }
    steps.push_back(std::move(step));
  }
  json machine{{"initial", m.initial().str()}};
  json states = json::array(), inputs = json::array(), outputs = json::array();
  for (Symbol s : m.states()) states.push_back(s.str());
  for (Symbol s : m.inputs()) inputs.push_back(s.str());
  for (Symbol s : m.outputs()) outputs.push_back(s.str());
  machine["states"] = states;
  machine["inputs"] = inputs;
  machine["outputs"] = outputs;
  json out{{"machine", machine}, {"steps", steps}};
  out["verdict"] = report.all_consistent() ? "all-consistent" : "divergent";
  if (report.first_divergence) {
    out["firstDivergenceIndex"] = *report.first_divergence;
  } else {
    out["firstDivergenceIndex"] = nullptr;
  }
  return out;
}

json suite_report_json(const SuiteReport& r) {
  json laws = json::array();
  for (const LawCount& l : r.laws) {
    laws.push_back(json{{"law", l.law}, {"pass", l.pass}, {"fail", l.fail}, {"skip", l.skip}});
  }
  json failures = json::array();
  for (const CaseFailure& f : r.failures) {
    failures.push_back(json{{"case", f.index}, {"law", f.law}, {"message", f.message}});
  }
  return json{{"suite", r.suite}, {"cases", r.cases}, {"seed", r.seed},
              {"laws", laws},     {"failures", failures}, {"ok", r.ok()}};
}

std::vector<Symbol> parse_stream(const std::string& text) {
  std::vector<Symbol> out;
  std::string token;
  for (char c : text + " ") {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!token.empty()) out.push_back(Symbol::intern(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return out;
}

struct Options {
  Fuel fuel = kDefaultFuel;
  std::string format = "text";
  // eval / run
  std::string program;
  std::string input;
  bool trace = false;
  // proptest
  std::string suite;
  int cases = 100;
  std::uint64_t seed = 1;
  bool serial = false;
  // godel-demo
  Fuel budget = 100000;
  // proptest
  Fuel suite_fuel = 100000;
  // belief-run
  std::string machine_file;
  std::string stream_text;
  Fuel fuel_per_step = 100000;
  // hoare-check
  std::string frame_file;
  std::string pre, event, post;
};

int cmd_eval(const Options& opt, std::ostream& out) {
  Term::Ptr t = parse(slurp(opt.program));
  if (!term_closed(t)) {
    out << "error: program has free variables\n";
    return 1;
  }
  if (opt.trace) {
    EvalTrace tr;
    Outcome o = eval_traced(t, opt.fuel, tr);
    int rc = emit_outcome(o, opt.format, out);
    if (opt.format != "json") emit_trace(out, tr);
    return rc;
  }
  return emit_outcome(eval(t, opt.fuel), opt.format, out);
}

int cmd_run(const Options& opt, std::ostream& out) {
  Code c = code_of_text(opt.program);
  ValueRef a = value_of_text(opt.input, opt.fuel);
  if (opt.trace) {
    EvalTrace tr;
    Outcome o = opt.fuel <= 0 ? Outcome::out_of_fuel()
                              : eval_traced(tapp(c.term, lift(a)), opt.fuel - 1, tr);
    int rc = emit_outcome(o, opt.format, out);
    if (opt.format != "json") emit_trace(out, tr);
    return rc;
  }
  return emit_outcome(interpret(c, a, opt.fuel), opt.format, out);
}

int cmd_specialize(const Options& opt, std::ostream& out) {
  Code g = code_of_text(opt.program);
  ValueRef x = value_of_text(opt.input, opt.fuel);
  Code s = specialize(g, x);
  out << "(quote " << print_term(s.term) << ")\n";
  return 0;
}

int cmd_fixpoint(const Options& opt, std::ostream& out) {
  Code g = code_of_text(opt.program);
  Code gamma = kleene_fix(g);
  out << "(quote " << print_term(gamma.term) << ")\n";
  return 0;
}

int cmd_godel(const Options& opt, std::ostream& out) {
  GoedelPair pair = goedel_sentence();
  Code control = encode(parse("(lam a true)"));
  out << "gamma:     (quote " << print_term(pair.gamma.term) << ")\n";
  out << "neg-gamma: (quote " << print_term(pair.neg_gamma.term) << ")\n\n";
  out << "budget      provable(gamma)  provable(neg-gamma)\n";
  for (Fuel k = 100; k <= opt.budget; k *= 10) {
    bool pg = provable(ProvabilityQuery{pair.gamma, vunit(), k});
    bool png = provable(ProvabilityQuery{pair.neg_gamma, vunit(), k});
    std::string ks = std::to_string(k);
    out << ks << std::string(ks.size() < 12 ? 12 - ks.size() : 1, ' ')
        << (pg ? "yes" : "no ") << "              " << (png ? "yes" : "no") << "\n";
  }
  bool pc = provable(ProvabilityQuery{control, vunit(), 10});
  out << "\ncontrol (lam a true): provable at budget 10: " << (pc ? "yes" : "no") << "\n";
  out << "caveat: this demonstrates non-provability only up to the stated budgets;\n"
         "        it is a bounded search, not a proof that no larger budget succeeds.\n";
  return 0;
}

int cmd_belief_run(const Options& opt, std::ostream& out) {
  std::ifstream in(opt.machine_file);
  if (!in.good()) {
    throw std::runtime_error("cannot open machine file '" + opt.machine_file + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  MealyMachine m = MealyMachine::parse(buf.str());
  std::vector<Symbol> stream = parse_stream(opt.stream_text);
  TraceReport report = simulate_and_check(m, stream, opt.fuel_per_step);

  if (opt.format == "json") {
    out << trace_report_json(m, report).dump(2) << "\n";
  } else {
    out << "step  state  input  true  predicted  next-belief\n";
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
      const TraceStep& s = report.steps[i];
      out << i << "  " << s.state.str() << "  " << s.input.str() << "  " << s.true_output.str()
          << "  "
          << (s.predicted_output ? show_value(*s.predicted_output) : "<" + s.note + ">") << "  "
          << (s.next_belief_matches ? "match" : "MISMATCH") << "\n";
    }
    if (report.all_consistent()) {
      out << "verdict: all-consistent (" << report.steps.size() << " steps)\n";
    } else {
      out << "verdict: divergent at step " << *report.first_divergence << "\n";
    }
  }
  return report.all_consistent() ? 0 : 1;
}

int cmd_hoare(const Options& opt, std::ostream& out) {
  std::ifstream in(opt.frame_file);
  if (!in.good()) throw std::runtime_error("cannot open frame file '" + opt.frame_file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  DynamicFrame frame = DynamicFrame::parse(buf.str());
  Pred pre = frame.parse_pred(opt.pre);
  Pred post = frame.parse_pred(opt.post);
  Pred sp = frame.sp(pre, opt.event);
  Pred wp = frame.wp(opt.event, post);
  bool via_sp = pred_subset(sp, post);
  bool via_wp = pred_subset(pre, wp);
  out << "sp(pre, " << opt.event << ") = " << frame.show_pred(sp) << "\n";
  out << "wp(" << opt.event << ", post) = " << frame.show_pred(wp) << "\n";
  out << "sp route: " << (via_sp ? "holds" : "fails") << "\n";
  out << "wp route: " << (via_wp ? "holds" : "fails") << "\n";
  if (via_sp != via_wp) {
    out << "INTERNAL ERROR: routes disagree\n";
    return 1;
  }
  out << "triple " << (via_sp ? "holds" : "fails") << "\n";
  return via_sp ? 0 : 1;
}

int cmd_proptest(const Options& opt, std::ostream& out) {
  SuiteKind kind;
  if (!suite_from_name(opt.suite, kind)) {
    throw CLI::ValidationError("unknown suite '" + opt.suite + "'");
  }
  SuiteConfig config;
  config.cases = opt.cases;
  config.seed = opt.seed;
  config.mode = opt.serial ? RunMode::Serial : RunMode::Parallel;
  config.fuel = opt.suite_fuel;
  SuiteReport report = run_suite(kind, config);
  if (opt.format == "json") {
    out << suite_report_json(report).dump(2) << "\n";
  } else {
    out << report.render_text();
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"reflective interpreter kit: a tiny language whose programs are"
               " first-class codes, with the specializer, fixpoint, provability,"
               " belief and dynamic-logic constructions on top"};
  app.require_subcommand(1);

  Options opt;
  const char* env_fuel = std::getenv("RIKIT_FUEL");
  if (env_fuel != nullptr) {
    try {
      opt.fuel = std::stoll(env_fuel);
    } catch (...) {
      // ignore malformed override
    }
  }

  auto add_fuel = [&](CLI::App* cmd) {
    cmd->add_option("--fuel", opt.fuel, "step budget")->capture_default_str();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a program (file or inline text)");
  eval_cmd->add_option("program", opt.program, "program file or inline text")->required();
  eval_cmd->add_flag("--trace", opt.trace, "print the charged-step trace (the proof object)");
  add_fuel(eval_cmd);
  add_format(eval_cmd);

  CLI::App* run_cmd = app.add_subcommand("run", "interpret a code on an input value");
  run_cmd->add_option("code", opt.program, "code file or inline text")->required();
  run_cmd->add_option("input", opt.input, "input value")->required();
  run_cmd->add_flag("--trace", opt.trace, "print the charged-step trace (the proof object)");
  add_fuel(run_cmd);
  add_format(run_cmd);

  CLI::App* spec_cmd = app.add_subcommand("specialize", "fix the first argument of a coded family");
  spec_cmd->add_option("code", opt.program, "code file or inline text")->required();
  spec_cmd->add_option("value", opt.input, "value to specialize on")->required();
  add_fuel(spec_cmd);

  CLI::App* fix_cmd = app.add_subcommand("fixpoint", "fixpoint of a coded binary transformation");
  fix_cmd->add_option("code", opt.program, "code file or inline text")->required();

  CLI::App* godel_cmd = app.add_subcommand("godel-demo", "diagonal sentence and budget sweep");
  godel_cmd->add_option("--budget", opt.budget, "largest search budget")->capture_default_str();

  CLI::App* belief_cmd = app.add_subcommand("belief-run", "simulate a machine against its beliefs");
  belief_cmd->add_option("machine", opt.machine_file, "machine table file")->required();
  belief_cmd->add_option("--stream", opt.stream_text, "input symbols, space or comma separated")
      ->required();
  belief_cmd->add_option("--fuel-per-step", opt.fuel_per_step, "budget per step")
      ->capture_default_str();
  belief_cmd->add_flag_callback("--json", [&] { opt.format = "json"; },
                                "shorthand for --format json");
  add_format(belief_cmd);

  CLI::App* hoare_cmd = app.add_subcommand("hoare-check", "check a triple both ways");
  hoare_cmd->add_option("frame", opt.frame_file, "frame file")->required();
  hoare_cmd->add_option("--pre", opt.pre, "precondition worlds, comma separated ('*' for all)")
      ->required();
  hoare_cmd->add_option("--event", opt.event, "event name")->required();
  hoare_cmd->add_option("--post", opt.post, "postcondition worlds, comma separated")->required();

  CLI::App* prop_cmd = app.add_subcommand("proptest", "run a property suite");
  prop_cmd->add_option("suite", opt.suite, "univ|smn|fix|fund|ana|galois")->required();
  prop_cmd->add_option("--cases", opt.cases, "number of cases")->capture_default_str();
  prop_cmd->add_option("--seed", opt.seed, "generator seed")->capture_default_str();
  prop_cmd->add_flag("--serial", opt.serial, "use the serial reference runner");
  prop_cmd->add_option("--fuel", opt.suite_fuel, "step budget per case")->capture_default_str();
  add_format(prop_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(eval_cmd)) return cmd_eval(opt, out);
    if (app.got_subcommand(run_cmd)) return cmd_run(opt, out);
    if (app.got_subcommand(spec_cmd)) return cmd_specialize(opt, out);
    if (app.got_subcommand(fix_cmd)) return cmd_fixpoint(opt, out);
    if (app.got_subcommand(godel_cmd)) return cmd_godel(opt, out);
    if (app.got_subcommand(belief_cmd)) return cmd_belief_run(opt, out);
    if (app.got_subcommand(hoare_cmd)) return cmd_hoare(opt, out);
    if (app.got_subcommand(prop_cmd)) return cmd_proptest(opt, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rikit
