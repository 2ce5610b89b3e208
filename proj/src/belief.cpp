#include "rikit/belief.hpp"

#include <sstream>
#include <utility>

namespace rikit {

MealyMachine::MealyMachine(std::vector<Symbol> states, std::vector<Symbol> inputs,
                           std::vector<Symbol> outputs, std::vector<std::vector<int>> delta,
                           std::vector<std::vector<Symbol>> lambda, Symbol initial)
    : states_(std::move(states)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      delta_(std::move(delta)),
      lambda_(std::move(lambda)),
      initial_(initial) {
  if (states_.empty() || inputs_.empty()) throw MachineError("machine needs states and inputs");
  if (delta_.size() != states_.size() || lambda_.size() != states_.size()) {
    throw MachineError("transition tables must cover every state");
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (delta_[i].size() != inputs_.size() || lambda_[i].size() != inputs_.size()) {
      throw MachineError("transition tables must cover every input");
    }
    for (int next : delta_[i]) {
      if (next < 0 || next >= static_cast<int>(states_.size())) {
        throw MachineError("next-state table escapes the state set");
      }
    }
  }
  if (state_index(initial_) < 0) throw MachineError("initial state is not a state");
}

int MealyMachine::state_index(Symbol s) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == s) return static_cast<int>(i);
  }
  return -1;
}

int MealyMachine::input_index(Symbol s) const {
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (inputs_[i] == s) return static_cast<int>(i);
  }
  return -1;
}

Symbol MealyMachine::next_state(Symbol state, Symbol input) const {
  int si = state_index(state), ii = input_index(input);
  if (si < 0 || ii < 0) throw MachineError("lookup outside the machine alphabet");
  return states_[delta_[si][ii]];
}

Symbol MealyMachine::output(Symbol state, Symbol input) const {
  int si = state_index(state), ii = input_index(input);
  if (si < 0 || ii < 0) throw MachineError("lookup outside the machine alphabet");
  return lambda_[si][ii];
}

MealyMachine MealyMachine::parse(const std::string& text) {
  struct Rule {
    Symbol state, input, next, out;
  };
  std::vector<Rule> rules;
  std::optional<Symbol> initial;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> words;
    std::string w;
    while (ls >> w) words.push_back(w);
    if (words.empty()) continue;
    if (words[0] == "initial") {
      if (words.size() != 2) {
        throw MachineError("line " + std::to_string(lineno) + ": initial needs one state");
      }
      initial = Symbol::intern(words[1]);
      continue;
    }
    if (words.size() != 5 || words[2] != "->") {
      throw MachineError("line " + std::to_string(lineno) +
                         ": expected 'state input -> state output'");
    }
    rules.push_back(Rule{Symbol::intern(words[0]), Symbol::intern(words[1]),
                         Symbol::intern(words[3]), Symbol::intern(words[4])});
  }
  if (rules.empty()) throw MachineError("no transition rules");

  std::vector<Symbol> states, inputs, outputs;
  auto index_of = [](std::vector<Symbol>& pool, Symbol s) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i] == s) return static_cast<int>(i);
    }
    pool.push_back(s);
    return static_cast<int>(pool.size() - 1);
  };
  for (const Rule& r : rules) {
    index_of(states, r.state);
    index_of(states, r.next);
    index_of(inputs, r.input);
    index_of(outputs, r.out);
  }
  std::vector<std::vector<int>> delta(states.size(), std::vector<int>(inputs.size(), -1));
  std::vector<std::vector<Symbol>> lambda(states.size(), std::vector<Symbol>(inputs.size()));
  for (const Rule& r : rules) {
    int si = index_of(states, r.state);
    int ii = index_of(inputs, r.input);
    if (delta[si][ii] != -1) {
      throw MachineError("duplicate rule for (" + r.state.str() + ", " + r.input.str() + ")");
    }
    delta[si][ii] = index_of(states, r.next);
    lambda[si][ii] = r.out;
  }
  for (std::size_t si = 0; si < states.size(); ++si) {
    for (std::size_t ii = 0; ii < inputs.size(); ++ii) {
      if (delta[si][ii] == -1) {
        throw MachineError("table not total: missing (" + states[si].str() + ", " +
                           inputs[ii].str() + ")");
      }
    }
  }
  return MealyMachine(std::move(states), std::move(inputs), std::move(outputs), std::move(delta),
                      std::move(lambda), initial.value_or(rules[0].state));
}

Code compile_machine(const MealyMachine& m) {
  // (lam p <dispatch>) with p = (pair state input); innermost alternatives
  // fall through to the last entry, the table being total by construction.
  Term::Ptr state_of = tproj1(tvar(0));
  Term::Ptr input_of = tproj2(tvar(0));

  const auto& states = m.states();
  const auto& inputs = m.inputs();

  auto row_term = [&](Symbol state) {
    Term::Ptr acc = nullptr;
    for (std::size_t i = inputs.size(); i-- > 0;) {
      Term::Ptr hit = tpair(tsym(m.next_state(state, inputs[i])), tsym(m.output(state, inputs[i])));
      if (!acc) {
        acc = hit;
      } else {
        Term::Ptr test = tprim(PrimOp::EqSym, {input_of, tsym(inputs[i])});
        acc = tif(test, hit, acc);
      }
    }
    return acc;
  };

  Term::Ptr dispatch = nullptr;
  for (std::size_t s = states.size(); s-- > 0;) {
    Term::Ptr row = row_term(states[s]);
    if (!dispatch) {
      dispatch = row;
    } else {
      Term::Ptr test = tprim(PrimOp::EqSym, {state_of, tsym(states[s])});
      dispatch = tif(test, row, dispatch);
    }
  }
  return encode(tlam(dispatch));
}

Code self_confirming_at(const Code& t, const ValueRef& x) {
  // E = (lam r (lam x (lam a (((t (spec (spec r r) x)) x) a))))
  //      r = #2, x = #1, a = #0
  Term::Ptr self = tprim(PrimOp::Spec, {tvar(2), tvar(2)});
  Term::Ptr expl = tprim(PrimOp::Spec, {self, tvar(1)});
  Term::Ptr body = tapp(tapp(tapp(t.term, expl), tvar(1)), tvar(0));
  Code e = encode(tlam(tlam(tlam(body))));
  return specialize(diagonal(e), x);
}

BeliefFamily::BeliefFamily(const Code& q) : q_(q) {
  // U = (lam r (lam x (lam a
  //       ((lam s (pair (spec (spec r r) (fst s)) (snd s)))
  //        (run 'q (pair x a))))))
  //      r = #3 inside the inner lambda, x = #2, a = #1, s = #0
  Term::Ptr next_code = tprim(PrimOp::Spec, {tprim(PrimOp::Spec, {tvar(3), tvar(3)}), tproj1(tvar(0))});
  Term::Ptr unpack = tlam(tpair(next_code, tproj2(tvar(0))));
  Term::Ptr step = tprim(PrimOp::Run, {tquote(q.term), tpair(tvar(1), tvar(0))});
  Term::Ptr body = tapp(unpack, step);
  Code u = encode(tlam(tlam(tlam(body))));
  diag_ = diagonal(u);
}

Code BeliefFamily::at(const ValueRef& state) const { return specialize(diag_, state); }

BeliefFamily belief_of(const Code& q) { return BeliefFamily(q); }

TraceReport simulate_and_check(const MealyMachine& m, const std::vector<Symbol>& stream,
                               Fuel fuel_per_step) {
  return simulate_and_check(m, belief_of(compile_machine(m)), stream, fuel_per_step);
}

TraceReport simulate_and_check(const MealyMachine& m, const BeliefFamily& family,
                               const std::vector<Symbol>& stream, Fuel fuel_per_step,
                               const Code* belief_at_initial) {
  TraceReport report;
  Symbol state = m.initial();
  Code belief = belief_at_initial ? *belief_at_initial : family.at(vsym(state));

  for (std::size_t i = 0; i < stream.size(); ++i) {
    Symbol input = stream[i];
    if (!m.has_input(input)) throw MachineError("stream symbol outside the input alphabet");

    TraceStep step;
    step.state = state;
    step.input = input;
    step.true_output = m.output(state, input);
    Symbol next_state = m.next_state(state, input);

    auto result = interpret_stateful(belief, vsym(input), fuel_per_step);
    if (const auto* failure = std::get_if<Outcome>(&result)) {
      step.note = show_outcome(*failure);
      report.steps.push_back(std::move(step));
      if (!report.first_divergence) report.first_divergence = i;
      return report;
    }
    const auto& ok = std::get<StatefulStep>(result);
    step.predicted_output = ok.output;
    const Symbol* predicted = as_sym(ok.output);
    step.outputs_match = predicted != nullptr && *predicted == step.true_output;
    step.next_belief_matches = code_eq(ok.next_belief, family.at(vsym(next_state)));
    if ((!step.outputs_match || !step.next_belief_matches) && !report.first_divergence) {
      report.first_divergence = i;
    }
    report.steps.push_back(std::move(step));

    state = next_state;
    belief = ok.next_belief;
  }
  return report;
}

}  // namespace rikit
