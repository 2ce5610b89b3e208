#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rikit/fixpoint.hpp"

namespace rikit {

struct MachineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic finite process q: X x A -> X x B as explicit total tables.
class MealyMachine {
 public:
  MealyMachine(std::vector<Symbol> states, std::vector<Symbol> inputs,
               std::vector<Symbol> outputs, std::vector<std::vector<int>> delta,
               std::vector<std::vector<Symbol>> lambda, Symbol initial);

  // Text format, one rule per line:
  //   initial x0            (optional; defaults to the first rule's state)
  //   x0 i0 -> x1 o0
  // '#' starts a comment. The table must be total over the states and inputs
  // that appear.
  static MealyMachine parse(const std::string& text);

  const std::vector<Symbol>& states() const { return states_; }
  const std::vector<Symbol>& inputs() const { return inputs_; }
  const std::vector<Symbol>& outputs() const { return outputs_; }
  Symbol initial() const { return initial_; }

  Symbol next_state(Symbol state, Symbol input) const;
  Symbol output(Symbol state, Symbol input) const;

  bool has_state(Symbol s) const { return state_index(s) >= 0; }
  bool has_input(Symbol s) const { return input_index(s) >= 0; }

 private:
  int state_index(Symbol s) const;
  int input_index(Symbol s) const;

  std::vector<Symbol> states_, inputs_, outputs_;
  std::vector<std::vector<int>> delta_;       // state idx x input idx -> state idx
  std::vector<std::vector<Symbol>> lambda_;   // state idx x input idx -> output
  Symbol initial_;
};

// Embeds the machine as an object program Q with
//   {Q} (pair x a) = (pair (next_state x a) (output x a))
// for every table entry. Dispatch is a chain of symbol comparisons.
Code compile_machine(const MealyMachine& m);

// Self-confirming explanation of a belief-sensitive transition t (a code of a
// ternary function (explanation, state, input) -> output): returns e_x with
//   interpret3(t, code-of(e_x), x, a) == interpret(e_x, a).
// Built as E = (lam r (lam x (lam a (((t (spec (spec r r) x)) x) a)))),
// e_x = specialize(diagonal(E), x).
Code self_confirming_at(const Code& t, const ValueRef& x);

// Belief assignment for a process code q (inputs and outputs as in
// compile_machine). at(x) is deterministic, so the step's predicted next
// belief is literally the assignment at the true next state.
class BeliefFamily {
 public:
  explicit BeliefFamily(const Code& q);

  Code at(const ValueRef& state) const;
  const Code& process() const { return q_; }

 private:
  Code q_;
  Code diag_;  // diagonal of the update combinator, awaiting a state
};

BeliefFamily belief_of(const Code& q);

// Lock-step comparison of the machine tables against the interpreted belief
// codes.
struct TraceStep {
  Symbol state;
  Symbol input;
  Symbol true_output;
  std::optional<ValueRef> predicted_output;  // empty when the step failed
  bool outputs_match = false;
  bool next_belief_matches = false;
  std::string note;  // failure diagnostics
};

struct TraceReport {
  std::vector<TraceStep> steps;
  std::optional<std::size_t> first_divergence;

  bool all_consistent() const { return !first_divergence.has_value(); }
};

TraceReport simulate_and_check(const MealyMachine& m, const std::vector<Symbol>& stream,
                               Fuel fuel_per_step);

// Same harness against an externally supplied assignment, so faults can be
// injected.
TraceReport simulate_and_check(const MealyMachine& m, const BeliefFamily& family,
                               const std::vector<Symbol>& stream, Fuel fuel_per_step,
                               const Code* belief_at_initial = nullptr);

}  // namespace rikit
