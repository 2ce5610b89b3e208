#pragma once

#include <variant>

#include "rikit/eval.hpp"

namespace rikit {

struct EncodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wraps a closed term as a first-class description.
Code encode(const Term::Ptr& t);  // throws EncodeError on open terms

bool code_eq(const Code& a, const Code& b);

// Decodes and runs a description on an input: exactly
// eval((c.term a), fuel - 1). One budget works for every input/output type;
// shape constraints are dynamic.
Outcome interpret(const Code& c, const ValueRef& a, Fuel fuel);

// Curried application helpers used by the specializer and fixpoint laws.
Outcome interpret2(const Code& c, const ValueRef& x, const ValueRef& a, Fuel fuel);
Outcome interpret3(const Code& c, const ValueRef& x, const ValueRef& y, const ValueRef& a,
                   Fuel fuel);

// One step of the stateful reading: the belief code must evaluate to
// (pair (quote next) output) with a first-order output.
struct StatefulStep {
  Code next_belief;
  ValueRef output;
};

// Either the decomposed step or the raw failing Outcome (out-of-fuel, error,
// or a Done of the wrong shape reported as a type-mismatch error).
std::variant<StatefulStep, Outcome> interpret_stateful(const Code& belief, const ValueRef& a,
                                                       Fuel fuel);

}  // namespace rikit
