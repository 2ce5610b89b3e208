#pragma once

#include "rikit/value.hpp"

namespace rikit {

using Fuel = long long;

// Call-by-value evaluation of a closed term under a step budget.
//
// Fuel is charged 1 per beta step and 1 per primitive step; everything else
// (literals, pairing, projections, case/if dispatch, fix unrolling) is free.
// Consequences relied on elsewhere:
//   - deterministic: same (term, fuel) gives the same Outcome;
//   - monotone: a non-OutOfFuel Outcome at fuel k is the Outcome at every
//     fuel >= k;
//   - lift(v) evaluates to v at fuel 0.
//
// The `run` primitive charges its own step and then evaluates the callee
// against the caller's remaining budget, so nested interpretation towers are
// never free. The machine keeps its own continuation stack; recursion depth
// in the host is constant.
Outcome eval(const Term::Ptr& term, Fuel fuel);

// Same evaluation, recording one line per charged step (capped). A
// terminating trace is the proof object behind the provability search.
struct EvalTrace {
  std::vector<std::string> steps;
  Fuel charged = 0;
  bool truncated = false;
};
Outcome eval_traced(const Term::Ptr& term, Fuel fuel, EvalTrace& trace,
                    std::size_t max_steps = 1000);

}  // namespace rikit
