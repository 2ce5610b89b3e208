#pragma once

#include "rikit/smn.hpp"

namespace rikit {

// Second-recursion-theorem fixpoint. For a code g of a binary function
// (code, input) -> output, returns a code G with
//   interpret(G, a, fuel) == interpret2(g, code-of-G, a, fuel')
// up to a constant fuel offset. Built by splicing g into
//   H = (lam q (lam a ((g (spec q q)) a)))
// and taking G = diagonal(H); no evaluation happens at construction time.
Code kleene_fix(const Code& g);

struct ProvabilityQuery {
  Code predicate;  // boolean-valued program
  ValueRef input;
  Fuel budget = 0;
};

// Bounded search for a terminating true evaluation. True exactly when the
// predicate reaches Done(true) within the budget; errors and out-of-fuel both
// count as not-provable-within-budget. The terminating evaluation itself is
// the proof object. Monotone in the budget.
bool provable(const ProvabilityQuery& q);

// For predicates that halt within the fuel, provability-within-budget and
// evaluating-to-true are the same thing. Returns whether the two routes agree
// (they always must; exposed so the suites can drive it).
bool budget_truth_agreement(const Code& p, const ValueRef& a, Fuel fuel);

// The negation wrapper applied to a predicate code:
//   (lam a (not (run 'p a)))  specialized to p.
Code negate_predicate(const Code& p);

struct GoedelPair {
  Code gamma;
  Code neg_gamma;  // negate_predicate(gamma)
};

// The diagonal sentence of "my negation has a proof": the fixpoint of
//   g(p, a) = run (negation of p) on a.
// Interpreting gamma unwinds its own negated search forever, so neither
// gamma nor (not gamma) ever becomes provable within any finite budget.
GoedelPair goedel_sentence();

}  // namespace rikit
