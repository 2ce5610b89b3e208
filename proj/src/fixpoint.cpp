#include "rikit/fixpoint.hpp"

namespace rikit {

Code kleene_fix(const Code& g) {
  // H = (lam q (lam a ((g (spec q q)) a)))    q = #1, a = #0
  Term::Ptr self_spec = tprim(PrimOp::Spec, {tvar(1), tvar(1)});
  Term::Ptr body = tapp(tapp(g.term, self_spec), tvar(0));
  Code h = encode(tlam(tlam(body)));
  return diagonal(h);
}

bool provable(const ProvabilityQuery& q) {
  Outcome out = interpret(q.predicate, q.input, q.budget);
  if (!out.is_done()) return false;
  const bool* b = as_bool(out.value);
  return b != nullptr && *b;
}

bool budget_truth_agreement(const Code& p, const ValueRef& a, Fuel fuel) {
  bool searched = provable(ProvabilityQuery{p, a, fuel});
  Outcome direct = interpret(p, a, fuel);
  bool truth = direct.is_done() && as_bool(direct.value) != nullptr && *as_bool(direct.value);
  return searched == truth;
}

namespace {

// (lam q (lam a (not (run q a))))
Code not_wrapper() {
  Term::Ptr body = tprim(PrimOp::Not, {tprim(PrimOp::Run, {tvar(1), tvar(0)})});
  return encode(tlam(tlam(body)));
}

}  // namespace

Code negate_predicate(const Code& p) { return specialize(not_wrapper(), vcode(p)); }

GoedelPair goedel_sentence() {
  // g = (lam p (lam a (run (spec 'notwrap p) a)))
  // so that g(p, a) searches for a proof of (not p) at a.
  Code nw = not_wrapper();
  Term::Ptr neg_p = tprim(PrimOp::Spec, {tquote(nw.term), tvar(1)});
  Term::Ptr body = tprim(PrimOp::Run, {neg_p, tvar(0)});
  Code g = encode(tlam(tlam(body)));
  Code gamma = kleene_fix(g);
  return GoedelPair{gamma, negate_predicate(gamma)};
}

}  // namespace rikit
