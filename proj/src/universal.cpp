#include "rikit/universal.hpp"

namespace rikit {

Code encode(const Term::Ptr& t) {
  if (!term_closed(t)) throw EncodeError("descriptions must be closed terms");
  return Code{t};
}

bool code_eq(const Code& a, const Code& b) { return term_eq(a.term, b.term); }

namespace {

Outcome apply_lifted(const Term::Ptr& fn, std::initializer_list<ValueRef> args, Fuel fuel) {
  if (fuel <= 0) return Outcome::out_of_fuel();
  Term::Ptr t = fn;
  for (const ValueRef& a : args) {
    if (!first_order(a)) {
      return Outcome::error(ErrKind::LiftFailure, "interpreter input contains a closure");
    }
    t = tapp(std::move(t), lift(a));
  }
  return eval(t, fuel - 1);
}

}  // namespace

Outcome interpret(const Code& c, const ValueRef& a, Fuel fuel) {
  return apply_lifted(c.term, {a}, fuel);
}

Outcome interpret2(const Code& c, const ValueRef& x, const ValueRef& a, Fuel fuel) {
  return apply_lifted(c.term, {x, a}, fuel);
}

Outcome interpret3(const Code& c, const ValueRef& x, const ValueRef& y, const ValueRef& a,
                   Fuel fuel) {
  return apply_lifted(c.term, {x, y, a}, fuel);
}

std::variant<StatefulStep, Outcome> interpret_stateful(const Code& belief, const ValueRef& a,
                                                       Fuel fuel) {
  Outcome out = interpret(belief, a, fuel);
  if (!out.is_done()) return out;
  const Value::PairV* p = as_pair(out.value);
  if (p == nullptr) {
    return Outcome::error(ErrKind::TypeMismatch, "belief must step to (pair code output)");
  }
  const Code* next = as_code(p->first);
  if (next == nullptr) {
    return Outcome::error(ErrKind::TypeMismatch, "belief step lacks a next-belief code");
  }
  if (!first_order(p->second)) {
    return Outcome::error(ErrKind::TypeMismatch, "belief step output must be first-order");
  }
  return StatefulStep{*next, p->second};
}

}  // namespace rikit
