#include "rikit/value.hpp"

#include <utility>
#include <vector>

namespace rikit {

EnvRef env_push(EnvRef env, ValueRef v) {
  auto cell = std::make_shared<Env>();
  cell->head = std::move(v);
  cell->tail = std::move(env);
  return cell;
}

const ValueRef* env_lookup(const EnvRef& env, int index) {
  const Env* cur = env.get();
  while (cur != nullptr && index > 0) {
    cur = cur->tail.get();
    --index;
  }
  if (cur == nullptr) return nullptr;
  return &cur->head;
}

namespace {

// Teardown support. Values and environments link into each other (pairs,
// injections, closure captures, env tails), so one worklist flattens every
// chain a destructor is the sole owner of.
using OwnedLink = std::variant<ValueRef, EnvRef>;

void drain_value(Value& val, std::vector<OwnedLink>& work) {
  if (auto* p = std::get_if<Value::PairV>(&val.v)) {
    if (p->first) work.emplace_back(std::move(p->first));
    if (p->second) work.emplace_back(std::move(p->second));
  } else if (auto* t = std::get_if<Value::Tagged>(&val.v)) {
    if (t->inner) work.emplace_back(std::move(t->inner));
  } else if (auto* c = std::get_if<Value::ClosureV>(&val.v)) {
    if (c->env) work.emplace_back(std::move(c->env));
  }
}

void drain_env(Env& cell, std::vector<OwnedLink>& work) {
  if (cell.head) work.emplace_back(std::move(cell.head));
  if (cell.tail) work.emplace_back(std::move(cell.tail));
}

void flatten(std::vector<OwnedLink>& work) {
  while (!work.empty()) {
    OwnedLink link = std::move(work.back());
    work.pop_back();
    if (auto* v = std::get_if<ValueRef>(&link)) {
      if (v->use_count() == 1) drain_value(const_cast<Value&>(**v), work);
    } else {
      auto& e = std::get<EnvRef>(link);
      if (e.use_count() == 1) drain_env(const_cast<Env&>(*e), work);
    }
  }
}

}  // namespace

Value::~Value() {
  std::vector<OwnedLink> work;
  drain_value(*this, work);
  flatten(work);
}

Env::~Env() {
  std::vector<OwnedLink> work;
  drain_env(*this, work);
  flatten(work);
}

namespace {

ValueRef wrap(Value v) { return std::make_shared<const Value>(std::move(v)); }

}  // namespace

ValueRef vground(Ground g) { return wrap(Value{std::move(g)}); }
ValueRef vint(long long i) { return vground(Ground(BigInt(i))); }
ValueRef vint(BigInt i) { return vground(Ground(std::move(i))); }
ValueRef vbool(bool b) { return vground(Ground(b)); }
ValueRef vunit() { return vground(Ground(UnitV{})); }
ValueRef vsym(Symbol s) { return vground(Ground(s)); }
ValueRef vpair(ValueRef a, ValueRef b) {
  return wrap(Value{Value::PairV{std::move(a), std::move(b)}});
}
ValueRef vleft(ValueRef inner) { return wrap(Value{Value::Tagged{true, std::move(inner)}}); }
ValueRef vright(ValueRef inner) { return wrap(Value{Value::Tagged{false, std::move(inner)}}); }
ValueRef vclosure(EnvRef env, Term::Ptr body) {
  return wrap(Value{Value::ClosureV{std::move(env), std::move(body)}});
}
ValueRef vcode(Code c) { return wrap(Value{std::move(c)}); }

const Ground* as_ground(const ValueRef& v) { return std::get_if<Ground>(&v->v); }
const BigInt* as_int(const ValueRef& v) {
  const Ground* g = as_ground(v);
  return g ? std::get_if<BigInt>(g) : nullptr;
}
const bool* as_bool(const ValueRef& v) {
  const Ground* g = as_ground(v);
  return g ? std::get_if<bool>(g) : nullptr;
}
const Symbol* as_sym(const ValueRef& v) {
  const Ground* g = as_ground(v);
  return g ? std::get_if<Symbol>(g) : nullptr;
}
const Value::PairV* as_pair(const ValueRef& v) { return std::get_if<Value::PairV>(&v->v); }
const Value::Tagged* as_tagged(const ValueRef& v) { return std::get_if<Value::Tagged>(&v->v); }
const Value::ClosureV* as_closure(const ValueRef& v) {
  return std::get_if<Value::ClosureV>(&v->v);
}
const Code* as_code(const ValueRef& v) { return std::get_if<Code>(&v->v); }

bool first_order(const ValueRef& v) {
  std::vector<const Value*> work{v.get()};
  while (!work.empty()) {
    const Value* cur = work.back();
    work.pop_back();
    if (std::holds_alternative<Value::ClosureV>(cur->v)) return false;
    if (const auto* p = std::get_if<Value::PairV>(&cur->v)) {
      work.push_back(p->first.get());
      work.push_back(p->second.get());
    } else if (const auto* t = std::get_if<Value::Tagged>(&cur->v)) {
      work.push_back(t->inner.get());
    }
  }
  return true;
}

bool value_eq(const ValueRef& a, const ValueRef& b) {
  std::vector<std::pair<const Value*, const Value*>> work{{a.get(), b.get()}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;
    if (x == nullptr || y == nullptr) return false;
    if (x->v.index() != y->v.index()) return false;
    if (const auto* g = std::get_if<Ground>(&x->v)) {
      if (!ground_eq(*g, *std::get_if<Ground>(&y->v))) return false;
    } else if (const auto* p = std::get_if<Value::PairV>(&x->v)) {
      const auto* q = std::get_if<Value::PairV>(&y->v);
      work.emplace_back(p->first.get(), q->first.get());
      work.emplace_back(p->second.get(), q->second.get());
    } else if (const auto* t = std::get_if<Value::Tagged>(&x->v)) {
      const auto* u = std::get_if<Value::Tagged>(&y->v);
      if (t->is_left != u->is_left) return false;
      work.emplace_back(t->inner.get(), u->inner.get());
    } else if (const auto* c = std::get_if<Value::ClosureV>(&x->v)) {
      const auto* d = std::get_if<Value::ClosureV>(&y->v);
      if (!term_eq(c->body, d->body)) return false;
      const Env* ex = c->env.get();
      const Env* ey = d->env.get();
      while (ex != nullptr && ey != nullptr) {
        work.emplace_back(ex->head.get(), ey->head.get());
        ex = ex->tail.get();
        ey = ey->tail.get();
      }
      if (ex != nullptr || ey != nullptr) return false;
    } else {
      const auto* cx = std::get_if<Code>(&x->v);
      const auto* cy = std::get_if<Code>(&y->v);
      if (!term_eq(cx->term, cy->term)) return false;
    }
  }
  return true;
}

std::string print_term(const Term::Ptr& t);  // parser.cpp

std::string show_value(const ValueRef& v) {
  std::string out;
  // chunks to append or values to render, processed last-in first-out
  std::vector<std::variant<const Value*, std::string>> work{v.get()};
  while (!work.empty()) {
    auto job = std::move(work.back());
    work.pop_back();
    if (auto* chunk = std::get_if<std::string>(&job)) {
      out += *chunk;
      continue;
    }
    const Value* cur = std::get<const Value*>(job);
    if (const auto* g = std::get_if<Ground>(&cur->v)) {
      out += show_ground(*g);
    } else if (const auto* p = std::get_if<Value::PairV>(&cur->v)) {
      out += "(pair ";
      work.emplace_back(")");
      work.emplace_back(p->second.get());
      work.emplace_back(" ");
      work.emplace_back(p->first.get());
    } else if (const auto* t = std::get_if<Value::Tagged>(&cur->v)) {
      out += t->is_left ? "(inl " : "(inr ";
      work.emplace_back(")");
      work.emplace_back(t->inner.get());
    } else if (std::holds_alternative<Value::ClosureV>(cur->v)) {
      out += "<closure>";
    } else {
      out += "(quote " + print_term(std::get_if<Code>(&cur->v)->term) + ")";
    }
  }
  return out;
}

Term::Ptr lift(const ValueRef& v) {
  // post-order build with explicit stacks; chains can be very deep
  struct Item {
    const Value* v;
    bool combine;
  };
  std::vector<Item> work{{v.get(), false}};
  std::vector<Term::Ptr> built;
  while (!work.empty()) {
    Item item = work.back();
    work.pop_back();
    if (item.combine) {
      if (const auto* p = std::get_if<Value::PairV>(&item.v->v)) {
        (void)p;
        Term::Ptr second = std::move(built.back());
        built.pop_back();
        Term::Ptr first = std::move(built.back());
        built.pop_back();
        built.push_back(tpair(std::move(first), std::move(second)));
      } else {
        const auto* t = std::get_if<Value::Tagged>(&item.v->v);
        Term::Ptr inner = std::move(built.back());
        built.pop_back();
        built.push_back(t->is_left ? tinj1(std::move(inner)) : tinj2(std::move(inner)));
      }
      continue;
    }
    if (const auto* g = std::get_if<Ground>(&item.v->v)) {
      built.push_back(tlit(*g));
    } else if (const auto* c = std::get_if<Code>(&item.v->v)) {
      built.push_back(tquote(c->term));
    } else if (const auto* p = std::get_if<Value::PairV>(&item.v->v)) {
      work.push_back({item.v, true});
      work.push_back({p->second.get(), false});
      work.push_back({p->first.get(), false});
    } else if (const auto* t = std::get_if<Value::Tagged>(&item.v->v)) {
      work.push_back({item.v, true});
      work.push_back({t->inner.get(), false});
    } else {
      throw LiftError("closures are not liftable");
    }
  }
  return std::move(built.back());
}

const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::TypeMismatch: return "type-mismatch";
    case ErrKind::Unbound: return "unbound";
    case ErrKind::Arity: return "arity";
    case ErrKind::LiftFailure: return "lift-failure";
  }
  return "?";
}

Outcome Outcome::done(ValueRef v) {
  Outcome o;
  o.tag = Tag::Done;
  o.value = std::move(v);
  return o;
}

Outcome Outcome::out_of_fuel() {
  Outcome o;
  o.tag = Tag::OutOfFuel;
  return o;
}

Outcome Outcome::error(ErrKind k, std::string detail) {
  Outcome o;
  o.tag = Tag::Error;
  o.err = k;
  o.detail = std::move(detail);
  return o;
}

bool outcome_eq(const Outcome& a, const Outcome& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case Outcome::Tag::Done:
      return value_eq(a.value, b.value);
    case Outcome::Tag::OutOfFuel:
      return true;
    case Outcome::Tag::Error:
      return a.err == b.err;
  }
  return false;
}

std::string show_outcome(const Outcome& o) {
  switch (o.tag) {
    case Outcome::Tag::Done:
      return show_value(o.value);
    case Outcome::Tag::OutOfFuel:
      return "out-of-fuel";
    case Outcome::Tag::Error:
      return std::string("error(") + err_kind_name(o.err) + "): " + o.detail;
  }
  return "?";
}

}  // namespace rikit
