#include "rikit/eval.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace rikit {

namespace {

// Continuation frames of the abstract machine.
struct KAppFn {  // fn evaluated next; then arg
  Term::Ptr arg;
  EnvRef env;
};
struct KAppArg {  // arg evaluated next; then beta
  ValueRef fn;
};
struct KPairFirst {
  Term::Ptr second;
  EnvRef env;
};
struct KPairSecond {
  ValueRef first;
};
struct KProj {
  bool first;
};
struct KInj {
  bool left;
};
struct KCase {
  Term::Ptr left, right;
  EnvRef env;
};
struct KIf {
  Term::Ptr then_branch, else_branch;
  EnvRef env;
};
struct KPrim {
  PrimOp op;
  Term::Ptr node;  // owns the arg list; run-built terms have no other owner
  std::size_t next_arg;
  EnvRef env;
  std::vector<ValueRef> done;
};

using Frame = std::variant<KAppFn, KAppArg, KPairFirst, KPairSecond, KProj, KInj, KCase, KIf, KPrim>;

struct Machine {
  Fuel fuel;
  EvalTrace* trace = nullptr;
  std::size_t trace_cap = 0;
  std::vector<Frame> stack;
  // Fix unrolls into an application of an eta-delayed copy; the unrolling is
  // cached per Fix node so loops do not rebuild it every cycle. The entry
  // keeps the node alive, which also rules out address-reuse collisions on
  // the raw key.
  std::unordered_map<const Term*, std::pair<Term::Ptr, Term::Ptr>> fix_cache;

  bool charge() {
    if (fuel <= 0) return false;
    --fuel;
    if (trace != nullptr) ++trace->charged;
    return true;
  }

  void record(const char* what) {
    if (trace == nullptr) return;
    if (trace->steps.size() >= trace_cap) {
      trace->truncated = true;
      return;
    }
    trace->steps.emplace_back(what);
  }
};

Outcome apply_prim(PrimOp op, std::vector<ValueRef>& args, Term::Ptr& next_term,
                   EnvRef& next_env, bool& enter_term);

// Runs the machine to completion starting from `term` in `env`.
Outcome run_machine(Machine& m, Term::Ptr term, EnvRef env) {
  enum class Mode { Eval, Apply };
  Mode mode = Mode::Eval;
  ValueRef value;

  for (;;) {
    if (mode == Mode::Eval) {
      const Term* t = term.get();
      switch (t->kind) {
        case TermKind::Var: {
          const ValueRef* found = env_lookup(env, t->index);
          if (found == nullptr) {
            return Outcome::error(ErrKind::Unbound, "unbound variable #" + std::to_string(t->index));
          }
          value = *found;
          mode = Mode::Apply;
          break;
        }
        case TermKind::Lam:
          value = vclosure(env, t->kids[0]);
          mode = Mode::Apply;
          break;
        case TermKind::Lit:
          value = vground(t->lit);
          mode = Mode::Apply;
          break;
        case TermKind::Quote:
          value = vcode(Code{t->kids[0]});
          mode = Mode::Apply;
          break;
        case TermKind::App:
          m.stack.push_back(KAppFn{t->kids[1], env});
          term = t->kids[0];
          break;
        case TermKind::Pair:
          m.stack.push_back(KPairFirst{t->kids[1], env});
          term = t->kids[0];
          break;
        case TermKind::Proj1:
        case TermKind::Proj2:
          m.stack.push_back(KProj{t->kind == TermKind::Proj1});
          term = t->kids[0];
          break;
        case TermKind::Inj1:
        case TermKind::Inj2:
          m.stack.push_back(KInj{t->kind == TermKind::Inj1});
          term = t->kids[0];
          break;
        case TermKind::Case:
          m.stack.push_back(KCase{t->kids[1], t->kids[2], env});
          term = t->kids[0];
          break;
        case TermKind::If:
          m.stack.push_back(KIf{t->kids[1], t->kids[2], env});
          term = t->kids[0];
          break;
        case TermKind::Fix: {
          // fix t  ==>  t (lam x. (fix t^) x)   with t^ shifted past the binder;
          // the wrapper delays re-unrolling until the recursive call. A closed
          // functional shifts to itself, so the inner fix can be this very
          // node and the loop stays on one cache entry.
          auto it = m.fix_cache.find(t);
          Term::Ptr unrolled;
          if (it != m.fix_cache.end()) {
            unrolled = it->second.second;
          } else {
            Term::Ptr shifted = term_shift(t->kids[0], 1);
            Term::Ptr inner = shifted == t->kids[0] ? term : tfix(shifted);
            Term::Ptr wrapper = tlam(tapp(std::move(inner), tvar(0)));
            unrolled = tapp(t->kids[0], wrapper);
            m.fix_cache.emplace(t, std::make_pair(term, unrolled));
          }
          term = unrolled;
          break;
        }
        case TermKind::Prim: {
          m.stack.push_back(KPrim{t->op, term, 1, env, {}});
          term = t->kids[0];
          break;
        }
      }
      continue;
    }

    // Mode::Apply: feed `value` to the top frame.
    if (m.stack.empty()) return Outcome::done(std::move(value));
    Frame frame = std::move(m.stack.back());
    m.stack.pop_back();

    if (auto* f = std::get_if<KAppFn>(&frame)) {
      m.stack.push_back(KAppArg{std::move(value)});
      term = f->arg;
      env = f->env;
      mode = Mode::Eval;
    } else if (auto* f = std::get_if<KAppArg>(&frame)) {
      const Value::ClosureV* cl = as_closure(f->fn);
      if (cl == nullptr) {
        return Outcome::error(ErrKind::TypeMismatch, "application of a non-function");
      }
      if (!m.charge()) return Outcome::out_of_fuel();
      m.record("beta");
      term = cl->body;
      env = env_push(cl->env, std::move(value));
      mode = Mode::Eval;
    } else if (auto* f = std::get_if<KPairFirst>(&frame)) {
      m.stack.push_back(KPairSecond{std::move(value)});
      term = f->second;
      env = f->env;
      mode = Mode::Eval;
    } else if (auto* f = std::get_if<KPairSecond>(&frame)) {
      value = vpair(std::move(f->first), std::move(value));
    } else if (auto* f = std::get_if<KProj>(&frame)) {
      const Value::PairV* p = as_pair(value);
      if (p == nullptr) return Outcome::error(ErrKind::TypeMismatch, "projection from a non-pair");
      value = f->first ? p->first : p->second;
    } else if (auto* f = std::get_if<KInj>(&frame)) {
      value = f->left ? vleft(std::move(value)) : vright(std::move(value));
    } else if (auto* f = std::get_if<KCase>(&frame)) {
      const Value::Tagged* tag = as_tagged(value);
      if (tag == nullptr) return Outcome::error(ErrKind::TypeMismatch, "case on a non-sum value");
      term = tag->is_left ? f->left : f->right;
      env = env_push(f->env, tag->inner);
      mode = Mode::Eval;
    } else if (auto* f = std::get_if<KIf>(&frame)) {
      const bool* b = as_bool(value);
      if (b == nullptr) return Outcome::error(ErrKind::TypeMismatch, "if on a non-boolean");
      term = *b ? f->then_branch : f->else_branch;
      env = f->env;
      mode = Mode::Eval;
    } else {
      auto& pf = std::get<KPrim>(frame);
      pf.done.push_back(std::move(value));
      if (pf.next_arg < pf.node->kids.size()) {
        term = pf.node->kids[pf.next_arg];
        env = pf.env;
        ++pf.next_arg;
        m.stack.push_back(std::move(pf));
        mode = Mode::Eval;
        continue;
      }
      if (!m.charge()) return Outcome::out_of_fuel();
      m.record(prim_name(pf.op));
      Term::Ptr enter_t;
      EnvRef enter_e;
      bool enter = false;
      Outcome out = apply_prim(pf.op, pf.done, enter_t, enter_e, enter);
      if (enter) {
        term = std::move(enter_t);
        env = std::move(enter_e);
        mode = Mode::Eval;
        continue;
      }
      if (!out.is_done()) return out;
      value = std::move(out.value);
    }
  }
}

Outcome type_err(const char* what) { return Outcome::error(ErrKind::TypeMismatch, what); }

Outcome apply_prim(PrimOp op, std::vector<ValueRef>& args, Term::Ptr& next_term,
                   EnvRef& next_env, bool& enter_term) {
  switch (op) {
    case PrimOp::Add:
    case PrimOp::Sub:
    case PrimOp::Mul:
    case PrimOp::Le:
    case PrimOp::EqInt: {
      const BigInt* x = as_int(args[0]);
      const BigInt* y = as_int(args[1]);
      if (x == nullptr || y == nullptr) return type_err("integer primitive on non-integers");
      switch (op) {
        case PrimOp::Add: return Outcome::done(vint(*x + *y));
        case PrimOp::Sub: return Outcome::done(vint(*x - *y));
        case PrimOp::Mul: return Outcome::done(vint(*x * *y));
        case PrimOp::Le: return Outcome::done(vbool(*x <= *y));
        default: return Outcome::done(vbool(*x == *y));
      }
    }
    case PrimOp::EqSym: {
      const Symbol* x = as_sym(args[0]);
      const Symbol* y = as_sym(args[1]);
      if (x == nullptr || y == nullptr) return type_err("eq-sym on non-symbols");
      return Outcome::done(vbool(*x == *y));
    }
    case PrimOp::Not: {
      const bool* b = as_bool(args[0]);
      if (b == nullptr) return type_err("not on a non-boolean");
      return Outcome::done(vbool(!*b));
    }
    case PrimOp::CodeEq: {
      const Code* c = as_code(args[0]);
      const Code* d = as_code(args[1]);
      if (c == nullptr || d == nullptr) return type_err("code-eq on non-codes");
      return Outcome::done(vbool(term_eq(c->term, d->term)));
    }
    case PrimOp::Size: {
      const Code* c = as_code(args[0]);
      if (c == nullptr) return type_err("size on a non-code");
      return Outcome::done(vint(BigInt(static_cast<long long>(term_size(c->term)))));
    }
    case PrimOp::Spec: {
      const Code* c = as_code(args[0]);
      if (c == nullptr) return type_err("spec needs a code as first argument");
      if (!first_order(args[1])) {
        return Outcome::error(ErrKind::LiftFailure, "spec argument contains a closure");
      }
      return Outcome::done(vcode(Code{tapp(c->term, lift(args[1]))}));
    }
    case PrimOp::Run: {
      const Code* c = as_code(args[0]);
      if (c == nullptr) return type_err("run needs a code as first argument");
      if (!first_order(args[1])) {
        return Outcome::error(ErrKind::LiftFailure, "run argument contains a closure");
      }
      // Tail-enter the decoded program against the remaining budget; the
      // pending continuation stack receives its result directly.
      next_term = tapp(c->term, lift(args[1]));
      next_env = nullptr;
      enter_term = true;
      return Outcome::done(nullptr);  // unused
    }
  }
  return type_err("unknown primitive");
}

}  // namespace

Outcome eval(const Term::Ptr& term, Fuel fuel) {
  if (fuel < 0) fuel = 0;
  Machine m;
  m.fuel = fuel;
  return run_machine(m, term, nullptr);
}

Outcome eval_traced(const Term::Ptr& term, Fuel fuel, EvalTrace& trace, std::size_t max_steps) {
  if (fuel < 0) fuel = 0;
  Machine m;
  m.fuel = fuel;
  m.trace = &trace;
  m.trace_cap = max_steps;
  return run_machine(m, term, nullptr);
}

}  // namespace rikit
