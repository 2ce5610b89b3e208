#include "rikit/gen.hpp"

namespace rikit {

namespace {

std::uint64_t splitmix(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_case(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t x = seed;
  std::uint64_t a = splitmix(x);
  x ^= stream * 0xd1342543de82ef95ull + index;
  std::uint64_t b = splitmix(x);
  return Rng(a ^ (b + 0x632be59bd9b4e019ull));
}

std::uint64_t Rng::next() { return splitmix(state_); }

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(int percent) { return static_cast<int>(below(100)) < percent; }

namespace {

const std::vector<Symbol>& sym_pool() {
  static const std::vector<Symbol> pool = {
      Symbol::intern("red"), Symbol::intern("green"), Symbol::intern("blue"),
      Symbol::intern("tick"), Symbol::intern("tock"),
  };
  return pool;
}

Term::Ptr small_code_term(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return tlam(tvar(0));
    case 1: return tlam(tprim(PrimOp::Add, {tvar(0), tint(rng.range(0, 9))}));
    case 2: return tlam(tpair(tvar(0), tvar(0)));
    default: return tlam(tint(rng.range(-5, 5)));
  }
}

}  // namespace

ValueRef gen_value(Rng& rng, Flavor flavor, int depth) {
  switch (flavor) {
    case Flavor::Int:
      return vint(rng.range(-50, 50));
    case Flavor::Bool:
      return vbool(rng.chance(50));
    case Flavor::Sym:
      return vsym(rng.pick(sym_pool()));
    case Flavor::PairIntInt:
      return vpair(vint(rng.range(-50, 50)), vint(rng.range(-50, 50)));
    case Flavor::SumInt:
      return rng.chance(50) ? vleft(vint(rng.range(-9, 9))) : vright(vint(rng.range(-9, 9)));
    case Flavor::Any:
      return gen_first_order(rng, depth);
  }
  return vunit();
}

ValueRef gen_first_order(Rng& rng, int depth) {
  int roll = rng.range(0, depth >= 2 ? 4 : 6);
  switch (roll) {
    case 0: return vint(rng.range(-100, 100));
    case 1: return vbool(rng.chance(50));
    case 2: return vunit();
    case 3: return vsym(rng.pick(sym_pool()));
    case 4: return vcode(Code{small_code_term(rng)});
    case 5: return vpair(gen_first_order(rng, depth + 1), gen_first_order(rng, depth + 1));
    default:
      return rng.chance(50) ? vleft(gen_first_order(rng, depth + 1))
                            : vright(gen_first_order(rng, depth + 1));
  }
}

namespace {

struct Scope {
  std::vector<Flavor> vars;  // innermost last

  // Variables of a flavor, as de Bruijn indices.
  std::vector<int> matching(Flavor f) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[vars.size() - 1 - i] == f) out.push_back(static_cast<int>(i));
    }
    return out;
  }
};

Term::Ptr gen_expr(Rng& rng, const Scope& scope, Flavor want, int fuel);

Term::Ptr gen_int_expr(Rng& rng, const Scope& scope, int fuel) {
  auto vars = scope.matching(Flavor::Int);
  if (fuel <= 0 || rng.chance(30)) {
    if (!vars.empty() && rng.chance(60)) return tvar(rng.pick(vars));
    return tint(rng.range(-20, 20));
  }
  switch (rng.below(6)) {
    case 0:
      return tprim(PrimOp::Add, {gen_int_expr(rng, scope, fuel - 1), gen_int_expr(rng, scope, fuel - 1)});
    case 1:
      return tprim(PrimOp::Sub, {gen_int_expr(rng, scope, fuel - 1), gen_int_expr(rng, scope, fuel - 1)});
    case 2:
      return tprim(PrimOp::Mul, {gen_int_expr(rng, scope, fuel - 1), gen_int_expr(rng, scope, fuel - 1)});
    case 3:
      return tif(gen_expr(rng, scope, Flavor::Bool, fuel - 1), gen_int_expr(rng, scope, fuel - 1),
                 gen_int_expr(rng, scope, fuel - 1));
    case 4: {
      // immediate application of a one-variable integer function
      Scope inner = scope;
      inner.vars.push_back(Flavor::Int);
      return tapp(tlam(gen_int_expr(rng, inner, fuel - 1)), gen_int_expr(rng, scope, fuel - 1));
    }
    default: {
      // bounded countdown loop: (fix (lam f (lam n (if (le n 0) base (add step (f (sub n 1)))))))
      Scope inner = scope;
      inner.vars.push_back(Flavor::Any);  // f, untyped
      inner.vars.push_back(Flavor::Int);  // n
      Term::Ptr base = tint(rng.range(0, 5));
      Term::Ptr recur = tapp(tvar(1), tprim(PrimOp::Sub, {tvar(0), tint(1)}));
      Term::Ptr body = tif(tprim(PrimOp::Le, {tvar(0), tint(0)}), base,
                           tprim(PrimOp::Add, {tvar(0), recur}));
      Term::Ptr loop = tfix(tlam(tlam(body)));
      return tapp(loop, tint(rng.range(0, 12)));
    }
  }
}

Term::Ptr gen_bool_expr(Rng& rng, const Scope& scope, int fuel) {
  auto vars = scope.matching(Flavor::Bool);
  if (fuel <= 0 || rng.chance(30)) {
    if (!vars.empty() && rng.chance(60)) return tvar(rng.pick(vars));
    return tbool(rng.chance(50));
  }
  switch (rng.below(4)) {
    case 0:
      return tprim(PrimOp::Le, {gen_int_expr(rng, scope, fuel - 1), gen_int_expr(rng, scope, fuel - 1)});
    case 1:
      return tprim(PrimOp::EqInt, {gen_int_expr(rng, scope, fuel - 1), gen_int_expr(rng, scope, fuel - 1)});
    case 2:
      return tprim(PrimOp::Not, {gen_bool_expr(rng, scope, fuel - 1)});
    default:
      return tprim(PrimOp::EqSym, {gen_expr(rng, scope, Flavor::Sym, fuel - 1),
                                   gen_expr(rng, scope, Flavor::Sym, fuel - 1)});
  }
}

Term::Ptr gen_expr(Rng& rng, const Scope& scope, Flavor want, int fuel) {
  switch (want) {
    case Flavor::Int:
      return gen_int_expr(rng, scope, fuel);
    case Flavor::Bool:
      return gen_bool_expr(rng, scope, fuel);
    case Flavor::Sym: {
      auto vars = scope.matching(Flavor::Sym);
      if (!vars.empty() && rng.chance(60)) return tvar(rng.pick(vars));
      return tsym(rng.pick(sym_pool()));
    }
    case Flavor::PairIntInt: {
      auto vars = scope.matching(Flavor::PairIntInt);
      if (!vars.empty() && rng.chance(50)) return tvar(rng.pick(vars));
      return tpair(gen_int_expr(rng, scope, fuel - 1), gen_int_expr(rng, scope, fuel - 1));
    }
    case Flavor::SumInt: {
      auto vars = scope.matching(Flavor::SumInt);
      if (!vars.empty() && rng.chance(50)) return tvar(rng.pick(vars));
      return rng.chance(50) ? tinj1(gen_int_expr(rng, scope, fuel - 1))
                            : tinj2(gen_int_expr(rng, scope, fuel - 1));
    }
    case Flavor::Any:
      break;
  }
  // Any: mix the structured generators and a few deliberately untyped shapes.
  switch (rng.below(8)) {
    case 0:
      return gen_int_expr(rng, scope, fuel);
    case 1:
      return gen_bool_expr(rng, scope, fuel);
    case 2:
      return tpair(gen_expr(rng, scope, Flavor::Any, fuel - 1),
                   gen_expr(rng, scope, Flavor::Any, fuel - 1));
    case 3: {
      auto pv = scope.matching(Flavor::PairIntInt);
      Term::Ptr p = pv.empty() ? tpair(gen_int_expr(rng, scope, fuel - 1),
                                       gen_int_expr(rng, scope, fuel - 1))
                               : tvar(rng.pick(pv));
      return rng.chance(50) ? tproj1(p) : tproj2(p);
    }
    case 4: {
      auto sv = scope.matching(Flavor::SumInt);
      Term::Ptr s = sv.empty() ? gen_expr(rng, scope, Flavor::SumInt, fuel - 1) : tvar(rng.pick(sv));
      Scope inner = scope;
      inner.vars.push_back(Flavor::Int);
      return tcase(s, gen_int_expr(rng, inner, fuel - 1), gen_int_expr(rng, inner, fuel - 1));
    }
    case 5:
      return tquote(small_code_term(rng));
    case 6: {
      // code operations over literal codes
      Term::Ptr c = tquote(small_code_term(rng));
      switch (rng.below(3)) {
        case 0: return tprim(PrimOp::Size, {c});
        case 1: return tprim(PrimOp::CodeEq, {c, tquote(small_code_term(rng))});
        default:
          return tprim(PrimOp::Run, {c, gen_expr(rng, scope, Flavor::Int, fuel - 1)});
      }
    }
    default: {
      // occasionally an untyped variable reference, whatever its flavor
      if (!scope.vars.empty() && rng.chance(70)) {
        return tvar(static_cast<int>(rng.below(scope.vars.size())));
      }
      return tunit();
    }
  }
}

Flavor pick_arg_flavor(Rng& rng) {
  switch (rng.below(5)) {
    case 0: return Flavor::Int;
    case 1: return Flavor::Bool;
    case 2: return Flavor::Sym;
    case 3: return Flavor::PairIntInt;
    default: return Flavor::SumInt;
  }
}

// Total body over code variable at `code_index` plus flavored arguments.
Term::Ptr gen_total_code_body(Rng& rng, const Scope& scope, int code_index, int fuel) {
  switch (rng.below(6)) {
    case 0:
      return tprim(PrimOp::Size, {tvar(code_index)});
    case 1:
      return tprim(PrimOp::Add, {tprim(PrimOp::Size, {tvar(code_index)}),
                                 gen_int_expr(rng, scope, fuel - 1)});
    case 2:
      return tif(tprim(PrimOp::CodeEq, {tvar(code_index), tvar(code_index)}),
                 gen_int_expr(rng, scope, fuel - 1), gen_int_expr(rng, scope, fuel - 1));
    case 3:
      return tpair(tprim(PrimOp::Size, {tvar(code_index)}), gen_int_expr(rng, scope, fuel - 1));
    default:
      return gen_expr(rng, scope, Flavor::Any, fuel);
  }
}

}  // namespace

UnaryGen gen_unary(Rng& rng) {
  Flavor arg = pick_arg_flavor(rng);
  Scope scope;
  scope.vars.push_back(arg);
  return UnaryGen{tlam(gen_expr(rng, scope, Flavor::Any, 4)), arg};
}

BinaryGen gen_binary(Rng& rng) {
  Flavor first = pick_arg_flavor(rng);
  Flavor second = pick_arg_flavor(rng);
  Scope scope;
  scope.vars.push_back(first);
  scope.vars.push_back(second);
  return BinaryGen{tlam(tlam(gen_expr(rng, scope, Flavor::Any, 4))), first, second};
}

UnaryGen gen_total_on_code(Rng& rng) {
  Flavor arg = rng.chance(70) ? Flavor::Int : pick_arg_flavor(rng);
  Scope scope;
  scope.vars.push_back(Flavor::Any);  // p: a code; never interpreted
  scope.vars.push_back(arg);
  Term::Ptr body = gen_total_code_body(rng, scope, 1, 3);
  return UnaryGen{tlam(tlam(body)), arg};
}

BinaryGen gen_total_ternary_on_code(Rng& rng) {
  Flavor xf = rng.chance(60) ? Flavor::Int : pick_arg_flavor(rng);
  Flavor af = pick_arg_flavor(rng);
  Scope scope;
  scope.vars.push_back(Flavor::Any);  // l: the explanation code
  scope.vars.push_back(xf);
  scope.vars.push_back(af);
  Term::Ptr body = gen_total_code_body(rng, scope, 2, 3);
  return BinaryGen{tlam(tlam(tlam(body))), xf, af};
}

MealyMachine gen_mealy(Rng& rng, int max_states, int max_inputs, int max_outputs) {
  int ns = rng.range(1, max_states);
  int ni = rng.range(1, max_inputs);
  int no = rng.range(1, max_outputs);
  std::vector<Symbol> states, inputs, outputs;
  for (int i = 0; i < ns; ++i) states.push_back(Symbol::intern("x" + std::to_string(i)));
  for (int i = 0; i < ni; ++i) inputs.push_back(Symbol::intern("i" + std::to_string(i)));
  for (int i = 0; i < no; ++i) outputs.push_back(Symbol::intern("o" + std::to_string(i)));
  std::vector<std::vector<int>> delta(ns, std::vector<int>(ni));
  std::vector<std::vector<Symbol>> lambda(ns, std::vector<Symbol>(ni));
  for (int s = 0; s < ns; ++s) {
    for (int i = 0; i < ni; ++i) {
      delta[s][i] = static_cast<int>(rng.below(ns));
      lambda[s][i] = outputs[rng.below(no)];
    }
  }
  Symbol initial = states[rng.below(ns)];
  return MealyMachine(std::move(states), std::move(inputs), std::move(outputs), std::move(delta),
                      std::move(lambda), initial);
}

std::vector<Symbol> gen_stream(Rng& rng, const MealyMachine& m, int length) {
  std::vector<Symbol> out;
  out.reserve(length);
  for (int i = 0; i < length; ++i) out.push_back(m.inputs()[rng.below(m.inputs().size())]);
  return out;
}

DynamicFrame gen_frame(Rng& rng, int worlds, int events) {
  std::vector<std::string> names;
  for (int i = 0; i < worlds; ++i) names.push_back("w" + std::to_string(i));
  std::map<std::string, std::vector<Pred>> rels;
  for (int e = 0; e < events; ++e) {
    std::vector<Pred> rel(worlds, 0);
    for (int from = 0; from < worlds; ++from) {
      for (int to = 0; to < worlds; ++to) {
        if (rng.chance(35)) rel[from] |= Pred{1} << to;
      }
    }
    rels["e" + std::to_string(e)] = std::move(rel);
  }
  return DynamicFrame(std::move(names), std::move(rels));
}

}  // namespace rikit
