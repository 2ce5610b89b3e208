#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rikit/belief.hpp"
#include "rikit/gen.hpp"
#include "rikit/parser.hpp"

using namespace rikit;

namespace {

MealyMachine toggle() {
  return MealyMachine::parse(
      "initial x0\n"
      "x0 i -> x1 lo\n"
      "x1 i -> x0 hi\n");
}

}  // namespace

TEST_CASE("machine parsing and table validation") {
  MealyMachine m = toggle();
  CHECK(m.states().size() == 2);
  CHECK(m.inputs().size() == 1);
  CHECK(m.initial() == Symbol::intern("x0"));
  CHECK(m.next_state(Symbol::intern("x0"), Symbol::intern("i")) == Symbol::intern("x1"));
  CHECK(m.output(Symbol::intern("x1"), Symbol::intern("i")) == Symbol::intern("hi"));

  // totality is enforced
  CHECK_THROWS_AS(MealyMachine::parse("x0 i -> x1 a\n"
                                      "x1 j -> x0 b\n"),
                  MachineError);
  CHECK_THROWS_AS(MealyMachine::parse("x0 i -> x1 a\n"
                                      "x0 i -> x0 b\n"),
                  MachineError);  // duplicate entry
  CHECK_THROWS_AS(MealyMachine::parse("initial zz\nx0 i -> x0 a\n"), MachineError);
  CHECK_THROWS_AS(MealyMachine::parse(""), MachineError);
  CHECK_THROWS_AS(MealyMachine::parse("x0 i x1 a\n"), MachineError);
}

TEST_CASE("compile_machine is table-faithful") {
  // one-state echo machine
  MealyMachine echo = MealyMachine::parse("x0 a -> x0 a\nx0 b -> x0 b\n");
  Code q = compile_machine(echo);
  for (const char* in : {"a", "b"}) {
    Outcome o = interpret(q, vpair(vsym(Symbol::intern("x0")), vsym(Symbol::intern(in))), 1000);
    REQUIRE(o.is_done());
    const auto* p = as_pair(o.value);
    REQUIRE(p != nullptr);
    CHECK(*as_sym(p->first) == Symbol::intern("x0"));
    CHECK(*as_sym(p->second) == Symbol::intern(in));
  }

  // exhaustive table check over generated machines
  Rng rng(53);
  for (int i = 0; i < 30; ++i) {
    MealyMachine m = gen_mealy(rng);
    Code c = compile_machine(m);
    for (Symbol s : m.states()) {
      for (Symbol in : m.inputs()) {
        Outcome o = interpret(c, vpair(vsym(s), vsym(in)), 10000);
        REQUIRE(o.is_done());
        const auto* p = as_pair(o.value);
        REQUIRE(p != nullptr);
        CHECK(*as_sym(p->first) == m.next_state(s, in));
        CHECK(*as_sym(p->second) == m.output(s, in));
      }
    }
  }
}

TEST_CASE("self-confirming explanation: identity-shaped transition") {
  // t ignoring the explanation: t(l, x, a) = a
  Code t = encode(parse("(lam l (lam x (lam a a)))"));
  Code ex = self_confirming_at(t, vint(3));
  Outcome o = interpret(ex, vint(9), 10000);
  REQUIRE(o.is_done());
  CHECK(*as_int(o.value) == BigInt(9));
}

TEST_CASE("self-confirming explanation: the size probe") {
  // t(l, x, a) = size l: the explanation reports its own node count
  Code t = encode(parse("(lam l (lam x (lam a (size l))))"));
  Code ex = self_confirming_at(t, vsym(Symbol::intern("s")));
  Outcome o = interpret(ex, vunit(), 10000);
  REQUIRE(o.is_done());
  CHECK(*as_int(o.value) == BigInt(static_cast<long long>(term_size(ex.term))));
}

TEST_CASE("self-confirming explanation: state-and-input echo") {
  Code t = encode(parse("(lam l (lam x (lam a (pair x a))))"));
  Rng rng(59);
  for (int i = 0; i < 50; ++i) {
    ValueRef x = gen_first_order(rng);
    ValueRef a = gen_first_order(rng);
    Code ex = self_confirming_at(t, x);
    Outcome lhs = interpret3(t, vcode(ex), x, a, 10000);
    Outcome rhs = interpret(ex, a, 10000);
    REQUIRE(rhs.is_done());
    CHECK(outcome_eq(lhs, rhs));
    const auto* p = as_pair(rhs.value);
    REQUIRE(p != nullptr);
    CHECK(value_eq(p->first, x));
    CHECK(value_eq(p->second, a));
  }
}

TEST_CASE("self_confirming_at rejects unliftable states") {
  Code t = encode(parse("(lam l (lam x (lam a a)))"));
  CHECK_THROWS_AS(self_confirming_at(t, vclosure(nullptr, tvar(0))), LiftError);
}

TEST_CASE("belief assignment: single constant state is a fixed point of update") {
  MealyMachine constant = MealyMachine::parse("x0 i -> x0 o\n");
  BeliefFamily family = belief_of(compile_machine(constant));
  Code b0 = family.at(vsym(Symbol::intern("x0")));
  auto step = interpret_stateful(b0, vsym(Symbol::intern("i")), 100000);
  REQUIRE(std::holds_alternative<StatefulStep>(step));
  const auto& s = std::get<StatefulStep>(step);
  CHECK(term_eq(s.next_belief.term, b0.term));
  CHECK(*as_sym(s.output) == Symbol::intern("o"));
}

TEST_CASE("belief assignment: toggle predicts outputs and next beliefs") {
  MealyMachine m = toggle();
  BeliefFamily family = belief_of(compile_machine(m));
  Symbol x0 = Symbol::intern("x0"), x1 = Symbol::intern("x1"), i = Symbol::intern("i");

  auto step = interpret_stateful(family.at(vsym(x0)), vsym(i), 100000);
  REQUIRE(std::holds_alternative<StatefulStep>(step));
  const auto& s = std::get<StatefulStep>(step);
  CHECK(*as_sym(s.output) == m.output(x0, i));           // lambda(x0, i)
  CHECK(term_eq(s.next_belief.term, family.at(vsym(x1)).term));

  // belief codes are construction-stable across invocations
  BeliefFamily again = belief_of(compile_machine(m));
  CHECK(term_eq(family.at(vsym(x0)).term, again.at(vsym(x0)).term));
  CHECK(term_eq(family.at(vsym(x1)).term, again.at(vsym(x1)).term));
}

TEST_CASE("echo machine beliefs predict the input on random streams") {
  MealyMachine echo = MealyMachine::parse("x0 a -> x0 a\nx0 b -> x0 b\n");
  BeliefFamily family = belief_of(compile_machine(echo));
  Rng rng(61);
  Code belief = family.at(vsym(Symbol::intern("x0")));
  for (int k = 0; k < 30; ++k) {
    Symbol in = rng.chance(50) ? Symbol::intern("a") : Symbol::intern("b");
    auto step = interpret_stateful(belief, vsym(in), 100000);
    REQUIRE(std::holds_alternative<StatefulStep>(step));
    const auto& s = std::get<StatefulStep>(step);
    CHECK(*as_sym(s.output) == in);
    belief = s.next_belief;
  }
}

TEST_CASE("simulate_and_check: empty stream is all-consistent") {
  TraceReport r = simulate_and_check(toggle(), {}, 100000);
  CHECK(r.steps.empty());
  CHECK(r.all_consistent());
}

TEST_CASE("simulate_and_check: toggle for 50 steps") {
  std::vector<Symbol> stream(50, Symbol::intern("i"));
  TraceReport r = simulate_and_check(toggle(), stream, 100000);
  CHECK(r.steps.size() == 50);
  CHECK(r.all_consistent());
  // outputs alternate with the state parity
  CHECK(r.steps[0].true_output == Symbol::intern("lo"));
  CHECK(r.steps[1].true_output == Symbol::intern("hi"));
}

TEST_CASE("fault injection: a corrupted belief is caught at its step") {
  MealyMachine m = toggle();
  BeliefFamily family = belief_of(compile_machine(m));
  std::vector<Symbol> stream(10, Symbol::intern("i"));

  // corrupt the starting belief: wrong constant prediction
  Code corrupt = encode(parse("(lam a (pair (quote (lam b (pair (quote (lam c c)) 'lo))) 'hi))"));
  TraceReport r = simulate_and_check(m, family, stream, 100000, &corrupt);
  REQUIRE_FALSE(r.all_consistent());
  CHECK(*r.first_divergence == 0);

  // an unrelated stream symbol is rejected outright
  CHECK_THROWS_AS(simulate_and_check(m, {Symbol::intern("zz")}, 1000), MachineError);
}

TEST_CASE("per-step fuel exhaustion reports divergence at the failing index") {
  MealyMachine m = toggle();
  std::vector<Symbol> stream(3, Symbol::intern("i"));
  TraceReport r = simulate_and_check(m, stream, 5);  // far too little fuel
  REQUIRE_FALSE(r.all_consistent());
  CHECK(*r.first_divergence == 0);
  CHECK(r.steps.size() == 1);
  CHECK(r.steps[0].note.find("out-of-fuel") != std::string::npos);
}
