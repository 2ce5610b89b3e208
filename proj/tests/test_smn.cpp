#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rikit/gen.hpp"
#include "rikit/parser.hpp"
#include "rikit/smn.hpp"

using namespace rikit;

TEST_CASE("specialize fixes the first argument") {
  // constant family: every input maps to the pinned 9
  Code konst = encode(parse("(lam x (lam a x))"));
  Code k9 = specialize(konst, vint(9));
  for (int a : {1, -3, 100}) {
    Outcome o = interpret(k9, vint(a), 100);
    REQUIRE(o.is_done());
    CHECK(*as_int(o.value) == BigInt(9));
  }

  // eval oracle: ((lam x (lam a (mul x a))) 3) 5 evaluates to 15
  Code mul = encode(parse("(lam x (lam a (mul x a)))"));
  Outcome oracle = eval(parse("(((lam x (lam a (mul x a))) 3) 5)"), 100);
  REQUIRE(oracle.is_done());
  CHECK(*as_int(oracle.value) == BigInt(15));
  Outcome via_spec = interpret(specialize(mul, vint(3)), vint(5), 100);
  REQUIRE(via_spec.is_done());
  CHECK(value_eq(via_spec.value, oracle.value));
}

TEST_CASE("specialize refuses closures") {
  Code g = encode(parse("(lam x (lam a x))"));
  CHECK_THROWS_AS(specialize(g, vclosure(nullptr, tvar(0))), LiftError);
}

TEST_CASE("specialize is syntactic: the family is embedded verbatim") {
  Code g = encode(parse("(lam x (lam a (add x a)))"));
  Code s = specialize(g, vint(4));
  REQUIRE(s.term->kind == TermKind::App);
  CHECK(term_eq(s.term->kids[0], g.term));   // never rewritten
  CHECK(term_eq(s.term->kids[1], tint(4)));  // the lifted argument

  // a diverging family is not evaluated at specialization time
  Code diverging = encode(parse("(lam x (lam a ((lam w (w w)) (lam w (w w)))))"));
  CHECK_NOTHROW(specialize(diverging, vint(1)));
}

TEST_CASE("s-m-n law on generated families") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    BinaryGen g = gen_binary(rng);
    Code gc = encode(g.term);
    ValueRef x = gen_value(rng, g.first);
    ValueRef a = gen_value(rng, g.second);
    Outcome lhs = interpret(specialize(gc, x), a, 50000);
    Outcome rhs = interpret2(gc, x, a, 50000);
    CHECK(outcome_eq(lhs, rhs));
  }
}

TEST_CASE("specialize_many folds left") {
  Code g = encode(parse("(lam x (lam y (lam a (add x (mul y a)))))"));
  CHECK(code_eq(specialize_many(g, {}), g));
  CHECK(code_eq(specialize_many(g, {vint(2)}), specialize(g, vint(2))));

  Code tw = specialize_many(g, {vint(2), vint(3)});
  CHECK(code_eq(tw, specialize(specialize(g, vint(2)), vint(3))));

  // extensional agreement with the double application, via the eval oracle
  Outcome oracle = eval(parse("((((lam x (lam y (lam a (add x (mul y a))))) 2) 3) 10)"), 100);
  REQUIRE(oracle.is_done());
  CHECK(*as_int(oracle.value) == BigInt(32));
  Outcome got = interpret(tw, vint(10), 100);
  REQUIRE(got.is_done());
  CHECK(value_eq(got.value, oracle.value));
}

TEST_CASE("object-level spec agrees with the host specializer") {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    BinaryGen g = gen_binary(rng);
    Code gc = encode(g.term);
    ValueRef x = gen_value(rng, g.first);
    Code meta = specialize(gc, x);
    Outcome obj = eval(tprim(PrimOp::Spec, {tquote(gc.term), lift(x)}), 100);
    REQUIRE(obj.is_done());
    const Code* oc = as_code(obj.value);
    REQUIRE(oc != nullptr);
    CHECK(term_eq(oc->term, meta.term));
  }
}

TEST_CASE("diagonal is self-specialization") {
  // p that reports the size of its first argument: the diagonal reports p
  Code p = encode(parse("(lam q (lam a (size q)))"));
  Code d = diagonal(p);
  CHECK(term_eq(d.term, specialize(p, vcode(p)).term));
  Outcome o = interpret(d, vunit(), 1000);
  REQUIRE(o.is_done());
  CHECK(*as_int(o.value) == BigInt(static_cast<long long>(term_size(p.term))));

  // p ignoring q: the diagonal is the identity on a
  Code ign = encode(parse("(lam q (lam a a))"));
  Outcome id = interpret(diagonal(ign), vint(12), 1000);
  REQUIRE(id.is_done());
  CHECK(*as_int(id.value) == BigInt(12));
}
