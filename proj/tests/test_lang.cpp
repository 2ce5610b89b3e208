#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rikit/eval.hpp"
#include "rikit/gen.hpp"
#include "rikit/parser.hpp"

using namespace rikit;

namespace {

Outcome ev(const std::string& src, Fuel fuel = 1000) { return eval(parse(src), fuel); }

bool done_int(const Outcome& o, long long want) {
  return o.is_done() && as_int(o.value) != nullptr && *as_int(o.value) == BigInt(want);
}

}  // namespace

TEST_CASE("bigint arithmetic and round trips") {
  CHECK(BigInt::parse("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
  CHECK((BigInt(1000000000) * BigInt(1000000000)).str() == "1000000000000000000");
  CHECK((BigInt(-5) + BigInt(7)) == BigInt(2));
  CHECK((BigInt(5) - BigInt(7)) == BigInt(-2));
  CHECK(BigInt(-7) <= BigInt(-7));
  CHECK(BigInt(-8) < BigInt(-7));
  CHECK_FALSE(BigInt(7) < BigInt(-8));
  CHECK(BigInt::parse("-0") == BigInt(0));
  CHECK_THROWS_AS(BigInt::parse("12x"), std::invalid_argument);

  // cross-check against native arithmetic on a spread of smalls
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    long long a = static_cast<long long>(rng.below(2000001)) - 1000000;
    long long b = static_cast<long long>(rng.below(2000001)) - 1000000;
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    CHECK((BigInt(a) <= BigInt(b)) == (a <= b));
    CHECK(BigInt(a).str() == std::to_string(a));
  }
}

TEST_CASE("parse builds de Bruijn trees") {
  Term::Ptr id = parse("(lam a a)");
  CHECK(id->kind == TermKind::Lam);
  CHECK(id->kids[0]->kind == TermKind::Var);
  CHECK(id->kids[0]->index == 0);

  Term::Ptr q = parse("(quote (lam a a))");
  CHECK(q->kind == TermKind::Quote);
  CHECK(term_eq(q->kids[0], id));

  Term::Ptr add1 = parse("(lam a (add a 1))");
  CHECK(add1->kind == TermKind::Lam);
  CHECK(add1->kids[0]->kind == TermKind::Prim);
  CHECK(add1->kids[0]->op == PrimOp::Add);
  CHECK(print_term(add1) == "(lam a (add a 1))");

  // nested binders resolve to the right indices
  Term::Ptr k = parse("(lam x (lam y x))");
  CHECK(k->kids[0]->kids[0]->index == 1);
}

TEST_CASE("parse errors carry location and kind") {
  CHECK_THROWS_AS(parse("(lam a b)"), ParseError);     // unbound identifier
  CHECK_THROWS_AS(parse("(lam a"), ParseError);        // unclosed
  CHECK_THROWS_AS(parse("(add 1)"), ParseError);       // wrong arity
  CHECK_THROWS_AS(parse("(lam a a) junk"), ParseError);
  CHECK_THROWS_AS(parse("(quote (lam a b))"), ParseError);  // open quote body
  CHECK_THROWS_AS(parse("(lam lam a)"), ParseError);   // reserved binder
  try {
    parse("(lam a\n  (add a b))");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("unbound") != std::string::npos);
  }
}

TEST_CASE("print then parse is the identity on generated terms") {
  Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    UnaryGen g = gen_unary(rng);
    std::string text = print_term(g.term);
    Term::Ptr back = parse(text);
    CHECK(term_eq(back, g.term));
    CHECK(print_term(back) == text);  // canonical form is stable
  }
}

TEST_CASE("explicit app form parses to the implicit one") {
  CHECK(term_eq(parse("(app (lam a a) 7)"), parse("((lam a a) 7)")));
  // multi-argument application folds left
  CHECK(term_eq(parse("(lam f (lam x (f x x)))"), parse("(lam f (lam x ((f x) x)))")));
}

TEST_CASE("evaluation of the worked examples") {
  CHECK(done_int(ev("((lam a a) 7)", 10), 7));
  CHECK(done_int(ev("(add 41 1)", 10), 42));
  CHECK(ev("((lam x (x x)) (lam x (x x)))", 1000).is_out_of_fuel());
  CHECK(ev("((fix (lam f (lam n (f n)))) 0)", 1000).is_out_of_fuel());
  CHECK(done_int(ev("((fix (lam f (lam n (if (le n 0) 0 (add n (f (sub n 1))))))) 10)", 1000),
                 55));
  CHECK(done_int(ev("(fst (pair 3 4))"), 3));
  CHECK(done_int(ev("(snd (pair 3 4))"), 4));
  CHECK(done_int(ev("(case (inl 5) x (add x 1) y (sub y 1))"), 6));
  CHECK(done_int(ev("(case (inr 5) x (add x 1) y (sub y 1))"), 4));
  CHECK(done_int(ev("(if (le 1 2) 10 20)"), 10));
  Outcome t = ev("(eq-sym 'red 'red)");
  CHECK((t.is_done() && as_bool(t.value) != nullptr && *as_bool(t.value)));
  Outcome f = ev("(not true)");
  CHECK((f.is_done() && as_bool(f.value) != nullptr && !*as_bool(f.value)));
}

TEST_CASE("evaluation errors are typed") {
  CHECK(ev("(add true 1)").err == ErrKind::TypeMismatch);
  CHECK(ev("(7 8)").err == ErrKind::TypeMismatch);
  CHECK(ev("(fst 3)").err == ErrKind::TypeMismatch);
  CHECK(ev("(case 3 x x y y)").err == ErrKind::TypeMismatch);
  CHECK(ev("(if 3 1 2)").err == ErrKind::TypeMismatch);
  CHECK(ev("(run 5 1)").err == ErrKind::TypeMismatch);
  CHECK(ev("(spec (quote (lam a a)) (lam b b))").err == ErrKind::LiftFailure);
}

TEST_CASE("fuel monotonicity: non-out-of-fuel outcomes are stable") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    UnaryGen g = gen_unary(rng);
    ValueRef a = gen_value(rng, g.arg);
    Term::Ptr prog = tapp(g.term, lift(a));
    Fuel k = static_cast<Fuel>(rng.below(300));
    Outcome at_k = eval(prog, k);
    Outcome more = eval(prog, k + 1 + static_cast<Fuel>(rng.below(1000)));
    if (!at_k.is_out_of_fuel()) {
      CHECK(outcome_eq(at_k, more));
    } else {
      // once done, done at every larger budget (contrapositive probe)
      Outcome lots = eval(prog, 100000);
      if (!more.is_out_of_fuel()) CHECK(outcome_eq(more, lots));
    }
  }
}

TEST_CASE("eval purity: identical inputs give identical outcomes") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    UnaryGen g = gen_unary(rng);
    ValueRef a = gen_value(rng, g.arg);
    Term::Ptr prog = tapp(g.term, lift(a));
    Outcome one = eval(prog, 5000);
    Outcome two = eval(prog, 5000);
    CHECK(outcome_eq(one, two));
    CHECK(show_outcome(one) == show_outcome(two));
  }
}

TEST_CASE("copy/discard: duplicating or dropping a first-order input is inert") {
  Rng rng(17);
  Term::Ptr dup_body = tpair(tvar(0), tvar(0));  // uses the variable twice
  Term::Ptr drop_body = tint(5);                 // ignores it
  for (int i = 0; i < 200; ++i) {
    ValueRef v = gen_first_order(rng);
    Term::Ptr lv = lift(v);

    Outcome dup = eval(tapp(tlam(dup_body), lv), 100);
    Outcome direct = eval(tpair(lv, lv), 100);
    REQUIRE(dup.is_done());
    CHECK(value_eq(dup.value, direct.value));

    Outcome drop = eval(tapp(tlam(drop_body), lv), 100);
    REQUIRE(drop.is_done());
    CHECK(done_int(drop, 5));
  }
}

TEST_CASE("lift embeds first-order values as zero-cost literals") {
  CHECK(term_eq(lift(vint(7)), tint(7)));
  CHECK(term_eq(lift(vpair(vbool(true), vunit())), tpair(tbool(true), tunit())));

  Code c{parse("(lam a (add a 1))")};
  Term::Ptr lifted = lift(vcode(c));
  Outcome back = eval(lifted, 0);  // fuel-free by design
  REQUIRE(back.is_done());
  CHECK(value_eq(back.value, vcode(c)));

  Rng rng(19);
  for (int i = 0; i < 300; ++i) {
    ValueRef v = gen_first_order(rng);
    Outcome round = eval(lift(v), 0);
    REQUIRE(round.is_done());
    CHECK(value_eq(round.value, v));
  }

  // injectivity probe: distinct values lift to distinct terms
  for (int i = 0; i < 100; ++i) {
    ValueRef a = gen_first_order(rng);
    ValueRef b = gen_first_order(rng);
    if (!value_eq(a, b)) CHECK_FALSE(term_eq(lift(a), lift(b)));
  }

  CHECK_THROWS_AS(lift(vclosure(nullptr, tvar(0))), LiftError);
}

TEST_CASE("term_eq is alpha equivalence") {
  CHECK(term_eq(parse("(lam a a)"), parse("(lam b b)")));
  CHECK_FALSE(term_eq(parse("(lam a a)"), parse("(lam a (pair a a))")));
  CHECK(term_eq(parse("(lam x (lam y x))"), parse("(lam p (lam q p))")));
  CHECK_FALSE(term_eq(parse("(lam x (lam y x))"), parse("(lam x (lam y y))")));
}

TEST_CASE("quote requires closed terms, prim arity is enforced") {
  CHECK_THROWS_AS(tquote(tvar(0)), std::invalid_argument);
  CHECK_THROWS_AS(tprim(PrimOp::Add, {tint(1)}), std::invalid_argument);
  CHECK_THROWS_AS(tprim(PrimOp::Not, {tbool(true), tbool(false)}), std::invalid_argument);
  // quoted programs cannot capture enclosing binders
  CHECK_THROWS_AS(parse("(lam a (quote a))"), ParseError);
}

TEST_CASE("deep value chains build, lift, print, and tear down") {
  // a loop consing a pair chain far past any plausible recursion limit
  Term::Ptr body = tif(tprim(PrimOp::Le, {tvar(0), tint(0)}), tunit(),
                       tpair(tvar(0), tapp(tvar(1), tprim(PrimOp::Sub, {tvar(0), tint(1)}))));
  Term::Ptr deep = tapp(tfix(tlam(tlam(body))), tint(150000));
  Outcome built = eval(deep, 10000000);
  REQUIRE(built.is_done());

  // lift the chain into a code through the object-level specializer and
  // render it; every step here used to be a recursion hazard
  Term::Ptr prog = tprim(PrimOp::Spec, {tquote(tlam(tlam(tvar(1)))), deep});
  Outcome spec = eval(prog, 10000000);
  REQUIRE(spec.is_done());
  REQUIRE(as_code(spec.value) != nullptr);
  std::string rendered = show_value(spec.value);
  CHECK(rendered.size() > 100000);
  CHECK(value_eq(built.value, built.value));
}

TEST_CASE("integers do not overflow") {
  Outcome big = ev("(mul 123456789012345678901 1000000000000)");
  REQUIRE(big.is_done());
  CHECK(as_int(big.value)->str() == "123456789012345678901000000000000");

  // squaring past 64 bits inside a loop
  Outcome sq = ev("((fix (lam f (lam n (if (le n 0) 2 (mul (f (sub n 1)) (f (sub n 1))))))) 7)",
                  100000);
  REQUIRE(sq.is_done());
  CHECK(as_int(sq.value)->str() == "340282366920938463463374607431768211456");  // 2^128
}
