#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rikit/bigint.hpp"
#include "rikit/symbol.hpp"

namespace rikit {

// Ground (first-order, atomic) values of the object language.
struct UnitV {
  friend bool operator==(UnitV, UnitV) { return true; }
};
using Ground = std::variant<UnitV, bool, BigInt, Symbol>;

bool ground_eq(const Ground& a, const Ground& b);
std::string show_ground(const Ground& g);

enum class PrimOp : std::uint8_t {
  Add,
  Sub,
  Mul,
  Le,
  EqInt,
  EqSym,
  Not,
  CodeEq,  // syntactic equality of two codes
  Spec,    // object-level specializer
  Run,     // object-level universal interpreter
  Size,    // node count of a code
};

int prim_arity(PrimOp op);
const char* prim_name(PrimOp op);

enum class TermKind : std::uint8_t {
  Var,    // de Bruijn index
  Lam,    // kids: body
  App,    // kids: fn, arg
  Lit,    // ground literal
  Pair,   // kids: first, second
  Proj1,  // kids: pair
  Proj2,  // kids: pair
  Inj1,   // kids: payload
  Inj2,   // kids: payload
  Case,   // kids: scrutinee, left body, right body (each body binds one var)
  If,     // kids: condition, then, else
  Fix,    // kids: functional
  Prim,   // kids: args
  Quote,  // kids: quoted closed term
};

// Immutable syntax tree. Terms are shared freely; nothing mutates them after
// construction.
struct Term {
  using Ptr = std::shared_ptr<const Term>;

  TermKind kind;
  int index = -1;       // Var
  Ground lit;           // Lit
  PrimOp op{};          // Prim
  std::vector<Ptr> kids;

  Term() = default;
  Term(Term&&) = default;
  Term(const Term&) = default;
  Term& operator=(Term&&) = default;
  Term& operator=(const Term&) = default;
  // Iterative teardown; lifted values can embed arbitrarily deep chains.
  ~Term();
};

// Builders. `quote` requires a closed argument and `prim` checks arity; both
// throw std::invalid_argument on violation.
Term::Ptr tvar(int index);
Term::Ptr tlam(Term::Ptr body);
Term::Ptr tapp(Term::Ptr fn, Term::Ptr arg);
Term::Ptr tlit(Ground g);
Term::Ptr tint(long long v);
Term::Ptr tint(BigInt v);
Term::Ptr tbool(bool b);
Term::Ptr tunit();
Term::Ptr tsym(Symbol s);
Term::Ptr tpair(Term::Ptr a, Term::Ptr b);
Term::Ptr tproj1(Term::Ptr t);
Term::Ptr tproj2(Term::Ptr t);
Term::Ptr tinj1(Term::Ptr t);
Term::Ptr tinj2(Term::Ptr t);
Term::Ptr tcase(Term::Ptr scrut, Term::Ptr left, Term::Ptr right);
Term::Ptr tif(Term::Ptr c, Term::Ptr t, Term::Ptr e);
Term::Ptr tfix(Term::Ptr body);
Term::Ptr tprim(PrimOp op, std::vector<Term::Ptr> args);
Term::Ptr tquote(Term::Ptr inner);

// Structural equality on de Bruijn trees; with named binders compiled away
// this is exactly alpha-equivalence.
bool term_eq(const Term::Ptr& a, const Term::Ptr& b);

std::size_t term_size(const Term::Ptr& t);

// True when every Var index is bound within `depth` enclosing binders.
bool term_closed(const Term::Ptr& t, int depth = 0);

// Free variables at cutoff or above shifted by `delta`. Quote bodies are
// closed and left untouched.
Term::Ptr term_shift(const Term::Ptr& t, int delta, int cutoff = 0);

}  // namespace rikit
