#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "rikit/term.hpp"

namespace rikit {

// A code is a closed term reified as data. `encode` in universal.hpp is the
// checked constructor; this struct just carries the tree.
struct Code {
  Term::Ptr term;
};

struct Value;
using ValueRef = std::shared_ptr<const Value>;

// Evaluation environment for closures: persistent cons list, innermost
// binding first (index 0).
struct Env {
  ValueRef head;
  std::shared_ptr<const Env> tail;

  Env() = default;
  Env(Env&&) = default;
  Env(const Env&) = default;
  Env& operator=(Env&&) = default;
  Env& operator=(const Env&) = default;
  // Iterative teardown, shared with Value: recursion interleaves closure
  // captures and environment cells into arbitrarily long chains.
  ~Env();
};
using EnvRef = std::shared_ptr<const Env>;

EnvRef env_push(EnvRef env, ValueRef v);
const ValueRef* env_lookup(const EnvRef& env, int index);

struct Value {
  struct PairV {
    ValueRef first, second;
  };
  struct Tagged {
    bool is_left;
    ValueRef inner;
  };
  struct ClosureV {
    EnvRef env;
    Term::Ptr body;
  };

  using Repr = std::variant<Ground, PairV, Tagged, ClosureV, Code>;
  Repr v;

  Value(Repr repr) : v(std::move(repr)) {}  // NOLINT(google-explicit-constructor)
  Value(Value&&) = default;
  Value(const Value&) = default;
  Value& operator=(Value&&) = default;
  Value& operator=(const Value&) = default;
  // Iterative teardown: evaluation can build pair/injection chains deep
  // enough to overflow the stack under default recursive destruction.
  ~Value();
};

ValueRef vground(Ground g);
ValueRef vint(long long i);
ValueRef vint(BigInt i);
ValueRef vbool(bool b);
ValueRef vunit();
ValueRef vsym(Symbol s);
ValueRef vpair(ValueRef a, ValueRef b);
ValueRef vleft(ValueRef inner);
ValueRef vright(ValueRef inner);
ValueRef vclosure(EnvRef env, Term::Ptr body);
ValueRef vcode(Code c);

const Ground* as_ground(const ValueRef& v);
const BigInt* as_int(const ValueRef& v);
const bool* as_bool(const ValueRef& v);
const Symbol* as_sym(const ValueRef& v);
const Value::PairV* as_pair(const ValueRef& v);
const Value::Tagged* as_tagged(const ValueRef& v);
const Value::ClosureV* as_closure(const ValueRef& v);
const Code* as_code(const ValueRef& v);

// First-order: no closure anywhere inside. Exactly the liftable fragment.
bool first_order(const ValueRef& v);

// Structural equality. Closures compare by body term and captured values.
bool value_eq(const ValueRef& a, const ValueRef& b);

std::string show_value(const ValueRef& v);

struct LiftError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Literal term that evaluates back to v without consuming fuel.
// Throws LiftError when v contains a closure.
Term::Ptr lift(const ValueRef& v);

enum class ErrKind : std::uint8_t { TypeMismatch, Unbound, Arity, LiftFailure };
const char* err_kind_name(ErrKind k);

// Result of fuel-bounded evaluation.
struct Outcome {
  enum class Tag : std::uint8_t { Done, OutOfFuel, Error };

  Tag tag = Tag::OutOfFuel;
  ValueRef value;      // Done
  ErrKind err{};       // Error
  std::string detail;  // Error

  static Outcome done(ValueRef v);
  static Outcome out_of_fuel();
  static Outcome error(ErrKind k, std::string detail);

  bool is_done() const { return tag == Tag::Done; }
  bool is_out_of_fuel() const { return tag == Tag::OutOfFuel; }
  bool is_error() const { return tag == Tag::Error; }
};

// Equality of observable results: tag, value for Done, error kind for Error.
// Error detail strings are diagnostics and do not participate.
bool outcome_eq(const Outcome& a, const Outcome& b);

std::string show_outcome(const Outcome& o);

}  // namespace rikit
