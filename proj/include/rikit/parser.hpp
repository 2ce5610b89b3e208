#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rikit/term.hpp"

namespace rikit {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(std::string msg, int line, int col)
      : std::runtime_error(std::move(msg) + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
};

// Parses one program from S-expression surface syntax into a de Bruijn tree.
// Grammar (README has the full reference):
//   (lam <name> <body>)            binder
//   (<fn> <arg> ...)               application, left associative
//   (app <fn> <arg> ...)           explicit application
//   (quote <term>)                 code literal; <term> must be closed
//   (pair a b) (fst t) (snd t)     products
//   (inl t) (inr t)                sums
//   (case s <x> <left> <y> <right>) sum elimination, binds x / y
//   (if c t e)                     boolean conditional
//   (fix t)                        fixpoint of a functional
//   (add a b) (sub a b) (mul a b) (le a b) (eq-int a b) (eq-sym a b)
//   (not b) (code-eq c d) (spec c x) (run c a) (size c)
//   integers: 42, -7 (arbitrary precision); booleans: true, false; unit
//   symbols: 'name
Term::Ptr parse(std::string_view text);

// Canonical S-expression rendering; parse(print_term(t)) reproduces t and
// print_term is idempotent over parse.
std::string print_term(const Term::Ptr& t);

}  // namespace rikit
