#pragma once

#include <cstdint>
#include <vector>

#include "rikit/belief.hpp"
#include "rikit/dynlogic.hpp"

namespace rikit {

// Deterministic, platform-independent generator. Each suite case derives its
// own stream from (seed, case index), so results do not depend on execution
// order and parallel runs reproduce serial ones exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_case(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);          // uniform-ish in [0, n)
  int range(int lo, int hi);                     // inclusive
  bool chance(int percent);

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[below(pool.size())];
  }

 private:
  std::uint64_t state_;
};

// Expression generators. Bodies are built against a stack of in-scope
// variables annotated with the flavor of value the caller intends to feed in,
// so most samples exercise real computation instead of dying on the first
// primitive. Type errors still occur by design and are part of the oracle
// comparison; unbounded recursion is excluded, fix appears only as bounded
// countdown loops.
enum class Flavor { Int, Bool, Sym, PairIntInt, SumInt, Any };

ValueRef gen_value(Rng& rng, Flavor flavor, int depth = 0);
ValueRef gen_first_order(Rng& rng, int depth = 0);

// (lam a body): a unary program whose argument has the returned flavor.
struct UnaryGen {
  Term::Ptr term;
  Flavor arg;
};
UnaryGen gen_unary(Rng& rng);

// (lam x (lam a body)) for the specializer law.
struct BinaryGen {
  Term::Ptr term;
  Flavor first;
  Flavor second;
};
BinaryGen gen_binary(Rng& rng);

// (lam p (lam a body)) with p used only through total code operations
// (size, code-eq, or ignored), so the fixpoint law quantifies over total
// transformations.
UnaryGen gen_total_on_code(Rng& rng);

// (lam l (lam x (lam a body))) with the same totality discipline on l.
BinaryGen gen_total_ternary_on_code(Rng& rng);

MealyMachine gen_mealy(Rng& rng, int max_states = 6, int max_inputs = 4, int max_outputs = 4);
std::vector<Symbol> gen_stream(Rng& rng, const MealyMachine& m, int length);

DynamicFrame gen_frame(Rng& rng, int worlds, int events);

}  // namespace rikit
