#pragma once

#include <vector>

#include "rikit/universal.hpp"

namespace rikit {

// Fixes the first argument of a coded parametric family, yielding the code of
// the specialized family. Purely syntactic: the result embeds the original
// code verbatim under an application node and never evaluates it.
//   interpret(specialize(g, x), a, fuel) == interpret2(g, x, a, fuel)
// Throws LiftError when x contains a closure.
Code specialize(const Code& g, const ValueRef& x);

// Left fold of specialize; an empty list returns g unchanged.
Code specialize_many(const Code& g, const std::vector<ValueRef>& xs);

// specialize(p, p-as-code): the self-application that powers every
// self-referential construction here.
Code diagonal(const Code& p);

}  // namespace rikit
