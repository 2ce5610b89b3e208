#include "rikit/smn.hpp"

namespace rikit {

Code specialize(const Code& g, const ValueRef& x) {
  return Code{tapp(g.term, lift(x))};
}

Code specialize_many(const Code& g, const std::vector<ValueRef>& xs) {
  Code acc = g;
  for (const ValueRef& x : xs) acc = specialize(acc, x);
  return acc;
}

Code diagonal(const Code& p) { return specialize(p, vcode(p)); }

}  // namespace rikit
