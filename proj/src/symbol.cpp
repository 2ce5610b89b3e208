#include "rikit/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace rikit {

namespace {

// deque keeps references to stored names stable across push_back
struct InternTable {
  std::shared_mutex mu;
  std::deque<std::string> names{""};
  std::unordered_map<std::string_view, std::uint32_t> ids{{std::string_view{""}, 0}};
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  InternTable& t = table();
  {
    std::shared_lock lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return Symbol(it->second);
  }
  std::unique_lock lock(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return Symbol(it->second);
  auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(std::string_view(t.names.back()), id);
  return Symbol(id);
}

const std::string& Symbol::str() const {
  InternTable& t = table();
  std::shared_lock lock(t.mu);
  return t.names[id_];
}

}  // namespace rikit
