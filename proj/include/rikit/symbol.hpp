#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rikit {

// Interned symbol. The intern table is append-only and guarded by a shared
// mutex, so symbols can be created and read from concurrent suite workers.
class Symbol {
 public:
  Symbol() : id_(0) {}  // the empty symbol ""

  static Symbol intern(std::string_view name);

  const std::string& str() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
  friend bool operator<(Symbol a, Symbol b) { return a.str() < b.str(); }

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

}  // namespace rikit
