#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rikit {

struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Predicates over a finite frame are subsets of worlds, packed into a mask.
using Pred = std::uint64_t;

// Finite world set with named transition relations. The predicate lattice is
// the full powerset, so every lattice operation is a bit operation and the
// Galois checks can run exhaustively.
class DynamicFrame {
 public:
  DynamicFrame(std::vector<std::string> worlds,
               std::map<std::string, std::vector<Pred>> events);

  // Text format:
  //   worlds w0 w1 w2
  //   rel step: w0 w1
  //   rel step: w1 w2
  // '#' starts a comment; repeated rel lines accumulate edges.
  static DynamicFrame parse(const std::string& text);

  std::size_t world_count() const { return worlds_.size(); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  std::vector<std::string> event_names() const;
  Pred all_worlds() const;

  int world_index(const std::string& name) const;  // -1 when absent

  // Strongest postcondition: the image of A under the event relation.
  Pred sp(Pred a, const std::string& event) const;

  // Weakest precondition: worlds whose every successor lands in B.
  Pred wp(const std::string& event, Pred b) const;

  // Triple validity via the sp route: sp(pre, e) included in post. The wp
  // route (pre included in wp(e, post)) must agree; the suites check both.
  bool hoare(Pred pre, const std::string& event, Pred post) const;
  bool hoare(const struct HoareTriple& t) const;

  Pred parse_pred(const std::string& comma_list) const;
  std::string show_pred(Pred p) const;

 private:
  const std::vector<Pred>& relation(const std::string& event) const;

  std::vector<std::string> worlds_;
  std::map<std::string, std::vector<Pred>> events_;  // name -> successor mask per world
};

struct HoareTriple {
  Pred pre;
  std::string event;
  Pred post;
};

inline bool pred_subset(Pred a, Pred b) { return (a & ~b) == 0; }

}  // namespace rikit
