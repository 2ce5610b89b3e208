#include "rikit/dynlogic.hpp"

#include <cctype>
#include <sstream>

namespace rikit {

DynamicFrame::DynamicFrame(std::vector<std::string> worlds,
                           std::map<std::string, std::vector<Pred>> events)
    : worlds_(std::move(worlds)), events_(std::move(events)) {
  if (worlds_.empty()) throw FrameError("frame needs at least one world");
  if (worlds_.size() > 64) throw FrameError("frames are capped at 64 worlds");
  for (auto& [name, rel] : events_) {
    if (rel.size() != worlds_.size()) throw FrameError("relation rows must cover every world");
    for (Pred row : rel) {
      if (!pred_subset(row, all_worlds())) throw FrameError("relation escapes the world set");
    }
  }
}

Pred DynamicFrame::all_worlds() const {
  return worlds_.size() == 64 ? ~Pred{0} : ((Pred{1} << worlds_.size()) - 1);
}

int DynamicFrame::world_index(const std::string& name) const {
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::string> DynamicFrame::event_names() const {
  std::vector<std::string> out;
  out.reserve(events_.size());
  for (const auto& [name, rel] : events_) out.push_back(name);
  return out;
}

const std::vector<Pred>& DynamicFrame::relation(const std::string& event) const {
  auto it = events_.find(event);
  if (it == events_.end()) throw FrameError("unknown event '" + event + "'");
  return it->second;
}

Pred DynamicFrame::sp(Pred a, const std::string& event) const {
  const auto& rel = relation(event);
  Pred out = 0;
  for (std::size_t w = 0; w < worlds_.size(); ++w) {
    if (a & (Pred{1} << w)) out |= rel[w];
  }
  return out;
}

Pred DynamicFrame::wp(const std::string& event, Pred b) const {
  const auto& rel = relation(event);
  Pred out = 0;
  for (std::size_t w = 0; w < worlds_.size(); ++w) {
    if (pred_subset(rel[w], b)) out |= Pred{1} << w;
  }
  return out;
}

bool DynamicFrame::hoare(Pred pre, const std::string& event, Pred post) const {
  return pred_subset(sp(pre, event), post);
}

bool DynamicFrame::hoare(const HoareTriple& t) const { return hoare(t.pre, t.event, t.post); }

DynamicFrame DynamicFrame::parse(const std::string& text) {
  std::vector<std::string> worlds;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> edges;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> words;
    std::string w;
    while (ls >> w) words.push_back(w);
    if (words.empty()) continue;
    if (words[0] == "worlds") {
      if (!worlds.empty()) throw FrameError("line " + std::to_string(lineno) + ": duplicate worlds line");
      worlds.assign(words.begin() + 1, words.end());
      if (worlds.empty()) throw FrameError("line " + std::to_string(lineno) + ": empty world list");
      continue;
    }
    if (words[0] == "rel") {
      if (words.size() != 4 || words[1].empty() || words[1].back() != ':') {
        throw FrameError("line " + std::to_string(lineno) + ": expected 'rel <name>: w w''");
      }
      std::string name = words[1].substr(0, words[1].size() - 1);
      edges[name].emplace_back(words[2], words[3]);
      continue;
    }
    throw FrameError("line " + std::to_string(lineno) + ": unknown directive '" + words[0] + "'");
  }
  if (worlds.empty()) throw FrameError("missing worlds line");

  DynamicFrame partial(worlds, {});
  std::map<std::string, std::vector<Pred>> events;
  for (const auto& [name, pairs] : edges) {
    std::vector<Pred> rel(worlds.size(), 0);
    for (const auto& [from, to] : pairs) {
      int f = partial.world_index(from);
      int t = partial.world_index(to);
      if (f < 0) throw FrameError("unknown world '" + from + "' in rel " + name);
      if (t < 0) throw FrameError("unknown world '" + to + "' in rel " + name);
      rel[f] |= Pred{1} << t;
    }
    events[name] = std::move(rel);
  }
  return DynamicFrame(std::move(worlds), std::move(events));
}

Pred DynamicFrame::parse_pred(const std::string& comma_list) const {
  Pred out = 0;
  std::string token;
  std::istringstream in(comma_list);
  while (std::getline(in, token, ',')) {
    // trim
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.erase(token.begin());
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.pop_back();
    if (token.empty()) continue;
    if (token == "*") {
      out |= all_worlds();
      continue;
    }
    int w = world_index(token);
    if (w < 0) throw FrameError("unknown world '" + token + "'");
    out |= Pred{1} << w;
  }
  return out;
}

std::string DynamicFrame::show_pred(Pred p) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t w = 0; w < worlds_.size(); ++w) {
    if (p & (Pred{1} << w)) {
      if (!first) out += ",";
      out += worlds_[w];
      first = false;
    }
  }
  return out + "}";
}

}  // namespace rikit
