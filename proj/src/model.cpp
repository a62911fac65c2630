#include "audel/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace audel {

void Relation::add(int from, int to) {
  if (adj_[from].insert(to).second) ++pair_count_;
}

bool Relation::contains(int from, int to) const {
  auto it = adj_.find(from);
  return it != adj_.end() && it->second.count(to) > 0;
}

const std::set<int>& Relation::successors(int from) const {
  static const std::set<int> kEmpty;
  auto it = adj_.find(from);
  return it == adj_.end() ? kEmpty : it->second;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count_);
  for (const auto& [from, tos] : adj_) {
    for (int to : tos) out.emplace_back(from, to);
  }
  return out;
}

Relation transitive_closure(const Relation& r) {
  Relation out = r;
  // Worklist of arrows; composing (a,b)(b,c) until a fixpoint.
  std::vector<std::pair<int, int>> work = out.pairs();
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int c : out.successors(b)) {
      if (!out.contains(a, c)) {
        out.add(a, c);
        work.emplace_back(a, c);
      }
    }
  }
  return out;
}

bool is_transitive(const Relation& r) {
  for (const auto& [a, b] : r.pairs()) {
    for (int c : r.successors(b)) {
      if (!r.contains(a, c)) return false;
    }
  }
  return true;
}

namespace {
std::uint64_t next_uid() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}
}  // namespace

KripkeModel::KripkeModel() : uid_(next_uid()) {}

KripkeModel::KripkeModel(const KripkeModel& other)
    : worlds(other.worlds),
      agents(other.agents),
      relations(other.relations),
      valuation(other.valuation),
      designated(other.designated),
      uid_(next_uid()) {}

KripkeModel& KripkeModel::operator=(const KripkeModel& other) {
  if (this != &other) {
    worlds = other.worlds;
    agents = other.agents;
    relations = other.relations;
    valuation = other.valuation;
    designated = other.designated;
    uid_ = next_uid();
  }
  return *this;
}

int KripkeModel::world_index(const std::string& label) const {
  auto it = std::find(worlds.begin(), worlds.end(), label);
  return it == worlds.end() ? -1 : static_cast<int>(it - worlds.begin());
}

int KripkeModel::require_world(const std::string& label) const {
  int idx = world_index(label);
  if (idx < 0) throw std::out_of_range("unknown world '" + label + "'");
  return idx;
}

bool KripkeModel::has_agent(const AgentName& a) const {
  return std::find(agents.begin(), agents.end(), a) != agents.end();
}

void KripkeModel::declare_agent(const AgentName& a) {
  if (!has_agent(a)) agents.push_back(a);
}

const Relation& KripkeModel::relation(const AgentName& a) const {
  static const Relation kEmpty;
  auto it = relations.find(a);
  return it == relations.end() ? kEmpty : it->second;
}

bool KripkeModel::holds(const Fluent& f, int world) const {
  auto it = valuation.find(f);
  return it != valuation.end() && it->second.count(world) > 0;
}

std::vector<Violation> validate(const KripkeModel& m) {
  std::vector<Violation> out;
  const int n = static_cast<int>(m.worlds.size());
  auto in_range = [n](int w) { return w >= 0 && w < n; };

  for (const auto& [agent, rel] : m.relations) {
    if (!m.has_agent(agent)) {
      out.push_back({"undeclared-agent",
                     "relation declared for unknown agent '" + agent + "'"});
    }
    for (const auto& [from, to] : rel.pairs()) {
      if (!in_range(from) || !in_range(to)) {
        out.push_back({"dangling-endpoint",
                       "agent '" + agent + "' arrow (" + std::to_string(from) +
                           "," + std::to_string(to) +
                           ") references an unknown world"});
      }
    }
    for (const auto& [a, b] : rel.pairs()) {
      for (int c : rel.successors(b)) {
        if (!rel.contains(a, c)) {
          out.push_back(
              {"non-transitive",
               "agent '" + agent + "' misses arrow (" +
                   (in_range(a) ? m.worlds[a] : std::to_string(a)) + "," +
                   (in_range(c) ? m.worlds[c] : std::to_string(c)) + ")"});
        }
      }
    }
  }
  for (const auto& [fluent, where] : m.valuation) {
    for (int w : where) {
      if (!in_range(w)) {
        out.push_back({"dangling-valuation-world",
                       "fluent '" + fluent.str() +
                           "' true at unknown world id " + std::to_string(w)});
      }
    }
  }
  if (m.designated && !in_range(*m.designated)) {
    out.push_back({"dangling-designated", "designated world id " +
                                              std::to_string(*m.designated) +
                                              " is out of range"});
  }
  // Duplicate world labels would make indices ambiguous.
  std::set<std::string> seen;
  for (const auto& w : m.worlds) {
    if (!seen.insert(w).second) {
      out.push_back({"duplicate-world", "world label '" + w + "' repeats"});
    }
  }
  return out;
}

std::set<AgentName> agency(const KripkeModel& m, int world) {
  if (world < 0 || world >= static_cast<int>(m.worlds.size())) {
    throw std::out_of_range("unknown world id " + std::to_string(world));
  }
  std::set<AgentName> out;
  for (const auto& [agent, rel] : m.relations) {
    if (!rel.successors(world).empty()) out.insert(agent);
  }
  return out;
}

std::set<AgentName> agency(const KripkeModel& m, const std::string& world) {
  return agency(m, m.require_world(world));
}

std::string to_dot(const KripkeModel& m) {
  std::ostringstream os;
  os << "digraph kripke {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < m.worlds.size(); ++i) {
    std::string label = m.worlds[i];
    std::string facts;
    for (const auto& [fluent, where] : m.valuation) {
      if (where.count(static_cast<int>(i))) {
        facts += (facts.empty() ? "" : " ") + fluent.str();
      }
    }
    if (!facts.empty()) label += "\\n" + facts;
    os << "  n" << i << " [label=\"" << label << "\"";
    if (m.designated && *m.designated == static_cast<int>(i)) {
      os << ", peripheries=2";
    }
    os << "];\n";
  }
  // Merge parallel edges into one label per (from,to).
  std::map<std::pair<int, int>, std::vector<AgentName>> merged;
  for (const auto& [agent, rel] : m.relations) {
    for (const auto& pr : rel.pairs()) merged[pr].push_back(agent);
  }
  for (auto& [pr, agents] : merged) {
    std::sort(agents.begin(), agents.end());
    std::string label;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (i) label += ",";
      label += agents[i];
    }
    os << "  n" << pr.first << " -> n" << pr.second << " [label=\"" << label
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace audel
