// Constant-domain Kripke models: worlds, per-agent accessibility relations,
// a fluent valuation and an optional designated world.

#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "audel/syntax.hpp"

namespace audel {

// A binary relation over dense integer ids, stored as adjacency sets.
class Relation {
 public:
  void add(int from, int to);
  bool contains(int from, int to) const;
  bool empty() const { return pair_count_ == 0; }
  std::size_t pair_count() const { return pair_count_; }
  const std::set<int>& successors(int from) const;
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const Relation& other) const { return adj_ == other.adj_; }

 private:
  std::map<int, std::set<int>> adj_;
  std::size_t pair_count_ = 0;
};

// Smallest transitive superset, by worklist propagation.
Relation transitive_closure(const Relation& r);
bool is_transitive(const Relation& r);

struct KripkeModel {
  KripkeModel();
  KripkeModel(const KripkeModel& other);
  KripkeModel& operator=(const KripkeModel& other);
  KripkeModel(KripkeModel&&) = default;
  KripkeModel& operator=(KripkeModel&&) = default;

  std::vector<std::string> worlds;  // labels; the index is the world id
  std::vector<AgentName> agents;    // declared ∪ those with a relation
  std::map<AgentName, Relation> relations;
  std::map<Fluent, std::set<int>> valuation;
  std::optional<int> designated;

  // Identity token used by the evaluation cache; fresh per construction
  // and per copy, stable under move.
  std::uint64_t uid() const { return uid_; }

  int world_index(const std::string& label) const;  // -1 when absent
  int require_world(const std::string& label) const;
  bool has_agent(const AgentName& a) const;
  void declare_agent(const AgentName& a);
  const Relation& relation(const AgentName& a) const;
  bool holds(const Fluent& f, int world) const;

 private:
  std::uint64_t uid_;
};

struct Violation {
  std::string kind;     // e.g. "non-transitive", "dangling-endpoint"
  std::string message;  // human-readable, names the agent and pair
};

// Structural invariants plus per-agent transitivity.  Violations are data,
// not errors.
std::vector<Violation> validate(const KripkeModel& m);

// Agents with at least one outgoing arrow at the world.
std::set<AgentName> agency(const KripkeModel& m, int world);
std::set<AgentName> agency(const KripkeModel& m, const std::string& world);

// Graphviz export.  Parallel edges between the same pair of worlds are
// merged into one edge with a comma-joined agent label; a bidirectional
// pair is rendered as two directed edges.  The designated world is drawn
// with a double border and true fluents are listed inside the node.
std::string to_dot(const KripkeModel& m);

}  // namespace audel
