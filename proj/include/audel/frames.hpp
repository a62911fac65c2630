// Agent-update frames: events with per-agent observability, sum (add) and
// difference (delete) relations, plus pre- and postconditions.  A plain
// action frame is the special case with empty add and delete relations.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "audel/model.hpp"
#include "audel/syntax.hpp"

namespace audel {

// Per-fluent effect; fluents absent from the map are left unchanged.
struct Postcondition {
  std::map<Fluent, bool> effects;  // true = set-true, false = set-false

  enum class Effect { SetTrue, SetFalse, NoChange };
  Effect effect(const Fluent& f) const {
    auto it = effects.find(f);
    if (it == effects.end()) return Effect::NoChange;
    return it->second ? Effect::SetTrue : Effect::SetFalse;
  }
};

struct AgentUpdateFrame {
  std::string name;
  std::vector<std::string> events;  // labels; the index is the event id
  std::map<AgentName, Relation> obs;
  std::map<AgentName, Relation> add;  // may mention agents outside the model
  std::map<AgentName, Relation> del;
  std::vector<FormulaPtr> pre;        // indexed by event; EL only
  std::vector<Postcondition> post;    // indexed by event
  std::optional<int> designated;      // default event, when the file has one

  int event_index(const std::string& label) const;  // -1 when absent
  int require_event(const std::string& label) const;
  const Relation& obs_of(const AgentName& a) const;
  const Relation& add_of(const AgentName& a) const;
  const Relation& del_of(const AgentName& a) const;
  const FormulaPtr& pre_of(int event) const;
  const Postcondition& post_of(int event) const;

  // Every agent mentioned in obs, add or del.
  std::set<AgentName> agent_names() const;

  // Ensures pre/post vectors cover every event (⊤ / all-no-change).
  void fill_defaults();
};

// Empty iff all invariants hold: preconditions are update-free, relation
// endpoints are declared events, postcondition fluents fit the signature.
std::vector<Violation> validate_frame(const AgentUpdateFrame& u,
                                      Signature& signature);

// Agents added / deleted by the event (any arrow target counts).
std::set<AgentName> add_set(const AgentUpdateFrame& u, int event);
std::set<AgentName> del_set(const AgentUpdateFrame& u, int event);
std::set<AgentName> add_set(const AgentUpdateFrame& u, const std::string& ev);
std::set<AgentName> del_set(const AgentUpdateFrame& u, const std::string& ev);

// Agents whose only observability arrow at the event is the self-loop.
std::set<AgentName> observers(const AgentUpdateFrame& u, int event);
std::set<AgentName> observers(const AgentUpdateFrame& u,
                              const std::string& ev);

// Size used when a frame is charged to a formula's length:
// events + agents + 3·|A|·|E|² relation capacity + precondition node counts
// + two units per explicit postcondition assignment.
std::size_t frame_size(const AgentUpdateFrame& u);

}  // namespace audel
