#include "audel/frames.hpp"

#include <algorithm>
#include <stdexcept>

namespace audel {

int AgentUpdateFrame::event_index(const std::string& label) const {
  auto it = std::find(events.begin(), events.end(), label);
  return it == events.end() ? -1 : static_cast<int>(it - events.begin());
}

int AgentUpdateFrame::require_event(const std::string& label) const {
  int idx = event_index(label);
  if (idx < 0) {
    throw std::out_of_range("unknown event '" + label + "' in frame '" + name +
                            "'");
  }
  return idx;
}

const Relation& AgentUpdateFrame::obs_of(const AgentName& a) const {
  static const Relation kEmpty;
  auto it = obs.find(a);
  return it == obs.end() ? kEmpty : it->second;
}

const Relation& AgentUpdateFrame::add_of(const AgentName& a) const {
  static const Relation kEmpty;
  auto it = add.find(a);
  return it == add.end() ? kEmpty : it->second;
}

const Relation& AgentUpdateFrame::del_of(const AgentName& a) const {
  static const Relation kEmpty;
  auto it = del.find(a);
  return it == del.end() ? kEmpty : it->second;
}

const FormulaPtr& AgentUpdateFrame::pre_of(int event) const {
  return pre.at(event);
}

const Postcondition& AgentUpdateFrame::post_of(int event) const {
  return post.at(event);
}

std::set<AgentName> AgentUpdateFrame::agent_names() const {
  std::set<AgentName> out;
  for (const auto& [a, _] : obs) out.insert(a);
  for (const auto& [a, _] : add) out.insert(a);
  for (const auto& [a, _] : del) out.insert(a);
  return out;
}

void AgentUpdateFrame::fill_defaults() {
  while (pre.size() < events.size()) pre.push_back(top());
  while (post.size() < events.size()) post.push_back(Postcondition{});
}

std::vector<Violation> validate_frame(const AgentUpdateFrame& u,
                                      Signature& signature) {
  std::vector<Violation> out;
  const int n = static_cast<int>(u.events.size());
  auto in_range = [n](int e) { return e >= 0 && e < n; };

  if (n == 0) out.push_back({"no-events", "frame has no events"});

  std::set<std::string> seen;
  for (const auto& e : u.events) {
    if (!seen.insert(e).second) {
      out.push_back({"duplicate-event", "event label '" + e + "' repeats"});
    }
  }

  auto check_relation = [&](const char* which,
                            const std::map<AgentName, Relation>& rels) {
    for (const auto& [agent, rel] : rels) {
      for (const auto& [from, to] : rel.pairs()) {
        if (!in_range(from) || !in_range(to)) {
          out.push_back({"dangling-event",
                         std::string(which) + " arrow for agent '" + agent +
                             "' references an unknown event"});
        }
      }
    }
  };
  check_relation("obs", u.obs);
  check_relation("add", u.add);
  check_relation("del", u.del);

  if (u.pre.size() != u.events.size() || u.post.size() != u.events.size()) {
    out.push_back({"missing-pre-post",
                   "pre/post tables do not cover every event"});
  }
  for (std::size_t e = 0; e < u.pre.size() && e < u.events.size(); ++e) {
    if (!is_el(u.pre[e])) {
      out.push_back({"non-EL-precondition",
                     "precondition of event '" + u.events[e] +
                         "' contains an update modality"});
    }
  }
  for (std::size_t e = 0; e < u.post.size() && e < u.events.size(); ++e) {
    for (const auto& [fluent, _] : u.post[e].effects) {
      if (auto err = signature.check(fluent.predicate, fluent.args.size())) {
        out.push_back({"postcondition-signature",
                       "event '" + u.events[e] + "': " + *err});
      }
    }
  }
  if (u.designated && !in_range(*u.designated)) {
    out.push_back({"dangling-designated", "designated event is out of range"});
  }
  return out;
}

std::set<AgentName> add_set(const AgentUpdateFrame& u, int event) {
  if (event < 0 || event >= static_cast<int>(u.events.size())) {
    throw std::out_of_range("unknown event id " + std::to_string(event));
  }
  std::set<AgentName> out;
  for (const auto& [agent, rel] : u.add) {
    if (!rel.successors(event).empty()) out.insert(agent);
  }
  return out;
}

std::set<AgentName> del_set(const AgentUpdateFrame& u, int event) {
  if (event < 0 || event >= static_cast<int>(u.events.size())) {
    throw std::out_of_range("unknown event id " + std::to_string(event));
  }
  std::set<AgentName> out;
  for (const auto& [agent, rel] : u.del) {
    if (!rel.successors(event).empty()) out.insert(agent);
  }
  return out;
}

std::set<AgentName> add_set(const AgentUpdateFrame& u, const std::string& ev) {
  return add_set(u, u.require_event(ev));
}

std::set<AgentName> del_set(const AgentUpdateFrame& u, const std::string& ev) {
  return del_set(u, u.require_event(ev));
}

std::set<AgentName> observers(const AgentUpdateFrame& u, int event) {
  if (event < 0 || event >= static_cast<int>(u.events.size())) {
    throw std::out_of_range("unknown event id " + std::to_string(event));
  }
  std::set<AgentName> out;
  for (const auto& [agent, rel] : u.obs) {
    const std::set<int>& succ = rel.successors(event);
    if (succ.size() == 1 && *succ.begin() == event) out.insert(agent);
  }
  return out;
}

std::set<AgentName> observers(const AgentUpdateFrame& u,
                              const std::string& ev) {
  return observers(u, u.require_event(ev));
}

std::size_t frame_size(const AgentUpdateFrame& u) {
  const std::size_t n_events = u.events.size();
  const std::size_t n_agents = u.agent_names().size();
  std::size_t size = n_events + n_agents + 3 * n_agents * n_events * n_events;
  for (const auto& p : u.pre) size += node_count(p);
  for (const auto& p : u.post) size += 2 * p.effects.size();
  return size;
}

}  // namespace audel
