#include "audel/update.hpp"

#include <cassert>

#include "audel/semantics.hpp"

namespace audel {

int UpdateResult::composite(int world, int event) const {
  auto it = index_.find({world, event});
  return it == index_.end() ? -1 : it->second;
}

void UpdateResult::rebuild_index() {
  index_.clear();
  for (const auto& [id, src] : origin) index_[src] = id;
}

std::string compose_world_label(const std::string& world,
                                const std::string& event) {
  if (world.size() >= 2 && world.front() == '(' && world.back() == ')') {
    return world.substr(0, world.size() - 1) + "," + event + ")";
  }
  return "(" + world + "," + event + ")";
}

namespace {

struct Skeleton {
  KripkeModel model;                        // worlds + valuation filled in
  std::map<int, std::pair<int, int>> origin;
  std::map<std::pair<int, int>, int> index;
};

// Common part of both updates: executable (world,event) pairs and the
// postcondition-adjusted valuation.
Skeleton build_states(const KripkeModel& m, const AgentUpdateFrame& u) {
  Skeleton sk;
  const int n_worlds = static_cast<int>(m.worlds.size());
  const int n_events = static_cast<int>(u.events.size());

  for (int s = 0; s < n_worlds; ++s) {
    for (int e = 0; e < n_events; ++e) {
      if (!eval_el(m, s, u.pre_of(e))) continue;
      int id = static_cast<int>(sk.model.worlds.size());
      sk.model.worlds.push_back(
          compose_world_label(m.worlds[s], u.events[e]));
      sk.origin[id] = {s, e};
      sk.index[{s, e}] = id;
    }
  }

  // Fluents that can hold afterwards: those true before plus those some
  // postcondition sets.
  std::set<Fluent> fluents;
  for (const auto& [f, _] : m.valuation) fluents.insert(f);
  for (const auto& p : u.post) {
    for (const auto& [f, _] : p.effects) fluents.insert(f);
  }
  for (const Fluent& f : fluents) {
    std::set<int> where;
    for (const auto& [id, src] : sk.origin) {
      const auto [s, e] = src;
      switch (u.post_of(e).effect(f)) {
        case Postcondition::Effect::SetTrue:
          where.insert(id);
          break;
        case Postcondition::Effect::SetFalse:
          break;
        case Postcondition::Effect::NoChange:
          if (m.holds(f, s)) where.insert(id);
          break;
      }
    }
    if (!where.empty()) sk.model.valuation[f] = std::move(where);
  }
  return sk;
}

std::set<AgentName> all_agents(const KripkeModel& m,
                               const AgentUpdateFrame& u) {
  std::set<AgentName> agents(m.agents.begin(), m.agents.end());
  for (const AgentName& a : u.agent_names()) agents.insert(a);
  return agents;
}

UpdateResult finish(const KripkeModel& m, Skeleton sk,
                    std::map<AgentName, Relation> relations) {
  UpdateResult r;
  r.model = std::move(sk.model);
  r.origin = std::move(sk.origin);

  // The updated agent set: those with a nonempty relation.  The model also
  // keeps the input's declared agents so formulas can still mention them.
  for (auto& [agent, rel] : relations) {
    if (!rel.empty()) {
      r.updated_agents.insert(agent);
      r.model.declare_agent(agent);
      r.model.relations[agent] = std::move(rel);
    }
  }
  for (const AgentName& a : m.agents) r.model.declare_agent(a);
  r.rebuild_index();
  return r;
}

}  // namespace

UpdateResult product_update(const KripkeModel& m, const AgentUpdateFrame& u) {
  for (const auto& [agent, rel] : u.add) {
    if (!rel.empty()) {
      throw UpdateError("product update requires an empty add relation (agent '" +
                        agent + "')");
    }
  }
  for (const auto& [agent, rel] : u.del) {
    if (!rel.empty()) {
      throw UpdateError("product update requires an empty delete relation (agent '" +
                        agent + "')");
    }
  }

  Skeleton sk = build_states(m, u);
  std::map<AgentName, Relation> relations;
  for (const AgentName& a : all_agents(m, u)) {
    const Relation& ra = m.relation(a);
    const Relation& oa = u.obs_of(a);
    Relation out;
    for (const auto& [id, src] : sk.origin) {
      const auto [s, e] = src;
      for (int t : ra.successors(s)) {
        for (int v : oa.successors(e)) {
          auto it = sk.index.find({t, v});
          if (it != sk.index.end()) out.add(id, it->second);
        }
      }
    }
    relations[a] = std::move(out);
  }
  return finish(m, std::move(sk), std::move(relations));
}

UpdateResult sum_product_update(const KripkeModel& m,
                                const AgentUpdateFrame& u) {
  Skeleton sk = build_states(m, u);
  const int n_events = static_cast<int>(u.events.size());

  // Per-event derived sets, shared across agents.
  std::vector<std::set<AgentName>> adds(n_events), dels(n_events),
      obs_sets(n_events);
  std::vector<Relation> r_obs(n_events);  // ⋃_{b∈Obs(e)} R_b over M's worlds
  for (int e = 0; e < n_events; ++e) {
    adds[e] = add_set(u, e);
    dels[e] = del_set(u, e);
    obs_sets[e] = observers(u, e);
    for (const AgentName& b : obs_sets[e]) {
      for (const auto& [from, to] : m.relation(b).pairs()) {
        r_obs[e].add(from, to);
      }
    }
  }

  std::map<AgentName, Relation> relations;
  for (const AgentName& a : all_agents(m, u)) {
    const Relation& ra = m.relation(a);
    const Relation& oa = u.obs_of(a);
    const Relation& aa = u.add_of(a);
    const Relation& da = u.del_of(a);

    Relation q;
    for (const auto& [id, src] : sk.origin) {
      const auto [s, e] = src;

      // unforgotten: sR_a t, e obs_a v, not e del_a v
      for (int t : ra.successors(s)) {
        for (int v : oa.successors(e)) {
          if (da.contains(e, v)) continue;
          auto it = sk.index.find({t, v});
          if (it != sk.index.end()) q.add(id, it->second);
        }
      }

      // Deletion takes priority over addition: no ascribed or inherited
      // arrows for an agent deleted at the source event.
      const bool actively_added = adds[e].count(a) && !dels[e].count(a);
      if (!actively_added) continue;

      // ascribed: (s,e) -> (s,v) for e add_a v
      for (int v : aa.successors(e)) {
        auto it = sk.index.find({s, v});
        if (it != sk.index.end()) q.add(id, it->second);
      }

      // inherited: (s,e) -> (t,e) for s R_Obs(e) t
      for (int t : r_obs[e].successors(s)) {
        auto it = sk.index.find({t, e});
        if (it != sk.index.end()) q.add(id, it->second);
      }
    }
    relations[a] = transitive_closure(q);
  }

  return finish(m, std::move(sk), std::move(relations));
}

UpdateResult iterate_updates(
    const KripkeModel& m, int designated,
    const std::vector<std::pair<const AgentUpdateFrame*, int>>& chain) {
  if (designated < 0 || designated >= static_cast<int>(m.worlds.size())) {
    throw UpdateError("designated world id out of range");
  }

  UpdateResult current;
  current.model = m;
  current.model.designated = designated;
  for (const AgentName& a : m.agents) {
    if (!m.relation(a).empty()) current.updated_agents.insert(a);
  }

  int step = 1;
  for (const auto& [frame, event] : chain) {
    const KripkeModel& cur = current.model;
    int at = *cur.designated;
    if (!eval_el(cur, at, frame->pre_of(event))) {
      throw ChainPreconditionError(
          "step " + std::to_string(step) + ": precondition of event '" +
              frame->events[event] + "' fails at world '" + cur.worlds[at] +
              "'",
          step);
    }
    UpdateResult next = sum_product_update(cur, *frame);
    int composite = next.composite(at, event);
    assert(composite >= 0);  // guaranteed: the precondition held
    next.model.designated = composite;
    current = std::move(next);
    ++step;
  }
  return current;
}

}  // namespace audel
