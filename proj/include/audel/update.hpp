// Product update and sum-product update: the model transformations that
// execute a pointed (agent-)update frame on a Kripke model.
//
// Product update pairs worlds with executable events and intersects each
// agent's relation with its observability relation.  Sum-product update
// additionally ascribes arrows to added agents (from the add relation),
// lets added agents inherit the observers' arrows, suppresses arrows that
// the delete relation forgets, and finally closes each agent's relation
// transitively.  Deletion takes priority over addition.

#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "audel/frames.hpp"
#include "audel/model.hpp"

namespace audel {

struct UpdateResult {
  KripkeModel model;  // worlds carry flattened tuple labels "(s,u)"
  // composite world id -> (source world id, event id)
  std::map<int, std::pair<int, int>> origin;
  std::set<AgentName> updated_agents;  // agents with a nonempty relation

  // Composite id for (source world, event); -1 when the pair was filtered
  // out by its precondition.
  int composite(int world, int event) const;

  void rebuild_index();  // refreshes the reverse lookup from `origin`

 private:
  std::map<std::pair<int, int>, int> index_;
};

struct UpdateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by iterate_updates when a designated world fails the next
// precondition; `step` is the 1-based position in the chain.
struct ChainPreconditionError : UpdateError {
  ChainPreconditionError(std::string msg, int step_index)
      : UpdateError(std::move(msg)), step(step_index) {}
  int step;
};

// M ⊗ U.  The frame must have empty add and delete relations; no
// transitive closure is applied.
UpdateResult product_update(const KripkeModel& m, const AgentUpdateFrame& u);

// M * U.  Requires a transitive input model; every output relation is
// transitively closed by construction.
UpdateResult sum_product_update(const KripkeModel& m,
                                const AgentUpdateFrame& u);

// Left fold of sum_product_update over a chain of pointed frames, keeping
// the designated world composite: (s,u1,...,uk).  The chain may be empty.
UpdateResult iterate_updates(
    const KripkeModel& m, int designated,
    const std::vector<std::pair<const AgentUpdateFrame*, int>>& chain);

// Tuple label for an updated world: "s"+"u" -> "(s,u)", and further
// updates flatten: "(s,u)"+"v" -> "(s,u,v)".
std::string compose_world_label(const std::string& world,
                                const std::string& event);

}  // namespace audel
