// Truth at a world.  Update modalities are interpreted by sum-product
// update: (M,s) |= <U@u> phi  iff  (M,s) |= pre(u) and (M*U,(s,u)) |= phi.
// A union update is true iff some disjunct's precondition holds and the
// corresponding updated model satisfies the body.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "audel/frames.hpp"
#include "audel/model.hpp"
#include "audel/update.hpp"

namespace audel {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frame library plus a cache of computed updates, keyed by
// (model identity, frame name).  Entries are exact sum_product_update
// outputs; concurrent insert-or-get is safe (identical keys map to
// semantically identical values, so last writer wins).
class EvalContext {
 public:
  EvalContext() = default;
  EvalContext(const EvalContext&) = delete;
  EvalContext& operator=(const EvalContext&) = delete;

  void add_frame(AgentUpdateFrame frame);  // keyed by frame.name
  bool has_frame(const std::string& name) const;
  const AgentUpdateFrame& resolve(const std::string& name) const;

  // Memoized M * frames[name].
  std::shared_ptr<const UpdateResult> update_of(const KripkeModel& m,
                                                const std::string& name);

  void set_memo_enabled(bool enabled) { memo_enabled_ = enabled; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<std::string, AgentUpdateFrame> frames_;
  bool memo_enabled_ = true;
  std::map<std::pair<std::uint64_t, std::string>,
           std::shared_ptr<const UpdateResult>>
      memo_;
  mutable std::mutex mu_;
};

bool model_check(const KripkeModel& m, int world, const FormulaPtr& f,
                 EvalContext& ctx);
bool model_check(const KripkeModel& m, const std::string& world,
                 const FormulaPtr& f, EvalContext& ctx);

// Update-free evaluation; throws EvalError on an update constructor.
bool eval_el(const KripkeModel& m, int world, const FormulaPtr& f);

// Truth at every world of the model.
bool check_validity_on(const KripkeModel& m, const FormulaPtr& f,
                       EvalContext& ctx);

}  // namespace audel
