#include "audel/semantics.hpp"

#include <cassert>

namespace audel {

void EvalContext::add_frame(AgentUpdateFrame frame) {
  if (frame.name.empty()) throw EvalError("frame without a name");
  frames_[frame.name] = std::move(frame);
}

bool EvalContext::has_frame(const std::string& name) const {
  return frames_.count(name) > 0;
}

const AgentUpdateFrame& EvalContext::resolve(const std::string& name) const {
  auto it = frames_.find(name);
  if (it == frames_.end()) {
    throw EvalError("unresolved frame reference '" + name + "'");
  }
  return it->second;
}

std::shared_ptr<const UpdateResult> EvalContext::update_of(
    const KripkeModel& m, const std::string& name) {
  const AgentUpdateFrame& frame = resolve(name);
  if (!memo_enabled_) {
    return std::make_shared<const UpdateResult>(sum_product_update(m, frame));
  }
  const std::pair<std::uint64_t, std::string> key{m.uid(), name};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto result =
      std::make_shared<const UpdateResult>(sum_product_update(m, frame));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, _] = memo_.emplace(key, std::move(result));
  return it->second;
}

namespace {

bool check(const KripkeModel& m, int w, const FormulaPtr& f, EvalContext* ctx) {
  switch (f->kind) {
    case FormulaKind::Top:
      return true;
    case FormulaKind::Atom:
      return m.holds(f->atom, w);
    case FormulaKind::Not:
      return !check(m, w, f->lhs, ctx);
    case FormulaKind::And:
      return check(m, w, f->lhs, ctx) && check(m, w, f->rhs, ctx);
    case FormulaKind::Possible: {
      for (int t : m.relation(f->agent).successors(w)) {
        if (check(m, t, f->lhs, ctx)) return true;
      }
      return false;
    }
    case FormulaKind::DiamondUpdate:
    case FormulaKind::DiamondUnion: {
      if (!ctx) {
        throw EvalError("update modality in an update-free evaluation");
      }
      for (const PointedFrameRef& pf : f->pframes) {
        const AgentUpdateFrame& frame = ctx->resolve(pf.frame);
        int event = frame.require_event(pf.event);
        // Preconditions are EL, so this recursion cannot regress.
        if (!check(m, w, frame.pre_of(event), ctx)) continue;
        auto updated = ctx->update_of(m, pf.frame);
        int composite = updated->composite(w, event);
        assert(composite >= 0 &&
               "precondition held, composite world must exist");
        if (check(updated->model, composite, f->lhs, ctx)) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace

bool model_check(const KripkeModel& m, int world, const FormulaPtr& f,
                 EvalContext& ctx) {
  if (world < 0 || world >= static_cast<int>(m.worlds.size())) {
    throw EvalError("world id out of range");
  }
  return check(m, world, f, &ctx);
}

bool model_check(const KripkeModel& m, const std::string& world,
                 const FormulaPtr& f, EvalContext& ctx) {
  return model_check(m, m.require_world(world), f, ctx);
}

bool eval_el(const KripkeModel& m, int world, const FormulaPtr& f) {
  return check(m, world, f, nullptr);
}

bool check_validity_on(const KripkeModel& m, const FormulaPtr& f,
                       EvalContext& ctx) {
  for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
    if (!model_check(m, w, f, ctx)) return false;
  }
  return true;
}

}  // namespace audel
