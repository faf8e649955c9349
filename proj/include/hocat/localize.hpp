#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hocat/homotopy.hpp"
#include "hocat/saturate.hpp"

namespace hocat {

struct NablaChain {
  std::vector<MorId> steps;               // ∇i, ∇²i, ... up to the requested length or the first repeat
  std::optional<std::size_t> cycle_start;  // index into {i} ∪ steps where the repeat begins
};

/// Iterated homotopy codiagonals, each taken from the first weak cylinder found.
inline NablaChain nabla(const PremodelContext& ctx, MorId i, std::size_t k) {
  NablaChain out;
  std::vector<MorId> seen{i};
  MorId cur = i;
  while (out.steps.size() < k) {
    auto w = find_cylinder(ctx, cur, CylinderMode::weak);
    if (!w) throw NonexistenceError("'" + ctx.cat().name(cur) + "' has no relative weak cylinder");
    cur = w->cylinder_cofibration;
    if (auto it = std::find(seen.begin(), seen.end(), cur); it != seen.end()) {
      out.cycle_start = static_cast<std::size_t>(it - seen.begin());
      break;
    }
    seen.push_back(cur);
    out.steps.push_back(cur);
  }
  return out;
}

inline NablaChain nabla(const PremodelStructure& p, MorId i, std::size_t k) { return nabla(PremodelContext(p), i, k); }

/// Smallest class containing `gens` and closed under the deterministic ∇.
inline ArrowClass nabla_closure(const PremodelContext& ctx, const std::vector<MorId>& gens) {
  ArrowClass out(ctx.cat().morphism_count());
  std::vector<MorId> todo = gens;
  while (!todo.empty()) {
    auto j = todo.back();
    todo.pop_back();
    if (out.contains(j)) continue;
    out.insert(j);
    auto w = find_cylinder(ctx, j, CylinderMode::weak);
    if (!w) throw NonexistenceError("'" + ctx.cat().name(j) + "' has no relative weak cylinder");
    todo.push_back(w->cylinder_cofibration);
  }
  return out;
}

struct LocalizationResult {
  PremodelStructure structure;
  std::vector<MorId> representatives;
  ArrowClass generators;
  bool same_fixed_class = false;  // cofibrations for left, fibrations for right
  bool core_agrees = false;       // fibrations between fibrant objects (left) or the dual
  bool localizer_inverted = false;
  bool weak_model = false;

  [[nodiscard]] bool postconditions() const { return same_fixed_class && core_agrees && localizer_inverted && weak_model; }
};

namespace detail {

inline void finish_left(LocalizationResult& r, const PremodelStructure& p) {
  const auto& c = p.category();
  const auto& q = r.structure;
  r.same_fixed_class = q.cofibrations() == p.cofibrations();
  const auto t = object_table(q);
  r.core_agrees = true;
  for (auto g : c.morphisms()) {
    if (t.fibrant(c.source(g)) && t.fibrant(c.target(g)) && q.fibrations().contains(g) != p.fibrations().contains(g)) r.core_agrees = false;
  }
  const auto acyclic = acyclic_cofibrations(q);
  r.localizer_inverted = true;
  for (auto j : r.representatives)
    if (!acyclic.contains(j)) r.localizer_inverted = false;
  r.weak_model = verify_weak_model(q).ok();
}

inline void finish_right(LocalizationResult& r, const PremodelStructure& p) {
  const auto& c = p.category();
  const auto& q = r.structure;
  r.same_fixed_class = q.fibrations() == p.fibrations();
  const auto t = object_table(q);
  r.core_agrees = true;
  for (auto f : c.morphisms()) {
    if (t.cofibrant(c.source(f)) && t.cofibrant(c.target(f)) && q.cofibrations().contains(f) != p.cofibrations().contains(f)) r.core_agrees = false;
  }
  const auto acyclic = acyclic_fibrations(q);
  r.localizer_inverted = true;
  for (auto k : r.generators.members())
    if (!acyclic.contains(k)) r.localizer_inverted = false;
  r.weak_model = verify_weak_model(q).ok();
}

inline void require_left_mode(SaturationMode m) {
  if (m != SaturationMode::L && m != SaturationMode::Lc) throw InputError("left localization takes mode L or Lc");
}

inline void require_right_mode(SaturationMode m) {
  if (m != SaturationMode::R && m != SaturationMode::Rc) throw InputError("right localization takes mode R or Rc");
}

}  // namespace detail

/// Left Bousfield localization at arrows S between fibrant-or-cofibrant objects.
/// Each s is replaced by the cofibration part of its reduced form, the result is
/// closed under ∇, added to the anodyne cofibrations, and the structure saturated.
inline LocalizationResult left_bousfield(const PremodelStructure& p, const std::vector<MorId>& s, SaturationMode mode = SaturationMode::Lc) {
  detail::require_left_mode(mode);
  const auto& c = p.category();
  const PremodelContext ctx(p);
  if (!verify_weak_model(p).ok()) throw PreconditionError("left localization needs a weak model structure, '" + p.name() + "' is not one");
  std::vector<MorId> reps;
  for (auto f : s) reps.push_back(is_equivalence(ctx, f).cofibration);
  auto j = nabla_closure(ctx, reps);
  auto gen = generate_wfs(c, p.anodyne_cofibrations() | j);
  if (!gen.ok()) throw NoFactorization("left localization: '" + c.name(*gen.unfactorizable) + "' has no factorization", *gen.unfactorizable);
  PremodelStructure mid(p.category_ptr(), p.cofibrations(), p.anodyne_fibrations(), gen.wfs.left, gen.wfs.right, p.name() + ".loc");
  LocalizationResult r{saturate(mid, mode), reps, j};
  r.structure.set_name(p.name() + ".left_loc");
  detail::finish_left(r, p);
  return r;
}

/// Right Bousfield localization at the arrows inverted by the right adjoint of
/// `adj` (left: D -> C, right: C -> D), with `target` a weak model structure on D.
inline LocalizationResult right_bousfield(const PremodelStructure& p, const AdjunctionData& adj, const PremodelStructure& target, SaturationMode mode = SaturationMode::Rc) {
  detail::require_right_mode(mode);
  const auto& c = p.category();
  if (!check_quillen_adjunction(adj, target, p).ok()) throw PreconditionError("adjunction '" + adj.name + "' is not a Quillen adjunction");
  if (!verify_weak_model(target).ok()) throw PreconditionError("target structure '" + target.name() + "' is not a weak model structure");
  if (!verify_weak_model(p).ok()) throw PreconditionError("right localization needs a weak model structure, '" + p.name() + "' is not one");
  const auto target_acyclic = acyclic_fibrations(target);
  auto k = core_fibrations(p) & ArrowClass::where(c, [&](MorId q) { return target_acyclic.contains(adj.right(q)); });
  auto cof = p.cofibrations() & complement_llp(c, k);
  auto afib = complement_rlp(c, cof);
  detail::require_factorizations(c, cof, afib, "(cofibration, anodyne fibration)");
  PremodelStructure mid(p.category_ptr(), cof, afib, p.anodyne_cofibrations(), p.fibrations(), p.name() + ".loc");
  LocalizationResult r{saturate(mid, mode), k.members(), k};
  r.structure.set_name(p.name() + ".right_loc");
  detail::finish_right(r, p);
  return r;
}

/// Left localization at the core cofibrations that a left Quillen functor
/// (adj.left: C -> D) sends to acyclic cofibrations. Mirror image of right_bousfield.
inline LocalizationResult left_bousfield_at_functor(const PremodelStructure& p, const AdjunctionData& adj, const PremodelStructure& target, SaturationMode mode = SaturationMode::Lc) {
  detail::require_left_mode(mode);
  const auto& c = p.category();
  if (!check_quillen_adjunction(adj, p, target).ok()) throw PreconditionError("adjunction '" + adj.name + "' is not a Quillen adjunction");
  if (!verify_weak_model(target).ok()) throw PreconditionError("target structure '" + target.name() + "' is not a weak model structure");
  if (!verify_weak_model(p).ok()) throw PreconditionError("left localization needs a weak model structure, '" + p.name() + "' is not one");
  const auto target_acyclic = acyclic_cofibrations(target);
  auto j = core_cofibrations(p) & ArrowClass::where(c, [&](MorId i) { return target_acyclic.contains(adj.left(i)); });
  auto fib = p.fibrations() & complement_rlp(c, j);
  auto acof = complement_llp(c, fib);
  detail::require_factorizations(c, acof, fib, "(anodyne cofibration, fibration)");
  PremodelStructure mid(p.category_ptr(), p.cofibrations(), p.anodyne_fibrations(), acof, fib, p.name() + ".loc");
  LocalizationResult r{saturate(mid, mode), j.members(), j};
  r.structure.set_name(p.name() + ".left_loc");
  detail::finish_left(r, p);
  return r;
}

struct PreRightLocalization {
  PremodelStructure structure;
  bool premodel = false;
  bool weak_model = false;
  bool right_saturated = false;
};

/// New cofibrations generated by I ∪ AC, with the rest of the structure kept.
/// Every i in I must be a core cofibration with some ∇i in the generated class.
inline PreRightLocalization pre_right_localization(const PremodelStructure& p, const std::vector<MorId>& gens) {
  const auto& c = p.category();
  const PremodelContext ctx(p);
  ArrowClass base = p.anodyne_cofibrations();
  for (auto i : gens) base.insert(i);
  auto gen = generate_wfs(c, base);
  if (!gen.ok()) throw NoFactorization("pre-right localization: '" + c.name(*gen.unfactorizable) + "' has no factorization", *gen.unfactorizable);
  for (auto i : gens) {
    bool found = false;
    for (const auto& w : all_cylinders(ctx, i, CylinderMode::weak)) {
      if (gen.wfs.left.contains(w.cylinder_cofibration)) {
        found = true;
        break;
      }
    }
    if (!found) throw PreconditionError("no homotopy codiagonal of '" + c.name(i) + "' lies in the generated cofibrations");
  }
  PreRightLocalization r{PremodelStructure(p.category_ptr(), gen.wfs.left, gen.wfs.right, p.anodyne_cofibrations(), p.fibrations(), p.name() + ".pre_right")};
  r.premodel = verify_premodel(r.structure).ok();
  r.weak_model = r.premodel && verify_weak_model(r.structure).ok();
  r.right_saturated = r.premodel && saturation_flags(r.structure).right;
  return r;
}

}  // namespace hocat
