#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hocat/homotopy.hpp"

namespace hocat {

/// Recognition of left (resp. right) semi-model structures.
/// `strong_objects`: every cofibrant object has a strong cylinder (resp. fibrant, path).
/// `core_saturated`: core left (resp. right) saturation. `other_saturated`: right (resp. left).
struct SemiVerdict {
  bool weak_model = false;
  bool strong_objects = false;
  bool core_saturated = false;
  bool other_saturated = false;
  std::optional<ObjId> failing_object;

  [[nodiscard]] bool fresse() const { return weak_model && strong_objects && core_saturated; }
  [[nodiscard]] bool spitzweck() const { return fresse() && other_saturated; }
  friend bool operator==(const SemiVerdict&, const SemiVerdict&) = default;
};

namespace detail {

inline bool strong_cylinders_for_cofibrant(const PremodelContext& ctx, std::optional<ObjId>& failing) {
  const auto& c = ctx.cat();
  for (auto x : c.objects()) {
    if (!ctx.objects.cofibrant(x)) continue;
    if (!find_cylinder(ctx, c.hom(ctx.objects.initial, x).front(), CylinderMode::strong)) {
      failing = x;
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline SemiVerdict recognize_left_semi(const PremodelStructure& p) {
  SemiVerdict v;
  const PremodelContext ctx(p);
  v.weak_model = verify_weak_model(p).ok();
  v.strong_objects = detail::strong_cylinders_for_cofibrant(ctx, v.failing_object);
  const auto flags = saturation_flags(p);
  v.core_saturated = flags.core_left;
  v.other_saturated = flags.right;
  return v;
}

inline SemiVerdict recognize_right_semi(const PremodelStructure& p) {
  SemiVerdict v;
  const auto dual = dualize(p);
  const PremodelContext dctx(dual);
  v.weak_model = verify_weak_model(p).ok();
  v.strong_objects = detail::strong_cylinders_for_cofibrant(dctx, v.failing_object);
  const auto flags = saturation_flags(p);
  v.core_saturated = flags.core_right;
  v.other_saturated = flags.left;
  return v;
}

struct TwoSidedVerdict {
  bool weak_model = false;
  bool strong_cylinders = false;
  bool strong_paths = false;
  bool left_saturated = false;
  bool right_saturated = false;
  [[nodiscard]] bool ok() const { return weak_model && strong_cylinders && strong_paths && left_saturated && right_saturated; }
};

inline TwoSidedVerdict two_sided_check(const PremodelStructure& p) {
  const auto l = recognize_left_semi(p);
  const auto r = recognize_right_semi(p);
  const auto flags = saturation_flags(p);
  return {l.weak_model, l.strong_objects, r.strong_objects, flags.left, flags.right};
}

// ---------------------------------------------------------------------------
// WL and WR: arrows inverted by the left / right localization functors.

/// Caches replacements and the W test so per-arrow queries stay cheap.
class LocalizationData {
 public:
  explicit LocalizationData(const PremodelStructure& p) : ctx_(p) {
    const auto& c = p.category();
    for (auto x : c.objects()) {
      cof_.push_back(cofibrant_replacement(ctx_, x));
      fib_.push_back(fibrant_replacement(ctx_, x));
    }
  }

  [[nodiscard]] const PremodelContext& context() const { return ctx_; }
  [[nodiscard]] const Replacement& cofibrant(ObjId x) const { return cof_.at(x.index()); }
  [[nodiscard]] const Replacement& fibrant(ObjId x) const { return fib_.at(x.index()); }

  /// The map X^cof -> Y^cof over f.
  [[nodiscard]] MorId left_lift(MorId f) const {
    const auto& c = ctx_.cat();
    const auto& qx = cofibrant(c.source(f));
    const auto& qy = cofibrant(c.target(f));
    const auto want = c.compose(f, qx.map);
    for (auto g : c.hom(qx.object, qy.object))
      if (c.compose(qy.map, g) == want) return g;
    throw NonexistenceError("no lift of '" + c.name(f) + "' between cofibrant replacements");
  }

  /// The map X^fib -> Y^fib under f.
  [[nodiscard]] MorId right_lift(MorId f) const {
    const auto& c = ctx_.cat();
    const auto& jx = fibrant(c.source(f));
    const auto& jy = fibrant(c.target(f));
    const auto want = c.compose(jy.map, f);
    for (auto g : c.hom(jx.object, jy.object))
      if (c.compose(g, jx.map) == want) return g;
    throw NonexistenceError("no extension of '" + c.name(f) + "' between fibrant replacements");
  }

  [[nodiscard]] bool in_wl(MorId f) const { return is_equivalence(ctx_, left_lift(f)).equivalence; }
  [[nodiscard]] bool in_wr(MorId f) const { return is_equivalence(ctx_, right_lift(f)).equivalence; }

  /// Bifibrant object that the left localization functor assigns to X: (X^cof)^fib.
  [[nodiscard]] ObjId left_object(ObjId x) const { return fibrant(cofibrant(x).object).object; }
  /// (X^fib)^cof.
  [[nodiscard]] ObjId right_object(ObjId x) const { return cofibrant(fibrant(x).object).object; }

  /// Representative in Ho of the left localization of f.
  [[nodiscard]] MorId left_functor(MorId f) const {
    const auto& c = ctx_.cat();
    const auto g = left_lift(f);
    const auto& j1 = fibrant(c.source(g));
    const auto& j2 = fibrant(c.target(g));
    const auto want = c.compose(j2.map, g);
    for (auto h : c.hom(j1.object, j2.object))
      if (c.compose(h, j1.map) == want) return h;
    throw NonexistenceError("no extension along a fibrant replacement for '" + c.name(f) + "'");
  }

  [[nodiscard]] MorId right_functor(MorId f) const {
    const auto& c = ctx_.cat();
    const auto k = right_lift(f);
    const auto& q1 = cofibrant(c.source(k));
    const auto& q2 = cofibrant(c.target(k));
    const auto want = c.compose(k, q1.map);
    for (auto m : c.hom(q1.object, q2.object))
      if (c.compose(q2.map, m) == want) return m;
    throw NonexistenceError("no lift along a cofibrant replacement for '" + c.name(f) + "'");
  }

 private:
  PremodelContext ctx_;
  std::vector<Replacement> cof_;
  std::vector<Replacement> fib_;
};

inline void require_left_semi_shape(const PremodelStructure& p) {
  const PremodelContext ctx(p);
  std::optional<ObjId> failing;
  if (!verify_weak_model(p).ok()) throw PreconditionError("'" + p.name() + "' is not a weak model structure");
  if (!detail::strong_cylinders_for_cofibrant(ctx, failing))
    throw PreconditionError("cofibrant object '" + p.category().name(*failing) + "' has no strong cylinder");
}

inline void require_right_semi_shape(const PremodelStructure& p) {
  if (!verify_weak_model(p).ok()) throw PreconditionError("'" + p.name() + "' is not a weak model structure");
  const auto dual = dualize(p);
  const PremodelContext dctx(dual);
  std::optional<ObjId> failing;
  if (!detail::strong_cylinders_for_cofibrant(dctx, failing))
    throw PreconditionError("fibrant object '" + p.category().name(*failing) + "' has no strong path object");
}

inline ArrowClass compute_WL(const PremodelStructure& p) {
  require_left_semi_shape(p);
  const LocalizationData loc(p);
  return ArrowClass::where(p.category(), [&](MorId f) { return loc.in_wl(f); });
}

inline ArrowClass compute_WR(const PremodelStructure& p) {
  require_right_semi_shape(p);
  const LocalizationData loc(p);
  return ArrowClass::where(p.category(), [&](MorId f) { return loc.in_wr(f); });
}

// ---------------------------------------------------------------------------
// Quillen recognition on two-sided structures.

struct QuillenVerdict {
  bool same_equivalences = false;        // WL = WR
  bool anodyne_in_wl = false;            // every anodyne cofibration is in WL
  bool fibrant_approximations = false;   // the square condition, informational
  bool replacements_compose = false;     // X^cof -> X -> X^fib is in W
  bool functors_isomorphic = false;      // left and right localizations agree
  std::vector<MorId> wl_not_wr;
  std::vector<MorId> wr_not_wl;

  [[nodiscard]] bool quillen() const { return same_equivalences; }
  [[nodiscard]] bool conditions_agree() const {
    return same_equivalences == anodyne_in_wl && anodyne_in_wl == replacements_compose && replacements_compose == functors_isomorphic;
  }
};

namespace detail {

// Backtracking search for a natural isomorphism between two functors C -> Ho,
// given on objects by bifibrant objects and on arrows by representatives.
inline bool natural_iso_exists(const FiniteCategory& c, const HomotopyCategory& ho, const std::function<ObjId(ObjId)>& lo, const std::function<ObjId(ObjId)>& ro,
                               const std::function<MorId(MorId)>& lf, const std::function<MorId(MorId)>& rf) {
  const auto objs = c.objects();
  std::vector<std::optional<MorId>> phi(objs.size());
  std::vector<MorId> lmap, rmap;
  for (auto f : c.morphisms()) {
    lmap.push_back(lf(f));
    rmap.push_back(rf(f));
  }
  auto consistent = [&](ObjId x) {
    for (auto f : c.morphisms()) {
      const auto s = c.source(f), t = c.target(f);
      if ((s != x && t != x) || !phi[s.index()] || !phi[t.index()]) continue;
      const auto a = c.compose(rmap[f.index()], *phi[s.index()]);
      const auto b = c.compose(*phi[t.index()], lmap[f.index()]);
      if (ho.class_of(c, a) != ho.class_of(c, b)) return false;
    }
    return true;
  };
  auto rec = [&](auto& self, std::size_t k) -> bool {
    if (k == objs.size()) return true;
    const auto x = objs[k];
    const auto i = *ho.position(lo(x));
    const auto j = *ho.position(ro(x));
    for (const auto& cls : ho.hom(i, j)) {
      if (!ho.isomorphic_via(c, cls.front())) continue;
      phi[k] = cls.front();
      if (consistent(x) && self(self, k + 1)) return true;
    }
    phi[k].reset();
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

struct TwoSidedRequired : PreconditionError {
  using PreconditionError::PreconditionError;
};

inline QuillenVerdict quillen_check(const PremodelStructure& p) {
  if (!two_sided_check(p).ok()) throw TwoSidedRequired("'" + p.name() + "' is not two-sided");
  const auto& c = p.category();
  const LocalizationData loc(p);
  const auto& ctx = loc.context();
  QuillenVerdict v;
  std::vector<bool> wl(c.morphism_count()), wr(c.morphism_count());
  for (auto f : c.morphisms()) {
    wl[f.index()] = loc.in_wl(f);
    wr[f.index()] = loc.in_wr(f);
    if (wl[f.index()] && !wr[f.index()]) v.wl_not_wr.push_back(f);
    if (wr[f.index()] && !wl[f.index()]) v.wr_not_wl.push_back(f);
  }
  v.same_equivalences = v.wl_not_wr.empty() && v.wr_not_wl.empty();

  v.anodyne_in_wl = true;
  for (auto f : p.anodyne_cofibrations().members())
    if (!wl[f.index()]) v.anodyne_in_wl = false;

  v.replacements_compose = true;
  for (auto x : c.objects()) {
    const auto g = c.compose(loc.fibrant(x).map, loc.cofibrant(x).map);
    if (!is_equivalence(ctx, g).equivalence) v.replacements_compose = false;
  }

  v.fibrant_approximations = true;
  for (auto f : c.morphisms()) {
    const auto x = c.source(f), y = c.target(f);
    bool found = false;
    for (auto x2 : c.objects()) {
      if (!ctx.objects.fibrant(x2)) continue;
      for (auto y2 : c.objects()) {
        if (!ctx.objects.fibrant(y2)) continue;
        for (auto wx : c.hom(x, x2)) {
          if (!wl[wx.index()]) continue;
          for (auto wy : c.hom(y, y2)) {
            if (!wl[wy.index()]) continue;
            const auto target = c.compose(wy, f);
            for (auto f2 : c.hom(x2, y2)) {
              if (c.compose(f2, wx) == target) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) v.fibrant_approximations = false;
  }

  const auto ho = homotopy_category(p);
  v.functors_isomorphic = detail::natural_iso_exists(
      c, ho, [&](ObjId x) { return loc.left_object(x); }, [&](ObjId x) { return loc.right_object(x); }, [&](MorId f) { return loc.left_functor(f); },
      [&](MorId f) { return loc.right_functor(f); });
  return v;
}

/// Everything the classifier knows about one structure.
struct ClassificationReport {
  PremodelVerdict premodel;
  std::optional<WeakModelVerdict> weak_model;
  std::optional<SemiVerdict> left_semi;
  std::optional<SemiVerdict> right_semi;
  std::optional<TwoSidedVerdict> two_sided;
  std::optional<QuillenVerdict> quillen;
  std::optional<SaturationFlags> saturation;
  std::optional<ArrowClass> equivalences;
  std::optional<ArrowClass> wl;
  std::optional<ArrowClass> wr;

  [[nodiscard]] bool is_premodel() const { return premodel.ok(); }
  [[nodiscard]] bool is_weak_model() const { return weak_model && weak_model->ok(); }
  [[nodiscard]] bool is_left_semi() const { return left_semi && left_semi->fresse(); }
  [[nodiscard]] bool is_right_semi() const { return right_semi && right_semi->fresse(); }
  [[nodiscard]] bool is_two_sided() const { return two_sided && two_sided->ok(); }
  [[nodiscard]] bool is_quillen() const { return quillen && quillen->quillen(); }
};

inline ClassificationReport classify_full(const PremodelStructure& p) {
  ClassificationReport r;
  r.premodel = verify_premodel(p);
  if (!r.premodel.ok()) return r;
  r.saturation = saturation_flags(p);
  r.weak_model = verify_weak_model(p);
  if (!r.weak_model->ok()) return r;
  r.equivalences = equivalences(p);
  r.left_semi = recognize_left_semi(p);
  r.right_semi = recognize_right_semi(p);
  if (r.left_semi->strong_objects) r.wl = compute_WL(p);
  if (r.right_semi->strong_objects) r.wr = compute_WR(p);
  r.two_sided = two_sided_check(p);
  if (r.two_sided->ok()) r.quillen = quillen_check(p);
  return r;
}

}  // namespace hocat
