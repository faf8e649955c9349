#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hocat/premodel.hpp"

namespace hocat {

/// Classes that most homotopy computations need, computed once per structure.
struct PremodelContext {
  const PremodelStructure& p;
  ObjectTable objects;
  ArrowClass acyclic_cof;
  ArrowClass acyclic_fib;

  explicit PremodelContext(const PremodelStructure& s) : p(s), objects(object_table(s)), acyclic_cof(acyclic_cofibrations(s)), acyclic_fib(acyclic_fibrations(s)) {}
  [[nodiscard]] const FiniteCategory& cat() const { return p.category(); }
  [[nodiscard]] bool core_cofibration(MorId f) const { return p.cofibrations().contains(f) && objects.cofibrant(cat().source(f)); }
  [[nodiscard]] bool core_fibration(MorId f) const { return p.fibrations().contains(f) && objects.fibrant(cat().target(f)); }
};

enum class CylinderMode { weak, strong };

/// Relative cylinder for a core cofibration i: A -> B:
///   B ⊔_A B --cylinder_cofibration--> I --comparison--> D, with
///   comparison∘cylinder_cofibration = acyclic_leg∘fold and cylinder_cofibration∘in0 acyclic.
/// Strong witnesses have D = B and acyclic_leg = id_B.
struct CylinderWitness {
  MorId base;
  ObjId glued;
  MorId in0;
  MorId in1;
  MorId fold;
  ObjId cylinder;
  MorId cylinder_cofibration;
  MorId comparison;
  ObjId weak_target;
  MorId acyclic_leg;
  bool strong = false;
  friend bool operator==(const CylinderWitness&, const CylinderWitness&) = default;
};

/// Dual notion for a core fibration q: X -> Y:
///   D --comparison--> P --path_fibration--> X ×_Y X, with
///   path_fibration∘comparison = diagonal∘acyclic_leg and pr0∘path_fibration acyclic.
struct PathWitness {
  MorId base;
  ObjId product;
  MorId pr0;
  MorId pr1;
  MorId diagonal;
  ObjId path_object;
  MorId path_fibration;
  MorId comparison;
  ObjId weak_source;
  MorId acyclic_leg;
  bool strong = false;
};

namespace detail {

struct Glue {
  Pushout po;
  MorId fold;
};

inline Glue glue_along(const FiniteCategory& c, MorId i) {
  auto po = pushout(c, i, i);
  if (!po) throw ColimitAbsent("pushout of '" + c.name(i) + "' along itself does not exist");
  auto b = c.target(i);
  return {*po, pushout_mediator(c, i, i, *po, c.identity(b), c.identity(b))};
}

template <class Fn>
void for_each_cylinder(const PremodelContext& ctx, MorId i, CylinderMode mode, Fn&& fn) {
  const auto& c = ctx.cat();
  if (!ctx.core_cofibration(i)) throw PreconditionError("'" + c.name(i) + "' is not a cofibration with cofibrant domain");
  const auto g = glue_along(c, i);
  const auto b = c.target(i);
  for (auto d : c.objects()) {
    if (mode == CylinderMode::strong && d != b) continue;
    for (auto a : c.hom(b, d)) {
      if (mode == CylinderMode::strong ? a != c.identity(b) : !ctx.acyclic_cof.contains(a)) continue;
      const auto bottom = c.compose(a, g.fold);
      for (auto cyl : c.objects()) {
        for (auto k : c.hom(g.po.apex, cyl)) {
          if (!ctx.p.cofibrations().contains(k) || !ctx.acyclic_cof.contains(c.compose(k, g.po.from_b))) continue;
          for (auto e : c.hom(cyl, d)) {
            if (c.compose(e, k) != bottom) continue;
            CylinderWitness w{i, g.po.apex, g.po.from_b, g.po.from_c, g.fold, cyl, k, e, d, a, a == c.identity(b)};
            if (!fn(w)) return;
          }
        }
      }
    }
  }
}

}  // namespace detail

inline std::optional<CylinderWitness> find_cylinder(const PremodelContext& ctx, MorId i, CylinderMode mode) {
  std::optional<CylinderWitness> out;
  detail::for_each_cylinder(ctx, i, mode, [&](const CylinderWitness& w) {
    out = w;
    return false;
  });
  return out;
}

/// First witness in enumeration order (weak target, acyclic leg, cylinder, maps).
inline std::optional<CylinderWitness> find_cylinder(const PremodelStructure& p, MorId i, CylinderMode mode) { return find_cylinder(PremodelContext(p), i, mode); }

inline std::vector<CylinderWitness> all_cylinders(const PremodelContext& ctx, MorId i, CylinderMode mode) {
  std::vector<CylinderWitness> out;
  detail::for_each_cylinder(ctx, i, mode, [&](const CylinderWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

/// Re-checks every defining condition of a witness.
inline bool is_cylinder_witness(const PremodelContext& ctx, const CylinderWitness& w) {
  const auto& c = ctx.cat();
  if (!ctx.core_cofibration(w.base)) return false;
  auto po = pushout(c, w.base, w.base);
  if (!po) return false;
  // Any pushout is accepted, not only the canonical one.
  if (c.compose(w.in0, w.base) != c.compose(w.in1, w.base) || c.target(w.in0) != w.glued) return false;
  const auto b = c.target(w.base);
  if (c.source(w.fold) != w.glued || c.target(w.fold) != b || c.compose(w.fold, w.in0) != c.identity(b) || c.compose(w.fold, w.in1) != c.identity(b)) return false;
  if (c.source(w.cylinder_cofibration) != w.glued || c.target(w.cylinder_cofibration) != w.cylinder) return false;
  if (!ctx.p.cofibrations().contains(w.cylinder_cofibration)) return false;
  if (!ctx.acyclic_cof.contains(c.compose(w.cylinder_cofibration, w.in0))) return false;
  if (c.source(w.acyclic_leg) != b || c.target(w.acyclic_leg) != w.weak_target || !ctx.acyclic_cof.contains(w.acyclic_leg)) return false;
  if (c.source(w.comparison) != w.cylinder || c.target(w.comparison) != w.weak_target) return false;
  if (c.compose(w.comparison, w.cylinder_cofibration) != c.compose(w.acyclic_leg, w.fold)) return false;
  if (w.strong && w.acyclic_leg != c.identity(b)) return false;
  return true;
}

/// Turns a weak witness for i: A -> B with B fibrant into a strong one, using a
/// section of the acyclic leg obtained by lifting against B -> 1.
inline CylinderWitness weak_to_strong(const PremodelContext& ctx, const CylinderWitness& w) {
  const auto& c = ctx.cat();
  const auto b = c.target(w.base);
  if (!ctx.objects.fibrant(b)) throw PreconditionError("weak_to_strong needs a fibrant target, '" + c.name(b) + "' is not");
  if (w.strong) return w;
  const auto t = ctx.objects.terminal;
  LiftingSquare sq{w.acyclic_leg, c.hom(b, t).front(), c.identity(b), c.hom(w.weak_target, t).front()};
  auto s = has_lift(c, sq);
  if (!s) throw PreconditionError("acyclic leg '" + c.name(w.acyclic_leg) + "' has no section; the structure is not consistent");
  CylinderWitness out = w;
  out.comparison = c.compose(*s, w.comparison);
  out.weak_target = b;
  out.acyclic_leg = c.identity(b);
  out.strong = true;
  return out;
}

inline PathWitness path_from_dual_cylinder(const CylinderWitness& w) {
  return {w.base, w.glued, w.in0, w.in1, w.fold, w.cylinder, w.cylinder_cofibration, w.comparison, w.weak_target, w.acyclic_leg, w.strong};
}

/// Path objects are cylinders in the opposite structure; ids carry over unchanged.
inline std::optional<PathWitness> find_path(const PremodelStructure& p, MorId q, CylinderMode mode) {
  auto w = find_cylinder(dualize(p), q, mode);
  if (!w) return std::nullopt;
  return path_from_dual_cylinder(*w);
}

struct WeakModelVerdict {
  bool cylinder_axiom = true;
  bool path_axiom = true;
  bool alt_criterion = true;
  bool dual_alt_criterion = true;
  std::optional<MorId> cylinder_failure;
  std::optional<MorId> path_failure;
  std::optional<MorId> cancellation_failure;

  [[nodiscard]] bool ok() const { return cylinder_axiom && path_axiom; }
  /// Both criteria characterise weak model structures; they must agree.
  [[nodiscard]] bool consistent() const { return ok() == alt_criterion && alt_criterion == dual_alt_criterion; }
};

namespace detail {

// Strong cylinders for cofibrations from cofibrant to fibrant objects.
inline bool cylinder_axiom(const PremodelContext& ctx, std::optional<MorId>& failure) {
  const auto& c = ctx.cat();
  for (auto i : ctx.p.cofibrations().members()) {
    if (!ctx.objects.cofibrant(c.source(i)) || !ctx.objects.fibrant(c.target(i))) continue;
    if (!find_cylinder(ctx, i, CylinderMode::strong)) {
      failure = i;
      return false;
    }
  }
  return true;
}

// Weak cylinders for all core cofibrations plus right cancellation of acyclic cofibrations.
inline bool alt_criterion(const PremodelContext& ctx, std::optional<MorId>& failure) {
  const auto& c = ctx.cat();
  std::vector<MorId> core;
  for (auto i : ctx.p.cofibrations().members())
    if (ctx.objects.cofibrant(c.source(i))) core.push_back(i);
  for (auto i : core) {
    if (!find_cylinder(ctx, i, CylinderMode::weak)) {
      failure = i;
      return false;
    }
  }
  for (auto j : core) {
    if (!ctx.acyclic_cof.contains(j)) continue;
    for (auto i : core) {
      auto ij = c.try_compose(i, j);
      if (ij && ctx.acyclic_cof.contains(*ij) && !ctx.acyclic_cof.contains(i)) {
        failure = i;
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

inline WeakModelVerdict verify_weak_model(const PremodelStructure& p) {
  WeakModelVerdict v;
  const PremodelContext ctx(p);
  const auto dual = dualize(p);
  const PremodelContext dctx(dual);
  v.cylinder_axiom = detail::cylinder_axiom(ctx, v.cylinder_failure);
  v.path_axiom = detail::cylinder_axiom(dctx, v.path_failure);
  std::optional<MorId> ignored;
  v.alt_criterion = detail::alt_criterion(ctx, v.cancellation_failure);
  v.dual_alt_criterion = detail::alt_criterion(dctx, ignored);
  return v;
}

// ---------------------------------------------------------------------------
// Homotopy relation and homotopy category.

namespace detail {

inline bool homotopic_via(const FiniteCategory& c, const CylinderWitness& w, MorId f, MorId g) {
  const auto i0 = c.compose(w.cylinder_cofibration, w.in0);
  const auto i1 = c.compose(w.cylinder_cofibration, w.in1);
  for (auto h : c.hom(w.cylinder, c.target(f))) {
    if (c.compose(h, i0) == f && c.compose(h, i1) == g) return true;
  }
  return false;
}

inline std::vector<CylinderWitness> object_cylinders(const PremodelContext& ctx, ObjId x) {
  const auto& c = ctx.cat();
  auto ws = all_cylinders(ctx, c.hom(ctx.objects.initial, x).front(), CylinderMode::weak);
  if (ws.empty()) throw NonexistenceError("object '" + c.name(x) + "' has no weak cylinder");
  return ws;
}

inline void check_homotopy_args(const PremodelContext& ctx, MorId f, MorId g) {
  const auto& c = ctx.cat();
  if (c.source(f) != c.source(g) || c.target(f) != c.target(g)) throw InputError("'" + c.name(f) + "' and '" + c.name(g) + "' are not parallel");
  if (!ctx.objects.cofibrant(c.source(f))) throw PreconditionError("homotopy needs a cofibrant source, '" + c.name(c.source(f)) + "' is not");
  if (!ctx.objects.fibrant(c.target(f))) throw PreconditionError("homotopy needs a fibrant target, '" + c.name(c.target(f)) + "' is not");
}

}  // namespace detail

/// Left homotopy through the first weak cylinder of the source.
inline bool homotopic(const PremodelContext& ctx, MorId f, MorId g) {
  detail::check_homotopy_args(ctx, f, g);
  return detail::homotopic_via(ctx.cat(), detail::object_cylinders(ctx, ctx.cat().source(f)).front(), f, g);
}

inline bool homotopic(const PremodelStructure& p, MorId f, MorId g) { return homotopic(PremodelContext(p), f, g); }

/// The verdict through every weak cylinder of the source, in enumeration order.
inline std::vector<bool> homotopic_per_witness(const PremodelContext& ctx, MorId f, MorId g) {
  detail::check_homotopy_args(ctx, f, g);
  std::vector<bool> out;
  for (const auto& w : detail::object_cylinders(ctx, ctx.cat().source(f))) out.push_back(detail::homotopic_via(ctx.cat(), w, f, g));
  return out;
}

/// Ho(C): bifibrant objects, hom-sets partitioned into homotopy classes.
struct HomotopyCategory {
  std::vector<ObjId> objects;
  /// classes[i * n + j]: homotopy classes of maps objects[i] -> objects[j], each sorted.
  std::vector<std::vector<std::vector<MorId>>> classes;
  bool relation_is_equivalence = true;
  bool composition_well_defined = true;

  [[nodiscard]] std::size_t size() const { return objects.size(); }
  [[nodiscard]] std::optional<std::size_t> position(ObjId x) const {
    auto it = std::find(objects.begin(), objects.end(), x);
    if (it == objects.end()) return std::nullopt;
    return static_cast<std::size_t>(it - objects.begin());
  }
  [[nodiscard]] const std::vector<std::vector<MorId>>& hom(std::size_t i, std::size_t j) const { return classes.at(i * size() + j); }

  /// Index of the class of f inside hom(source, target).
  [[nodiscard]] std::size_t class_of(const FiniteCategory& c, MorId f) const {
    auto i = position(c.source(f));
    auto j = position(c.target(f));
    if (!i || !j) throw PreconditionError("'" + c.name(f) + "' is not a map between bifibrant objects");
    const auto& h = hom(*i, *j);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (std::binary_search(h[k].begin(), h[k].end(), f)) return k;
    throw InputError("'" + c.name(f) + "' is missing from the homotopy category");
  }

  /// An isomorphism class exists between objects[i] and objects[j].
  [[nodiscard]] bool isomorphic_via(const FiniteCategory& c, MorId f) const {
    auto i = *position(c.source(f));
    auto j = *position(c.target(f));
    const auto idi = class_of(c, c.identity(c.source(f)));
    const auto idj = class_of(c, c.identity(c.target(f)));
    for (const auto& back : hom(j, i)) {
      const auto g = back.front();
      if (class_of(c, c.compose(g, f)) == idi && class_of(c, c.compose(f, g)) == idj) return true;
    }
    return false;
  }
};

inline HomotopyCategory homotopy_category(const PremodelStructure& p) {
  const PremodelContext ctx(p);
  const auto& c = p.category();
  HomotopyCategory ho;
  for (auto x : c.objects())
    if (ctx.objects.bifibrant(x)) ho.objects.push_back(x);
  const auto n = ho.size();
  ho.classes.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ws = detail::object_cylinders(ctx, ho.objects[i]);
    const auto& w = ws.front();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& h = c.hom(ho.objects[i], ho.objects[j]);
      const auto k = h.size();
      std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) rel[a][b] = detail::homotopic_via(c, w, h[a], h[b]);
      for (std::size_t a = 0; a < k; ++a) {
        if (!rel[a][a]) ho.relation_is_equivalence = false;
        for (std::size_t b = 0; b < k; ++b) {
          if (rel[a][b] != rel[b][a]) ho.relation_is_equivalence = false;
          for (std::size_t e = 0; e < k; ++e)
            if (rel[a][b] && rel[b][e] && !rel[a][e]) ho.relation_is_equivalence = false;
        }
      }
      std::vector<bool> placed(k);
      auto& out = ho.classes[i * n + j];
      for (std::size_t a = 0; a < k; ++a) {
        if (placed[a]) continue;
        std::vector<MorId> cls;
        for (std::size_t b = a; b < k; ++b) {
          if (!placed[b] && rel[a][b]) {
            placed[b] = true;
            cls.push_back(h[b]);
          }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
      }
    }
  }
  if (!ho.relation_is_equivalence) return ho;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& f_cls : ho.hom(i, j))
          for (const auto& g_cls : ho.hom(j, k)) {
            const auto expect = ho.class_of(c, c.compose(g_cls.front(), f_cls.front()));
            for (auto f : f_cls)
              for (auto g : g_cls)
                if (ho.class_of(c, c.compose(g, f)) != expect) ho.composition_well_defined = false;
          }
  return ho;
}

// ---------------------------------------------------------------------------
// Replacements and equivalences.

struct Replacement {
  ObjId object;
  MorId map;  // X^cof -> X, or X -> X^fib
  friend bool operator==(const Replacement&, const Replacement&) = default;
};

/// Factor 0 -> X as a cofibration followed by an anodyne fibration.
inline Replacement cofibrant_replacement(const PremodelContext& ctx, ObjId x) {
  const auto& c = ctx.cat();
  const auto h = c.hom(ctx.objects.initial, x).front();
  auto f = factorize(c, h, ctx.p.cofibrations(), ctx.p.anodyne_fibrations());
  if (!f) throw NoFactorization("0 -> '" + c.name(x) + "' has no (cofibration, anodyne fibration) factorization", h);
  return {c.target(f->first), f->second};
}

/// Factor X -> 1 as an anodyne cofibration followed by a fibration.
inline Replacement fibrant_replacement(const PremodelContext& ctx, ObjId x) {
  const auto& c = ctx.cat();
  const auto h = c.hom(x, ctx.objects.terminal).front();
  auto f = factorize(c, h, ctx.p.anodyne_cofibrations(), ctx.p.fibrations());
  if (!f) throw NoFactorization("'" + c.name(x) + "' -> 1 has no (anodyne cofibration, fibration) factorization", h);
  return {c.target(f->first), f->first};
}

struct EquivalenceCheck {
  bool equivalence = false;
  std::optional<Replacement> source_replacement;
  std::optional<Replacement> target_replacement;
  MorId reduced;         // X' -> Y', cofibrant to fibrant
  MorId cofibration;     // reduced = anodyne_fibration ∘ cofibration
  MorId anodyne_fibration;
};

inline bool in_cf(const PremodelContext& ctx, MorId f) {
  const auto& c = ctx.cat();
  return ctx.objects.cof_or_fib(c.source(f)) && ctx.objects.cof_or_fib(c.target(f));
}

/// Replace the source cofibrantly and the target fibrantly when needed, factor
/// the result, and test the cofibration part for acyclicity.
inline EquivalenceCheck is_equivalence(const PremodelContext& ctx, MorId f) {
  const auto& c = ctx.cat();
  c.check(f);
  if (!in_cf(ctx, f)) throw PreconditionError("'" + c.name(f) + "' does not go between fibrant-or-cofibrant objects");
  EquivalenceCheck out;
  MorId g = f;
  if (!ctx.objects.cofibrant(c.source(f))) {
    out.source_replacement = cofibrant_replacement(ctx, c.source(f));
    g = c.compose(g, out.source_replacement->map);
  }
  if (!ctx.objects.fibrant(c.target(f))) {
    out.target_replacement = fibrant_replacement(ctx, c.target(f));
    g = c.compose(out.target_replacement->map, g);
  }
  out.reduced = g;
  auto fac = factorize(c, g, ctx.p.cofibrations(), ctx.p.anodyne_fibrations());
  if (!fac) throw NoFactorization("'" + c.name(g) + "' has no (cofibration, anodyne fibration) factorization", g);
  out.cofibration = fac->first;
  out.anodyne_fibration = fac->second;
  out.equivalence = ctx.acyclic_cof.contains(fac->first);
  return out;
}

inline EquivalenceCheck is_equivalence(const PremodelStructure& p, MorId f) { return is_equivalence(PremodelContext(p), f); }

/// Arrows whose endpoints are both fibrant or cofibrant.
inline ArrowClass cf_arrows(const PremodelContext& ctx) {
  return ArrowClass::where(ctx.cat(), [&](MorId f) { return in_cf(ctx, f); });
}

/// The class W, as a subset of cf_arrows.
inline ArrowClass equivalences(const PremodelContext& ctx) {
  return ArrowClass::where(ctx.cat(), [&](MorId f) { return in_cf(ctx, f) && is_equivalence(ctx, f).equivalence; });
}

inline ArrowClass equivalences(const PremodelStructure& p) { return equivalences(PremodelContext(p)); }

}  // namespace hocat
