#pragma once

// Exhaustive property suites over one structure. Each returns the list of
// violations found, so the Catch2 cases and the acceptance driver share them.

#include <sstream>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "support/corpus.hpp"

namespace suites {

using namespace hocat;
using Violations = std::vector<std::string>;

namespace detail {

inline std::string nm(const FiniteCategory& c, MorId f) { return c.name(f); }

inline void add(Violations& out, const std::string& where, const std::string& what) { out.push_back(where + ": " + what); }

inline std::string list(const FiniteCategory& c, const ArrowClass& s) {
  std::string out = "{";
  for (const auto& n : names_of(c, s)) out += (out.size() > 1 ? ", " : "") + n;
  return out + "}";
}

/// Least K ⊇ base with: j∘i ∈ K, j ∈ K, i and j in `among` ⟹ i ∈ K.
inline ArrowClass left_cancellation_closure(const FiniteCategory& c, ArrowClass k, const ArrowClass& among) {
  for (bool grew = true; grew;) {
    grew = false;
    for (auto i : among.members()) {
      if (k.contains(i)) continue;
      for (auto j : among.members()) {
        auto ji = c.try_compose(j, i);
        if (ji && k.contains(j) && k.contains(*ji)) {
          k.insert(i);
          grew = true;
          break;
        }
      }
    }
  }
  return k;
}

inline bool lifts_against_all(const FiniteCategory& c, MorId f, const ArrowClass& rights) {
  for (auto g : rights.members())
    if (!llp(c, f, g)) return false;
  return true;
}

inline bool lifted_by_all(const FiniteCategory& c, const ArrowClass& lefts, MorId g) {
  for (auto f : lefts.members())
    if (!llp(c, f, g)) return false;
  return true;
}

}  // namespace detail

// -- premodel lemmas --------------------------------------------------------

/// Acyclic cofibrations with fibrant target are anodyne.
inline Violations naiv_fibrant_target(const PremodelStructure& p) {
  Violations out;
  const auto& c = p.category();
  const auto t = object_table(p);
  for (auto f : acyclic_cofibrations(p).members())
    if (t.fibrant(c.target(f)) && !p.anodyne_cofibrations().contains(f)) detail::add(out, p.name(), "acyclic cofibration " + c.name(f) + " with fibrant target is not anodyne");
  return out;
}

/// k∘j and j∘i acyclic for composable cofibrations ⟹ i acyclic.
inline Violations two_out_of_six_acyclic(const PremodelStructure& p) {
  Violations out;
  const auto& c = p.category();
  const auto acyc = acyclic_cofibrations(p);
  const auto cof = p.cofibrations().members();
  for (auto i : cof)
    for (auto j : cof) {
      auto ji = c.try_compose(j, i);
      if (!ji || !acyc.contains(*ji)) continue;
      for (auto k : cof) {
        auto kj = c.try_compose(k, j);
        if (kj && acyc.contains(*kj) && !acyc.contains(i))
          detail::add(out, p.name(), "k=" + c.name(k) + " j=" + c.name(j) + " i=" + c.name(i) + ": kj and ji acyclic but i is not");
      }
    }
  return out;
}

/// Acyclic cofibrations are the left-cancellation closure of the anodyne ones,
/// and the same holds inside the core.
inline Violations left_cancellation_characterisation(const PremodelStructure& p) {
  Violations out;
  const auto& c = p.category();
  const auto closure = detail::left_cancellation_closure(c, p.anodyne_cofibrations(), p.cofibrations());
  const auto acyc = acyclic_cofibrations(p);
  if (closure != acyc) detail::add(out, p.name(), "closure " + detail::list(c, closure) + " differs from acyclic " + detail::list(c, acyc));
  const auto core = core_cofibrations(p);
  const auto core_closure = detail::left_cancellation_closure(c, p.anodyne_cofibrations() & core, core);
  if (core_closure != core_acyclic_cofibrations(p)) detail::add(out, p.name(), "core closure " + detail::list(c, core_closure) + " differs from core acyclic cofibrations");
  return out;
}

/// The three premodel lemmas on p and on its dual, plus the duality of the classes.
inline Violations premodel_lemmas(const PremodelStructure& p) {
  Violations out;
  const auto d = dualize(p);
  for (const auto* s : {&p, &d}) {
    for (auto&& v : {naiv_fibrant_target(*s), two_out_of_six_acyclic(*s), left_cancellation_characterisation(*s)}) out.insert(out.end(), v.begin(), v.end());
  }
  if (acyclic_cofibrations(d) != acyclic_fibrations(p)) detail::add(out, p.name(), "acyclic fibrations do not dualize");
  if (acyclic_fibrations(d) != acyclic_cofibrations(p)) detail::add(out, p.name(), "acyclic cofibrations do not dualize");
  if (acyclic_cofibrations(p, AcyclicReading::both_fibrant) != acyclic_cofibrations(p, AcyclicReading::target_fibrant) ||
      acyclic_fibrations(p, AcyclicReading::both_fibrant) != acyclic_fibrations(p, AcyclicReading::target_fibrant))
    detail::add(out, p.name(), "the two readings of acyclicity disagree");
  return out;
}

// -- homotopy ---------------------------------------------------------------

/// Every cylinder witness for every cofibrant X gives the same homotopy verdicts.
inline Violations witness_independence(const PremodelStructure& p) {
  Violations out;
  const PremodelContext ctx(p);
  const auto& c = p.category();
  for (auto x : c.objects()) {
    if (!ctx.objects.cofibrant(x)) continue;
    for (auto y : c.objects()) {
      if (!ctx.objects.fibrant(y)) continue;
      for (auto f : c.hom(x, y))
        for (auto g : c.hom(x, y)) {
          auto v = homotopic_per_witness(ctx, f, g);
          if (v.empty()) {
            detail::add(out, p.name(), "no cylinder for " + c.name(x));
            continue;
          }
          for (bool b : v)
            if (b != v.front()) detail::add(out, p.name(), c.name(f) + " ~ " + c.name(g) + " depends on the cylinder");
          if (homotopic(ctx, f, g) != v.front()) detail::add(out, p.name(), "homotopic disagrees with its witnesses");
          if (f == g && !v.front()) detail::add(out, p.name(), c.name(f) + " is not homotopic to itself");
        }
    }
  }
  return out;
}

/// 2-out-of-3 and 2-out-of-6 for W on 𝒞^{c∨f}; core acyclicity matches W.
inline Violations equivalence_laws(const PremodelStructure& p) {
  Violations out;
  const PremodelContext ctx(p);
  const auto& c = p.category();
  const auto cf = cf_arrows(ctx);
  const auto w = equivalences(ctx);
  auto inW = [&](MorId f) { return w.contains(f); };
  for (auto f : cf.members())
    for (auto g : cf.members()) {
      auto gf = c.try_compose(g, f);
      if (!gf) continue;
      const int n = inW(f) + inW(g) + inW(*gf);
      if (n == 2) detail::add(out, p.name(), "2-out-of-3 fails for " + c.name(g) + " . " + c.name(f));
      for (auto h : cf.members()) {
        auto hg = c.try_compose(h, g);
        if (!hg || !inW(*gf) || !inW(*hg)) continue;
        const auto hgf = c.compose(h, *gf);
        if (!inW(f) || !inW(g) || !inW(h) || !inW(hgf)) detail::add(out, p.name(), "2-out-of-6 fails for " + c.name(h) + ", " + c.name(g) + ", " + c.name(f));
      }
    }
  for (auto i : core_cofibrations(p).members())
    if (in_cf(ctx, i) && ctx.acyclic_cof.contains(i) != inW(i)) detail::add(out, p.name(), "core cofibration " + c.name(i) + ": acyclic and W disagree");
  for (auto q : core_fibrations(p).members())
    if (in_cf(ctx, q) && ctx.acyclic_fib.contains(q) != inW(q)) detail::add(out, p.name(), "core fibration " + c.name(q) + ": acyclic and W disagree");
  return out;
}

inline Violations weak_model_duality(const PremodelStructure& p) {
  Violations out;
  const auto a = verify_weak_model(p);
  const auto b = verify_weak_model(dualize(p));
  if (a.ok() != b.ok()) detail::add(out, p.name(), "weak model verdict changes under duality");
  if (a.cylinder_axiom != b.path_axiom || a.path_axiom != b.cylinder_axiom) detail::add(out, p.name(), "cylinder and path axioms do not swap under duality");
  if (!a.consistent()) detail::add(out, p.name(), "alternative criterion disagrees with the cylinder and path axioms");
  return out;
}

// -- localization -------------------------------------------------------------

/// i ⧄ q∘p and ∇i ⧄ q ⟹ i ⧄ p, for every weak cylinder of i.
inline Violations nabla_lift(const PremodelStructure& p) {
  Violations out;
  const PremodelContext ctx(p);
  const auto& c = p.category();
  const auto fibs = core_fibrations(p).members();
  for (auto i : core_cofibrations(p).members()) {
    const auto cyls = all_cylinders(ctx, i, CylinderMode::weak);
    if (cyls.empty()) detail::add(out, p.name(), "core cofibration " + c.name(i) + " has no weak cylinder");
    for (auto pf : fibs)
      for (auto q : fibs) {
        auto qp = c.try_compose(q, pf);
        if (!qp || !llp(c, i, *qp) || llp(c, i, pf)) continue;
        for (const auto& w : cyls)
          if (llp(c, w.cylinder_cofibration, q))
            detail::add(out, p.name(), "i=" + c.name(i) + " p=" + c.name(pf) + " q=" + c.name(q) + " with nabla " + c.name(w.cylinder_cofibration));
      }
  }
  return out;
}

// -- classification -----------------------------------------------------------

/// rlp against core cofibrations ⟹ WL; between cofibrant objects, llp against core fibrations ⟹ WL.
inline Violations acyclic_fib_equiv(const PremodelStructure& p) {
  Violations out;
  const auto& c = p.category();
  const PremodelContext ctx(p);
  if (recognize_left_semi(p).fresse()) {
    const auto wl = compute_WL(p);
    const auto core_cof = core_cofibrations(p);
    const auto core_fib = core_fibrations(p);
    for (auto f : c.morphisms()) {
      if (detail::lifted_by_all(c, core_cof, f) && !wl.contains(f)) detail::add(out, p.name(), c.name(f) + " has rlp against core cofibrations but is not in WL");
      if (ctx.objects.cofibrant(c.source(f)) && ctx.objects.cofibrant(c.target(f)) && detail::lifts_against_all(c, f, core_fib) && !wl.contains(f))
        detail::add(out, p.name(), c.name(f) + " between cofibrant objects has llp against core fibrations but is not in WL");
    }
  }
  if (recognize_right_semi(p).fresse()) {
    const auto wr = compute_WR(p);
    const auto core_cof = core_cofibrations(p);
    const auto core_fib = core_fibrations(p);
    for (auto f : c.morphisms()) {
      if (detail::lifts_against_all(c, f, core_fib) && !wr.contains(f)) detail::add(out, p.name(), c.name(f) + " has llp against core fibrations but is not in WR");
      if (ctx.objects.fibrant(c.source(f)) && ctx.objects.fibrant(c.target(f)) && detail::lifted_by_all(c, core_cof, f) && !wr.contains(f))
        detail::add(out, p.name(), c.name(f) + " between fibrant objects has rlp against core cofibrations but is not in WR");
    }
  }
  return out;
}

namespace detail {

inline void semi_saturation(Violations& out, const PremodelStructure& p, const SemiVerdict& v, const ArrowClass& wl, const std::string& side) {
  const auto& c = p.category();
  const PremodelContext ctx(p);
  const auto w = equivalences(ctx);
  const auto acf = acyclic_fibrations(p);
  const auto acc = acyclic_cofibrations(p);
  for (auto f : p.fibrations().members())
    if (acf.contains(f) != wl.contains(f)) add(out, p.name(), side + ": fibration " + c.name(f) + " acyclic and trivial disagree");
  for (auto i : core_cofibrations(p).members()) {
    if (acc.contains(i) != wl.contains(i)) add(out, p.name(), side + ": core cofibration " + c.name(i) + " acyclic and trivial disagree");
    if (wl.contains(i) && !p.anodyne_cofibrations().contains(i)) add(out, p.name(), side + ": trivial core cofibration " + c.name(i) + " is not anodyne");
  }
  for (auto f : cf_arrows(ctx).members())
    if (w.contains(f) != wl.contains(f)) add(out, p.name(), side + ": W and the semi-model equivalences disagree on " + c.name(f));
  if (v.spitzweck())
    for (auto f : p.fibrations().members())
      if (wl.contains(f) && !p.anodyne_fibrations().contains(f)) add(out, p.name(), side + ": trivial fibration " + c.name(f) + " is not anodyne");
}

}  // namespace detail

/// Saturation of semi-model structures, on p for WL and on its dual for WR.
inline Violations saturation_of_semi(const PremodelStructure& p) {
  Violations out;
  const auto l = recognize_left_semi(p);
  if (l.fresse()) detail::semi_saturation(out, p, l, compute_WL(p), "left");
  const auto d = dualize(p);
  const auto r = recognize_left_semi(d);
  if (r.fresse()) detail::semi_saturation(out, d, r, compute_WL(d), "right");
  if (r.fresse() != recognize_right_semi(p).fresse()) detail::add(out, p.name(), "right semi verdict does not dualize");
  return out;
}

/// On core-left-saturated left-semi structures, a fibration is in WL iff acyclic.
inline Violations tractable_acyclic_fibrations(const PremodelStructure& p) {
  Violations out;
  const auto l = recognize_left_semi(p);
  if (!l.fresse()) return out;
  const auto wl = compute_WL(p);
  const auto acf = acyclic_fibrations(p);
  for (auto f : p.fibrations().members())
    if (wl.contains(f) != acf.contains(f)) detail::add(out, p.name(), "fibration " + p.category().name(f) + ": WL and acyclic disagree");
  return out;
}

/// Two-sided structures: WL and WR satisfy 2-out-of-6 and retract closure;
/// fibrations are acyclic iff in WL, cofibrations iff in WR.
inline Violations two_sided_properties(const PremodelStructure& p) {
  Violations out;
  if (!two_sided_check(p).ok()) return out;
  const auto& c = p.category();
  const auto wl = compute_WL(p);
  const auto wr = compute_WR(p);
  for (const auto* k : {&wl, &wr}) {
    const std::string which = k == &wl ? "WL" : "WR";
    for (auto f : c.morphisms())
      for (auto g : c.morphisms()) {
        auto gf = c.try_compose(g, f);
        if (!gf || !k->contains(*gf)) continue;
        for (auto h : c.morphisms()) {
          auto hg = c.try_compose(h, g);
          if (!hg || !k->contains(*hg)) continue;
          if (!k->contains(f) || !k->contains(g) || !k->contains(h) || !k->contains(c.compose(h, *gf)))
            detail::add(out, p.name(), which + " fails 2-out-of-6 at " + c.name(h) + ", " + c.name(g) + ", " + c.name(f));
        }
      }
    if (retract_closure(c, *k) != *k) detail::add(out, p.name(), which + " is not closed under retracts");
  }
  const auto acf = acyclic_fibrations(p);
  const auto acc = acyclic_cofibrations(p);
  for (auto f : p.fibrations().members())
    if (acf.contains(f) != wl.contains(f)) detail::add(out, p.name(), "fibration " + c.name(f) + ": acyclic and WL disagree");
  for (auto f : p.cofibrations().members())
    if (acc.contains(f) != wr.contains(f)) detail::add(out, p.name(), "cofibration " + c.name(f) + ": acyclic and WR disagree");
  return out;
}

// -- saturation contracts -------------------------------------------------------

inline Violations same_core(const PremodelStructure& a, const PremodelStructure& b, const std::string& where) {
  Violations out;
  const auto ta = object_table(a), tb = object_table(b);
  if (ta.status != tb.status) detail::add(out, where, "cofibrant or fibrant objects changed");
  if (core_cofibrations(a) != core_cofibrations(b)) detail::add(out, where, "core cofibrations changed");
  if (core_fibrations(a) != core_fibrations(b)) detail::add(out, where, "core fibrations changed");
  if (core_acyclic_cofibrations(a) != core_acyclic_cofibrations(b)) detail::add(out, where, "core acyclic cofibrations changed");
  if (core_acyclic_fibrations(a) != core_acyclic_fibrations(b)) detail::add(out, where, "core acyclic fibrations changed");
  return out;
}

inline bool flag_of(const SaturationFlags& f, SaturationMode m) {
  switch (m) {
    case SaturationMode::L: return f.left;
    case SaturationMode::Lc: return f.core_left;
    case SaturationMode::R: return f.right;
    case SaturationMode::Rc: return f.core_right;
  }
  return false;
}

/// Core preserved, idempotent, flag set, other side's flags preserved, duality;
/// bi-saturation sets both flags.
inline Violations saturation_contracts(const PremodelStructure& p) {
  Violations out;
  for (auto m : {SaturationMode::L, SaturationMode::Lc, SaturationMode::R, SaturationMode::Rc}) {
    const std::string where = p.name() + " mode " + to_string(m);
    const auto s = saturate(p, m);
    if (!verify_premodel(s).ok()) detail::add(out, where, "result is not a premodel structure");
    auto core = same_core(p, s, where);
    out.insert(out.end(), core.begin(), core.end());
    if (!(saturate(s, m) == s)) detail::add(out, where, "not idempotent");
    const auto fs = saturation_flags(s);
    const auto fp = saturation_flags(p);
    if (!flag_of(fs, m)) detail::add(out, where, "flag not set");
    const bool left = m == SaturationMode::L || m == SaturationMode::Lc;
    if (left && ((fp.right && !fs.right) || (fp.core_right && !fs.core_right))) detail::add(out, where, "right-side flag lost");
    if (!left && ((fp.left && !fs.left) || (fp.core_left && !fs.core_left))) detail::add(out, where, "left-side flag lost");
    if (flag_of(fp, m) && !(s == p)) detail::add(out, where, "already saturated input changed");
  }
  if (!(saturate(dualize(p), SaturationMode::L) == dualize(saturate(p, SaturationMode::R)))) detail::add(out, p.name(), "L on the dual is not the dual of R");
  if (!(saturate(dualize(p), SaturationMode::Lc) == dualize(saturate(p, SaturationMode::Rc)))) detail::add(out, p.name(), "Lc on the dual is not the dual of Rc");
  const auto bi = bi_saturate_both(p);
  if (!saturation_flags(bi.right_of_left).bi()) detail::add(out, p.name(), "RL is not bi-saturated");
  if (!saturation_flags(bi.left_of_right).bi()) detail::add(out, p.name(), "LR is not bi-saturated");
  if (!saturation_flags(bi_saturate(p)).bi()) detail::add(out, p.name(), "bi_saturate is not bi-saturated");
  return out;
}

/// Left saturation is the smallest left-saturated target reachable through the
/// identity: for every left-saturated q with id: p -> q left Quillen, AC(L p) ⊆ AC(q).
inline Violations saturation_universality(const PremodelStructure& p, const std::vector<const PremodelStructure*>& targets) {
  Violations out;
  const auto lp = saturate(p, SaturationMode::L);
  for (const auto* q : targets) {
    if (!same_category(p.category_ptr(), q->category_ptr())) continue;
    if (!verify_premodel(*q).ok() || !saturation_flags(*q).left) continue;
    const bool left_quillen = p.cofibrations().subset_of(q->cofibrations()) && q->fibrations().subset_of(p.fibrations());
    if (left_quillen && !lp.anodyne_cofibrations().subset_of(q->anodyne_cofibrations()))
      detail::add(out, p.name() + " -> " + q->name(), "left saturation does not factor through the target");
  }
  return out;
}

// -- localization preservation ------------------------------------------------

struct LocalizationStats {
  std::size_t left_semi_inputs = 0;
  std::size_t two_sided_inputs = 0;
  std::size_t localizations = 0;
};

/// S ranges over the empty set and every single arrow between fibrant-or-cofibrant objects.
inline std::vector<std::vector<MorId>> localizers(const PremodelStructure& p) {
  std::vector<std::vector<MorId>> out{{}};
  const PremodelContext ctx(p);
  for (auto f : cf_arrows(ctx).members()) out.push_back({f});
  return out;
}

inline Violations localization_preservation(const PremodelStructure& p, LocalizationStats* stats = nullptr) {
  Violations out;
  if (!verify_premodel(p).ok() || !verify_weak_model(p).ok()) return out;
  const auto& c = p.category();
  const auto lin = recognize_left_semi(p);
  const auto rin = recognize_right_semi(p);
  const bool two = two_sided_check(p).ok();
  const auto flags = saturation_flags(p);
  if (stats) {
    stats->left_semi_inputs += lin.fresse();
    stats->two_sided_inputs += two;
  }
  for (const auto& s : localizers(p)) {
    std::string where = p.name() + " at {";
    for (auto f : s) where += c.name(f);
    where += "}";
    std::optional<LocalizationResult> lc, l;
    try {
      lc = left_bousfield(p, s, SaturationMode::Lc);
      l = left_bousfield(p, s, SaturationMode::L);
    } catch (const NonexistenceError& e) {
      detail::add(out, where, std::string("localization does not exist: ") + e.what());
      continue;
    }
    if (stats) ++stats->localizations;
    for (const auto* r : {&*lc, &*l}) {
      const auto post = r->postconditions();
      if (!post) detail::add(out, where, "postconditions fail");
    }
    const auto lout = recognize_left_semi(lc->structure);
    if (lin.fresse() && !lout.fresse()) detail::add(out, where, "Lc of a Fresse left semi-model structure is not left semi");
    if (lin.spitzweck() && !lout.spitzweck()) detail::add(out, where, "Lc of a Spitzweck left semi-model structure is not Spitzweck");
    if (rin.fresse() && !recognize_right_semi(l->structure).fresse()) detail::add(out, where, "L of a right semi-model structure is not right semi");
    if (rin.spitzweck() && !recognize_right_semi(l->structure).spitzweck()) detail::add(out, where, "L of a Spitzweck right semi-model structure is not Spitzweck");
    if (two && !two_sided_check(l->structure).ok()) detail::add(out, where, "saturated localization of a two-sided structure is not two-sided");
    for (const auto* r : {&*lc, &*l}) {
      const auto f2 = saturation_flags(r->structure);
      if ((flags.right && !f2.right) || (flags.core_right && !f2.core_right)) detail::add(out, where, "right saturation lost by a left localization");
    }
    // Ho of the localization sits fully faithfully inside Ho(p).
    const auto ho = homotopy_category(p);
    const auto hl = homotopy_category(lc->structure);
    for (std::size_t i = 0; i < hl.size(); ++i)
      for (std::size_t j = 0; j < hl.size(); ++j) {
        auto pi = ho.position(hl.objects[i]);
        auto pj = ho.position(hl.objects[j]);
        if (!pi || !pj) {
          detail::add(out, where, "bifibrant object of the localization is not bifibrant before");
          continue;
        }
        if (hl.hom(i, j) != ho.hom(*pi, *pj)) detail::add(out, where, "hom-classes change between " + c.name(hl.objects[i]) + " and " + c.name(hl.objects[j]));
      }
  }
  // Dual statements through the opposite structure.
  const auto d = dualize(p);
  const auto ld = recognize_left_semi(d);
  if (ld.fresse())
    for (const auto& s : localizers(d)) {
      try {
        const auto r = left_bousfield(d, s, SaturationMode::Lc);
        if (!recognize_left_semi(r.structure).fresse()) detail::add(out, p.name() + " (dual)", "right localization of a right semi-model structure is not right semi");
      } catch (const NonexistenceError& e) {
        detail::add(out, p.name() + " (dual)", std::string("localization does not exist: ") + e.what());
      }
    }
  return out;
}

// -- enumeration order ----------------------------------------------------------

/// Homotopy, equivalence and classification verdicts do not depend on the
/// enumeration order of objects and arrows.
inline Violations reversed_order_invariance(const PremodelStructure& p) {
  Violations out;
  const auto& c = p.category();
  const auto rc = reversed(c);
  const auto q = transport(p, rc);
  const auto& r = q.category();
  auto to_r = [&](MorId f) { return r.morphism(c.name(f)); };
  const bool prem = verify_premodel(p).ok();
  if (prem != verify_premodel(q).ok()) detail::add(out, p.name(), "premodel verdict depends on the order");
  if (!prem) return out;
  const auto wp = verify_weak_model(p), wq = verify_weak_model(q);
  if (wp.ok() != wq.ok()) detail::add(out, p.name(), "weak model verdict depends on the order");
  if (!wp.ok()) return out;
  const PremodelContext cp(p), cq(q);
  for (auto x : c.objects()) {
    if (!cp.objects.cofibrant(x)) continue;
    for (auto y : c.objects()) {
      if (!cp.objects.fibrant(y)) continue;
      for (auto f : c.hom(x, y))
        for (auto g : c.hom(x, y))
          if (homotopic(cp, f, g) != homotopic(cq, to_r(f), to_r(g))) detail::add(out, p.name(), c.name(f) + " ~ " + c.name(g) + " depends on the order");
    }
  }
  for (auto f : cf_arrows(cp).members())
    if (is_equivalence(cp, f).equivalence != is_equivalence(cq, to_r(f)).equivalence) detail::add(out, p.name(), "is_equivalence(" + c.name(f) + ") depends on the order");
  const auto a = classify_full(p), b = classify_full(q);
  auto same = [&](const std::optional<ArrowClass>& x, const std::optional<ArrowClass>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || transport(*x, c, r) == *y;
  };
  if (a.is_left_semi() != b.is_left_semi() || a.is_right_semi() != b.is_right_semi() || a.is_two_sided() != b.is_two_sided() || a.is_quillen() != b.is_quillen())
    detail::add(out, p.name(), "classification ladder depends on the order");
  if (!same(a.equivalences, b.equivalences) || !same(a.wl, b.wl) || !same(a.wr, b.wr)) detail::add(out, p.name(), "W, WL or WR depends on the order");
  return out;
}

// -- oracle agreement -----------------------------------------------------------

inline oracle::Ladder engine_ladder(const ClassificationReport& r) {
  oracle::Ladder l;
  l.premodel = r.is_premodel();
  l.weak_model = r.is_weak_model();
  l.left_semi = r.is_left_semi();
  l.left_spitzweck = r.left_semi && r.left_semi->spitzweck();
  l.right_semi = r.is_right_semi();
  l.right_spitzweck = r.right_semi && r.right_semi->spitzweck();
  l.two_sided = r.is_two_sided();
  l.quillen = r.is_quillen();
  return l;
}

inline Violations oracle_agreement(const PremodelStructure& p) {
  Violations out;
  const auto& c = p.category();
  const auto s = oracle::structure_of(p);
  const auto t = oracle::table_of(c);
  auto cmp = [&](const std::string& what, const ArrowClass& engine, const oracle::Cls& ref) {
    if (oracle::to_cls(engine) != ref) detail::add(out, p.name(), what + " differs from the oracle");
  };
  cmp("rlp(cofibrations)", complement_rlp(c, p.cofibrations()), oracle::rlp(t, s.C));
  cmp("llp(fibrations)", complement_llp(c, p.fibrations()), oracle::llp(t, s.F));
  const bool prem = verify_premodel(p).ok();
  if (prem != oracle::is_premodel(s)) detail::add(out, p.name(), "premodel verdict differs from the oracle");
  const auto report = classify_full(p);
  if (!(engine_ladder(report) == oracle::ladder(s))) detail::add(out, p.name(), "classification ladder differs from the oracle");
  if (!prem) return out;
  const auto tab = object_table(p);
  const auto ocof = oracle::cofibrant(s), ofib = oracle::fibrant(s);
  for (auto x : c.objects())
    if (tab.cofibrant(x) != ocof[x.index()] || tab.fibrant(x) != ofib[x.index()]) detail::add(out, p.name(), "object status of " + c.name(x) + " differs from the oracle");
  cmp("acyclic cofibrations", acyclic_cofibrations(p), oracle::acyclic_cof(s));
  cmp("acyclic fibrations", acyclic_fibrations(p), oracle::acyclic_fib(s));
  cmp("core cofibrations", core_cofibrations(p), oracle::core_cof(s));
  cmp("core fibrations", core_fibrations(p), oracle::core_fib(s));
  const auto fl = saturation_flags(p);
  const auto of = oracle::saturation(s);
  if (fl.left != of.left || fl.core_left != of.core_left || fl.right != of.right || fl.core_right != of.core_right)
    detail::add(out, p.name(), "saturation flags differ from the oracle");
  const bool wm = verify_weak_model(p).ok();
  if (wm != oracle::is_weak_model(s)) detail::add(out, p.name(), "weak model verdict differs from the oracle");
  if (!wm) return out;
  PremodelContext ctx(p);
  if (recognize_left_semi(p).strong_objects != oracle::strong_objects(s)) detail::add(out, p.name(), "strong cylinders differ from the oracle");
  if (recognize_right_semi(p).strong_objects != oracle::strong_objects(oracle::dual(s))) detail::add(out, p.name(), "strong paths differ from the oracle");
  bool ambiguous = false;
  const auto ow = oracle::equivalences(s, &ambiguous);
  if (ambiguous) detail::add(out, p.name(), "oracle W depends on replacement choices");
  cmp("W", equivalences(ctx), ow);
  if (report.wl) {
    bool amb = false;
    cmp("WL", *report.wl, oracle::left_equivalences(s, &amb));
    if (amb) detail::add(out, p.name(), "oracle WL depends on choices");
    if (c.is_thin()) cmp("WL (thin reachability)", *report.wl, oracle::thin_left_equivalences(s));
  }
  if (report.wr) {
    bool amb = false;
    cmp("WR", *report.wr, oracle::right_equivalences(s, &amb));
    if (amb) detail::add(out, p.name(), "oracle WR depends on choices");
    if (c.is_thin()) cmp("WR (thin reachability)", *report.wr, oracle::thin_right_equivalences(s));
  }
  return out;
}

/// Joins violation lists for diagnostics.
inline std::string summary(const Violations& v, std::size_t limit = 5) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? "; " : "") << v[i];
  if (v.size() > limit) os << "; ... (" << v.size() << " total)";
  return os.str();
}

}  // namespace suites
