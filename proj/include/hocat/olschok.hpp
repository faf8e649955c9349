#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hocat/classify.hpp"
#include "hocat/saturate.hpp"

namespace hocat {

/// Natural transformation between functors C -> D, one component per object of C.
struct NatTrans {
  std::string name;
  FunctorData source;
  FunctorData target;
  std::vector<MorId> components;

  [[nodiscard]] MorId operator()(ObjId x) const { return components.at(x.index()); }
};

inline std::vector<Violation> check_nat_trans(const NatTrans& t) {
  check_shape(t.source);
  check_shape(t.target);
  if (!same_category(t.source.source, t.target.source) || !same_category(t.source.target, t.target.target))
    throw InputError("transformation '" + t.name + "' relates functors with different endpoints");
  const auto& C = *t.source.source;
  const auto& D = *t.source.target;
  if (t.components.size() != C.object_count()) throw InputError("transformation '" + t.name + "' does not have one component per object");
  for (auto m : t.components) D.check(m);
  std::vector<Violation> out;
  for (auto x : C.objects()) {
    const auto m = t(x);
    if (D.source(m) != t.source(x) || D.target(m) != t.target(x)) out.push_back({"component-incidence", t.name + " at '" + C.name(x) + "' has the wrong endpoints"});
  }
  if (!out.empty()) return out;
  for (auto f : C.morphisms()) {
    if (D.compose(t(C.target(f)), t.source(f)) != D.compose(t.target(f), t(C.source(f))))
      out.push_back({"naturality", t.name + " is not natural at '" + C.name(f) + "'"});
  }
  return out;
}

inline NatTrans identity_transformation(const FunctorData& F) {
  NatTrans t{"id_" + F.name, F, F, {}};
  for (auto x : F.source->objects()) t.components.push_back(F.target->identity(F(x)));
  return t;
}

/// μ∘λ.
inline NatTrans vertical(const NatTrans& mu, const NatTrans& lambda) {
  NatTrans t{mu.name + "." + lambda.name, lambda.source, mu.target, {}};
  const auto& D = *lambda.source.target;
  for (auto x : lambda.source.source->objects()) t.components.push_back(D.compose(mu(x), lambda(x)));
  return t;
}

/// Pointwise coproduct X -> F X ⊔ G X with its two inclusions.
struct CoproductFunctor {
  FunctorData functor;
  NatTrans in0;
  NatTrans in1;
  std::vector<Coproduct> pointwise;
};

inline CoproductFunctor coproduct_functor(const FunctorData& F, const FunctorData& G) {
  check_shape(F);
  check_shape(G);
  const auto& C = *F.source;
  const auto& D = *F.target;
  CoproductFunctor out{{F.name + "+" + G.name, F.source, F.target, {}, {}}, {}, {}, {}};
  for (auto x : C.objects()) {
    auto cp = coproduct(D, F(x), G(x));
    if (!cp) throw ColimitAbsent("coproduct of '" + D.name(F(x)) + "' and '" + D.name(G(x)) + "' does not exist");
    out.pointwise.push_back(*cp);
    out.functor.on_objects.push_back(cp->apex);
  }
  for (auto f : C.morphisms()) {
    const auto& s = out.pointwise[C.source(f).index()];
    const auto& t = out.pointwise[C.target(f).index()];
    out.functor.on_morphisms.push_back(coproduct_mediator(D, s, D.compose(t.in0, F(f)), D.compose(t.in1, G(f))));
  }
  out.in0 = {"in0", F, out.functor, {}};
  out.in1 = {"in1", G, out.functor, {}};
  for (const auto& cp : out.pointwise) {
    out.in0.components.push_back(cp.in0);
    out.in1.components.push_back(cp.in1);
  }
  return out;
}

/// (λ, μ): F ⊔ G -> H.
inline NatTrans copair(const CoproductFunctor& cp, const NatTrans& lambda, const NatTrans& mu) {
  NatTrans t{"[" + lambda.name + "," + mu.name + "]", cp.functor, lambda.target, {}};
  const auto& D = *cp.functor.target;
  for (auto x : cp.functor.source->objects()) t.components.push_back(coproduct_mediator(D, cp.pointwise[x.index()], lambda(x), mu(x)));
  return t;
}

/// λ ⌢ v: F(Y) ⊔_{F(X)} G(X) -> G(Y).
inline MorId corner_product(const NatTrans& lambda, MorId v) {
  const auto& C = *lambda.source.source;
  const auto& D = *lambda.source.target;
  C.check(v);
  const auto x = C.source(v), y = C.target(v);
  const auto& F = lambda.source;
  const auto& G = lambda.target;
  auto po = pushout(D, F(v), lambda(x));
  if (!po) throw ColimitAbsent("corner product of '" + lambda.name + "' with '" + C.name(v) + "' needs a pushout that does not exist");
  return pushout_mediator(D, F(v), lambda(x), *po, lambda(y), G(v));
}

struct NtVerdict {
  bool ok = true;
  std::optional<MorId> witness;
};

/// λ⌢i is a cofibration for every cofibration i and anodyne for every anodyne j.
inline NtVerdict nt_is_cofibration(const NatTrans& lambda, const PremodelStructure& src, const PremodelStructure& tgt) {
  NtVerdict v;
  for (auto i : src.cofibrations().members()) {
    if (!tgt.cofibrations().contains(corner_product(lambda, i))) return {false, i};
  }
  for (auto j : src.anodyne_cofibrations().members()) {
    if (!tgt.anodyne_cofibrations().contains(corner_product(lambda, j))) return {false, j};
  }
  return v;
}

/// λ⌢i is anodyne for every cofibration i.
inline NtVerdict nt_is_anodyne(const NatTrans& lambda, const PremodelStructure& src, const PremodelStructure& tgt) {
  for (auto i : src.cofibrations().members()) {
    if (!tgt.anodyne_cofibrations().contains(corner_product(lambda, i))) return {false, i};
  }
  return {};
}

/// Only the cofibration half, for structured categories.
inline NtVerdict nt_is_structured_cofibration(const NatTrans& lambda, const ArrowClass& src_cof, const ArrowClass& tgt_cof) {
  for (auto i : src_cof.members()) {
    if (!tgt_cof.contains(corner_product(lambda, i))) return {false, i};
  }
  return {};
}

/// i: Id⊔Id -> I, j: Id -> D, e: I -> D with e∘i = j∘∇. Strong when D = Id and j = id.
struct QuillenCylinder {
  std::string name;
  CoproductFunctor doubled;
  FunctorData cylinder;
  FunctorData weak_target;
  NatTrans inclusion;
  NatTrans unit;
  NatTrans comparison;

  [[nodiscard]] NatTrans first_inclusion() const { return vertical(inclusion, doubled.in0); }
  [[nodiscard]] NatTrans second_inclusion() const { return vertical(inclusion, doubled.in1); }
};

inline NatTrans fold(const CoproductFunctor& doubled) {
  auto id = identity_transformation(doubled.in0.source);
  auto t = copair(doubled, id, id);
  t.name = "fold";
  return t;
}

/// On categories where X ⊔ X exists for all X: I = D = Id, i = fold, j = e = id.
inline QuillenCylinder identity_cylinder(const CategoryPtr& c) {
  auto id = identity_functor(c);
  auto doubled = coproduct_functor(id, id);
  auto f = fold(doubled);
  return {"identity", doubled, id, id, f, identity_transformation(id), identity_transformation(id)};
}

struct QuillenCylinderVerdict {
  bool well_formed = true;  // functors and transformations check out
  bool left_adjoints = true;
  bool square_commutes = true;
  bool inclusion_cofibration = true;
  bool unit_anodyne = true;
  bool first_inclusion_anodyne = true;
  bool strong = false;
  std::vector<Violation> problems;

  [[nodiscard]] bool ok() const { return well_formed && left_adjoints && square_commutes && inclusion_cofibration && unit_anodyne && first_inclusion_anodyne; }
};

inline QuillenCylinderVerdict verify_quillen_cylinder(const QuillenCylinder& q, const PremodelStructure& p) {
  QuillenCylinderVerdict v;
  const auto& C = p.category();
  for (const auto* F : {&q.cylinder, &q.weak_target}) {
    if (!same_category(F->source, p.category_ptr()) || !same_category(F->target, p.category_ptr()))
      throw InputError("cylinder '" + q.name + "' is not made of endofunctors of '" + C.name() + "'");
    auto fv = check_functor(*F);
    v.problems.insert(v.problems.end(), fv.begin(), fv.end());
  }
  for (const auto* t : {&q.inclusion, &q.unit, &q.comparison}) {
    auto tv = check_nat_trans(*t);
    v.problems.insert(v.problems.end(), tv.begin(), tv.end());
  }
  v.well_formed = v.problems.empty();
  if (!v.well_formed) return v;
  v.left_adjoints = right_adjoint(q.cylinder).has_value() && right_adjoint(q.weak_target).has_value();
  const auto nabla = fold(q.doubled);
  for (auto x : C.objects()) {
    if (C.compose(q.comparison(x), q.inclusion(x)) != C.compose(q.unit(x), nabla(x))) v.square_commutes = false;
  }
  v.inclusion_cofibration = nt_is_cofibration(q.inclusion, p, p).ok;
  v.unit_anodyne = nt_is_anodyne(q.unit, p, p).ok;
  v.first_inclusion_anodyne = nt_is_anodyne(q.first_inclusion(), p, p).ok;
  v.strong = q.weak_target.on_objects == C.objects() && q.weak_target.on_morphisms == C.morphisms() && q.unit.components == identity_transformation(q.weak_target).components;
  return v;
}

/// Universal comparison B ⊔_A B -> IB ⊔_{IA} DA for a core cofibration f: A -> B,
/// packaged as a relative weak cylinder.
inline CylinderWitness cylinder_from_quillen_cylinder(const QuillenCylinder& q, const PremodelStructure& p, MorId f) {
  const auto& C = p.category();
  const auto a = C.source(f), b = C.target(f);
  const auto& I = q.cylinder;
  const auto& D = q.weak_target;
  auto right = pushout(C, I(f), q.comparison(a));
  if (!right) throw ColimitAbsent("IB ⊔_IA DA does not exist for '" + C.name(f) + "'");
  auto left = pushout(C, f, f);
  if (!left) throw ColimitAbsent("pushout of '" + C.name(f) + "' along itself does not exist");
  const auto& bb = q.doubled.pointwise[b.index()];
  const auto k0 = C.compose(right->from_b, C.compose(q.inclusion(b), bb.in0));
  const auto k1 = C.compose(right->from_b, C.compose(q.inclusion(b), bb.in1));
  CylinderWitness w;
  w.base = f;
  w.glued = left->apex;
  w.in0 = left->from_b;
  w.in1 = left->from_c;
  w.fold = pushout_mediator(C, f, f, *left, C.identity(b), C.identity(b));
  w.cylinder = right->apex;
  w.cylinder_cofibration = pushout_mediator(C, f, f, *left, k0, k1);
  w.comparison = pushout_mediator(C, I(f), q.comparison(a), *right, q.comparison(b), D(f));
  w.weak_target = D(b);
  w.acyclic_leg = q.unit(b);
  w.strong = false;
  return w;
}

struct CylinderTheoremCheck {
  bool weak_model = false;
  std::vector<CylinderWitness> witnesses;
  bool witnesses_valid = true;
  [[nodiscard]] bool ok() const { return weak_model && witnesses_valid; }
};

/// A weak Quillen cylinder must make the structure a weak model structure; the
/// induced relative cylinders are rebuilt and re-checked.
inline CylinderTheoremCheck weak_cylinder_theorem_harness(const PremodelStructure& p, const QuillenCylinder& q) {
  if (!verify_quillen_cylinder(q, p).ok()) throw PreconditionError("'" + q.name + "' is not a weak Quillen cylinder on '" + p.name() + "'");
  CylinderTheoremCheck r;
  r.weak_model = verify_weak_model(p).ok();
  const PremodelContext ctx(p);
  for (auto f : core_cofibrations(p).members()) {
    auto w = cylinder_from_quillen_cylinder(q, p, f);
    if (!is_cylinder_witness(ctx, w)) r.witnesses_valid = false;
    r.witnesses.push_back(w);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Mates: a transformation of left adjoints read in the opposite categories.

/// λ: F -> G (left adjoints C -> D) becomes λ_*^op: F_*^op -> G_*^op on D^op -> C^op.
inline NatTrans mate(const NatTrans& lambda, const CategoryPtr& d_op, const CategoryPtr& c_op) {
  auto af = right_adjoint(lambda.source);
  auto ag = right_adjoint(lambda.target);
  if (!af || !ag) throw NonexistenceError("mate of '" + lambda.name + "' needs right adjoints");
  const auto& C = *lambda.source.source;
  const auto& D = *lambda.source.target;
  NatTrans t{opposite_name(lambda.name) , opposite(af->right, d_op, c_op), opposite(ag->right, d_op, c_op), {}};
  for (auto y : D.objects()) {
    const auto gy = ag->right(y);
    const auto want = D.compose(ag->counit[y.index()], lambda(gy));
    std::optional<MorId> comp;
    for (auto g : C.hom(gy, af->right(y))) {
      if (D.compose(af->counit[y.index()], lambda.source(g)) == want) {
        comp = g;
        break;
      }
    }
    if (!comp) throw NonexistenceError("mate of '" + lambda.name + "' has no component at '" + D.name(y) + "'");
    t.components.push_back(*comp);
  }
  return t;
}

/// The cylinder induced on the opposite structure by the right adjoints of I and D.
inline QuillenCylinder mate_cylinder(const QuillenCylinder& q, const CategoryPtr& c_op) {
  const auto& C = *q.cylinder.source;
  auto ai = right_adjoint(q.cylinder);
  auto ad = right_adjoint(q.weak_target);
  if (!ai || !ad) throw NonexistenceError("cylinder '" + q.name + "' is not made of left adjoints");
  auto id_op = identity_functor(c_op);
  QuillenCylinder out;
  out.name = opposite_name(q.name);
  out.doubled = coproduct_functor(id_op, id_op);
  out.cylinder = opposite(ai->right, c_op, c_op);
  out.weak_target = opposite(ad->right, c_op, c_op);
  const auto s0 = q.first_inclusion();
  const auto s1 = q.second_inclusion();
  out.inclusion = {opposite_name(q.inclusion.name), out.doubled.functor, out.cylinder, {}};
  out.unit = {opposite_name(q.unit.name), id_op, out.weak_target, {}};
  out.comparison = {opposite_name(q.comparison.name), out.cylinder, out.weak_target, {}};
  for (auto y : C.objects()) {
    const auto iy = ai->right(y);
    const auto dy = ad->right(y);
    const auto p0 = C.compose(ai->counit[y.index()], s0(iy));
    const auto p1 = C.compose(ai->counit[y.index()], s1(iy));
    out.inclusion.components.push_back(coproduct_mediator(*c_op, out.doubled.pointwise[y.index()], p0, p1));
    out.unit.components.push_back(C.compose(ad->counit[y.index()], q.unit(dy)));
    const auto want = C.compose(ad->counit[y.index()], q.comparison(dy));
    std::optional<MorId> comp;
    for (auto g : C.hom(dy, iy)) {
      if (C.compose(ai->counit[y.index()], q.cylinder(g)) == want) {
        comp = g;
        break;
      }
    }
    if (!comp) throw NonexistenceError("mate of the comparison has no component at '" + C.name(y) + "'");
    out.comparison.components.push_back(*comp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Olschok's construction on a structured category.

/// A category with a (cofibration, anodyne fibration) weak factorization system.
struct StructuredCategory {
  std::string name;
  CategoryPtr cat;
  ArrowClass cofibrations;
  ArrowClass anodyne_fibrations;
};

/// Least set containing S and σ_k⌢i for i in I, closed under j ↦ σ⌢j.
/// With `use_second` false only σ_0 seeds the set.
inline ArrowClass olschok_lambda(const StructuredCategory& s, const QuillenCylinder& q, const std::vector<MorId>& seeds, const std::vector<MorId>& gens, bool use_second = true) {
  const auto& C = *s.cat;
  ArrowClass out(C.morphism_count());
  std::vector<MorId> todo = seeds;
  const auto s0 = q.first_inclusion();
  const auto s1 = q.second_inclusion();
  for (auto i : gens) {
    todo.push_back(corner_product(s0, i));
    if (use_second) todo.push_back(corner_product(s1, i));
  }
  while (!todo.empty()) {
    auto j = todo.back();
    todo.pop_back();
    if (out.contains(j)) continue;
    out.insert(j);
    todo.push_back(corner_product(q.inclusion, j));
  }
  return out;
}

struct OlschokResult {
  ArrowClass lambda;
  PremodelStructure generated;
  PremodelStructure saturated;
  ClassificationReport report;
  bool all_cofibrant = false;
  bool pre_quillen_cylinder = false;
  /// Quillen when every object is cofibrant, two-sided otherwise.
  bool expectation_holds = false;
};

inline OlschokResult olschok_model(const StructuredCategory& s, const QuillenCylinder& q, const std::vector<MorId>& seeds, const std::vector<MorId>& gens) {
  const auto& C = *s.cat;
  if (auto v = verify_wfs(C, {s.cofibrations, s.anodyne_fibrations}); !v.ok()) throw PreconditionError("'" + s.name + "' does not carry a weak factorization system");
  for (auto f : seeds)
    if (!s.cofibrations.contains(f)) throw PreconditionError("'" + C.name(f) + "' is not a cofibration");
  const auto nabla = fold(q.doubled);
  bool factors = true;
  for (auto x : C.objects())
    if (C.compose(q.comparison(x), q.inclusion(x)) != nabla(x)) factors = false;
  const bool strong = factors && q.weak_target.on_objects == C.objects() && q.weak_target.on_morphisms == C.morphisms();
  const bool pre = strong && nt_is_structured_cofibration(q.inclusion, s.cofibrations, s.cofibrations).ok;
  if (!pre) throw PreconditionError("cylinder '" + q.name + "' is not a strong pre-Quillen cylinder on '" + s.name + "'");

  auto lambda = olschok_lambda(s, q, seeds, gens);
  auto gen = generate_wfs(C, lambda);
  if (!gen.ok()) throw NoFactorization("olschok: '" + C.name(*gen.unfactorizable) + "' has no factorization", *gen.unfactorizable);
  PremodelStructure generated(s.cat, s.cofibrations, s.anodyne_fibrations, gen.wfs.left, gen.wfs.right, s.name + ".olschok");
  const auto t = object_table(generated);
  bool all_cof = true;
  for (auto x : C.objects()) all_cof = all_cof && t.cofibrant(x);
  auto saturated = all_cof ? saturate(generated, SaturationMode::L) : bi_saturate(generated);
  auto report = classify_full(saturated);
  OlschokResult r{lambda, generated, saturated, report, all_cof, pre, all_cof ? report.is_quillen() : report.is_two_sided()};
  return r;
}

}  // namespace hocat
