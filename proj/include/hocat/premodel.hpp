#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hocat/lifting.hpp"

namespace hocat {

/// Two weak factorization systems (C, AF) and (AC, F) with AC ⊆ C.
class PremodelStructure {
 public:
  PremodelStructure(CategoryPtr cat, ArrowClass cofibrations, ArrowClass anodyne_fibrations, ArrowClass anodyne_cofibrations, ArrowClass fibrations,
                    std::string name = {})
      : cat_(std::move(cat)),
        cof_(std::move(cofibrations)),
        afib_(std::move(anodyne_fibrations)),
        acof_(std::move(anodyne_cofibrations)),
        fib_(std::move(fibrations)),
        name_(std::move(name)) {
    if (!cat_) throw InputError("premodel structure without a category");
    for (const auto* k : {&cof_, &afib_, &acof_, &fib_}) k->check_against(*cat_);
  }

  [[nodiscard]] const FiniteCategory& category() const { return *cat_; }
  [[nodiscard]] const CategoryPtr& category_ptr() const { return cat_; }
  [[nodiscard]] const ArrowClass& cofibrations() const { return cof_; }
  [[nodiscard]] const ArrowClass& anodyne_fibrations() const { return afib_; }
  [[nodiscard]] const ArrowClass& anodyne_cofibrations() const { return acof_; }
  [[nodiscard]] const ArrowClass& fibrations() const { return fib_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  [[nodiscard]] WeakFactorizationSystem cofibration_wfs() const { return {cof_, afib_}; }
  [[nodiscard]] WeakFactorizationSystem fibration_wfs() const { return {acof_, fib_}; }

  /// Same category (by value) and the same four classes.
  friend bool operator==(const PremodelStructure& a, const PremodelStructure& b) {
    return same_category(a.cat_, b.cat_) && a.cof_ == b.cof_ && a.afib_ == b.afib_ && a.acof_ == b.acof_ && a.fib_ == b.fib_;
  }

 private:
  CategoryPtr cat_;
  ArrowClass cof_, afib_, acof_, fib_;
  std::string name_;
};

struct PremodelVerdict {
  WfsVerdict cofibration_wfs;
  WfsVerdict fibration_wfs;
  bool anodyne_are_cofibrations = true;
  std::optional<MorId> anodyne_not_cofibration;
  std::optional<ObjId> initial;
  std::optional<ObjId> terminal;

  [[nodiscard]] bool ok() const { return cofibration_wfs.ok() && fibration_wfs.ok() && anodyne_are_cofibrations && initial && terminal; }
};

inline PremodelVerdict verify_premodel(const PremodelStructure& p) {
  const auto& c = p.category();
  PremodelVerdict v;
  v.cofibration_wfs = verify_wfs(c, p.cofibration_wfs());
  v.fibration_wfs = verify_wfs(c, p.fibration_wfs());
  auto bad = p.anodyne_cofibrations() - p.cofibrations();
  if (!bad.empty()) {
    v.anodyne_are_cofibrations = false;
    v.anodyne_not_cofibration = bad.members().front();
  }
  v.initial = initial_object(c);
  v.terminal = terminal_object(c);
  return v;
}

inline ObjId require_initial(const FiniteCategory& c) {
  if (auto i = initial_object(c)) return *i;
  throw PreconditionError("category '" + c.name() + "' has no initial object");
}

inline ObjId require_terminal(const FiniteCategory& c) {
  if (auto t = terminal_object(c)) return *t;
  throw PreconditionError("category '" + c.name() + "' has no terminal object");
}

struct ObjectStatus {
  bool cofibrant = false;
  bool fibrant = false;
  friend bool operator==(const ObjectStatus&, const ObjectStatus&) = default;
};

/// Cofibrancy and fibrancy of every object, computed once.
struct ObjectTable {
  ObjId initial;
  ObjId terminal;
  std::vector<ObjectStatus> status;

  [[nodiscard]] bool cofibrant(ObjId x) const { return status.at(x.index()).cofibrant; }
  [[nodiscard]] bool fibrant(ObjId x) const { return status.at(x.index()).fibrant; }
  [[nodiscard]] bool bifibrant(ObjId x) const { return cofibrant(x) && fibrant(x); }
  [[nodiscard]] bool cof_or_fib(ObjId x) const { return cofibrant(x) || fibrant(x); }
};

inline ObjectTable object_table(const PremodelStructure& p) {
  const auto& c = p.category();
  ObjectTable t{require_initial(c), require_terminal(c), {}};
  for (auto x : c.objects()) {
    t.status.push_back({p.cofibrations().contains(c.hom(t.initial, x).front()), p.fibrations().contains(c.hom(x, t.terminal).front())});
  }
  return t;
}

inline ObjectStatus object_status(const PremodelStructure& p, ObjId x) {
  p.category().check(x);
  return object_table(p).status[x.index()];
}

inline std::vector<ObjId> cofibrant_objects(const PremodelStructure& p) {
  auto t = object_table(p);
  std::vector<ObjId> out;
  for (auto x : p.category().objects())
    if (t.cofibrant(x)) out.push_back(x);
  return out;
}

inline std::vector<ObjId> fibrant_objects(const PremodelStructure& p) {
  auto t = object_table(p);
  std::vector<ObjId> out;
  for (auto x : p.category().objects())
    if (t.fibrant(x)) out.push_back(x);
  return out;
}

inline std::vector<ObjId> bifibrant_objects(const PremodelStructure& p) {
  auto t = object_table(p);
  std::vector<ObjId> out;
  for (auto x : p.category().objects())
    if (t.bifibrant(x)) out.push_back(x);
  return out;
}

/// Which fibrations an acyclic cofibration must lift against. Both readings
/// give the same class, because a fibration with fibrant target has fibrant domain.
enum class AcyclicReading { both_fibrant, target_fibrant };

inline ArrowClass core_cofibrations(const PremodelStructure& p) {
  auto t = object_table(p);
  const auto& c = p.category();
  return ArrowClass::where(c, [&](MorId f) { return p.cofibrations().contains(f) && t.cofibrant(c.source(f)); });
}

inline ArrowClass core_fibrations(const PremodelStructure& p) {
  auto t = object_table(p);
  const auto& c = p.category();
  return ArrowClass::where(c, [&](MorId f) { return p.fibrations().contains(f) && t.fibrant(c.target(f)); });
}

/// Cofibrations with the left lifting property against fibrations between fibrant objects.
inline ArrowClass acyclic_cofibrations(const PremodelStructure& p, AcyclicReading reading = AcyclicReading::both_fibrant) {
  auto t = object_table(p);
  const auto& c = p.category();
  auto test = ArrowClass::where(c, [&](MorId g) {
    return p.fibrations().contains(g) && t.fibrant(c.target(g)) && (reading == AcyclicReading::target_fibrant || t.fibrant(c.source(g)));
  });
  return p.cofibrations() & complement_llp(c, test);
}

inline ArrowClass acyclic_fibrations(const PremodelStructure& p, AcyclicReading reading = AcyclicReading::both_fibrant) {
  auto t = object_table(p);
  const auto& c = p.category();
  auto test = ArrowClass::where(c, [&](MorId f) {
    return p.cofibrations().contains(f) && t.cofibrant(c.source(f)) && (reading == AcyclicReading::target_fibrant || t.cofibrant(c.target(f)));
  });
  return p.fibrations() & complement_rlp(c, test);
}

inline ArrowClass core_acyclic_cofibrations(const PremodelStructure& p) { return acyclic_cofibrations(p) & core_cofibrations(p); }

inline ArrowClass core_acyclic_fibrations(const PremodelStructure& p) { return acyclic_fibrations(p) & core_fibrations(p); }

struct SaturationFlags {
  bool left = false;
  bool core_left = false;
  bool right = false;
  bool core_right = false;
  [[nodiscard]] bool bi() const { return left && right; }
  friend bool operator==(const SaturationFlags&, const SaturationFlags&) = default;
};

inline SaturationFlags saturation_flags(const PremodelStructure& p) {
  SaturationFlags s;
  s.left = acyclic_cofibrations(p).subset_of(p.anodyne_cofibrations());
  s.core_left = core_acyclic_cofibrations(p).subset_of(p.anodyne_cofibrations());
  s.right = acyclic_fibrations(p).subset_of(p.anodyne_fibrations());
  s.core_right = core_acyclic_fibrations(p).subset_of(p.anodyne_fibrations());
  return s;
}

/// The opposite structure: cofibrations and fibrations swap, as do the anodyne classes.
inline PremodelStructure dualize(const PremodelStructure& p) {
  auto op = opposite(p.category());
  return PremodelStructure(op, p.fibrations(), p.anodyne_cofibrations(), p.anodyne_fibrations(), p.cofibrations(), opposite_name(p.name()));
}

struct QuillenAdjunctionVerdict {
  bool left_preserves_cofibrations = true;
  bool right_preserves_fibrations = true;
  bool left_preserves_anodyne_cofibrations = true;
  bool right_preserves_anodyne_fibrations = true;
  std::optional<MorId> cofibration_witness;  // in the left functor's source
  std::optional<MorId> fibration_witness;    // in the right functor's source
  [[nodiscard]] bool ok() const { return left_preserves_cofibrations && right_preserves_fibrations; }
};

/// `left_side` lives on the left functor's source, `right_side` on its target.
inline QuillenAdjunctionVerdict check_quillen_adjunction(const AdjunctionData& a, const PremodelStructure& left_side, const PremodelStructure& right_side) {
  if (!same_category(a.left.source, left_side.category_ptr()) || !same_category(a.left.target, right_side.category_ptr()))
    throw InputError("adjunction '" + a.name + "' does not connect the categories of '" + left_side.name() + "' and '" + right_side.name() + "'");
  if (auto v = check_adjunction(a); !v.empty()) throw InputError("adjunction '" + a.name + "' is invalid: " + v.front().detail);
  QuillenAdjunctionVerdict v;
  for (auto f : left_side.cofibrations().members()) {
    if (!right_side.cofibrations().contains(a.left(f))) {
      v.left_preserves_cofibrations = false;
      if (!v.cofibration_witness) v.cofibration_witness = f;
    }
  }
  for (auto f : left_side.anodyne_cofibrations().members())
    if (!right_side.anodyne_cofibrations().contains(a.left(f))) v.left_preserves_anodyne_cofibrations = false;
  for (auto g : right_side.fibrations().members()) {
    if (!left_side.fibrations().contains(a.right(g))) {
      v.right_preserves_fibrations = false;
      if (!v.fibration_witness) v.fibration_witness = g;
    }
  }
  for (auto g : right_side.anodyne_fibrations().members())
    if (!left_side.anodyne_fibrations().contains(a.right(g))) v.right_preserves_anodyne_fibrations = false;
  return v;
}

/// Convenience: the trivial structure (all, isos) and (isos, all).
inline PremodelStructure trivial_structure(const CategoryPtr& c, std::string name = "trivial") {
  auto all = ArrowClass::all(*c);
  auto iso = ArrowClass::isomorphisms(*c);
  return PremodelStructure(c, all, iso, iso, all, std::move(name));
}

/// Moves a class to another category by morphism name.
inline ArrowClass transport(const ArrowClass& s, const FiniteCategory& from, const FiniteCategory& to) {
  ArrowClass out(to.morphism_count());
  for (auto f : s.members()) out.insert(to.morphism(from.name(f)));
  return out;
}

inline PremodelStructure transport(const PremodelStructure& p, const CategoryPtr& to) {
  const auto& from = p.category();
  return PremodelStructure(to, transport(p.cofibrations(), from, *to), transport(p.anodyne_fibrations(), from, *to), transport(p.anodyne_cofibrations(), from, *to),
                           transport(p.fibrations(), from, *to), p.name());
}

}  // namespace hocat
