#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hocat/core.hpp"

namespace hocat {

struct MorphismEntry {
  std::string name;
  ObjId source;
  ObjId target;
  friend bool operator==(const MorphismEntry&, const MorphismEntry&) = default;
};

/// Raw, possibly invalid, composition table. `compose[g * M + f]` holds g∘f.
struct CategoryData {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorphismEntry> morphisms;
  std::vector<MorId> identities;
  std::vector<std::optional<MorId>> compose;
  bool declared_thin = false;
  friend bool operator==(const CategoryData&, const CategoryData&) = default;
};

/// Checks the category axioms on a raw table.
/// Throws InputError when the table is malformed (wrong sizes, dangling ids);
/// law failures come back as violations.
inline std::vector<Violation> validate_category(const CategoryData& d) {
  const std::size_t n = d.objects.size();
  const std::size_t m = d.morphisms.size();
  auto dangling = [&](const std::string& what) { throw InputError("malformed category '" + d.name + "': " + what); };
  if (d.identities.size() != n) dangling("identity list has " + std::to_string(d.identities.size()) + " entries for " + std::to_string(n) + " objects");
  if (d.compose.size() != m * m) dangling("composition table has wrong size");
  for (const auto& e : d.morphisms) {
    if (e.source.index() >= n || e.target.index() >= n) dangling("morphism '" + e.name + "' has a dangling endpoint");
  }
  for (auto id : d.identities) {
    if (id.index() >= m) dangling("identity id out of range");
  }
  for (const auto& c : d.compose) {
    if (c && c->index() >= m) dangling("composite id out of range");
  }

  std::vector<Violation> out;
  auto mname = [&](MorId x) { return d.morphisms[x.index()].name; };
  auto comp = [&](std::size_t g, std::size_t f) { return d.compose[g * m + f]; };

  {
    std::vector<std::string> names = d.objects;
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end()) out.push_back({"duplicate-name", "two objects share a name"});
    names.clear();
    for (const auto& e : d.morphisms) names.push_back(e.name);
    std::sort(names.begin(), names.end());
    if (auto it = std::adjacent_find(names.begin(), names.end()); it != names.end()) out.push_back({"duplicate-name", "morphism name '" + *it + "' is used twice"});
  }

  for (std::size_t x = 0; x < n; ++x) {
    const auto& e = d.morphisms[d.identities[x].index()];
    if (e.source.index() != x || e.target.index() != x)
      out.push_back({"identity-incidence", "identity of '" + d.objects[x] + "' is '" + e.name + "', which is not an endomorphism of it"});
  }

  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      const auto& eg = d.morphisms[g];
      const auto& ef = d.morphisms[f];
      const bool composable = eg.source == ef.target;
      auto c = comp(g, f);
      if (composable && !c) {
        out.push_back({"composite-missing", eg.name + " . " + ef.name + " is undefined"});
      } else if (!composable && c) {
        out.push_back({"composite-spurious", eg.name + " . " + ef.name + " is defined on a non-composable pair"});
      } else if (c) {
        const auto& ec = d.morphisms[c->index()];
        if (ec.source != ef.source || ec.target != eg.target)
          out.push_back({"composite-incidence", eg.name + " . " + ef.name + " = " + ec.name + " has the wrong endpoints"});
      }
    }
  }
  if (!out.empty()) return out;

  for (std::size_t f = 0; f < m; ++f) {
    const auto& ef = d.morphisms[f];
    auto l = comp(d.identities[ef.target.index()].index(), f);
    auto r = comp(f, d.identities[ef.source.index()].index());
    if (!l || l->index() != f || !r || r->index() != f) out.push_back({"identity-law", "identities do not act trivially on '" + ef.name + "'"});
  }
  for (std::size_t h = 0; h < m; ++h) {
    for (std::size_t g = 0; g < m; ++g) {
      auto hg = comp(h, g);
      if (!hg) continue;
      for (std::size_t f = 0; f < m; ++f) {
        auto gf = comp(g, f);
        if (!gf) continue;
        auto a = comp(h, gf->index());
        auto b = comp(hg->index(), f);
        if (a != b) {
          out.push_back({"associativity", "(" + mname(MorId(h)) + " . " + mname(MorId(g)) + ") . " + mname(MorId(f)) + " differs from " + mname(MorId(h)) + " . (" +
                                              mname(MorId(g)) + " . " + mname(MorId(f)) + ")"});
        }
      }
    }
  }
  if (d.declared_thin) {
    for (std::size_t f = 0; f < m; ++f) {
      for (std::size_t g = f + 1; g < m; ++g) {
        if (d.morphisms[f].source == d.morphisms[g].source && d.morphisms[f].target == d.morphisms[g].target)
          out.push_back({"parallel-composite-mismatch", "thin category has distinct parallel morphisms '" + d.morphisms[f].name + "' and '" + d.morphisms[g].name + "'"});
      }
    }
  }
  return out;
}

class InvalidCategory : public InputError {
 public:
  InvalidCategory(const std::string& name, std::vector<Violation> v) : InputError(describe(name, v)), violations_(std::move(v)) {}
  [[nodiscard]] const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::string& name, const std::vector<Violation>& v) {
    std::string s = "category '" + name + "' is invalid";
    if (!v.empty()) s += ": " + v.front().kind + ": " + v.front().detail;
    return s;
  }
  std::vector<Violation> violations_;
};

/// A validated finite category with hom-set indexes. Immutable once built.
class FiniteCategory {
 public:
  explicit FiniteCategory(CategoryData data) : d_(std::move(data)) {
    if (auto v = validate_category(d_); !v.empty()) throw InvalidCategory(d_.name, std::move(v));
    const std::size_t n = d_.objects.size();
    hom_.assign(n * n, {});
    for (std::size_t f = 0; f < d_.morphisms.size(); ++f) {
      const auto& e = d_.morphisms[f];
      hom_[e.source.index() * n + e.target.index()].push_back(MorId(f));
    }
    for (std::size_t x = 0; x < n; ++x) object_index_.emplace(d_.objects[x], ObjId(x));
    for (std::size_t f = 0; f < d_.morphisms.size(); ++f) morphism_index_.emplace(d_.morphisms[f].name, MorId(f));
    thin_ = std::all_of(hom_.begin(), hom_.end(), [](const auto& h) { return h.size() <= 1; });
  }

  [[nodiscard]] const std::string& name() const { return d_.name; }
  [[nodiscard]] const CategoryData& data() const { return d_; }
  [[nodiscard]] std::size_t object_count() const { return d_.objects.size(); }
  [[nodiscard]] std::size_t morphism_count() const { return d_.morphisms.size(); }

  [[nodiscard]] std::vector<ObjId> objects() const {
    std::vector<ObjId> out;
    for (std::size_t i = 0; i < object_count(); ++i) out.emplace_back(i);
    return out;
  }
  [[nodiscard]] std::vector<MorId> morphisms() const {
    std::vector<MorId> out;
    for (std::size_t i = 0; i < morphism_count(); ++i) out.emplace_back(i);
    return out;
  }

  [[nodiscard]] const std::string& name(ObjId x) const { return d_.objects.at(x.index()); }
  [[nodiscard]] const std::string& name(MorId f) const { return d_.morphisms.at(f.index()).name; }
  [[nodiscard]] ObjId source(MorId f) const { return d_.morphisms.at(f.index()).source; }
  [[nodiscard]] ObjId target(MorId f) const { return d_.morphisms.at(f.index()).target; }
  [[nodiscard]] MorId identity(ObjId x) const { return d_.identities.at(x.index()); }
  [[nodiscard]] bool is_identity(MorId f) const { return identity(source(f)) == f; }

  [[nodiscard]] std::optional<MorId> try_compose(MorId g, MorId f) const {
    check(g);
    check(f);
    return d_.compose[g.index() * morphism_count() + f.index()];
  }
  /// g∘f; throws when the pair is not composable.
  [[nodiscard]] MorId compose(MorId g, MorId f) const {
    auto c = try_compose(g, f);
    if (!c) throw InputError("cannot compose '" + name(g) + "' after '" + name(f) + "'");
    return *c;
  }
  [[nodiscard]] const std::vector<MorId>& hom(ObjId x, ObjId y) const { return hom_.at(x.index() * object_count() + y.index()); }

  [[nodiscard]] bool is_iso(MorId f) const {
    for (auto g : hom(target(f), source(f))) {
      if (compose(g, f) == identity(source(f)) && compose(f, g) == identity(target(f))) return true;
    }
    return false;
  }
  [[nodiscard]] bool is_thin() const { return thin_; }

  [[nodiscard]] std::optional<ObjId> find_object(std::string_view s) const {
    auto it = object_index_.find(std::string(s));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] std::optional<MorId> find_morphism(std::string_view s) const {
    auto it = morphism_index_.find(std::string(s));
    if (it == morphism_index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] ObjId object(std::string_view s) const {
    if (auto x = find_object(s)) return *x;
    throw InputError("unknown object '" + std::string(s) + "' in category '" + name() + "'");
  }
  [[nodiscard]] MorId morphism(std::string_view s) const {
    if (auto f = find_morphism(s)) return *f;
    throw InputError("unknown morphism '" + std::string(s) + "' in category '" + name() + "'");
  }

  void check(MorId f) const {
    if (f.index() >= morphism_count()) throw InputError("morphism id " + std::to_string(f.index()) + " out of range in '" + name() + "'");
  }
  void check(ObjId x) const {
    if (x.index() >= object_count()) throw InputError("object id " + std::to_string(x.index()) + " out of range in '" + name() + "'");
  }

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) { return a.d_ == b.d_; }

 private:
  CategoryData d_;
  std::vector<std::vector<MorId>> hom_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
  bool thin_ = false;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

inline bool same_category(const CategoryPtr& a, const CategoryPtr& b) { return a == b || (a && b && *a == *b); }

inline std::string opposite_name(const std::string& n) {
  constexpr std::string_view suffix = "^op";
  if (n.size() >= suffix.size() && n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0) return n.substr(0, n.size() - suffix.size());
  return n + std::string(suffix);
}

/// Same ids and names, arrows reversed. opposite(opposite(C)) == C.
inline CategoryPtr opposite(const FiniteCategory& c) {
  CategoryData d = c.data();
  d.name = opposite_name(d.name);
  for (auto& e : d.morphisms) std::swap(e.source, e.target);
  const std::size_t m = c.morphism_count();
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) d.compose[g * m + f] = c.data().compose[f * m + g];
  }
  return std::make_shared<FiniteCategory>(std::move(d));
}

/// Renumbers objects and morphisms; new id i corresponds to old id order[i].
inline CategoryPtr reindex(const FiniteCategory& c, const std::vector<ObjId>& object_order, const std::vector<MorId>& morphism_order) {
  const std::size_t n = c.object_count();
  const std::size_t m = c.morphism_count();
  if (object_order.size() != n || morphism_order.size() != m) throw InputError("reindex: permutation has the wrong size");
  std::vector<std::size_t> onew(n, n), mnew(m, m);
  for (std::size_t i = 0; i < n; ++i) onew.at(object_order[i].index()) = i;
  for (std::size_t i = 0; i < m; ++i) mnew.at(morphism_order[i].index()) = i;
  if (std::count(onew.begin(), onew.end(), n) || std::count(mnew.begin(), mnew.end(), m)) throw InputError("reindex: not a permutation");
  CategoryData d;
  d.name = c.name();
  d.declared_thin = c.data().declared_thin;
  for (auto x : object_order) d.objects.push_back(c.name(x));
  for (auto f : morphism_order) d.morphisms.push_back({c.name(f), ObjId(onew[c.source(f).index()]), ObjId(onew[c.target(f).index()])});
  for (auto x : object_order) d.identities.emplace_back(mnew[c.identity(x).index()]);
  d.compose.assign(m * m, std::nullopt);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (auto h = c.try_compose(morphism_order[g], morphism_order[f])) d.compose[g * m + f] = MorId(mnew[h->index()]);
    }
  }
  return std::make_shared<FiniteCategory>(std::move(d));
}

/// Both enumeration orders reversed.
inline CategoryPtr reversed(const FiniteCategory& c) {
  auto objs = c.objects();
  auto mors = c.morphisms();
  std::reverse(objs.begin(), objs.end());
  std::reverse(mors.begin(), mors.end());
  return reindex(c, objs, mors);
}

// ---------------------------------------------------------------------------
// (Co)limits of small shapes, found by exhaustive universal-property search.

enum class ShapeKind { span, cospan, pair, empty };

/// span: legs {f: A->B, g: A->C}; cospan: legs {f: B->D, g: C->D};
/// pair: identities {id_X, id_Y}; empty: no legs.
struct DiagramShape {
  ShapeKind kind;
  std::vector<MorId> legs;
};

/// A (co)cone. `vertex_legs` has one leg per diagram vertex; `legs` keeps the
/// conventional ones (B and C for spans and cospans, both for pairs).
struct Cone {
  ObjId apex;
  std::vector<MorId> legs;
  std::vector<MorId> vertex_legs;
  friend bool operator==(const Cone&, const Cone&) = default;
};

namespace detail {

struct Diagram {
  struct Edge {
    MorId arrow;
    std::size_t from;
    std::size_t to;
  };
  std::vector<ObjId> vertices;
  std::vector<Edge> edges;
  std::vector<std::size_t> reported;
};

inline Diagram diagram_of(const FiniteCategory& c, const DiagramShape& s) {
  auto need = [&](std::size_t k) {
    if (s.legs.size() != k) throw InputError("diagram shape expects " + std::to_string(k) + " legs, got " + std::to_string(s.legs.size()));
    for (auto f : s.legs) c.check(f);
  };
  Diagram d;
  switch (s.kind) {
    case ShapeKind::span: {
      need(2);
      auto [f, g] = std::pair{s.legs[0], s.legs[1]};
      if (c.source(f) != c.source(g)) throw InputError("span legs '" + c.name(f) + "' and '" + c.name(g) + "' have different sources");
      d.vertices = {c.source(f), c.target(f), c.target(g)};
      d.edges = {{f, 0, 1}, {g, 0, 2}};
      d.reported = {1, 2};
      break;
    }
    case ShapeKind::cospan: {
      need(2);
      auto [f, g] = std::pair{s.legs[0], s.legs[1]};
      if (c.target(f) != c.target(g)) throw InputError("cospan legs '" + c.name(f) + "' and '" + c.name(g) + "' have different targets");
      d.vertices = {c.source(f), c.source(g), c.target(f)};
      d.edges = {{f, 0, 2}, {g, 1, 2}};
      d.reported = {0, 1};
      break;
    }
    case ShapeKind::pair: {
      need(2);
      for (auto f : s.legs) {
        if (!c.is_identity(f)) throw InputError("pair shape wants identities, got '" + c.name(f) + "'");
      }
      d.vertices = {c.source(s.legs[0]), c.source(s.legs[1])};
      d.reported = {0, 1};
      break;
    }
    case ShapeKind::empty:
      need(0);
      break;
  }
  return d;
}

// Enumerates (co)cones at `apex` in lexicographic leg order; `fn` returns false to stop.
template <bool Co, class Fn>
bool for_each_cone(const FiniteCategory& c, const Diagram& d, ObjId apex, Fn&& fn) {
  std::vector<MorId> legs(d.vertices.size());
  auto rec = [&](auto& self, std::size_t v) -> bool {
    if (v == d.vertices.size()) {
      for (const auto& e : d.edges) {
        bool ok = Co ? c.compose(legs[e.to], e.arrow) == legs[e.from] : c.compose(e.arrow, legs[e.from]) == legs[e.to];
        if (!ok) return true;
      }
      return fn(legs);
    }
    const auto& h = Co ? c.hom(d.vertices[v], apex) : c.hom(apex, d.vertices[v]);
    for (auto f : h) {
      legs[v] = f;
      if (!self(self, v + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

template <bool Co>
std::vector<MorId> mediators(const FiniteCategory& c, const std::vector<MorId>& universal, ObjId apex, const std::vector<MorId>& other, ObjId other_apex) {
  std::vector<MorId> out;
  const auto& h = Co ? c.hom(apex, other_apex) : c.hom(other_apex, apex);
  for (auto m : h) {
    bool ok = true;
    for (std::size_t v = 0; v < universal.size() && ok; ++v) ok = (Co ? c.compose(m, universal[v]) : c.compose(universal[v], m)) == other[v];
    if (ok) out.push_back(m);
  }
  return out;
}

template <bool Co>
std::optional<Cone> universal_cone(const FiniteCategory& c, const DiagramShape& s) {
  const Diagram d = diagram_of(c, s);
  for (auto p : c.objects()) {
    std::optional<Cone> found;
    for_each_cone<Co>(c, d, p, [&](const std::vector<MorId>& legs) {
      bool universal = true;
      for (auto q : c.objects()) {
        for_each_cone<Co>(c, d, q, [&](const std::vector<MorId>& other) {
          universal = mediators<Co>(c, legs, p, other, q).size() == 1;
          return universal;
        });
        if (!universal) break;
      }
      if (!universal) return true;
      Cone cone{p, {}, legs};
      for (auto v : d.reported) cone.legs.push_back(legs[v]);
      found = std::move(cone);
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace detail

/// First colimit in enumeration order, or nullopt when none exists.
inline std::optional<Cone> colimit(const FiniteCategory& c, const DiagramShape& s) { return detail::universal_cone<true>(c, s); }

inline std::optional<Cone> limit(const FiniteCategory& c, const DiagramShape& s) { return detail::universal_cone<false>(c, s); }

/// The shape with the same legs read in the opposite category.
inline DiagramShape dual_shape(const DiagramShape& s) {
  DiagramShape out = s;
  if (s.kind == ShapeKind::span) out.kind = ShapeKind::cospan;
  if (s.kind == ShapeKind::cospan) out.kind = ShapeKind::span;
  return out;
}

struct Pushout {
  ObjId apex;
  MorId from_b;  // B -> P
  MorId from_c;  // C -> P
};

/// Pushout of B <-f- A -g-> C.
inline std::optional<Pushout> pushout(const FiniteCategory& c, MorId f, MorId g) {
  auto cone = colimit(c, {ShapeKind::span, {f, g}});
  if (!cone) return std::nullopt;
  return Pushout{cone->apex, cone->legs[0], cone->legs[1]};
}

/// The unique map out of a pushout induced by x: B -> Q and y: C -> Q with x∘f = y∘g.
inline MorId pushout_mediator(const FiniteCategory& c, MorId f, MorId g, const Pushout& po, MorId x, MorId y) {
  if (c.target(x) != c.target(y) || c.compose(x, f) != c.compose(y, g)) throw InputError("pushout_mediator: the given maps do not form a cocone");
  for (auto m : c.hom(po.apex, c.target(x))) {
    if (c.compose(m, po.from_b) == x && c.compose(m, po.from_c) == y) return m;
  }
  throw InputError("pushout_mediator: no mediating morphism (not a pushout)");
}

struct Coproduct {
  ObjId apex;
  MorId in0;
  MorId in1;
};

inline std::optional<Coproduct> coproduct(const FiniteCategory& c, ObjId x, ObjId y) {
  auto cone = colimit(c, {ShapeKind::pair, {c.identity(x), c.identity(y)}});
  if (!cone) return std::nullopt;
  return Coproduct{cone->apex, cone->legs[0], cone->legs[1]};
}

inline MorId coproduct_mediator(const FiniteCategory& c, const Coproduct& cp, MorId x, MorId y) {
  for (auto m : c.hom(cp.apex, c.target(x))) {
    if (c.compose(m, cp.in0) == x && c.compose(m, cp.in1) == y) return m;
  }
  throw InputError("coproduct_mediator: no mediating morphism");
}

inline std::optional<ObjId> initial_object(const FiniteCategory& c) {
  auto cone = colimit(c, {ShapeKind::empty, {}});
  if (!cone) return std::nullopt;
  return cone->apex;
}

inline std::optional<ObjId> terminal_object(const FiniteCategory& c) {
  auto cone = limit(c, {ShapeKind::empty, {}});
  if (!cone) return std::nullopt;
  return cone->apex;
}

// ---------------------------------------------------------------------------
// Functors and adjunctions between finite categories.

struct FunctorData {
  std::string name;
  CategoryPtr source;
  CategoryPtr target;
  std::vector<ObjId> on_objects;
  std::vector<MorId> on_morphisms;

  [[nodiscard]] ObjId operator()(ObjId x) const { return on_objects.at(x.index()); }
  [[nodiscard]] MorId operator()(MorId f) const { return on_morphisms.at(f.index()); }
};

inline void check_shape(const FunctorData& F) {
  if (!F.source || !F.target) throw InputError("functor '" + F.name + "' has no source or target");
  if (F.on_objects.size() != F.source->object_count() || F.on_morphisms.size() != F.source->morphism_count())
    throw InputError("functor '" + F.name + "' does not map every object and morphism");
  for (auto x : F.on_objects) F.target->check(x);
  for (auto f : F.on_morphisms) F.target->check(f);
}

inline std::vector<Violation> check_functor(const FunctorData& F) {
  check_shape(F);
  const auto& A = *F.source;
  const auto& B = *F.target;
  std::vector<Violation> out;
  for (auto f : A.morphisms()) {
    if (B.source(F(f)) != F(A.source(f)) || B.target(F(f)) != F(A.target(f)))
      out.push_back({"functor-incidence", F.name + " sends '" + A.name(f) + "' to '" + B.name(F(f)) + "' with the wrong endpoints"});
  }
  if (!out.empty()) return out;
  for (auto x : A.objects()) {
    if (F(A.identity(x)) != B.identity(F(x))) out.push_back({"functor-identity", F.name + " does not preserve the identity of '" + A.name(x) + "'"});
  }
  for (auto g : A.morphisms()) {
    for (auto f : A.morphisms()) {
      auto gf = A.try_compose(g, f);
      if (gf && F(*gf) != B.compose(F(g), F(f))) out.push_back({"functor-composition", F.name + " does not preserve " + A.name(g) + " . " + A.name(f)});
    }
  }
  return out;
}

inline FunctorData identity_functor(const CategoryPtr& c) {
  return {"Id", c, c, c->objects(), c->morphisms()};
}

inline FunctorData constant_functor(const CategoryPtr& src, const CategoryPtr& tgt, ObjId value) {
  tgt->check(value);
  return {"const_" + tgt->name(value), src, tgt, std::vector<ObjId>(src->object_count(), value), std::vector<MorId>(src->morphism_count(), tgt->identity(value))};
}

/// G∘F.
inline FunctorData compose_functors(const FunctorData& G, const FunctorData& F) {
  if (!same_category(F.target, G.source)) throw InputError("cannot compose functors '" + G.name + "' and '" + F.name + "'");
  FunctorData out{G.name + "." + F.name, F.source, G.target, {}, {}};
  for (auto x : F.on_objects) out.on_objects.push_back(G(x));
  for (auto f : F.on_morphisms) out.on_morphisms.push_back(G(f));
  return out;
}

inline FunctorData opposite(const FunctorData& F, const CategoryPtr& src_op, const CategoryPtr& tgt_op) {
  FunctorData out = F;
  out.name = opposite_name(F.name);
  out.source = src_op;
  out.target = tgt_op;
  return out;
}

/// left: D -> C, right: C -> D; unit_X: X -> R L X for X in D, counit_Y: L R Y -> Y for Y in C.
struct AdjunctionData {
  std::string name;
  FunctorData left;
  FunctorData right;
  std::vector<MorId> unit;
  std::vector<MorId> counit;
};

inline std::vector<Violation> check_adjunction(const AdjunctionData& a) {
  std::vector<Violation> out = check_functor(a.left);
  auto r = check_functor(a.right);
  out.insert(out.end(), r.begin(), r.end());
  if (!same_category(a.left.source, a.right.target) || !same_category(a.left.target, a.right.source))
    throw InputError("adjunction '" + a.name + "': functors do not go back and forth between the same categories");
  if (!out.empty()) return out;
  const auto& D = *a.left.source;
  const auto& C = *a.left.target;
  if (a.unit.size() != D.object_count() || a.counit.size() != C.object_count()) throw InputError("adjunction '" + a.name + "': unit or counit is incomplete");
  for (auto u : a.unit) D.check(u);
  for (auto e : a.counit) C.check(e);
  const auto& L = a.left;
  const auto& R = a.right;
  for (auto x : D.objects()) {
    auto u = a.unit[x.index()];
    if (D.source(u) != x || D.target(u) != R(L(x))) out.push_back({"unit-incidence", "unit at '" + D.name(x) + "' has the wrong endpoints"});
  }
  for (auto y : C.objects()) {
    auto e = a.counit[y.index()];
    if (C.source(e) != L(R(y)) || C.target(e) != y) out.push_back({"counit-incidence", "counit at '" + C.name(y) + "' has the wrong endpoints"});
  }
  if (!out.empty()) return out;
  for (auto f : D.morphisms()) {
    if (D.compose(R(L(f)), a.unit[D.source(f).index()]) != D.compose(a.unit[D.target(f).index()], f))
      out.push_back({"unit-naturality", "unit is not natural at '" + D.name(f) + "'"});
  }
  for (auto g : C.morphisms()) {
    if (C.compose(g, a.counit[C.source(g).index()]) != C.compose(a.counit[C.target(g).index()], L(R(g))))
      out.push_back({"counit-naturality", "counit is not natural at '" + C.name(g) + "'"});
  }
  for (auto x : D.objects()) {
    if (C.compose(a.counit[L(x).index()], L(a.unit[x.index()])) != C.identity(L(x))) out.push_back({"triangle", "left triangle identity fails at '" + D.name(x) + "'"});
  }
  for (auto y : C.objects()) {
    if (D.compose(R(a.counit[y.index()]), a.unit[R(y).index()]) != D.identity(R(y))) out.push_back({"triangle", "right triangle identity fails at '" + C.name(y) + "'"});
  }
  return out;
}

/// R^op -| L^op between the opposite categories; unit and counit swap roles.
inline AdjunctionData opposite(const AdjunctionData& a, const CategoryPtr& d_op, const CategoryPtr& c_op) {
  AdjunctionData out;
  out.name = opposite_name(a.name);
  out.left = opposite(a.right, c_op, d_op);
  out.right = opposite(a.left, d_op, c_op);
  out.unit = a.counit;
  out.counit = a.unit;
  return out;
}

/// Searches a right adjoint of F: A -> B. Returns nullopt when some object has no couniversal arrow.
inline std::optional<AdjunctionData> right_adjoint(const FunctorData& F) {
  check_shape(F);
  const auto& A = *F.source;
  const auto& B = *F.target;
  FunctorData G{F.name + "_*", F.target, F.source, {}, {}};
  std::vector<MorId> counit;
  for (auto y : B.objects()) {
    bool found = false;
    for (auto gy : A.objects()) {
      for (auto e : B.hom(F(gy), y)) {
        bool universal = true;
        for (auto x : A.objects()) {
          for (auto f : B.hom(F(x), y)) {
            std::size_t count = 0;
            for (auto g : A.hom(x, gy)) count += B.compose(e, F(g)) == f;
            if (count != 1) {
              universal = false;
              break;
            }
          }
          if (!universal) break;
        }
        if (universal) {
          G.on_objects.push_back(gy);
          counit.push_back(e);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  // The adjunct of f: F X -> Y is the unique g: X -> G Y with counit_Y ∘ F(g) = f.
  auto adjunct = [&](ObjId x, ObjId y, MorId f) {
    const auto gy = G.on_objects[y.index()];
    for (auto g : A.hom(x, gy)) {
      if (B.compose(counit[y.index()], F(g)) == f) return g;
    }
    throw InputError("right_adjoint: missing adjunct");
  };
  for (auto h : B.morphisms()) {
    auto y = B.source(h);
    G.on_morphisms.push_back(adjunct(G.on_objects[y.index()], B.target(h), B.compose(h, counit[y.index()])));
  }
  AdjunctionData out{F.name + "-|" + G.name, F, G, {}, counit};
  for (auto x : A.objects()) out.unit.push_back(adjunct(x, F(x), B.identity(F(x))));
  return out;
}

}  // namespace hocat
