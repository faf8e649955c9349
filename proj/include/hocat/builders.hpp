#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hocat/fincat.hpp"

namespace hocat {

/// Assembles a composition table from generators and listed composites.
/// Identities are named `id_<object>` and compose trivially. In a thin category
/// an unlisted composite is the unique arrow with the right endpoints.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name, bool thin = false) : thin_(thin) { d_.name = std::move(name); }

  ObjId add_object(const std::string& name) {
    if (objects_.count(name)) throw InputError("object '" + name + "' declared twice");
    ObjId x(d_.objects.size());
    d_.objects.push_back(name);
    objects_.emplace(name, x);
    return x;
  }

  MorId add_arrow(const std::string& name, ObjId s, ObjId t) {
    if (arrows_.count(name) || name.rfind("id_", 0) == 0) throw InputError("arrow name '" + name + "' is taken");
    MorId f(arrows_list_.size());
    arrows_list_.push_back({name, s, t});
    arrows_.emplace(name, f);
    return f;
  }

  /// g∘f = h, by arrow name (identities allowed).
  void add_relation(const std::string& g, const std::string& f, const std::string& h) { relations_.push_back({g, f, h}); }

  [[nodiscard]] std::optional<ObjId> find_object(const std::string& s) const {
    auto it = objects_.find(s);
    if (it == objects_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] bool has_arrow(const std::string& s) const {
    if (arrows_.count(s)) return true;
    return s.rfind("id_", 0) == 0 && objects_.count(s.substr(3));
  }

  [[nodiscard]] CategoryData build() const {
    CategoryData d = d_;
    d.declared_thin = thin_;
    const std::size_t n = d.objects.size();
    for (std::size_t x = 0; x < n; ++x) {
      d.identities.emplace_back(x);
      d.morphisms.push_back({"id_" + d.objects[x], ObjId(x), ObjId(x)});
    }
    for (const auto& a : arrows_list_) d.morphisms.push_back(a);
    const std::size_t m = d.morphisms.size();
    std::map<std::string, MorId> index;
    for (std::size_t i = 0; i < m; ++i) index.emplace(d.morphisms[i].name, MorId(i));
    auto lookup = [&](const std::string& s) {
      auto it = index.find(s);
      if (it == index.end()) throw InputError("relation mentions unknown arrow '" + s + "'");
      return it->second;
    };
    d.compose.assign(m * m, std::nullopt);
    auto at = [&](MorId g, MorId f) -> std::optional<MorId>& { return d.compose[g.index() * m + f.index()]; };
    for (std::size_t f = 0; f < m; ++f) {
      const auto& e = d.morphisms[f];
      at(d.identities[e.target.index()], MorId(f)) = MorId(f);
      at(MorId(f), d.identities[e.source.index()]) = MorId(f);
    }
    for (const auto& r : relations_) {
      auto g = lookup(r.g), f = lookup(r.f), h = lookup(r.h);
      const auto& eg = d.morphisms[g.index()];
      const auto& ef = d.morphisms[f.index()];
      const auto& eh = d.morphisms[h.index()];
      if (eg.source != ef.target) throw InputError("relation " + r.g + " . " + r.f + ": arrows are not composable");
      if (eh.source != ef.source || eh.target != eg.target) throw InputError("relation " + r.g + " . " + r.f + " = " + r.h + ": endpoints do not match");
      auto& slot = at(g, f);
      if (slot && *slot != h) throw InputError("relation " + r.g + " . " + r.f + " is given two different values");
      slot = h;
    }
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t f = 0; f < m; ++f) {
        const auto& eg = d.morphisms[g];
        const auto& ef = d.morphisms[f];
        if (eg.source != ef.target || d.compose[g * m + f]) continue;
        if (!thin_) throw InputError("composite " + eg.name + " . " + ef.name + " is not listed in the relations");
        std::optional<MorId> h;
        for (std::size_t k = 0; k < m && !h; ++k)
          if (d.morphisms[k].source == ef.source && d.morphisms[k].target == eg.target) h = MorId(k);
        if (!h) throw InputError("composite " + eg.name + " . " + ef.name + " has no arrow " + d.objects[ef.source.index()] + " -> " + d.objects[eg.target.index()]);
        d.compose[g * m + f] = h;
      }
    }
    return d;
  }

 private:
  struct Relation {
    std::string g, f, h;
  };
  CategoryData d_;
  bool thin_;
  std::map<std::string, ObjId> objects_;
  std::map<std::string, MorId> arrows_;
  std::vector<MorphismEntry> arrows_list_;
  std::vector<Relation> relations_;
};

/// Name of the arrow y -> x witnessing x <= y: concatenation for one-letter
/// elements, `y_x` otherwise.
inline std::string poset_arrow_name(const std::string& y, const std::string& x) {
  if (y.size() == 1 && x.size() == 1) return y + x;
  return y + "_" + x;
}

/// Thin category of a finite poset given by `x <= y` pairs: one arrow y -> x per
/// strict relation of the reflexive-transitive closure. Elements keep their order.
inline CategoryData poset_category(const std::string& name, const std::vector<std::string>& elements, const std::vector<std::pair<std::string, std::string>>& leq) {
  const std::size_t n = elements.size();
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pos.emplace(elements[i], i).second) throw InputError("poset element '" + elements[i] + "' listed twice");
  }
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [x, y] : leq) {
    auto ix = pos.find(x), iy = pos.find(y);
    if (ix == pos.end() || iy == pos.end()) throw InputError("poset relation mentions unknown element");
    le[ix->second][iy->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (le[i][j] && le[j][i]) throw InputError("'" + elements[i] + "' and '" + elements[j] + "' are related both ways; not a poset");
  CategoryBuilder b(name, true);
  for (const auto& e : elements) b.add_object(e);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (x != y && le[x][y]) b.add_arrow(poset_arrow_name(elements[y], elements[x]), ObjId(y), ObjId(x));
  return b.build();
}

inline CategoryPtr make_category(CategoryData d) { return std::make_shared<FiniteCategory>(std::move(d)); }

/// Same objects, arrows, endpoints and composites when matched by name.
inline bool equal_by_names(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
  for (auto x : a.objects())
    if (!b.find_object(a.name(x))) return false;
  for (auto f : a.morphisms()) {
    auto g = b.find_morphism(a.name(f));
    if (!g || b.name(b.source(*g)) != a.name(a.source(f)) || b.name(b.target(*g)) != a.name(a.target(f))) return false;
  }
  for (auto g : a.morphisms())
    for (auto f : a.morphisms()) {
      auto h = a.try_compose(g, f);
      auto h2 = b.try_compose(b.morphism(a.name(g)), b.morphism(a.name(f)));
      if (h.has_value() != h2.has_value()) return false;
      if (h && a.name(*h) != b.name(*h2)) return false;
    }
  return true;
}

}  // namespace hocat
