#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hocat/fincat.hpp"

namespace hocat {

/// A set of morphisms of one category, stored as a membership mask.
class ArrowClass {
 public:
  ArrowClass() = default;
  explicit ArrowClass(std::size_t universe, bool full = false) : bits_(universe, full) {}
  ArrowClass(std::size_t universe, const std::vector<MorId>& members) : bits_(universe, false) {
    for (auto f : members) insert(f);
  }

  static ArrowClass all(const FiniteCategory& c) { return ArrowClass(c.morphism_count(), true); }
  static ArrowClass none(const FiniteCategory& c) { return ArrowClass(c.morphism_count(), false); }
  static ArrowClass identities(const FiniteCategory& c) {
    ArrowClass out(c.morphism_count());
    for (auto x : c.objects()) out.insert(c.identity(x));
    return out;
  }
  static ArrowClass isomorphisms(const FiniteCategory& c) {
    ArrowClass out(c.morphism_count());
    for (auto f : c.morphisms())
      if (c.is_iso(f)) out.insert(f);
    return out;
  }
  template <class Pred>
  static ArrowClass where(const FiniteCategory& c, Pred&& p) {
    ArrowClass out(c.morphism_count());
    for (auto f : c.morphisms())
      if (p(f)) out.insert(f);
    return out;
  }

  [[nodiscard]] std::size_t universe() const { return bits_.size(); }
  [[nodiscard]] bool contains(MorId f) const { return f.index() < bits_.size() && bits_[f.index()]; }
  void insert(MorId f) { bits_.at(f.index()) = true; }
  void erase(MorId f) { bits_.at(f.index()) = false; }

  [[nodiscard]] std::size_t size() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b;
    return n;
  }
  [[nodiscard]] bool empty() const { return size() == 0; }
  [[nodiscard]] std::vector<MorId> members() const {
    std::vector<MorId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.emplace_back(i);
    return out;
  }

  [[nodiscard]] bool subset_of(const ArrowClass& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !o.bits_[i]) return false;
    return true;
  }

  friend ArrowClass operator|(const ArrowClass& a, const ArrowClass& b) { return a.zip(b, [](bool x, bool y) { return x || y; }); }
  friend ArrowClass operator&(const ArrowClass& a, const ArrowClass& b) { return a.zip(b, [](bool x, bool y) { return x && y; }); }
  friend ArrowClass operator-(const ArrowClass& a, const ArrowClass& b) { return a.zip(b, [](bool x, bool y) { return x && !y; }); }
  friend bool operator==(const ArrowClass&, const ArrowClass&) = default;

  void check_against(const FiniteCategory& c) const {
    if (universe() != c.morphism_count()) throw InputError("arrow class does not belong to category '" + c.name() + "'");
  }

 private:
  void same_universe(const ArrowClass& o) const {
    if (o.universe() != universe()) throw InputError("arrow classes over different categories");
  }
  template <class Op>
  ArrowClass zip(const ArrowClass& o, Op op) const {
    same_universe(o);
    ArrowClass out(universe());
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = op(bits_[i], o.bits_[i]);
    return out;
  }

  std::vector<bool> bits_;
};

inline std::vector<std::string> names_of(const FiniteCategory& c, const ArrowClass& s) {
  std::vector<std::string> out;
  for (auto f : s.members()) out.push_back(c.name(f));
  return out;
}

/// Commutative square g∘u = v∘f, f on the left, g on the right.
struct LiftingSquare {
  MorId f;
  MorId g;
  MorId u;  // dom f -> dom g
  MorId v;  // cod f -> cod g
  friend bool operator==(const LiftingSquare&, const LiftingSquare&) = default;
};

inline bool commutes(const FiniteCategory& c, const LiftingSquare& s) {
  if (c.source(s.u) != c.source(s.f) || c.target(s.u) != c.source(s.g) || c.source(s.v) != c.target(s.f) || c.target(s.v) != c.target(s.g)) return false;
  return c.compose(s.g, s.u) == c.compose(s.v, s.f);
}

/// First diagonal d with d∘f = u and g∘d = v, in morphism order.
inline std::optional<MorId> has_lift(const FiniteCategory& c, const LiftingSquare& s) {
  if (!commutes(c, s)) throw InputError("lifting square on '" + c.name(s.f) + "' and '" + c.name(s.g) + "' does not commute");
  for (auto d : c.hom(c.target(s.f), c.source(s.g))) {
    if (c.compose(d, s.f) == s.u && c.compose(s.g, d) == s.v) return d;
  }
  return std::nullopt;
}

/// First commutative square of f against g without a diagonal, if any.
inline std::optional<LiftingSquare> lifting_obstruction(const FiniteCategory& c, MorId f, MorId g) {
  for (auto u : c.hom(c.source(f), c.source(g))) {
    for (auto v : c.hom(c.target(f), c.target(g))) {
      LiftingSquare s{f, g, u, v};
      if (c.compose(g, u) != c.compose(v, f)) continue;
      if (!has_lift(c, s)) return s;
    }
  }
  return std::nullopt;
}

/// f has the left lifting property against g.
inline bool llp(const FiniteCategory& c, MorId f, MorId g) { return !lifting_obstruction(c, f, g); }

/// Morphisms with the right lifting property against all of S.
inline ArrowClass complement_rlp(const FiniteCategory& c, const ArrowClass& s) {
  s.check_against(c);
  const auto ms = s.members();
  return ArrowClass::where(c, [&](MorId g) {
    for (auto f : ms)
      if (!llp(c, f, g)) return false;
    return true;
  });
}

/// Morphisms with the left lifting property against all of S.
inline ArrowClass complement_llp(const FiniteCategory& c, const ArrowClass& s) {
  s.check_against(c);
  const auto ms = s.members();
  return ArrowClass::where(c, [&](MorId f) {
    for (auto g : ms)
      if (!llp(c, f, g)) return false;
    return true;
  });
}

/// g is a retract of s in the arrow category.
inline bool is_retract_of(const FiniteCategory& c, MorId g, MorId s) {
  const auto x = c.source(g), y = c.target(g), a = c.source(s), b = c.target(s);
  for (auto i : c.hom(x, a)) {
    for (auto r : c.hom(a, x)) {
      if (c.compose(r, i) != c.identity(x)) continue;
      for (auto j : c.hom(y, b)) {
        if (c.compose(s, i) != c.compose(j, g)) continue;
        for (auto q : c.hom(b, y)) {
          if (c.compose(q, j) == c.identity(y) && c.compose(g, r) == c.compose(q, s)) return true;
        }
      }
    }
  }
  return false;
}

inline ArrowClass retract_closure(const FiniteCategory& c, const ArrowClass& s) {
  s.check_against(c);
  const auto ms = s.members();
  return ArrowClass::where(c, [&](MorId g) {
    if (s.contains(g)) return true;
    for (auto f : ms)
      if (is_retract_of(c, g, f)) return true;
    return false;
  });
}

/// Least class containing I and the identities, closed under existing pushouts,
/// composition and retracts. `rounds` receives the number of passes that added something.
inline ArrowClass cell_closure(const FiniteCategory& c, const ArrowClass& gens, std::size_t* rounds = nullptr) {
  gens.check_against(c);
  ArrowClass cur = gens | ArrowClass::identities(c);
  std::map<std::pair<std::size_t, std::size_t>, std::optional<MorId>> pushouts;
  std::size_t passes = 0;
  for (;;) {
    ArrowClass next = cur;
    for (auto f : cur.members()) {
      for (auto x : c.objects()) {
        for (auto u : c.hom(c.source(f), x)) {
          auto key = std::pair{f.index(), u.index()};
          auto it = pushouts.find(key);
          if (it == pushouts.end()) {
            auto po = pushout(c, f, u);
            it = pushouts.emplace(key, po ? std::optional<MorId>(po->from_c) : std::nullopt).first;
          }
          if (it->second) next.insert(*it->second);
        }
      }
      for (auto g : cur.members()) {
        if (auto gf = c.try_compose(g, f)) next.insert(*gf);
      }
    }
    next = retract_closure(c, next);
    if (next == cur) break;
    cur = std::move(next);
    ++passes;
  }
  if (rounds) *rounds = passes;
  return cur;
}

struct WeakFactorizationSystem {
  ArrowClass left;
  ArrowClass right;
  friend bool operator==(const WeakFactorizationSystem&, const WeakFactorizationSystem&) = default;
};

/// First factorization h = r∘l with l in L, r in R, ordered by (middle object, l, r).
inline std::optional<std::pair<MorId, MorId>> factorize(const FiniteCategory& c, MorId h, const ArrowClass& left, const ArrowClass& right) {
  for (auto z : c.objects()) {
    for (auto l : c.hom(c.source(h), z)) {
      if (!left.contains(l)) continue;
      for (auto r : c.hom(z, c.target(h))) {
        if (right.contains(r) && c.compose(r, l) == h) return std::pair{l, r};
      }
    }
  }
  return std::nullopt;
}

struct WfsVerdict {
  bool lifting = true;
  bool left_is_complement = true;
  bool right_is_complement = true;
  bool factorization = true;
  std::optional<LiftingSquare> unliftable;
  std::optional<MorId> left_mismatch;
  std::optional<MorId> right_mismatch;
  std::optional<MorId> unfactorizable;

  [[nodiscard]] bool ok() const { return lifting && left_is_complement && right_is_complement && factorization; }
};

inline WfsVerdict verify_wfs(const FiniteCategory& c, const WeakFactorizationSystem& w) {
  w.left.check_against(c);
  w.right.check_against(c);
  WfsVerdict v;
  for (auto l : w.left.members()) {
    for (auto r : w.right.members()) {
      if (auto s = lifting_obstruction(c, l, r); s && v.lifting) {
        v.lifting = false;
        v.unliftable = s;
      }
    }
  }
  auto lc = complement_llp(c, w.right);
  auto rc = complement_rlp(c, w.left);
  if (lc != w.left) {
    v.left_is_complement = false;
    auto d = (lc - w.left) | (w.left - lc);
    v.left_mismatch = d.members().front();
  }
  if (rc != w.right) {
    v.right_is_complement = false;
    auto d = (rc - w.right) | (w.right - rc);
    v.right_mismatch = d.members().front();
  }
  for (auto h : c.morphisms()) {
    if (!factorize(c, h, w.left, w.right)) {
      v.factorization = false;
      v.unfactorizable = h;
      break;
    }
  }
  return v;
}

struct GeneratedWfs {
  WeakFactorizationSystem wfs;
  std::optional<MorId> unfactorizable;
  [[nodiscard]] bool ok() const { return !unfactorizable; }
};

/// (llp(rlp(I)), rlp(I)), with the factorization axiom checked.
inline GeneratedWfs generate_wfs(const FiniteCategory& c, const ArrowClass& gens) {
  GeneratedWfs g;
  g.wfs.right = complement_rlp(c, gens);
  g.wfs.left = complement_llp(c, g.wfs.right);
  for (auto h : c.morphisms()) {
    if (!factorize(c, h, g.wfs.left, g.wfs.right)) {
      g.unfactorizable = h;
      break;
    }
  }
  return g;
}

/// Dual of generate_wfs: (llp(J), rlp(llp(J))).
inline GeneratedWfs cogenerate_wfs(const FiniteCategory& c, const ArrowClass& gens) {
  GeneratedWfs g;
  g.wfs.left = complement_llp(c, gens);
  g.wfs.right = complement_rlp(c, g.wfs.left);
  for (auto h : c.morphisms()) {
    if (!factorize(c, h, g.wfs.left, g.wfs.right)) {
      g.unfactorizable = h;
      break;
    }
  }
  return g;
}

}  // namespace hocat
