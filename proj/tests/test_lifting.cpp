#include <catch2/catch_amalgamated.hpp>

#include "oracle/oracle.hpp"
#include "support/corpus.hpp"

using namespace hocat;

namespace {

const FiniteCategory& B() { return support::P0().category(); }
MorId m(const char* n) { return B().morphism(n); }

ArrowClass of(std::initializer_list<const char*> ns, bool ids = false) {
  ArrowClass out = ids ? ArrowClass::identities(B()) : ArrowClass::none(B());
  for (auto n : ns) out.insert(m(n));
  return out;
}

std::vector<CategoryPtr> small_categories() {
  std::vector<CategoryPtr> out;
  for (const auto& f : support::fixture_files())
    for (const auto& [name, c] : support::load(f).categories) out.push_back(c);
  std::mt19937 rng(11);
  for (int k = 0; k < 4; ++k) out.push_back(support::random_poset(rng, 3 + k, 0.5));
  return out;
}

/// Every subset of the morphisms when there are few, a random sample otherwise.
std::vector<ArrowClass> classes_of(const FiniteCategory& c, std::mt19937& rng) {
  std::vector<ArrowClass> out;
  const auto n = c.morphism_count();
  if (n <= 9) {
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      ArrowClass s(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) s.insert(MorId(i));
      out.push_back(s);
    }
  } else {
    for (int k = 0; k < 200; ++k) out.push_back(support::random_subset(rng, c, ArrowClass::all(c), 0.4) - ArrowClass::identities(c));
  }
  return out;
}

}  // namespace

TEST_CASE("has_lift examples", "[lifting]") {
  auto d = has_lift(B(), {m("ac"), m("cd"), m("ac"), m("cd")});
  REQUIRE(d);
  CHECK(*d == m("id_c"));

  for (auto f : B().morphisms()) {
    if (!B().is_identity(f)) continue;
    for (auto g : B().morphisms())
      for (auto u : B().hom(B().source(f), B().source(g))) {
        auto v = B().compose(g, u);
        auto l = has_lift(B(), {f, g, u, v});
        REQUIRE(l);
        CHECK(*l == u);
      }
  }

  CHECK_FALSE(has_lift(B(), {m("ac"), m("ad"), m("id_a"), m("cd")}));
  CHECK_THROWS_AS(has_lift(B(), {m("ac"), m("cd"), m("id_a"), m("ad")}), InputError);
}

TEST_CASE("llp examples", "[lifting]") {
  CHECK(llp(B(), m("ab"), m("ac")));
  for (auto g : B().morphisms()) CHECK(llp(B(), m("id_b"), g));
  CHECK_FALSE(llp(B(), m("ad"), m("cd")));
  auto obstruction = lifting_obstruction(B(), m("ad"), m("cd"));
  REQUIRE(obstruction);
  CHECK(obstruction->u == m("ac"));
  CHECK(obstruction->v == m("id_d"));
}

TEST_CASE("complements", "[lifting]") {
  CHECK(complement_rlp(B(), ArrowClass::none(B())) == ArrowClass::all(B()));
  CHECK(complement_rlp(B(), ArrowClass::identities(B())) == ArrowClass::all(B()));
  auto r = complement_rlp(B(), of({"ac", "bd"}));
  CHECK(r == ArrowClass::all(B()) - of({"ac", "ad", "bd"}));
  CHECK(r == of({"ab", "cd"}, true));
}

TEST_CASE("cell_closure", "[lifting]") {
  CHECK(cell_closure(B(), ArrowClass::none(B())) == ArrowClass::identities(B()));
  std::size_t rounds = 0;
  CHECK(cell_closure(B(), of({"ac"}), &rounds) == of({"ac", "bd"}, true));
  CHECK(rounds <= B().morphism_count());
  CHECK(cell_closure(B(), ArrowClass::all(B())) == ArrowClass::all(B()));
}

TEST_CASE("retract_closure", "[lifting]") {
  CHECK(retract_closure(B(), ArrowClass::none(B())) == ArrowClass::none(B()));
  for (auto f : B().morphisms()) {
    ArrowClass s = ArrowClass::none(B());
    s.insert(f);
    CHECK(retract_closure(B(), s).contains(f));
    CHECK(retract_closure(B(), s) == s);
  }
}

TEST_CASE("verify_wfs examples", "[lifting]") {
  CHECK(verify_wfs(B(), {ArrowClass::identities(B()), ArrowClass::all(B())}).ok());
  CHECK(verify_wfs(B(), {ArrowClass::all(B()), ArrowClass::identities(B())}).ok());
  const auto& p = support::P0();
  CHECK(p.cofibrations() == ArrowClass::all(B()) - of({"ab"}));
  CHECK(p.anodyne_fibrations() == of({"ab"}, true));
  CHECK(verify_wfs(B(), p.cofibration_wfs()).ok());

  auto bad = verify_wfs(B(), {ArrowClass::all(B()), ArrowClass::all(B())});
  CHECK_FALSE(bad.ok());
  CHECK(bad.unliftable);
  auto short_left = verify_wfs(B(), {ArrowClass::identities(B()), of({"ab"}, true)});
  CHECK_FALSE(short_left.ok());
  CHECK_FALSE(short_left.factorization);
}

TEST_CASE("generate_wfs examples", "[lifting]") {
  auto g0 = generate_wfs(B(), ArrowClass::none(B()));
  REQUIRE(g0.ok());
  CHECK(g0.wfs.left == ArrowClass::isomorphisms(B()));
  CHECK(g0.wfs.right == ArrowClass::all(B()));

  auto g1 = generate_wfs(B(), of({"ac"}, true));
  REQUIRE(g1.ok());
  CHECK(g1.wfs.left == of({"ac", "bd"}, true));
  CHECK(g1.wfs.right == ArrowClass::all(B()) - of({"ac", "ad", "bd"}));
  CHECK(verify_wfs(B(), g1.wfs).ok());

  auto g2 = generate_wfs(B(), ArrowClass::all(B()));
  REQUIRE(g2.ok());
  CHECK(g2.wfs.left == ArrowClass::all(B()));
  CHECK(g2.wfs.right == ArrowClass::identities(B()));
}

TEST_CASE("generate_wfs reports the unfactorizable morphism", "[lifting]") {
  // In a parallel pair x => y, generating from one arrow leaves the other unfactorizable.
  auto c = make_category([] {
    CategoryBuilder b("parallel");
    auto x = b.add_object("x"), y = b.add_object("y");
    b.add_arrow("s", x, y);
    b.add_arrow("t", x, y);
    return b.build();
  }());
  ArrowClass gens(c->morphism_count());
  gens.insert(c->morphism("s"));
  auto g = generate_wfs(*c, gens);
  CHECK(g.wfs.right == complement_rlp(*c, gens));
  if (!g.ok()) {
    CHECK(verify_wfs(*c, g.wfs).unfactorizable.has_value());
  } else {
    CHECK(verify_wfs(*c, g.wfs).ok());
  }
}

TEST_CASE("lifting agrees with the square oracle", "[lifting]") {
  for (const auto& cp : small_categories()) {
    const auto& c = *cp;
    const auto t = oracle::table_of(c);
    for (auto f : c.morphisms())
      for (auto g : c.morphisms()) CHECK(llp(c, f, g) == oracle::lifts(t, f.index(), g.index()));
  }
}

TEST_CASE("Galois connection between the complements", "[lifting]") {
  std::mt19937 rng(3);
  for (const auto& cp : small_categories()) {
    const auto& c = *cp;
    auto cls = classes_of(c, rng);
    std::vector<ArrowClass> sample;
    for (std::size_t i = 0; i < cls.size(); i += std::max<std::size_t>(1, cls.size() / 40)) sample.push_back(cls[i]);
    for (const auto& s : sample)
      for (const auto& t : sample) CHECK(s.subset_of(complement_llp(c, t)) == t.subset_of(complement_rlp(c, s)));
  }
}

TEST_CASE("closures: rlp invariance, idempotence, monotonicity", "[lifting]") {
  std::mt19937 rng(5);
  for (const auto& cp : small_categories()) {
    const auto& c = *cp;
    auto cls = classes_of(c, rng);
    const auto t = oracle::table_of(c);
    std::optional<ArrowClass> prev;
    for (const auto& s : cls) {
      const auto cell = cell_closure(c, s);
      const auto ret = retract_closure(c, s);
      CHECK(complement_rlp(c, s) == complement_rlp(c, cell));
      CHECK(oracle::to_cls(complement_rlp(c, s)) == oracle::rlp(t, oracle::to_cls(s)));
      CHECK(cell_closure(c, cell) == cell);
      CHECK(retract_closure(c, ret) == ret);
      CHECK(s.subset_of(cell));
      CHECK(s.subset_of(ret));
      if (prev && prev->subset_of(s)) {
        CHECK(cell_closure(c, *prev).subset_of(cell));
        CHECK(retract_closure(c, *prev).subset_of(ret));
      }
      prev = s;
    }
  }
}

TEST_CASE("generated pairs verify, and duality of wfs", "[lifting]") {
  std::mt19937 rng(9);
  for (const auto& cp : small_categories()) {
    const auto& c = *cp;
    auto op = opposite(c);
    const auto t = oracle::table_of(c);
    for (const auto& s : classes_of(c, rng)) {
      auto g = generate_wfs(c, s);
      if (g.ok()) {
        CHECK(verify_wfs(c, g.wfs).ok());
        CHECK(oracle::is_wfs(t, oracle::to_cls(g.wfs.left), oracle::to_cls(g.wfs.right)));
      } else {
        CHECK_FALSE(oracle::is_wfs(t, oracle::to_cls(g.wfs.left), oracle::to_cls(g.wfs.right)));
      }
      CHECK(verify_wfs(c, g.wfs).ok() == verify_wfs(*op, {g.wfs.right, g.wfs.left}).ok());
    }
  }
}
