#include <catch2/catch_amalgamated.hpp>

#include "support/corpus.hpp"
#include "support/suites.hpp"

using namespace hocat;
using support::arrow;
using support::cls;
using support::object;

namespace {

const dsl::Document& structures() {
  static const auto doc = support::load("barton_structures.hocat");
  return doc;
}

const PremodelStructure& point_trivial() { return structures().find_premodel("point_trivial")->structure; }

std::vector<std::string> object_names(const FiniteCategory& c, const std::vector<ObjId>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(c.name(x));
  return out;
}

}  // namespace

TEST_CASE("nabla examples", "[localize]") {
  const auto& p0 = support::P0();
  const auto& c = p0.category();
  for (auto x : c.objects()) {
    if (!object_status(p0, x).cofibrant) continue;
    auto n = nabla(p0, c.identity(x), 4);
    CHECK(n.steps.empty());
    CHECK(n.cycle_start == 0u);
  }
  auto nac = nabla(p0, arrow(p0, "ac"), 4);
  CHECK(nac.steps == std::vector<MorId>{arrow(p0, "id_c")});
  CHECK(nac.cycle_start == 1u);
  auto nad = nabla(p0, arrow(p0, "ad"), 4);
  CHECK(nad.steps == std::vector<MorId>{arrow(p0, "id_d")});

  auto one = nabla(p0, arrow(p0, "ac"), 0);
  CHECK(one.steps.empty());
  CHECK_FALSE(one.cycle_start);

  auto closure = nabla_closure(PremodelContext(p0), {arrow(p0, "ac"), arrow(p0, "ad")});
  CHECK(closure == cls(p0, {"ac", "ad", "id_c", "id_d"}, false));
  CHECK_THROWS_AS(nabla(p0, arrow(p0, "ab"), 1), PreconditionError);
}

TEST_CASE("left_bousfield at the empty set is saturation", "[localize]") {
  for (const auto& [label, p] : support::everything()) {
    if (!support::weak_model(p)) continue;
    INFO(label);
    for (auto m : {SaturationMode::L, SaturationMode::Lc}) {
      auto r = left_bousfield(p, {}, m);
      CHECK(r.structure == saturate(p, m));
      CHECK(r.postconditions());
      CHECK(r.generators.empty());
    }
  }
}

TEST_CASE("left_bousfield of P0 at ac", "[localize]") {
  const auto& p0 = support::P0();
  auto r = left_bousfield(p0, {arrow(p0, "ac")}, SaturationMode::Lc);
  const auto& p1 = r.structure;
  CHECK(r.postconditions());
  CHECK(r.representatives == std::vector<MorId>{arrow(p0, "ac")});
  CHECK(r.generators == cls(p0, {"ac", "id_c"}, false));
  CHECK(p1.anodyne_cofibrations() == cls(p0, {"ac", "bd"}));
  CHECK(object_names(p1.category(), fibrant_objects(p1)) == std::vector<std::string>{"c", "d"});
  CHECK(p1.anodyne_fibrations().contains(arrow(p0, "ab")));
  CHECK(p1.anodyne_cofibrations().contains(arrow(p0, "bd")));
  CHECK(p1.cofibrations() == p0.cofibrations());
  CHECK(p1.name() == "P0.left_loc");

  auto l = left_bousfield(p0, {arrow(p0, "ac")}, SaturationMode::L);
  CHECK(l.postconditions());
  CHECK(l.structure == p1);
}

TEST_CASE("left_bousfield represents arrows out of non-cofibrant objects", "[localize]") {
  const auto& p0 = support::P0();
  auto r = left_bousfield(p0, {arrow(p0, "bd")}, SaturationMode::Lc);
  CHECK(r.representatives == std::vector<MorId>{arrow(p0, "ad")});
  CHECK(r.postconditions());
  CHECK(is_equivalence(r.structure, arrow(p0, "ad")).equivalence);
  // b stops being fibrant, so bd is only visible through WL.
  CHECK_FALSE(object_status(r.structure, object(p0, "b")).fibrant);
  CHECK(compute_WL(r.structure).contains(arrow(p0, "bd")));
}

TEST_CASE("left_bousfield preconditions", "[localize]") {
  const auto& p0 = support::P0();
  CHECK_THROWS_AS(left_bousfield(p0, {}, SaturationMode::R), InputError);
  const auto& d2 = support::shipped("discrete2.hocat:discrete2_trivial");
  CHECK_THROWS_AS(left_bousfield(d2, {}), PreconditionError);
  const auto& p1 = support::P1();
  CHECK_THROWS_AS(left_bousfield(p1, {arrow(p1, "ab")}), PreconditionError);
}

TEST_CASE("right_bousfield along the identity is Rc saturation", "[localize]") {
  const auto& id = *structures().find_adjunction("identity_adj");
  for (const auto* p : {&support::P0(), &support::P1(), &support::shipped("barton_structures.hocat:barton_trivial")}) {
    INFO(p->name());
    auto r = right_bousfield(*p, id, *p);
    CHECK(r.postconditions());
    CHECK(r.structure == saturate(*p, SaturationMode::Rc));
    CHECK(r.generators == core_acyclic_fibrations(*p));
    CHECK(core_acyclic_fibrations(*p).subset_of(r.structure.anodyne_fibrations()));
  }
}

TEST_CASE("right_bousfield of P0 into the point", "[localize]") {
  const auto& to_point = *structures().find_adjunction("to_point");
  const auto& p0 = support::P0();
  auto r = right_bousfield(p0, to_point, point_trivial());
  CHECK(r.generators == core_fibrations(p0));
  CHECK(r.structure.cofibrations() == acyclic_cofibrations(p0));
  CHECK(r.structure.fibrations() == p0.fibrations());
  CHECK(r.postconditions());
  CHECK(r.same_fixed_class);
}

TEST_CASE("right_bousfield preconditions", "[localize]") {
  const auto& id = *structures().find_adjunction("identity_adj");
  const auto& p0 = support::P0();
  const auto& p1 = support::P1();
  // id: P0 -> P1 is not right Quillen in this orientation.
  CHECK_THROWS_AS(right_bousfield(p0, id, p1), PreconditionError);
  CHECK_THROWS_AS(right_bousfield(p0, id, p0, SaturationMode::Lc), InputError);
}

TEST_CASE("right_bousfield is the dual of left localization at a functor", "[localize]") {
  const auto& doc = structures();
  struct Case {
    const AdjunctionData* adj;
    const PremodelStructure* p;
    const PremodelStructure* target;
  };
  const auto& id = *doc.find_adjunction("identity_adj");
  const auto& to_point = *doc.find_adjunction("to_point");
  std::vector<Case> cases{{&id, &support::P0(), &support::P0()}, {&id, &support::P1(), &support::P1()}, {&to_point, &support::P0(), &point_trivial()},
                          {&to_point, &support::P1(), &point_trivial()}};
  for (const auto& k : cases) {
    INFO(k.p->name() << " via " << k.adj->name);
    auto right = right_bousfield(*k.p, *k.adj, *k.target).structure;
    const auto dp = dualize(*k.p);
    const auto dt = dualize(*k.target);
    auto adj_op = opposite(*k.adj, dt.category_ptr(), dp.category_ptr());
    auto left = left_bousfield_at_functor(dp, adj_op, dt).structure;
    CHECK(dualize(right) == left);
  }
}

TEST_CASE("pre_right_localization examples", "[localize]") {
  const auto& p0 = support::P0();
  auto one = pre_right_localization(p0, {arrow(p0, "ac")});
  CHECK(one.structure.cofibrations() == cls(p0, {"ac", "bd"}));
  CHECK(one.premodel);
  CHECK(one.weak_model);
  CHECK(one.right_saturated);
  CHECK(one.structure.anodyne_cofibrations() == p0.anodyne_cofibrations());
  CHECK(one.structure.fibrations() == p0.fibrations());

  auto none = pre_right_localization(p0, {});
  CHECK(none.structure.cofibrations() == cell_closure(p0.category(), p0.anodyne_cofibrations()));
  CHECK(none.premodel);

  for (const auto& [label, p] : support::everything()) {
    if (!support::weak_model(p)) continue;
    INFO(label);
    const auto core = core_cofibrations(p);
    auto all = pre_right_localization(p, core.members());
    CHECK(all.structure.cofibrations() == generate_wfs(p.category(), core | p.anodyne_cofibrations()).wfs.left);
    CHECK(all.premodel);
    if (all.premodel) CHECK(all.right_saturated);
    if (all.premodel) CHECK(all.weak_model);
  }
}

TEST_CASE("nabla lift lemma on the corpus", "[localize]") {
  for (const auto& [label, p] : support::everything()) {
    if (!support::weak_model(p)) continue;
    INFO(label);
    auto v = suites::nabla_lift(p);
    INFO(suites::summary(v));
    CHECK(v.empty());
  }
}

TEST_CASE("localization preserves semi-model structures", "[localize]") {
  suites::LocalizationStats stats;
  for (const auto& [label, p] : support::everything()) {
    INFO(label);
    auto v = suites::localization_preservation(p, &stats);
    INFO(suites::summary(v));
    CHECK(v.empty());
  }
  CHECK(stats.left_semi_inputs > 0);
  CHECK(stats.two_sided_inputs > 0);
  CHECK(stats.localizations > stats.left_semi_inputs);
}
