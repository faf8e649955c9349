#include <catch2/catch_amalgamated.hpp>

#include "support/corpus.hpp"
#include "support/suites.hpp"

using namespace hocat;

namespace {

const PremodelStructure& trivial() { return support::shipped("barton_structures.hocat:barton_trivial"); }

constexpr SaturationMode kModes[] = {SaturationMode::L, SaturationMode::Lc, SaturationMode::R, SaturationMode::Rc};

}  // namespace

TEST_CASE("mode names", "[saturate]") {
  for (auto m : kModes) CHECK(parse_saturation_mode(to_string(m)) == m);
  CHECK(to_string(SaturationMode::Lc) == "Lc");
  CHECK_FALSE(parse_saturation_mode("LR"));
  CHECK_FALSE(parse_saturation_mode(""));
}

TEST_CASE("saturate examples", "[saturate]") {
  const auto& p0 = support::P0();
  REQUIRE(saturation_flags(p0).left);
  CHECK(saturate(p0, SaturationMode::L) == p0);
  CHECK(saturate(p0, SaturationMode::L).name() == "P0.L");

  const auto& p1 = support::shipped("barton_structures.hocat:P1");
  CHECK(saturate(p1, SaturationMode::Lc) == p1);

  for (auto m : kModes) CHECK(saturate(trivial(), m) == trivial());
}

TEST_CASE("saturation changes the classes it should", "[saturate]") {
  for (const auto& [label, p] : support::everything()) {
    if (!support::premodel(p)) continue;
    INFO(label);
    auto l = saturate(p, SaturationMode::L);
    CHECK(l.cofibrations() == p.cofibrations());
    CHECK(l.anodyne_fibrations() == p.anodyne_fibrations());
    CHECK(l.anodyne_cofibrations() == complement_llp(p.category(), l.fibrations()));
    CHECK(acyclic_cofibrations(p).subset_of(l.anodyne_cofibrations()));
    CHECK(l.fibrations().subset_of(p.fibrations()));
    auto r = saturate(p, SaturationMode::R);
    CHECK(r.anodyne_cofibrations() == p.anodyne_cofibrations());
    CHECK(r.fibrations() == p.fibrations());
    CHECK(acyclic_fibrations(p).subset_of(r.anodyne_fibrations()));
    CHECK(r.cofibrations().subset_of(p.cofibrations()));
    auto lc = saturate(p, SaturationMode::Lc);
    CHECK(lc.anodyne_cofibrations().subset_of(l.anodyne_cofibrations()));
  }
}

TEST_CASE("bi_saturate examples", "[saturate]") {
  CHECK(bi_saturate(trivial()) == trivial());
  CHECK(bi_saturate(support::P0()) == support::P0());
  CHECK(bi_saturate(support::P0()).name() == "P0.bisat");

  const auto& p1 = support::P1();
  auto s = bi_saturate(p1);
  CHECK(saturation_flags(s).bi());
  auto core = suites::same_core(p1, s, "P1");
  INFO(suites::summary(core));
  CHECK(core.empty());
  // The Lc localization of P0 is already saturated on both sides.
  CHECK(saturation_flags(p1).bi());
  CHECK(s == p1);
}

TEST_CASE("RL and LR", "[saturate]") {
  // Whether the two orders can differ is open; only their common properties are asserted.
  for (const auto& [label, p] : support::everything()) {
    if (!support::premodel(p)) continue;
    INFO(label);
    auto bi = bi_saturate_both(p);
    CHECK(saturation_flags(bi.right_of_left).bi());
    CHECK(saturation_flags(bi.left_of_right).bi());
    auto core = suites::same_core(bi.right_of_left, bi.left_of_right, label);
    CHECK(core.empty());
  }
}

TEST_CASE("saturation contracts on the corpus", "[saturate]") {
  for (const auto& [label, p] : support::everything()) {
    if (!support::premodel(p)) continue;
    INFO(label);
    auto v = suites::saturation_contracts(p);
    INFO(suites::summary(v));
    CHECK(v.empty());
  }
}

TEST_CASE("left saturation is universal among left saturated targets", "[saturate]") {
  const auto all = support::everything();
  std::vector<PremodelStructure> extra;
  for (const auto& [label, p] : all) {
    if (!support::premodel(p)) continue;
    for (auto m : kModes) extra.push_back(saturate(p, m));
    extra.push_back(bi_saturate(p));
  }
  std::vector<const PremodelStructure*> targets;
  for (const auto& n : all) targets.push_back(&n.p);
  for (const auto& e : extra) targets.push_back(&e);

  std::size_t compared = 0;
  for (const auto& [label, p] : all) {
    if (!support::premodel(p)) continue;
    INFO(label);
    auto v = suites::saturation_universality(p, targets);
    INFO(suites::summary(v));
    CHECK(v.empty());
    for (const auto* q : targets)
      if (same_category(p.category_ptr(), q->category_ptr()) && saturation_flags(*q).left) ++compared;
  }
  CHECK(compared > all.size());
}
