// Walks through the Barton lattice: a Quillen structure whose left
// localization at ac is two-sided but not Quillen.
//
//   barton_walkthrough fixtures/barton.hocat

#include <iostream>

#include "hocat/frontend/runner.hpp"

using namespace hocat;

namespace {

std::string list(const FiniteCategory& c, const ArrowClass& s) {
  std::string out;
  for (auto f : s.members())
    if (!c.is_identity(f)) out += (out.empty() ? "" : ", ") + c.name(f);
  return "{" + out + "}";
}

std::string objects(const FiniteCategory& c, const std::vector<ObjId>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " -> ") + c.name(x);
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " barton.hocat\n";
    return 2;
  }
  try {
    const auto doc = dsl::parse_file(argv[1]);
    const auto* decl = doc.find_premodel("P0");
    if (!decl) throw InputError("the file does not declare P0");
    const auto& p0 = decl->structure;
    const auto& c = p0.category();
    auto mor = [&](const char* n) { return c.morphism(n); };

    const auto r0 = classify_full(p0);
    std::cout << "P0 is Quillen: " << yn(r0.is_quillen()) << "\n";
    std::cout << "Ho(P0): " << objects(c, homotopy_category(p0).objects) << "\n";

    const auto po = pushout(c, mor("ab"), mor("ac"));
    if (!po) throw NonexistenceError("pushout of ab along ac is missing");
    std::cout << "pushout of ab along ac: " << c.name(po->from_c) << ", an equivalence: " << yn(is_equivalence(p0, po->from_c).equivalence) << "\n";

    const auto loc = left_bousfield(p0, {mor("ac")}, SaturationMode::Lc);
    const auto p1 = bi_saturate(loc.structure);
    std::string fib;
    for (auto x : fibrant_objects(p1)) fib += c.name(x) + " ";
    std::cout << "localized at ac, fibrant objects: " << fib << "\n";
    std::cout << "  anodyne cofibrations " << list(c, p1.anodyne_cofibrations()) << ", anodyne fibrations " << list(c, p1.anodyne_fibrations()) << "\n";

    const auto q = quillen_check(p1);
    std::cout << "two-sided: " << yn(two_sided_check(p1).ok()) << ", Quillen: " << yn(q.quillen()) << "\n";
    std::cout << "  WL \\ WR = " << list(c, ArrowClass(c.morphism_count(), q.wl_not_wr)) << ", WR \\ WL = " << list(c, ArrowClass(c.morphism_count(), q.wr_not_wl)) << "\n";
    const LocalizationData data(p1);
    const auto b = c.object("b");
    std::cout << "  b goes to " << c.name(data.left_object(b)) << " on the left and to " << c.name(data.right_object(b)) << " on the right\n";
    return r0.is_quillen() && !q.quillen() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.exit_code();
  }
}
