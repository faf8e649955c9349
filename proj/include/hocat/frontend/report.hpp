#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hocat/classify.hpp"

namespace hocat::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "hocat-report/1";

/// One entry per directive; see docs/report-format.md for the field contract.
struct Report {
  std::string source;
  Json document = Json::object();
  std::vector<Json> results;

  [[nodiscard]] int exit_code() const {
    int code = 0;
    for (const auto& r : results) code = std::max(code, r.value("exit", 0));
    return code;
  }
  friend bool operator==(const Report&, const Report&) = default;
};

inline Json to_json(const Report& r) {
  Json j;
  j["format"] = kFormat;
  j["source"] = r.source;
  j["document"] = r.document;
  j["results"] = Json::array();
  for (const auto& e : r.results) j["results"].push_back(e);
  j["exit"] = r.exit_code();
  return j;
}

inline std::string serialize(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline Report from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != kFormat) throw InputError("not a hocat report");
  Report r;
  r.source = j.at("source").get<std::string>();
  r.document = j.at("document");
  for (const auto& e : j.at("results")) {
    if (!e.is_object() || !e.contains("directive") || !e.contains("status") || !e.contains("exit")) throw InputError("malformed report entry");
    r.results.push_back(e);
  }
  if (j.value("exit", -1) != r.exit_code()) throw InputError("report exit code does not match its entries");
  return r;
}

inline Report parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

// -- building blocks --------------------------------------------------------

inline Json names(const FiniteCategory& c, const ArrowClass& s) { return names_of(c, s); }

inline Json names(const FiniteCategory& c, const std::vector<MorId>& fs) {
  Json out = Json::array();
  for (auto f : fs) out.push_back(c.name(f));
  return out;
}

inline Json object_names(const FiniteCategory& c, const std::vector<ObjId>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(c.name(x));
  return out;
}

inline Json opt_name(const FiniteCategory& c, const std::optional<MorId>& f) { return f ? Json(c.name(*f)) : Json(nullptr); }
inline Json opt_name(const FiniteCategory& c, const std::optional<ObjId>& x) { return x ? Json(c.name(*x)) : Json(nullptr); }

inline Json category_summary(const FiniteCategory& c) {
  Json j;
  j["name"] = c.name();
  j["objects"] = object_names(c, c.objects());
  j["morphisms"] = c.morphism_count();
  j["thin"] = c.is_thin();
  return j;
}

inline Json structure(const PremodelStructure& p) {
  const auto& c = p.category();
  Json j;
  j["name"] = p.name();
  j["category"] = c.name();
  j["cofibrations"] = names(c, p.cofibrations());
  j["anodyne_fibrations"] = names(c, p.anodyne_fibrations());
  j["anodyne_cofibrations"] = names(c, p.anodyne_cofibrations());
  j["fibrations"] = names(c, p.fibrations());
  return j;
}

/// Classes that changed between two structures on the same category.
inline Json diff(const PremodelStructure& before, const PremodelStructure& after) {
  const auto& c = before.category();
  Json j = Json::object();
  auto one = [&](const char* key, const ArrowClass& a, const ArrowClass& b) {
    if (a == b) return;
    j[key] = {{"added", names(c, b - a)}, {"removed", names(c, a - b)}};
  };
  one("cofibrations", before.cofibrations(), after.cofibrations());
  one("anodyne_fibrations", before.anodyne_fibrations(), after.anodyne_fibrations());
  one("anodyne_cofibrations", before.anodyne_cofibrations(), after.anodyne_cofibrations());
  one("fibrations", before.fibrations(), after.fibrations());
  return j;
}

inline Json wfs_verdict(const FiniteCategory& c, const WfsVerdict& v) {
  Json j;
  j["ok"] = v.ok();
  j["lifting"] = v.lifting;
  j["left_is_complement"] = v.left_is_complement;
  j["right_is_complement"] = v.right_is_complement;
  j["factorization"] = v.factorization;
  Json w = Json::object();
  if (v.unliftable) {
    const auto& s = *v.unliftable;
    w["unliftable_square"] = {{"left", c.name(s.f)}, {"right", c.name(s.g)}, {"top", c.name(s.u)}, {"bottom", c.name(s.v)}};
  }
  if (v.left_mismatch) w["left_mismatch"] = c.name(*v.left_mismatch);
  if (v.right_mismatch) w["right_mismatch"] = c.name(*v.right_mismatch);
  if (v.unfactorizable) w["unfactorizable"] = c.name(*v.unfactorizable);
  j["witnesses"] = w;
  return j;
}

inline Json premodel_verdict(const FiniteCategory& c, const PremodelVerdict& v) {
  Json j;
  j["ok"] = v.ok();
  j["cofibration_wfs"] = wfs_verdict(c, v.cofibration_wfs);
  j["fibration_wfs"] = wfs_verdict(c, v.fibration_wfs);
  j["anodyne_are_cofibrations"] = v.anodyne_are_cofibrations;
  j["anodyne_not_cofibration"] = opt_name(c, v.anodyne_not_cofibration);
  j["initial"] = opt_name(c, v.initial);
  j["terminal"] = opt_name(c, v.terminal);
  return j;
}

inline Json weak_model_verdict(const FiniteCategory& c, const WeakModelVerdict& v) {
  Json j;
  j["ok"] = v.ok();
  j["cylinder_axiom"] = v.cylinder_axiom;
  j["path_axiom"] = v.path_axiom;
  j["alt_criterion"] = v.alt_criterion;
  j["dual_alt_criterion"] = v.dual_alt_criterion;
  j["criteria_consistent"] = v.consistent();
  j["cylinder_failure"] = opt_name(c, v.cylinder_failure);
  j["path_failure"] = opt_name(c, v.path_failure);
  j["cancellation_failure"] = opt_name(c, v.cancellation_failure);
  return j;
}

inline Json objects(const PremodelStructure& p) {
  const auto& c = p.category();
  const auto t = object_table(p);
  Json j;
  j["initial"] = c.name(t.initial);
  j["terminal"] = c.name(t.terminal);
  std::vector<ObjId> cof, fib, bi;
  for (auto x : c.objects()) {
    if (t.cofibrant(x)) cof.push_back(x);
    if (t.fibrant(x)) fib.push_back(x);
    if (t.bifibrant(x)) bi.push_back(x);
  }
  j["cofibrant"] = object_names(c, cof);
  j["fibrant"] = object_names(c, fib);
  j["bifibrant"] = object_names(c, bi);
  return j;
}

inline Json saturation(const SaturationFlags& s) {
  return {{"left", s.left}, {"core_left", s.core_left}, {"right", s.right}, {"core_right", s.core_right}, {"bi", s.bi()}};
}

inline Json semi(const FiniteCategory& c, const SemiVerdict& v) {
  return {{"fresse", v.fresse()}, {"spitzweck", v.spitzweck()}, {"strong_objects", v.strong_objects},
          {"core_saturated", v.core_saturated}, {"other_saturated", v.other_saturated}, {"failing_object", opt_name(c, v.failing_object)}};
}

inline Json homotopy(const PremodelStructure& p, const HomotopyCategory& ho) {
  const auto& c = p.category();
  Json j;
  j["objects"] = object_names(c, ho.objects);
  j["relation_is_equivalence"] = ho.relation_is_equivalence;
  j["composition_well_defined"] = ho.composition_well_defined;
  Json homs = Json::array();
  for (std::size_t i = 0; i < ho.size(); ++i)
    for (std::size_t k = 0; k < ho.size(); ++k) {
      const auto& h = ho.hom(i, k);
      if (h.empty()) continue;
      Json cls = Json::array();
      for (const auto& members : h) cls.push_back(names(c, members));
      homs.push_back({{"from", c.name(ho.objects[i])}, {"to", c.name(ho.objects[k])}, {"classes", cls}});
    }
  j["hom"] = homs;
  return j;
}

inline Json classification(const PremodelStructure& p, const ClassificationReport& r) {
  const auto& c = p.category();
  Json j;
  auto flag = [](const auto& opt, auto pred) { return opt ? Json(pred(*opt)) : Json(nullptr); };
  Json ladder;
  ladder["premodel"] = r.is_premodel();
  ladder["weak_model"] = flag(r.weak_model, [](const auto& v) { return v.ok(); });
  ladder["left_semi"] = flag(r.left_semi, [](const auto& v) { return v.fresse(); });
  ladder["left_semi_spitzweck"] = flag(r.left_semi, [](const auto& v) { return v.spitzweck(); });
  ladder["right_semi"] = flag(r.right_semi, [](const auto& v) { return v.fresse(); });
  ladder["right_semi_spitzweck"] = flag(r.right_semi, [](const auto& v) { return v.spitzweck(); });
  ladder["two_sided"] = flag(r.two_sided, [](const auto& v) { return v.ok(); });
  ladder["quillen"] = flag(r.quillen, [](const auto& v) { return v.quillen(); });
  j["ladder"] = ladder;
  if (!r.is_premodel()) {
    j["premodel"] = premodel_verdict(c, r.premodel);
    return j;
  }
  j["objects"] = objects(p);
  j["saturation"] = saturation(*r.saturation);
  j["weak_model"] = weak_model_verdict(c, *r.weak_model);
  if (!r.is_weak_model()) return j;
  j["left_semi"] = semi(c, *r.left_semi);
  j["right_semi"] = semi(c, *r.right_semi);
  j["W"] = names(c, *r.equivalences);
  j["WL"] = r.wl ? names(c, *r.wl) : Json(nullptr);
  j["WR"] = r.wr ? names(c, *r.wr) : Json(nullptr);
  if (r.quillen) {
    const auto& q = *r.quillen;
    j["quillen_conditions"] = {{"same_equivalences", q.same_equivalences},       {"anodyne_in_wl", q.anodyne_in_wl},
                               {"fibrant_approximations", q.fibrant_approximations}, {"replacements_compose", q.replacements_compose},
                               {"functors_isomorphic", q.functors_isomorphic},   {"conditions_agree", q.conditions_agree()}};
    j["witnesses"] = {{"wl_not_wr", names(c, q.wl_not_wr)}, {"wr_not_wl", names(c, q.wr_not_wl)}};
  }
  if (r.wl && r.wr) {
    const LocalizationData data(p);
    Json loc = Json::array();
    for (auto x : c.objects()) loc.push_back({{"object", c.name(x)}, {"left", c.name(data.left_object(x))}, {"right", c.name(data.right_object(x))}});
    j["localization_functors"] = loc;
  }
  return j;
}

// -- human-readable rendering -----------------------------------------------

namespace detail {

inline bool flat_list(const Json& v) {
  if (!v.is_array()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

inline std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  return v.dump();
}

inline void render(std::ostream& os, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) {
      if (e.is_primitive()) {
        os << pad << k << ": " << scalar(e) << "\n";
      } else if (flat_list(e)) {
        os << pad << k << ": {";
        bool first = true;
        for (const auto& x : e) {
          os << (first ? "" : ", ") << scalar(x);
          first = false;
        }
        os << "}\n";
      } else if (e.empty()) {
        os << pad << k << ": {}\n";
      } else {
        os << pad << k << ":\n";
        render(os, e, indent + 1);
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_primitive() || flat_list(e)) {
        os << pad << "- ";
        if (e.is_primitive()) {
          os << scalar(e);
        } else {
          os << "{";
          bool first = true;
          for (const auto& x : e) {
            os << (first ? "" : ", ") << scalar(x);
            first = false;
          }
          os << "}";
        }
        os << "\n";
      } else {
        os << pad << "-\n";
        render(os, e, indent + 1);
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

}  // namespace detail

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "source: " << r.source << "\n";
  for (const auto& e : r.results) {
    os << "\n== " << e.value("directive", "") << " [" << e.value("status", "") << "]\n";
    Json rest = Json::object();
    for (const auto& [k, v] : e.items())
      if (k != "directive" && k != "status") rest[k] = v;
    detail::render(os, rest, 1);
  }
  os << "\nexit: " << r.exit_code() << "\n";
  return os.str();
}

}  // namespace hocat::report
