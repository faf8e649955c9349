#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hocat/frontend/runner.hpp"

namespace {

struct Options {
  std::string file;
  std::string structure;
  bool json = false;
};

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

// Picks --structure, or the only premodel of the document.
std::string pick_structure(const hocat::dsl::Document& doc, const std::string& given) {
  if (!given.empty()) return given;
  if (doc.premodels.size() == 1) return doc.premodels.front().structure.name();
  std::vector<std::string> names;
  for (const auto& p : doc.premodels) names.push_back(p.structure.name());
  if (names.empty()) throw hocat::InputError("the document declares no premodel structure");
  throw hocat::InputError("several structures (" + join(names) + "); choose one with --structure");
}

int emit(const hocat::report::Report& r, bool json) {
  std::cout << (json ? hocat::report::serialize(r) : hocat::report::render_text(r));
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite premodel categories: verification, saturation, localization and classification"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print the machine-readable report");

  // Each subcommand turns into one directive text, run against the parsed file.
  std::function<std::string(const hocat::dsl::Document&)> directive;
  bool run_blocks = false;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "DSL file")->required()->check(CLI::ExistingFile); };
  auto with_structure = [&](CLI::App* sub) { sub->add_option("-s,--structure", opt.structure, "Premodel structure to use"); };

  auto* validate = app.add_subcommand("validate", "Parse the file and check every category");
  with_file(validate);
  std::string category;
  validate->add_option("category", category, "Only this category");
  validate->callback([&] { directive = [&](const auto&) { return "validate " + category; }; });

  auto* check = app.add_subcommand("check", "Verify axioms of a structure");
  std::string what;
  check->add_option("what", what, "wfs, premodel or weakmodel")->required()->check(CLI::IsMember({"wfs", "premodel", "weakmodel"}));
  with_file(check);
  with_structure(check);
  check->callback([&] { directive = [&](const auto& d) { return "check " + what + " " + pick_structure(d, opt.structure); }; });

  auto* sat = app.add_subcommand("saturate", "Saturate a structure");
  std::string mode = "Lc";
  with_file(sat);
  with_structure(sat);
  sat->add_option("-m,--mode", mode, "L, Lc, R or Rc")->check(CLI::IsMember({"L", "Lc", "R", "Rc"}));
  sat->callback([&] { directive = [&](const auto& d) { return "saturate " + pick_structure(d, opt.structure) + " mode " + mode; }; });

  auto* bisat = app.add_subcommand("bisaturate", "Apply left then right saturation");
  with_file(bisat);
  with_structure(bisat);
  bisat->callback([&] { directive = [&](const auto& d) { return "bisaturate " + pick_structure(d, opt.structure); }; });

  auto* loc = app.add_subcommand("localize", "Left or right Bousfield localization");
  std::string side;
  std::vector<std::string> at;
  std::string via, target;
  std::string loc_mode;
  loc->add_option("side", side, "left or right")->required()->check(CLI::IsMember({"left", "right"}));
  with_file(loc);
  with_structure(loc);
  loc->add_option("--at", at, "Arrows to invert (left localization)")->delimiter(',');
  loc->add_option("--via", via, "Adjunction whose right (or left) functor defines the localizer");
  loc->add_option("--target", target, "Weak model structure on the other side of the adjunction");
  loc->add_option("-m,--mode", loc_mode, "Saturation mode")->check(CLI::IsMember({"L", "Lc", "R", "Rc"}));
  loc->callback([&] {
    directive = [&](const auto& d) {
      std::string s = "localize " + side + " " + pick_structure(d, opt.structure);
      if (!at.empty()) {
        if (side != "left") throw hocat::InputError("--at applies to left localization only");
        s += " at {" + join(at) + "}";
      } else {
        if (via.empty() || target.empty()) throw hocat::InputError("give --at, or --via and --target");
        s += " via " + via + " target " + target;
      }
      if (!loc_mode.empty()) s += " mode " + loc_mode;
      return s;
    };
  });

  auto* ho = app.add_subcommand("hocat", "Homotopy category on the bifibrant objects");
  with_file(ho);
  with_structure(ho);
  ho->callback([&] { directive = [&](const auto& d) { return "hocat " + pick_structure(d, opt.structure); }; });

  auto* eq = app.add_subcommand("equiv", "Decide whether an arrow is an equivalence");
  std::string arrow;
  eq->add_option("arrow", arrow, "Arrow name")->required();
  with_file(eq);
  with_structure(eq);
  eq->callback([&] { directive = [&](const auto& d) { return "equiv " + pick_structure(d, opt.structure) + " " + arrow; }; });

  auto* cls = app.add_subcommand("classify", "Full classification ladder");
  with_file(cls);
  with_structure(cls);
  cls->callback([&] { directive = [&](const auto& d) { return "classify " + pick_structure(d, opt.structure); }; });

  auto* dual = app.add_subcommand("dualize", "Opposite structure");
  with_file(dual);
  with_structure(dual);
  dual->callback([&] { directive = [&](const auto& d) { return "dualize " + pick_structure(d, opt.structure); }; });

  auto* ol = app.add_subcommand("olschok", "Generate a structure from a Quillen cylinder");
  std::string structured, cylinder;
  std::vector<std::string> seeds, gens;
  with_file(ol);
  ol->add_option("--structured", structured, "Structured category")->required();
  ol->add_option("--cylinder", cylinder, "Quillen cylinder")->required();
  ol->add_option("--seeds", seeds, "Extra anodyne generators")->delimiter(',');
  ol->add_option("--generators", gens, "Generating cofibrations (default: all cofibrations)")->delimiter(',');
  ol->callback([&] {
    directive = [&](const auto&) {
      std::string s = "olschok " + structured + " cylinder " + cylinder;
      if (!seeds.empty()) s += " seeds {" + join(seeds) + "}";
      if (!gens.empty()) s += " generators {" + join(gens) + "}";
      return s;
    };
  });

  auto* run = app.add_subcommand("run", "Execute the run blocks of the file");
  with_file(run);
  run->callback([&] { run_blocks = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto doc = hocat::dsl::parse_file(opt.file);
    hocat::Session session(doc);
    if (run_blocks) return emit(session.run_all(), opt.json);
    return emit(session.run(hocat::parse_directives(directive(doc), "<command line>")), opt.json);
  } catch (const hocat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}
