#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "hocat/frontend/dsl.hpp"
#include "hocat/frontend/report.hpp"
#include "hocat/localize.hpp"

namespace hocat {

using report::Json;

/// Executes `run` directives against a parsed document. Structures produced by
/// a directive become the current result; `as NAME` also binds them by name.
class Session {
 public:
  explicit Session(dsl::Document doc) : doc_(std::move(doc)) {}

  [[nodiscard]] const dsl::Document& document() const { return doc_; }
  [[nodiscard]] const std::optional<PremodelStructure>& result() const { return result_; }

  [[nodiscard]] const PremodelStructure* structure(std::string_view name) const {
    if (name == "result") return result_ ? &*result_ : nullptr;
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (it->name() == name) return &*it;
    if (auto* p = doc_.find_premodel(name)) return &p->structure;
    return nullptr;
  }

  [[nodiscard]] Json document_summary() const {
    Json j;
    j["categories"] = Json::array();
    for (const auto& [name, c] : doc_.categories) j["categories"].push_back(report::category_summary(*c));
    j["premodels"] = Json::array();
    for (const auto& p : doc_.premodels) {
      Json e = report::structure(p.structure);
      e["derived"] = p.derived;
      j["premodels"].push_back(e);
    }
    auto names = [](const auto& v, auto get) {
      Json out = Json::array();
      for (const auto& x : v) out.push_back(get(x));
      return out;
    };
    j["structured"] = names(doc_.structured, [](const StructuredCategory& s) { return s.name; });
    j["functors"] = names(doc_.functors, [](const FunctorData& f) { return f.name; });
    j["adjunctions"] = names(doc_.adjunctions, [](const AdjunctionData& a) { return a.name; });
    j["cylinders"] = names(doc_.cylinders, [](const auto& c) { return c.first; });
    j["directives"] = doc_.directives.size();
    return j;
  }

  /// Runs the given directives in order and stops after the first error.
  report::Report run(const std::vector<dsl::Directive>& ds) {
    report::Report r;
    r.source = doc_.source;
    r.document = document_summary();
    for (const auto& d : ds) {
      r.results.push_back(execute(d));
      if (r.results.back()["status"] == "error") break;
    }
    return r;
  }

  report::Report run_all() { return run(doc_.directives); }

  /// One directive; engine errors become an `error` entry with their exit code.
  Json execute(const dsl::Directive& d) {
    Json e;
    e["directive"] = d.text();
    e["line"] = d.words.empty() ? 0 : d.words.front().pos.line;
    e["status"] = "ok";
    e["exit"] = 0;
    try {
      Cursor cur{d, doc_.source};
      dispatch(cur, e);
    } catch (const NoFactorization& err) {
      error_entry(e, err.what(), err.exit_code());
      e["kind"] = "no_factorization";
    } catch (const ColimitAbsent& err) {
      error_entry(e, err.what(), err.exit_code());
      e["kind"] = "absent_colimit";
    } catch (const NonexistenceError& err) {
      error_entry(e, err.what(), err.exit_code());
      e["kind"] = "nonexistence";
    } catch (const PreconditionError& err) {
      error_entry(e, err.what(), err.exit_code());
      e["kind"] = "precondition";
    } catch (const Error& err) {
      error_entry(e, err.what(), err.exit_code());
      e["kind"] = "input";
    }
    return e;
  }

 private:
  struct Cursor {
    const dsl::Directive& d;
    const std::string& source;
    std::size_t i = 0;

    [[nodiscard]] bool done() const { return i >= d.words.size(); }
    [[nodiscard]] std::size_t remaining() const { return d.words.size() - i; }
    [[nodiscard]] const dsl::Token* peek() const { return done() ? nullptr : &d.words[i]; }
    [[nodiscard]] bool at_word(std::string_view w) const { return !done() && d.words[i].kind == dsl::Tok::ident && d.words[i].text == w; }
    [[noreturn]] void fail(const std::string& msg) const {
      const auto& t = done() ? d.words.back() : d.words[i];
      throw dsl::ParseError(source, t.pos, msg);
    }
    const dsl::Token& take(const char* what) {
      if (done() || d.words[i].kind != dsl::Tok::ident) fail(std::string("expected ") + what + " in directive '" + d.text() + "'");
      return d.words[i++];
    }
    bool accept(std::string_view w) {
      if (!at_word(w)) return false;
      ++i;
      return true;
    }
    void expect(std::string_view w) {
      if (!accept(w)) fail("expected '" + std::string(w) + "' in directive '" + d.text() + "'");
    }
    std::vector<dsl::Token> braced() {
      if (done() || d.words[i].kind != dsl::Tok::lbrace) fail("expected '{' in directive '" + d.text() + "'");
      ++i;
      std::vector<dsl::Token> out;
      while (!done() && d.words[i].kind != dsl::Tok::rbrace) {
        if (d.words[i].kind == dsl::Tok::ident) {
          out.push_back(d.words[i]);
        } else if (d.words[i].kind != dsl::Tok::comma) {
          fail("unexpected '" + d.words[i].text + "' in arrow list");
        }
        ++i;
      }
      if (done()) fail("unterminated arrow list");
      ++i;
      return out;
    }
    void finish() const {
      if (!done()) fail("unexpected '" + d.words[i].text + "' in directive '" + d.text() + "'");
    }
  };

  static void error_entry(Json& e, const std::string& msg, int code) {
    e["status"] = "error";
    e["exit"] = code;
    e["error"] = msg;
  }

  static void failed(Json& e) {
    e["status"] = "failed";
    e["exit"] = 1;
  }

  const PremodelStructure& structure_arg(Cursor& cur, bool optional = true) {
    if (auto* t = cur.peek(); t && t->kind == dsl::Tok::ident) {
      if (auto* p = structure(t->text)) {
        ++cur.i;
        return *p;
      }
      if (!optional) cur.fail("unknown structure '" + t->text + "'");
    }
    if (!result_) cur.fail("no structure given and no earlier result");
    return *result_;
  }

  std::vector<MorId> arrows(const Cursor& cur, const FiniteCategory& c, const std::vector<dsl::Token>& ts) const {
    std::vector<MorId> out;
    for (const auto& t : ts) {
      auto f = c.find_morphism(t.text);
      if (!f) throw dsl::ParseError(cur.source, t.pos, "unknown arrow '" + t.text + "' in category '" + c.name() + "'");
      out.push_back(*f);
    }
    return out;
  }

  SaturationMode mode_arg(Cursor& cur, SaturationMode fallback) {
    if (!cur.accept("mode")) return fallback;
    const auto& t = cur.take("a saturation mode");
    auto m = parse_saturation_mode(t.text);
    if (!m) throw dsl::ParseError(cur.source, t.pos, "unknown saturation mode '" + t.text + "' (use L, Lc, R or Rc)");
    return *m;
  }

  void produce(Cursor& cur, PremodelStructure p, Json& e) {
    if (cur.accept("as")) {
      const auto& t = cur.take("a name");
      p.set_name(t.text);
    }
    cur.finish();
    bound_.push_back(p);
    result_ = p;
    e["result"] = p.name();
  }

  void dispatch(Cursor& cur, Json& e) {
    const auto& verb = cur.take("a directive");
    e["verb"] = verb.text;
    if (verb.text == "validate") return do_validate(cur, e);
    if (verb.text == "check") return do_check(cur, e);
    if (verb.text == "classify") return do_classify(cur, e);
    if (verb.text == "hocat") return do_hocat(cur, e);
    if (verb.text == "equiv") return do_equiv(cur, e);
    if (verb.text == "saturate") return do_saturate(cur, e);
    if (verb.text == "bisaturate") return do_bisaturate(cur, e);
    if (verb.text == "localize") return do_localize(cur, e);
    if (verb.text == "dualize") return do_dualize(cur, e);
    if (verb.text == "olschok") return do_olschok(cur, e);
    if (verb.text == "show") return do_show(cur, e);
    throw dsl::ParseError(cur.source, verb.pos, "unknown directive '" + verb.text + "'");
  }

  void do_validate(Cursor& cur, Json& e) {
    Json cats = Json::array();
    auto one = [&](const FiniteCategory& c) {
      Json j = report::category_summary(c);
      Json v = Json::array();
      for (const auto& x : validate_category(c.data())) v.push_back({{"kind", x.kind}, {"detail", x.detail}});
      j["violations"] = v;
      if (!v.empty()) failed(e);
      cats.push_back(j);
    };
    if (cur.done()) {
      for (const auto& [n, c] : doc_.categories) one(*c);
    } else {
      const auto& t = cur.take("a category name");
      auto c = doc_.find_category(t.text);
      if (!c) throw dsl::ParseError(cur.source, t.pos, "unknown category '" + t.text + "'");
      cur.finish();
      one(*c);
    }
    e["categories"] = cats;
  }

  void do_check(Cursor& cur, Json& e) {
    const auto& what = cur.take("'wfs', 'premodel' or 'weakmodel'");
    const auto& p = structure_arg(cur);
    cur.finish();
    const auto& c = p.category();
    e["structure"] = p.name();
    if (what.text == "wfs") {
      auto a = verify_wfs(c, p.cofibration_wfs());
      auto b = verify_wfs(c, p.fibration_wfs());
      e["cofibration_wfs"] = report::wfs_verdict(c, a);
      e["fibration_wfs"] = report::wfs_verdict(c, b);
      e["ok"] = a.ok() && b.ok();
    } else if (what.text == "premodel") {
      auto v = verify_premodel(p);
      e["premodel"] = report::premodel_verdict(c, v);
      e["ok"] = v.ok();
    } else if (what.text == "weakmodel") {
      auto v = verify_premodel(p);
      if (!v.ok()) {
        e["premodel"] = report::premodel_verdict(c, v);
        e["ok"] = false;
      } else {
        auto w = verify_weak_model(p);
        e["weak_model"] = report::weak_model_verdict(c, w);
        e["ok"] = w.ok();
      }
    } else {
      throw dsl::ParseError(cur.source, what.pos, "unknown check '" + what.text + "' (use wfs, premodel or weakmodel)");
    }
    if (!e["ok"].get<bool>()) failed(e);
  }

  void do_classify(Cursor& cur, Json& e) {
    const auto& p = structure_arg(cur);
    cur.finish();
    e["structure"] = p.name();
    const auto r = classify_full(p);
    e["classification"] = report::classification(p, r);
    if (!r.is_quillen()) failed(e);
  }

  void do_show(Cursor& cur, Json& e) {
    const auto& p = structure_arg(cur);
    cur.finish();
    e["structure"] = report::structure(p);
  }

  void do_hocat(Cursor& cur, Json& e) {
    const auto& p = structure_arg(cur);
    cur.finish();
    e["structure"] = p.name();
    auto ho = homotopy_category(p);
    e["homotopy_category"] = report::homotopy(p, ho);
    if (!ho.relation_is_equivalence || !ho.composition_well_defined) failed(e);
  }

  void do_equiv(Cursor& cur, Json& e) {
    const PremodelStructure& p = cur.remaining() >= 2 ? structure_arg(cur, false) : structure_arg(cur);
    const auto& t = cur.take("an arrow");
    cur.finish();
    const auto& c = p.category();
    auto f = c.find_morphism(t.text);
    if (!f) throw dsl::ParseError(cur.source, t.pos, "unknown arrow '" + t.text + "' in category '" + c.name() + "'");
    auto v = is_equivalence(p, *f);
    auto repl = [&](const std::optional<Replacement>& r) { return r ? Json{{"object", c.name(r->object)}, {"map", c.name(r->map)}} : Json(nullptr); };
    e["structure"] = p.name();
    e["arrow"] = t.text;
    e["equivalence"] = v.equivalence;
    e["replaced"] = v.source_replacement.has_value() || v.target_replacement.has_value();
    e["source_replacement"] = repl(v.source_replacement);
    e["target_replacement"] = repl(v.target_replacement);
    e["reduced"] = c.name(v.reduced);
    e["cofibration"] = c.name(v.cofibration);
    e["anodyne_fibration"] = c.name(v.anodyne_fibration);
    if (!v.equivalence) failed(e);
  }

  void do_saturate(Cursor& cur, Json& e) {
    const auto& p = structure_arg(cur);
    const auto mode = mode_arg(cur, SaturationMode::Lc);
    auto q = saturate(p, mode);
    e["input"] = p.name();
    e["mode"] = to_string(mode);
    e["diff"] = report::diff(p, q);
    const auto f = saturation_flags(q);
    e["saturation"] = report::saturation(f);
    const bool flag = mode == SaturationMode::L ? f.left : mode == SaturationMode::Lc ? f.core_left : mode == SaturationMode::R ? f.right : f.core_right;
    e["flag_set"] = flag;
    e["structure"] = report::structure(q);
    if (!flag) failed(e);
    produce(cur, std::move(q), e);
    e["structure"]["name"] = result_->name();
  }

  void do_bisaturate(Cursor& cur, Json& e) {
    const auto& p = structure_arg(cur);
    auto both = bi_saturate_both(p);
    e["input"] = p.name();
    e["diff"] = report::diff(p, both.right_of_left);
    e["orders_agree"] = both.orders_agree();
    if (!both.orders_agree()) e["left_of_right_diff"] = report::diff(both.right_of_left, both.left_of_right);
    const auto f = saturation_flags(both.right_of_left);
    e["saturation"] = report::saturation(f);
    if (!f.bi()) failed(e);
    produce(cur, both.right_of_left, e);
    e["structure"] = report::structure(*result_);
  }

  void localization_entry(Json& e, const PremodelStructure& p, const LocalizationResult& r) {
    const auto& c = p.category();
    e["input"] = p.name();
    e["representatives"] = report::names(c, r.representatives);
    e["generators"] = report::names(c, r.generators);
    e["diff"] = report::diff(p, r.structure);
    e["objects"] = report::objects(r.structure);
    e["postconditions"] = {{"same_fixed_class", r.same_fixed_class},
                           {"core_agrees", r.core_agrees},
                           {"localizer_inverted", r.localizer_inverted},
                           {"weak_model", r.weak_model}};
    if (!r.postconditions()) failed(e);
  }

  void do_localize(Cursor& cur, Json& e) {
    const auto& side = cur.take("'left' or 'right'");
    if (side.text == "left") {
      const auto& p = structure_arg(cur);
      if (cur.accept("at")) {
        auto s = arrows(cur, p.category(), cur.braced());
        const auto mode = mode_arg(cur, SaturationMode::Lc);
        auto r = left_bousfield(p, s, mode);
        e["side"] = "left";
        e["mode"] = to_string(mode);
        localization_entry(e, p, r);
        produce(cur, r.structure, e);
      } else {
        cur.expect("via");
        auto [adj, target] = adjunction_args(cur);
        const auto mode = mode_arg(cur, SaturationMode::Lc);
        auto r = left_bousfield_at_functor(p, *adj, *target, mode);
        e["side"] = "left";
        e["mode"] = to_string(mode);
        localization_entry(e, p, r);
        produce(cur, r.structure, e);
      }
    } else if (side.text == "right") {
      const auto& p = structure_arg(cur);
      cur.expect("via");
      auto [adj, target] = adjunction_args(cur);
      const auto mode = mode_arg(cur, SaturationMode::Rc);
      auto r = right_bousfield(p, *adj, *target, mode);
      e["side"] = "right";
      e["mode"] = to_string(mode);
      localization_entry(e, p, r);
      produce(cur, r.structure, e);
    } else {
      throw dsl::ParseError(cur.source, side.pos, "expected 'left' or 'right', found '" + side.text + "'");
    }
    e["structure"] = report::structure(*result_);
  }

  std::pair<const AdjunctionData*, const PremodelStructure*> adjunction_args(Cursor& cur) {
    const auto& a = cur.take("an adjunction");
    const auto* adj = doc_.find_adjunction(a.text);
    if (!adj) throw dsl::ParseError(cur.source, a.pos, "unknown adjunction '" + a.text + "'");
    cur.expect("target");
    const auto& t = cur.take("a structure");
    const auto* target = structure(t.text);
    if (!target) throw dsl::ParseError(cur.source, t.pos, "unknown structure '" + t.text + "'");
    return {adj, target};
  }

  void do_dualize(Cursor& cur, Json& e) {
    const auto& p = structure_arg(cur);
    auto q = dualize(p);
    e["input"] = p.name();
    produce(cur, std::move(q), e);
    e["structure"] = report::structure(*result_);
  }

  void do_olschok(Cursor& cur, Json& e) {
    const auto& st = cur.take("a structured category");
    const auto* s = doc_.find_structured(st.text);
    if (!s) throw dsl::ParseError(cur.source, st.pos, "unknown structured category '" + st.text + "'");
    cur.expect("cylinder");
    const auto& ct = cur.take("a cylinder");
    const auto* q = doc_.find_cylinder(ct.text);
    if (!q) throw dsl::ParseError(cur.source, ct.pos, "unknown cylinder '" + ct.text + "'");
    if (!same_category(q->category, s->cat)) throw dsl::ParseError(cur.source, ct.pos, "cylinder '" + ct.text + "' lives on another category");
    const auto& c = *s->cat;
    std::vector<MorId> seeds;
    std::vector<MorId> gens = s->cofibrations.members();
    if (cur.accept("seeds")) seeds = arrows(cur, c, cur.braced());
    if (cur.accept("generators")) gens = arrows(cur, c, cur.braced());
    auto r = olschok_model(*s, q->cylinder, seeds, gens);
    e["structured"] = s->name;
    e["cylinder"] = ct.text;
    e["lambda"] = report::names(c, r.lambda);
    e["all_cofibrant"] = r.all_cofibrant;
    e["pre_quillen_cylinder"] = r.pre_quillen_cylinder;
    e["expected"] = r.all_cofibrant ? "quillen" : "two_sided";
    e["expectation_holds"] = r.expectation_holds;
    e["generated"] = report::structure(r.generated);
    e["classification"] = report::classification(r.saturated, r.report);
    if (!r.expectation_holds) failed(e);
    produce(cur, r.saturated, e);
    e["structure"] = report::structure(*result_);
  }

  dsl::Document doc_;
  std::deque<PremodelStructure> bound_;
  std::optional<PremodelStructure> result_;
};

/// Directives from free text, separated by `;`.
inline std::vector<dsl::Directive> parse_directives(std::string_view text, const std::string& source = "<directives>") {
  std::vector<dsl::Directive> out;
  dsl::Directive cur;
  for (auto& t : dsl::tokenize(text, source)) {
    if (t.kind == dsl::Tok::semi || t.kind == dsl::Tok::end) {
      if (!cur.words.empty()) out.push_back(std::move(cur));
      cur = {};
    } else {
      cur.words.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace hocat
