#pragma once

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hocat/builders.hpp"
#include "hocat/olschok.hpp"

namespace hocat::dsl {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& source, Position pos, const std::string& msg)
      : InputError(source + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg), pos_(pos), message_(msg) {}
  [[nodiscard]] Position position() const { return pos_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  Position pos_;
  std::string message_;
};

enum class Tok { ident, lbrace, rbrace, semi, colon, comma, arrow, leq, dot, eq, end };

struct Token {
  Tok kind;
  std::string text;
  Position pos;
};

inline bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' || ch == '*' || ch == '^' || ch == '+'; }

/// `#` and `//` start comments that run to the end of the line.
inline std::vector<Token> tokenize(std::string_view text, const std::string& source) {
  std::vector<Token> out;
  Position pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#' || (ch == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const Position start = pos;
    auto single = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(text.substr(i, len)), start});
      advance(len);
    };
    switch (ch) {
      case '{': single(Tok::lbrace, 1); continue;
      case '}': single(Tok::rbrace, 1); continue;
      case ';': single(Tok::semi, 1); continue;
      case ':': single(Tok::colon, 1); continue;
      case ',': single(Tok::comma, 1); continue;
      case '.': single(Tok::dot, 1); continue;
      case '=': single(Tok::eq, 1); continue;
      default: break;
    }
    if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      single(Tok::arrow, 2);
      continue;
    }
    if (ch == '<' && i + 1 < text.size() && text[i + 1] == '=') {
      single(Tok::leq, 2);
      continue;
    }
    if (ident_char(ch)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      single(Tok::ident, j - i);
      continue;
    }
    throw ParseError(source, start, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Tok::end, "", pos});
  return out;
}

/// `all`, `none`, `ids`, `isos`, `{...}`, `all_except {...}`, `generated {...}`.
struct ClassExpr {
  enum class Kind { all, none, ids, isos, set, all_except, generated };
  Kind kind = Kind::set;
  std::vector<Token> items;
  Position pos;
};

struct PremodelDecl {
  PremodelStructure structure;
  std::vector<std::string> derived;  // classes obtained by complement
};

struct CylinderDecl {
  QuillenCylinder cylinder;
  CategoryPtr category;
};

/// A `run` statement: its words and their positions.
struct Directive {
  std::vector<Token> words;
  [[nodiscard]] std::string text() const {
    std::string s;
    for (const auto& w : words) {
      if (!s.empty() && w.kind != Tok::comma && w.kind != Tok::rbrace && (s.back() != '{')) s += ' ';
      s += w.text;
    }
    return s;
  }
};

struct Document {
  std::string source;
  std::vector<std::pair<std::string, CategoryPtr>> categories;
  std::vector<PremodelDecl> premodels;
  std::vector<StructuredCategory> structured;
  std::vector<FunctorData> functors;
  std::vector<AdjunctionData> adjunctions;
  std::vector<std::pair<std::string, CylinderDecl>> cylinders;
  std::vector<Directive> directives;

  [[nodiscard]] CategoryPtr find_category(std::string_view n) const {
    for (const auto& [k, v] : categories)
      if (k == n) return v;
    return nullptr;
  }
  [[nodiscard]] const PremodelDecl* find_premodel(std::string_view n) const {
    for (const auto& p : premodels)
      if (p.structure.name() == n) return &p;
    return nullptr;
  }
  [[nodiscard]] const StructuredCategory* find_structured(std::string_view n) const {
    for (const auto& s : structured)
      if (s.name == n) return &s;
    return nullptr;
  }
  [[nodiscard]] const FunctorData* find_functor(std::string_view n) const {
    for (const auto& f : functors)
      if (f.name == n) return &f;
    return nullptr;
  }
  [[nodiscard]] const AdjunctionData* find_adjunction(std::string_view n) const {
    for (const auto& a : adjunctions)
      if (a.name == n) return &a;
    return nullptr;
  }
  [[nodiscard]] const CylinderDecl* find_cylinder(std::string_view n) const {
    for (const auto& [k, v] : cylinders)
      if (k == n) return &v;
    return nullptr;
  }
};

/// Evaluates a class expression on a category; `generated` closes on the given side.
inline ArrowClass evaluate_class(const FiniteCategory& c, const ClassExpr& e, bool left_side, const std::string& source) {
  ArrowClass items(c.morphism_count());
  for (const auto& t : e.items) {
    if (t.text == "ids") {
      items = items | ArrowClass::identities(c);
    } else if (t.text == "isos") {
      items = items | ArrowClass::isomorphisms(c);
    } else if (auto f = c.find_morphism(t.text)) {
      items.insert(*f);
    } else {
      throw ParseError(source, t.pos, "unknown arrow '" + t.text + "' in category '" + c.name() + "'");
    }
  }
  switch (e.kind) {
    case ClassExpr::Kind::all: return ArrowClass::all(c);
    case ClassExpr::Kind::none: return ArrowClass::none(c);
    case ClassExpr::Kind::ids: return ArrowClass::identities(c);
    case ClassExpr::Kind::isos: return ArrowClass::isomorphisms(c);
    case ClassExpr::Kind::set: return items;
    case ClassExpr::Kind::all_except: return ArrowClass::all(c) - items;
    case ClassExpr::Kind::generated:
      return left_side ? complement_llp(c, complement_rlp(c, items)) : complement_rlp(c, complement_llp(c, items));
  }
  return items;
}

class Parser {
 public:
  Parser(std::string_view text, std::string source) : source_(std::move(source)), toks_(tokenize(text, source_)) {}

  Document parse() {
    Document doc;
    doc.source = source_;
    while (peek().kind != Tok::end) {
      const auto& kw = expect_ident("a declaration");
      if (kw.text == "category") {
        parse_category(doc);
      } else if (kw.text == "poset") {
        parse_poset(doc);
      } else if (kw.text == "premodel") {
        parse_premodel(doc);
      } else if (kw.text == "structured") {
        parse_structured(doc);
      } else if (kw.text == "functor") {
        parse_functor(doc);
      } else if (kw.text == "adjunction") {
        parse_adjunction(doc);
      } else if (kw.text == "cylinder") {
        parse_cylinder(doc);
      } else if (kw.text == "run") {
        parse_run(doc);
      } else {
        fail(kw, "unknown declaration '" + kw.text + "'");
      }
    }
    return doc;
  }

 private:
  // -- token helpers --------------------------------------------------------
  [[nodiscard]] const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  bool accept_word(std::string_view w) {
    if (peek().kind != Tok::ident || peek().text != w) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(source_, t.pos, msg); }
  static std::string describe(const Token& t) { return t.kind == Tok::end ? "end of input" : "'" + t.text + "'"; }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }
  const Token& expect_ident(const char* what) { return expect(Tok::ident, what); }
  void expect_word(std::string_view w) {
    if (peek().kind != Tok::ident || peek().text != w) fail(peek(), "expected '" + std::string(w) + "', found " + describe(peek()));
    next();
  }
  std::vector<Token> ident_list(Tok terminator) {
    std::vector<Token> out;
    if (peek().kind == terminator) return out;
    out.push_back(expect_ident("a name"));
    while (accept(Tok::comma)) out.push_back(expect_ident("a name"));
    return out;
  }

  CategoryPtr category_ref(const Document& doc, const Token& t) const {
    if (auto c = doc.find_category(t.text)) return c;
    fail(t, "unknown category '" + t.text + "'");
  }
  void check_fresh(const Document& doc, const Token& t) const {
    if (doc.find_category(t.text) || doc.find_premodel(t.text) || doc.find_structured(t.text) || doc.find_functor(t.text) || doc.find_adjunction(t.text) ||
        doc.find_cylinder(t.text))
      fail(t, "name '" + t.text + "' is already declared");
  }
  ObjId object_ref(const FiniteCategory& c, const Token& t) const {
    if (auto x = c.find_object(t.text)) return *x;
    fail(t, "unknown object '" + t.text + "' in category '" + c.name() + "'");
  }
  MorId arrow_ref(const FiniteCategory& c, const Token& t) const {
    if (auto f = c.find_morphism(t.text)) return *f;
    fail(t, "unknown arrow '" + t.text + "' in category '" + c.name() + "'");
  }

  void add_category(Document& doc, const Token& name, CategoryData data) {
    try {
      doc.categories.emplace_back(name.text, make_category(std::move(data)));
    } catch (const InvalidCategory& e) {
      fail(name, e.what());
    }
  }

  // -- categories -----------------------------------------------------------
  void parse_category(Document& doc) {
    const auto& name = expect_ident("a category name");
    check_fresh(doc, name);
    const bool thin = accept_word("thin");
    expect(Tok::lbrace, "'{'");
    CategoryBuilder b(name.text, thin);
    while (!accept(Tok::rbrace)) {
      const auto& sec = expect_ident("'objects', 'arrows' or 'relations'");
      expect(Tok::colon, "':'");
      if (sec.text == "objects") {
        for (const auto& o : ident_list(Tok::semi)) {
          if (b.find_object(o.text)) fail(o, "object '" + o.text + "' declared twice");
          b.add_object(o.text);
        }
      } else if (sec.text == "arrows") {
        if (peek().kind != Tok::semi) {
          do {
            const auto& an = expect_ident("an arrow name");
            expect(Tok::colon, "':'");
            const auto& s = expect_ident("a source object");
            expect(Tok::arrow, "'->'");
            const auto& t = expect_ident("a target object");
            auto so = b.find_object(s.text);
            if (!so) fail(s, "unknown object '" + s.text + "'");
            auto to = b.find_object(t.text);
            if (!to) fail(t, "unknown object '" + t.text + "'");
            if (b.has_arrow(an.text)) fail(an, "arrow name '" + an.text + "' is taken");
            b.add_arrow(an.text, *so, *to);
          } while (accept(Tok::comma));
        }
      } else if (sec.text == "relations") {
        if (peek().kind != Tok::semi) {
          do {
            const auto& g = expect_ident("an arrow");
            expect(Tok::dot, "'.'");
            const auto& f = expect_ident("an arrow");
            expect(Tok::eq, "'='");
            const auto& h = expect_ident("an arrow");
            for (const auto* t : {&g, &f, &h})
              if (!b.has_arrow(t->text)) fail(*t, "unknown arrow '" + t->text + "'");
            b.add_relation(g.text, f.text, h.text);
          } while (accept(Tok::comma));
        }
      } else {
        fail(sec, "unknown section '" + sec.text + "' in category");
      }
      expect(Tok::semi, "';'");
    }
    CategoryData data;
    try {
      data = b.build();
    } catch (const InputError& e) {
      fail(name, e.what());
    }
    add_category(doc, name, std::move(data));
  }

  void parse_poset(Document& doc) {
    const auto& name = expect_ident("a poset name");
    check_fresh(doc, name);
    expect(Tok::lbrace, "'{'");
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> leq;
    auto note = [&](const std::string& e) {
      if (std::find(elements.begin(), elements.end(), e) == elements.end()) elements.push_back(e);
    };
    std::vector<std::string> declared;
    while (!accept(Tok::rbrace)) {
      const auto& first = expect_ident("a poset element");
      auto prev = first.text;
      note(prev);
      if (peek().kind != Tok::leq) {
        if (std::find(declared.begin(), declared.end(), prev) != declared.end()) fail(first, "duplicate poset element '" + prev + "'");
        declared.push_back(prev);
      }
      while (accept(Tok::leq)) {
        auto cur = expect_ident("a poset element").text;
        note(cur);
        leq.emplace_back(prev, cur);
        prev = cur;
      }
      if (peek().kind != Tok::rbrace) expect(Tok::semi, "';' or '<='");
    }
    CategoryData data;
    try {
      data = poset_category(name.text, elements, leq);
    } catch (const InputError& e) {
      fail(name, e.what());
    }
    add_category(doc, name, std::move(data));
  }

  // -- classes and structures -----------------------------------------------
  ClassExpr parse_class() {
    ClassExpr e;
    e.pos = peek().pos;
    auto braced = [&] {
      expect(Tok::lbrace, "'{'");
      e.items = ident_list(Tok::rbrace);
      expect(Tok::rbrace, "'}'");
    };
    if (peek().kind == Tok::lbrace) {
      e.kind = ClassExpr::Kind::set;
      braced();
      return e;
    }
    const auto& w = expect_ident("an arrow class");
    if (w.text == "all") {
      e.kind = ClassExpr::Kind::all;
    } else if (w.text == "none") {
      e.kind = ClassExpr::Kind::none;
    } else if (w.text == "ids") {
      e.kind = ClassExpr::Kind::ids;
    } else if (w.text == "isos") {
      e.kind = ClassExpr::Kind::isos;
    } else if (w.text == "all_except") {
      e.kind = ClassExpr::Kind::all_except;
      braced();
    } else if (w.text == "generated") {
      e.kind = ClassExpr::Kind::generated;
      braced();
    } else {
      fail(w, "expected an arrow class, found '" + w.text + "'");
    }
    return e;
  }

  std::map<std::string, std::pair<ClassExpr, Token>> parse_class_sections(const std::vector<std::string>& allowed) {
    std::map<std::string, std::pair<ClassExpr, Token>> out;
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      const auto& sec = expect_ident("a class name");
      if (std::find(allowed.begin(), allowed.end(), sec.text) == allowed.end()) fail(sec, "unknown section '" + sec.text + "'");
      if (out.count(sec.text)) fail(sec, "section '" + sec.text + "' given twice");
      expect(Tok::colon, "':'");
      out.emplace(sec.text, std::pair{parse_class(), sec});
      expect(Tok::semi, "';'");
    }
    return out;
  }

  // Resolves one weak factorization system, deriving a missing side by complement.
  std::pair<ArrowClass, ArrowClass> resolve_pair(const FiniteCategory& c, const std::map<std::string, std::pair<ClassExpr, Token>>& secs, const std::string& l,
                                                 const std::string& r, const Token& where, std::vector<std::string>& derived) const {
    auto li = secs.find(l);
    auto ri = secs.find(r);
    if (li == secs.end() && ri == secs.end()) fail(where, "give '" + l + "' or '" + r + "'");
    if (li != secs.end() && ri != secs.end()) return {evaluate_class(c, li->second.first, true, source_), evaluate_class(c, ri->second.first, false, source_)};
    if (li != secs.end()) {
      auto left = evaluate_class(c, li->second.first, true, source_);
      derived.push_back(r);
      return {left, complement_rlp(c, left)};
    }
    auto right = evaluate_class(c, ri->second.first, false, source_);
    derived.push_back(l);
    return {complement_llp(c, right), right};
  }

  void parse_premodel(Document& doc) {
    const auto& name = expect_ident("a structure name");
    check_fresh(doc, name);
    expect_word("on");
    auto cat = category_ref(doc, expect_ident("a category name"));
    auto secs = parse_class_sections({"cofibrations", "anodyne_fibrations", "anodyne_cofibrations", "fibrations"});
    std::vector<std::string> derived;
    auto [cof, afib] = resolve_pair(*cat, secs, "cofibrations", "anodyne_fibrations", name, derived);
    auto [acof, fib] = resolve_pair(*cat, secs, "anodyne_cofibrations", "fibrations", name, derived);
    doc.premodels.push_back({PremodelStructure(cat, cof, afib, acof, fib, name.text), derived});
  }

  void parse_structured(Document& doc) {
    const auto& name = expect_ident("a structure name");
    check_fresh(doc, name);
    expect_word("on");
    auto cat = category_ref(doc, expect_ident("a category name"));
    auto secs = parse_class_sections({"cofibrations", "anodyne_fibrations"});
    std::vector<std::string> derived;
    auto [cof, afib] = resolve_pair(*cat, secs, "cofibrations", "anodyne_fibrations", name, derived);
    doc.structured.push_back({name.text, cat, cof, afib});
  }

  // -- functors, adjunctions, cylinders -------------------------------------
  void parse_functor(Document& doc) {
    const auto& name = expect_ident("a functor name");
    check_fresh(doc, name);
    if (accept(Tok::eq)) {
      const auto& kind = expect_ident("'identity' or 'constant'");
      if (kind.text == "identity") {
        expect_word("on");
        auto c = category_ref(doc, expect_ident("a category name"));
        auto f = identity_functor(c);
        f.name = name.text;
        doc.functors.push_back(f);
      } else if (kind.text == "constant") {
        const auto& value = expect_ident("an object");
        expect(Tok::colon, "':'");
        auto src = category_ref(doc, expect_ident("a category name"));
        expect(Tok::arrow, "'->'");
        auto tgt = category_ref(doc, expect_ident("a category name"));
        auto f = constant_functor(src, tgt, object_ref(*tgt, value));
        f.name = name.text;
        doc.functors.push_back(f);
      } else {
        fail(kind, "expected 'identity' or 'constant', found '" + kind.text + "'");
      }
      expect(Tok::semi, "';'");
      return;
    }
    expect(Tok::colon, "':'");
    auto src = category_ref(doc, expect_ident("a category name"));
    expect(Tok::arrow, "'->'");
    auto tgt = category_ref(doc, expect_ident("a category name"));
    FunctorData f{name.text, src, tgt, std::vector<ObjId>(src->object_count()), std::vector<MorId>(src->morphism_count())};
    std::vector<bool> seen_obj(src->object_count()), seen_mor(src->morphism_count());
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      const auto& sec = expect_ident("'objects' or 'arrows'");
      expect(Tok::colon, "':'");
      if (sec.text != "objects" && sec.text != "arrows") fail(sec, "unknown section '" + sec.text + "' in functor");
      if (peek().kind != Tok::semi) {
        do {
          const auto& a = expect_ident("a name");
          expect(Tok::arrow, "'->'");
          const auto& b = expect_ident("a name");
          if (sec.text == "objects") {
            auto x = object_ref(*src, a);
            f.on_objects[x.index()] = object_ref(*tgt, b);
            seen_obj[x.index()] = true;
          } else {
            auto g = arrow_ref(*src, a);
            f.on_morphisms[g.index()] = arrow_ref(*tgt, b);
            seen_mor[g.index()] = true;
          }
        } while (accept(Tok::comma));
      }
      expect(Tok::semi, "';'");
    }
    for (auto x : src->objects())
      if (!seen_obj[x.index()]) fail(name, "functor '" + name.text + "' does not map object '" + src->name(x) + "'");
    for (auto g : src->morphisms()) {
      if (seen_mor[g.index()]) continue;
      // Identities and (in thin targets) every arrow follow from the object map.
      const auto s = f.on_objects[src->source(g).index()], t = f.on_objects[src->target(g).index()];
      if (src->is_identity(g)) {
        f.on_morphisms[g.index()] = tgt->identity(s);
      } else if (tgt->is_thin() && !tgt->hom(s, t).empty()) {
        f.on_morphisms[g.index()] = tgt->hom(s, t).front();
      } else {
        fail(name, "functor '" + name.text + "' does not map arrow '" + src->name(g) + "'");
      }
    }
    if (auto v = check_functor(f); !v.empty()) fail(name, "functor '" + name.text + "' is invalid: " + v.front().detail);
    doc.functors.push_back(f);
  }

  const FunctorData& functor_ref(const Document& doc, const Token& t) const {
    if (auto f = doc.find_functor(t.text)) return *f;
    fail(t, "unknown functor '" + t.text + "'");
  }

  void parse_adjunction(Document& doc) {
    const auto& name = expect_ident("an adjunction name");
    check_fresh(doc, name);
    expect(Tok::lbrace, "'{'");
    std::optional<FunctorData> left, right;
    std::map<std::string, std::size_t> marks;
    std::map<std::string, std::vector<Token>> comps;
    while (!accept(Tok::rbrace)) {
      const auto& sec = expect_ident("'left', 'right', 'unit' or 'counit'");
      expect(Tok::colon, "':'");
      if (sec.text == "left") {
        left = functor_ref(doc, expect_ident("a functor"));
      } else if (sec.text == "right") {
        right = functor_ref(doc, expect_ident("a functor"));
      } else if (sec.text == "unit" || sec.text == "counit") {
        std::vector<Token> raw;
        while (peek().kind != Tok::semi && peek().kind != Tok::end) raw.push_back(next());
        comps[sec.text] = raw;
      } else {
        fail(sec, "unknown section '" + sec.text + "' in adjunction");
      }
      expect(Tok::semi, "';'");
    }
    if (!left || !right) fail(name, "adjunction '" + name.text + "' needs both 'left' and 'right'");
    if (!same_category(left->source, right->target) || !same_category(left->target, right->source))
      fail(name, "functors of adjunction '" + name.text + "' do not go back and forth");
    AdjunctionData a{name.text, *left, *right, {}, {}};
    const auto& D = *left->source;
    const auto& C = *left->target;
    a.unit = components_from(comps["unit"], D, D, [&](ObjId x) { return std::pair{x, a.right(a.left(x))}; }, name, "unit");
    a.counit = components_from(comps["counit"], C, C, [&](ObjId y) { return std::pair{a.left(a.right(y)), y}; }, name, "counit");
    if (auto v = check_adjunction(a); !v.empty()) fail(name, "adjunction '" + name.text + "' is invalid: " + v.front().detail);
    doc.adjunctions.push_back(a);
  }

  // Components `x -> m, ...`; missing ones are the unique arrow in thin categories.
  std::vector<MorId> components_from(const std::vector<Token>& raw, const FiniteCategory& src, const FiniteCategory& tgt, const std::function<std::pair<ObjId, ObjId>(ObjId)>& ends,
                                     const Token& where, const std::string& what) const {
    std::vector<std::optional<MorId>> comp(src.object_count());
    for (std::size_t k = 0; k < raw.size();) {
      if (k + 2 >= raw.size() || raw[k].kind != Tok::ident || raw[k + 1].kind != Tok::arrow || raw[k + 2].kind != Tok::ident)
        fail(raw[k], "expected 'object -> arrow' in " + what);
      comp[object_ref(src, raw[k]).index()] = arrow_ref(tgt, raw[k + 2]);
      k += 3;
      if (k < raw.size()) {
        if (raw[k].kind != Tok::comma) fail(raw[k], "expected ',' in " + what);
        ++k;
      }
    }
    std::vector<MorId> out;
    for (auto x : src.objects()) {
      if (!comp[x.index()]) {
        auto [s, t] = ends(x);
        const auto& h = tgt.hom(s, t);
        if (h.size() != 1) fail(where, what + " needs a component at '" + src.name(x) + "'");
        comp[x.index()] = h.front();
      }
      out.push_back(*comp[x.index()]);
    }
    return out;
  }

  void parse_cylinder(Document& doc) {
    const auto& name = expect_ident("a cylinder name");
    check_fresh(doc, name);
    expect_word("on");
    auto cat = category_ref(doc, expect_ident("a category name"));
    if (accept(Tok::eq)) {
      expect_word("identity");
      expect(Tok::semi, "';'");
      try {
        auto q = identity_cylinder(cat);
        q.name = name.text;
        doc.cylinders.emplace_back(name.text, CylinderDecl{q, cat});
      } catch (const NonexistenceError& e) {
        fail(name, e.what());
      }
      return;
    }
    expect(Tok::lbrace, "'{'");
    std::optional<FunctorData> i_f, d_f;
    std::map<std::string, std::vector<Token>> comps;
    while (!accept(Tok::rbrace)) {
      const auto& sec = expect_ident("a cylinder section");
      expect(Tok::colon, "':'");
      if (sec.text == "functor") {
        i_f = functor_ref(doc, expect_ident("a functor"));
      } else if (sec.text == "target") {
        d_f = functor_ref(doc, expect_ident("a functor"));
      } else if (sec.text == "inclusion" || sec.text == "unit" || sec.text == "comparison") {
        std::vector<Token> raw;
        while (peek().kind != Tok::semi && peek().kind != Tok::end) raw.push_back(next());
        comps[sec.text] = raw;
      } else {
        fail(sec, "unknown section '" + sec.text + "' in cylinder");
      }
      expect(Tok::semi, "';'");
    }
    if (!i_f) fail(name, "cylinder '" + name.text + "' needs a 'functor'");
    auto id = identity_functor(cat);
    if (!d_f) d_f = id;
    for (const auto* F : {&*i_f, &*d_f})
      if (!same_category(F->source, cat) || !same_category(F->target, cat)) fail(name, "cylinder functors must be endofunctors of '" + cat->name() + "'");
    QuillenCylinder q;
    q.name = name.text;
    try {
      q.doubled = coproduct_functor(id, id);
    } catch (const NonexistenceError& e) {
      fail(name, e.what());
    }
    q.cylinder = *i_f;
    q.weak_target = *d_f;
    const auto& C = *cat;
    auto inc = components_from(comps["inclusion"], C, C, [&](ObjId x) { return std::pair{q.doubled.functor(x), q.cylinder(x)}; }, name, "inclusion");
    auto unit = components_from(comps["unit"], C, C, [&](ObjId x) { return std::pair{x, q.weak_target(x)}; }, name, "unit");
    auto cmp = components_from(comps["comparison"], C, C, [&](ObjId x) { return std::pair{q.cylinder(x), q.weak_target(x)}; }, name, "comparison");
    q.inclusion = {"i", q.doubled.functor, q.cylinder, inc};
    q.unit = {"j", id, q.weak_target, unit};
    q.comparison = {"e", q.cylinder, q.weak_target, cmp};
    doc.cylinders.emplace_back(name.text, CylinderDecl{q, cat});
  }

  void parse_run(Document& doc) {
    expect(Tok::lbrace, "'{'");
    while (!accept(Tok::rbrace)) {
      Directive d;
      int depth = 0;  // arrow lists `{..}` nest inside a directive
      while (depth > 0 || (peek().kind != Tok::semi && peek().kind != Tok::rbrace)) {
        if (peek().kind == Tok::end) fail(peek(), "unterminated run block");
        if (peek().kind == Tok::lbrace) ++depth;
        if (peek().kind == Tok::rbrace) --depth;
        d.words.push_back(next());
      }
      if (!d.words.empty()) doc.directives.push_back(std::move(d));
      accept(Tok::semi);
    }
  }

  std::string source_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline Document parse_document(std::string_view text, const std::string& source = "<input>") { return Parser(text, source).parse(); }

inline Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

}  // namespace hocat::dsl
