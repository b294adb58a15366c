#pragma once
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cohtaylor/analytic.hpp"
#include "cohtaylor/taylor.hpp"

namespace cohtaylor {

// The s-expression front end.  A program is a sequence of top-level forms:
//   (model NAME :bang-degree d :s-degree D)   session configuration
//   (obj NAME (atoms a b) (coh (a b)) ...)    object declaration
//   (obj NAME TYPE)                           object alias
//   (let NAME EXPR)                           morphism binding
//   EXPR                                      program result (last one wins)
// `!T` abbreviates `(bang T)` wherever a form is expected, and `;` starts a
// comment that runs to the end of the line.

struct Sx {
  bool list = false;
  std::string sym;
  std::vector<Sx> kids;
  int line = 1, col = 1;
};

inline std::string sx_print(const Sx& s) {
  if (!s.list) return s.sym;
  std::string out = "(";
  for (size_t i = 0; i < s.kids.size(); ++i) {
    if (i) out += ' ';
    out += sx_print(s.kids[i]);
  }
  return out + ")";
}

namespace langdetail {

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  std::vector<Sx> read_all() {
    std::vector<Sx> out;
    skip();
    while (!eof()) {
      out.push_back(read_form());
      skip();
    }
    return out;
  }

 private:
  std::string_view src_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;

  bool eof() const { return i_ >= src_.size(); }
  char peek() const { return src_[i_]; }
  char take() {
    char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  [[noreturn]] static void err(int line, int col, const std::string& msg) {
    fail(Errc::Parse,
         "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
  }
  static bool sym_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ';' &&
           c != '!';
  }
  void skip() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  Sx read_form() {
    skip();
    if (eof()) err(line_, col_, "unexpected end of input");
    Sx s;
    s.line = line_;
    s.col = col_;
    char c = peek();
    if (c == '(') {
      take();
      s.list = true;
      skip();
      while (!eof() && peek() != ')') {
        s.kids.push_back(read_form());
        skip();
      }
      if (eof())
        err(s.line, s.col, "unbalanced '(' opened here");
      take();
      return s;
    }
    if (c == ')') err(line_, col_, "unexpected ')'");
    if (c == '!') {
      take();
      Sx head;
      head.sym = "bang";
      head.line = s.line;
      head.col = s.col;
      Sx b;
      b.list = true;
      b.line = s.line;
      b.col = s.col;
      b.kids.push_back(std::move(head));
      b.kids.push_back(read_form());
      return b;
    }
    while (!eof() && sym_char(peek())) s.sym.push_back(take());
    if (s.sym.empty()) err(line_, col_, "empty symbol");
    return s;
  }
};

[[noreturn]] inline void at(Errc c, const Sx& s, const std::string& msg) {
  fail(c, "line " + std::to_string(s.line) + ", col " + std::to_string(s.col) + ": " + msg);
}

inline unsigned long parse_nat(const Sx& s, const char* what) {
  if (s.list || s.sym.empty()) at(Errc::Parse, s, std::string(what) + " must be a number");
  for (char c : s.sym)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      at(Errc::Parse, s, std::string(what) + " must be a number, got " + s.sym);
  return std::stoul(s.sym);
}

inline bool head_is(const Sx& s, const char* name) {
  return s.list && !s.kids.empty() && !s.kids[0].list && s.kids[0].sym == name;
}

}  // namespace langdetail

struct Session {
  Model model = Model::Rel;
  bool model_set = false;
  unsigned long bang_degree = 2;
  unsigned long s_degree = 2;
  bool validate_outputs = true;
  std::map<std::string, Obj> objs;
  std::map<std::string, Mor> mors;
};

// --- web points in source syntax (matches point_text) ---
inline Point point_from_sx(const Sx& s) {
  using langdetail::at;
  if (!s.list) {
    if (s.sym == "*") return Point::mk_unit();
    return Point::mk_atom(s.sym);
  }
  if (s.kids.empty() || s.kids[0].list) at(Errc::Parse, s, "bad point syntax");
  const std::string& h = s.kids[0].sym;
  if (h == "deg") {
    if (s.kids.size() != 2) at(Errc::Parse, s, "(deg N) takes one number");
    return Point::mk_deg(langdetail::parse_nat(s.kids[1], "degree"));
  }
  if (h == "in") {
    if (s.kids.size() != 3) at(Errc::Parse, s, "(in I P) takes an index and a point");
    return Point::mk_tag(langdetail::parse_nat(s.kids[1], "component index"),
                         point_from_sx(s.kids[2]));
  }
  if (h == "pair") {
    if (s.kids.size() != 3) at(Errc::Parse, s, "(pair P Q) takes two points");
    return Point::mk_pair(point_from_sx(s.kids[1]), point_from_sx(s.kids[2]));
  }
  if (h == "bag") {
    std::vector<Point> elems;
    for (size_t i = 1; i < s.kids.size(); ++i) elems.push_back(point_from_sx(s.kids[i]));
    return Point::mk_bag(std::move(elems));
  }
  at(Errc::Parse, s, "unknown point constructor: " + h);
}

// --- type expressions ---
inline Obj type_from_sx(const Sx& s, const Session& se) {
  using langdetail::at;
  if (!s.list) {
    auto it = se.objs.find(s.sym);
    if (it == se.objs.end()) at(Errc::Type, s, "unknown object: " + s.sym);
    return it->second;
  }
  if (s.kids.empty() || s.kids[0].list) at(Errc::Parse, s, "bad type syntax");
  const std::string& h = s.kids[0].sym;
  auto arity = [&](size_t lo, size_t hi, const char* usage) {
    size_t n = s.kids.size() - 1;
    if (n < lo || n > hi) at(Errc::Parse, s, std::string("usage: ") + usage);
  };
  if (h == "unit") {
    arity(0, 0, "(unit)");
    return Obj::unit(se.model);
  }
  if (h == "degrees") {
    arity(0, 1, "(degrees [D])");
    unsigned long D =
        s.kids.size() == 2 ? langdetail::parse_nat(s.kids[1], "degree bound") : se.s_degree;
    return Obj::degrees(se.model, D);
  }
  if (h == "tensor") {
    arity(2, 2, "(tensor T U)");
    return Obj::tensor(type_from_sx(s.kids[1], se), type_from_sx(s.kids[2], se));
  }
  if (h == "limpl") {
    arity(2, 2, "(limpl T U)");
    return Obj::limpl(type_from_sx(s.kids[1], se), type_from_sx(s.kids[2], se));
  }
  if (h == "with" || h == "plus") {
    std::vector<Obj> comps;
    for (size_t i = 1; i < s.kids.size(); ++i) comps.push_back(type_from_sx(s.kids[i], se));
    return h == "with" ? Obj::with(se.model, std::move(comps))
                       : Obj::plus(se.model, std::move(comps));
  }
  if (h == "bang") {
    arity(1, 2, "(bang T [d])  (or !T)");
    unsigned long d =
        s.kids.size() == 3 ? langdetail::parse_nat(s.kids[2], "bag bound") : se.bang_degree;
    if (d == 0) at(Errc::Type, s, "bang bound must be at least 1");
    return Obj::bang(type_from_sx(s.kids[1], se), d);
  }
  if (h == "s") {
    arity(1, 2, "(s T [D])");
    unsigned long D =
        s.kids.size() == 3 ? langdetail::parse_nat(s.kids[2], "degree bound") : se.s_degree;
    return Obj::s_of(type_from_sx(s.kids[1], se), D);
  }
  at(Errc::Parse, s, "unknown type constructor: " + h);
}

// --- object declarations ---
// (obj A (atoms a b) [(coh (a b) ...)] [(incoh ...)] [(neutral ...)]
//                    [(witness (a 1/2) ...)]*)
// Status defaults: coherent diagonal (neutral for coh/nucs, where the
// diagonal of coh is fixed) and strictly incoherent off-diagonal.  Listed
// pairs apply symmetrically and later clauses win.
inline void declare_obj(const Sx& form, Session& se) {
  using langdetail::at;
  if (form.kids.size() < 3 || form.kids[1].list)
    at(Errc::Parse, form, "usage: (obj NAME SPEC...)");
  const std::string& name = form.kids[1].sym;
  if (se.objs.count(name)) at(Errc::Type, form, "object already declared: " + name);

  if (!langdetail::head_is(form.kids[2], "atoms")) {
    if (form.kids.size() != 3) at(Errc::Parse, form, "usage: (obj NAME TYPE)");
    se.objs.emplace(name, type_from_sx(form.kids[2], se));
    return;
  }

  std::vector<std::string> names;
  for (size_t i = 1; i < form.kids[2].kids.size(); ++i) {
    const Sx& a = form.kids[2].kids[i];
    if (a.list) at(Errc::Parse, a, "atom names are symbols");
    names.push_back(a.sym);
  }
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  size_t k = names.size();

  bool coherent = model_has_coherence(se.model);
  std::vector<Status> mat;
  if (coherent) {
    Status diag = se.model == Model::Wcs ? Status::SCoh : Status::Neutral;
    mat.assign(k * k, Status::SIncoh);
    for (size_t i = 0; i < k; ++i) mat[i * k + i] = diag;
  }
  std::vector<std::map<Point, Scalar>> wit;

  auto pair_of = [&](const Sx& p) -> std::pair<size_t, size_t> {
    if (!p.list || p.kids.size() != 2 || p.kids[0].list || p.kids[1].list)
      at(Errc::Parse, p, "status pairs look like (a b)");
    auto i = index.find(p.kids[0].sym), j = index.find(p.kids[1].sym);
    if (i == index.end()) at(Errc::Type, p, "unknown atom: " + p.kids[0].sym);
    if (j == index.end()) at(Errc::Type, p, "unknown atom: " + p.kids[1].sym);
    return {i->second, j->second};
  };

  for (size_t ci = 3; ci < form.kids.size(); ++ci) {
    const Sx& clause = form.kids[ci];
    if (!clause.list || clause.kids.empty() || clause.kids[0].list)
      at(Errc::Parse, clause, "expected a (coh ...), (incoh ...), (neutral ...) or (witness ...) clause");
    const std::string& h = clause.kids[0].sym;
    if (h == "coh" || h == "incoh" || h == "neutral") {
      if (!coherent)
        at(Errc::Type, clause, "status clauses only apply to coherence models");
      Status st = h == "coh"     ? Status::SCoh
                  : h == "incoh" ? Status::SIncoh
                                 : Status::Neutral;
      if (st == Status::Neutral && se.model != Model::Nucs)
        at(Errc::Type, clause, "neutral pairs only exist in the nucs model");
      for (size_t i = 1; i < clause.kids.size(); ++i) {
        auto [a, b] = pair_of(clause.kids[i]);
        if (a == b && se.model == Model::Coh)
          at(Errc::Type, clause.kids[i], "the coh diagonal is fixed to neutral");
        mat[a * k + b] = st;
        mat[b * k + a] = st;
      }
    } else if (h == "witness") {
      if (se.model != Model::PcohNum)
        at(Errc::Type, clause, "witnesses only apply to the pcoh-num model");
      std::map<Point, Scalar> one;
      for (size_t i = 1; i < clause.kids.size(); ++i) {
        const Sx& e = clause.kids[i];
        if (!e.list || e.kids.size() != 2 || e.kids[0].list || e.kids[1].list)
          at(Errc::Parse, e, "witness entries look like (a 1/2)");
        if (!index.count(e.kids[0].sym)) at(Errc::Type, e, "unknown atom: " + e.kids[0].sym);
        Point p = Point::mk_atom(e.kids[0].sym);
        if (one.count(p)) at(Errc::Parse, e, "duplicate witness coordinate");
        one.emplace(std::move(p), scalar_parse(model_semiring(se.model), e.kids[1].sym));
      }
      wit.push_back(std::move(one));
    } else {
      at(Errc::Parse, clause, "unknown object clause: " + h);
    }
  }
  se.objs.emplace(name, Obj::atoms(se.model, std::move(names), std::move(mat), std::move(wit)));
}

// --- morphism expressions ---
enum class ExKind {
  Lit, Ref, Id, Compose, Tensor, WithTuple, Cotuple, Curry, Uncurry,
  Bang, Der, Dig, Seely2, Contr, Weak, SOf, Proj, Inj, Sigma, Theta,
  Lift, Swap, Sdl, Taylor, Homog, Sum, Kleisli,
};

struct MorExpr {
  ExKind k = ExKind::Ref;
  std::string name;                                      // Ref
  unsigned long idx = 0;                                 // Proj/Inj degree, Homog n
  std::vector<MorExpr> kids;                             // sub-expressions
  std::vector<Obj> targs;                                // resolved type arguments
  std::vector<std::tuple<Point, Point, Scalar>> entries; // Lit
  Obj dom, cod;                                          // inferred interface
  Sx src;                                                // original source form
};

inline std::string expr_print(const MorExpr& e) { return sx_print(e.src); }

// Infers the dom/cod of every node or reports a type error with its source
// location; no matrices are computed.
inline MorExpr typecheck(const Sx& s, const Session& se) {
  using langdetail::at;
  MorExpr e;
  e.src = s;
  if (!s.list) {
    auto it = se.mors.find(s.sym);
    if (it == se.mors.end()) at(Errc::Type, s, "unknown morphism: " + s.sym);
    e.k = ExKind::Ref;
    e.name = s.sym;
    e.dom = it->second.dom;
    e.cod = it->second.cod;
    return e;
  }
  if (s.kids.empty() || s.kids[0].list) at(Errc::Parse, s, "bad morphism syntax");
  const std::string& h = s.kids[0].sym;
  auto arity = [&](size_t lo, size_t hi, const char* usage) {
    size_t n = s.kids.size() - 1;
    if (n < lo || n > hi) at(Errc::Parse, s, std::string("usage: ") + usage);
  };
  auto sub = [&](size_t i) { return typecheck(s.kids[i], se); };
  auto targ = [&](size_t i) { return type_from_sx(s.kids[i], se); };
  auto join = [&](const Obj& got, const Obj& want, const char* where) {
    if (!same_interface(got, want))
      at(Errc::Type, s,
         std::string(where) + ": expected " + want.describe() + ", got " + got.describe());
  };

  if (h == "lit") {
    arity(3, 3, "(lit DOMTYPE CODTYPE (ENTRIES...))");
    e.k = ExKind::Lit;
    e.dom = targ(1);
    e.cod = targ(2);
    if (!s.kids[3].list) at(Errc::Parse, s.kids[3], "literal entries are a list of triples");
    Semiring sr = model_semiring(se.model);
    for (const Sx& t : s.kids[3].kids) {
      if (!t.list || t.kids.size() != 3)
        at(Errc::Parse, t, "literal entries look like (P Q SCALAR)");
      if (t.kids[2].list) at(Errc::Parse, t.kids[2], "scalars are symbols like 3 or 1/2");
      e.entries.emplace_back(point_from_sx(t.kids[0]), point_from_sx(t.kids[1]),
                             scalar_parse(sr, t.kids[2].sym));
    }
    return e;
  }
  if (h == "id") {
    arity(1, 1, "(id T)");
    e.k = ExKind::Id;
    e.dom = e.cod = targ(1);
    return e;
  }
  if (h == "compose") {
    arity(2, SIZE_MAX, "(compose g f ...)   applies right to left");
    e.k = ExKind::Compose;
    for (size_t i = 1; i < s.kids.size(); ++i) e.kids.push_back(sub(i));
    for (size_t i = 0; i + 1 < e.kids.size(); ++i)
      join(e.kids[i + 1].cod, e.kids[i].dom, "compose middle object");
    e.dom = e.kids.back().dom;
    e.cod = e.kids.front().cod;
    return e;
  }
  if (h == "tensor") {
    arity(2, 2, "(tensor f g)");
    e.k = ExKind::Tensor;
    e.kids = {sub(1), sub(2)};
    e.dom = Obj::tensor(e.kids[0].dom, e.kids[1].dom);
    e.cod = Obj::tensor(e.kids[0].cod, e.kids[1].cod);
    return e;
  }
  if (h == "with-tuple" || h == "cotuple") {
    arity(1, SIZE_MAX, "(with-tuple f ...) / (cotuple f ...)");
    e.k = h == "with-tuple" ? ExKind::WithTuple : ExKind::Cotuple;
    std::vector<Obj> sides;
    for (size_t i = 1; i < s.kids.size(); ++i) {
      e.kids.push_back(sub(i));
      if (e.k == ExKind::WithTuple) {
        join(e.kids.back().dom, e.kids[0].dom, "tupling domain");
        sides.push_back(e.kids.back().cod);
      } else {
        join(e.kids.back().cod, e.kids[0].cod, "cotupling codomain");
        sides.push_back(e.kids.back().dom);
      }
    }
    if (e.k == ExKind::WithTuple) {
      e.dom = e.kids[0].dom;
      e.cod = Obj::with(se.model, std::move(sides));
    } else {
      e.dom = Obj::plus(se.model, std::move(sides));
      e.cod = e.kids[0].cod;
    }
    return e;
  }
  if (h == "curry") {
    arity(1, 1, "(curry f)");
    e.k = ExKind::Curry;
    e.kids = {sub(1)};
    if (e.kids[0].dom.kind() != ObjKind::Tensor)
      at(Errc::Type, s, "curry needs a tensor-shaped domain, got " + e.kids[0].dom.describe());
    e.dom = e.kids[0].dom.kid(0);
    e.cod = Obj::limpl(e.kids[0].dom.kid(1), e.kids[0].cod);
    return e;
  }
  if (h == "uncurry") {
    arity(1, 1, "(uncurry f)");
    e.k = ExKind::Uncurry;
    e.kids = {sub(1)};
    if (e.kids[0].cod.kind() != ObjKind::Limpl)
      at(Errc::Type, s,
         "uncurry needs a linear-implication codomain, got " + e.kids[0].cod.describe());
    e.dom = Obj::tensor(e.kids[0].dom, e.kids[0].cod.kid(0));
    e.cod = e.kids[0].cod.kid(1);
    return e;
  }
  if (h == "bang") {
    arity(1, 1, "(bang f)   (or !f)");
    e.k = ExKind::Bang;
    e.kids = {sub(1)};
    e.dom = Obj::bang(e.kids[0].dom, se.bang_degree);
    e.cod = Obj::bang(e.kids[0].cod, se.bang_degree);
    return e;
  }
  if (h == "der" || h == "dig" || h == "contr" || h == "weak") {
    arity(1, 1, "(der T) / (dig T) / (contr T) / (weak T)");
    Obj x = targ(1);
    Obj bx = Obj::bang(x, se.bang_degree);
    if (h == "der") { e.k = ExKind::Der; e.dom = bx; e.cod = x; }
    if (h == "dig") { e.k = ExKind::Dig; e.dom = bx; e.cod = Obj::bang(bx, se.bang_degree); }
    if (h == "contr") { e.k = ExKind::Contr; e.dom = bx; e.cod = Obj::tensor(bx, bx); }
    if (h == "weak") { e.k = ExKind::Weak; e.dom = bx; e.cod = Obj::unit(se.model); }
    e.targs = {x};
    return e;
  }
  if (h == "seely2") {
    arity(2, 2, "(seely2 T U)");
    e.k = ExKind::Seely2;
    Obj x = targ(1), y = targ(2);
    e.targs = {x, y};
    e.dom = Obj::tensor(Obj::bang(x, se.bang_degree), Obj::bang(y, se.bang_degree));
    e.cod = Obj::bang(Obj::with(se.model, {x, y}), se.bang_degree);
    return e;
  }
  if (h == "s-of") {
    arity(1, 1, "(s-of f)");
    e.k = ExKind::SOf;
    e.kids = {sub(1)};
    e.dom = Obj::s_of(e.kids[0].dom, se.s_degree);
    e.cod = Obj::s_of(e.kids[0].cod, se.s_degree);
    return e;
  }
  if (h == "proj" || h == "inj") {
    arity(2, 2, "(proj I T) / (inj I T)");
    e.idx = langdetail::parse_nat(s.kids[1], "degree index");
    if (e.idx > se.s_degree)
      at(Errc::Type, s, "degree index exceeds the s-degree bound");
    Obj x = targ(2);
    e.targs = {x};
    Obj sx = Obj::s_of(x, se.s_degree);
    if (h == "proj") { e.k = ExKind::Proj; e.dom = sx; e.cod = x; }
    else             { e.k = ExKind::Inj;  e.dom = x;  e.cod = sx; }
    return e;
  }
  if (h == "sigma" || h == "theta" || h == "lift" || h == "swap") {
    arity(1, 1, "(sigma T) / (theta T) / (lift T) / (swap T)");
    Obj x = targ(1);
    e.targs = {x};
    Obj sx = Obj::s_of(x, se.s_degree);
    Obj ssx = Obj::s_of(sx, se.s_degree);
    if (h == "sigma") { e.k = ExKind::Sigma; e.dom = sx; e.cod = x; }
    if (h == "theta") { e.k = ExKind::Theta; e.dom = ssx; e.cod = sx; }
    if (h == "lift")  { e.k = ExKind::Lift;  e.dom = sx; e.cod = ssx; }
    if (h == "swap")  { e.k = ExKind::Swap;  e.dom = ssx; e.cod = ssx; }
    return e;
  }
  if (h == "sdl") {
    arity(1, 1, "(sdl T)");
    e.k = ExKind::Sdl;
    Obj x = targ(1);
    e.targs = {x};
    e.dom = Obj::bang(Obj::s_of(x, se.s_degree), se.bang_degree);
    e.cod = Obj::s_of(Obj::bang(x, se.bang_degree), se.s_degree);
    return e;
  }
  if (h == "taylor") {
    arity(1, 1, "(taylor f)");
    e.k = ExKind::Taylor;
    e.kids = {sub(1)};
    if (e.kids[0].dom.kind() != ObjKind::Bang)
      at(Errc::Type, s,
         "taylor needs a !-shaped domain, got " + e.kids[0].dom.describe());
    Obj x = e.kids[0].dom.kid(0);
    e.dom = Obj::bang(Obj::s_of(x, se.s_degree), e.kids[0].dom.bound());
    e.cod = Obj::s_of(e.kids[0].cod, se.s_degree);
    return e;
  }
  if (h == "homog") {
    arity(2, 2, "(homog f N)");
    e.k = ExKind::Homog;
    e.kids = {sub(1)};
    e.idx = langdetail::parse_nat(s.kids[2], "component degree");
    if (e.kids[0].dom.kind() != ObjKind::Bang)
      at(Errc::Type, s, "homog needs a !-shaped domain, got " + e.kids[0].dom.describe());
    if (e.idx > se.s_degree)
      at(Errc::Type, s, "component degree exceeds the s-degree bound");
    e.dom = e.kids[0].dom;
    e.cod = e.kids[0].cod;
    return e;
  }
  if (h == "sum") {
    arity(1, SIZE_MAX, "(sum f ...)");
    e.k = ExKind::Sum;
    for (size_t i = 1; i < s.kids.size(); ++i) {
      e.kids.push_back(sub(i));
      join(e.kids.back().dom, e.kids[0].dom, "summand domain");
      join(e.kids.back().cod, e.kids[0].cod, "summand codomain");
    }
    e.dom = e.kids[0].dom;
    e.cod = e.kids[0].cod;
    return e;
  }
  if (h == "kleisli-compose") {
    arity(2, 2, "(kleisli-compose g f)");
    e.k = ExKind::Kleisli;
    e.kids = {sub(1), sub(2)};
    const MorExpr& g = e.kids[0];
    const MorExpr& f = e.kids[1];
    if (f.dom.kind() != ObjKind::Bang || g.dom.kind() != ObjKind::Bang)
      at(Errc::Type, s, "kleisli-compose needs !-shaped domains");
    if (f.dom.bound() != g.dom.bound())
      at(Errc::Type, s, "kleisli-compose needs matching bag bounds");
    join(g.dom.kid(0), f.cod, "kleisli middle object");
    e.dom = f.dom;
    e.cod = g.cod;
    return e;
  }
  at(Errc::Parse, s, "unknown morphism form: " + h);
}

// Computes the matrix of a typed expression.  Evaluating (sdl T) always
// computes the map twice, through the composite pipeline and the closed
// form, and refuses to answer when the two disagree.
inline Mor evaluate(const MorExpr& e, const Session& se) {
  using langdetail::at;
  auto ev = [&](size_t i) { return evaluate(e.kids[i], se); };
  switch (e.k) {
    case ExKind::Lit: {
      Mor r(e.dom, e.cod);
      for (const auto& [p, q, v] : e.entries) {
        if (scalar_is_zero(v)) continue;
        if (r.e.count({p, q})) at(Errc::Parse, e.src, "duplicate literal entry");
        r.set_entry(p, q, v);
      }
      if (se.validate_outputs) {
        Validation v = validate(r);
        if (!v.ok) at(Errc::Validity, e.src, "invalid literal: " + v.why);
      }
      return r;
    }
    case ExKind::Ref: return se.mors.at(e.name);
    case ExKind::Id: return identity(e.dom);
    case ExKind::Compose: {
      Mor r = ev(e.kids.size() - 1);
      for (size_t i = e.kids.size() - 1; i-- > 0;) r = compose(ev(i), r);
      return r;
    }
    case ExKind::Tensor: return tensor_mor(ev(0), ev(1));
    case ExKind::WithTuple: {
      std::vector<Mor> fs;
      for (size_t i = 0; i < e.kids.size(); ++i) fs.push_back(ev(i));
      return tuple_mor(fs);
    }
    case ExKind::Cotuple: {
      std::vector<Mor> fs;
      for (size_t i = 0; i < e.kids.size(); ++i) fs.push_back(ev(i));
      return cotuple_mor(fs);
    }
    case ExKind::Curry: return curry_mor(ev(0));
    case ExKind::Uncurry: return uncurry_mor(ev(0));
    case ExKind::Bang: return bang_mor(ev(0), se.bang_degree);
    case ExKind::Der: return der_mor(e.targs[0], se.bang_degree);
    case ExKind::Dig: return dig_mor(e.targs[0], se.bang_degree);
    case ExKind::Seely2: return seely2_mor(e.targs[0], e.targs[1], se.bang_degree);
    case ExKind::Contr: return contr_mor(e.targs[0], se.bang_degree);
    case ExKind::Weak: return weak_mor(e.targs[0], se.bang_degree);
    case ExKind::SOf: return s_mor(ev(0), se.s_degree);
    case ExKind::Proj: return sproj_mor(e.targs[0], se.s_degree, e.idx);
    case ExKind::Inj: return sinj_mor(e.targs[0], se.s_degree, e.idx);
    case ExKind::Sigma: return sigma_mor(e.targs[0], se.s_degree);
    case ExKind::Theta: return theta_mor(e.targs[0], se.s_degree);
    case ExKind::Lift: return lift_mor(e.targs[0], se.s_degree);
    case ExKind::Swap: return sswap_mor(e.targs[0], se.s_degree);
    case ExKind::Sdl: {
      Mor a = sdl_explicit_mor(e.targs[0], se.bang_degree, se.s_degree);
      Mor b = sdl_pipeline_mor(e.targs[0], se.bang_degree, se.s_degree);
      if (!(a.e == b.e))
        at(Errc::OracleMismatch, e.src,
           "the two independent evaluations of the distributive law disagree");
      return a;
    }
    case ExKind::Taylor: return taylor_functor_mor(ev(0), se.s_degree);
    case ExKind::Homog: return homogeneous_mor(ev(0), e.idx, se.s_degree);
    case ExKind::Sum: {
      std::vector<Mor> fs;
      for (size_t i = 0; i < e.kids.size(); ++i) fs.push_back(ev(i));
      return partial_sum_checked(fs);
    }
    case ExKind::Kleisli: return kleisli_compose(ev(0), ev(1));
  }
  fail(Errc::Internal, "bad expression kind");
}

// --- whole programs ---
struct ProgramResult {
  std::optional<MorExpr> typed;
  std::optional<Mor> value;
};

inline void handle_model_form(const Sx& f, Session& se, bool decls_seen) {
  using langdetail::at;
  if (se.model_set) at(Errc::Parse, f, "model declared twice");
  if (decls_seen) at(Errc::Parse, f, "the model form must precede declarations");
  if (f.kids.size() < 2 || f.kids[1].list)
    at(Errc::Parse, f, "usage: (model NAME [:bang-degree d] [:s-degree D])");
  se.model = model_parse(f.kids[1].sym);
  se.model_set = true;
  for (size_t i = 2; i < f.kids.size(); i += 2) {
    if (f.kids[i].list || i + 1 >= f.kids.size())
      at(Errc::Parse, f.kids[i], "model options are :keyword value pairs");
    const std::string& kw = f.kids[i].sym;
    unsigned long v = langdetail::parse_nat(f.kids[i + 1], kw.c_str());
    if (kw == ":bang-degree") {
      if (v == 0) at(Errc::Type, f.kids[i + 1], "bang degree must be at least 1");
      se.bang_degree = v;
    } else if (kw == ":s-degree") {
      if (v == 0) at(Errc::Type, f.kids[i + 1], "s degree must be at least 1");
      se.s_degree = v;
    } else {
      at(Errc::Parse, f.kids[i], "unknown model option: " + kw);
    }
  }
}

// Runs a program against a session seeded with the command-line defaults.
// A (model ...) form in the file takes precedence over those defaults.
inline ProgramResult run_program(const std::string& src, Session& se) {
  std::vector<Sx> forms = langdetail::Reader(src).read_all();
  ProgramResult out;
  bool decls_seen = false;
  for (const Sx& f : forms) {
    if (langdetail::head_is(f, "model")) {
      handle_model_form(f, se, decls_seen);
      continue;
    }
    if (langdetail::head_is(f, "obj")) {
      declare_obj(f, se);
      decls_seen = true;
      continue;
    }
    if (langdetail::head_is(f, "let")) {
      if (f.kids.size() != 3 || f.kids[1].list)
        langdetail::at(Errc::Parse, f, "usage: (let NAME EXPR)");
      if (se.mors.count(f.kids[1].sym))
        langdetail::at(Errc::Type, f, "morphism already bound: " + f.kids[1].sym);
      MorExpr e = typecheck(f.kids[2], se);
      Mor v = evaluate(e, se);
      if (se.validate_outputs) {
        Validation val = validate(v);
        if (!val.ok) langdetail::at(Errc::Validity, f, f.kids[1].sym + ": " + val.why);
      }
      se.mors.emplace(f.kids[1].sym, std::move(v));
      decls_seen = true;
      continue;
    }
    MorExpr e = typecheck(f, se);
    Mor v = evaluate(e, se);
    if (se.validate_outputs) {
      Validation val = validate(v);
      if (!val.ok) langdetail::at(Errc::Validity, f, "result: " + val.why);
    }
    out.typed = std::move(e);
    out.value = std::move(v);
    decls_seen = true;
  }
  return out;
}

}  // namespace cohtaylor
