#pragma once
#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohtaylor/multiset.hpp"
#include "cohtaylor/point.hpp"
#include "cohtaylor/scalar.hpp"

namespace cohtaylor {

// The interpreted models. Rel and the two WRel variants are plain
// (weighted) relations; Wcs/Coh/Nucs refine webs with coherence and make
// sums partial; PcohNum is the numeric probabilistic model with sound-only
// witness checks.
enum class Model { Rel, WRelNat, WRelRat, Wcs, Coh, Nucs, PcohNum };

inline const char* model_name(Model m) {
  switch (m) {
    case Model::Rel: return "rel";
    case Model::WRelNat: return "wrel-nat";
    case Model::WRelRat: return "wrel-rat";
    case Model::Wcs: return "wcs";
    case Model::Coh: return "coh";
    case Model::Nucs: return "nucs";
    case Model::PcohNum: return "pcoh-num";
  }
  return "?";
}

inline Model model_parse(const std::string& s) {
  if (s == "rel") return Model::Rel;
  if (s == "wrel-nat" || s == "wrel-natinf") return Model::WRelNat;
  if (s == "wrel-rat" || s == "wrel-ratpos") return Model::WRelRat;
  if (s == "wcs") return Model::Wcs;
  if (s == "coh") return Model::Coh;
  if (s == "nucs") return Model::Nucs;
  if (s == "pcoh-num" || s == "pcoh") return Model::PcohNum;
  fail(Errc::Parse, "unknown model: " + s);
}

inline Semiring model_semiring(Model m) {
  switch (m) {
    case Model::Rel:
    case Model::Wcs:
    case Model::Coh:
    case Model::Nucs: return Semiring::Bool;
    case Model::WRelNat: return Semiring::NatInf;
    case Model::WRelRat: return Semiring::RatPos;
    case Model::PcohNum: return Semiring::RatPos;
  }
  fail(Errc::Internal, "bad model");
}

inline bool model_has_coherence(Model m) { return m == Model::Wcs || m == Model::Coh || m == Model::Nucs; }

// Three-valued coherence status between two web points:
//   SCoh    strictly coherent
//   Neutral neither strictly coherent nor strictly incoherent
//   SIncoh  strictly incoherent
// Wcs uses only SCoh/SIncoh; Coh is encoded with Neutral exactly on equal
// points (so large coherence = reflexive coherence); Nucs uses all three.
enum class Status : uint8_t { SCoh, Neutral, SIncoh };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::SCoh: return "scoh";
    case Status::Neutral: return "neutral";
    case Status::SIncoh: return "sincoh";
  }
  return "?";
}

// Large coherence (the clique relation).
inline bool status_coh(Status s) { return s != Status::SIncoh; }

// (a,b) vs (a',b') in E -o F as a function of the component statuses.
inline Status status_limpl(Status s1, Status s2) {
  switch (s1) {
    case Status::SIncoh: return Status::SCoh;
    case Status::SCoh: return s2 == Status::SCoh ? Status::SCoh : Status::SIncoh;
    case Status::Neutral: return s2;  // S->S, N->N, I->I
  }
  return Status::SIncoh;
}

// (a,b) vs (a',b') in E (x) F.
inline Status status_tensor(Status s1, Status s2) {
  if (s1 == Status::SIncoh || s2 == Status::SIncoh) return Status::SIncoh;
  if (s1 == Status::Neutral && s2 == Status::Neutral) return Status::Neutral;
  return Status::SCoh;
}

enum class ObjKind : uint8_t { Atoms, UnitObj, Tensor, With, Plus, Limpl, Bang, Degrees, Raw };

struct ObjNode;
using ObjPtr = std::shared_ptr<const ObjNode>;

struct BaseCoh {
  std::vector<std::string> atoms;
  // Symmetric status matrix over atoms (row-major); unused for models
  // without coherence.
  std::vector<Status> mat;
  Status at(size_t i, size_t j) const { return mat[i * atoms.size() + j]; }
};

struct ObjNode {
  Model model = Model::Rel;
  ObjKind k = ObjKind::UnitObj;
  BaseCoh base;                                 // Atoms
  std::vector<ObjPtr> kids;                     // Tensor/Limpl(2), With/Plus(n), Bang(1)
  unsigned long bound = 0;                      // Bang: bag-size cap d; Degrees: max degree
  std::vector<std::map<Point, Scalar>> wit;     // PcohNum sample witnesses (Atoms nodes)
  // Raw objects (reconstructed from JSON): explicit web and statuses.
  std::vector<Point> raw_web;
  std::map<std::pair<Point, Point>, Status> raw_status;

  mutable std::optional<std::vector<Point>> web_cache;
};

inline constexpr size_t kWebLimit = 300000;

class Obj {
 public:
  Obj() = default;
  explicit Obj(ObjPtr p) : p_(std::move(p)) {}

  static Obj atoms(Model m, std::vector<std::string> names, std::vector<Status> mat = {},
                   std::vector<std::map<Point, Scalar>> witnesses = {}) {
    auto n = std::make_shared<ObjNode>();
    n->model = m;
    n->k = ObjKind::Atoms;
    size_t sz = names.size();
    n->base.atoms = std::move(names);
    for (size_t i = 0; i + 1 < n->base.atoms.size(); ++i)
      if (n->base.atoms[i] >= n->base.atoms[i + 1]) fail(Errc::Type, "atoms must be sorted and distinct");
    if (model_has_coherence(m)) {
      if (mat.size() != sz * sz) fail(Errc::Type, "coherence matrix size mismatch");
      for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) {
          if (mat[i * sz + j] != mat[j * sz + i]) fail(Errc::Type, "coherence matrix must be symmetric");
          if (m == Model::Coh) {
            bool diag_neutral = mat[i * sz + i] == Status::Neutral;
            bool off_not_neutral = i == j || mat[i * sz + j] != Status::Neutral;
            if (!diag_neutral || !off_not_neutral)
              fail(Errc::Type, "coh atoms: diagonal must be neutral, off-diagonal scoh/sincoh");
          }
          if (m == Model::Wcs && mat[i * sz + j] == Status::Neutral)
            fail(Errc::Type, "wcs atoms: statuses must be scoh/sincoh");
        }
      n->base.mat = std::move(mat);
    } else {
      n->base.mat.assign(sz * sz, Status::SCoh);
    }
    n->wit = std::move(witnesses);
    return Obj(n);
  }

  static Obj unit(Model m) {
    auto n = std::make_shared<ObjNode>();
    n->model = m;
    n->k = ObjKind::UnitObj;
    return Obj(n);
  }
  static Obj degrees(Model m, unsigned long max_degree) {
    auto n = std::make_shared<ObjNode>();
    n->model = m;
    n->k = ObjKind::Degrees;
    n->bound = max_degree;
    return Obj(n);
  }
  static Obj tensor(const Obj& a, const Obj& b) { return binary(ObjKind::Tensor, a, b); }
  static Obj limpl(const Obj& a, const Obj& b) { return binary(ObjKind::Limpl, a, b); }
  static Obj with(Model m, std::vector<Obj> comps) { return nary(ObjKind::With, m, std::move(comps)); }
  static Obj plus(Model m, std::vector<Obj> comps) { return nary(ObjKind::Plus, m, std::move(comps)); }
  static Obj bang(const Obj& inner, unsigned long d) {
    auto n = std::make_shared<ObjNode>();
    n->model = inner.model();
    n->k = ObjKind::Bang;
    n->kids = {inner.ptr()};
    n->bound = d;
    return Obj(n);
  }
  // S X = D -o X where D is the degrees object; plain structural encoding so
  // that curry/ev and the degree maps compose without special cases.
  static Obj s_of(const Obj& inner, unsigned long max_degree) {
    return limpl(degrees(inner.model(), max_degree), inner);
  }
  static Obj raw(Model m, std::vector<Point> web, std::map<std::pair<Point, Point>, Status> st) {
    auto n = std::make_shared<ObjNode>();
    n->model = m;
    n->k = ObjKind::Raw;
    n->raw_web = std::move(web);
    std::sort(n->raw_web.begin(), n->raw_web.end());
    n->raw_status = std::move(st);
    return Obj(n);
  }

  bool defined() const { return static_cast<bool>(p_); }
  Model model() const { return p_->model; }
  Semiring semiring() const { return model_semiring(p_->model); }
  ObjKind kind() const { return p_->k; }
  unsigned long bound() const { return p_->bound; }
  Obj kid(size_t i) const { return Obj(p_->kids.at(i)); }
  size_t arity() const { return p_->kids.size(); }
  const BaseCoh& base() const { return p_->base; }
  const std::vector<std::map<Point, Scalar>>& witnesses() const { return p_->wit; }
  ObjPtr ptr() const { return p_; }

  bool is_s_obj() const {
    return p_->k == ObjKind::Limpl && p_->kids[0]->k == ObjKind::Degrees;
  }
  unsigned long s_bound() const { return p_->kids[0]->bound; }

  friend bool operator==(const Obj& a, const Obj& b) { return node_eq(*a.p_, *b.p_); }
  friend bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }

  bool contains(const Point& p) const { return node_contains(*p_, p); }
  Status status(const Point& p, const Point& q) const { return node_status(*p_, p, q); }
  bool coherent(const Point& p, const Point& q) const {
    return !model_has_coherence(model()) || status_coh(status(p, q));
  }

  const std::vector<Point>& web() const {
    if (!p_->web_cache) {
      std::vector<Point> w;
      node_web(*p_, w);
      std::sort(w.begin(), w.end());
      p_->web_cache = std::move(w);
    }
    return *p_->web_cache;
  }

  std::string describe() const { return node_describe(*p_); }

 private:
  ObjPtr p_;

  static Obj binary(ObjKind k, const Obj& a, const Obj& b) {
    if (a.model() != b.model()) fail(Errc::Type, "model mismatch in object constructor");
    auto n = std::make_shared<ObjNode>();
    n->model = a.model();
    n->k = k;
    n->kids = {a.ptr(), b.ptr()};
    return Obj(n);
  }
  static Obj nary(ObjKind k, Model m, std::vector<Obj> comps) {
    auto n = std::make_shared<ObjNode>();
    n->model = m;
    n->k = k;
    for (auto& c : comps) {
      if (c.model() != m) fail(Errc::Type, "model mismatch in object constructor");
      n->kids.push_back(c.ptr());
    }
    return Obj(n);
  }

  static bool node_eq(const ObjNode& a, const ObjNode& b) {
    if (a.model != b.model || a.k != b.k || a.bound != b.bound) return false;
    if (a.base.atoms != b.base.atoms || a.base.mat != b.base.mat) return false;
    if (a.raw_web != b.raw_web || a.raw_status != b.raw_status) return false;
    if (a.kids.size() != b.kids.size()) return false;
    for (size_t i = 0; i < a.kids.size(); ++i)
      if (!node_eq(*a.kids[i], *b.kids[i])) return false;
    return true;
  }

  static bool node_contains(const ObjNode& n, const Point& p) {
    switch (n.k) {
      case ObjKind::Atoms:
        return p.k == PointKind::Atom &&
               std::binary_search(n.base.atoms.begin(), n.base.atoms.end(), p.atom);
      case ObjKind::UnitObj: return p.k == PointKind::Unit;
      case ObjKind::Degrees: return p.k == PointKind::Deg && p.n <= n.bound;
      case ObjKind::Tensor:
      case ObjKind::Limpl:
        return p.k == PointKind::Pair && node_contains(*n.kids[0], p.kids[0]) &&
               node_contains(*n.kids[1], p.kids[1]);
      case ObjKind::With:
      case ObjKind::Plus:
        return p.k == PointKind::Tag && p.n < n.kids.size() && node_contains(*n.kids[p.n], p.kids[0]);
      case ObjKind::Bang: {
        if (p.k != PointKind::Bag || p.kids.size() > n.bound) return false;
        for (const auto& e : p.kids)
          if (!node_contains(*n.kids[0], e)) return false;
        if (n.model == Model::Coh) {
          // Uniform exponential: only multisets with clique support.
          for (size_t i = 0; i < p.kids.size(); ++i)
            for (size_t j = i + 1; j < p.kids.size(); ++j)
              if (!status_coh(node_status(*n.kids[0], p.kids[i], p.kids[j]))) return false;
        }
        return true;
      }
      case ObjKind::Raw:
        return std::binary_search(n.raw_web.begin(), n.raw_web.end(), p);
    }
    return false;
  }

  static Status node_status(const ObjNode& n, const Point& p, const Point& q) {
    switch (n.k) {
      case ObjKind::Atoms: {
        auto it = std::lower_bound(n.base.atoms.begin(), n.base.atoms.end(), p.atom);
        auto jt = std::lower_bound(n.base.atoms.begin(), n.base.atoms.end(), q.atom);
        return n.base.at(size_t(it - n.base.atoms.begin()), size_t(jt - n.base.atoms.begin()));
      }
      case ObjKind::UnitObj:
        switch (n.model) {
          case Model::Wcs: return Status::SCoh;
          default: return Status::Neutral;  // Coh: equality; Nucs: the self-dual unit
        }
      case ObjKind::Degrees:
        // D = &_N 1: everywhere coherent; in Coh/Nucs the diagonal is neutral.
        switch (n.model) {
          case Model::Wcs: return Status::SCoh;
          default: return p.n == q.n ? Status::Neutral : Status::SCoh;
        }
      case ObjKind::Tensor:
        return status_tensor(node_status(*n.kids[0], p.kids[0], q.kids[0]),
                             node_status(*n.kids[1], p.kids[1], q.kids[1]));
      case ObjKind::Limpl:
        return status_limpl(node_status(*n.kids[0], p.kids[0], q.kids[0]),
                            node_status(*n.kids[1], p.kids[1], q.kids[1]));
      case ObjKind::With:
        if (p.n != q.n) return Status::SCoh;
        return node_status(*n.kids[p.n], p.kids[0], q.kids[0]);
      case ObjKind::Plus:
        if (p.n != q.n) return Status::SIncoh;
        return node_status(*n.kids[p.n], p.kids[0], q.kids[0]);
      case ObjKind::Bang: {
        // Free exponential over each coherence model: large coherence is
        // cross-pair large coherence; neutrality needs a perfect matching of
        // neutral pairs (Coh: multiset equality; Wcs: never).
        for (const auto& a : p.kids)
          for (const auto& b : q.kids)
            if (!status_coh(node_status(*n.kids[0], a, b))) return Status::SIncoh;
        if (n.model == Model::Wcs) return Status::SCoh;
        if (n.model == Model::Coh) return p == q ? Status::Neutral : Status::SCoh;
        if (p.kids.size() != q.kids.size()) return Status::SCoh;
        return bang_neutral_match(*n.kids[0], p.kids, q.kids) ? Status::Neutral : Status::SCoh;
      }
      case ObjKind::Raw: {
        auto key = p <= q ? std::make_pair(p, q) : std::make_pair(q, p);
        auto it = n.raw_status.find(key);
        return it == n.raw_status.end() ? Status::SIncoh : it->second;
      }
    }
    return Status::SIncoh;
  }

  // Is there a bijection between the expansions with all pairs neutral?
  static bool bang_neutral_match(const ObjNode& inner, const std::vector<Point>& a,
                                 const std::vector<Point>& b) {
    size_t n = a.size();
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, size_t i) -> bool {
      if (i == n) return true;
      for (size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        if (node_status(inner, a[i], b[j]) != Status::Neutral) continue;
        used[j] = true;
        if (self(self, i + 1)) return true;
        used[j] = false;
      }
      return false;
    };
    return rec(rec, 0);
  }

  static void push_checked(std::vector<Point>& out, Point p) {
    if (out.size() >= kWebLimit) fail(Errc::Internal, "web enumeration exceeds size limit");
    out.push_back(std::move(p));
  }

  static void node_web(const ObjNode& n, std::vector<Point>& out) {
    switch (n.k) {
      case ObjKind::Atoms:
        for (const auto& a : n.base.atoms) push_checked(out, Point::mk_atom(a));
        return;
      case ObjKind::UnitObj: push_checked(out, Point::mk_unit()); return;
      case ObjKind::Degrees:
        for (unsigned long i = 0; i <= n.bound; ++i) push_checked(out, Point::mk_deg(i));
        return;
      case ObjKind::Tensor:
      case ObjKind::Limpl: {
        std::vector<Point> l, r;
        node_web(*n.kids[0], l);
        node_web(*n.kids[1], r);
        if (!r.empty() && l.size() > kWebLimit / r.size())
          fail(Errc::Internal, "web enumeration exceeds size limit");
        for (const auto& a : l)
          for (const auto& b : r) push_checked(out, Point::mk_pair(a, b));
        return;
      }
      case ObjKind::With:
      case ObjKind::Plus:
        for (size_t i = 0; i < n.kids.size(); ++i) {
          std::vector<Point> w;
          node_web(*n.kids[i], w);
          for (auto& p : w) push_checked(out, Point::mk_tag(i, std::move(p)));
        }
        return;
      case ObjKind::Bang: {
        std::vector<Point> inner;
        node_web(*n.kids[0], inner);
        std::sort(inner.begin(), inner.end());
        std::vector<Point> cur;
        auto rec = [&](auto&& self, size_t start, unsigned long left) -> void {
          {
            Point bag = Point::mk_bag(cur);
            if (node_contains(n, bag)) push_checked(out, std::move(bag));
          }
          if (left == 0) return;
          for (size_t i = start; i < inner.size(); ++i) {
            cur.push_back(inner[i]);
            self(self, i, left - 1);
            cur.pop_back();
          }
        };
        rec(rec, 0, n.bound);
        return;
      }
      case ObjKind::Raw:
        for (const auto& p : n.raw_web) push_checked(out, p);
        return;
    }
  }

  static std::string node_describe(const ObjNode& n) {
    switch (n.k) {
      case ObjKind::Atoms: {
        std::string s = "{";
        for (size_t i = 0; i < n.base.atoms.size(); ++i) s += (i ? "," : "") + n.base.atoms[i];
        return s + "}";
      }
      case ObjKind::UnitObj: return "1";
      case ObjKind::Degrees: return "D<=" + std::to_string(n.bound);
      case ObjKind::Tensor: return "(" + node_describe(*n.kids[0]) + " * " + node_describe(*n.kids[1]) + ")";
      case ObjKind::Limpl:
        if (n.kids[0]->k == ObjKind::Degrees) return "S" + node_describe(*n.kids[1]);
        return "(" + node_describe(*n.kids[0]) + " -o " + node_describe(*n.kids[1]) + ")";
      case ObjKind::With: {
        std::string s = "(&";
        for (const auto& c : n.kids) s += " " + node_describe(*c);
        return s + ")";
      }
      case ObjKind::Plus: {
        std::string s = "(+";
        for (const auto& c : n.kids) s += " " + node_describe(*c);
        return s + ")";
      }
      case ObjKind::Bang: return "!<=" + std::to_string(n.bound) + " " + node_describe(*n.kids[0]);
      case ObjKind::Raw: return "raw[" + std::to_string(n.raw_web.size()) + "]";
    }
    return "?";
  }
};

}  // namespace cohtaylor
