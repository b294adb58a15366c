#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohtaylor/object.hpp"

namespace cohtaylor {

// A morphism is a finitely supported matrix web(dom) x web(cod) over the
// model's semiring. Entries are stored unvalidated; validate() checks web
// membership, coherence cliques, and (PcohNum) witness soundness separately.
struct Mor {
  Obj dom, cod;
  std::map<std::pair<Point, Point>, Scalar> e;

  Mor() = default;
  Mor(Obj d, Obj c) : dom(std::move(d)), cod(std::move(c)) {
    if (dom.model() != cod.model()) fail(Errc::Type, "model mismatch in morphism");
  }

  Model model() const { return dom.model(); }
  Semiring semiring() const { return dom.semiring(); }

  Scalar at(const Point& p, const Point& q) const {
    auto it = e.find({p, q});
    return it == e.end() ? scalar_zero(semiring()) : it->second;
  }
  void add_entry(const Point& p, const Point& q, const Scalar& s) {
    if (s.sr != semiring()) fail(Errc::Type, "scalar semiring mismatch");
    if (scalar_is_zero(s)) return;
    auto key = std::make_pair(p, q);
    auto it = e.find(key);
    if (it == e.end()) {
      e.emplace(std::move(key), s);
    } else {
      it->second = scalar_add(it->second, s);
      if (scalar_is_zero(it->second)) e.erase(it);
    }
  }
  void set_entry(const Point& p, const Point& q, const Scalar& s) {
    if (s.sr != semiring()) fail(Errc::Type, "scalar semiring mismatch");
    if (scalar_is_zero(s)) {
      e.erase({p, q});
    } else {
      e[{p, q}] = s;
    }
  }

  friend bool operator==(const Mor& a, const Mor& b) {
    return a.dom == b.dom && a.cod == b.cod && a.e == b.e;
  }
};

inline Mor zero_mor(const Obj& dom, const Obj& cod) { return Mor(dom, cod); }

// Two objects present the same matrix interface when structurally equal or
// when they share model and web (a raw object parsed back from JSON composes
// with the structural object it was serialized from).
inline bool same_interface(const Obj& a, const Obj& b) {
  if (a == b) return true;
  return a.model() == b.model() && a.web() == b.web();
}

inline Mor identity(const Obj& x) {
  Mor m(x, x);
  Scalar one = scalar_one(x.semiring());
  for (const auto& p : x.web()) m.set_entry(p, p, one);
  return m;
}

inline Mor compose(const Mor& g, const Mor& f) {
  if (!same_interface(f.cod, g.dom)) fail(Errc::Type, "compose: middle objects differ");
  Mor r(f.dom, g.cod);
  // Group g by its dom point for the inner sum.
  std::map<Point, std::vector<std::pair<Point, Scalar>>> by_dom;
  for (const auto& [pq, v] : g.e) by_dom[pq.first].emplace_back(pq.second, v);
  for (const auto& [pq, v] : f.e) {
    auto it = by_dom.find(pq.second);
    if (it == by_dom.end()) continue;
    for (const auto& [c, w] : it->second) r.add_entry(pq.first, c, scalar_mul(v, w));
  }
  return r;
}

inline Mor tensor_mor(const Mor& f, const Mor& g) {
  if (f.model() != g.model()) fail(Errc::Type, "tensor: model mismatch");
  Mor r(Obj::tensor(f.dom, g.dom), Obj::tensor(f.cod, g.cod));
  for (const auto& [pq1, v1] : f.e)
    for (const auto& [pq2, v2] : g.e)
      r.add_entry(Point::mk_pair(pq1.first, pq2.first), Point::mk_pair(pq1.second, pq2.second),
                  scalar_mul(v1, v2));
  return r;
}

// &-pairing <f_i> : X -> & Y_i of morphisms with a common domain.
inline Mor tuple_mor(const std::vector<Mor>& fs) {
  if (fs.empty()) fail(Errc::Type, "tuple of zero morphisms needs an explicit domain");
  std::vector<Obj> cods;
  for (const auto& f : fs) {
    if (!(f.dom == fs[0].dom)) fail(Errc::Type, "tuple: domains differ");
    cods.push_back(f.cod);
  }
  Mor r(fs[0].dom, Obj::with(fs[0].model(), cods));
  for (size_t i = 0; i < fs.size(); ++i)
    for (const auto& [pq, v] : fs[i].e) r.add_entry(pq.first, Point::mk_tag(i, pq.second), v);
  return r;
}

inline Mor tuple_mor_empty(const Obj& dom) {
  return Mor(dom, Obj::with(dom.model(), {}));
}

// plus-copairing [f_i] : + X_i -> Y of morphisms with a common codomain.
inline Mor cotuple_mor(const std::vector<Mor>& fs) {
  if (fs.empty()) fail(Errc::Type, "cotuple of zero morphisms needs an explicit codomain");
  std::vector<Obj> doms;
  for (const auto& f : fs) {
    if (!(f.cod == fs[0].cod)) fail(Errc::Type, "cotuple: codomains differ");
    doms.push_back(f.dom);
  }
  Mor r(Obj::plus(fs[0].model(), doms), fs[0].cod);
  for (size_t i = 0; i < fs.size(); ++i)
    for (const auto& [pq, v] : fs[i].e) r.add_entry(Point::mk_tag(i, pq.first), pq.second, v);
  return r;
}

inline Mor with_proj(const Obj& w, size_t i) {
  if (w.kind() != ObjKind::With || i >= w.arity()) fail(Errc::Type, "with_proj: bad object/index");
  Mor r(w, w.kid(i));
  Scalar one = scalar_one(w.semiring());
  for (const auto& p : w.kid(i).web()) r.set_entry(Point::mk_tag(i, p), p, one);
  return r;
}

inline Mor plus_inj(const Obj& s, size_t i) {
  if (s.kind() != ObjKind::Plus || i >= s.arity()) fail(Errc::Type, "plus_inj: bad object/index");
  Mor r(s.kid(i), s);
  Scalar one = scalar_one(s.semiring());
  for (const auto& p : s.kid(i).web()) r.set_entry(p, Point::mk_tag(i, p), one);
  return r;
}

inline Mor sym_mor(const Obj& x, const Obj& y) {
  Mor r(Obj::tensor(x, y), Obj::tensor(y, x));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (const auto& b : y.web())
      r.set_entry(Point::mk_pair(a, b), Point::mk_pair(b, a), one);
  return r;
}

// (X (x) Y) (x) Z -> X (x) (Y (x) Z)
inline Mor assoc_mor(const Obj& x, const Obj& y, const Obj& z) {
  Mor r(Obj::tensor(Obj::tensor(x, y), z), Obj::tensor(x, Obj::tensor(y, z)));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (const auto& b : y.web())
      for (const auto& c : z.web())
        r.set_entry(Point::mk_pair(Point::mk_pair(a, b), c), Point::mk_pair(a, Point::mk_pair(b, c)),
                    one);
  return r;
}

inline Mor assoc_inv_mor(const Obj& x, const Obj& y, const Obj& z) {
  Mor r(Obj::tensor(x, Obj::tensor(y, z)), Obj::tensor(Obj::tensor(x, y), z));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (const auto& b : y.web())
      for (const auto& c : z.web())
        r.set_entry(Point::mk_pair(a, Point::mk_pair(b, c)), Point::mk_pair(Point::mk_pair(a, b), c),
                    one);
  return r;
}

// 1 (x) X -> X and X (x) 1 -> X, with inverses.
inline Mor unitl_mor(const Obj& x) {
  Mor r(Obj::tensor(Obj::unit(x.model()), x), x);
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web()) r.set_entry(Point::mk_pair(Point::mk_unit(), a), a, one);
  return r;
}
inline Mor unitl_inv_mor(const Obj& x) {
  Mor r(x, Obj::tensor(Obj::unit(x.model()), x));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web()) r.set_entry(a, Point::mk_pair(Point::mk_unit(), a), one);
  return r;
}
inline Mor unitr_mor(const Obj& x) {
  Mor r(Obj::tensor(x, Obj::unit(x.model())), x);
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web()) r.set_entry(Point::mk_pair(a, Point::mk_unit()), a, one);
  return r;
}
inline Mor unitr_inv_mor(const Obj& x) {
  Mor r(x, Obj::tensor(x, Obj::unit(x.model())));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web()) r.set_entry(a, Point::mk_pair(a, Point::mk_unit()), one);
  return r;
}

// curry : Mor((G (x) E), F) -> Mor(G, E -o F)
inline Mor curry_mor(const Mor& s) {
  if (s.dom.kind() != ObjKind::Tensor) fail(Errc::Type, "curry: domain is not a tensor");
  Obj g = s.dom.kid(0), eo = s.dom.kid(1);
  Mor r(g, Obj::limpl(eo, s.cod));
  for (const auto& [pq, v] : s.e)
    r.add_entry(pq.first.kids[0], Point::mk_pair(pq.first.kids[1], pq.second), v);
  return r;
}

// uncurry : Mor(G, E -o F) -> Mor(G (x) E, F)
inline Mor uncurry_mor(const Mor& s) {
  if (s.cod.kind() != ObjKind::Limpl) fail(Errc::Type, "uncurry: codomain is not a -o");
  Obj eo = s.cod.kid(0), f = s.cod.kid(1);
  Mor r(Obj::tensor(s.dom, eo), f);
  for (const auto& [pq, v] : s.e)
    r.add_entry(Point::mk_pair(pq.first, pq.second.kids[0]), pq.second.kids[1], v);
  return r;
}

// Matrix transpose (the web-level linear-negation mate).
inline Mor transpose_mor(const Mor& f) {
  Mor r(f.cod, f.dom);
  for (const auto& [pq, v] : f.e) r.set_entry(pq.second, pq.first, v);
  return r;
}

// ev : (E -o F) (x) E -> F
inline Mor ev_mor(const Obj& e, const Obj& f) {
  Mor r(Obj::tensor(Obj::limpl(e, f), e), f);
  Scalar one = scalar_one(e.semiring());
  for (const auto& a : e.web())
    for (const auto& b : f.web())
      r.set_entry(Point::mk_pair(Point::mk_pair(a, b), a), b, one);
  return r;
}

struct Validation {
  bool ok = true;
  std::string why;
};

namespace detail {

// --- PcohNum witness machinery (sound-only, see README) ---

using PVec = std::map<Point, Scalar>;

inline Scalar pvec_at(const PVec& v, const Point& p) {
  auto it = v.find(p);
  return it == v.end() ? scalar_zero(Semiring::RatPos) : it->second;
}

inline std::vector<PVec> pcoh_witnesses(const Obj& x);

inline std::vector<PVec> pcoh_witnesses_atoms(const Obj& x) {
  if (!x.witnesses().empty()) return x.witnesses();
  std::vector<PVec> out;
  // Default subprobability samples: the point masses and a uniform half-mass.
  PVec uni;
  const auto& web = x.web();
  for (const auto& p : web) {
    PVec v;
    v[p] = scalar_one(Semiring::RatPos);
    out.push_back(std::move(v));
    uni[p] = scalar_from_ratio(Semiring::RatPos, mpq_class(1, 2 * web.size()));
  }
  out.push_back(std::move(uni));
  return out;
}

inline std::vector<PVec> pcoh_witnesses(const Obj& x) {
  switch (x.kind()) {
    case ObjKind::Atoms: return pcoh_witnesses_atoms(x);
    case ObjKind::UnitObj: {
      PVec v;
      v[Point::mk_unit()] = scalar_one(Semiring::RatPos);
      return {v};
    }
    case ObjKind::Degrees: {
      PVec all;
      for (const auto& p : x.web()) all[p] = scalar_one(Semiring::RatPos);
      return {all};
    }
    case ObjKind::Tensor: {
      std::vector<PVec> out;
      for (const auto& a : pcoh_witnesses(x.kid(0)))
        for (const auto& b : pcoh_witnesses(x.kid(1))) {
          PVec v;
          for (const auto& [p, s] : a)
            for (const auto& [q, t] : b) v[Point::mk_pair(p, q)] = scalar_mul(s, t);
          out.push_back(std::move(v));
        }
      return out;
    }
    case ObjKind::With: {
      // One representative tuple: the i-th stored witness of each component
      // (cycled); plus per-component injections.
      std::vector<PVec> out;
      for (size_t i = 0; i < x.arity(); ++i)
        for (const auto& w : pcoh_witnesses(x.kid(i))) {
          PVec v;
          for (const auto& [p, s] : w) v[Point::mk_tag(i, p)] = s;
          out.push_back(std::move(v));
        }
      return out;
    }
    case ObjKind::Plus: {
      std::vector<PVec> out;
      for (size_t i = 0; i < x.arity(); ++i)
        for (const auto& w : pcoh_witnesses(x.kid(i))) {
          PVec v;
          for (const auto& [p, s] : w) v[Point::mk_tag(i, p)] = s;
          out.push_back(std::move(v));
        }
      return out;
    }
    case ObjKind::Bang: {
      std::vector<PVec> out;
      for (const auto& w : pcoh_witnesses(x.kid(0))) {
        PVec v;
        for (const auto& m : x.web()) {
          Scalar prod = scalar_one(Semiring::RatPos);
          for (const auto& elem : m.kids) prod = scalar_mul(prod, pvec_at(w, elem));
          if (!scalar_is_zero(prod)) v[m] = prod;
        }
        out.push_back(std::move(v));
      }
      return out;
    }
    case ObjKind::Limpl: {
      if (!x.is_s_obj()) return {};  // unsupported shape: no samples
      std::vector<PVec> out;
      unsigned long dmax = x.s_bound();
      for (const auto& w : pcoh_witnesses(x.kid(1))) {
        PVec v0;  // everything at degree 0
        for (const auto& [p, s] : w) v0[Point::mk_pair(Point::mk_deg(0), p)] = s;
        out.push_back(std::move(v0));
        PVec vu;  // uniform split across degrees
        Scalar frac = scalar_from_ratio(Semiring::RatPos, mpq_class(1, dmax + 1));
        for (unsigned long i = 0; i <= dmax; ++i)
          for (const auto& [p, s] : w)
            vu[Point::mk_pair(Point::mk_deg(i), p)] = scalar_mul(s, frac);
        out.push_back(std::move(vu));
      }
      return out;
    }
    case ObjKind::Raw: return {};
  }
  return {};
}

// Necessary conditions for membership in the probability set of x (never
// rejects a genuinely valid vector). Returns false only on a definite
// violation.
inline bool pcoh_bounded(const Obj& x, const PVec& v);

inline bool pcoh_mass_at_most_one(const PVec& v) {
  mpq_class mass = 0;
  for (const auto& [p, s] : v) {
    if (s.inf) return false;
    mass += s.q;
  }
  return mass <= 1;
}

inline bool pcoh_bounded(const Obj& x, const PVec& v) {
  switch (x.kind()) {
    case ObjKind::Atoms:
    case ObjKind::UnitObj:
      return pcoh_mass_at_most_one(v);
    case ObjKind::Degrees: {
      for (const auto& [p, s] : v)
        if (s.inf || s.q > 1) return false;
      return true;
    }
    case ObjKind::Tensor: {
      // Exact for subprobability bases; necessary in general only when both
      // factors are mass-style, so restrict to that case.
      if ((x.kid(0).kind() == ObjKind::Atoms || x.kid(0).kind() == ObjKind::UnitObj) &&
          (x.kid(1).kind() == ObjKind::Atoms || x.kid(1).kind() == ObjKind::UnitObj))
        return pcoh_mass_at_most_one(v);
      return true;
    }
    case ObjKind::With: {
      for (size_t i = 0; i < x.arity(); ++i) {
        PVec comp;
        for (const auto& [p, s] : v)
          if (p.k == PointKind::Tag && p.n == i) comp[p.kids[0]] = s;
        if (!pcoh_bounded(x.kid(i), comp)) return false;
      }
      return true;
    }
    case ObjKind::Plus: {
      // Necessary: every component restriction lies in the component set.
      for (size_t i = 0; i < x.arity(); ++i) {
        PVec comp;
        for (const auto& [p, s] : v)
          if (p.k == PointKind::Tag && p.n == i) comp[p.kids[0]] = s;
        if (!pcoh_bounded(x.kid(i), comp)) return false;
      }
      return true;
    }
    case ObjKind::Bang: {
      // Testing against the zero promotion: the empty-bag coordinate is <= 1.
      Scalar s = pvec_at(v, Point::mk_bag({}));
      return !s.inf && s.q <= 1;
    }
    case ObjKind::Limpl: {
      if (!x.is_s_obj()) return true;  // unchecked shape
      PVec summed;
      for (const auto& [p, s] : v) {
        if (p.k != PointKind::Pair) return false;
        auto it = summed.find(p.kids[1]);
        if (it == summed.end())
          summed[p.kids[1]] = s;
        else
          it->second = scalar_add(it->second, s);
      }
      return pcoh_bounded(x.kid(1), summed);
    }
    case ObjKind::Raw: return true;
  }
  return true;
}

inline PVec pcoh_apply(const Mor& f, const PVec& x) {
  PVec y;
  for (const auto& [pq, v] : f.e) {
    Scalar xa = pvec_at(x, pq.first);
    if (scalar_is_zero(xa)) continue;
    Scalar add = scalar_mul(v, xa);
    auto it = y.find(pq.second);
    if (it == y.end())
      y[pq.second] = add;
    else
      it->second = scalar_add(it->second, add);
  }
  return y;
}

inline Validation pcoh_validate(const Mor& f) {
  for (const auto& w : pcoh_witnesses(f.dom)) {
    PVec y = pcoh_apply(f, w);
    if (!pcoh_bounded(f.cod, y))
      return {false, "pcoh witness image violates codomain bound"};
  }
  return {true, ""};
}

}  // namespace detail

inline Validation validate(const Mor& f) {
  Semiring sr = f.semiring();
  for (const auto& [pq, v] : f.e) {
    if (v.sr != sr) return {false, "scalar semiring mismatch"};
    if (scalar_is_zero(v)) return {false, "stored zero entry"};
    if (!f.dom.contains(pq.first))
      return {false, "domain point not in web: " + point_text(pq.first)};
    if (!f.cod.contains(pq.second))
      return {false, "codomain point not in web: " + point_text(pq.second)};
  }
  if (model_has_coherence(f.model())) {
    // Entries must form a clique of dom -o cod (self-pairs included).
    std::vector<const std::pair<Point, Point>*> es;
    for (const auto& [pq, v] : f.e) es.push_back(&pq);
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i; j < es.size(); ++j) {
        Status s = status_limpl(f.dom.status(es[i]->first, es[j]->first),
                                f.cod.status(es[i]->second, es[j]->second));
        if (!status_coh(s))
          return {false, "entries " + point_text(es[i]->first) + "->" + point_text(es[i]->second) +
                             " and " + point_text(es[j]->first) + "->" + point_text(es[j]->second) +
                             " are strictly incoherent in dom -o cod"};
      }
  }
  if (f.model() == Model::PcohNum) return detail::pcoh_validate(f);
  return {true, ""};
}

// Partial sum of a finite family of parallel morphisms. Summability is
// model-dependent:
//   Rel/WRel*: always defined, pointwise.
//   Wcs:  union of supports is a clique of dom -o cod.
//   Coh:  additionally the supports are pairwise disjoint.
//   Nucs: union is a clique and entries of distinct members are pairwise
//         strictly coherent in dom -o cod.
//   PcohNum: pointwise sum passes the witness validation.
inline std::optional<Mor> partial_sum(const std::vector<Mor>& fs, std::string* why = nullptr) {
  auto reject = [&](const std::string& r) -> std::optional<Mor> {
    if (why) *why = r;
    return std::nullopt;
  };
  if (fs.empty()) fail(Errc::Type, "partial_sum of an empty family needs dom/cod; use zero_mor");
  for (const auto& f : fs)
    if (!(f.dom == fs[0].dom) || !(f.cod == fs[0].cod))
      fail(Errc::Type, "partial_sum: members are not parallel");
  Model m = fs[0].model();

  Mor sum(fs[0].dom, fs[0].cod);
  for (const auto& f : fs)
    for (const auto& [pq, v] : f.e) sum.add_entry(pq.first, pq.second, v);

  if (m == Model::Wcs || m == Model::Coh || m == Model::Nucs) {
    std::vector<std::pair<const std::pair<Point, Point>*, size_t>> all;
    for (size_t i = 0; i < fs.size(); ++i)
      for (const auto& [pq, v] : fs[i].e) all.push_back({&pq, i});
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) {
        const auto& [e1, o1] = all[i];
        const auto& [e2, o2] = all[j];
        if (m == Model::Coh && o1 != o2 && *e1 == *e2)
          return reject("supports overlap at " + point_text(e1->first) + "->" + point_text(e1->second));
        Status s = status_limpl(fs[0].dom.status(e1->first, e2->first),
                                fs[0].cod.status(e1->second, e2->second));
        if (!status_coh(s)) return reject("union support is not a clique");
        if (m == Model::Nucs && o1 != o2 && s != Status::SCoh)
          return reject("entries of distinct members are not strictly coherent");
      }
  }
  if (m == Model::PcohNum) {
    Validation v = detail::pcoh_validate(sum);
    if (!v.ok) return reject("sum fails witness validation: " + v.why);
  }
  return sum;
}

inline Mor partial_sum_checked(const std::vector<Mor>& fs) {
  std::string why;
  auto r = partial_sum(fs, &why);
  if (!r) fail(Errc::NotSummable, "family is not summable: " + why);
  return *r;
}

}  // namespace cohtaylor
