#pragma once
#include <algorithm>
#include <utility>
#include <vector>

#include "cohtaylor/exponential.hpp"
#include "cohtaylor/rows.hpp"
#include "cohtaylor/summability.hpp"

namespace cohtaylor {

// --- Analytic coalgebra on the degrees object: D -> !D ---
// Entry (n, q) = 1 iff q is a bag of degrees (zeros allowed) of size <= d
// whose plain sum is n. 0/1-valued in every model.
inline Mor coalgebra_d_mor(Model m, unsigned long d, unsigned long dmax) {
  Obj dobj = Obj::degrees(m, dmax);
  Mor r(dobj, Obj::bang(dobj, d));
  Scalar one = scalar_one(model_semiring(m));
  std::vector<Point> cur;
  // Choose multiplicities for degree values v = dmax..1, then pad with zeros.
  auto rec = [&](auto&& self, unsigned long v, unsigned long sum_left, unsigned long size_left,
                 unsigned long total) -> void {
    if (v == 0) {
      if (sum_left != 0) return;
      std::vector<Point> bag = cur;
      for (unsigned long z = 0; z <= size_left; ++z) {
        r.set_entry(Point::mk_deg(total), Point::mk_bag(bag), one);
        bag.push_back(Point::mk_deg(0));
      }
      return;
    }
    unsigned long cmax = std::min(size_left, sum_left / v);
    for (unsigned long c = 0; c <= cmax; ++c) {
      for (unsigned long i = 0; i < c; ++i) cur.push_back(Point::mk_deg(v));
      self(self, v - 1, sum_left - c * v, size_left - c, total);
      for (unsigned long i = 0; i < c; ++i) cur.pop_back();
    }
  };
  for (unsigned long n = 0; n <= dmax; ++n) rec(rec, dmax, n, d, n);
  return r;
}

// --- Distributive law !(S X) -> S(!X), computed from primitives ---
// curry( !ev ∘ monoidal-! ∘ (id ⊗ coalgebra) ); no closed formula here.
inline Mor sdl_pipeline_mor(const Obj& x, unsigned long d, unsigned long dmax) {
  Model m = x.model();
  Obj dobj = Obj::degrees(m, dmax);
  Obj sx = Obj::s_of(x, dmax);
  Mor bev = bang_mor(ev_mor(dobj, x), d);        // !(S X (x) D) -> !X
  Mor oc = ocmont_mor(sx, dobj, d);              // !S X (x) !D -> !(S X (x) D)
  Mor step = tensor_mor(identity(Obj::bang(sx, d)), coalgebra_d_mor(m, d, dmax));
  return curry_mor(compose(bev, compose(oc, step)));
}

// --- Closed-form distributive law ---
// Entry (p, (n, m)) = m!/p! when p = [(i1,a1)..(ik,ak)], n = sum of the i's,
// m = [a1..ak]; the quotient is computed over exact rationals, checked to be
// a natural number, and embedded (so it collapses to 1 in bool). Each source
// bag has at most one target, so the row form is cheap at any object.
inline RowFn rows_sdl(const Obj& x, unsigned long d, unsigned long dmax) {
  Obj cod = Obj::s_of(Obj::bang(x, d), dmax);
  Semiring sr = x.semiring();
  return [cod, sr, dmax](const Point& pb) -> Row {
    Multiset p = Multiset::from_bag_point(pb);
    unsigned long n = 0;
    Multiset m;
    for (const auto& [sp, c] : p.mul) {
      n += sp.kids[0].n * c;  // the degree half of the pair (i, a)
      m.add(sp.kids[1], c);
    }
    if (n > dmax) return {};
    Point cp = Point::mk_pair(Point::mk_deg(n), m.to_bag_point());
    if (!cod.contains(cp)) return {};
    mpq_class coef(m.fact());
    coef /= mpq_class(p.fact());
    return {{cp, scalar_embed_integer(sr, coef)}};
  };
}

inline Mor sdl_explicit_mor(const Obj& x, unsigned long d, unsigned long dmax) {
  Obj bsx = Obj::bang(Obj::s_of(x, dmax), d);
  Obj cod = Obj::s_of(Obj::bang(x, d), dmax);
  return materialize_rows(bsx, cod, rows_sdl(x, d, dmax));
}

// --- Taylor functor on coKleisli morphisms: T(s) : !(S X) -> S Y ---
// Closed form: entry ([(i1,a1)..(ik,ak)], (n, b)) = (m!/p!)·s_{m,b} when
// n = sum of the i's and m = [a1..ak]. Entry-driven over the support of s.
inline Mor taylor_functor_mor(const Mor& s, unsigned long dmax) {
  if (s.dom.kind() != ObjKind::Bang) fail(Errc::Type, "taylor: domain is not a !-object");
  Obj x = s.dom.kid(0);
  Obj bsx = Obj::bang(Obj::s_of(x, dmax), s.dom.bound());
  Obj cod = Obj::s_of(s.cod, dmax);
  Mor r(bsx, cod);
  Semiring sr = s.semiring();
  for (const auto& [pq, v] : s.e) {
    Multiset m = Multiset::from_bag_point(pq.first);
    std::vector<std::pair<Point, unsigned long>> supp(m.mul.begin(), m.mul.end());
    std::vector<Point> pvec;
    auto emit = [&](unsigned long n) {
      Point pb = Point::mk_bag(pvec);
      if (!bsx.contains(pb)) return;  // drops non-clique decorations in coh
      Multiset p = Multiset::from_vector(pvec);
      mpq_class coef(m.fact());
      coef /= mpq_class(p.fact());
      r.set_entry(pb, Point::mk_pair(Point::mk_deg(n), pq.second),
                  scalar_mul(scalar_embed_integer(sr, coef), v));
    };
    // Decorate the k copies of each support element with a non-decreasing
    // degree sequence; the running total prunes at the bound.
    auto rec = [&](auto&& self, size_t idx, unsigned long left, unsigned long minv,
                   unsigned long total) -> void {
      if (total > dmax) return;
      if (idx == supp.size()) {
        emit(total);
        return;
      }
      if (left == 0) {
        self(self, idx + 1, idx + 1 < supp.size() ? supp[idx + 1].second : 0, 0, total);
        return;
      }
      for (unsigned long deg = minv; deg + total <= dmax; ++deg) {
        pvec.push_back(Point::mk_pair(Point::mk_deg(deg), supp[idx].first));
        self(self, idx, left - 1, deg, total + deg);
        pvec.pop_back();
      }
    };
    if (supp.empty())
      emit(0);
    else
      rec(rec, 0, supp[0].second, 0, 0);
  }
  return r;
}

// The same functor computed through the distributive law: S(s) ∘ ∂.
inline Mor taylor_via_sdl_mor(const Mor& s, unsigned long dmax, bool use_pipeline = true) {
  if (s.dom.kind() != ObjKind::Bang) fail(Errc::Type, "taylor: domain is not a !-object");
  Obj x = s.dom.kid(0);
  unsigned long d = s.dom.bound();
  Mor sdl = use_pipeline ? sdl_pipeline_mor(x, d, dmax) : sdl_explicit_mor(x, d, dmax);
  return compose(s_mor(s, dmax), sdl);
}

// Homogeneous component n of a coKleisli morphism: proj_n ∘ T(s) ∘ !inj_1.
inline Mor homogeneous_mor(const Mor& s, unsigned long n, unsigned long dmax) {
  if (s.dom.kind() != ObjKind::Bang) fail(Errc::Type, "homog: domain is not a !-object");
  if (n > dmax) fail(Errc::Type, "homog: component index exceeds the degree bound");
  Obj x = s.dom.kid(0);
  Mor binj = bang_mor(sinj_mor(x, dmax, 1), s.dom.bound());
  Mor t = taylor_functor_mor(s, dmax);
  return compose(sproj_mor(s.cod, dmax, n), compose(t, binj));
}

// --- The isomorphism !1 ≅ D of finitary models ---
// Forward: tupling of the n-ary generalized derelictions of !1, each built
// from weakening, dereliction, contraction and unitors only.
// Inverse: !(projection at degree 1) ∘ coalgebra.
inline std::pair<Mor, Mor> deg_iso_mor(Model m, unsigned long d, unsigned long dmax) {
  if (dmax == 0) fail(Errc::Type, "deg iso needs a positive degree bound");
  Obj one = Obj::unit(m);
  Obj bone = Obj::bang(one, d);
  Obj dobj = Obj::degrees(m, dmax);
  std::vector<Mor> comp;  // comp[n] : !1 -> 1, nonzero only on the n-element bag
  comp.push_back(weak_mor(one, d));
  comp.push_back(der_mor(one, d));
  for (unsigned long n = 2; n <= dmax; ++n)
    comp.push_back(compose(
        unitl_mor(one), compose(tensor_mor(comp[n - 1], der_mor(one, d)), contr_mor(one, d))));
  Mor fwd(bone, dobj);
  for (unsigned long n = 0; n <= dmax; ++n)
    for (const auto& [pq, v] : comp[n].e) fwd.add_entry(pq.first, Point::mk_deg(n), v);
  Mor inv = compose(bang_mor(wproj_mor(m, dmax, 1), d), coalgebra_d_mor(m, d, dmax));
  return {fwd, inv};
}

// --- The alternative (indexed-linear-logic) exponential of nucs ---
// Only its object construction exists, for the negative check: a pair of bags
// is compared through its combined enumeration. Coherent when that whole
// enumeration is pairwise large-coherent; strictly coherent when additionally
// some element is strictly coherent with every other one.
inline Status ocbe_status(const Obj& x, const Point& pa, const Point& pb) {
  std::vector<Point> all = Multiset::from_bag_point(pa).expand();
  for (const auto& q : Multiset::from_bag_point(pb).expand()) all.push_back(q);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!status_coh(x.status(all[i], all[j]))) return Status::SIncoh;
  for (size_t i = 0; i < all.size(); ++i) {
    bool dominates = true;
    for (size_t j = 0; j < all.size() && dominates; ++j)
      if (j != i && x.status(all[i], all[j]) != Status::SCoh) dominates = false;
    if (dominates) return Status::SCoh;
  }
  return Status::Neutral;
}

inline Obj ocbe_obj(const Obj& x, unsigned long d) {
  if (x.model() != Model::Nucs)
    fail(Errc::Type, "the alternative exponential is built for nucs only");
  const auto& base = x.web();
  std::vector<Point> web;
  std::vector<Point> cur;
  auto rec = [&](auto&& self, size_t start, unsigned long left) -> void {
    web.push_back(Point::mk_bag(cur));
    if (left == 0) return;
    for (size_t i = start; i < base.size(); ++i) {
      cur.push_back(base[i]);
      self(self, i, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, d);
  std::map<std::pair<Point, Point>, Status> st;
  for (const auto& p : web)
    for (const auto& q : web) st[{p, q}] = ocbe_status(x, p, q);
  return Obj::raw(Model::Nucs, web, st);
}

// Exhaustive search for the negative result: counts the status-preserving
// bijections between the truncated degrees web and the truncated web of the
// alternative exponential of 1. The expected count is zero for caps >= 2.
inline unsigned long count_degree_ocbe_isos(unsigned long cap) {
  Obj dobj = Obj::degrees(Model::Nucs, cap);
  Obj be = ocbe_obj(Obj::unit(Model::Nucs), cap);
  const auto& dw = dobj.web();
  const auto& bw = be.web();
  if (dw.size() != bw.size()) return 0;
  std::vector<size_t> perm(dw.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  unsigned long found = 0;
  do {
    bool ok = true;
    for (size_t i = 0; i < dw.size() && ok; ++i)
      for (size_t j = 0; j < dw.size() && ok; ++j)
        if (dobj.status(dw[i], dw[j]) != be.status(bw[perm[i]], bw[perm[j]])) ok = false;
    if (ok) ++found;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace cohtaylor
