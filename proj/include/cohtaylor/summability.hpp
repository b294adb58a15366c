#pragma once
#include <optional>
#include <vector>

#include "cohtaylor/morphism.hpp"

namespace cohtaylor {

// --- The degrees object D (truncated at max degree) and its bimonoid ---

inline Mor w_mor(Model m, unsigned long dmax, unsigned long i) {
  if (i > dmax) fail(Errc::Type, "degree injection out of range");
  Mor r(Obj::unit(m), Obj::degrees(m, dmax));
  r.set_entry(Point::mk_unit(), Point::mk_deg(i), scalar_one(model_semiring(m)));
  return r;
}

// w-bar: 1 -> D hitting every degree (the monoid unit).
inline Mor diag_mor(Model m, unsigned long dmax) {
  Mor r(Obj::unit(m), Obj::degrees(m, dmax));
  Scalar one = scalar_one(model_semiring(m));
  for (unsigned long i = 0; i <= dmax; ++i) r.set_entry(Point::mk_unit(), Point::mk_deg(i), one);
  return r;
}

// Counit (projection at degree 0): D -> 1.
inline Mor counit_d_mor(Model m, unsigned long dmax) {
  Mor r(Obj::degrees(m, dmax), Obj::unit(m));
  r.set_entry(Point::mk_deg(0), Point::mk_unit(), scalar_one(model_semiring(m)));
  return r;
}

// Projection at degree i: D -> 1.
inline Mor wproj_mor(Model m, unsigned long dmax, unsigned long i) {
  if (i > dmax) fail(Errc::Type, "degree projection out of range");
  Mor r(Obj::degrees(m, dmax), Obj::unit(m));
  r.set_entry(Point::mk_deg(i), Point::mk_unit(), scalar_one(model_semiring(m)));
  return r;
}

// Comultiplication: D -> D (x) D, n |-> sum of (i, n-i).
inline Mor comult_d_mor(Model m, unsigned long dmax) {
  Obj dd = Obj::degrees(m, dmax);
  Mor r(dd, Obj::tensor(dd, dd));
  Scalar one = scalar_one(model_semiring(m));
  for (unsigned long n = 0; n <= dmax; ++n)
    for (unsigned long i = 0; i <= n; ++i)
      r.set_entry(Point::mk_deg(n), Point::mk_pair(Point::mk_deg(i), Point::mk_deg(n - i)), one);
  return r;
}

// Multiplication: D (x) D -> D, (i,i) |-> i, off-diagonal 0.
inline Mor mult_d_mor(Model m, unsigned long dmax) {
  Obj dd = Obj::degrees(m, dmax);
  Mor r(Obj::tensor(dd, dd), dd);
  Scalar one = scalar_one(model_semiring(m));
  for (unsigned long i = 0; i <= dmax; ++i)
    r.set_entry(Point::mk_pair(Point::mk_deg(i), Point::mk_deg(i)), Point::mk_deg(i), one);
  return r;
}

// --- The summability functor S X = D -o X and its bimonad structure ---
// Every map below is the mate of a degrees-bimonoid map; they are 0/1 point
// translations in every model.

inline Mor s_mor(const Mor& f, unsigned long dmax) {
  Mor r(Obj::s_of(f.dom, dmax), Obj::s_of(f.cod, dmax));
  for (const auto& [pq, v] : f.e)
    for (unsigned long i = 0; i <= dmax; ++i)
      r.add_entry(Point::mk_pair(Point::mk_deg(i), pq.first), Point::mk_pair(Point::mk_deg(i), pq.second),
                  v);
  return r;
}

// pi_i : S X -> X.
inline Mor sproj_mor(const Obj& x, unsigned long dmax, unsigned long i) {
  if (i > dmax) fail(Errc::Type, "s-projection out of range");
  Mor r(Obj::s_of(x, dmax), x);
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web()) r.set_entry(Point::mk_pair(Point::mk_deg(i), a), a, one);
  return r;
}

// iota_i : X -> S X.
inline Mor sinj_mor(const Obj& x, unsigned long dmax, unsigned long i) {
  if (i > dmax) fail(Errc::Type, "s-injection out of range");
  Mor r(x, Obj::s_of(x, dmax));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web()) r.set_entry(a, Point::mk_pair(Point::mk_deg(i), a), one);
  return r;
}

// sigma = sum of all projections (exercises the summability structure).
inline Mor sigma_mor(const Obj& x, unsigned long dmax) {
  std::vector<Mor> projs;
  for (unsigned long i = 0; i <= dmax; ++i) projs.push_back(sproj_mor(x, dmax, i));
  return partial_sum_checked(projs);
}

// theta : S S X -> S X, (i,(j,a)) |-> (i+j, a); entries beyond the bound drop.
inline Mor theta_mor(const Obj& x, unsigned long dmax) {
  Obj sx = Obj::s_of(x, dmax);
  Mor r(Obj::s_of(sx, dmax), sx);
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (unsigned long i = 0; i <= dmax; ++i)
      for (unsigned long j = 0; i + j <= dmax; ++j)
        r.set_entry(Point::mk_pair(Point::mk_deg(i), Point::mk_pair(Point::mk_deg(j), a)),
                    Point::mk_pair(Point::mk_deg(i + j), a), one);
  return r;
}

// lift = <iota_i o pi_i> : S X -> S S X, (i,a) |-> (i,(i,a)).
inline Mor lift_mor(const Obj& x, unsigned long dmax) {
  Obj sx = Obj::s_of(x, dmax);
  Mor r(sx, Obj::s_of(sx, dmax));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (unsigned long i = 0; i <= dmax; ++i)
      r.set_entry(Point::mk_pair(Point::mk_deg(i), a),
                  Point::mk_pair(Point::mk_deg(i), Point::mk_pair(Point::mk_deg(i), a)), one);
  return r;
}

// c : S S X -> S S X, (i,(j,a)) |-> (j,(i,a)).
inline Mor sswap_mor(const Obj& x, unsigned long dmax) {
  Obj ssx = Obj::s_of(Obj::s_of(x, dmax), dmax);
  Mor r(ssx, ssx);
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (unsigned long i = 0; i <= dmax; ++i)
      for (unsigned long j = 0; j <= dmax; ++j)
        r.set_entry(Point::mk_pair(Point::mk_deg(i), Point::mk_pair(Point::mk_deg(j), a)),
                    Point::mk_pair(Point::mk_deg(j), Point::mk_pair(Point::mk_deg(i), a)), one);
  return r;
}

// Left strength: S X (x) Y -> S (X (x) Y).
inline Mor sstr_l_mor(const Obj& x, const Obj& y, unsigned long dmax) {
  Mor r(Obj::tensor(Obj::s_of(x, dmax), y), Obj::s_of(Obj::tensor(x, y), dmax));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (const auto& b : y.web())
      for (unsigned long i = 0; i <= dmax; ++i)
        r.set_entry(Point::mk_pair(Point::mk_pair(Point::mk_deg(i), a), b),
                    Point::mk_pair(Point::mk_deg(i), Point::mk_pair(a, b)), one);
  return r;
}

// Right strength: X (x) S Y -> S (X (x) Y).
inline Mor sstr_r_mor(const Obj& x, const Obj& y, unsigned long dmax) {
  Mor r(Obj::tensor(x, Obj::s_of(y, dmax)), Obj::s_of(Obj::tensor(x, y), dmax));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (const auto& b : y.web())
      for (unsigned long i = 0; i <= dmax; ++i)
        r.set_entry(Point::mk_pair(a, Point::mk_pair(Point::mk_deg(i), b)),
                    Point::mk_pair(Point::mk_deg(i), Point::mk_pair(a, b)), one);
  return r;
}

// Bilinear distribution: S X (x) S Y -> S (X (x) Y), degrees add.
inline Mor sdist_mor(const Obj& x, const Obj& y, unsigned long dmax) {
  Mor r(Obj::tensor(Obj::s_of(x, dmax), Obj::s_of(y, dmax)), Obj::s_of(Obj::tensor(x, y), dmax));
  Scalar one = scalar_one(x.semiring());
  for (const auto& a : x.web())
    for (const auto& b : y.web())
      for (unsigned long i = 0; i <= dmax; ++i)
        for (unsigned long j = 0; i + j <= dmax; ++j)
          r.set_entry(Point::mk_pair(Point::mk_pair(Point::mk_deg(i), a), Point::mk_pair(Point::mk_deg(j), b)),
                      Point::mk_pair(Point::mk_deg(i + j), Point::mk_pair(a, b)), one);
  return r;
}

// S (& X_t) -> & (S X_t) and its inverse (an isomorphism).
inline Mor sproddist_mor(const Obj& w, unsigned long dmax) {
  if (w.kind() != ObjKind::With) fail(Errc::Type, "sproddist expects a with-object");
  std::vector<Obj> scomps;
  for (size_t t = 0; t < w.arity(); ++t) scomps.push_back(Obj::s_of(w.kid(t), dmax));
  Mor r(Obj::s_of(w, dmax), Obj::with(w.model(), scomps));
  Scalar one = scalar_one(w.semiring());
  for (size_t t = 0; t < w.arity(); ++t)
    for (const auto& c : w.kid(t).web())
      for (unsigned long i = 0; i <= dmax; ++i)
        r.set_entry(Point::mk_pair(Point::mk_deg(i), Point::mk_tag(t, c)),
                    Point::mk_tag(t, Point::mk_pair(Point::mk_deg(i), c)), one);
  return r;
}

inline Mor sproddist_inv_mor(const Obj& w, unsigned long dmax) {
  Mor fwd = sproddist_mor(w, dmax);
  Mor r(fwd.cod, fwd.dom);
  for (const auto& [pq, v] : fwd.e) r.set_entry(pq.second, pq.first, v);
  return r;
}

// Summability witness: the family <f_i> is summable iff its tupling into
// S cod is a legal morphism, which partial_sum decides.
inline std::optional<Mor> witness_mor(const std::vector<Mor>& fs, unsigned long dmax,
                                      std::string* why = nullptr) {
  if (fs.empty()) fail(Errc::Type, "witness of an empty family");
  if (fs.size() > dmax + 1) fail(Errc::Type, "witness: family longer than degree bound");
  if (!partial_sum(fs, why)) return std::nullopt;
  Mor h(fs[0].dom, Obj::s_of(fs[0].cod, dmax));
  for (size_t i = 0; i < fs.size(); ++i)
    for (const auto& [pq, v] : fs[i].e)
      h.add_entry(pq.first, Point::mk_pair(Point::mk_deg(i), pq.second), v);
  return h;
}

}  // namespace cohtaylor
