#pragma once
#include <string>
#include <utility>
#include <vector>

#include "cohtaylor/taylor.hpp"

namespace cohtaylor {

// A finitely supported vector over the web of an object, with exact
// nonnegative rational coordinates.
struct Vec {
  Obj web;
  std::map<Point, Scalar> coords;

  explicit Vec(Obj w) : web(std::move(w)) {
    if (web.semiring() != Semiring::RatPos)
      fail(Errc::Type, "the functional layer works over rat-pos models");
  }
  Scalar at(const Point& p) const {
    auto it = coords.find(p);
    return it == coords.end() ? scalar_zero(Semiring::RatPos) : it->second;
  }
  void set(const Point& p, const Scalar& s) {
    if (!web.contains(p)) fail(Errc::Validity, "vector coordinate outside the web: " + point_text(p));
    if (scalar_is_zero(s))
      coords.erase(p);
    else
      coords[p] = s;
  }
  void add(const Point& p, const Scalar& s) { set(p, scalar_add(at(p), s)); }

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords == b.coords; }
};

// x^m: the product of coordinate powers prescribed by the multiset.
inline Scalar vec_pow(const Vec& x, const Multiset& m) {
  Scalar r = scalar_one(Semiring::RatPos);
  for (const auto& [a, c] : m.mul) {
    r = scalar_mul(r, scalar_pow(x.at(a), c));
    if (scalar_is_zero(r)) return r;
  }
  return r;
}

// Entire-function application: (Fun t (x))_b = sum over m of t_{m,b} x^m.
inline Vec fun_apply(const Mor& t, const Vec& x) {
  if (t.dom.kind() != ObjKind::Bang) fail(Errc::Type, "fun: domain is not a !-object");
  if (!same_interface(t.dom.kid(0), x.web)) fail(Errc::Type, "fun: vector web mismatch");
  Vec r(t.cod);
  for (const auto& [pq, v] : t.e)
    r.add(pq.second, scalar_mul(v, vec_pow(x, Multiset::from_bag_point(pq.first))));
  return r;
}

// n-th derivative at x in directions us:
//   Deriv^n(t)(x)(u_1..u_n)_b = sum over q, (a_1..a_n) with [a..] <= q of
//     (q!/(q-[a..])!) t_{q,b} x^{q-[a..]} u_1(a_1)···u_n(a_n).
// Symmetric and multi-additive in the us within the truncation.
inline Vec deriv(const Mor& t, const Vec& x, const std::vector<Vec>& us) {
  if (t.dom.kind() != ObjKind::Bang) fail(Errc::Type, "deriv: domain is not a !-object");
  Vec r(t.cod);
  size_t n = us.size();
  for (const auto& [pq, v] : t.e) {
    Multiset q = Multiset::from_bag_point(pq.first);
    Multiset picked;
    Scalar dirfac = scalar_one(Semiring::RatPos);
    auto rec = [&](auto&& self, size_t i, Scalar fac) -> void {
      if (scalar_is_zero(fac)) return;
      if (i == n) {
        Multiset rest;
        for (const auto& [a, c] : q.mul) {
          unsigned long p = picked.count(a);
          if (c > p) rest.add(a, c - p);
        }
        mpq_class coef(q.fact());
        coef /= mpq_class(rest.fact());
        Scalar term = scalar_mul(v, scalar_from_ratio(Semiring::RatPos, coef));
        term = scalar_mul(term, vec_pow(x, rest));
        r.add(pq.second, scalar_mul(term, fac));
        return;
      }
      for (const auto& [a, c] : q.mul) {
        if (picked.count(a) >= c) continue;
        Scalar ua = us[i].at(a);
        if (scalar_is_zero(ua)) continue;
        picked.add(a);
        self(self, i + 1, scalar_mul(fac, ua));
        picked.mul[a]--;
        if (picked.mul[a] == 0) picked.mul.erase(a);
      }
    };
    rec(rec, 0, dirfac);
  }
  return r;
}

// The promotion of a degree-indexed family (x(0)..x(D)) into one vector over
// the web of S X.
inline Vec s_promote(const std::vector<Vec>& xs, unsigned long dmax) {
  if (xs.size() != dmax + 1) fail(Errc::Type, "promotion needs degree-bound + 1 components");
  Vec r(Obj::s_of(xs[0].web, dmax));
  for (unsigned long i = 0; i <= dmax; ++i)
    for (const auto& [a, v] : xs[i].coords) r.set(Point::mk_pair(Point::mk_deg(i), a), v);
  return r;
}

// Splits a vector over S Y back into its degree components.
inline std::vector<Vec> s_components(const Vec& y, const Obj& base, unsigned long dmax) {
  std::vector<Vec> out(dmax + 1, Vec(base));
  for (const auto& [p, v] : y.coords) out[p.kids[0].n].set(p.kids[1], v);
  return out;
}

// The functional Taylor expansion as a closed Faa di Bruno sum:
//   component n = sum over mu in mpart(n) of (1/mu!) Deriv^{|mu|}(t)(x(0))
//                 evaluated at the arguments x(i), repeated mu(i) times.
inline std::vector<Vec> taylor_functional(const Mor& t, const std::vector<Vec>& xs,
                                          unsigned long dmax) {
  if (xs.size() != dmax + 1) fail(Errc::Type, "taylor_functional needs degree-bound + 1 inputs");
  std::vector<Vec> out;
  for (unsigned long n = 0; n <= dmax; ++n) {
    Vec comp(t.cod);
    for (const auto& mu : mpart(n)) {
      std::vector<Vec> args;
      for (const auto& [i, c] : mu)
        for (unsigned long k = 0; k < c; ++k) args.push_back(xs[i]);
      Vec d = deriv(t, xs[0], args);
      Scalar w = scalar_inv(scalar_from_nat(Semiring::RatPos, nat_multiset_fact(mu)));
      for (const auto& [b, v] : d.coords) comp.add(b, scalar_mul(w, v));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// --- Boundedness reports for the numeric power-series model ---

struct BoundReport {
  bool ok = true;
  std::string violation;  // first offending witness/coordinate, empty when ok
};

// Checks Fun t(x) against the decidable codomain bound for every supplied
// witness. The bound test is the sound-only membership check of the model.
inline BoundReport fun_bound_check(const Mor& t, const std::vector<Vec>& xs) {
  BoundReport rep;
  for (const auto& x : xs) {
    Vec y = fun_apply(t, x);
    if (!detail::pcoh_bounded(t.cod, y.coords)) {
      rep.ok = false;
      rep.violation = "image of a witness exceeds the codomain bound";
      return rep;
    }
  }
  return rep;
}

// Checks that the total mass of the Taylor components of a degree-indexed
// family stays under the same codomain bound.
inline BoundReport taylor_bound_check(const Mor& t, const std::vector<Vec>& xs,
                                      unsigned long dmax) {
  BoundReport rep;
  std::vector<Vec> comps = taylor_functional(t, xs, dmax);
  Vec total(t.cod);
  for (const auto& c : comps)
    for (const auto& [b, v] : c.coords) total.add(b, v);
  if (!detail::pcoh_bounded(t.cod, total.coords)) {
    rep.ok = false;
    rep.violation = "summed taylor components exceed the codomain bound";
  }
  return rep;
}

}  // namespace cohtaylor
