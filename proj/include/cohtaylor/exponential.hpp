#pragma once
#include <functional>
#include <vector>

#include "cohtaylor/morphism.hpp"
#include "cohtaylor/multiset.hpp"
#include "cohtaylor/rows.hpp"

namespace cohtaylor {

inline Obj top_obj(Model m) { return Obj::with(m, {}); }

// !f on truncated bang webs. Entries are generated from multisets of entries
// of f (size <= d): a transport contributes iff it is supported on nonzero
// entries, and multisets over the support of f are exactly those transports.
// This never enumerates the bang webs, so it works for nested bags too.
inline Mor bang_mor(const Mor& f, unsigned long d) {
  Obj bd = Obj::bang(f.dom, d), bc = Obj::bang(f.cod, d);
  Mor r(bd, bc);
  Semiring sr = f.semiring();
  std::vector<std::pair<std::pair<Point, Point>, Scalar>> entries(f.e.begin(), f.e.end());

  std::vector<size_t> picks;  // chosen entry indices, non-decreasing
  auto flush = [&]() {
    Multiset q, p;
    Transport tr;
    Scalar val = scalar_one(sr);
    for (size_t idx : picks) {
      q.add(entries[idx].first.first);
      p.add(entries[idx].first.second);
      tr[entries[idx].first]++;
      val = scalar_mul(val, entries[idx].second);
    }
    Point qb = q.to_bag_point(), pb = p.to_bag_point();
    // Web membership drops over-long bags (cannot happen here) and, for Coh,
    // transports whose source or target support is not a clique.
    if (!bd.contains(qb) || !bc.contains(pb)) return;
    val = scalar_mul(val, scalar_embed_integer(sr, mpq_class(multinomb(p, tr))));
    r.add_entry(qb, pb, val);
  };
  auto rec = [&](auto&& self, size_t start, unsigned long left) -> void {
    flush();
    if (left == 0) return;
    for (size_t i = start; i < entries.size(); ++i) {
      picks.push_back(i);
      self(self, i, left - 1);
      picks.pop_back();
    }
  };
  rec(rec, 0, d);
  return r;
}

inline Mor der_mor(const Obj& x, unsigned long d) {
  Mor r(Obj::bang(x, d), x);
  Scalar one = scalar_one(x.semiring());
  if (d >= 1)
    for (const auto& a : x.web()) r.set_entry(Point::mk_bag({a}), a, one);
  return r;
}

// All ways to split m into an unordered multiset of nonempty blocks (at most
// `max_blocks`). Each partition is produced exactly once: the block holding
// the least element of m is canonical, then recurse on the rest.
inline void multiset_partitions(const Multiset& m, unsigned long max_blocks,
                                std::vector<Multiset>& blocks,
                                const std::function<void()>& emit) {
  if (m.mul.empty()) {
    emit();
    return;
  }
  if (max_blocks == 0) return;
  const Point& least = m.mul.begin()->first;
  // Enumerate sub-multisets B of m with B(least) >= 1.
  std::vector<std::pair<Point, unsigned long>> items(m.mul.begin(), m.mul.end());
  Multiset block;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == items.size()) {
      Multiset rest;
      for (const auto& [p, c] : m.mul) {
        unsigned long used = block.count(p);
        if (c > used) rest.add(p, c - used);
      }
      blocks.push_back(block);
      multiset_partitions(rest, max_blocks - 1, blocks, emit);
      blocks.pop_back();
      return;
    }
    unsigned long lo = items[i].first == least ? 1 : 0;
    for (unsigned long c = lo; c <= items[i].second; ++c) {
      if (c) block.add(items[i].first, c);
      self(self, i + 1);
      if (c) block.mul.erase(items[i].first);
    }
  };
  rec(rec, 0);
}

inline Mor dig_mor(const Obj& x, unsigned long d) {
  Obj bx = Obj::bang(x, d);
  Mor r(bx, Obj::bang(bx, d));
  Scalar one = scalar_one(x.semiring());
  for (const auto& mp : bx.web()) {
    Multiset m = Multiset::from_bag_point(mp);
    std::vector<Multiset> blocks;
    multiset_partitions(m, d, blocks, [&]() {
      // Pad with empty blocks up to the web's block cap; each padded version
      // is a distinct target point.
      for (unsigned long extra = 0; blocks.size() + extra <= d; ++extra) {
        std::vector<Point> bb;
        for (const auto& b : blocks) bb.push_back(b.to_bag_point());
        for (unsigned long i = 0; i < extra; ++i) bb.push_back(Point::mk_bag({}));
        Point target = Point::mk_bag(std::move(bb));
        if (r.cod.contains(target)) r.set_entry(mp, target, one);
      }
    });
  }
  return r;
}

// 1 ~ !T (T the empty with).
inline Mor seely0_mor(Model m, unsigned long d) {
  Mor r(Obj::unit(m), Obj::bang(top_obj(m), d));
  r.set_entry(Point::mk_unit(), Point::mk_bag({}), scalar_one(model_semiring(m)));
  return r;
}
inline Mor seely0_inv_mor(Model m, unsigned long d) {
  Mor r(Obj::bang(top_obj(m), d), Obj::unit(m));
  r.set_entry(Point::mk_bag({}), Point::mk_unit(), scalar_one(model_semiring(m)));
  return r;
}

// !X (x) !Y ~ !(X & Y), (m1, m2) |-> (0)m1 + (1)m2.
inline Mor seely2_mor(const Obj& x, const Obj& y, unsigned long d) {
  Obj bx = Obj::bang(x, d), by = Obj::bang(y, d);
  Obj xy = Obj::with(x.model(), {x, y});
  Mor r(Obj::tensor(bx, by), Obj::bang(xy, d));
  Scalar one = scalar_one(x.semiring());
  for (const auto& m1 : bx.web()) {
    if (m1.kids.size() > d) continue;
    for (const auto& m2 : by.web()) {
      if (m1.kids.size() + m2.kids.size() > d) continue;
      std::vector<Point> tagged;
      for (const auto& a : m1.kids) tagged.push_back(Point::mk_tag(0, a));
      for (const auto& b : m2.kids) tagged.push_back(Point::mk_tag(1, b));
      Point target = Point::mk_bag(std::move(tagged));
      if (r.cod.contains(target)) r.set_entry(Point::mk_pair(m1, m2), target, one);
    }
  }
  return r;
}

inline Mor seely2_inv_mor(const Obj& x, const Obj& y, unsigned long d) {
  Mor fwd = seely2_mor(x, y, d);
  Mor r(fwd.cod, fwd.dom);
  for (const auto& [pq, v] : fwd.e) r.set_entry(pq.second, pq.first, v);
  return r;
}

// Lax monoidality of ! . Unit part: 1 -> !1, * |-> k[*].
inline Mor ocmonz_mor(Model m, unsigned long d) {
  Obj b1 = Obj::bang(Obj::unit(m), d);
  Mor r(Obj::unit(m), b1);
  Scalar one = scalar_one(model_semiring(m));
  for (unsigned long k = 0; k <= d; ++k) {
    std::vector<Point> stars(k, Point::mk_unit());
    r.set_entry(Point::mk_unit(), Point::mk_bag(std::move(stars)), one);
  }
  return r;
}

// Binary part: !X (x) !Y -> !(X (x) Y); ((m1,m2), r) = 1 iff r has marginals
// m1 and m2 (a 0/1 matrix in every model).
inline Mor ocmont_mor(const Obj& x, const Obj& y, unsigned long d) {
  Obj bx = Obj::bang(x, d), by = Obj::bang(y, d);
  Mor r(Obj::tensor(bx, by), Obj::bang(Obj::tensor(x, y), d));
  Scalar one = scalar_one(x.semiring());
  for (const auto& m1p : bx.web()) {
    Multiset m1 = Multiset::from_bag_point(m1p);
    for (const auto& m2p : by.web()) {
      Multiset m2 = Multiset::from_bag_point(m2p);
      if (m1.size() != m2.size()) continue;
      for (const auto& tr : transports(m1, m2)) {
        std::vector<Point> zipped;
        for (const auto& [ab, c] : tr)
          for (unsigned long i = 0; i < c; ++i) zipped.push_back(Point::mk_pair(ab.first, ab.second));
        Point target = Point::mk_bag(std::move(zipped));
        if (r.cod.contains(target)) r.set_entry(Point::mk_pair(m1p, m2p), target, one);
      }
    }
  }
  return r;
}

inline Mor weak_mor(const Obj& x, unsigned long d) {
  Mor to_top = zero_mor(x, top_obj(x.model()));
  return compose(seely0_inv_mor(x.model(), d), bang_mor(to_top, d));
}

inline Mor contr_mor(const Obj& x, unsigned long d) {
  Mor pairing = tuple_mor({identity(x), identity(x)});
  return compose(seely2_inv_mor(x, x, d), bang_mor(pairing, d));
}

// coKleisli composition: g o !f o dig, evaluated row by row so the full
// matrix of !f (whose domain is a bag-of-bags object) is never built.
inline Mor kleisli_compose(const Mor& g, const Mor& f) {
  if (f.dom.kind() != ObjKind::Bang || g.dom.kind() != ObjKind::Bang)
    fail(Errc::Type, "kleisli_compose expects coKleisli morphisms !X -> Y");
  unsigned long d = f.dom.bound();
  if (!(g.dom == Obj::bang(f.cod, d))) fail(Errc::Type, "kleisli_compose: middle object mismatch");
  RowFn fn = rows_chain({rows_of(dig_mor(f.dom.kid(0), d)),
                         rows_bang(rows_of(f), g.dom, f.semiring()),
                         rows_of(g)});
  return materialize_rows(f.dom, g.cod, fn);
}

inline Mor kleisli_identity(const Obj& x, unsigned long d) { return der_mor(x, d); }

}  // namespace cohtaylor
