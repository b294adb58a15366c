#pragma once

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "cohtaylor/morphism.hpp"

// Lazy row-by-row evaluation of composite morphisms. Some diagram checks
// compose maps whose intermediate objects have webs far too large to iterate
// (bags of bags, bags over doubly-indexed points). A RowFn computes one row
// (the targets of a single source point with coefficients) on demand, so a
// pipeline of RowFns only ever touches points reachable from the domain web.

namespace cohtaylor {

using Row = std::vector<std::pair<Point, Scalar>>;
using RowFn = std::function<Row(const Point&)>;

inline RowFn rows_of(const Mor& f) {
  auto grouped = std::make_shared<std::map<Point, Row>>();
  for (const auto& [pq, v] : f.e) (*grouped)[pq.first].emplace_back(pq.second, v);
  return [grouped](const Point& p) -> Row {
    auto it = grouped->find(p);
    return it == grouped->end() ? Row{} : it->second;
  };
}

// g after f, merging parallel paths through the middle object.
inline RowFn rows_compose(RowFn g, RowFn f) {
  return [g = std::move(g), f = std::move(f)](const Point& p) -> Row {
    std::map<Point, Scalar> acc;
    for (const auto& [q, v] : f(p)) {
      for (const auto& [r, w] : g(q)) {
        Scalar t = scalar_mul(w, v);
        auto it = acc.find(r);
        if (it == acc.end())
          acc.emplace(r, t);
        else
          it->second = scalar_add(it->second, t);
      }
    }
    Row out;
    for (auto& [r, v] : acc)
      if (!scalar_is_zero(v)) out.emplace_back(r, v);
    return out;
  };
}

inline RowFn rows_chain(std::vector<RowFn> stages) {
  RowFn acc = stages.front();
  for (size_t i = 1; i < stages.size(); ++i) acc = rows_compose(stages[i], acc);
  return acc;
}

// Product map on pair points.
inline RowFn rows_tensor(RowFn f, RowFn g) {
  return [f = std::move(f), g = std::move(g)](const Point& p) -> Row {
    Row out;
    const Row rf = f(p.kids[0]);
    const Row rg = g(p.kids[1]);
    for (const auto& [q1, v1] : rf)
      for (const auto& [q2, v2] : rg)
        out.emplace_back(Point::mk_pair(q1, q2), scalar_mul(v1, v2));
    return out;
  };
}

// Degree-indexed lift: acts as f under every degree index.
inline RowFn rows_s(RowFn f) {
  return [f = std::move(f)](const Point& p) -> Row {
    Row out;
    for (const auto& [q, v] : f(p.kids[1]))
      out.emplace_back(Point::mk_pair(p.kids[0], q), v);
    return out;
  };
}

// Bag extension of a row function: the row at a source bag combines one
// choice of target multiset per element, weighted by the number of bag
// bijections realizing the combined choice (the same count the eager bag
// extension of a matrix uses). Only sources actually requested are expanded.
inline RowFn rows_bang(RowFn f, const Obj& bcod, Semiring sr) {
  return [f = std::move(f), bcod, sr](const Point& src) -> Row {
    Multiset q = Multiset::from_bag_point(src);
    std::vector<std::pair<Row, unsigned long>> picks;  // (row of element, count)
    picks.reserve(q.mul.size());
    bool dead = false;
    for (const auto& [a, c] : q.mul) {
      Row ra = f(a);
      if (ra.empty()) {
        dead = true;
        break;
      }
      picks.emplace_back(std::move(ra), c);
    }
    std::map<Point, Scalar> acc;
    if (!dead) {
      Multiset tgt;
      mpq_class blocked(1);  // product of the per-entry repetition factorials
      auto rec = [&](auto&& self, size_t ei, size_t start, unsigned long left,
                     const Scalar& val) -> void {
        if (ei == picks.size()) {
          Point pb = tgt.to_bag_point();
          if (!bcod.contains(pb)) return;
          // [target transport] count: tgt! / prod of repetition factorials.
          mpq_class ways(tgt.fact());
          ways /= blocked;
          Scalar coef = scalar_mul(scalar_embed_integer(sr, ways), val);
          auto it = acc.find(pb);
          if (it == acc.end())
            acc.emplace(pb, coef);
          else
            it->second = scalar_add(it->second, coef);
          return;
        }
        const auto& row = picks[ei].first;
        if (left == 0) {
          self(self, ei + 1, 0, ei + 1 == picks.size() ? 0 : picks[ei + 1].second, val);
          return;
        }
        for (size_t j = start; j < row.size(); ++j) {
          // Take k >= 1 copies of entry j, then move to later entries.
          Scalar v = val;
          for (unsigned long k = 1; k <= left; ++k) {
            v = scalar_mul(v, row[j].second);
            tgt.add(row[j].first, 1);
            blocked *= k;
            self(self, ei, j + 1, left - k, v);
          }
          for (unsigned long k = 1; k <= left; ++k) {
            tgt.mul[row[j].first] -= 1;
            if (tgt.mul[row[j].first] == 0) tgt.mul.erase(row[j].first);
            blocked /= k;
          }
        }
      };
      rec(rec, 0, 0, picks.empty() ? 0 : picks[0].second, scalar_one(sr));
    }
    Row out;
    for (auto& [r, v] : acc)
      if (!scalar_is_zero(v)) out.emplace_back(r, v);
    return out;
  };
}

inline Mor materialize_rows(const Obj& dom, const Obj& cod, const RowFn& fn) {
  Mor r(dom, cod);
  for (const Point& p : dom.web())
    for (const auto& [q, v] : fn(p)) r.add_entry(p, q, v);
  return r;
}

}  // namespace cohtaylor
