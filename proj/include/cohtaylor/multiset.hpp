#pragma once
#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "cohtaylor/point.hpp"

namespace cohtaylor {

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Finite multiset of points, canonical (sorted map, positive multiplicities).
struct Multiset {
  std::map<Point, unsigned long> mul;

  static Multiset from_vector(const std::vector<Point>& v) {
    Multiset m;
    for (const auto& p : v) m.mul[p]++;
    return m;
  }
  static Multiset from_bag_point(const Point& p) {
    if (p.k != PointKind::Bag) fail(Errc::Internal, "not a bag point");
    return from_vector(p.kids);
  }

  unsigned long size() const {
    unsigned long s = 0;
    for (const auto& [p, c] : mul) s += c;
    return s;
  }
  unsigned long count(const Point& p) const {
    auto it = mul.find(p);
    return it == mul.end() ? 0 : it->second;
  }
  void add(const Point& p, unsigned long c = 1) {
    if (c) mul[p] += c;
  }
  void add_all(const Multiset& o) {
    for (const auto& [p, c] : o.mul) mul[p] += c;
  }
  // m!: product of multiplicity factorials.
  mpz_class fact() const {
    mpz_class r = 1;
    for (const auto& [p, c] : mul) r *= factorial(c);
    return r;
  }
  std::vector<Point> expand() const {
    std::vector<Point> v;
    for (const auto& [p, c] : mul)
      for (unsigned long i = 0; i < c; ++i) v.push_back(p);
    return v;
  }
  Point to_bag_point() const { return Point::mk_bag(expand()); }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.mul == b.mul; }
  friend bool operator<(const Multiset& a, const Multiset& b) { return a.mul < b.mul; }
};

// A transport between multisets m (over E) and p (over F): a multiset over
// E x F whose left marginal is m and right marginal is p.
using Transport = std::map<std::pair<Point, Point>, unsigned long>;

// All transports of (m, p), enumerated by backtracking over contingency
// tables with row sums = multiplicities of m and column sums = those of p.
// Intended for desk-scale multisets (sizes are bounded by the bang degree).
inline std::vector<Transport> transports(const Multiset& m, const Multiset& p) {
  std::vector<Transport> out;
  if (m.size() != p.size()) return out;
  std::vector<std::pair<Point, unsigned long>> rows(m.mul.begin(), m.mul.end());
  std::vector<std::pair<Point, unsigned long>> cols(p.mul.begin(), p.mul.end());
  std::vector<unsigned long> colrem(cols.size());
  for (size_t j = 0; j < cols.size(); ++j) colrem[j] = cols[j].second;
  std::vector<std::vector<unsigned long>> table(rows.size(), std::vector<unsigned long>(cols.size(), 0));

  // Fill row i cell by cell; each row must use up exactly its row sum.
  auto emit = [&]() {
    Transport t;
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j)
        if (table[i][j]) t[{rows[i].first, cols[j].first}] = table[i][j];
    out.push_back(std::move(t));
  };
  // Recursion over (row, col) with remaining row budget.
  auto rec = [&](auto&& self, size_t i, size_t j, unsigned long rowrem) -> void {
    if (i == rows.size()) {
      emit();
      return;
    }
    if (j == cols.size()) {
      if (rowrem == 0) self(self, i + 1, 0, i + 1 < rows.size() ? rows[i + 1].second : 0);
      return;
    }
    unsigned long hi = std::min(rowrem, colrem[j]);
    for (unsigned long v = 0; v <= hi; ++v) {
      table[i][j] = v;
      colrem[j] -= v;
      self(self, i, j + 1, rowrem - v);
      colrem[j] += v;
      table[i][j] = 0;
    }
  };
  rec(rec, 0, 0, rows.empty() ? 0 : rows[0].second);
  return out;
}

// [p r] = prod_b p(b)! / prod_{(a,b)} r(a,b)!  (always a natural number when
// the right marginal of r is p; asserted by exact division).
inline mpz_class multinomb(const Multiset& p, const Transport& r) {
  mpz_class num = p.fact();
  mpz_class den = 1;
  for (const auto& [ab, c] : r) den *= factorial(c);
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) fail(Errc::Internal, "multinomb: non-integral");
  return q;
}

// L(m_1..m_k) = (m_1+...+m_k)! / (m_1! ... m_k!) with multiset factorials.
inline mpz_class multinom(const std::vector<Multiset>& ms) {
  Multiset total;
  mpz_class den = 1;
  for (const auto& m : ms) {
    total.add_all(m);
    den *= m.fact();
  }
  mpz_class num = total.fact();
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) fail(Errc::Internal, "multinom: non-integral");
  return q;
}

// Multisets m over positive integers with sum_i i*m(i) = n (and indices <= max_index).
// Used for the Faa-di-Bruno style expansion of Taylor components.
using NatMultiset = std::map<unsigned long, unsigned long>;

inline std::vector<NatMultiset> mpart(unsigned long n, unsigned long max_index) {
  std::vector<NatMultiset> out;
  NatMultiset cur;
  auto rec = [&](auto&& self, unsigned long rem, unsigned long maxi) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned long i = std::min(rem, maxi); i >= 1; --i) {
      cur[i]++;
      self(self, rem - i, i);
      if (--cur[i] == 0) cur.erase(i);
    }
  };
  rec(rec, n, max_index ? max_index : n);
  return out;
}

inline std::vector<NatMultiset> mpart(unsigned long n) { return mpart(n, n); }

inline mpz_class nat_multiset_fact(const NatMultiset& m) {
  mpz_class r = 1;
  for (const auto& [i, c] : m) r *= factorial(c);
  return r;
}

}  // namespace cohtaylor
