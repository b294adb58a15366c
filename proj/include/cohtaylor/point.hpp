#pragma once
#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohtaylor/errors.hpp"

namespace cohtaylor {

// Web points. Point shapes mirror object shapes:
//   Atom  "a"             base web element
//   Unit  *               the one-point web
//   Pair  (p,q)           tensor / linear-implication webs
//   Tag   (i,p)           with / plus webs (0-based component index)
//   Deg   n               the degrees web
//   Bag   [p1,...,pk]     bang webs (finite multiset, kept sorted)
enum class PointKind : uint8_t { Atom, Unit, Pair, Tag, Deg, Bag };

struct Point {
  PointKind k = PointKind::Unit;
  std::string atom;           // Atom
  unsigned long n = 0;        // Tag index / Deg value
  std::vector<Point> kids;    // Pair(2) / Tag(1) / Bag(sorted, multiplicities expanded)

  static Point mk_atom(std::string name) {
    Point p; p.k = PointKind::Atom; p.atom = std::move(name); return p;
  }
  static Point mk_unit() { return Point{}; }
  static Point mk_pair(Point a, Point b) {
    Point p; p.k = PointKind::Pair; p.kids = {std::move(a), std::move(b)}; return p;
  }
  static Point mk_tag(unsigned long i, Point a) {
    Point p; p.k = PointKind::Tag; p.n = i; p.kids = {std::move(a)}; return p;
  }
  static Point mk_deg(unsigned long d) {
    Point p; p.k = PointKind::Deg; p.n = d; return p;
  }
  static Point mk_bag(std::vector<Point> elems) {
    Point p; p.k = PointKind::Bag; p.kids = std::move(elems);
    std::sort(p.kids.begin(), p.kids.end());
    return p;
  }

  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    switch (a.k) {
      case PointKind::Atom: return a.atom <=> b.atom;
      case PointKind::Unit: return std::strong_ordering::equal;
      case PointKind::Deg: return a.n <=> b.n;
      case PointKind::Tag:
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.kids[0] <=> b.kids[0];
      case PointKind::Pair:
      case PointKind::Bag: {
        if (auto c = a.kids.size() <=> b.kids.size(); c != 0) return c;
        for (size_t i = 0; i < a.kids.size(); ++i)
          if (auto c = a.kids[i] <=> b.kids[i]; c != 0) return c;
        return std::strong_ordering::equal;
      }
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Point& a, const Point& b) { return (a <=> b) == 0; }
};

// Sum of all Deg values occurring anywhere in the point; the degree half of
// the within-bound predicate for truncated law checks.
inline unsigned long deg_weight(const Point& p) {
  unsigned long w = (p.k == PointKind::Deg) ? p.n : 0;
  for (const auto& c : p.kids) w += deg_weight(c);
  return w;
}

// Hereditary flattening bound: along every chain of directly nested bags the
// iterated flattenings all have size <= d. Needed so that digging/flattening
// intermediates of in-bound points stay inside truncated bang webs.
inline bool flat_ok(const Point& p, unsigned long d) {
  switch (p.k) {
    case PointKind::Atom:
    case PointKind::Unit:
    case PointKind::Deg: return true;
    case PointKind::Pair:
    case PointKind::Tag:
      for (const auto& c : p.kids)
        if (!flat_ok(c, d)) return false;
      return true;
    case PointKind::Bag: {
      std::vector<Point> level = p.kids;
      while (true) {
        if (level.size() > d) return false;
        bool all_bags = !level.empty();
        for (const auto& e : level)
          if (e.k != PointKind::Bag) { all_bags = false; break; }
        if (!all_bags) {
          for (const auto& e : level)
            if (!flat_ok(e, d)) return false;
          return true;
        }
        std::vector<Point> next;
        for (const auto& e : level) next.insert(next.end(), e.kids.begin(), e.kids.end());
        level = std::move(next);
      }
    }
  }
  return true;
}

inline std::string point_text(const Point& p) {
  switch (p.k) {
    case PointKind::Atom: return p.atom;
    case PointKind::Unit: return "*";
    case PointKind::Deg: return "(deg " + std::to_string(p.n) + ")";
    case PointKind::Tag: return "(in " + std::to_string(p.n) + " " + point_text(p.kids[0]) + ")";
    case PointKind::Pair: return "(pair " + point_text(p.kids[0]) + " " + point_text(p.kids[1]) + ")";
    case PointKind::Bag: {
      std::string s = "(bag";
      for (const auto& c : p.kids) s += " " + point_text(c);
      return s + ")";
    }
  }
  return "?";
}

inline nlohmann::json point_to_json(const Point& p) {
  using nlohmann::json;
  switch (p.k) {
    case PointKind::Atom: return json(p.atom);
    case PointKind::Unit: return json::array({"*"});
    case PointKind::Deg: return json::array({"deg", p.n});
    case PointKind::Tag: return json::array({"in", p.n, point_to_json(p.kids[0])});
    case PointKind::Pair: return json::array({"pair", point_to_json(p.kids[0]), point_to_json(p.kids[1])});
    case PointKind::Bag: {
      json elems = json::array();
      for (const auto& c : p.kids) elems.push_back(point_to_json(c));
      return json::array({"bag", elems});
    }
  }
  fail(Errc::Internal, "bad point kind");
}

inline Point point_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Point::mk_atom(j.get<std::string>());
  if (!j.is_array() || j.empty()) fail(Errc::Parse, "bad point json: " + j.dump());
  const auto& head = j.at(0);
  if (!head.is_string()) fail(Errc::Parse, "bad point json head: " + j.dump());
  std::string h = head.get<std::string>();
  if (h == "*") {
    if (j.size() != 1) fail(Errc::Parse, "bad unit point: " + j.dump());
    return Point::mk_unit();
  }
  if (h == "deg") {
    if (j.size() != 2 || !j.at(1).is_number_unsigned()) fail(Errc::Parse, "bad deg point: " + j.dump());
    return Point::mk_deg(j.at(1).get<unsigned long>());
  }
  if (h == "in") {
    if (j.size() != 3 || !j.at(1).is_number_unsigned()) fail(Errc::Parse, "bad in point: " + j.dump());
    return Point::mk_tag(j.at(1).get<unsigned long>(), point_from_json(j.at(2)));
  }
  if (h == "pair") {
    if (j.size() != 3) fail(Errc::Parse, "bad pair point: " + j.dump());
    return Point::mk_pair(point_from_json(j.at(1)), point_from_json(j.at(2)));
  }
  if (h == "bag") {
    if (j.size() != 2 || !j.at(1).is_array()) fail(Errc::Parse, "bad bag point: " + j.dump());
    std::vector<Point> elems;
    for (const auto& e : j.at(1)) elems.push_back(point_from_json(e));
    return Point::mk_bag(std::move(elems));
  }
  fail(Errc::Parse, "unknown point constructor: " + h);
}

}  // namespace cohtaylor
