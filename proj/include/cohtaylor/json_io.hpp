#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohtaylor/analytic.hpp"
#include "cohtaylor/morphism.hpp"

namespace cohtaylor {

// JSON forms. All three container documents carry a format tag and version:
//   {"format":"cohtaylor-obj","version":1,"model":M,"body":NODE}
//   {"format":"cohtaylor-mor","version":1,"model":M,"dom":NODE,"cod":NODE,
//    "entries":[[P,Q,S],...]}
//   {"format":"cohtaylor-vec","version":1,"model":M,"web":NODE,
//    "coords":[[P,S],...]}
// Scalars are decimal strings ("0", "3", "3/5", "inf"), points use the array
// encoding of point_to_json, and entries are listed in the canonical point
// order, so serializing a parsed document reproduces it byte for byte.

inline nlohmann::json scalar_to_json(const Scalar& s) { return scalar_to_string(s); }

inline Scalar scalar_from_json(Semiring sr, const nlohmann::json& j) {
  if (!j.is_string()) fail(Errc::Parse, "scalar must be a string: " + j.dump());
  return scalar_parse(sr, j.get<std::string>());
}

inline Status status_parse(const std::string& s) {
  if (s == "scoh") return Status::SCoh;
  if (s == "neutral") return Status::Neutral;
  if (s == "sincoh") return Status::SIncoh;
  fail(Errc::Parse, "unknown status: " + s);
}

inline nlohmann::json obj_node_to_json(const Obj& x) {
  using nlohmann::json;
  switch (x.kind()) {
    case ObjKind::Atoms: {
      json node{{"kind", "atoms"}, {"names", x.base().atoms}};
      if (model_has_coherence(x.model())) {
        size_t n = x.base().atoms.size();
        json rows = json::array();
        for (size_t i = 0; i < n; ++i) {
          json row = json::array();
          for (size_t j = 0; j < n; ++j) row.push_back(status_name(x.base().at(i, j)));
          rows.push_back(row);
        }
        node["statuses"] = rows;
      }
      if (!x.witnesses().empty()) {
        json ws = json::array();
        for (const auto& w : x.witnesses()) {
          json entries = json::array();
          for (const auto& [p, v] : w)
            entries.push_back(json::array({point_to_json(p), scalar_to_json(v)}));
          ws.push_back(entries);
        }
        node["witnesses"] = ws;
      }
      return node;
    }
    case ObjKind::UnitObj: return json{{"kind", "unit"}};
    case ObjKind::Degrees: return json{{"kind", "degrees"}, {"bound", x.bound()}};
    case ObjKind::Bang:
      return json{{"kind", "bang"},
                  {"bound", x.bound()},
                  {"kids", json::array({obj_node_to_json(x.kid(0))})}};
    case ObjKind::Tensor:
    case ObjKind::Limpl:
    case ObjKind::With:
    case ObjKind::Plus: {
      const char* k = x.kind() == ObjKind::Tensor  ? "tensor"
                      : x.kind() == ObjKind::Limpl ? "limpl"
                      : x.kind() == ObjKind::With  ? "with"
                                                   : "plus";
      json kids = json::array();
      for (size_t i = 0; i < x.arity(); ++i) kids.push_back(obj_node_to_json(x.kid(i)));
      return json{{"kind", k}, {"kids", kids}};
    }
    case ObjKind::Raw: {
      json web = json::array();
      for (const auto& p : x.ptr()->raw_web) web.push_back(point_to_json(p));
      json node{{"kind", "raw"}, {"web", web}};
      if (model_has_coherence(x.model())) {
        json st = json::array();
        for (const auto& [pq, s] : x.ptr()->raw_status)
          st.push_back(json::array(
              {point_to_json(pq.first), point_to_json(pq.second), status_name(s)}));
        node["statuses"] = st;
      }
      return node;
    }
  }
  fail(Errc::Internal, "bad object kind");
}

inline Obj obj_node_from_json(Model m, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail(Errc::Parse, "object node needs a \"kind\": " + j.dump());
  std::string kind = j.at("kind").get<std::string>();
  auto kids_of = [&](size_t expect_min, size_t expect_max) {
    if (!j.contains("kids") || !j.at("kids").is_array())
      fail(Errc::Parse, kind + " node needs \"kids\"");
    const auto& ks = j.at("kids");
    if (ks.size() < expect_min || ks.size() > expect_max)
      fail(Errc::Parse, kind + " node has " + std::to_string(ks.size()) + " kids");
    std::vector<Obj> out;
    for (const auto& c : ks) out.push_back(obj_node_from_json(m, c));
    return out;
  };
  auto bound_of = [&]() -> unsigned long {
    if (!j.contains("bound") || !j.at("bound").is_number_unsigned())
      fail(Errc::Parse, kind + " node needs an unsigned \"bound\"");
    return j.at("bound").get<unsigned long>();
  };
  if (kind == "atoms") {
    if (!j.contains("names") || !j.at("names").is_array())
      fail(Errc::Parse, "atoms node needs \"names\"");
    std::vector<std::string> names;
    for (const auto& s : j.at("names")) {
      if (!s.is_string()) fail(Errc::Parse, "atom names must be strings");
      names.push_back(s.get<std::string>());
    }
    std::vector<Status> mat;
    if (model_has_coherence(m)) {
      if (!j.contains("statuses") || !j.at("statuses").is_array())
        fail(Errc::Parse, "atoms node needs \"statuses\" in a coherence model");
      const auto& rows = j.at("statuses");
      if (rows.size() != names.size()) fail(Errc::Parse, "statuses row count mismatch");
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != names.size())
          fail(Errc::Parse, "statuses column count mismatch");
        for (const auto& s : row) {
          if (!s.is_string()) fail(Errc::Parse, "statuses must be strings");
          mat.push_back(status_parse(s.get<std::string>()));
        }
      }
    } else if (j.contains("statuses")) {
      fail(Errc::Parse, "statuses are only meaningful in coherence models");
    }
    std::vector<std::map<Point, Scalar>> wit;
    if (j.contains("witnesses")) {
      if (m != Model::PcohNum) fail(Errc::Parse, "witnesses are only meaningful in pcoh-num");
      for (const auto& w : j.at("witnesses")) {
        if (!w.is_array()) fail(Errc::Parse, "each witness is an array of [point, scalar]");
        std::map<Point, Scalar> one;
        for (const auto& pv : w) {
          if (!pv.is_array() || pv.size() != 2) fail(Errc::Parse, "bad witness entry");
          Point p = point_from_json(pv.at(0));
          if (!one.emplace(p, scalar_from_json(model_semiring(m), pv.at(1))).second)
            fail(Errc::Parse, "duplicate witness coordinate: " + point_text(p));
        }
        wit.push_back(std::move(one));
      }
    }
    return Obj::atoms(m, std::move(names), std::move(mat), std::move(wit));
  }
  if (kind == "unit") return Obj::unit(m);
  if (kind == "degrees") return Obj::degrees(m, bound_of());
  if (kind == "bang") return Obj::bang(kids_of(1, 1)[0], bound_of());
  if (kind == "tensor") {
    auto ks = kids_of(2, 2);
    return Obj::tensor(ks[0], ks[1]);
  }
  if (kind == "limpl") {
    auto ks = kids_of(2, 2);
    return Obj::limpl(ks[0], ks[1]);
  }
  if (kind == "with") return Obj::with(m, kids_of(0, SIZE_MAX));
  if (kind == "plus") return Obj::plus(m, kids_of(0, SIZE_MAX));
  if (kind == "raw") {
    if (!j.contains("web") || !j.at("web").is_array())
      fail(Errc::Parse, "raw node needs \"web\"");
    std::vector<Point> web;
    for (const auto& p : j.at("web")) web.push_back(point_from_json(p));
    std::map<std::pair<Point, Point>, Status> st;
    if (model_has_coherence(m)) {
      if (!j.contains("statuses") || !j.at("statuses").is_array())
        fail(Errc::Parse, "raw node needs \"statuses\" in a coherence model");
      for (const auto& t : j.at("statuses")) {
        if (!t.is_array() || t.size() != 3 || !t.at(2).is_string())
          fail(Errc::Parse, "raw statuses are [p, q, status] triples");
        Point p = point_from_json(t.at(0)), q = point_from_json(t.at(1));
        auto key = p <= q ? std::make_pair(p, q) : std::make_pair(q, p);
        if (!st.emplace(std::move(key), status_parse(t.at(2).get<std::string>())).second)
          fail(Errc::Parse, "duplicate raw status pair");
      }
    } else if (j.contains("statuses")) {
      fail(Errc::Parse, "statuses are only meaningful in coherence models");
    }
    return Obj::raw(m, std::move(web), std::move(st));
  }
  fail(Errc::Parse, "unknown object kind: " + kind);
}

inline nlohmann::json obj_to_json(const Obj& x) {
  return nlohmann::json{{"format", "cohtaylor-obj"},
                        {"version", 1},
                        {"model", model_name(x.model())},
                        {"body", obj_node_to_json(x)}};
}

namespace detail {
inline void expect_doc(const nlohmann::json& j, const std::string& format) {
  if (!j.is_object()) fail(Errc::Parse, "expected a JSON object document");
  if (!j.contains("format") || j.at("format") != format)
    fail(Errc::Parse, "expected \"format\":\"" + format + "\"");
  if (!j.contains("version") || j.at("version") != 1)
    fail(Errc::Parse, format + ": unsupported version");
  if (!j.contains("model") || !j.at("model").is_string())
    fail(Errc::Parse, format + ": missing \"model\"");
}
}  // namespace detail

inline Obj obj_from_json(const nlohmann::json& j) {
  detail::expect_doc(j, "cohtaylor-obj");
  Model m = model_parse(j.at("model").get<std::string>());
  if (!j.contains("body")) fail(Errc::Parse, "cohtaylor-obj: missing \"body\"");
  return obj_node_from_json(m, j.at("body"));
}

inline nlohmann::json mor_to_json(const Mor& f) {
  using nlohmann::json;
  json entries = json::array();
  for (const auto& [pq, v] : f.e)
    entries.push_back(
        json::array({point_to_json(pq.first), point_to_json(pq.second), scalar_to_json(v)}));
  return json{{"format", "cohtaylor-mor"}, {"version", 1},
              {"model", model_name(f.model())},
              {"dom", obj_node_to_json(f.dom)},
              {"cod", obj_node_to_json(f.cod)},
              {"entries", entries}};
}

inline Mor mor_from_json(const nlohmann::json& j) {
  detail::expect_doc(j, "cohtaylor-mor");
  Model m = model_parse(j.at("model").get<std::string>());
  if (!j.contains("dom") || !j.contains("cod"))
    fail(Errc::Parse, "cohtaylor-mor: missing \"dom\"/\"cod\"");
  Mor r(obj_node_from_json(m, j.at("dom")), obj_node_from_json(m, j.at("cod")));
  if (!j.contains("entries") || !j.at("entries").is_array())
    fail(Errc::Parse, "cohtaylor-mor: missing \"entries\"");
  for (const auto& t : j.at("entries")) {
    if (!t.is_array() || t.size() != 3)
      fail(Errc::Parse, "morphism entries are [p, q, scalar] triples");
    Point p = point_from_json(t.at(0)), q = point_from_json(t.at(1));
    Scalar v = scalar_from_json(model_semiring(m), t.at(2));
    if (scalar_is_zero(v)) fail(Errc::Parse, "zero entries must be omitted");
    if (!r.e.emplace(std::make_pair(std::move(p), std::move(q)), std::move(v)).second)
      fail(Errc::Parse, "duplicate morphism entry");
  }
  return r;
}

inline nlohmann::json vec_to_json(const Vec& v) {
  using nlohmann::json;
  json coords = json::array();
  for (const auto& [p, s] : v.coords)
    coords.push_back(json::array({point_to_json(p), scalar_to_json(s)}));
  return json{{"format", "cohtaylor-vec"}, {"version", 1},
              {"model", model_name(v.web.model())},
              {"web", obj_node_to_json(v.web)},
              {"coords", coords}};
}

inline Vec vec_from_json(const nlohmann::json& j) {
  detail::expect_doc(j, "cohtaylor-vec");
  Model m = model_parse(j.at("model").get<std::string>());
  if (!j.contains("web")) fail(Errc::Parse, "cohtaylor-vec: missing \"web\"");
  Vec v(obj_node_from_json(m, j.at("web")));
  if (!j.contains("coords") || !j.at("coords").is_array())
    fail(Errc::Parse, "cohtaylor-vec: missing \"coords\"");
  for (const auto& t : j.at("coords")) {
    if (!t.is_array() || t.size() != 2)
      fail(Errc::Parse, "vector coords are [p, scalar] pairs");
    Point p = point_from_json(t.at(0));
    Scalar s = scalar_from_json(model_semiring(m), t.at(1));
    if (scalar_is_zero(s)) fail(Errc::Parse, "zero coords must be omitted");
    if (v.coords.count(p)) fail(Errc::Parse, "duplicate vector coordinate");
    v.set(p, s);
  }
  return v;
}

}  // namespace cohtaylor
