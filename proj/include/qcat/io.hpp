#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qcat/hausdorff.hpp"
#include "qcat/lawvere.hpp"
#include "qcat/table_quantaloid.hpp"

namespace qcat::io {

using json = nlohmann::ordered_json;

using QuantaloidRef = std::variant<std::shared_ptr<const TableQuantaloid>, std::shared_ptr<const Lawvere>>;
using AnyCategory = std::variant<CategoryPtr<TableQuantaloid>, CategoryPtr<Lawvere>>;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string str(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

inline std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, what + " entry"));
  return out;
}

inline std::size_t index_in(const std::vector<std::string>& names, const std::string& id, const std::string& what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == id) return i;
  throw ParseError("unknown " + what + " '" + id + "'");
}

inline void check_ids(const std::vector<std::string>& ids, const std::string& what) {
  std::map<std::string, int> seen;
  for (const auto& id : ids) {
    if (id.find('|') != std::string::npos) throw ParseError(what + " id '" + id + "' contains '|'");
    if (seen[id]++) throw ParseError("duplicate " + what + " id '" + id + "'");
  }
}

}  // namespace detail

/// Exact value of a JSON scalar: strings go through Extended::parse; numbers
/// through their shortest decimal text, so 0.1 means exactly 1/10.
inline Extended parse_extended(const json& j) {
  if (j.is_string()) return Extended::parse(j.get<std::string>());
  if (j.is_number_unsigned() || j.is_number_integer() || j.is_number_float()) return Extended::parse(j.dump());
  throw ParseError("expected a number, \"p/q\" or \"inf\", got " + j.dump());
}

// ---- lattices ----

inline OrderTable parse_order(const json& j, bool close) {
  auto t = OrderTable::empty_order(detail::string_list(detail::field(j, "elements"), "elements"));
  const auto& leq = detail::field(j, "leq");
  if (!leq.is_array()) throw ParseError("leq must be an array of pairs");
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2) throw ParseError("leq entries must be pairs, got " + p.dump());
    t.set(detail::index_in(t.names, detail::str(p[0], "leq entry"), "element"),
          detail::index_in(t.names, detail::str(p[1], "leq entry"), "element"));
  }
  if (close) t.close();
  return t;
}

/// Closes reflexively and transitively, then validates; throws ValidationError.
inline SupLattice parse_lattice(const json& j) { return SupLattice(parse_order(j, true)); }

inline json emit_lattice(const SupLattice& l) {
  json pairs = json::array();
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y)
      if (x != y && l.order().at(x, y)) pairs.push_back({l.order().names[x], l.order().names[y]});
  return json{{"elements", l.order().names}, {"leq", pairs}};
}

// ---- quantaloids ----

inline TableQuantaloid parse_table_quantaloid(const json& j) {
  auto objects = detail::string_list(detail::field(j, "objects"), "objects");
  detail::check_ids(objects, "object");
  const auto n = objects.size();
  const auto& homs_j = detail::field(j, "homs");
  std::vector<SupLattice> homs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto key = objects[x] + "|" + objects[y];
      if (!homs_j.contains(key)) throw ParseError("missing hom '" + key + "'");
      try {
        homs.push_back(parse_lattice(homs_j.at(key)));
      } catch (const ValidationError& e) {
        throw ValidationError("hom " + key + " is not a sup-lattice", e.violations());
      }
    }
  auto hom = [&](std::size_t x, std::size_t y) -> const SupLattice& { return homs[x * n + y]; };
  const auto& comp_j = detail::field(j, "compose");
  std::vector<std::vector<Element>> compose;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto key = objects[x] + "|" + objects[y] + "|" + objects[z];
        if (!comp_j.contains(key)) throw ParseError("missing composition table '" + key + "'");
        const auto& xy = hom(x, y);
        const auto& yz = hom(y, z);
        const auto& xz = hom(x, z);
        std::vector<int> table(xy.size() * yz.size(), -1);
        for (const auto& row : comp_j.at(key)) {
          if (!row.is_array() || row.size() != 3) throw ParseError("composition rows are [g, f, result]");
          auto g = yz.element(detail::str(row[0], "g"));
          auto f = xy.element(detail::str(row[1], "f"));
          auto r = xz.element(detail::str(row[2], "result"));
          auto& slot = table[g.index * xy.size() + f.index];
          if (slot >= 0 && slot != r.index)
            throw ParseError("conflicting composites for (" + yz.name(g) + "," + xy.name(f) + ") in " + key);
          slot = r.index;
        }
        std::vector<Element> t;
        for (std::size_t i = 0; i < table.size(); ++i) {
          if (table[i] < 0)
            throw ParseError("composition table " + key + " misses (" + yz.name(Element{std::uint16_t(i / xy.size())}) +
                             "," + xy.name(Element{std::uint16_t(i % xy.size())}) + ")");
          t.push_back(Element{static_cast<std::uint16_t>(table[i])});
        }
        compose.push_back(std::move(t));
      }
  const auto& id_j = detail::field(j, "identities");
  std::vector<Element> ids;
  for (std::size_t x = 0; x < n; ++x) {
    if (!id_j.contains(objects[x])) throw ParseError("missing identity of '" + objects[x] + "'");
    ids.push_back(hom(x, x).element(detail::str(id_j.at(objects[x]), "identity")));
  }
  TableQuantaloid q(std::move(objects), std::move(homs), std::move(compose), std::move(ids));
  if (auto r = validate_quantaloid(q); !r.ok()) throw ValidationError("not a quantaloid", r.violations);
  return q;
}

inline TableQuantaloid builtin_table(const std::string& name) {
  if (name == "bool") return TableQuantaloid::boolean();
  if (name.rfind("chain:", 0) == 0) {
    const auto digits = name.substr(6);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
      throw ParseError("bad chain size in '" + name + "'");
    return TableQuantaloid::chain(std::stoul(digits));
  }
  throw ParseError("unknown builtin quantaloid '" + name + "'");
}

inline QuantaloidRef parse_quantaloid(const json& j) {
  if (j.is_string()) {
    auto name = j.get<std::string>();
    if (name == "lawvere") return lawvere();
    return std::make_shared<const TableQuantaloid>(builtin_table(name));
  }
  return std::make_shared<const TableQuantaloid>(parse_table_quantaloid(j));
}

inline json emit_quantaloid(const TableQuantaloid& q) {
  if (!q.name().empty()) return q.name();
  const auto n = q.object_count();
  json homs = json::object(), comp = json::object(), ids = json::object();
  for (QObject x = 0; x < n; ++x)
    for (QObject y = 0; y < n; ++y) homs[q.object_name(x) + "|" + q.object_name(y)] = emit_lattice(q.hom(x, y));
  for (QObject x = 0; x < n; ++x)
    for (QObject y = 0; y < n; ++y)
      for (QObject z = 0; z < n; ++z) {
        json rows = json::array();
        for (auto g : q.elements(y, z))
          for (auto f : q.elements(x, y))
            rows.push_back({q.format(y, z, g), q.format(x, y, f), q.format(x, z, q.compose(x, y, z, g, f))});
        comp[q.object_name(x) + "|" + q.object_name(y) + "|" + q.object_name(z)] = rows;
      }
  for (QObject x = 0; x < n; ++x) ids[q.object_name(x)] = q.format(x, x, q.identity(x));
  return json{{"objects", q.objects()}, {"homs", homs}, {"compose", comp}, {"identities", ids}};
}

inline json emit_quantaloid(const Lawvere&) { return "lawvere"; }

// ---- values ----

template <Quantaloid Q>
value_t<Q> parse_value(const Q& q, QObject x, QObject y, const json& j) {
  if constexpr (std::is_same_v<Q, Lawvere>) {
    return parse_extended(j);
  } else {
    return q.parse(x, y, detail::str(j, "hom value"));
  }
}

template <Quantaloid Q>
json emit_value(const Q& q, QObject x, QObject y, const value_t<Q>& v) {
  return q.format(x, y, v);
}

// ---- categories ----

template <Quantaloid Q>
QObject parse_type(const Q& q, const json& j) {
  auto id = detail::str(j, "type");
  for (QObject x = 0; x < q.object_count(); ++x)
    if (q.object_name(x) == id) return x;
  throw ParseError("unknown quantaloid object '" + id + "'");
}

/// Parses {"objects", "types", "hom"} over a given quantaloid; no axiom checks.
template <Quantaloid Q>
CategoryPtr<Q> parse_category_over(std::shared_ptr<const Q> q, const json& j) {
  auto names = detail::string_list(detail::field(j, "objects"), "objects");
  detail::check_ids(names, "object");
  std::vector<QObject> types;
  if (j.contains("types")) {
    const auto& tj = j.at("types");
    for (const auto& a : names) {
      if (!tj.contains(a)) throw ParseError("missing type of object '" + a + "'");
      types.push_back(parse_type(*q, tj.at(a)));
    }
  } else {
    if (q->object_count() != 1) throw ParseError("field 'types' is required over a quantaloid with several objects");
    types.assign(names.size(), 0);
  }
  const auto& hj = detail::field(j, "hom");
  std::vector<value_t<Q>> hom;
  for (std::size_t a2 = 0; a2 < names.size(); ++a2)
    for (std::size_t a = 0; a < names.size(); ++a) {
      auto key = names[a2] + "|" + names[a];
      if (!hj.contains(key)) throw ParseError("missing hom entry '" + key + "'");
      hom.push_back(parse_value(*q, types[a], types[a2], hj.at(key)));
    }
  return make_category<Q>(std::move(q), std::move(names), std::move(types), std::move(hom));
}

template <Quantaloid Q>
json emit_category_body(const Category<Q>& A) {
  const auto& q = A.quantaloid();
  json types = json::object(), hom = json::object();
  for (std::size_t a = 0; a < A.size(); ++a) types[A.name(a)] = q.object_name(A.type(a));
  for (std::size_t a2 = 0; a2 < A.size(); ++a2)
    for (std::size_t a = 0; a < A.size(); ++a)
      hom[A.name(a2) + "|" + A.name(a)] = emit_value(q, A.type(a), A.type(a2), A.hom(a2, a));
  return json{{"objects", A.names()}, {"types", types}, {"hom", hom}};
}

template <Quantaloid Q>
json emit_category(const Category<Q>& A) {
  json out = {{"quantaloid", emit_quantaloid(A.quantaloid())}};
  out.update(emit_category_body(A));
  return out;
}

/// Preorder over bool: {"kind":"preorder","elements","leq"}; the relation must
/// already be reflexive and transitive.
inline CategoryPtr<TableQuantaloid> parse_preorder(const json& j,
                                                   std::shared_ptr<const TableQuantaloid> q = nullptr) {
  if (!q) q = std::make_shared<const TableQuantaloid>(TableQuantaloid::boolean());
  auto t = parse_order(j, false);
  detail::check_ids(t.names, "element");
  Report r;
  for (std::size_t x = 0; x < t.size(); ++x)
    if (!t.at(x, x)) r.add("leq(" + t.names[x] + "," + t.names[x] + ") false");
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      for (std::size_t z = 0; z < t.size(); ++z)
        if (t.at(x, y) && t.at(y, z) && !t.at(x, z))
          r.add("transitivity: leq(" + t.names[x] + "," + t.names[y] + ") and leq(" + t.names[y] + "," +
                t.names[z] + ") but not leq(" + t.names[x] + "," + t.names[z] + ")");
  if (!r.ok()) throw ValidationError("not a preorder", r.violations);
  // hom(a2, a) = true iff a2 <= a
  const Element f{0}, tr{1};
  std::vector<Element> hom;
  for (std::size_t a2 = 0; a2 < t.size(); ++a2)
    for (std::size_t a = 0; a < t.size(); ++a) hom.push_back(t.at(a2, a) ? tr : f);
  return make_category<TableQuantaloid>(std::move(q), t.names, std::vector<QObject>(t.size(), 0), std::move(hom));
}

/// Metric space {"points","distances","profile"} over Lawvere with hom(a2, a) = d(a2, a).
/// The "metric" profile (default) demands a zero diagonal and the triangle inequality.
inline CategoryPtr<Lawvere> parse_metric_space(const json& j) {
  auto points = detail::string_list(detail::field(j, "points"), "points");
  detail::check_ids(points, "point");
  const auto& dj = detail::field(j, "distances");
  const auto n = points.size();
  if (!dj.is_array() || dj.size() != n) throw ParseError("distances must be a square matrix");
  std::vector<Extended> d;
  for (const auto& row : dj) {
    if (!row.is_array() || row.size() != n) throw ParseError("distances must be a square matrix");
    for (const auto& v : row) d.push_back(parse_extended(v));
  }
  std::string profile = j.contains("profile") ? detail::str(j.at("profile"), "profile") : "metric";
  if (profile != "metric" && profile != "generalized") throw ParseError("unknown profile '" + profile + "'");
  if (profile == "metric") {
    Report diag, tri;
    for (std::size_t x = 0; x < n; ++x)
      if (!d[x * n + x].is_zero()) diag.add("d(" + points[x] + "," + points[x] + ") is not 0");
    if (!diag.ok()) throw ValidationError("not a metric space", diag.violations);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (d[x * n + z] > d[x * n + y] + d[y * n + z])
            tri.add("triangle (" + points[x] + "," + points[y] + "," + points[z] + "): d(" + points[x] + "," +
                    points[z] + ")=" + d[x * n + z].str() + " > " + d[x * n + y].str() + " + " +
                    d[y * n + z].str());
    if (!tri.ok()) throw TriangleViolation("triangle inequality fails", tri.violations);
  }
  return make_category<Lawvere>(lawvere(), std::move(points), std::vector<QObject>(n, 0), std::move(d));
}

inline json emit_metric_space(const Category<Lawvere>& A) {
  json rows = json::array();
  for (std::size_t x = 0; x < A.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < A.size(); ++y) row.push_back(A.hom(x, y).str());
    rows.push_back(row);
  }
  return json{{"points", A.names()}, {"distances", rows}, {"profile", "generalized"}};
}

/// A category document: {"quantaloid", "objects", "types", "hom"}, or one of the
/// special forms {"kind":"preorder"} and {"points","distances"}.
inline AnyCategory parse_any_category(const json& j) {
  if (j.is_object() && j.contains("kind")) {
    auto kind = detail::str(j.at("kind"), "kind");
    if (kind == "preorder") return parse_preorder(j);
    if (kind == "metric") return parse_metric_space(j);
    if (kind != "category") throw ParseError("unknown kind '" + kind + "'");
  }
  if (j.is_object() && j.contains("points")) return parse_metric_space(j);
  auto q = parse_quantaloid(detail::field(j, "quantaloid"));
  return std::visit([&](auto&& qp) -> AnyCategory { return parse_category_over(qp, j); }, q);
}

// ---- functors, distributors, presheaves ----

template <Quantaloid Q>
json emit_functor(const Functor<Q>& F) {
  json map = json::object();
  for (std::size_t a = 0; a < F.dom()->size(); ++a) map[F.dom()->name(a)] = F.cod()->name(F(a));
  return map;
}

template <Quantaloid Q>
Functor<Q> parse_functor_map(const CategoryPtr<Q>& dom, const CategoryPtr<Q>& cod, const json& j) {
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < dom->size(); ++a) {
    if (!j.contains(dom->name(a))) throw ParseError("functor map misses '" + dom->name(a) + "'");
    map.push_back(cod->index(detail::str(j.at(dom->name(a)), "functor image")));
  }
  return Functor<Q>(dom, cod, std::move(map));
}

template <Quantaloid Q>
json emit_matrix(const Distributor<Q>& Phi) {
  const auto& q = Phi.quantaloid();
  const auto& A = *Phi.dom();
  const auto& B = *Phi.cod();
  json m = json::object();
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t a = 0; a < A.size(); ++a) m[B.name(b) + "|" + A.name(a)] = emit_value(q, A.type(a), B.type(b), Phi(b, a));
  return m;
}

template <Quantaloid Q>
Distributor<Q> parse_matrix(const CategoryPtr<Q>& dom, const CategoryPtr<Q>& cod, const json& j) {
  const auto& q = dom->quantaloid();
  std::vector<value_t<Q>> m;
  for (std::size_t b = 0; b < cod->size(); ++b)
    for (std::size_t a = 0; a < dom->size(); ++a) {
      auto key = cod->name(b) + "|" + dom->name(a);
      if (!j.contains(key)) throw ParseError("missing matrix entry '" + key + "'");
      m.push_back(parse_value(q, dom->type(a), cod->type(b), j.at(key)));
    }
  return Distributor<Q>(dom, cod, std::move(m));
}

/// {"quantaloid", "dom": {...}, "cod": {...}, "matrix": {"b|a": v}}. The
/// categories may omit "quantaloid"; the top-level one is shared by both.
/// "cod": "dom" reuses the domain.
template <Quantaloid Q>
Distributor<Q> parse_distributor_over(std::shared_ptr<const Q> q, const json& j) {
  auto dom = parse_category_over(q, detail::field(j, "dom"));
  const auto& cj = detail::field(j, "cod");
  auto cod = (cj.is_string() && cj.get<std::string>() == "dom") ? dom : parse_category_over(q, cj);
  return parse_matrix(dom, cod, detail::field(j, "matrix"));
}

template <Quantaloid Q>
json emit_distributor(const Distributor<Q>& Phi) {
  json out = {{"quantaloid", emit_quantaloid(Phi.quantaloid())}, {"dom", emit_category_body(*Phi.dom())}};
  if (Phi.dom() == Phi.cod())
    out["cod"] = "dom";
  else
    out["cod"] = emit_category_body(*Phi.cod());
  out["matrix"] = emit_matrix(Phi);
  return out;
}

using AnyDistributor = std::variant<Distributor<TableQuantaloid>, Distributor<Lawvere>>;

inline QuantaloidRef distributor_quantaloid(const json& j) {
  if (j.contains("quantaloid")) return parse_quantaloid(j.at("quantaloid"));
  const auto& dom = detail::field(j, "dom");
  if (dom.contains("points")) return lawvere();
  return parse_quantaloid(detail::field(dom, "quantaloid"));
}

inline AnyDistributor parse_any_distributor(const json& j) {
  auto q = distributor_quantaloid(j);
  if (auto* l = std::get_if<std::shared_ptr<const Lawvere>>(&q)) {
    const auto& dj = detail::field(j, "dom");
    if (dj.contains("points")) {
      auto dom = parse_metric_space(dj);
      const auto& cj = detail::field(j, "cod");
      auto cod = (cj.is_string() && cj.get<std::string>() == "dom") ? dom : parse_metric_space(cj);
      return parse_matrix(dom, cod, detail::field(j, "matrix"));
    }
    return parse_distributor_over(*l, j);
  }
  return parse_distributor_over(std::get<0>(q), j);
}

template <Quantaloid Q>
json emit_presheaf(const Presheaf<Q>& phi) {
  const auto& A = *phi.base;
  const auto& q = A.quantaloid();
  json values = json::object();
  for (std::size_t a = 0; a < A.size(); ++a) values[A.name(a)] = emit_value(q, phi.type, A.type(a), phi(a));
  return json{{"type", q.object_name(phi.type)}, {"values", values}};
}

template <Quantaloid Q>
Presheaf<Q> parse_presheaf_over(const CategoryPtr<Q>& base, const json& j) {
  const auto& q = base->quantaloid();
  const auto x = j.contains("type") ? parse_type(q, j.at("type")) : QObject{0};
  const auto& vj = detail::field(j, "values");
  std::vector<value_t<Q>> v;
  for (std::size_t a = 0; a < base->size(); ++a) {
    if (!vj.contains(base->name(a))) throw ParseError("presheaf misses a value at '" + base->name(a) + "'");
    v.push_back(parse_value(q, x, base->type(a), vj.at(base->name(a))));
  }
  return make_presheaf(base, x, std::move(v));
}

// ---- presheaf categories, H(A), reports ----

/// The category plus the members as presheaf value maps (and generator sets when given).
template <Quantaloid Q>
json emit_presheaf_category(const PresheafCategory<Q>& pc, const std::vector<std::vector<std::size_t>>* gens = nullptr) {
  json out = emit_category(*pc.category());
  json members = json::object();
  for (std::size_t i = 0; i < pc.size(); ++i) {
    auto m = emit_presheaf(pc.member(i));
    if (gens) {
      json g = json::array();
      for (auto a : (*gens)[i]) g.push_back(pc.base()->name(a));
      m["generators"] = g;
    }
    members[pc.category()->name(i)] = m;
  }
  out["presheaves"] = members;
  return out;
}

inline json emit_law_report(const LawReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json o = {{"law", e.law}, {"fixture", e.fixture}, {"status", to_string(e.status)}};
    if (!e.counterexample.empty()) o[e.status == LawStatus::skipped ? "reason" : "counterexample"] = e.counterexample;
    entries.push_back(o);
  }
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& e : r.entries)
    (e.status == LawStatus::pass ? pass : e.status == LawStatus::fail ? fail : skipped)++;
  return json{{"suite", r.suite}, {"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"entries", entries}};
}

inline json emit_report(const Report& r) {
  return json{{"ok", r.ok()}, {"violations", r.violations}};
}

// ---- files ----

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace qcat::io
