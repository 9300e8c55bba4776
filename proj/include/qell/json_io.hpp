#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qell/group_spec.hpp"
#include "qell/qell.hpp"

namespace qell::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Plain documents mirroring the JSON layout; parse(serialize(d)) == d.

struct TermDoc {
  Rational exp;
  BigInt coef;
  friend bool operator==(const TermDoc&, const TermDoc&) = default;
};

struct BasisDoc {
  int irr = 0;
  long long degree = 1;
  Rational c;
  friend bool operator==(const BasisDoc&, const BasisDoc&) = default;
};

struct ProductTermDoc {
  int irr = 0;
  long long mult = 0;
  int shift = 0;
  friend bool operator==(const ProductTermDoc&, const ProductTermDoc&) = default;
};

struct ProductDoc {
  int i = 0, j = 0;
  std::vector<ProductTermDoc> terms;
  friend bool operator==(const ProductDoc&, const ProductDoc&) = default;
};

struct OrbitDoc {
  int orbit_rep = 0;
  std::size_t stabilizer_order = 1;
  std::size_t rank = 0;
  std::vector<BasisDoc> basis;
  std::vector<std::vector<TermDoc>> coeffs;
  std::optional<std::vector<ProductDoc>> products;
  friend bool operator==(const OrbitDoc&, const OrbitDoc&) = default;
};

struct ClassDoc {
  std::vector<int> rep;
  long long rep_order = 1;
  std::size_t centralizer_order = 1;
  std::vector<OrbitDoc> orbits;
  friend bool operator==(const ClassDoc&, const ClassDoc&) = default;
};

struct GroupDoc {
  std::string spec;
  std::size_t degree = 1;
  std::size_t order = 1;
  std::vector<std::vector<int>> generators;
  friend bool operator==(const GroupDoc&, const GroupDoc&) = default;
};

struct GSetDoc {
  std::size_t points = 1;
  std::vector<std::vector<int>> generators;
  friend bool operator==(const GSetDoc&, const GSetDoc&) = default;
};

/// A QEll structure or element. `gset` is absent for X = pt.
struct ElementDoc {
  std::string schema_version = kSchemaVersion;
  GroupDoc group;
  std::optional<GSetDoc> gset;
  int cohomological_degree = 0;
  std::vector<ClassDoc> classes;
  friend bool operator==(const ElementDoc&, const ElementDoc&) = default;
};

struct TableClassDoc {
  std::vector<int> rep;
  std::size_t size = 1;
  long long rep_order = 1;
  friend bool operator==(const TableClassDoc&, const TableClassDoc&) = default;
};

struct AngleDoc {
  int cls = 0;
  Rational c;
  friend bool operator==(const AngleDoc&, const AngleDoc&) = default;
};

struct IrrDoc {
  long long degree = 1;
  std::vector<AngleDoc> central_angles;  // at every central class
  friend bool operator==(const IrrDoc&, const IrrDoc&) = default;
};

struct TableDoc {
  std::string schema_version = kSchemaVersion;
  GroupDoc group;
  std::vector<TableClassDoc> classes;
  std::vector<IrrDoc> irreducibles;
  friend bool operator==(const TableDoc&, const TableDoc&) = default;
};

struct CheckDoc {
  std::string name;
  std::string anchor;
  bool passed = true;
  std::string detail;
  friend bool operator==(const CheckDoc&, const CheckDoc&) = default;
};

struct ReportDoc {
  std::string schema_version = kSchemaVersion;
  std::string suite;
  std::uint64_t seed = 0;
  bool passed = true;
  std::vector<CheckDoc> checks;
  friend bool operator==(const ReportDoc&, const ReportDoc&) = default;
};

namespace detail {

[[noreturn]] inline void schema(const std::string& what) { fail(ErrorKind::schema, "schema mismatch: " + what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

inline long long as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<long long>();
}

inline std::size_t as_count(const Json& j, const char* what) {
  long long v = as_int(j, what);
  if (v < 0) schema(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

inline std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) schema(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) schema(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

inline const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  return j;
}

inline Rational as_rational(const Json& j, const char* what) {
  const std::string s = as_string(j, what);
  if (s.find('/') == std::string::npos) schema(std::string(what) + " must be written a/b");
  Rational r = parse_rational(s);
  if (to_string(r) != s) schema(std::string(what) + " is not a reduced fraction: " + s);
  return r;
}

inline std::vector<int> as_int_list(const Json& j, const char* what) {
  std::vector<int> out;
  for (const auto& v : as_array(j, what)) out.push_back(static_cast<int>(as_int(v, what)));
  return out;
}

inline Json coef_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

inline BigInt as_coef(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (k == s.size()) schema("empty coefficient");
    for (std::size_t i = k; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) schema("coefficient is not an integer: " + s);
    BigInt v(s);
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
      schema("small coefficient written as a string: " + s);
    return v;
  }
  schema("coef must be an integer");
}

inline Json group_json(const GroupDoc& g) {
  Json j;
  j["spec"] = g.spec;
  j["degree"] = g.degree;
  j["order"] = g.order;
  j["generators"] = g.generators;
  return j;
}

inline GroupDoc group_doc(const Json& j) {
  GroupDoc g;
  g.spec = as_string(field(j, "spec"), "group.spec");
  g.degree = as_count(field(j, "degree"), "group.degree");
  g.order = as_count(field(j, "order"), "group.order");
  for (const auto& gen : as_array(field(j, "generators"), "group.generators"))
    g.generators.push_back(as_int_list(gen, "generator"));
  return g;
}

inline std::vector<int> images_of(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

}  // namespace detail

inline GroupDoc describe_group(const GroupPtr& g, const std::string& spec) {
  GroupDoc d;
  d.spec = spec;
  d.degree = g->degree();
  d.order = g->order();
  for (const auto& s : g->generators()) d.generators.push_back(detail::images_of(s));
  return d;
}

// ---- element documents ----

inline Json to_json(const ElementDoc& d) {
  Json j;
  j["schema_version"] = d.schema_version;
  j["group"] = detail::group_json(d.group);
  if (d.gset) {
    Json g;
    g["points"] = d.gset->points;
    g["generators"] = d.gset->generators;
    j["gset"] = g;
  }
  j["cohomological_degree"] = d.cohomological_degree;
  Json classes = Json::array();
  for (const auto& c : d.classes) {
    Json jc;
    jc["rep"] = c.rep;
    jc["rep_order"] = c.rep_order;
    jc["centralizer_order"] = c.centralizer_order;
    Json orbits = Json::array();
    for (const auto& o : c.orbits) {
      Json jo;
      jo["orbit_rep"] = o.orbit_rep;
      jo["stabilizer_order"] = o.stabilizer_order;
      jo["rank"] = o.rank;
      Json basis = Json::array();
      for (const auto& b : o.basis) {
        Json jb;
        jb["irr"] = b.irr;
        jb["degree"] = b.degree;
        jb["c"] = to_string(b.c);
        basis.push_back(jb);
      }
      jo["basis"] = basis;
      Json coeffs = Json::array();
      for (const auto& poly : o.coeffs) {
        Json jp = Json::array();
        for (const auto& t : poly) {
          Json jt;
          jt["exp"] = to_string(t.exp);
          jt["coef"] = detail::coef_json(t.coef);
          jp.push_back(jt);
        }
        coeffs.push_back(jp);
      }
      jo["coeffs"] = coeffs;
      if (o.products) {
        Json prods = Json::array();
        for (const auto& p : *o.products) {
          Json jp;
          jp["i"] = p.i;
          jp["j"] = p.j;
          Json terms = Json::array();
          for (const auto& t : p.terms) {
            Json jt;
            jt["irr"] = t.irr;
            jt["mult"] = t.mult;
            jt["shift"] = t.shift;
            terms.push_back(jt);
          }
          jp["terms"] = terms;
          prods.push_back(jp);
        }
        jo["products"] = prods;
      }
      orbits.push_back(jo);
    }
    jc["orbits"] = orbits;
    classes.push_back(jc);
  }
  j["classes"] = classes;
  return j;
}

inline ElementDoc element_doc(const Json& j) {
  using namespace detail;
  ElementDoc d;
  d.schema_version = as_string(field(j, "schema_version"), "schema_version");
  if (d.schema_version != kSchemaVersion) schema("unsupported schema_version " + d.schema_version);
  d.group = group_doc(field(j, "group"));
  if (j.contains("gset")) {
    const auto& g = j["gset"];
    GSetDoc gs;
    gs.points = as_count(field(g, "points"), "gset.points");
    for (const auto& gen : as_array(field(g, "generators"), "gset.generators"))
      gs.generators.push_back(as_int_list(gen, "gset generator"));
    d.gset = gs;
  }
  if (j.contains("cohomological_degree")) {
    d.cohomological_degree = static_cast<int>(as_int(j["cohomological_degree"], "cohomological_degree"));
    if (d.cohomological_degree != 0) schema("only degree 0 is supported");
  }
  for (const auto& jc : as_array(field(j, "classes"), "classes")) {
    ClassDoc c;
    c.rep = as_int_list(field(jc, "rep"), "class rep");
    c.rep_order = as_int(field(jc, "rep_order"), "rep_order");
    c.centralizer_order = as_count(field(jc, "centralizer_order"), "centralizer_order");
    for (const auto& jo : as_array(field(jc, "orbits"), "orbits")) {
      OrbitDoc o;
      o.orbit_rep = static_cast<int>(as_int(field(jo, "orbit_rep"), "orbit_rep"));
      o.stabilizer_order = as_count(field(jo, "stabilizer_order"), "stabilizer_order");
      o.rank = as_count(field(jo, "rank"), "rank");
      for (const auto& jb : as_array(field(jo, "basis"), "basis"))
        o.basis.push_back({static_cast<int>(as_int(field(jb, "irr"), "irr")), as_int(field(jb, "degree"), "degree"),
                           as_rational(field(jb, "c"), "c")});
      for (const auto& jp : as_array(field(jo, "coeffs"), "coeffs")) {
        std::vector<TermDoc> poly;
        for (const auto& jt : as_array(jp, "coefficient polynomial")) {
          TermDoc t{as_rational(field(jt, "exp"), "exp"), as_coef(field(jt, "coef"))};
          if (t.coef == 0) schema("zero coefficient stored");
          if (!poly.empty() && !(poly.back().exp < t.exp)) schema("exponents not strictly increasing");
          poly.push_back(std::move(t));
        }
        o.coeffs.push_back(std::move(poly));
      }
      if (!o.coeffs.empty() && o.coeffs.back().empty()) schema("trailing zero coefficient not trimmed");
      if (jo.contains("products")) {
        std::vector<ProductDoc> prods;
        for (const auto& jp : as_array(jo["products"], "products")) {
          ProductDoc p;
          p.i = static_cast<int>(as_int(field(jp, "i"), "i"));
          p.j = static_cast<int>(as_int(field(jp, "j"), "j"));
          for (const auto& jt : as_array(field(jp, "terms"), "terms"))
            p.terms.push_back({static_cast<int>(as_int(field(jt, "irr"), "irr")), as_int(field(jt, "mult"), "mult"),
                               static_cast<int>(as_int(field(jt, "shift"), "shift"))});
          prods.push_back(std::move(p));
        }
        o.products = std::move(prods);
      }
      c.orbits.push_back(std::move(o));
    }
    d.classes.push_back(std::move(c));
  }
  return d;
}

/// Export an element; with `products` the basis multiplication table of
/// every orbit is included.
inline ElementDoc element_doc(const QEllElt& e, const std::string& spec, bool products = false) {
  const auto& s = *e.structure;
  ElementDoc d;
  d.group = describe_group(s.group(), spec);
  if (s.gset()->size() != 1) d.gset = GSetDoc{s.gset()->size(), s.gset()->generator_action()};
  for (std::size_t c = 0; c < s.num_classes(); ++c) {
    const auto& en = s.entry(c);
    ClassDoc cd;
    cd.rep = detail::images_of(en.g);
    cd.rep_order = en.order;
    cd.centralizer_order = en.centralizer->order();
    for (std::size_t o = 0; o < s.num_orbits(c); ++o) {
      const auto& ctx = *s.ctx(c, o);
      OrbitDoc od;
      od.orbit_rep = en.orbits[o].rep;
      od.stabilizer_order = en.orbits[o].stabilizer->order();
      od.rank = ctx.rank();
      for (std::size_t i = 0; i < ctx.rank(); ++i)
        od.basis.push_back({static_cast<int>(i), ctx.degree(i), ctx.angle(i)});
      const auto& coeffs = e.comps[c][o].coeffs;
      std::size_t last = coeffs.size();
      while (last > 0 && coeffs[last - 1].is_zero()) --last;
      for (std::size_t i = 0; i < last; ++i) {
        std::vector<TermDoc> poly;
        for (const auto& [r, k] : coeffs[i].terms()) poly.push_back({r, k});
        od.coeffs.push_back(std::move(poly));
      }
      if (products) {
        std::vector<ProductDoc> prods;
        for (std::size_t i = 0; i < ctx.rank(); ++i)
          for (std::size_t j = i; j < ctx.rank(); ++j) {
            ProductDoc p{static_cast<int>(i), static_cast<int>(j), {}};
            for (const auto& t : ctx.product(i, j)) p.terms.push_back({t.index, t.mult, t.shift});
            prods.push_back(std::move(p));
          }
        od.products = std::move(prods);
      }
      cd.orbits.push_back(std::move(od));
    }
    d.classes.push_back(std::move(cd));
  }
  return d;
}

/// The group named by a document, checked against its recorded data.
inline ParsedSpec document_group(const GroupDoc& g) {
  ParsedSpec p;
  try {
    p = parse_group_spec(g.spec);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) detail::schema("group.spec: " + std::string(e.what()));
    throw;
  }
  if (describe_group(p.group, g.spec) != g) detail::schema("group data does not match spec " + g.spec);
  return p;
}

/// The G-set named by a document (a point when absent).
inline FiniteGSet document_gset(const ElementDoc& d, const GroupPtr& g) {
  if (!d.gset) return FiniteGSet::point(g);
  try {
    return FiniteGSet::from_generator_action(g, d.gset->points, d.gset->generators);
  } catch (const Error& e) {
    detail::schema(std::string("gset: ") + e.what());
  }
}

/// Rebuild an element over `session`; every recorded structural field must
/// agree with the recomputed structure.
inline QEllElt element_from_doc(const ElementDoc& d, const GroupPtr& g, const SessionPtr& session) {
  using detail::schema;
  auto s = qe_structure(session, document_gset(d, g));
  if (d.classes.size() != s->num_classes()) schema("class count differs from the group");
  QEllElt e = qe_zero(s);
  for (std::size_t c = 0; c < s->num_classes(); ++c) {
    const auto& cd = d.classes[c];
    const auto& en = s->entry(c);
    if (cd.rep != detail::images_of(en.g) || cd.rep_order != en.order ||
        cd.centralizer_order != en.centralizer->order())
      schema("class " + std::to_string(c) + " does not match the group");
    if (cd.orbits.size() != s->num_orbits(c)) schema("orbit count differs in class " + std::to_string(c));
    for (std::size_t o = 0; o < s->num_orbits(c); ++o) {
      const auto& od = cd.orbits[o];
      const auto& ctx = *s->ctx(c, o);
      if (od.orbit_rep != en.orbits[o].rep || od.stabilizer_order != en.orbits[o].stabilizer->order() ||
          od.rank != ctx.rank() || od.basis.size() != ctx.rank())
        schema("orbit data differs in class " + std::to_string(c));
      for (std::size_t i = 0; i < ctx.rank(); ++i)
        if (od.basis[i] != BasisDoc{static_cast<int>(i), ctx.degree(i), ctx.angle(i)})
          schema("basis differs in class " + std::to_string(c));
      if (od.coeffs.size() > ctx.rank()) schema("more coefficients than the rank");
      for (std::size_t i = 0; i < od.coeffs.size(); ++i)
        for (const auto& t : od.coeffs[i]) e.comps[c][o].coeffs[i] += QLaurent::monomial(t.coef, t.exp);
    }
  }
  return e;
}

// ---- table documents ----

inline TableDoc table_doc(const GroupPtr& g, const CharacterTable& t, const std::string& spec) {
  TableDoc d;
  d.group = describe_group(g, spec);
  const auto& cd = g->conjugacy();
  std::vector<int> central;
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    d.classes.push_back({detail::images_of(g->class_rep(static_cast<int>(c))), cd.class_sizes[c],
                         g->class_rep(static_cast<int>(c)).order()});
    if (cd.class_sizes[c] == 1) central.push_back(static_cast<int>(c));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    IrrDoc irr{t.degrees()[i], {}};
    for (int c : central) irr.central_angles.push_back({c, central_angle(t, i, g->class_rep(c))});
    d.irreducibles.push_back(std::move(irr));
  }
  return d;
}

inline Json to_json(const TableDoc& d) {
  Json j;
  j["schema_version"] = d.schema_version;
  j["group"] = detail::group_json(d.group);
  Json table;
  Json classes = Json::array();
  for (const auto& c : d.classes) {
    Json jc;
    jc["rep"] = c.rep;
    jc["size"] = c.size;
    jc["rep_order"] = c.rep_order;
    classes.push_back(jc);
  }
  table["classes"] = classes;
  Json irrs = Json::array();
  for (const auto& irr : d.irreducibles) {
    Json ji;
    ji["degree"] = irr.degree;
    Json angles = Json::array();
    for (const auto& a : irr.central_angles) {
      Json ja;
      ja["class"] = a.cls;
      ja["c"] = to_string(a.c);
      angles.push_back(ja);
    }
    ji["central_angles"] = angles;
    irrs.push_back(ji);
  }
  table["irreducibles"] = irrs;
  j["table"] = table;
  return j;
}

inline TableDoc table_doc(const Json& j) {
  using namespace detail;
  TableDoc d;
  d.schema_version = as_string(field(j, "schema_version"), "schema_version");
  if (d.schema_version != kSchemaVersion) schema("unsupported schema_version " + d.schema_version);
  d.group = group_doc(field(j, "group"));
  const auto& t = field(j, "table");
  for (const auto& jc : as_array(field(t, "classes"), "classes"))
    d.classes.push_back({as_int_list(field(jc, "rep"), "rep"), as_count(field(jc, "size"), "size"),
                         as_int(field(jc, "rep_order"), "rep_order")});
  for (const auto& ji : as_array(field(t, "irreducibles"), "irreducibles")) {
    IrrDoc irr{as_int(field(ji, "degree"), "degree"), {}};
    for (const auto& ja : as_array(field(ji, "central_angles"), "central_angles"))
      irr.central_angles.push_back({static_cast<int>(as_int(field(ja, "class"), "class")), as_rational(field(ja, "c"), "c")});
    d.irreducibles.push_back(std::move(irr));
  }
  return d;
}

// ---- report documents ----

inline Json to_json(const ReportDoc& d) {
  Json j;
  j["schema_version"] = d.schema_version;
  Json r;
  r["suite"] = d.suite;
  r["seed"] = d.seed;
  r["passed"] = d.passed;
  Json checks = Json::array();
  for (const auto& c : d.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["passed"] = c.passed;
    jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  r["checks"] = checks;
  j["report"] = r;
  return j;
}

inline ReportDoc report_doc(const Json& j) {
  using namespace detail;
  ReportDoc d;
  d.schema_version = as_string(field(j, "schema_version"), "schema_version");
  if (d.schema_version != kSchemaVersion) schema("unsupported schema_version " + d.schema_version);
  const auto& r = field(j, "report");
  d.suite = as_string(field(r, "suite"), "suite");
  const auto& seed = field(r, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    schema("seed must be a nonnegative integer");
  d.seed = seed.get<std::uint64_t>();
  d.passed = as_bool(field(r, "passed"), "passed");
  for (const auto& jc : as_array(field(r, "checks"), "checks"))
    d.checks.push_back({as_string(field(jc, "name"), "name"), as_string(field(jc, "anchor"), "anchor"),
                        as_bool(field(jc, "passed"), "passed"), as_string(field(jc, "detail"), "detail")});
  return d;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Parse JSON text; malformed text is a schema error.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    detail::schema(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qell::io
