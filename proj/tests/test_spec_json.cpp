#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "qell/group_spec.hpp"
#include "qell/json_io.hpp"

using namespace qell;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_group_spec(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::internal;
}

std::string parse_message(const std::string& text) {
  try {
    parse_group_spec(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse) << text;
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return {};
}

// A random grammar-valid spec with small orders.
std::string random_valid_spec(std::mt19937_64& rng, int depth = 0) {
  std::uniform_int_distribution<int> pick(0, 5);
  std::string out;
  switch (pick(rng)) {
    case 0: out = "S" + std::to_string(1 + rng() % 4); break;
    case 1: out = "A" + std::to_string(1 + rng() % 5); break;
    case 2: out = "C" + std::to_string(1 + rng() % 6); break;
    case 3: out = "D" + std::to_string(3 + rng() % 4); break;
    default: {
      const int n = 1 + static_cast<int>(rng() % 5);
      out = "perm:" + std::to_string(n) + ":";
      const int gens = 1 + static_cast<int>(rng() % 2);
      for (int g = 0; g < gens; ++g) {
        if (g) out += ";";
        std::vector<int> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i;
        std::shuffle(pts.begin(), pts.end(), rng);
        const int len = 1 + static_cast<int>(rng() % n);
        out += "(";
        for (int i = 0; i < len; ++i) out += (i ? "," : "") + std::to_string(pts[i]);
        out += ")";
      }
    }
  }
  if (depth == 0 && rng() % 3 == 0) out += " x " + random_valid_spec(rng, 1);
  return out;
}

}  // namespace

TEST(GroupSpec, Builtins) {
  EXPECT_EQ(parse_group_spec("S3").group->order(), 6u);
  EXPECT_EQ(parse_group_spec("A4").group->order(), 12u);
  EXPECT_EQ(parse_group_spec("C5").group->order(), 5u);
  EXPECT_EQ(parse_group_spec("D4").group->order(), 8u);
  EXPECT_EQ(parse_group_spec("C1").group->order(), 1u);
  EXPECT_EQ(parse_group_spec("S1").group->order(), 1u);
}

TEST(GroupSpec, ProductsAndWhitespace) {
  auto p = parse_group_spec("  S3 x\tC2 ");
  EXPECT_EQ(p.group->order(), 12u);
  EXPECT_EQ(p.group->degree(), 5u);
  EXPECT_EQ(p.canonical, "S3xC2");
  EXPECT_EQ(parse_group_spec("C2xC3xC2").group->order(), 12u);
  EXPECT_EQ(parse_group_spec("C 2 x C 3").canonical, "C2xC3");
}

TEST(GroupSpec, Permutations) {
  auto p = parse_group_spec("perm:4:(0,1,2,3);(0,2)");
  EXPECT_EQ(p.group->order(), 8u);
  EXPECT_EQ(p.canonical, "perm:4:(0,1,2,3);(0,2)");
  EXPECT_EQ(parse_group_spec("perm:3:(0,1)(2)").group->order(), 2u);
  EXPECT_EQ(parse_group_spec("perm: 5 : (0, 1, 2, 3, 4) ; (0, 1)").group->order(), 120u);
}

TEST(GroupSpec, ErrorColumns) {
  EXPECT_NE(parse_message("").find("empty"), std::string::npos);
  EXPECT_NE(parse_message("Q3").find("column 1"), std::string::npos);
  EXPECT_NE(parse_message("S").find("column 2"), std::string::npos);
  EXPECT_NE(parse_message("S3 x").find("column 5"), std::string::npos);
  EXPECT_NE(parse_message("D2").find("column 2"), std::string::npos);
  EXPECT_NE(parse_message("C0").find("column 2"), std::string::npos);
  EXPECT_NE(parse_message("perm:3:(0,3)").find("column 11"), std::string::npos);
  EXPECT_NE(parse_message("perm:3:(0,1,0)").find("repeated"), std::string::npos);
  EXPECT_NE(parse_message("perm:3:0,1").find("column 8"), std::string::npos);
  EXPECT_NE(parse_message("perm:3:(0,1").find("column 12"), std::string::npos);
  EXPECT_NE(parse_message("S3C2").find("column 3"), std::string::npos);
  EXPECT_NE(parse_message("S99999999").find("too large"), std::string::npos);
}

TEST(GroupSpec, OrderCap) {
  EXPECT_EQ(kind_of("S20"), ErrorKind::cap);
  EXPECT_EQ(kind_of("C1000000"), ErrorKind::cap);
  EXPECT_EQ(kind_of("S7xS7"), ErrorKind::cap);
  EXPECT_EQ(kind_of("perm:257:(0,1)"), ErrorKind::cap);
  EXPECT_EQ(kind_of("C300"), ErrorKind::cap);
  EXPECT_EQ(kind_of("C200xC100"), ErrorKind::cap);
  EXPECT_EQ(parse_group_spec("perm:256:(0,255)").group->order(), 2u);
}

TEST(GroupSpec, FuzzValid) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::string text = random_valid_spec(rng);
    ParsedSpec p;
    ASSERT_NO_THROW(p = parse_group_spec(text)) << text;
    auto again = parse_group_spec(p.canonical);
    EXPECT_EQ(again.canonical, p.canonical);
    EXPECT_EQ(again.group->order(), p.group->order());
    EXPECT_TRUE(again.group->same_elements(*p.group));
  }
}

// Random strings over the grammar alphabet either parse or raise a
// parse/cap error; nothing else escapes.
TEST(GroupSpec, FuzzTotal) {
  // A low cap keeps this fast; totality does not depend on it.
  setenv("QELL_ORDER_CAP", "500", 1);
  std::mt19937_64 rng(23);
  const std::string alphabet = "SACDxperm:(),;0123456789 Q";
  int parsed = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    const int len = static_cast<int>(rng() % 12);
    for (int k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
    if (rng() % 2) text = random_valid_spec(rng) + text;
    try {
      parse_group_spec(text);
      ++parsed;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::parse || e.kind() == ErrorKind::cap) << text << ": " << e.what();
      if (e.kind() == ErrorKind::parse) {
        EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
      }
    }
  }
  unsetenv("QELL_ORDER_CAP");
  EXPECT_GT(parsed, 0);
}

namespace {

struct Fixture {
  ParsedSpec spec;
  SessionPtr session;
  QEllStructPtr structure;
};

Fixture make(const std::string& text, int kind) {
  Fixture f;
  f.spec = parse_group_spec(text);
  f.session = Session::for_groups({f.spec.group});
  FiniteGSet x = kind == 0 ? FiniteGSet::point(f.spec.group)
                           : kind == 1 ? FiniteGSet::natural(f.spec.group) : FiniteGSet::regular(f.spec.group);
  f.structure = qe_structure(f.session, x);
  return f;
}

}  // namespace

TEST(Json, ElementRoundTrip) {
  std::mt19937_64 rng(41);
  for (const auto& [text, kind] : std::vector<std::pair<std::string, int>>{
           {"S3", 0}, {"S3", 1}, {"C4", 2}, {"D4", 1}, {"C2xC3", 0}, {"perm:4:(0,1)(2,3)", 1}}) {
    auto fx = make(text, kind);
    for (int i = 0; i < 5; ++i) {
      auto e = qe_random(fx.structure, rng);
      auto doc = io::element_doc(e, fx.spec.canonical, i == 0);
      const std::string dumped = io::dump(io::to_json(doc));
      auto doc2 = io::element_doc(io::parse_json(dumped));
      EXPECT_EQ(doc2, doc) << text;
      EXPECT_EQ(io::dump(io::to_json(doc2)), dumped);
      auto g = io::document_group(doc2.group);
      auto back = io::element_from_doc(doc2, g.group, fx.session);
      EXPECT_EQ(back, e) << text;
    }
  }
}

TEST(Json, LayoutAndPointOmission) {
  auto fx = make("S3", 0);
  auto j = io::to_json(io::element_doc(qe_unit(fx.structure), "S3"));
  EXPECT_FALSE(j.contains("gset"));
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_EQ(j["group"]["order"], 6);
  EXPECT_EQ(j["classes"].size(), 3u);
  EXPECT_EQ(j["classes"][2]["orbits"][0]["basis"][1]["c"], "1/3");
  EXPECT_EQ(j["classes"][0]["orbits"][0]["coeffs"][0][0]["exp"], "0/1");
  EXPECT_EQ(j["classes"][0]["orbits"][0]["coeffs"][0][0]["coef"], 1);
  // only the first coefficient is nonzero, so the rest are trimmed
  EXPECT_EQ(j["classes"][0]["orbits"][0]["coeffs"].size(), 1u);
  const std::string text = j.dump();
  EXPECT_LT(text.find("\"schema_version\""), text.find("\"group\""));
  EXPECT_LT(text.find("\"group\""), text.find("\"classes\""));
}

TEST(Json, BigCoefficientAsString) {
  auto fx = make("C2", 0);
  auto e = qe_basis(fx.structure, 0, 0, 0, QLaurent::monomial(BigInt(1) << 70, Rational(1, 2)));
  auto j = io::to_json(io::element_doc(e, "C2"));
  EXPECT_TRUE(j["classes"][0]["orbits"][0]["coeffs"][0][0]["coef"].is_string());
  auto doc = io::element_doc(io::parse_json(j.dump()));
  EXPECT_EQ(io::element_from_doc(doc, fx.spec.group, fx.session), e);
}

namespace {

ErrorKind load_error(io::Json j, const std::shared_ptr<Session>& session) {
  try {
    auto doc = io::element_doc(j);
    auto g = io::document_group(doc.group);
    io::element_from_doc(doc, g.group, session);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

}  // namespace

TEST(Json, SchemaErrors) {
  auto fx = make("S3", 1);
  std::mt19937_64 rng(2);
  const io::Json good = io::to_json(io::element_doc(qe_random(fx.structure, rng), "S3"));
  auto broken = [&](auto edit) {
    io::Json j = good;
    edit(j);
    return load_error(j, fx.session);
  };
  EXPECT_EQ(broken([](io::Json&) {}), ErrorKind::internal);  // sanity: loads fine
  EXPECT_EQ(broken([](io::Json& j) { j["schema_version"] = "2"; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j.erase("classes"); }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["group"]["spec"] = "C6"; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["group"]["spec"] = "S("; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["group"]["order"] = 7; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["classes"][1]["orbits"][0]["rank"] = 5; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["classes"][2]["orbits"][0]["basis"][1]["c"] = "2/3"; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["classes"][2]["orbits"][0]["basis"][1]["c"] = "2/6"; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["classes"][0]["rep"] = {1, 0, 2}; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["gset"]["generators"][0] = {0, 0, 1}; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["cohomological_degree"] = 1; }), ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) {
              j["classes"][0]["orbits"][0]["coeffs"] = {{{{"exp", "0/1"}, {"coef", 0}}}};
            }),
            ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) {
              j["classes"][0]["orbits"][0]["coeffs"] = {{{{"exp", "1/1"}, {"coef", 1}}, {{"exp", "0/1"}, {"coef", 1}}}};
            }),
            ErrorKind::schema);
  EXPECT_EQ(broken([](io::Json& j) { j["classes"][0]["orbits"][0]["coeffs"] = {{}, {}, {}, {}}; }), ErrorKind::schema);
  EXPECT_THROW(io::parse_json("{\"schema_version\":"), Error);
}

TEST(Json, TableRoundTrip) {
  for (const std::string text : {"S3", "D4", "C2xC3", "A5"}) {
    auto p = parse_group_spec(text);
    auto session = Session::for_groups({p.group});
    auto t = session->table(p.group);
    auto doc = io::table_doc(p.group, *t, p.canonical);
    const std::string dumped = io::dump(io::to_json(doc));
    auto doc2 = io::table_doc(io::parse_json(dumped));
    EXPECT_EQ(doc2, doc);
    EXPECT_EQ(io::dump(io::to_json(doc2)), dumped);
  }
  auto p = parse_group_spec("C4");
  auto session = Session::for_groups({p.group});
  auto doc = io::table_doc(p.group, *session->table(p.group), "C4");
  ASSERT_EQ(doc.irreducibles.size(), 4u);
  EXPECT_EQ(doc.irreducibles[1].central_angles.size(), 4u);
}

TEST(Json, ReportRoundTrip) {
  io::ReportDoc r;
  r.suite = "props";
  r.seed = 18446744073709551615ull;
  r.passed = false;
  r.checks = {{"a", "anchor a", true, ""}, {"b", "anchor b", false, "x != y"}};
  const std::string dumped = io::dump(io::to_json(r));
  auto r2 = io::report_doc(io::parse_json(dumped));
  EXPECT_EQ(r2, r);
  EXPECT_EQ(io::dump(io::to_json(r2)), dumped);
}
