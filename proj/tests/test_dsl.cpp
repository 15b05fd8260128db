#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "operad/catalog.hpp"
#include "operad/dsl.hpp"

using namespace operad;

namespace {

Presentation only(const ParseResult& r) {
  REQUIRE(r.ok());
  REQUIRE(r.operads.size() == 1);
  return r.operads[0];
}

void check_round_trip(const Presentation& p) {
  const std::string once = print(p);
  const auto r = parse(once);
  INFO(once);
  REQUIRE(r.ok());
  REQUIRE(r.operads.size() == 1);
  CHECK(r.operads[0].relations == p.relations);
  CHECK(print(r.operads[0]) == once);
}

}  // namespace

TEST_CASE("parse examples") {
  const auto as = only(parse("operad As { ops: m; rel: (x m y) m z = x m (y m z); }"));
  CHECK(as.name == "As");
  CHECK(as.relations.dim() == 1);
  CHECK(as.relations == builtin("As").relations);

  const auto e = only(parse("operad E { ops: a; }"));
  CHECK(e.relations.dim() == 0);
  CHECK(e.relations.ambient_dim() == 2);
}

TEST_CASE("parse coefficients and comments") {
  const auto p = only(parse(
      "# dendriform\n"
      "operad D {\n"
      "  ops: w, v;\n"
      "  rel: (x w y) w z = x w (y w z) + x w (y v z);\n"
      "  rel: (x v y) w z = x v (y w z);   # (ii)\n"
      "  rel: (x w y) v z + (x v y) v z = x v (y v z);\n"
      "}\n"));
  CHECK(p.relations == builtin("Dend").relations);
  const auto q = only(parse("operad Q { ops: a; rel: 2/4 * (x a y) a z - x a (y a z) = 0; }"));
  RelVector v(2);
  v << Rational(1, 2), Rational(-1);
  CHECK(q.relations == span(std::vector<RelVector>{v}, 2));
}

TEST_CASE("diagnostics") {
  const auto r = parse("operad P {\n  ops: a;\n  rel: (x q y) a z = 0;\n}\n");
  CHECK_FALSE(r.ok());
  REQUIRE(r.diagnostics.size() >= 1);
  CHECK(r.diagnostics[0].message == "undeclared operation q");
  CHECK(r.diagnostics[0].line == 3);
  CHECK(r.diagnostics[0].column == 11);

  const auto u = parse("operad P { ops: ∧; rel: (x ∧ y) q z = 0; }");
  REQUIRE_FALSE(u.diagnostics.empty());
  CHECK(u.diagnostics[0].column == 33);

  const auto dup = parse("operad P { ops: a; }\noperad P { ops: b; }");
  CHECK_FALSE(dup.ok());
  CHECK(dup.diagnostics[0].message.find("duplicate operad name") != std::string::npos);
  CHECK(dup.diagnostics[0].line == 2);

  const auto bad = parse("operad P { ops: a; rel: (y a x) a z = 0; }");
  CHECK_FALSE(bad.ok());
  CHECK(bad.diagnostics[0].message.find("malformed monomial") != std::string::npos);

  CHECK_FALSE(parse("operad P { ops: a; rel: 1/0 * (x a y) a z = 0; }").ok());
  CHECK_FALSE(parse("operad P { ops: a; rel: (x a y) a z = ; }").ok());
  CHECK_FALSE(parse("operad P { ops: a").ok());
  // Recovery: the second operad still parses.
  const auto rec = parse("operad P { ops: a; rel: ) ; }\noperad Q { ops: b; }");
  CHECK_FALSE(rec.ok());
  CHECK(rec.find("Q") != nullptr);
  CHECK(format_diagnostic(r.diagnostics[0], "f.op") == "f.op:3:11: error: undeclared operation q");
}

TEST_CASE("parse_relation accepts aliases") {
  const auto g = builtin("Dend").generators;
  CHECK(parse_relation("(x wedge y) wedge z = x wedge (y wedge z) + x wedge (y vee z)", g) ==
        Catalog::standard().relations("Dend").relations[0]);
  CHECK(parse_relation("(x ∧ y) ∧ z = x ∧ (y ∧ z) + x ∧ (y ∨ z)", g) ==
        Catalog::standard().relations("Dend").relations[0]);
  CHECK_THROWS_AS(parse_relation("(x foo y) wedge z = 0", g), relation_parse_error);
}

TEST_CASE("print examples") {
  const auto as = builtin("As");
  CHECK(print(as) == "operad As {\n  ops: ·;\n  rel: (x · y) · z = x · (y · z);\n}\n");
  const Presentation empty("E", GeneratorSet({"a"}), std::vector<RelVector>{});
  CHECK(print(empty).find("rel:") == std::string::npos);
  CHECK(printable_names(builtin("Dend").generators) == std::vector<std::string>{"∧", "∨"});
  CHECK(printable_names(GeneratorSet({"x", "a"})) == std::vector<std::string>{"x_op", "a"});
  CHECK(is_identifier("ldash"));
  CHECK_FALSE(is_identifier("(a,b)"));
}

TEST_CASE("round trip of the built-ins and derived presentations") {
  for (const auto& l : Catalog::standard().presentations) check_round_trip(l.presentation());
  check_round_trip(dual(builtin("Xplus")));
  check_round_trip(square(builtin("Dend"), builtin("Dias")));
  check_round_trip(square(builtin("As"), builtin("As")));
  const auto dend = only(parse(print(builtin("Dend"))));
  CHECK(dend.relations.dim() == 3);
  CHECK(dend.relations == builtin("Dend").relations);
}

TEST_CASE("property: random presentations round trip") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("op" + std::to_string(k));
    const GeneratorSet g(names);
    std::vector<RelVector> rels;
    const int count = static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) rels.push_back(oracle::random_vector(rng, g.quadratic_dim(), 3, 0.25));
    check_round_trip(Presentation("R" + std::to_string(trial), g, rels));
  }
}
