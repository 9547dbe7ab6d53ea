#include "gip/formula.hpp"
#include "gip/incidence.hpp"
#include "gip/planarity.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gip;

TEST_CASE("parse_formula basics") {
  auto r = parse_formula("range 1/2 2\nx = 1\n");
  REQUIRE(r.ok());
  CHECK(r.formula->variables == std::vector<VarId>{"x"});
  CHECK(r.formula->constraints.size() == 1);
  CHECK(r.formula->constraints[0].kind == ConstraintKind::CONST_ONE);
  CHECK(r.formula->lo == Rational(1, 2));
  CHECK(r.formula->hi == Rational(2));

  r = parse_formula("range 1/2 2\nx + y = z\n");
  REQUIRE(r.ok());
  CHECK(r.formula->constraints[0].kind == ConstraintKind::ADD_EQ);
  CHECK(r.formula->constraints[0].operands == std::vector<VarId>{"x", "y", "z"});

  r = parse_formula("x * y <= 1\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == ParseErrorKind::SYNTAX_ERROR);

  r = parse_formula("range 2 1/2\nx = 1\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == ParseErrorKind::BAD_RANGE);

  r = parse_formula("range 1/2 2\nx + y ? z\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == ParseErrorKind::SYNTAX_ERROR);
  CHECK(r.error->line == 2);

  // comments and blank lines
  r = parse_formula("# header\nrange 1/2 4\n\nx * y >= 1  # inversion\n");
  REQUIRE(r.ok());
  CHECK(r.formula->constraints[0].kind == ConstraintKind::INV_GEQ);
}

TEST_CASE("parse and serialize round-trip") {
  std::string text =
      "range 1/2 2\n"
      "x = 1\n"
      "x + y = z\n"
      "x * y = 1\n"
      "x + x >= z\n"
      "y * z <= 1\n";
  auto r = parse_formula(text);
  REQUIRE(r.ok());
  CHECK(serialize_formula(*r.formula) == text);

  auto again = parse_formula(serialize_formula(*r.formula));
  REQUIRE(again.ok());
  CHECK(serialize_formula(*again.formula) == text);
}

TEST_CASE("evaluate examples") {
  auto f = parse_formula("range 1/2 2\nx = 1\n").formula.value();
  Assignment a{{"x", Rational(1)}};
  CHECK(evaluate(f, a).status == EvalStatus::SAT);
  a["x"] = 5;
  CHECK(evaluate(f, a).status == EvalStatus::RANGE_VIOLATION);

  auto g = parse_formula("range 1/2 2\nx * y = 1\n").formula.value();
  Assignment b{{"x", Rational(2)}, {"y", Rational(1, 2)}};
  CHECK(evaluate(g, b).status == EvalStatus::SAT);
  b["y"] = 1;
  auto res = evaluate(g, b);
  CHECK(res.status == EvalStatus::CONSTRAINT_VIOLATION);
  CHECK(res.constraint_violations == std::vector<std::size_t>{0});
  // Within slack.
  CHECK(evaluate(g, b, Rational(2)).status == EvalStatus::SAT);
}

TEST_CASE("evaluate with tol zero matches direct recomputation on random assignments") {
  auto f = parse_formula(
               "range 1/2 2\n"
               "x + y >= z\n"
               "x * y <= 1\n"
               "z = 1\n")
               .formula.value();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Assignment a;
    for (const auto& v : f.variables) a[v] = Rational(long(rng() % 7) + 2, 4);  // [1/2, 2]
    bool direct = a["x"] + a["y"] >= a["z"] && a["x"] * a["y"] <= 1 && a["z"] == 1;
    bool in_range = true;
    for (const auto& v : f.variables) in_range &= a[v] >= f.lo && a[v] <= f.hi;
    auto r = evaluate(f, a);
    CHECK((r.status == EvalStatus::SAT) == (direct && in_range));
  }
}

TEST_CASE("incidence graph shapes") {
  auto f = parse_formula("range 1/2 2\nx + y = z\n").formula.value();
  auto g = incidence_graph(f);
  CHECK(g.var_nodes.size() == 3);
  CHECK(g.constraint_count == 1);
  CHECK(g.edges.size() == 3);  // K_{1,3}

  auto single = parse_formula("range 1/2 2\nx = 1\n").formula.value();
  CHECK(incidence_graph(single).edges.size() == 1);

  auto rep = parse_formula("range 1/2 2\nx + x >= z\n").formula.value();
  CHECK(incidence_graph(rep).edges.size() == 2);  // multiplicity collapsed
}

TEST_CASE("check_planarity on K4, K5, K3,3") {
  SimpleGraph k4{4, {}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) k4.edges.push_back({i, j});
  auto r = check_planarity(k4);
  CHECK(r.planar);
  CHECK(r.rotation.size() == 4);
  for (std::size_t v = 0; v < 4; ++v) CHECK(r.rotation[v].size() == 3);

  SimpleGraph k5{5, {}};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) k5.edges.push_back({i, j});
  r = check_planarity(k5);
  CHECK_FALSE(r.planar);
  CHECK(r.witness_kind == KuratowskiKind::K5);
  CHECK(r.witness_edges.size() >= 10);

  SimpleGraph k33{6, {}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) k33.edges.push_back({i, j});
  r = check_planarity(k33);
  CHECK_FALSE(r.planar);
  CHECK(r.witness_kind == KuratowskiKind::K33);
  CHECK(r.witness_edges.size() >= 9);
}

TEST_CASE("planar incidence graphs satisfy the bipartite Euler bound") {
  std::mt19937_64 rng(17);
  const char* names[] = {"a", "b", "c", "d"};
  for (int iter = 0; iter < 60; ++iter) {
    Formula f;
    f.lo = Rational(1, 2);
    f.hi = 2;
    int nv = 2 + int(rng() % 3);
    for (int i = 0; i < nv; ++i) f.variables.push_back(names[i]);
    int nc = 1 + int(rng() % 5);
    for (int i = 0; i < nc; ++i) {
      int pick = int(rng() % 3);
      auto v = [&] { return f.variables[rng() % f.variables.size()]; };
      if (pick == 0) f.constraints.push_back({ConstraintKind::CONST_ONE, {v()}});
      else if (pick == 1) f.constraints.push_back({ConstraintKind::ADD_LEQ, {v(), v(), v()}});
      else f.constraints.push_back({ConstraintKind::INV_GEQ, {v(), v()}});
    }
    auto g = incidence_graph(f);
    auto r = check_planarity(g);
    std::size_t n = g.node_count(), e = g.edges.size();
    if (r.planar && n >= 3) {
      CHECK(e <= 2 * n - 4);  // bipartite planar bound
    }
  }
}
