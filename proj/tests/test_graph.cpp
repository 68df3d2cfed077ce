#include <doctest.h>

#include <cmath>
#include <numeric>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/random.hpp"
#include "qwalk/serialize.hpp"

using namespace qwalk;

TEST_CASE("cycle and complete graphs have the expected shape") {
  const Graph c3 = build_graph(CycleSpec{3});
  CHECK(c3.num_vertices() == 3);
  CHECK(c3.num_arcs() == 6);
  for (std::size_t v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);

  const Graph k3 = build_graph(CompleteSpec{3});
  CHECK(k3.num_vertices() == 3);
  CHECK(k3.num_arcs() == 6);
  for (std::size_t v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

  const Graph k5 = build_graph(CompleteSpec{5});
  CHECK(k5.num_arcs() == 20);
}

TEST_CASE("a loop contributes two mutually inverse arcs") {
  const Graph g = build_graph(EdgeListSpec{{"u", "v"}, {{"u", "v"}, {"v", "v"}}});
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_arcs() == 4);
  CHECK(g.degree(*g.find_vertex("u")) == 1);
  CHECK(g.degree(*g.find_vertex("v")) == 3);
  const Arc& loop = g.arc(2);
  CHECK(loop.origin == loop.terminal);
  CHECK(loop.inverse == 3);
  CHECK(g.arc(3).inverse == 2);
}

TEST_CASE("arc ordering is forward then backward per edge") {
  const Graph g = build_graph(EdgeListSpec{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}});
  CHECK(g.arc(0).origin == 0);
  CHECK(g.arc(0).terminal == 1);
  CHECK(g.arc(1).origin == 1);
  CHECK(g.arc(1).terminal == 0);
  CHECK(g.arc(2).origin == 1);
  CHECK(g.arc(3).origin == 2);
  CHECK(g.arc_label(0) == "0:f");
  CHECK(g.arc_label(3) == "1:b");
  CHECK(g.parse_arc_label("1:b") == std::optional<std::size_t>(3));
  CHECK_FALSE(g.parse_arc_label("2:f").has_value());
  CHECK_FALSE(g.parse_arc_label("x").has_value());
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(CycleSpec{2}), DomainError);
  CHECK_THROWS_AS(build_graph(CompleteSpec{1}), DomainError);
  CHECK_THROWS_AS(build_graph(PathWithLoopsSpec{1}), DomainError);
  CHECK_THROWS_AS(build_graph(EdgeListSpec{{"a", "b"}, {{"a", "z"}}}), StructuralError);
  CHECK_THROWS_AS(build_graph(EdgeListSpec{{"a", "b", "c"}, {{"a", "b"}}}), StructuralError);
  CHECK_THROWS_AS(build_graph(EdgeListSpec{{"a", "a"}, {{"a", "a"}}}), StructuralError);
}

TEST_CASE("grover weights") {
  const Weight w4 = grover_weight(build_graph(CycleSpec{4}));
  for (auto x : w4.values()) CHECK(std::abs(x - Complex(1 / std::sqrt(2.0), 0)) < 1e-15);

  const Graph edge = build_graph(EdgeListSpec{{"u", "v"}, {{"u", "v"}}});
  const Weight we = grover_weight(edge);
  for (auto x : we.values()) CHECK(x == Complex(1.0, 0.0));

  const Graph star = build_graph(EdgeListSpec{{"c", "a", "b", "d"}, {{"c", "a"}, {"c", "b"}, {"c", "d"}}});
  const Weight ws = grover_weight(star);
  for (const auto& a : star.arcs()) {
    const double expected = a.origin == 0 ? 1 / std::sqrt(3.0) : 1.0;
    CHECK(std::abs(ws[a.id] - expected) < 1e-15);
  }
}

TEST_CASE("validate_structures flags normalization and antisymmetry") {
  const Graph c5 = build_graph(CycleSpec{5});
  const Weight gw = grover_weight(c5);
  CHECK(validate_structures(c5, &gw).passed());

  const Graph c3 = build_graph(CycleSpec{3});
  const Weight ones(std::vector<Complex>(6, Complex(1.0, 0.0)));
  const auto r = validate_structures(c3, &ones);
  int hits = 0;
  for (const auto& v : r.violations()) {
    if (v.rule != "weight-normalization") continue;
    ++hits;
    CHECK(v.magnitude == doctest::Approx(1.0));
  }
  CHECK(hits == 3);

  std::vector<double> raw(6, 0.0);
  raw[0] = 0.3;
  raw[1] = 0.3;
  const OneForm bad = OneForm::from_arcs(raw);
  const auto ra = validate_structures(c3, nullptr, &bad);
  REQUIRE(ra.has_rule("one-form-antisymmetry"));
  for (const auto& v : ra.violations())
    if (v.rule == "one-form-antisymmetry") CHECK(v.magnitude == doctest::Approx(0.6));

  const Weight zero(std::vector<Complex>(6, Complex(0.0, 0.0)));
  CHECK(validate_structures(c3, &zero).has_rule("weight-nonzero"));
  const Weight short_w(std::vector<Complex>(2, Complex(1.0, 0.0)));
  CHECK(validate_structures(c3, &short_w).has_rule("weight-size"));
}

TEST_CASE("one-forms from edges are antisymmetric") {
  const Graph g = build_graph(PathWithLoopsSpec{3});
  const OneForm t = OneForm::from_edges(g, {0.1, 0.2, 0.3, 0.4});
  for (const auto& a : g.arcs()) CHECK(t[a.id] == -t[a.inverse]);
  CHECK(validate_structures(g, nullptr, &t).passed());
  CHECK_THROWS_AS(OneForm::from_edges(g, {0.1}), DimensionError);
}

TEST_CASE("graph JSON round trip") {
  const Graph g = build_graph(EdgeListSpec{{"u", "v"}, {{"u", "v"}, {"v", "v"}}});
  const Weight w = grover_weight(g);
  const OneForm t = OneForm::from_edges(g, {0.25, -1.5});
  const auto doc = graph_from_json(graph_to_json(g, &w, &t));
  CHECK(doc.graph.num_arcs() == 4);
  REQUIRE(doc.weight.has_value());
  REQUIRE(doc.one_form.has_value());
  for (std::size_t a = 0; a < 4; ++a) {
    CHECK((*doc.weight)[a] == w[a]);
    CHECK((*doc.one_form)[a] == t[a]);
  }
  json missing = graph_to_json(g, &w);
  missing["weights"].erase("1:b");
  CHECK_THROWS_AS(graph_from_json(missing), StructuralError);
  json unknown = graph_to_json(g);
  unknown["one_form"] = {{"7", 1.0}};
  CHECK_THROWS_AS(graph_from_json(unknown), StructuralError);
}

// Hand-rolled generator: random multigraphs with loops, every vertex covered.
static Graph random_multigraph(SeededRng& rng) {
  const auto n = static_cast<std::size_t>(1 + rng.uniform() * 7);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({v, static_cast<std::size_t>(rng.uniform() * n)});
  const auto extra = static_cast<std::size_t>(rng.uniform() * 6);
  for (std::size_t k = 0; k < extra; ++k)
    edges.push_back({static_cast<std::size_t>(rng.uniform() * n), static_cast<std::size_t>(rng.uniform() * n)});
  return Graph(names, edges);
}

TEST_CASE("property: arc inversion is a fixed-point-free involution and grover weights validate") {
  SeededRng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_multigraph(rng);
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == g.num_arcs());
    for (const auto& a : g.arcs()) {
      CHECK(a.inverse != a.id);
      CHECK(g.arc(a.inverse).inverse == a.id);
      CHECK(g.arc(a.inverse).origin == a.terminal);
    }
    const Weight w = grover_weight(g);
    CHECK(validate_structures(g, &w).passed());
  }
}
