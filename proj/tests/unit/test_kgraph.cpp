#include <doctest.h>

#include <set>

#include "hrg/embeddings.hpp"
#include "hrg/kgraph.hpp"

using namespace hrg;

namespace {

KGraph make(const char* name, Convention c = Convention::HongKang) {
  return KGraph(Algebra::builtin(name, c));
}

}  // namespace

TEST_CASE("vertex counts") {
  CHECK(make("A1").vertices().size() == 2);
  CHECK(make("A2").vertices().size() == 6);
  CHECK(make("C2", Convention::Opposite).vertices().size() == 10);
  CHECK(make("C2").vertices().size() == 10);
}

TEST_CASE("Weyl vertices are distinct") {
  for (const char* name : {"A1", "A2", "A3", "C2"}) {
    const auto kg = make(name);
    std::set<Vertex> seen;
    for (const auto& w : kg.algebra().weyl().elements()) {
      const auto v = kg.weyl_vertex(w);
      CHECK(seen.insert(v).second);
      CHECK(kg.weyl_label(v) == w);
    }
  }
}

TEST_CASE("skeleton loops and the A2 double edge") {
  const auto kg = make("A2");
  const auto g = kg.skeleton();
  CHECK(g.vertex_count() == 6);
  int loops = 0;
  for (const auto& e : g.edges()) loops += g.is_loop(e);
  CHECK(loops == 12);
  const auto& W = kg.algebra().weyl();
  const int s2 = kg.vertex_index(kg.weyl_vertex(W.parse("s2")));
  const int s12 = kg.vertex_index(kg.weyl_vertex(W.parse("s1s2")));
  CHECK(g.multiplicity(s2, s12, 0) == 1);
  CHECK(g.multiplicity(s2, s12, 1) == 1);
  // each vertex has one outgoing path per element of B(omega_i) that survives
  for (int i = 0; i < 2; ++i) {
    const auto paths = kg.paths_of_degree(kg.algebra().datum().fundamental(i));
    int count = 0;
    for (const auto& e : g.edges()) count += e.color == i;
    CHECK(count == static_cast<int>(paths.size()));
  }
}

TEST_CASE("identity paths and trivial factorizations") {
  const auto kg = make("C2");
  const auto& d = kg.algebra().datum();
  for (const auto& v : kg.vertices()) {
    const auto id = kg.identity(v);
    CHECK(kg.source(id) == v);
    for (const auto& p : kg.paths_of_degree(d.fundamental(1))) {
      if (p.vertex != v) continue;
      CHECK(kg.compose(id, p) == p);
      CHECK(kg.compose(p, kg.identity(kg.source(p))) == p);
      const auto [g, h] = kg.factorize(p, d.zero());
      CHECK(g == id);
      CHECK(h == p);
    }
  }
}

TEST_CASE("range never exceeds source") {
  for (const char* name : {"A2", "C2"}) {
    const auto kg = make(name);
    for (const auto& p : kg.enumerate_paths(Weight({1, 1})))
      CHECK(kg.vertex_leq(p.vertex, kg.source(p)));
  }
}

TEST_CASE("source formula agrees with the full product") {
  for (const char* name : {"A2", "C2"}) {
    const auto kg = make(name);
    for (const auto& p : kg.enumerate_paths(Weight({1, 1})))
      for (const auto& c : kg.fiber(p.vertex))
        if (kg.is_path_with(c, p.degree, p.element))
          CHECK(kg.source_with(c, p.degree, p.element) == kg.source(p));
  }
}

TEST_CASE("precondition errors") {
  const auto kg = make("A2");
  CHECK_THROWS_AS(kg.parse_vertex("(a1,b1,c1)"), Error);
  CHECK_THROWS_AS(kg.enumerate_paths(Weight({-1, 0})), PreconditionError);
  CHECK_THROWS_AS(kg.enumerate_paths(Weight({60, 60})), PreconditionError);
  CHECK_THROWS_AS(parse_degree("1,x", 2), PreconditionError);
  CHECK_THROWS_AS(parse_degree("1", 2), PreconditionError);
  CHECK(parse_degree("2,0", 2) == Weight({2, 0}));
}

TEST_CASE("embedding counts") {
  CHECK(uniqueness_search_right_weak(make("A1")) == 1);
  CHECK(left_weak_embedding_search(make("A1")) == 1);
  CHECK(uniqueness_search_right_weak(make("A2")) == 1);
  CHECK(left_weak_embedding_search(make("A2")) == 0);
  CHECK(uniqueness_search_right_weak(make("C2")) == 1);
  CHECK(validate_right_weak(make("C2")).ok());
}

TEST_CASE("count_embeddings on small graphs") {
  ColoredDigraph path;
  path.add_color("x");
  for (int i = 0; i < 3; ++i) path.add_vertex(std::to_string(i));
  path.add_edge(0, 1, 0);
  path.add_edge(1, 2, 0);
  ColoredDigraph cycle;
  cycle.add_color("x");
  for (int i = 0; i < 3; ++i) cycle.add_vertex(std::to_string(i));
  for (int i = 0; i < 3; ++i) cycle.add_edge(i, (i + 1) % 3, 0);
  CHECK(count_embeddings(path, cycle) == 3);
  CHECK(count_embeddings(cycle, path) == 0);
  CHECK(count_embeddings(path, cycle, std::vector<int>{0, 1, 2}) == 1);
  CHECK(count_embeddings(path, cycle, std::vector<int>{0, 2, 1}) == 0);
  cycle.add_edge(0, 1, 0, "twin");
  CHECK(count_embeddings(path, cycle) == 5);
}

TEST_CASE("compatible colorings") {
  const auto kg = make("A2");
  const auto& W = kg.algebra().weyl();
  const auto g = W.bruhat_graph();
  const auto cands = coloring_candidates(kg, Weight({1, 1}));
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    const std::set<Weight> got(cands[k].begin(), cands[k].end());
    if (e.src != W.identity().index) continue;
    if (e.dst == W.parse("s1").index) CHECK(got == std::set<Weight>{Weight({1, 0}), Weight({1, 1})});
    if (e.dst == W.parse("s1s2s1").index) CHECK(got == std::set<Weight>{Weight({1, 1})});
  }
  const auto minimal = minimal_coloring(kg);
  CHECK(is_compatible(kg, minimal));
  CHECK(validate_bruhat(kg, minimal).ok());
}
