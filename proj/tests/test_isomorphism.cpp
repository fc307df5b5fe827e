#include <doctest.h>

#include <numeric>
#include <random>

#include "mvg/isomorphism.hpp"
#include "mvg/verification.hpp"
#include "oracles.hpp"

using namespace mvg;

namespace {

// Same graph with vertices renamed through `perm`.
SimpleGraph relabel(const SimpleGraph& g, const std::vector<VertexId>& perm) {
  std::vector<std::string> labels(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = g.label(v);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph cycle(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  }
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph disjoint_triangles() {
  const std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}, {2, 0},
                                                            {3, 4}, {4, 5}, {5, 3}};
  return SimpleGraph({"a", "b", "c", "d", "e", "f"}, edges);
}

}  // namespace

TEST_CASE("relabelled graphs are found isomorphic and the witness replays") {
  std::mt19937 rng(12345);
  for (const AlgebraCase& c : enumerate_algebras(12))
    for (const Ideal& i : proper_ideals(c.algebra)) {
      const SimpleGraph g = ideal_based_graph(c.algebra, i);
      std::vector<VertexId> perm(g.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const SimpleGraph h = relabel(g, perm);
      const auto w = graph_isomorphic(g, h);
      REQUIRE(w.has_value());
      CHECK(is_graph_isomorphism(g, h, *w));
    }
}

TEST_CASE("non-isomorphic graphs with equal degree sequences") {
  // C6 and two triangles are both 2-regular on six vertices.
  CHECK_FALSE(graph_isomorphic(cycle(6), disjoint_triangles()).has_value());
  CHECK_FALSE(graph_isomorphic(make_complete_bipartite(3, 3), graph_join(make_complete(1), make_empty(5)))
                  .has_value());
  CHECK_FALSE(graph_isomorphic(make_complete(3), make_complete(4)).has_value());
  CHECK(graph_isomorphic(make_empty(0), make_empty(0)).has_value());
}

TEST_CASE("a bad witness is rejected") {
  const SimpleGraph p = zero_divisor_graph(lukasiewicz_chain(5));
  CHECK_FALSE(is_graph_isomorphism(p, p, IsomorphismWitness{{1, 0, 2}}));
  CHECK_FALSE(is_graph_isomorphism(p, p, IsomorphismWitness{{0, 0, 2}}));
  CHECK_FALSE(is_graph_isomorphism(p, p, IsomorphismWitness{{0, 1}}));
  // 1/4 is the middle of the path 1/2 - 1/4 - 3/4.
  CHECK(is_graph_isomorphism(p, p, IsomorphismWitness{{0, 2, 1}}));
}

TEST_CASE("an exhausted budget is not an answer") {
  // Degree signatures cannot tell these apart, so the search has to run.
  CHECK_THROWS_AS(graph_isomorphic(cycle(6), disjoint_triangles(), 1), BudgetExceeded);
  CHECK_THROWS_AS(algebra_isomorphic(lukasiewicz_chain(6), lukasiewicz_chain(6), 0), BudgetExceeded);
}

TEST_CASE("algebra isomorphism") {
  const MvAlgebra l2 = lukasiewicz_chain(2), l3 = lukasiewicz_chain(3);
  const MvAlgebra a = direct_product({l2, l3});
  const MvAlgebra b = direct_product({l3, l2});
  const auto w = algebra_isomorphic(a, b);
  REQUIRE(w.has_value());
  CHECK(is_algebra_isomorphism(a, b, *w));
  CHECK_FALSE(algebra_isomorphic(a, lukasiewicz_chain(6)).has_value());
  CHECK_FALSE(algebra_isomorphic(a, lukasiewicz_chain(5)).has_value());
  CHECK_FALSE(is_algebra_isomorphism(a, b, IsomorphismWitness{{0, 1, 2, 3, 4, 5}}));
}

TEST_CASE("the 12-element table algebra is L2 x L2 x L3 under the identity map") {
  std::vector<ElementId> oplus, star;
  for (const auto& row : oracle::m_oplus)
    for (char c : row) oplus.push_back(oracle::m_index(c));
  for (char c : oracle::m_star) star.push_back(oracle::m_index(c));
  const MvAlgebra m = MvAlgebra::from_tables(12, oplus, star, 0);
  const MvAlgebra p = chain_product(std::vector<std::size_t>{2, 2, 3});
  std::vector<std::uint32_t> identity(12);
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(is_algebra_isomorphism(p, m, IsomorphismWitness{identity}));
  CHECK(chain_decomposition(m) == std::vector<std::size_t>{2, 2, 3});
}

TEST_CASE("isomorphism preserving a subset") {
  const MvAlgebra a = direct_product({lukasiewicz_chain(2), lukasiewicz_chain(3)});
  // L2 x {0} is {(0,0), (1,0)} = {0, 3}.
  const std::vector<ElementId> l2_zero = {0, 3};
  const std::vector<ElementId> zero_l3 = {0, 1, 2};
  CHECK(algebra_isomorphic_preserving(a, l2_zero, a, l2_zero).has_value());
  CHECK_FALSE(algebra_isomorphic_preserving(a, l2_zero, a, zero_l3).has_value());
  const MvAlgebra swapped = direct_product({lukasiewicz_chain(3), lukasiewicz_chain(2)});
  // (0,0), (0,1) in L3 x L2.
  const std::vector<ElementId> zero_l2 = {0, 1};
  const auto w = algebra_isomorphic_preserving(a, l2_zero, swapped, zero_l2);
  REQUIRE(w.has_value());
  CHECK(is_algebra_isomorphism(a, swapped, *w));
  CHECK((*w).mapping[3] == 1);
}

TEST_CASE("chain decomposition recovers every enumerated class") {
  for (const AlgebraCase& c : enumerate_algebras(12)) {
    CAPTURE(c.descriptor);
    CHECK(chain_decomposition(c.algebra) == c.chains);
  }
  CHECK(chain_decomposition(direct_product({lukasiewicz_chain(4), lukasiewicz_chain(2),
                                            lukasiewicz_chain(3)})) == std::vector<std::size_t>{2, 3, 4});
  CHECK_THROWS_AS(chain_decomposition(trivial_algebra()), PreconditionFailed);
}
