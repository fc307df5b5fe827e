#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvg/algebra.hpp"
#include "mvg/ideal.hpp"

namespace mvg {

using VertexId = std::uint32_t;

/// Simple undirected graph: no loops, no parallel edges, unique labels.
/// Vertices built from an algebra remember the element they stand for.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws MalformedInput on loops, out-of-range endpoints or duplicate
  /// labels. Repeated edges are merged.
  SimpleGraph(std::vector<std::string> labels, std::span<const std::pair<VertexId, VertexId>> edges,
              std::vector<ElementId> elements = {});

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool is_null() const noexcept { return labels_.empty(); }

  bool adjacent(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_.at(v); }
  std::size_t degree(VertexId v) const { return neighbors_.at(v).size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Algebra element behind each vertex; empty for abstract graphs.
  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  std::optional<VertexId> vertex_of(ElementId x) const;

  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.elements_ == b.elements_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<ElementId> elements_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<char> matrix_;
  std::size_t edge_count_ = 0;
};

/// Γ(A): vertices A \ {0, 1}, edge x ~ y iff x ≠ y and x ⊙ y = 0.
SimpleGraph zero_divisor_graph(const MvAlgebra& algebra);

/// Γ_I(A): vertices A \ (I ∪ I*), edge x ~ y iff x ≠ y and x ⊙ y ∈ I.
/// The vertex set is computed from the defining condition and from the
/// closed form and the two must agree.
SimpleGraph ideal_based_graph(const MvAlgebra& algebra, const Ideal& ideal);

/// {x ∉ I : ∃ y ∉ I, x ⊙ y ∈ I}, straight from the definition.
std::vector<ElementId> ideal_graph_vertices_by_definition(const MvAlgebra& algebra,
                                                          const Ideal& ideal);
/// A \ (I ∪ I*).
std::vector<ElementId> ideal_graph_vertices_closed_form(const MvAlgebra& algebra,
                                                        const Ideal& ideal);

SimpleGraph make_complete(std::size_t n);
SimpleGraph make_empty(std::size_t n);
SimpleGraph make_complete_bipartite(std::size_t m, std::size_t n);
/// Disjoint union plus every edge between the two sides. Labels are
/// prefixed "L:" and "R:" to stay unique.
SimpleGraph graph_join(const SimpleGraph& left, const SimpleGraph& right);
SimpleGraph induced_subgraph(const SimpleGraph& graph, std::span<const VertexId> subset);

/// Natural number, ∞, or "undefined" (the null graph has neither a
/// diameter nor a girth).
class Measure {
 public:
  enum class Kind { finite, infinite, undefined };

  static constexpr Measure finite(unsigned v) { return Measure(Kind::finite, v); }
  static constexpr Measure infinity() { return Measure(Kind::infinite, 0); }
  static constexpr Measure undefined() { return Measure(Kind::undefined, 0); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
  constexpr bool is_infinite() const noexcept { return kind_ == Kind::infinite; }
  constexpr bool is_undefined() const noexcept { return kind_ == Kind::undefined; }
  /// Only meaningful when finite.
  constexpr unsigned value() const noexcept { return value_; }
  constexpr bool equals(unsigned v) const noexcept { return is_finite() && value_ == v; }

  /// "3", "inf", or "null".
  std::string to_string() const;

  friend constexpr bool operator==(Measure, Measure) = default;

 private:
  constexpr Measure(Kind k, unsigned v) : kind_(k), value_(v) {}
  Kind kind_;
  unsigned value_;
};

/// Order on finite values extended by ∞ on top. Undefined compares only
/// with undefined (and then as equal).
bool measure_leq(Measure a, Measure b);

struct GraphMetrics {
  bool is_null = true;
  /// Vacuously true for the null graph.
  bool connected = true;
  Measure diameter = Measure::undefined();
  Measure girth = Measure::undefined();
};

/// BFS from every vertex for distances; girth from the shortest
/// non-tree edge seen in each BFS tree.
GraphMetrics metrics(const SimpleGraph& graph);

struct ShapeReport {
  bool complete = false;
  bool edgeless = false;
  /// (m, n), m <= n
  std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;
  /// (k, m): a k-clique of universal vertices joined to m independent ones.
  std::optional<std::pair<std::size_t, std::size_t>> join_complete_empty;
  /// Number of edges of the path.
  std::optional<std::size_t> path;
  /// Number of leaves of the star K_{1,n}.
  std::optional<std::size_t> star;
};

ShapeReport classify_shape(const SimpleGraph& graph);

/// `graph { "a"; ... "a" -- "d"; ... }`, vertices in id order, edges sorted.
std::string to_dot(const SimpleGraph& graph);

}  // namespace mvg
