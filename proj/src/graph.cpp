#include "mvg/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mvg {

SimpleGraph::SimpleGraph(std::vector<std::string> labels,
                         std::span<const std::pair<VertexId, VertexId>> edges,
                         std::vector<ElementId> elements)
    : labels_(std::move(labels)), elements_(std::move(elements)) {
  const std::size_t n = labels_.size();
  if (!elements_.empty() && elements_.size() != n)
    throw MalformedInput("graph element map does not match vertex count");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw MalformedInput("graph vertex labels must be unique");
  neighbors_.assign(n, {});
  matrix_.assign(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw MalformedInput("edge endpoint out of range");
    if (u == v) throw MalformedInput("simple graphs have no loops (vertex " + labels_[u] + ")");
    if (matrix_[u * n + v]) continue;
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const {
  const std::size_t n = labels_.size();
  if (u >= n || v >= n) throw ForeignObject("vertex out of range");
  return matrix_[u * n + v] != 0;
}

std::optional<VertexId> SimpleGraph::vertex_of(ElementId x) const {
  const auto it = std::find(elements_.begin(), elements_.end(), x);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<VertexId>(it - elements_.begin());
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < neighbors_.size(); ++u)
    for (VertexId v : neighbors_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

SimpleGraph graph_on_elements(const MvAlgebra& algebra, const std::vector<ElementId>& vertices,
                              const std::vector<char>& in_ideal) {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (ElementId x : vertices) labels.push_back(algebra.label(x));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < vertices.size(); ++i)
    for (VertexId j = i + 1; j < vertices.size(); ++j)
      if (in_ideal[algebra.odot(vertices[i], vertices[j])]) edges.emplace_back(i, j);
  return SimpleGraph(std::move(labels), edges, vertices);
}

std::vector<char> ideal_mask(const MvAlgebra& algebra, const Ideal& ideal) {
  std::vector<char> mask(algebra.order(), 0);
  for (ElementId x : ideal.members()) mask[x] = 1;
  return mask;
}

void require_proper(const MvAlgebra& algebra, const Ideal& ideal) {
  ideal.check_owner(algebra);
  if (algebra.is_trivial()) throw PreconditionFailed("graphs require a nontrivial algebra");
  if (ideal.contains(algebra.one())) throw PreconditionFailed("graph of an improper ideal");
}

}  // namespace

SimpleGraph zero_divisor_graph(const MvAlgebra& algebra) {
  if (algebra.is_trivial()) throw PreconditionFailed("graphs require a nontrivial algebra");
  std::vector<ElementId> vertices;
  for (ElementId x = 0; x < algebra.order(); ++x)
    if (x != algebra.zero() && x != algebra.one()) vertices.push_back(x);
  std::vector<char> zero_only(algebra.order(), 0);
  zero_only[algebra.zero()] = 1;
  return graph_on_elements(algebra, vertices, zero_only);
}

std::vector<ElementId> ideal_graph_vertices_by_definition(const MvAlgebra& algebra,
                                                          const Ideal& ideal) {
  require_proper(algebra, ideal);
  std::vector<ElementId> out;
  for (ElementId x = 0; x < algebra.order(); ++x) {
    if (ideal.contains(x)) continue;
    for (ElementId y = 0; y < algebra.order(); ++y)
      if (!ideal.contains(y) && ideal.contains(algebra.odot(x, y))) {
        out.push_back(x);
        break;
      }
  }
  return out;
}

std::vector<ElementId> ideal_graph_vertices_closed_form(const MvAlgebra& algebra,
                                                        const Ideal& ideal) {
  require_proper(algebra, ideal);
  const std::vector<ElementId> starred = ideal.starred(algebra);
  std::vector<ElementId> out;
  for (ElementId x = 0; x < algebra.order(); ++x)
    if (!ideal.contains(x) && !std::binary_search(starred.begin(), starred.end(), x))
      out.push_back(x);
  return out;
}

SimpleGraph ideal_based_graph(const MvAlgebra& algebra, const Ideal& ideal) {
  std::vector<ElementId> vertices = ideal_graph_vertices_by_definition(algebra, ideal);
  if (vertices != ideal_graph_vertices_closed_form(algebra, ideal))
    throw std::logic_error("ideal-based graph vertex sets disagree");
  return graph_on_elements(algebra, vertices, ideal_mask(algebra, ideal));
}

SimpleGraph make_complete(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph make_empty(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return SimpleGraph(std::move(labels), {});
}

SimpleGraph make_complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t j = 0; j < n; ++j) labels.push_back("y" + std::to_string(j));
  for (VertexId i = 0; i < m; ++i)
    for (VertexId j = 0; j < n; ++j) edges.emplace_back(i, static_cast<VertexId>(m + j));
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph graph_join(const SimpleGraph& left, const SimpleGraph& right) {
  const auto offset = static_cast<VertexId>(left.vertex_count());
  std::vector<std::string> labels;
  for (const auto& l : left.labels()) labels.push_back("L:" + l);
  for (const auto& r : right.labels()) labels.push_back("R:" + r);
  std::vector<std::pair<VertexId, VertexId>> edges = left.edges();
  for (auto [u, v] : right.edges()) edges.emplace_back(u + offset, v + offset);
  for (VertexId u = 0; u < offset; ++u)
    for (VertexId v = 0; v < right.vertex_count(); ++v) edges.emplace_back(u, v + offset);
  return SimpleGraph(std::move(labels), edges);
}

SimpleGraph induced_subgraph(const SimpleGraph& graph, std::span<const VertexId> subset) {
  std::vector<VertexId> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> labels;
  std::vector<ElementId> elements;
  for (VertexId v : keep) {
    if (v >= graph.vertex_count()) throw ForeignObject("induced_subgraph: vertex out of range");
    labels.push_back(graph.label(v));
    if (!graph.elements().empty()) elements.push_back(graph.elements()[v]);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < keep.size(); ++i)
    for (VertexId j = i + 1; j < keep.size(); ++j)
      if (graph.adjacent(keep[i], keep[j])) edges.emplace_back(i, j);
  return SimpleGraph(std::move(labels), edges, std::move(elements));
}

std::string Measure::to_string() const {
  switch (kind_) {
    case Kind::finite: return std::to_string(value_);
    case Kind::infinite: return "inf";
    case Kind::undefined: return "null";
  }
  return "?";
}

bool measure_leq(Measure a, Measure b) {
  if (a.is_undefined() || b.is_undefined()) return a.is_undefined() && b.is_undefined();
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.value() <= b.value();
}

GraphMetrics metrics(const SimpleGraph& graph) {
  GraphMetrics m;
  const std::size_t n = graph.vertex_count();
  if (n == 0) return m;
  m.is_null = false;

  constexpr unsigned unseen = std::numeric_limits<unsigned>::max();
  unsigned diameter = 0;
  unsigned girth = unseen;
  std::vector<unsigned> dist(n);
  std::vector<VertexId> parent(n);
  std::queue<VertexId> frontier;
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    parent[root] = root;
    frontier.push(root);
    while (!frontier.empty()) {
      const VertexId u = frontier.front();
      frontier.pop();
      for (VertexId v : graph.neighbors(u)) {
        if (dist[v] == unseen) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          frontier.push(v);
        } else if (parent[u] != v) {
          girth = std::min(girth, dist[u] + dist[v] + 1);
        }
      }
    }
    for (unsigned d : dist) {
      if (d == unseen) m.connected = false;
      else diameter = std::max(diameter, d);
    }
  }
  m.diameter = m.connected ? Measure::finite(diameter) : Measure::infinity();
  m.girth = girth == unseen ? Measure::infinity() : Measure::finite(girth);
  return m;
}

ShapeReport classify_shape(const SimpleGraph& graph) {
  ShapeReport r;
  const std::size_t n = graph.vertex_count();
  const std::size_t e = graph.edge_count();
  r.edgeless = e == 0;
  r.complete = n >= 1 && e == n * (n - 1) / 2;
  if (n == 0) return r;

  const GraphMetrics m = metrics(graph);

  // Two-colouring; a connected bipartite graph with |X|·|Y| edges is K_{|X|,|Y|}.
  if (n >= 2 && m.connected) {
    std::vector<int> colour(n, -1);
    bool bipartite = true;
    std::queue<VertexId> q;
    colour[0] = 0;
    q.push(0);
    while (!q.empty() && bipartite) {
      const VertexId u = q.front();
      q.pop();
      for (VertexId v : graph.neighbors(u)) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          bipartite = false;
        }
      }
    }
    if (bipartite) {
      const auto x = static_cast<std::size_t>(std::count(colour.begin(), colour.end(), 0));
      const std::size_t y = n - x;
      if (e == x * y) r.complete_bipartite = std::minmax(x, y);
    }
  }
  if (r.complete_bipartite && r.complete_bipartite->first == 1)
    r.star = r.complete_bipartite->second;

  std::vector<VertexId> universal, rest;
  for (VertexId v = 0; v < n; ++v) (graph.degree(v) + 1 == n ? universal : rest).push_back(v);
  if (!universal.empty()) {
    if (rest.empty()) {
      if (n >= 2) r.join_complete_empty = std::pair<std::size_t, std::size_t>(n - 1, 1);
    } else {
      bool independent = true;
      for (VertexId v : rest) independent = independent && graph.degree(v) == universal.size();
      if (independent) r.join_complete_empty = std::pair(universal.size(), rest.size());
    }
  }

  if (m.connected && e + 1 == n) {
    bool max_two = true;
    for (VertexId v = 0; v < n; ++v) max_two = max_two && graph.degree(v) <= 2;
    if (max_two) r.path = e;
  }
  return r;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const SimpleGraph& graph) {
  std::ostringstream out;
  out << "graph {\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out << "  " << dot_quote(graph.label(v)) << ";\n";
  for (auto [u, v] : graph.edges())
    out << "  " << dot_quote(graph.label(u)) << " -- " << dot_quote(graph.label(v)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mvg
