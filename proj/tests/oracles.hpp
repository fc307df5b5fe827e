// Independent reference computations for the tests. Nothing here calls
// into the library's derived operations; the oracles read raw tables and
// adjacency only.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvg/algebra.hpp"
#include "mvg/graph.hpp"

namespace oracle {

using mvg::ElementId;

// The 12-element algebra M, element names in table order.
inline constexpr std::string_view m_names = "0abcdefghij1";

inline constexpr std::string_view m_star = "1jihgfedcba0";

inline constexpr std::array<std::string_view, 12> m_oplus = {
    "0abcdefghij1", "abbdeeghhj11", "bbbeeehhh111", "cdecdeij1ij1",
    "deedeej11j11", "eeeeee111111", "fghij1fghij1", "ghhj11ghhj11",
    "hhh111hhh111", "ij1ij1ij1ij1", "j11j11j11j11", "111111111111"};

inline constexpr std::array<std::string_view, 12> m_odot = {
    "000000000000", "00a00a00a00a", "0ab0ab0ab0ab", "000ccc000ccc",
    "00accd00accd", "0abcde0abcde", "000000ffffff", "00a00affgffg",
    "0ab0abfghfgh", "000cccfffiii", "00accdffgiij", "0abcdefghij1"};

inline ElementId m_index(char name) {
  return static_cast<ElementId>(m_names.find(name));
}

// ψ: coordinate index k of L2×L2×L3 (mixed radix, first factor most
// significant) is the k-th name of M.
inline char psi(ElementId product_index) { return m_names[product_index]; }

// Natural order straight from the tables: x <= y iff x* ⊕ y = 1.
inline bool leq(const mvg::MvAlgebra& a, ElementId x, ElementId y) {
  const std::size_t n = a.order();
  return a.oplus_table()[a.star_table()[x] * n + y] == a.one();
}

inline bool is_ideal_by_definition(const mvg::MvAlgebra& a, const std::vector<char>& in) {
  const std::size_t n = a.order();
  if (!in[a.zero()]) return false;
  for (ElementId x = 0; x < n; ++x) {
    if (!in[x]) continue;
    for (ElementId y = 0; y < n; ++y) {
      if (in[y] && !in[a.oplus_table()[x * n + y]]) return false;
      if (leq(a, y, x) && !in[y]) return false;
    }
  }
  return true;
}

// Every subset of A tested against the definition. Sorted like all_ideals.
inline std::vector<std::vector<ElementId>> ideals_by_subsets(const mvg::MvAlgebra& a) {
  const std::size_t n = a.order();
  std::vector<std::vector<ElementId>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<char> in(n);
    for (std::size_t k = 0; k < n; ++k) in[k] = (mask >> k) & 1;
    if (!is_ideal_by_definition(a, in)) continue;
    std::vector<ElementId> members;
    for (ElementId k = 0; k < n; ++k)
      if (in[k]) members.push_back(k);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

inline constexpr unsigned unreachable = std::numeric_limits<unsigned>::max();

inline std::vector<std::vector<unsigned>> all_pairs_distances(const mvg::SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, unreachable));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g.adjacent(static_cast<mvg::VertexId>(u), static_cast<mvg::VertexId>(v)))
        d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != unreachable && d[k][j] != unreachable)
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// "null", "inf" or the number, to compare with Measure::to_string().
inline std::string diameter(const mvg::SimpleGraph& g) {
  if (g.vertex_count() == 0) return "null";
  unsigned best = 0;
  for (const auto& row : all_pairs_distances(g))
    for (unsigned x : row) {
      if (x == unreachable) return "inf";
      best = std::max(best, x);
    }
  return std::to_string(best);
}

// Shortest cycle: for each edge uv, the shortest u-v path avoiding uv,
// plus one.
inline std::string girth(const mvg::SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return "null";
  unsigned best = unreachable;
  for (auto [s, t] : g.edges()) {
    std::vector<unsigned> dist(n, unreachable);
    std::vector<mvg::VertexId> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const mvg::VertexId u = queue[head];
      for (mvg::VertexId v = 0; v < n; ++v) {
        if (!g.adjacent(u, v) || dist[v] != unreachable) continue;
        if ((u == s && v == t) || (u == t && v == s)) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
    if (dist[t] != unreachable) best = std::min(best, dist[t] + 1);
  }
  return best == unreachable ? "inf" : std::to_string(best);
}

}  // namespace oracle
