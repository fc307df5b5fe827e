#include "mvg/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mvg {

namespace {

constexpr std::uint32_t unmapped = ~std::uint32_t{0};

void charge(std::uint64_t& nodes, std::uint64_t budget, const char* what) {
  if (++nodes > budget)
    throw BudgetExceeded(std::string(what) + " isomorphism search exceeded " +
                         std::to_string(budget) + " nodes");
}

// ---------------------------------------------------------------- graphs

std::vector<std::vector<std::size_t>> graph_signatures(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> sig(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sig[v].push_back(g.degree(v));
    std::vector<std::size_t> nd;
    for (VertexId w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end(), std::greater<>());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

class GraphMatcher {
 public:
  GraphMatcher(const SimpleGraph& g, const SimpleGraph& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget), sig_g_(graph_signatures(g)), sig_h_(graph_signatures(h)) {
    order_.resize(g.vertex_count());
    std::iota(order_.begin(), order_.end(), VertexId{0});
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      return sig_g_[a] > sig_g_[b];
    });
    fwd_.assign(g.vertex_count(), unmapped);
    used_.assign(h.vertex_count(), 0);
  }

  std::optional<IsomorphismWitness> run() {
    auto a = sig_g_, b = sig_h_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return IsomorphismWitness{fwd_};
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    charge(nodes_, budget_, "graph");
    const VertexId v = order_[depth];
    for (VertexId w = 0; w < h_.vertex_count(); ++w) {
      if (used_[w] || sig_h_[w] != sig_g_[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const VertexId u = order_[k];
        consistent = g_.adjacent(u, v) == h_.adjacent(fwd_[u], w);
      }
      if (!consistent) continue;
      fwd_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      fwd_[v] = unmapped;
      used_[w] = 0;
    }
    return false;
  }

  const SimpleGraph& g_;
  const SimpleGraph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> sig_g_, sig_h_;
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> fwd_;
  std::vector<char> used_;
};

// -------------------------------------------------------------- algebras

struct ElementSignature {
  std::size_t down = 0;
  std::size_t up = 0;
  std::size_t annihilators = 0;  // #{y : x ⊙ y = 0}
  std::size_t orbit = 0;         // #{x, 2x, 3x, ...}
  bool boolean = false;
  bool marked = false;

  auto operator<=>(const ElementSignature&) const = default;
};

std::vector<ElementSignature> algebra_signatures(const MvAlgebra& a,
                                                 std::span<const ElementId> marked) {
  const auto n = static_cast<ElementId>(a.order());
  std::vector<ElementSignature> sig(n);
  for (ElementId x = 0; x < n; ++x) {
    auto& s = sig[x];
    for (ElementId y = 0; y < n; ++y) {
      s.down += a.leq(y, x);
      s.up += a.leq(x, y);
      s.annihilators += a.odot(x, y) == a.zero();
    }
    ElementId sum = x;
    s.orbit = 1;
    while (a.oplus(sum, x) != sum) {
      sum = a.oplus(sum, x);
      ++s.orbit;
    }
    s.boolean = a.is_boolean(x);
  }
  for (ElementId x : marked) sig.at(x).marked = true;
  return sig;
}

class AlgebraMatcher {
 public:
  AlgebraMatcher(const MvAlgebra& a, std::span<const ElementId> from, const MvAlgebra& b,
                 std::span<const ElementId> to, std::uint64_t budget)
      : a_(a), b_(b), budget_(budget), sig_a_(algebra_signatures(a, from)),
        sig_b_(algebra_signatures(b, to)) {
    fwd_.assign(a.order(), unmapped);
    inv_.assign(b.order(), unmapped);
  }

  std::optional<IsomorphismWitness> run() {
    if (a_.order() != b_.order()) return std::nullopt;
    auto x = sig_a_, y = sig_b_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;

    // Branch on rare signatures first.
    std::map<ElementSignature, std::size_t> frequency;
    for (const auto& s : sig_a_) ++frequency[s];
    order_.resize(a_.order());
    std::iota(order_.begin(), order_.end(), ElementId{0});
    std::stable_sort(order_.begin(), order_.end(), [&](ElementId p, ElementId q) {
      return frequency[sig_a_[p]] < frequency[sig_a_[q]];
    });

    if (!assign(a_.zero(), b_.zero())) return std::nullopt;
    if (!search()) return std::nullopt;
    return IsomorphismWitness{fwd_};
  }

 private:
  // Maps x -> y and everything the choice forces. On failure the partial
  // work is left on the trail for the caller to undo.
  bool assign(ElementId x, ElementId y) {
    std::vector<std::pair<ElementId, ElementId>> queue{{x, y}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (fwd_[u] == v) continue;
      if (fwd_[u] != unmapped || inv_[v] != unmapped || sig_a_[u] != sig_b_[v]) return false;
      fwd_[u] = v;
      inv_[v] = u;
      trail_.push_back(u);
      queue.emplace_back(a_.star(u), b_.star(v));
      for (ElementId w : trail_) queue.emplace_back(a_.oplus(u, w), b_.oplus(v, fwd_[w]));
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const ElementId u = trail_.back();
      trail_.pop_back();
      inv_[fwd_[u]] = unmapped;
      fwd_[u] = unmapped;
    }
  }

  bool search() {
    charge(nodes_, budget_, "algebra");
    const auto next = std::find_if(order_.begin(), order_.end(),
                                   [&](ElementId x) { return fwd_[x] == unmapped; });
    if (next == order_.end()) return true;
    const ElementId x = *next;
    for (ElementId y = 0; y < b_.order(); ++y) {
      if (inv_[y] != unmapped || sig_b_[y] != sig_a_[x]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && search()) return true;
      undo_to(mark);
    }
    return false;
  }

  const MvAlgebra& a_;
  const MvAlgebra& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<ElementSignature> sig_a_, sig_b_;
  std::vector<ElementId> order_;
  std::vector<std::uint32_t> fwd_, inv_;
  std::vector<ElementId> trail_;
};

bool preserves_subset(const IsomorphismWitness& w, std::span<const ElementId> from,
                      std::span<const ElementId> to) {
  std::vector<ElementId> image;
  for (ElementId x : from) image.push_back(w.mapping.at(x));
  std::sort(image.begin(), image.end());
  std::vector<ElementId> target(to.begin(), to.end());
  std::sort(target.begin(), target.end());
  return image == target;
}

}  // namespace

bool is_graph_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          const IsomorphismWitness& w) {
  const std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || w.mapping.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto image : w.mapping) {
    if (image >= n || hit[image]) return false;
    hit[image] = 1;
  }
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(w.mapping[u], w.mapping[v])) return false;
  return true;
}

std::optional<IsomorphismWitness> graph_isomorphic(const SimpleGraph& g, const SimpleGraph& h,
                                                   std::uint64_t budget) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto witness = GraphMatcher(g, h, budget).run();
  if (witness && !is_graph_isomorphism(g, h, *witness))
    throw std::logic_error("graph isomorphism witness failed replay");
  return witness;
}

bool is_algebra_isomorphism(const MvAlgebra& a, const MvAlgebra& b, const IsomorphismWitness& w) {
  const std::size_t n = a.order();
  if (b.order() != n || w.mapping.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto image : w.mapping) {
    if (image >= n || hit[image]) return false;
    hit[image] = 1;
  }
  if (w.mapping[a.zero()] != b.zero()) return false;
  for (ElementId x = 0; x < n; ++x) {
    if (w.mapping[a.star(x)] != b.star(w.mapping[x])) return false;
    for (ElementId y = 0; y < n; ++y)
      if (w.mapping[a.oplus(x, y)] != b.oplus(w.mapping[x], w.mapping[y])) return false;
  }
  return true;
}

std::optional<IsomorphismWitness> algebra_isomorphic_preserving(
    const MvAlgebra& a, std::span<const ElementId> from, const MvAlgebra& b,
    std::span<const ElementId> to, std::uint64_t budget) {
  for (ElementId x : from) a.check(x);
  for (ElementId y : to) b.check(y);
  if (from.size() != to.size()) return std::nullopt;
  auto witness = AlgebraMatcher(a, from, b, to, budget).run();
  if (witness && !(is_algebra_isomorphism(a, b, *witness) && preserves_subset(*witness, from, to)))
    throw std::logic_error("algebra isomorphism witness failed replay");
  return witness;
}

std::optional<IsomorphismWitness> algebra_isomorphic(const MvAlgebra& a, const MvAlgebra& b,
                                                     std::uint64_t budget) {
  return algebra_isomorphic_preserving(a, {}, b, {}, budget);
}

MvAlgebra chain_product(std::span<const std::size_t> chain_orders) {
  std::vector<MvAlgebra> chains;
  for (std::size_t k : chain_orders) chains.push_back(lukasiewicz_chain(k));
  return direct_product(chains);
}

std::vector<std::size_t> chain_decomposition(const MvAlgebra& algebra) {
  if (algebra.is_trivial()) throw PreconditionFailed("chain_decomposition of the trivial algebra");
  const auto& boolean = algebra.boolean_elements();
  std::vector<std::size_t> orders;
  for (ElementId e : boolean) {
    if (e == algebra.zero()) continue;
    const bool atom = std::none_of(boolean.begin(), boolean.end(), [&](ElementId f) {
      return f != algebra.zero() && f != e && algebra.leq(f, e);
    });
    if (!atom) continue;
    std::size_t below = 0;
    for (ElementId x = 0; x < algebra.order(); ++x) below += algebra.leq(x, e);
    orders.push_back(below);
  }
  std::sort(orders.begin(), orders.end());

  const std::size_t product =
      std::accumulate(orders.begin(), orders.end(), std::size_t{1}, std::multiplies<>());
  if (orders.empty() || product != algebra.order())
    throw DecompositionFailed("chain orders do not multiply to the algebra order");
  if (!algebra_isomorphic(algebra, chain_product(orders)))
    throw DecompositionFailed("algebra is not isomorphic to its candidate chain product");
  return orders;
}

}  // namespace mvg
