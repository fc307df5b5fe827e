#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mvg/algebra.hpp"
#include "mvg/graph.hpp"

namespace mvg {

/// mapping[i] is the image of vertex/element i.
struct IsomorphismWitness {
  std::vector<std::uint32_t> mapping;
};

/// Upper bound on search-tree nodes before BudgetExceeded is thrown.
inline constexpr std::uint64_t default_search_budget = 5'000'000;

/// Exact backtracking matcher. Vertices are tried in order of decreasing
/// degree; candidates must agree on degree and on the multiset of their
/// neighbours' degrees. Returns nullopt only after exhausting the search.
std::optional<IsomorphismWitness> graph_isomorphic(const SimpleGraph& g, const SimpleGraph& h,
                                                   std::uint64_t budget = default_search_budget);

bool is_graph_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          const IsomorphismWitness& w);

/// Exact MV-algebra isomorphism search. zero is pinned to zero and every
/// choice is propagated through * and ⊕ before branching again.
std::optional<IsomorphismWitness> algebra_isomorphic(const MvAlgebra& a, const MvAlgebra& b,
                                                     std::uint64_t budget = default_search_budget);

/// As above, additionally requiring the isomorphism to carry the subset
/// `from` (of a) exactly onto `to` (of b). Used for "I ≅ J" judgements.
std::optional<IsomorphismWitness> algebra_isomorphic_preserving(
    const MvAlgebra& a, std::span<const ElementId> from, const MvAlgebra& b,
    std::span<const ElementId> to, std::uint64_t budget = default_search_budget);

bool is_algebra_isomorphism(const MvAlgebra& a, const MvAlgebra& b, const IsomorphismWitness& w);

/// Chain orders {k_1 <= ... <= k_m} with A ≅ L_{k_1} × ... × L_{k_m}.
/// Read off the atoms of B(A): the down-set of each atom is one chain.
/// The answer is rebuilt and matched against A before it is returned;
/// DecompositionFailed otherwise.
std::vector<std::size_t> chain_decomposition(const MvAlgebra& algebra);

/// Product of Łukasiewicz chains in the given order.
MvAlgebra chain_product(std::span<const std::size_t> chain_orders);

}  // namespace mvg
