#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mvg/errors.hpp"

namespace mvg {

/// A finite MV-algebra (A, ⊕, *, 0) stored as dense Cayley tables.
///
/// Elements are the indices 0..order()-1. Construction validates the four
/// MV axioms and then caches every derived operation (⊙, the natural order,
/// join, meet, Boolean elements). Instances are immutable and may be shared
/// between threads.
class MvAlgebra {
 public:
  /// Validates and builds an algebra. `oplus` is row-major order×order.
  /// Empty `labels` selects the defaults "e0", "e1", ...
  ///
  /// Throws MalformedInput for bad shapes or out-of-range entries and
  /// AxiomViolation (naming M1..M4 and a witness tuple) otherwise.
  static MvAlgebra from_tables(std::size_t order, std::vector<ElementId> oplus,
                               std::vector<ElementId> star, ElementId zero,
                               std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }

  ElementId oplus(ElementId x, ElementId y) const;
  ElementId star(ElementId x) const;
  ElementId odot(ElementId x, ElementId y) const;
  bool leq(ElementId x, ElementId y) const;
  ElementId join(ElementId x, ElementId y) const;
  ElementId meet(ElementId x, ElementId y) const;
  /// (x ⊙ y*) ⊕ (y ⊙ x*)
  ElementId distance(ElementId x, ElementId y) const;

  bool is_boolean(ElementId x) const;
  const std::vector<ElementId>& boolean_elements() const noexcept { return boolean_; }
  std::vector<ElementId> fixed_points_of_star() const;
  bool is_chain() const;
  bool is_directly_indecomposable() const;

  const std::string& label(ElementId x) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Raw tables, unchecked indexing. For serializers and hot loops.
  const std::vector<ElementId>& oplus_table() const noexcept { return oplus_; }
  const std::vector<ElementId>& star_table() const noexcept { return star_; }

  /// Throws ForeignObject unless x < order().
  void check(ElementId x) const;

  /// Identity shared by copies of one constructed algebra. Ideals and
  /// quotients remember it to refuse foreign algebras.
  std::uint64_t id() const noexcept { return id_; }

  /// Non-empty iff this algebra came out of direct_product; lists the
  /// factors most-significant first.
  const std::vector<std::shared_ptr<const MvAlgebra>>& factors() const noexcept {
    return factors_;
  }

  /// Mixed-radix helpers for product algebras.
  std::vector<ElementId> decode(ElementId x) const;
  ElementId encode(std::span<const ElementId> coordinates) const;

  /// Same tables, same zero. Labels and identity are ignored.
  bool same_tables(const MvAlgebra& other) const noexcept;

 private:
  MvAlgebra() = default;
  void build_cache();

  ElementId at(const std::vector<ElementId>& table, ElementId x, ElementId y) const {
    return table[static_cast<std::size_t>(x) * order_ + y];
  }

  std::size_t order_ = 0;
  ElementId zero_ = 0;
  ElementId one_ = 0;
  std::uint64_t id_ = 0;
  std::vector<ElementId> oplus_;
  std::vector<ElementId> star_;
  std::vector<std::string> labels_;

  std::vector<ElementId> odot_;
  std::vector<char> leq_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> boolean_;
  std::vector<char> is_boolean_;

  std::vector<std::shared_ptr<const MvAlgebra>> factors_;

  friend MvAlgebra direct_product(std::span<const MvAlgebra> factors);
};

/// L_n = {0, 1/(n-1), ..., 1} with x ⊕ y = min(1, x + y), x* = 1 - x.
/// Index i stands for i/(n-1). Requires n >= 2.
MvAlgebra lukasiewicz_chain(std::size_t n);

/// Pointwise product. Element index is the mixed-radix number of the
/// coordinate tuple, first factor most significant; labels are "(x,y,...)".
MvAlgebra direct_product(std::span<const MvAlgebra> factors);

inline MvAlgebra direct_product(std::initializer_list<MvAlgebra> factors) {
  return direct_product(std::span<const MvAlgebra>(factors.begin(), factors.size()));
}

/// The one-element algebra. Valid, but rejected by every theorem-level
/// operation.
MvAlgebra trivial_algebra();

}  // namespace mvg
