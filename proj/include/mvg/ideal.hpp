#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvg/algebra.hpp"

namespace mvg {

/// A validated ideal: contains 0, closed under ⊕, downward closed.
/// Members are kept sorted. Bound to the algebra it was built for.
class Ideal {
 public:
  /// Throws PreconditionFailed (with the violated condition) if `members`
  /// is not an ideal of `algebra`.
  static Ideal make(const MvAlgebra& algebra, std::vector<ElementId> members);

  const std::vector<ElementId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(ElementId x) const { return x < mask_.size() && mask_[x]; }
  std::uint64_t algebra_id() const noexcept { return algebra_id_; }

  bool is_zero_ideal() const noexcept { return members_.size() == 1; }
  bool is_proper_in(const MvAlgebra& algebra) const;

  /// I* = { b* : b in I }, sorted.
  std::vector<ElementId> starred(const MvAlgebra& algebra) const;

  /// Throws ForeignObject unless this ideal was built for `algebra`.
  void check_owner(const MvAlgebra& algebra) const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.algebra_id_ == b.algebra_id_ && a.members_ == b.members_;
  }

 private:
  Ideal() = default;
  std::uint64_t algebra_id_ = 0;
  std::vector<ElementId> members_;
  std::vector<char> mask_;

  friend Ideal ideal_generated_by(const MvAlgebra&, std::span<const ElementId>);
};

enum class IdealCondition { contains_zero, closed_under_oplus, downward_closed };

std::string to_string(IdealCondition c);

struct IdealCheck {
  bool ok = true;
  IdealCondition violated = IdealCondition::contains_zero;
  /// Offending elements: {} for a missing zero, {a, b} for a ⊕ b escaping,
  /// {a, b} for a <= b with b inside and a outside.
  std::vector<ElementId> witness;

  explicit operator bool() const noexcept { return ok; }
};

IdealCheck is_ideal(const MvAlgebra& algebra, std::span<const ElementId> subset);

/// Smallest ideal containing `generators`.
Ideal ideal_generated_by(const MvAlgebra& algebra, std::span<const ElementId> generators);

enum class IdealSearch {
  /// Close {0} under single-element extensions until nothing new appears.
  closure_growth,
  /// Test every subset with is_ideal. Exponential; order <= 20 only.
  exhaustive_subsets,
};

/// Every ideal of a nontrivial algebra, sorted by (size, member list).
std::vector<Ideal> all_ideals(const MvAlgebra& algebra,
                              IdealSearch method = IdealSearch::closure_growth);

/// The proper ideals (those missing 1), same order as all_ideals.
std::vector<Ideal> proper_ideals(const MvAlgebra& algebra);

bool is_simple(const MvAlgebra& algebra);

/// A/I together with the congruence that produced it.
struct QuotientAlgebra {
  /// Blocks in increasing order of their smallest member.
  std::vector<std::vector<ElementId>> classes;
  /// Smallest member of each block.
  std::vector<ElementId> representative;
  /// Element of A -> block index. Block indices are the elements of `algebra`.
  std::vector<ElementId> projection;
  MvAlgebra algebra;

  std::size_t size() const noexcept { return classes.size(); }
  ElementId block_of(ElementId x) const { return projection.at(x); }
};

/// Builds A/I from the test "x ⊙ y* ∈ I and y ⊙ x* ∈ I". Checks that the
/// result is an MV-algebra and that the projection is a homomorphism.
/// Throws PreconditionFailed for an improper ideal or trivial algebra.
QuotientAlgebra quotient(const MvAlgebra& algebra, const Ideal& ideal);

/// Cartesian product of component ideals inside a direct_product algebra.
Ideal product_ideal(const MvAlgebra& product, std::span<const Ideal> components);

/// Splits an ideal of a direct_product algebra into its coordinate
/// projections; the product of the pieces is checked to give back `ideal`.
std::vector<Ideal> ideal_factorization(const MvAlgebra& product, const Ideal& ideal);

}  // namespace mvg
