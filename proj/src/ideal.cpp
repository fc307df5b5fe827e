#include "mvg/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace mvg {

namespace {

void require_nontrivial(const MvAlgebra& a, const char* what) {
  if (a.is_trivial()) throw PreconditionFailed(std::string(what) + " requires a nontrivial algebra");
}

std::vector<char> mask_of(const MvAlgebra& a, std::span<const ElementId> subset) {
  std::vector<char> mask(a.order(), 0);
  for (ElementId x : subset) {
    a.check(x);
    mask[x] = 1;
  }
  return mask;
}

std::vector<ElementId> members_of(const std::vector<char>& mask) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < mask.size(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

// Fixpoint of ⊕-closure and downward closure, in place.
void close_ideal(const MvAlgebra& a, std::vector<char>& mask) {
  const auto n = static_cast<ElementId>(a.order());
  mask[a.zero()] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (ElementId x = 0; x < n; ++x) {
      if (!mask[x]) continue;
      for (ElementId y = x; y < n; ++y) {
        if (!mask[y]) continue;
        const ElementId s = a.oplus(x, y);
        if (!mask[s]) mask[s] = 1, grew = true;
      }
    }
    for (ElementId b = 0; b < n; ++b) {
      if (!mask[b]) continue;
      for (ElementId x = 0; x < n; ++x)
        if (!mask[x] && a.leq(x, b)) mask[x] = 1, grew = true;
    }
  }
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

}  // namespace

std::string to_string(IdealCondition c) {
  switch (c) {
    case IdealCondition::contains_zero: return "contains-zero";
    case IdealCondition::closed_under_oplus: return "closed-under-oplus";
    case IdealCondition::downward_closed: return "downward-closed";
  }
  return "unknown";
}

IdealCheck is_ideal(const MvAlgebra& a, std::span<const ElementId> subset) {
  const std::vector<char> mask = mask_of(a, subset);
  const auto n = static_cast<ElementId>(a.order());
  IdealCheck result;
  if (!mask[a.zero()]) {
    result.ok = false;
    result.violated = IdealCondition::contains_zero;
    return result;
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x; y < n; ++y)
      if (mask[x] && mask[y] && !mask[a.oplus(x, y)]) {
        result.ok = false;
        result.violated = IdealCondition::closed_under_oplus;
        result.witness = {x, y};
        return result;
      }
  for (ElementId b = 0; b < n; ++b)
    for (ElementId x = 0; x < n; ++x)
      if (mask[b] && !mask[x] && a.leq(x, b)) {
        result.ok = false;
        result.violated = IdealCondition::downward_closed;
        result.witness = {x, b};
        return result;
      }
  return result;
}

Ideal Ideal::make(const MvAlgebra& algebra, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (const IdealCheck check = is_ideal(algebra, members); !check) {
    std::string msg = "not an ideal: " + to_string(check.violated);
    for (ElementId w : check.witness) msg += " " + algebra.label(w);
    throw PreconditionFailed(msg);
  }
  Ideal ideal;
  ideal.algebra_id_ = algebra.id();
  ideal.mask_ = mask_of(algebra, members);
  ideal.members_ = std::move(members);
  return ideal;
}

bool Ideal::is_proper_in(const MvAlgebra& algebra) const {
  check_owner(algebra);
  return !contains(algebra.one());
}

std::vector<ElementId> Ideal::starred(const MvAlgebra& algebra) const {
  check_owner(algebra);
  std::vector<ElementId> out;
  out.reserve(members_.size());
  for (ElementId b : members_) out.push_back(algebra.star(b));
  std::sort(out.begin(), out.end());
  return out;
}

void Ideal::check_owner(const MvAlgebra& algebra) const {
  if (algebra.id() != algebra_id_) throw ForeignObject("ideal belongs to a different algebra");
}

Ideal ideal_generated_by(const MvAlgebra& algebra, std::span<const ElementId> generators) {
  std::vector<char> mask = mask_of(algebra, generators);
  close_ideal(algebra, mask);
  Ideal ideal;
  ideal.algebra_id_ = algebra.id();
  ideal.members_ = members_of(mask);
  ideal.mask_ = std::move(mask);
  return ideal;
}

std::vector<Ideal> all_ideals(const MvAlgebra& algebra, IdealSearch method) {
  require_nontrivial(algebra, "all_ideals");
  const std::size_t n = algebra.order();
  std::vector<Ideal> out;

  if (method == IdealSearch::exhaustive_subsets) {
    if (n > 20) throw PreconditionFailed("exhaustive ideal search limited to order 20");
    std::vector<ElementId> subset;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      if (!((bits >> algebra.zero()) & 1)) continue;
      subset.clear();
      for (ElementId x = 0; x < n; ++x)
        if ((bits >> x) & 1) subset.push_back(x);
      if (is_ideal(algebra, subset)) out.push_back(Ideal::make(algebra, subset));
    }
  } else {
    std::set<std::vector<ElementId>> seen;
    std::deque<Ideal> pending;
    const ElementId zero = algebra.zero();
    pending.push_back(ideal_generated_by(algebra, std::span<const ElementId>(&zero, 1)));
    seen.insert(pending.front().members());
    while (!pending.empty()) {
      Ideal current = std::move(pending.front());
      pending.pop_front();
      std::vector<ElementId> generators = current.members();
      for (ElementId x = 0; x < n; ++x) {
        if (current.contains(x)) continue;
        generators.push_back(x);
        Ideal next = ideal_generated_by(algebra, generators);
        generators.pop_back();
        if (seen.insert(next.members()).second) pending.push_back(std::move(next));
      }
      out.push_back(std::move(current));
    }
  }
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

std::vector<Ideal> proper_ideals(const MvAlgebra& algebra) {
  std::vector<Ideal> out;
  for (Ideal& i : all_ideals(algebra))
    if (!i.contains(algebra.one())) out.push_back(std::move(i));
  return out;
}

bool is_simple(const MvAlgebra& algebra) {
  require_nontrivial(algebra, "is_simple");
  const bool two_ideals = all_ideals(algebra).size() == 2;

  // Archimedean cross-check: every nonzero a reaches 1 as a ⊕ a ⊕ ... ⊕ a.
  bool archimedean = true;
  for (ElementId a = 0; a < algebra.order() && archimedean; ++a) {
    if (a == algebra.zero()) continue;
    ElementId sum = a;
    for (std::size_t k = 0; k < algebra.order() && sum != algebra.one(); ++k)
      sum = algebra.oplus(sum, a);
    archimedean = sum == algebra.one();
  }
  if (two_ideals != archimedean)
    throw std::logic_error("simplicity tests disagree on an algebra of order " +
                           std::to_string(algebra.order()));
  return two_ideals;
}

QuotientAlgebra quotient(const MvAlgebra& algebra, const Ideal& ideal) {
  ideal.check_owner(algebra);
  require_nontrivial(algebra, "quotient");
  if (ideal.contains(algebra.one())) throw PreconditionFailed("quotient by an improper ideal");

  const auto n = static_cast<ElementId>(algebra.order());
  constexpr ElementId unassigned = ~ElementId{0};
  std::vector<std::vector<ElementId>> classes;
  std::vector<ElementId> representative;
  std::vector<ElementId> projection(n, unassigned);
  for (ElementId x = 0; x < n; ++x) {
    if (projection[x] != unassigned) continue;
    const auto block = static_cast<ElementId>(classes.size());
    classes.push_back({x});
    representative.push_back(x);
    projection[x] = block;
    for (ElementId y = x + 1; y < n; ++y)
      if (projection[y] == unassigned && ideal.contains(algebra.odot(x, algebra.star(y))) &&
          ideal.contains(algebra.odot(y, algebra.star(x)))) {
        projection[y] = block;
        classes.back().push_back(y);
      }
  }

  const std::size_t m = classes.size();
  std::vector<ElementId> oplus(m * m);
  std::vector<ElementId> star(m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    const ElementId ri = representative[i];
    star[i] = projection[algebra.star(ri)];
    labels[i] = algebra.label(ri) + "/I";
    for (std::size_t j = 0; j < m; ++j)
      oplus[i * m + j] = projection[algebra.oplus(ri, representative[j])];
  }
  MvAlgebra induced = MvAlgebra::from_tables(m, std::move(oplus), std::move(star),
                                             projection[algebra.zero()], std::move(labels));

  for (ElementId x = 0; x < n; ++x) {
    if (projection[algebra.star(x)] != induced.star(projection[x]))
      throw std::logic_error("projection does not preserve *");
    for (ElementId y = 0; y < n; ++y)
      if (projection[algebra.oplus(x, y)] != induced.oplus(projection[x], projection[y]))
        throw std::logic_error("projection does not preserve oplus");
  }
  return QuotientAlgebra{std::move(classes), std::move(representative), std::move(projection),
                         std::move(induced)};
}

Ideal product_ideal(const MvAlgebra& product, std::span<const Ideal> components) {
  const auto& factors = product.factors();
  if (factors.empty()) throw PreconditionFailed("product_ideal needs a direct_product algebra");
  if (components.size() != factors.size())
    throw PreconditionFailed("expected " + std::to_string(factors.size()) + " component ideals, got " +
                        std::to_string(components.size()));
  for (std::size_t k = 0; k < factors.size(); ++k) components[k].check_owner(*factors[k]);

  std::vector<ElementId> members;
  std::vector<ElementId> coords(factors.size());
  for (ElementId x = 0; x < product.order(); ++x) {
    coords = product.decode(x);
    bool inside = true;
    for (std::size_t k = 0; k < coords.size() && inside; ++k) inside = components[k].contains(coords[k]);
    if (inside) members.push_back(x);
  }
  return Ideal::make(product, std::move(members));
}

std::vector<Ideal> ideal_factorization(const MvAlgebra& product, const Ideal& ideal) {
  ideal.check_owner(product);
  const auto& factors = product.factors();
  if (factors.empty()) throw PreconditionFailed("ideal_factorization needs a direct_product algebra");

  std::vector<std::vector<ElementId>> projected(factors.size());
  for (ElementId x : ideal.members()) {
    const auto coords = product.decode(x);
    for (std::size_t k = 0; k < coords.size(); ++k) projected[k].push_back(coords[k]);
  }
  std::vector<Ideal> parts;
  for (std::size_t k = 0; k < factors.size(); ++k)
    parts.push_back(Ideal::make(*factors[k], std::move(projected[k])));

  if (!(product_ideal(product, parts) == ideal))
    throw std::logic_error("ideal is not the product of its coordinate projections");
  return parts;
}

}  // namespace mvg
