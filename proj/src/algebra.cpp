#include "mvg/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace mvg {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

std::string describe_witness(const std::vector<ElementId>& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? ", " : "") << w[i];
  return out.str();
}

std::string chain_label(std::size_t i, std::size_t n) {
  if (i == 0) return "0";
  if (i == n - 1) return "1";
  const std::size_t g = std::gcd(i, n - 1);
  return std::to_string(i / g) + "/" + std::to_string((n - 1) / g);
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<ElementId> witness,
                               const std::string& detail)
    : Error("axiom " + axiom + " violated at (" + describe_witness(witness) + "): " + detail),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

MvAlgebra MvAlgebra::from_tables(std::size_t order, std::vector<ElementId> oplus,
                                 std::vector<ElementId> star, ElementId zero,
                                 std::vector<std::string> labels) {
  if (order == 0) throw MalformedInput("algebra order must be at least 1");
  if (oplus.size() != order * order)
    throw MalformedInput("oplus table has " + std::to_string(oplus.size()) +
                         " entries, expected " + std::to_string(order * order));
  if (star.size() != order)
    throw MalformedInput("star table has " + std::to_string(star.size()) +
                         " entries, expected " + std::to_string(order));
  if (zero >= order) throw MalformedInput("zero index out of range");
  for (std::size_t k = 0; k < oplus.size(); ++k)
    if (oplus[k] >= order)
      throw MalformedInput("oplus entry (" + std::to_string(k / order) + ", " +
                           std::to_string(k % order) + ") out of range");
  for (std::size_t k = 0; k < star.size(); ++k)
    if (star[k] >= order) throw MalformedInput("star entry " + std::to_string(k) + " out of range");
  if (labels.empty()) {
    labels.reserve(order);
    for (std::size_t k = 0; k < order; ++k) labels.push_back("e" + std::to_string(k));
  } else if (labels.size() != order) {
    throw MalformedInput("expected " + std::to_string(order) + " labels, got " +
                         std::to_string(labels.size()));
  }

  const auto n = static_cast<ElementId>(order);
  auto op = [&](ElementId x, ElementId y) { return oplus[static_cast<std::size_t>(x) * order + y]; };

  // M1: commutative monoid with identity zero.
  for (ElementId x = 0; x < n; ++x) {
    if (op(x, zero) != x) throw AxiomViolation("M1", {x}, "x + 0 != x");
    for (ElementId y = x + 1; y < n; ++y)
      if (op(x, y) != op(y, x)) throw AxiomViolation("M1", {x, y}, "x + y != y + x");
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const ElementId xy = op(x, y);
      for (ElementId z = 0; z < n; ++z)
        if (op(xy, z) != op(x, op(y, z)))
          throw AxiomViolation("M1", {x, y, z}, "(x + y) + z != x + (y + z)");
    }
  // M2
  for (ElementId x = 0; x < n; ++x)
    if (star[star[x]] != x) throw AxiomViolation("M2", {x}, "x** != x");
  // M3
  const ElementId top = star[zero];
  for (ElementId x = 0; x < n; ++x)
    if (op(x, top) != top) throw AxiomViolation("M3", {x}, "x + 0* != 0*");
  // M4
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y)
      if (op(star[op(star[x], y)], y) != op(star[op(star[y], x)], x))
        throw AxiomViolation("M4", {x, y}, "(x* + y)* + y != (y* + x)* + x");

  MvAlgebra a;
  a.order_ = order;
  a.zero_ = zero;
  a.one_ = top;
  a.id_ = next_algebra_id.fetch_add(1, std::memory_order_relaxed);
  a.oplus_ = std::move(oplus);
  a.star_ = std::move(star);
  a.labels_ = std::move(labels);
  a.build_cache();
  return a;
}

void MvAlgebra::build_cache() {
  const std::size_t n = order_;
  odot_.assign(n * n, 0);
  leq_.assign(n * n, 0);
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      odot_[x * n + y] = star_[at(oplus_, star_[x], star_[y])];
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const std::size_t k = x * n + y;
      leq_[k] = at(oplus_, star_[x], y) == one_;
      join_[k] = at(oplus_, at(odot_, x, star_[y]), y);
      meet_[k] = at(odot_, x, at(oplus_, star_[x], y));
    }
  is_boolean_.assign(n, 0);
  boolean_.clear();
  for (ElementId x = 0; x < n; ++x)
    if (at(oplus_, x, x) == x) {
      is_boolean_[x] = 1;
      boolean_.push_back(x);
    }
}

void MvAlgebra::check(ElementId x) const {
  if (x >= order_)
    throw ForeignObject("element " + std::to_string(x) + " is not in an algebra of order " +
                        std::to_string(order_));
}

ElementId MvAlgebra::oplus(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return at(oplus_, x, y);
}

ElementId MvAlgebra::star(ElementId x) const {
  check(x);
  return star_[x];
}

ElementId MvAlgebra::odot(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return at(odot_, x, y);
}

bool MvAlgebra::leq(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return leq_[static_cast<std::size_t>(x) * order_ + y] != 0;
}

ElementId MvAlgebra::join(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return at(join_, x, y);
}

ElementId MvAlgebra::meet(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return at(meet_, x, y);
}

ElementId MvAlgebra::distance(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return at(oplus_, at(odot_, x, star_[y]), at(odot_, y, star_[x]));
}

bool MvAlgebra::is_boolean(ElementId x) const {
  check(x);
  return is_boolean_[x] != 0;
}

std::vector<ElementId> MvAlgebra::fixed_points_of_star() const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < order_; ++x)
    if (star_[x] == x) out.push_back(x);
  // |Fix(*)| <= 1 holds in every MV-algebra.
  if (out.size() > 1)
    throw AxiomViolation("Fix*", out, "more than one fixed point of *");
  return out;
}

bool MvAlgebra::is_chain() const {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (!leq_[x * order_ + y] && !leq_[y * order_ + x]) return false;
  return true;
}

bool MvAlgebra::is_directly_indecomposable() const {
  // B(A) = {0, 1}; the trivial algebra has B(A) = {0} and is excluded.
  return boolean_.size() == 2;
}

const std::string& MvAlgebra::label(ElementId x) const {
  check(x);
  return labels_[x];
}

std::vector<ElementId> MvAlgebra::decode(ElementId x) const {
  check(x);
  if (factors_.empty()) throw PreconditionFailed("algebra is not a direct product");
  std::vector<ElementId> coords(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const auto radix = static_cast<ElementId>(factors_[k]->order());
    coords[k] = x % radix;
    x /= radix;
  }
  return coords;
}

ElementId MvAlgebra::encode(std::span<const ElementId> coordinates) const {
  if (factors_.empty()) throw PreconditionFailed("algebra is not a direct product");
  if (coordinates.size() != factors_.size())
    throw ForeignObject("coordinate tuple has wrong arity");
  ElementId x = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    factors_[k]->check(coordinates[k]);
    x = x * static_cast<ElementId>(factors_[k]->order()) + coordinates[k];
  }
  return x;
}

bool MvAlgebra::same_tables(const MvAlgebra& other) const noexcept {
  return order_ == other.order_ && zero_ == other.zero_ && oplus_ == other.oplus_ &&
         star_ == other.star_;
}

MvAlgebra lukasiewicz_chain(std::size_t n) {
  if (n < 2) throw PreconditionFailed("Lukasiewicz chain needs n >= 2, got " + std::to_string(n));
  std::vector<ElementId> oplus(n * n);
  std::vector<ElementId> star(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    star[i] = static_cast<ElementId>(n - 1 - i);
    labels[i] = chain_label(i, n);
    for (std::size_t j = 0; j < n; ++j) oplus[i * n + j] = static_cast<ElementId>(std::min(n - 1, i + j));
  }
  return MvAlgebra::from_tables(n, std::move(oplus), std::move(star), 0, std::move(labels));
}

MvAlgebra direct_product(std::span<const MvAlgebra> factors) {
  if (factors.empty()) throw PreconditionFailed("direct product of an empty factor list");
  std::size_t n = 1;
  for (const auto& f : factors) {
    if (n > (std::size_t{1} << 20) / f.order())
      throw PreconditionFailed("direct product too large");
    n *= f.order();
  }

  std::vector<std::vector<ElementId>> coords(n, std::vector<ElementId>(factors.size()));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t k = factors.size(); k-- > 0;) {
      coords[x][k] = static_cast<ElementId>(rest % factors[k].order());
      rest /= factors[k].order();
    }
  }
  auto encode = [&](const std::vector<ElementId>& c) {
    ElementId x = 0;
    for (std::size_t k = 0; k < factors.size(); ++k)
      x = x * static_cast<ElementId>(factors[k].order()) + c[k];
    return x;
  };

  std::vector<ElementId> oplus(n * n);
  std::vector<ElementId> star(n);
  std::vector<std::string> labels(n);
  std::vector<ElementId> tmp(factors.size());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k].star_table()[coords[x][k]];
    star[x] = encode(tmp);
    std::string label = "(";
    for (std::size_t k = 0; k < factors.size(); ++k)
      label += (k ? "," : "") + factors[k].labels()[coords[x][k]];
    labels[x] = label + ")";
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < factors.size(); ++k)
        tmp[k] = factors[k].oplus_table()[coords[x][k] * factors[k].order() + coords[y][k]];
      oplus[x * n + y] = encode(tmp);
    }
  }
  for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k].zero();

  MvAlgebra product =
      MvAlgebra::from_tables(n, std::move(oplus), std::move(star), encode(tmp), std::move(labels));
  for (const auto& f : factors) product.factors_.push_back(std::make_shared<const MvAlgebra>(f));
  return product;
}

MvAlgebra trivial_algebra() { return MvAlgebra::from_tables(1, {0}, {0}, 0, {"0"}); }

}  // namespace mvg
