#include <doctest.h>

#include <numeric>

#include "mvg/algebra.hpp"
#include "mvg/verification.hpp"
#include "oracles.hpp"

using namespace mvg;

namespace {

MvAlgebra example_m() {
  return direct_product({lukasiewicz_chain(2), lukasiewicz_chain(2), lukasiewicz_chain(3)});
}

ElementId el(char name) { return oracle::m_index(name); }

std::vector<ElementId> chain_oplus(std::size_t n) {
  std::vector<ElementId> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<ElementId>(std::min(n - 1, i + j));
  return t;
}

std::vector<ElementId> chain_star(std::size_t n) {
  std::vector<ElementId> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<ElementId>(n - 1 - i);
  return s;
}

}  // namespace

TEST_CASE("chain tables are truncated addition and complement") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const MvAlgebra l = lukasiewicz_chain(n);
    CHECK(l.order() == n);
    CHECK(l.oplus_table() == chain_oplus(n));
    CHECK(l.star_table() == chain_star(n));
    CHECK(l.zero() == 0);
    CHECK(l.one() == n - 1);
    CHECK(l.is_chain());
    CHECK(l.is_directly_indecomposable());
  }
  CHECK_THROWS_AS(lukasiewicz_chain(1), PreconditionFailed);
  CHECK_THROWS_AS(lukasiewicz_chain(0), PreconditionFailed);
}

TEST_CASE("chain labels are reduced fractions") {
  const MvAlgebra l5 = lukasiewicz_chain(5);
  CHECK(l5.labels() == std::vector<std::string>{"0", "1/4", "1/2", "3/4", "1"});
  CHECK(lukasiewicz_chain(2).labels() == std::vector<std::string>{"0", "1"});
}

TEST_CASE("product of L2, L2, L3 is the algebra M entry for entry") {
  const MvAlgebra m = example_m();
  REQUIRE(m.order() == 12);
  for (ElementId x = 0; x < 12; ++x) {
    CAPTURE(oracle::psi(x));
    CHECK(oracle::psi(m.star(x)) == oracle::m_star[x]);
    for (ElementId y = 0; y < 12; ++y) {
      CAPTURE(oracle::psi(y));
      CHECK(oracle::psi(m.oplus(x, y)) == oracle::m_oplus[x][y]);
      CHECK(oracle::psi(m.odot(x, y)) == oracle::m_odot[x][y]);
    }
  }
  CHECK(m.label(el('d')) == "(0,1,1/2)");
  CHECK(m.label(el('h')) == "(1,0,1)");
}

TEST_CASE("M built from the printed tables validates") {
  std::vector<ElementId> oplus, star;
  for (const auto& row : oracle::m_oplus)
    for (char c : row) oplus.push_back(el(c));
  for (char c : oracle::m_star) star.push_back(el(c));
  std::vector<std::string> labels;
  for (char c : oracle::m_names) labels.emplace_back(1, c);
  const MvAlgebra m = MvAlgebra::from_tables(12, oplus, star, 0, labels);
  CHECK(m.same_tables(example_m()));
  CHECK(m.label(el('j')) == "j");
  CHECK(m.one() == el('1'));
}

TEST_CASE("lattice operations in M") {
  const MvAlgebra m = example_m();
  CHECK(m.join(el('d'), el('g')) == el('j'));
  CHECK(m.meet(el('d'), el('g')) == el('a'));
  CHECK(m.leq(el('a'), el('e')));
  CHECK_FALSE(m.leq(el('c'), el('f')));
  CHECK(m.distance(el('a'), el('d')) == el('c'));
  CHECK(m.distance(el('g'), el('g')) == el('0'));
}

TEST_CASE("Boolean elements") {
  const MvAlgebra m = example_m();
  std::vector<ElementId> expected;
  for (char c : std::string_view("0bcefhi1")) expected.push_back(el(c));
  CHECK(m.boolean_elements() == expected);
  CHECK_FALSE(m.is_chain());
  CHECK_FALSE(m.is_directly_indecomposable());
  CHECK(lukasiewicz_chain(7).boolean_elements() == std::vector<ElementId>{0, 6});
}

TEST_CASE("fixed points of star") {
  CHECK(lukasiewicz_chain(3).fixed_points_of_star() == std::vector<ElementId>{1});
  CHECK(lukasiewicz_chain(4).fixed_points_of_star().empty());
  CHECK(example_m().fixed_points_of_star().empty());
}

TEST_CASE("axiom violations name the axiom and a witness") {
  SUBCASE("M1: zero is not neutral") {
    auto oplus = chain_oplus(3);
    oplus[0 * 3 + 1] = 2;
    oplus[1 * 3 + 0] = 2;
    try {
      MvAlgebra::from_tables(3, oplus, chain_star(3), 0);
      FAIL("accepted");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom() == "M1");
      CHECK_FALSE(e.witness().empty());
    }
  }
  SUBCASE("M1: not commutative") {
    auto oplus = chain_oplus(4);
    oplus[1 * 4 + 2] = 2;
    CHECK_THROWS_AS(MvAlgebra::from_tables(4, oplus, chain_star(4), 0), AxiomViolation);
  }
  SUBCASE("M2: star is not an involution") {
    try {
      MvAlgebra::from_tables(3, chain_oplus(3), {2, 2, 0}, 0);
      FAIL("accepted");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom() == "M2");
      CHECK(e.witness() == std::vector<ElementId>{1});
    }
  }
  SUBCASE("M3: x + 0* is not 0*") {
    // A 2-element "algebra" with ⊕ = max but star the identity.
    try {
      MvAlgebra::from_tables(2, {0, 1, 1, 1}, {0, 1}, 0);
      FAIL("accepted");
    } catch (const AxiomViolation& e) {
      CHECK((e.axiom() == "M3" || e.axiom() == "M2"));
    }
  }
  SUBCASE("M4 fails for a three-element Kleene-style table") {
    // x ⊕ y = max on {0, 1/2, 1} with x* = 1 - x satisfies M1-M3 only.
    const std::vector<ElementId> max_table = {0, 1, 2, 1, 1, 2, 2, 2, 2};
    try {
      MvAlgebra::from_tables(3, max_table, chain_star(3), 0);
      FAIL("accepted");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom() == "M4");
      CHECK(e.witness().size() == 2);
    }
  }
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(MvAlgebra::from_tables(0, {}, {}, 0), MalformedInput);
  CHECK_THROWS_AS(MvAlgebra::from_tables(2, {0, 1, 1}, {1, 0}, 0), MalformedInput);
  CHECK_THROWS_AS(MvAlgebra::from_tables(2, {0, 1, 1, 1}, {1}, 0), MalformedInput);
  CHECK_THROWS_AS(MvAlgebra::from_tables(2, {0, 1, 1, 5}, {1, 0}, 0), MalformedInput);
  CHECK_THROWS_AS(MvAlgebra::from_tables(2, {0, 1, 1, 1}, {1, 0}, 7), MalformedInput);
  CHECK_THROWS_AS(MvAlgebra::from_tables(2, {0, 1, 1, 1}, {1, 0}, 0, {"only one"}), MalformedInput);
}

TEST_CASE("element indices are checked") {
  const MvAlgebra l3 = lukasiewicz_chain(3);
  CHECK_THROWS_AS(l3.oplus(0, 3), ForeignObject);
  CHECK_THROWS_AS(l3.star(9), ForeignObject);
  CHECK_THROWS_AS(l3.label(3), ForeignObject);
}

TEST_CASE("trivial algebra") {
  const MvAlgebra t = trivial_algebra();
  CHECK(t.is_trivial());
  CHECK(t.zero() == t.one());
}

TEST_CASE("product coordinates round-trip") {
  const MvAlgebra m = example_m();
  for (ElementId x = 0; x < m.order(); ++x) CHECK(m.encode(m.decode(x)) == x);
  CHECK(m.decode(el('g')) == std::vector<ElementId>{1, 0, 1});
  CHECK(m.factors().size() == 3);
  CHECK(lukasiewicz_chain(4).factors().empty());
}

// Laws that hold in every MV-algebra, checked on one algebra per class up
// to order 12.
TEST_CASE("MV-algebra laws on every enumerated algebra") {
  for (const AlgebraCase& c : enumerate_algebras(12)) {
    CAPTURE(c.descriptor);
    const MvAlgebra& a = c.algebra;
    const auto n = static_cast<ElementId>(a.order());
    for (ElementId x = 0; x < n; ++x) {
      CHECK(a.odot(x, a.star(x)) == a.zero());
      CHECK(a.oplus(x, a.star(x)) == a.one());
      CHECK(a.leq(a.zero(), x));
      CHECK(a.leq(x, a.one()));
      CHECK(a.distance(x, x) == a.zero());
      CHECK(a.is_boolean(x) == (a.oplus(x, x) == x));
      CHECK(a.is_boolean(x) == (a.odot(x, x) == x));
      for (ElementId y = 0; y < n; ++y) {
        CHECK(a.odot(x, y) == a.odot(y, x));
        CHECK(a.star(a.oplus(x, y)) == a.odot(a.star(x), a.star(y)));
        CHECK(a.leq(x, y) == oracle::leq(a, x, y));
        CHECK(a.join(x, y) == a.join(y, x));
        CHECK(a.meet(x, y) == a.meet(y, x));
        CHECK(a.join(x, a.meet(x, y)) == x);
        CHECK(a.meet(x, a.join(x, y)) == x);
        CHECK(a.leq(x, y) == (a.meet(x, y) == x));
        CHECK(a.distance(x, y) == a.distance(y, x));
        CHECK((a.distance(x, y) == a.zero()) == (x == y));
        if (a.leq(x, y) && a.leq(y, x)) CHECK(x == y);
        for (ElementId z = 0; z < n; ++z) {
          CHECK(a.odot(a.odot(x, y), z) == a.odot(x, a.odot(y, z)));
          if (a.leq(x, y) && a.leq(y, z)) CHECK(a.leq(x, z));
          CHECK(a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z)));
          CHECK(a.leq(a.distance(x, z), a.oplus(a.distance(x, y), a.distance(y, z))));
        }
      }
    }
    CHECK(a.fixed_points_of_star().size() <= 1);
    CHECK(a.is_directly_indecomposable() == (c.chains.size() == 1));
    CHECK(a.boolean_elements().size() == (std::size_t{1} << c.chains.size()));
  }
}

TEST_CASE("copies share identity, rebuilt algebras do not") {
  const MvAlgebra a = lukasiewicz_chain(4);
  const MvAlgebra b = a;
  const MvAlgebra c = lukasiewicz_chain(4);
  CHECK(a.id() == b.id());
  CHECK(a.id() != c.id());
  CHECK(a.same_tables(c));
}
