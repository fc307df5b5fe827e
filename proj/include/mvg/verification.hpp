#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mvg/algebra.hpp"
#include "mvg/ideal.hpp"

namespace mvg {

/// One isomorphism class of finite MV-algebras, represented as a product
/// of Łukasiewicz chains.
struct AlgebraCase {
  std::vector<std::size_t> chains;  // non-decreasing, each >= 2
  std::string descriptor;           // "L2xL2xL3"
  MvAlgebra algebra;
};

/// One representative per isomorphism class for every order in
/// [2, max_order]: all multisets of chain orders >= 2 with the right
/// product. Ordered by (order, chain list). Distinct classes of the same
/// order are checked to be non-isomorphic.
std::vector<AlgebraCase> enumerate_algebras(std::size_t max_order);

std::string describe_chains(const std::vector<std::size_t>& chains);
std::string describe_ideal(const Ideal& ideal);

enum class Verdict { pass, fail, vacuous, inconclusive };

struct CheckResult {
  Verdict verdict = Verdict::vacuous;
  std::string expected;
  std::string observed;
  /// Which branch of a case split fired, when the theorem has one.
  std::string case_label;
};

/// Per-algebra checks: G1, L5.
inline const std::vector<std::string_view> algebra_theorems = {"G1", "L5"};

/// Per-(algebra, proper ideal) checks.
inline const std::vector<std::string_view> ideal_theorems = {
    "C377", "P15", "P20", "L10", "P11", "C5",  "T1",  "T2",  "T3",  "T5",  "T6",  "P3333",
    "P22",  "P40", "P23", "G2",  "G3", "G3D", "L13", "L14", "L15"};

/// Checks that range over several instances at once.
inline const std::vector<std::string_view> global_theorems = {"T43", "T1000", "P10000"};

/// Evaluates one theorem on (A) or (A, I); `ideal` is null for the
/// per-algebra theorems. The hypothesis side and the conclusion side are
/// computed from separately built objects. Budget overruns come back as
/// Verdict::inconclusive.
CheckResult check_theorem(std::string_view id, const MvAlgebra& algebra, const Ideal* ideal);

struct Failure {
  std::string algebra;
  std::string ideal;
  std::string expected;
  std::string observed;
};

struct TheoremReport {
  std::string id;
  std::size_t instances = 0;
  std::size_t vacuous = 0;
  std::size_t inconclusive = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::size_t> cases;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return failures.empty() && inconclusive == 0; }
};

struct FullReport {
  std::size_t max_order = 0;
  std::size_t algebras = 0;
  /// Number of (A, I) pairs with I proper.
  std::size_t ideal_pairs = 0;
  std::vector<TheoremReport> theorems;

  bool passed() const noexcept;
  const TheoremReport& at(std::string_view id) const;
};

/// Every check over every enumerated algebra and proper ideal.
/// max_order >= 3.
FullReport run_all(std::size_t max_order);

/// JSON lines: one record per failure, one summary per theorem, one total.
std::string to_json_lines(const FullReport& report);

}  // namespace mvg
