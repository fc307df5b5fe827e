#include <doctest.h>

#include <json.hpp>
#include <functional>
#include <numeric>
#include <sstream>

#include "mvg/isomorphism.hpp"
#include "mvg/verification.hpp"
#include "oracles.hpp"

using namespace mvg;

namespace {

std::vector<std::string> descriptors_of_order(const std::vector<AlgebraCase>& cases, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& c : cases)
    if (c.algebra.order() == n) out.push_back(c.descriptor);
  return out;
}

const FullReport& report12() {
  static const FullReport r = run_all(12);
  return r;
}

std::size_t case_count(const TheoremReport& t, const std::string& label) {
  const auto it = t.cases.find(label);
  return it == t.cases.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("enumeration up to order 6") {
  const auto cases = enumerate_algebras(6);
  CHECK(descriptors_of_order(cases, 2) == std::vector<std::string>{"L2"});
  CHECK(descriptors_of_order(cases, 3) == std::vector<std::string>{"L3"});
  CHECK(descriptors_of_order(cases, 4) == std::vector<std::string>{"L2xL2", "L4"});
  CHECK(descriptors_of_order(cases, 5) == std::vector<std::string>{"L5"});
  CHECK(descriptors_of_order(cases, 6) == std::vector<std::string>{"L2xL3", "L6"});
  CHECK(cases.size() == 7);
}

TEST_CASE("enumeration at orders 7 and 12") {
  const auto cases = enumerate_algebras(12);
  CHECK(descriptors_of_order(cases, 7) == std::vector<std::string>{"L7"});
  CHECK(descriptors_of_order(cases, 12) ==
        std::vector<std::string>{"L2xL2xL3", "L2xL6", "L3xL4", "L12"});
  for (const auto& c : cases) CHECK(c.algebra.order() == std::accumulate(c.chains.begin(), c.chains.end(),
                                                                          std::size_t{1},
                                                                          std::multiplies<>()));
  CHECK_THROWS_AS(enumerate_algebras(1), PreconditionFailed);
}

TEST_CASE("run_all rejects orders without graphs") {
  CHECK_THROWS_AS(run_all(2), PreconditionFailed);
}

TEST_CASE("run_all(7) passes and the diameter-0 case is (L3, {0}) alone") {
  const FullReport r = run_all(7);
  CHECK(r.passed());
  CHECK(case_count(r.at("T2"), "diam0") == 1);
}

TEST_CASE("run_all(12) passes every check") {
  const FullReport& r = report12();
  for (const auto& t : r.theorems) {
    CAPTURE(t.id);
    CHECK(t.failures.empty());
    CHECK(t.inconclusive == 0);
    CHECK(t.instances > 0);
  }
  CHECK(r.passed());
  CHECK(r.theorems.size() ==
        algebra_theorems.size() + ideal_theorems.size() + global_theorems.size());
}

TEST_CASE("instance count is the number of proper ideals summed over algebras") {
  std::size_t expected = 0;
  for (const AlgebraCase& c : enumerate_algebras(12)) expected += oracle::ideals_by_subsets(c.algebra).size() - 1;
  CHECK(report12().ideal_pairs == expected);
  for (std::string_view id : ideal_theorems) {
    const TheoremReport& t = report12().at(id);
    CAPTURE(id);
    CHECK(t.instances + t.vacuous == expected);
  }
  CHECK(run_all(12).ideal_pairs == expected);
}

TEST_CASE("girth-4 case of the ideal graph fires exactly for quotients B4") {
  std::size_t b4_quotients = 0;
  for (const AlgebraCase& c : enumerate_algebras(12))
    for (const Ideal& i : proper_ideals(c.algebra))
      if (!i.is_zero_ideal() && chain_decomposition(quotient(c.algebra, i).algebra) ==
                                    std::vector<std::size_t>{2, 2})
        ++b4_quotients;
  CHECK(b4_quotients > 0);
  CHECK(case_count(report12().at("G3"), "4") == b4_quotients);
  CHECK(case_count(report12().at("G3"), "inf") == 1);
}

TEST_CASE("girth of the zero-divisor graph splits five classes off") {
  const TheoremReport& g1 = report12().at("G1");
  CHECK(case_count(g1, "inf") == 5);
  CHECK(g1.vacuous == 1);
}

TEST_CASE("single checks") {
  const MvAlgebra l2l3 = chain_product(std::vector<std::size_t>{2, 3});
  const CheckResult g1 = check_theorem("G1", l2l3, nullptr);
  CHECK(g1.verdict == Verdict::pass);
  CHECK(g1.expected == "inf");
  CHECK(g1.observed == "inf");

  const MvAlgebra m = chain_product(std::vector<std::size_t>{2, 2, 3});
  const Ideal i = Ideal::make(m, {0, 1, 2});
  const CheckResult g3 = check_theorem("G3", m, &i);
  CHECK(g3.verdict == Verdict::pass);
  CHECK(g3.expected == "4");
  CHECK(g3.observed == "4");

  const Ideal l2_zero = Ideal::make(l2l3, {0, 3});
  const CheckResult special = check_theorem("G3", l2l3, &l2_zero);
  CHECK(special.verdict == Verdict::pass);
  CHECK(special.expected == "inf");
  CHECK(check_theorem("G3D", l2l3, &l2_zero).verdict == Verdict::pass);

  const MvAlgebra l3 = lukasiewicz_chain(3);
  const Ideal zero = Ideal::make(l3, {0});
  const CheckResult t2 = check_theorem("T2", l3, &zero);
  CHECK(t2.verdict == Verdict::pass);
  CHECK(t2.observed == "[true,true,true,true,true]");
  CHECK(t2.case_label == "diam0");
  // Gamma(L3) is one vertex without edges: nothing for the diameter-1 check.
  CHECK(check_theorem("T3", l3, &zero).verdict == Verdict::vacuous);

  // L2 x L3 modulo its coatom ideal has two elements; no graph.
  const Ideal big = Ideal::make(l2l3, {0, 1, 2});
  CHECK(check_theorem("T1", l2l3, &big).verdict == Verdict::vacuous);

  CHECK_THROWS_AS(check_theorem("X9", l3, &zero), PreconditionFailed);
  CHECK_THROWS_AS(check_theorem("X9", l3, nullptr), PreconditionFailed);
}

TEST_CASE("JSON lines report") {
  const std::string text = to_json_lines(report12());
  CHECK(text == to_json_lines(run_all(12)));
  std::istringstream lines(text);
  std::string line;
  std::size_t summaries = 0;
  nlohmann::json last;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    if (last["type"] == "summary") {
      ++summaries;
      CHECK(last["status"] == "pass");
      CHECK(last["failures"] == 0);
    }
    CHECK(last["type"] != "failure");
  }
  CHECK(summaries == report12().theorems.size());
  CHECK(last["type"] == "total");
  CHECK(last["status"] == "pass");
  CHECK(last["max_order"] == 12);
}

TEST_CASE("failures are reported with descriptors") {
  FullReport fake;
  fake.max_order = 3;
  TheoremReport t;
  t.id = "T1";
  t.instances = 1;
  t.failures.push_back({"L3", "{0}", "2", "5"});
  fake.theorems.push_back(t);
  CHECK_FALSE(fake.passed());
  const std::string text = to_json_lines(fake);
  CHECK(text.find(R"({"type":"failure","theorem":"T1","algebra":"L3","ideal":"{0}","expected":"2","observed":"5"})") == 0);
  CHECK(text.find(R"("status":"fail")") != std::string::npos);
}
