#include "mvg/verification.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "mvg/graph.hpp"
#include "mvg/isomorphism.hpp"

namespace mvg {

namespace {

using Clock = std::chrono::steady_clock;

// Multisets of factors >= 2 (non-decreasing, each >= `least`) with product n.
void factorizations(std::size_t n, std::size_t least, std::vector<std::size_t>& prefix,
                    std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    if (!prefix.empty()) out.push_back(prefix);
    return;
  }
  for (std::size_t f = least; f <= n; ++f) {
    if (n % f) continue;
    prefix.push_back(f);
    factorizations(n / f, f, prefix, out);
    prefix.pop_back();
  }
}

const MvAlgebra& reference(std::string_view name) {
  static const std::map<std::string, MvAlgebra, std::less<>> refs = [] {
    std::map<std::string, MvAlgebra, std::less<>> m;
    m.emplace("L3", lukasiewicz_chain(3));
    m.emplace("L4", lukasiewicz_chain(4));
    m.emplace("L5", lukasiewicz_chain(5));
    m.emplace("B4", direct_product({lukasiewicz_chain(2), lukasiewicz_chain(2)}));
    m.emplace("L2xL3", direct_product({lukasiewicz_chain(2), lukasiewicz_chain(3)}));
    return m;
  }();
  return refs.find(name)->second;
}

// L_2 × {0} inside the reference L_2 × L_3.
const std::vector<ElementId>& reference_l2_times_zero() {
  static const std::vector<ElementId> members = [] {
    const MvAlgebra& p = reference("L2xL3");
    std::vector<ElementId> out;
    for (ElementId x = 0; x < p.order(); ++x)
      if (p.decode(x)[1] == 0) out.push_back(x);
    return out;
  }();
  return members;
}

bool isomorphic_to(const MvAlgebra& a, std::string_view name) {
  const MvAlgebra& r = reference(name);
  return a.order() == r.order() && algebra_isomorphic(a, r).has_value();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string bools(std::initializer_list<bool> values) {
  std::string s = "[";
  bool first = true;
  for (bool v : values) {
    s += (first ? "" : ",") + yes_no(v);
    first = false;
  }
  return s + "]";
}

bool all_equal(std::initializer_list<bool> values) {
  return std::all_of(values.begin(), values.end(), [&](bool v) { return v == *values.begin(); });
}

CheckResult vacuous() { return CheckResult{Verdict::vacuous, "", "", ""}; }

CheckResult verdict(bool ok, std::string expected, std::string observed, std::string label = "") {
  return CheckResult{ok ? Verdict::pass : Verdict::fail, std::move(expected), std::move(observed),
                     std::move(label)};
}

bool is_complete(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

// Everything one (A, I) check may look at. The ideal-based graph is
// built from A and I; the quotient graph from the quotient algebra alone.
struct PairContext {
  const MvAlgebra& algebra;
  const Ideal& ideal;
  QuotientAlgebra q;
  SimpleGraph ideal_graph;
  SimpleGraph quotient_graph;
  GraphMetrics ideal_metrics;
  GraphMetrics quotient_metrics;

  PairContext(const MvAlgebra& a, const Ideal& i)
      : algebra(a),
        ideal(i),
        q(quotient(a, i)),
        ideal_graph(ideal_based_graph(a, i)),
        quotient_graph(zero_divisor_graph(q.algebra)),
        ideal_metrics(metrics(ideal_graph)),
        quotient_metrics(metrics(quotient_graph)) {}

  bool zero_ideal() const { return ideal.is_zero_ideal(); }
  std::size_t quotient_order() const { return q.size(); }
  bool in_ideal_graph(ElementId x) const { return ideal_graph.vertex_of(x).has_value(); }
};

bool special_girth_case(const PairContext& c) {
  const MvAlgebra& ref = reference("L2xL3");
  if (c.algebra.order() != ref.order()) return false;
  return algebra_isomorphic_preserving(c.algebra, c.ideal.members(), ref, reference_l2_times_zero())
      .has_value();
}

using PairCheck = std::function<CheckResult(const PairContext&)>;

const std::map<std::string, PairCheck, std::less<>>& pair_checks() {
  static const std::map<std::string, PairCheck, std::less<>> checks = {
      {"C377",
       [](const PairContext& c) {
         const std::size_t product = c.ideal.size() * c.quotient_order();
         return verdict(product == c.algebra.order(), std::to_string(c.algebra.order()),
                        std::to_string(product));
       }},
      {"P15",
       [](const PairContext& c) {
         std::string sizes;
         bool ok = true;
         for (const auto& block : c.q.classes) {
           sizes += (sizes.empty() ? "" : ",") + std::to_string(block.size());
           ok = ok && block.size() == c.ideal.size();
         }
         return verdict(ok, "all " + std::to_string(c.ideal.size()), sizes);
       }},
      {"P20",
       [](const PairContext& c) {
         const auto n = static_cast<ElementId>(c.algebra.order());
         for (ElementId x = 0; x < n; ++x)
           for (ElementId y = 0; y < n; ++y) {
             const bool same = c.q.block_of(x) == c.q.block_of(y);
             const bool close = c.ideal.contains(c.algebra.distance(x, y));
             if (same != close)
               return verdict(false, "same block iff d(x,y) in I",
                              "x=" + std::to_string(x) + " y=" + std::to_string(y));
           }
         const auto& zero_block = c.q.classes[c.q.block_of(c.algebra.zero())];
         return verdict(zero_block == c.ideal.members(), "0/I = I", describe_ideal(c.ideal));
       }},
      {"L10",
       [](const PairContext& c) {
         const MvAlgebra& a = c.algebra;
         for (const auto& block : c.q.classes) {
           const ElementId rep = block.front();
           std::vector<ElementId> image;
           for (ElementId x : block) image.push_back(a.star(x));
           std::sort(image.begin(), image.end());
           const auto& starred = c.q.classes[c.q.block_of(a.star(rep))];
           if (image != starred) return verdict(false, "(a/I)* = a*/I", "rep " + std::to_string(rep));
           if (block.size() != starred.size())
             return verdict(false, "|a/I| = |a*/I|", "rep " + std::to_string(rep));
           if (!c.zero_ideal() && block.size() < 2)
             return verdict(false, "|a/I| >= 2", "rep " + std::to_string(rep));
           for (ElementId x : block)
             for (ElementId y : block)
               if (c.q.block_of(a.meet(x, y)) != c.q.block_of(rep) ||
                   c.q.block_of(a.join(x, y)) != c.q.block_of(rep))
                 return verdict(false, "a/I closed under meet and join",
                                "x=" + std::to_string(x) + " y=" + std::to_string(y));
         }
         return verdict(true, "", "");
       }},
      {"P11",
       [](const PairContext& c) {
         const auto by_definition = ideal_graph_vertices_by_definition(c.algebra, c.ideal);
         const auto closed_form = ideal_graph_vertices_closed_form(c.algebra, c.ideal);
         const bool ok = by_definition == closed_form && closed_form == c.ideal_graph.elements();
         return verdict(ok, std::to_string(closed_form.size()) + " vertices",
                        std::to_string(by_definition.size()) + " vertices");
       }},
      {"C5",
       [](const PairContext& c) {
         for (ElementId x = 0; x < c.algebra.order(); ++x) {
           const ElementId block = c.q.block_of(x);
           const bool vertex = c.in_ideal_graph(x);
           const bool quotient_vertex = c.quotient_graph.vertex_of(block).has_value();
           const auto& members = c.q.classes[block];
           const bool whole_block = std::all_of(members.begin(), members.end(),
                                                [&](ElementId y) { return c.in_ideal_graph(y); });
           if (!all_equal({vertex, quotient_vertex, whole_block}))
             return verdict(false, "three equal", bools({vertex, quotient_vertex, whole_block}));
         }
         return verdict(true, "", "");
       }},
      {"T1",
       [](const PairContext& c) {
         if (c.quotient_order() < 3) return vacuous();
         const Measure d = c.ideal_metrics.diameter;
         const bool ok = c.ideal_metrics.connected && d.is_finite() && d.value() <= 3;
         return verdict(ok, "connected, diam <= 3", d.to_string(), "diam=" + d.to_string());
       }},
      {"T2",
       [](const PairContext& c) {
         if (c.quotient_order() < 3) return vacuous();
         const bool s1 = c.ideal_metrics.diameter.equals(0);
         const bool s2 = c.ideal_graph.edge_count() == 0;
         const bool s3 = c.ideal_graph.vertex_count() == 1;
         const bool s4 = c.zero_ideal() && isomorphic_to(c.algebra, "L3");
         const bool s5 = c.zero_ideal() && c.quotient_graph.edge_count() == 0;
         return verdict(all_equal({s1, s2, s3, s4, s5}), "all equal", bools({s1, s2, s3, s4, s5}),
                        s1 ? "diam0" : "other");
       }},
      {"T3",
       [](const PairContext& c) {
         if (c.ideal_graph.edge_count() == 0) return vacuous();
         const bool s1 = c.ideal_metrics.diameter.equals(1);
         const bool s2 = is_complete(c.ideal_graph);
         const bool s3 = (!c.zero_ideal() && isomorphic_to(c.q.algebra, "L3")) ||
                         (c.zero_ideal() && c.algebra.order() == 4);
         const bool s4 =
             (!c.zero_ideal() && c.quotient_graph.edge_count() == 0) ||
             (c.zero_ideal() && graph_isomorphic(c.quotient_graph, make_complete(2)).has_value());
         return verdict(all_equal({s1, s2, s3, s4}), "all equal", bools({s1, s2, s3, s4}),
                        s1 ? "diam1" : "other");
       }},
      {"T5",
       [](const PairContext& c) {
         if (c.zero_ideal()) return vacuous();
         const Measure dq = c.quotient_metrics.diameter;
         const bool lhs = c.ideal_metrics.diameter.equals(2);
         const bool rhs = dq.equals(1) || dq.equals(2);
         return verdict(lhs == rhs, yes_no(rhs), yes_no(lhs), lhs ? "diam2" : "other");
       }},
      {"T6",
       [](const PairContext& c) {
         const bool lhs = c.ideal_metrics.diameter.equals(3);
         const bool rhs = c.quotient_metrics.diameter.equals(3);
         return verdict(lhs == rhs, yes_no(rhs), yes_no(lhs), lhs ? "diam3" : "other");
       }},
      {"P3333",
       [](const PairContext& c) {
         const Measure dq = c.quotient_metrics.diameter;
         const Measure di = c.ideal_metrics.diameter;
         return verdict(measure_leq(dq, di), "<= " + di.to_string(), dq.to_string());
       }},
      {"P22",
       [](const PairContext& c) {
         if (c.quotient_order() != 4 || c.ideal.size() < 2) return vacuous();
         const std::size_t n = c.ideal.size();
         const auto nn = std::pair(n, n);
         const ShapeReport shape = classify_shape(c.ideal_graph);
         const bool bipartite = shape.complete_bipartite == nn &&
                                graph_isomorphic(c.ideal_graph, make_complete_bipartite(n, n));
         const bool joined = shape.join_complete_empty == nn &&
                             graph_isomorphic(c.ideal_graph, graph_join(make_complete(n), make_empty(n)));
         const std::string label = bipartite ? "Knn" : joined ? "KnVEn" : "neither";
         return verdict(bipartite || joined, "K_{n,n} or K_n v E_n, n=" + std::to_string(n), label,
                        label);
       }},
      {"P40",
       [](const PairContext& c) {
         if (c.zero_ideal() || c.quotient_order() != 4) return vacuous();
         return verdict(c.ideal_metrics.diameter.equals(2), "2", c.ideal_metrics.diameter.to_string());
       }},
      {"P23",
       [](const PairContext& c) {
         if (c.zero_ideal() || !c.quotient_metrics.diameter.equals(2)) return vacuous();
         return verdict(c.ideal_metrics.diameter.equals(2), "2", c.ideal_metrics.diameter.to_string());
       }},
      {"G2",
       [](const PairContext& c) {
         const Measure gq = c.quotient_metrics.girth;
         const Measure gi = c.ideal_metrics.girth;
         const bool ok = measure_leq(gi, gq) && (!gq.equals(3) || gi.equals(3));
         return verdict(ok, "<= " + gq.to_string(), gi.to_string());
       }},
      {"G3",
       [](const PairContext& c) {
         if (c.zero_ideal() || c.quotient_order() < 3) return vacuous();
         Measure expected = Measure::finite(3);
         std::string label = "3";
         if (special_girth_case(c)) {
           expected = Measure::infinity();
           label = "inf";
         } else if (isomorphic_to(c.q.algebra, "B4")) {
           expected = Measure::finite(4);
           label = "4";
         }
         const Measure observed = c.ideal_metrics.girth;
         return verdict(observed == expected, expected.to_string(), observed.to_string(), label);
       }},
      {"G3D",
       [](const PairContext& c) {
         if (c.quotient_order() != 3 || c.ideal.size() != 2) return vacuous();
         return verdict(special_girth_case(c), "A = L2xL3, I = L2x{0}", "no such isomorphism");
       }},
      {"L13",
       [](const PairContext& c) {
         if (c.zero_ideal() || c.quotient_order() < 4) return vacuous();
         const SimpleGraph& g = c.ideal_graph;
         const SimpleGraph& gq = c.quotient_graph;
         for (VertexId u = 0; u < g.vertex_count(); ++u)
           for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
             const ElementId a = g.elements()[u], b = g.elements()[v];
             const ElementId ba = c.q.block_of(a), bb = c.q.block_of(b);
             if (ba == bb) continue;
             const bool quotient_adjacent = gq.adjacent(*gq.vertex_of(ba), *gq.vertex_of(bb));
             bool all_adjacent = true;
             for (ElementId x : c.q.classes[ba])
               for (ElementId y : c.q.classes[bb])
                 all_adjacent = all_adjacent && g.adjacent(*g.vertex_of(x), *g.vertex_of(y));
             const bool adjacent = g.adjacent(u, v);
             if (!all_equal({quotient_adjacent, all_adjacent, adjacent}))
               return verdict(false, "three equal", bools({quotient_adjacent, all_adjacent, adjacent}));
           }
         return verdict(true, "", "");
       }},
      {"L14",
       [](const PairContext& c) {
         if (c.zero_ideal() || c.quotient_order() < 3) return vacuous();
         const MvAlgebra& qa = c.q.algebra;
         for (ElementId block = 0; block < c.q.size(); ++block) {
           const ElementId rep = c.q.representative[block];
           if (!c.in_ideal_graph(rep)) continue;
           std::vector<VertexId> vs;
           for (ElementId x : c.q.classes[block]) vs.push_back(*c.ideal_graph.vertex_of(x));
           const SimpleGraph sub = induced_subgraph(c.ideal_graph, vs);
           const bool nilpotent = qa.odot(block, block) == qa.zero();
           const bool ok = nilpotent ? is_complete(sub) : sub.edge_count() == 0;
           if (!ok)
             return verdict(false, nilpotent ? "complete" : "empty",
                            std::to_string(sub.edge_count()) + " edges on block of " +
                                c.algebra.label(rep));
         }
         return verdict(true, "", "");
       }},
      {"L15",
       [](const PairContext& c) {
         if (c.zero_ideal()) return vacuous();
         const MvAlgebra& qa = c.q.algebra;
         bool below_star = false;
         for (ElementId b = 0; b < qa.order(); ++b)
           if (b != qa.zero() && b != qa.one() && b != qa.star(b) && qa.leq(b, qa.star(b)))
             below_star = true;
         const bool long_chain = qa.is_chain() && qa.order() >= 4;
         if (long_chain && !below_star)
           return verdict(false, "chain of order >= 4 has a/I < a*/I", "none found");
         if (!below_star) return vacuous();
         return verdict(c.ideal_metrics.girth.equals(3), "3", c.ideal_metrics.girth.to_string());
       }},
  };
  return checks;
}

CheckResult check_algebra_theorem(std::string_view id, const MvAlgebra& a) {
  if (id == "G1") {
    if (a.order() < 3) return vacuous();
    bool acyclic_class = false;
    for (std::string_view name : {"L3", "L4", "L5", "B4", "L2xL3"})
      acyclic_class = acyclic_class || isomorphic_to(a, name);
    const Measure expected = acyclic_class ? Measure::infinity() : Measure::finite(3);
    const Measure observed = metrics(zero_divisor_graph(a)).girth;
    return verdict(observed == expected, expected.to_string(), observed.to_string(),
                   expected.to_string());
  }
  if (id == "L5") {
    std::size_t fixed = 0;
    for (ElementId x = 0; x < a.order(); ++x) fixed += a.star(x) == x;
    return verdict(fixed <= 1, "<= 1", std::to_string(fixed), "fix=" + std::to_string(fixed));
  }
  throw PreconditionFailed("unknown per-algebra theorem '" + std::string(id) + "'");
}

void record(TheoremReport& report, const CheckResult& r, const std::string& algebra,
            const std::string& ideal) {
  switch (r.verdict) {
    case Verdict::vacuous: ++report.vacuous; return;
    case Verdict::inconclusive: ++report.inconclusive; break;
    case Verdict::fail: report.failures.push_back({algebra, ideal, r.expected, r.observed}); break;
    case Verdict::pass: break;
  }
  ++report.instances;
  if (!r.case_label.empty()) ++report.cases[r.case_label];
}

template <class F>
void timed(TheoremReport& report, F&& body) {
  const auto start = Clock::now();
  body();
  report.elapsed += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

struct IdealInstance {
  const AlgebraCase* owner;
  Ideal ideal;
  SimpleGraph graph;
  QuotientAlgebra q;
  std::vector<std::size_t> quotient_chains;
};

void check_transfer(TheoremReport& report, const std::vector<IdealInstance>& instances) {
  // Group by |A| and the isomorphism type of A/I.
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < instances.size(); ++k)
    groups[{instances[k].owner->algebra.order(), instances[k].quotient_chains}].push_back(k);

  for (const auto& [key, members] : groups)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const IdealInstance& x = instances[members[i]];
        const IdealInstance& y = instances[members[j]];
        const std::string where = x.owner->descriptor + " | " + y.owner->descriptor;
        const std::string ideals = describe_ideal(x.ideal) + " | " + describe_ideal(y.ideal);
        CheckResult r;
        try {
          if (!algebra_isomorphic(x.q.algebra, y.q.algebra)) {
            r = verdict(false, "A/I ~ B/J", "quotients not isomorphic");
          } else {
            const bool iso = graph_isomorphic(x.graph, y.graph).has_value();
            r = verdict(iso, "graphs isomorphic", iso ? "isomorphic" : "not isomorphic",
                        "|A/I|=" + std::to_string(x.q.size()));
          }
        } catch (const BudgetExceeded& e) {
          r = CheckResult{Verdict::inconclusive, "", e.what(), ""};
        }
        record(report, r, where, ideals);
      }
}

// Ordered tuples of enumerated algebras, length >= 2, product order <= max.
void factor_tuples(const std::vector<AlgebraCase>& cases, std::size_t max_order,
                   std::vector<std::size_t>& prefix, std::size_t product,
                   std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() >= 2) out.push_back(prefix);
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const std::size_t next = product * cases[k].algebra.order();
    if (next > max_order) continue;
    prefix.push_back(k);
    factor_tuples(cases, max_order, prefix, next, out);
    prefix.pop_back();
  }
}

void check_products(TheoremReport& quotients, TheoremReport& factorization,
                    const std::vector<AlgebraCase>& cases, std::size_t max_order) {
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> prefix;
  factor_tuples(cases, max_order, prefix, 1, tuples);

  for (const auto& tuple : tuples) {
    std::vector<MvAlgebra> factors;
    std::string name;
    for (std::size_t k : tuple) {
      factors.push_back(cases[k].algebra);
      name += (name.empty() ? "" : " * ") + cases[k].descriptor;
    }
    const MvAlgebra product = direct_product(factors);
    // product.factors() holds the copies the product ideals must refer to.
    std::vector<std::vector<Ideal>> component_ideals;
    for (const auto& f : product.factors()) component_ideals.push_back(all_ideals(*f));

    std::vector<std::vector<ElementId>> from_components;
    std::vector<std::size_t> choice(tuple.size(), 0);
    for (;;) {
      std::vector<Ideal> parts;
      for (std::size_t k = 0; k < tuple.size(); ++k) parts.push_back(component_ideals[k][choice[k]]);
      const Ideal k_ideal = product_ideal(product, parts);
      from_components.push_back(k_ideal.members());

      timed(quotients, [&] {
        if (k_ideal.contains(product.one())) {
          record(quotients, vacuous(), name, describe_ideal(k_ideal));
          return;
        }
        std::vector<MvAlgebra> component_quotients;
        for (std::size_t k = 0; k < tuple.size(); ++k)
          component_quotients.push_back(parts[k].contains(product.factors()[k]->one())
                                            ? trivial_algebra()
                                            : quotient(*product.factors()[k], parts[k]).algebra);
        CheckResult r;
        try {
          const bool iso =
              algebra_isomorphic(quotient(product, k_ideal).algebra, direct_product(component_quotients))
                  .has_value();
          r = verdict(iso, "isomorphic", iso ? "isomorphic" : "not isomorphic");
        } catch (const BudgetExceeded& e) {
          r = CheckResult{Verdict::inconclusive, "", e.what(), ""};
        }
        record(quotients, r, name, describe_ideal(k_ideal));
      });

      std::size_t k = 0;
      while (k < tuple.size() && ++choice[k] == component_ideals[k].size()) choice[k++] = 0;
      if (k == tuple.size()) break;
    }

    timed(factorization, [&] {
      std::vector<std::vector<ElementId>> direct;
      bool round_trips = true;
      for (const Ideal& i : all_ideals(product)) {
        direct.push_back(i.members());
        try {
          ideal_factorization(product, i);
        } catch (const std::logic_error&) {
          round_trips = false;
        }
      }
      std::sort(direct.begin(), direct.end());
      std::sort(from_components.begin(), from_components.end());
      record(factorization,
             verdict(round_trips && direct == from_components,
                     std::to_string(from_components.size()) + " product ideals",
                     std::to_string(direct.size()) + " ideals" +
                         (round_trips ? "" : ", factorization failed")),
             name, "");
    });
  }
}

}  // namespace

std::string describe_chains(const std::vector<std::size_t>& chains) {
  std::string s;
  for (std::size_t k : chains) s += (s.empty() ? "L" : "xL") + std::to_string(k);
  return s;
}

std::string describe_ideal(const Ideal& ideal) {
  std::string s = "{";
  for (std::size_t k = 0; k < ideal.members().size(); ++k)
    s += (k ? "," : "") + std::to_string(ideal.members()[k]);
  return s + "}";
}

std::vector<AlgebraCase> enumerate_algebras(std::size_t max_order) {
  if (max_order < 2) throw PreconditionFailed("enumerate_algebras needs max_order >= 2");
  std::vector<AlgebraCase> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> prefix;
    factorizations(n, 2, prefix, parts);
    std::sort(parts.begin(), parts.end());
    const std::size_t first = out.size();
    for (auto& chains : parts) {
      std::string name = describe_chains(chains);
      MvAlgebra algebra = chain_product(chains);
      out.push_back(AlgebraCase{std::move(chains), std::move(name), std::move(algebra)});
    }
    for (std::size_t i = first; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (algebra_isomorphic(out[i].algebra, out[j].algebra))
          throw std::logic_error("enumeration produced isomorphic classes " + out[i].descriptor +
                                 " and " + out[j].descriptor);
  }
  return out;
}

CheckResult check_theorem(std::string_view id, const MvAlgebra& algebra, const Ideal* ideal) {
  try {
    if (!ideal) return check_algebra_theorem(id, algebra);
    const auto& checks = pair_checks();
    const auto it = checks.find(id);
    if (it == checks.end()) throw PreconditionFailed("unknown theorem id '" + std::string(id) + "'");
    return it->second(PairContext(algebra, *ideal));
  } catch (const BudgetExceeded& e) {
    return CheckResult{Verdict::inconclusive, "", e.what(), ""};
  }
}

bool FullReport::passed() const noexcept {
  return std::all_of(theorems.begin(), theorems.end(), [](const auto& t) { return t.passed(); });
}

const TheoremReport& FullReport::at(std::string_view id) const {
  for (const auto& t : theorems)
    if (t.id == id) return t;
  throw PreconditionFailed("no report for theorem '" + std::string(id) + "'");
}

FullReport run_all(std::size_t max_order) {
  if (max_order < 3) throw PreconditionFailed("run_all needs max_order >= 3 (no graphs below order 3)");
  FullReport report;
  report.max_order = max_order;
  const std::vector<AlgebraCase> cases = enumerate_algebras(max_order);
  report.algebras = cases.size();

  std::map<std::string, TheoremReport, std::less<>> by_id;
  for (auto ids : {algebra_theorems, ideal_theorems, global_theorems})
    for (std::string_view id : ids) by_id[std::string(id)].id = std::string(id);

  std::vector<IdealInstance> instances;
  for (const AlgebraCase& c : cases) {
    for (std::string_view id : algebra_theorems) {
      TheoremReport& t = by_id.find(id)->second;
      timed(t, [&] { record(t, check_theorem(id, c.algebra, nullptr), c.descriptor, ""); });
    }
    for (Ideal& ideal : proper_ideals(c.algebra)) {
      ++report.ideal_pairs;
      const std::string ideal_name = describe_ideal(ideal);
      for (std::string_view id : ideal_theorems) {
        TheoremReport& t = by_id.find(id)->second;
        timed(t, [&] { record(t, check_theorem(id, c.algebra, &ideal), c.descriptor, ideal_name); });
      }
      SimpleGraph graph = ideal_based_graph(c.algebra, ideal);
      QuotientAlgebra q = quotient(c.algebra, ideal);
      std::vector<std::size_t> chains = chain_decomposition(q.algebra);
      instances.push_back({&c, std::move(ideal), std::move(graph), std::move(q), std::move(chains)});
    }
  }
  TheoremReport& transfer = by_id.find("T43")->second;
  timed(transfer, [&] { check_transfer(transfer, instances); });
  check_products(by_id.find("T1000")->second, by_id.find("P10000")->second, cases, max_order);

  for (auto ids : {algebra_theorems, ideal_theorems, global_theorems})
    for (std::string_view id : ids) {
      TheoremReport t = std::move(by_id.find(id)->second);
      std::sort(t.failures.begin(), t.failures.end(), [](const Failure& a, const Failure& b) {
        return std::tie(a.algebra, a.ideal) < std::tie(b.algebra, b.ideal);
      });
      report.theorems.push_back(std::move(t));
    }
  return report;
}

std::string to_json_lines(const FullReport& report) {
  using Json = nlohmann::ordered_json;
  std::string out;
  for (const auto& t : report.theorems) {
    for (const auto& f : t.failures) {
      Json j;
      j["type"] = "failure";
      j["theorem"] = t.id;
      j["algebra"] = f.algebra;
      j["ideal"] = f.ideal;
      j["expected"] = f.expected;
      j["observed"] = f.observed;
      out += j.dump() + "\n";
    }
  }
  for (const auto& t : report.theorems) {
    Json j;
    j["type"] = "summary";
    j["theorem"] = t.id;
    j["instances"] = t.instances;
    j["vacuous"] = t.vacuous;
    j["inconclusive"] = t.inconclusive;
    j["failures"] = t.failures.size();
    j["cases"] = t.cases;
    j["status"] = t.passed() ? "pass" : "fail";
    out += j.dump() + "\n";
  }
  Json total;
  total["type"] = "total";
  total["max_order"] = report.max_order;
  total["algebras"] = report.algebras;
  total["ideal_pairs"] = report.ideal_pairs;
  total["status"] = report.passed() ? "pass" : "fail";
  out += total.dump() + "\n";
  return out;
}

}  // namespace mvg
