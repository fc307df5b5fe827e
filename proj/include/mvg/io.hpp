#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mvg/algebra.hpp"
#include "mvg/graph.hpp"
#include "mvg/ideal.hpp"
#include "mvg/isomorphism.hpp"

namespace mvg::io {

using Json = nlohmann::ordered_json;

/// {"order": n, "zero": i, "oplus": [[...]], "star": [...], "labels": [...]}
Json algebra_to_json(const MvAlgebra& algebra);
/// Labels are optional. Throws MalformedInput / AxiomViolation.
MvAlgebra algebra_from_json(const Json& json);

/// Sorted index arrays, one per ideal.
Json ideals_to_json(const std::vector<Ideal>& ideals);
/// Induced algebra in the algebra format plus "classes".
Json quotient_to_json(const QuotientAlgebra& q);
/// {"vertices": [labels], "edges": [[i, j], ...]} with positions into vertices.
Json graph_to_json(const SimpleGraph& graph);
/// {"diameter": d, "girth": g}; ∞ as "inf", JSON null for the null graph.
Json metrics_to_json(const GraphMetrics& m);
Json witness_to_json(const IsomorphismWitness& w);

/// `chain:<n>`, `product:<spec>x<spec>...`, or `file:<path>`.
MvAlgebra parse_algebra_spec(std::string_view spec);

/// "0,1,2" -> {0, 1, 2}. Empty string -> {}.
std::vector<ElementId> parse_index_list(std::string_view csv);

std::string read_file(const std::string& path);

}  // namespace mvg::io
