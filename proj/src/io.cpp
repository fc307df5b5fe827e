#include "mvg/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace mvg::io {

namespace {

Json measure_to_json(Measure m) {
  switch (m.kind()) {
    case Measure::Kind::finite: return m.value();
    case Measure::Kind::infinite: return "inf";
    case Measure::Kind::undefined: return nullptr;
  }
  return nullptr;
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw MalformedInput("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

ElementId json_index(const Json& j, const char* field) {
  if (!j.is_number_unsigned())
    throw MalformedInput(std::string("field '") + field + "' must hold non-negative integers");
  return j.get<ElementId>();
}

}  // namespace

Json algebra_to_json(const MvAlgebra& algebra) {
  const std::size_t n = algebra.order();
  Json rows = Json::array();
  for (std::size_t x = 0; x < n; ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < n; ++y) row.push_back(algebra.oplus_table()[x * n + y]);
    rows.push_back(std::move(row));
  }
  Json j;
  j["order"] = n;
  j["zero"] = algebra.zero();
  j["oplus"] = std::move(rows);
  j["star"] = algebra.star_table();
  j["labels"] = algebra.labels();
  return j;
}

MvAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedInput("algebra JSON must be an object");
  for (const char* field : {"order", "zero", "oplus", "star"})
    if (!j.contains(field)) throw MalformedInput(std::string("algebra JSON lacks '") + field + "'");
  const std::size_t n = json_index(j["order"], "order");
  const ElementId zero = json_index(j["zero"], "zero");

  const Json& rows = j["oplus"];
  if (!rows.is_array() || rows.size() != n) throw MalformedInput("'oplus' must have order rows");
  std::vector<ElementId> oplus;
  oplus.reserve(n * n);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n) throw MalformedInput("'oplus' rows must have order entries");
    for (const Json& cell : row) oplus.push_back(json_index(cell, "oplus"));
  }
  const Json& star_json = j["star"];
  if (!star_json.is_array()) throw MalformedInput("'star' must be an array");
  std::vector<ElementId> star;
  for (const Json& cell : star_json) star.push_back(json_index(cell, "star"));

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw MalformedInput("'labels' must be an array of strings");
    for (const Json& l : j["labels"]) {
      if (!l.is_string()) throw MalformedInput("'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return MvAlgebra::from_tables(n, std::move(oplus), std::move(star), zero, std::move(labels));
}

Json ideals_to_json(const std::vector<Ideal>& ideals) {
  Json out = Json::array();
  for (const Ideal& i : ideals) out.push_back(i.members());
  return out;
}

Json quotient_to_json(const QuotientAlgebra& q) {
  Json j = algebra_to_json(q.algebra);
  j["classes"] = q.classes;
  return j;
}

Json graph_to_json(const SimpleGraph& graph) {
  Json j;
  j["vertices"] = graph.labels();
  Json edges = Json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Json metrics_to_json(const GraphMetrics& m) {
  Json j;
  j["diameter"] = measure_to_json(m.diameter);
  j["girth"] = measure_to_json(m.girth);
  return j;
}

Json witness_to_json(const IsomorphismWitness& w) {
  Json j;
  j["mapping"] = w.mapping;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MvAlgebra parse_algebra_spec(std::string_view spec) {
  constexpr std::string_view chain = "chain:", product = "product:", file = "file:";
  if (spec.starts_with(chain)) return lukasiewicz_chain(parse_size(spec.substr(chain.size()), "chain order"));
  if (spec.starts_with(file)) {
    const std::string path(spec.substr(file.size()));
    Json j;
    try {
      j = Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedInput("'" + path + "' is not valid JSON: " + e.what());
    }
    return algebra_from_json(j);
  }
  if (spec.starts_with(product)) {
    // Factors are separated by an 'x' that starts another spec.
    std::string_view rest = spec.substr(product.size());
    std::vector<MvAlgebra> factors;
    std::size_t start = 0;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (rest[k] != 'x') continue;
      const std::string_view after = rest.substr(k + 1);
      if (after.starts_with(chain) || after.starts_with(file) || after.starts_with(product)) {
        factors.push_back(parse_algebra_spec(rest.substr(start, k - start)));
        start = k + 1;
      }
    }
    factors.push_back(parse_algebra_spec(rest.substr(start)));
    return direct_product(factors);
  }
  throw MalformedInput("unknown algebra spec '" + std::string(spec) +
                       "' (expected chain:<n>, product:<spec>x<spec>..., or file:<path>)");
}

std::vector<ElementId> parse_index_list(std::string_view csv) {
  std::vector<ElementId> out;
  while (!csv.empty()) {
    const std::size_t comma = csv.find(',');
    const std::string_view item = csv.substr(0, comma);
    const std::size_t value = parse_size(item, "element index");
    if (value > std::numeric_limits<ElementId>::max()) throw MalformedInput("element index too large");
    out.push_back(static_cast<ElementId>(value));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
    if (csv.empty()) throw MalformedInput("trailing comma in index list");
  }
  return out;
}

}  // namespace mvg::io
