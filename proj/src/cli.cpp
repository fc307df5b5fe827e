#include "mvg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvg/io.hpp"
#include "mvg/verification.hpp"

namespace mvg::cli {

namespace {

struct Options {
  std::string spec;
  std::string ideal_csv;
  bool has_ideal = false;
  bool dot = false;
  bool json = false;
  std::size_t max_order = 7;
  std::string out_path;
  std::string iso_kind;
  std::string iso_left;
  std::string iso_right;
};

Ideal parse_ideal(const MvAlgebra& algebra, const std::string& csv) {
  std::vector<ElementId> members = io::parse_index_list(csv);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (ElementId x : members)
    if (x >= algebra.order())
      throw MalformedInput("element index " + std::to_string(x) + " out of range for order " +
                           std::to_string(algebra.order()));
  const IdealCheck check = is_ideal(algebra, members);
  if (!check.ok) {
    std::string msg = "{" + csv + "} is not an ideal: " + to_string(check.violated);
    if (!check.witness.empty()) {
      msg += " (witness";
      for (ElementId w : check.witness) msg += " " + algebra.label(w);
      msg += ")";
    }
    throw PreconditionFailed(msg);
  }
  return Ideal::make(algebra, std::move(members));
}

SimpleGraph build_graph(const MvAlgebra& algebra, const Options& o) {
  if (!o.has_ideal) return zero_divisor_graph(algebra);
  return ideal_based_graph(algebra, parse_ideal(algebra, o.ideal_csv));
}

// Graph operands for `iso graph`: <algebra-spec> or <algebra-spec>@<csv>.
SimpleGraph graph_operand(const std::string& operand) {
  const std::size_t at = operand.rfind('@');
  const MvAlgebra algebra = io::parse_algebra_spec(operand.substr(0, at));
  if (at == std::string::npos) return zero_divisor_graph(algebra);
  return ideal_based_graph(algebra, parse_ideal(algebra, operand.substr(at + 1)));
}

std::string witness_output(const std::optional<IsomorphismWitness>& w) {
  io::Json j;
  j["isomorphic"] = w.has_value();
  if (w) j["mapping"] = io::witness_to_json(*w)["mapping"];
  return j.dump() + "\n";
}

int execute(const std::string& command, const Options& o, std::string& text) {
  if (command == "verify") {
    const FullReport report = run_all(o.max_order);
    text = to_json_lines(report);
    return report.passed() ? exit_ok : exit_check_failed;
  }
  if (command == "enumerate") {
    for (const AlgebraCase& c : enumerate_algebras(o.max_order))
      text += std::to_string(c.algebra.order()) + " " + c.descriptor + "\n";
    return exit_ok;
  }
  if (command == "iso") {
    if (o.iso_kind == "algebra") {
      const MvAlgebra a = io::parse_algebra_spec(o.iso_left);
      const MvAlgebra b = io::parse_algebra_spec(o.iso_right);
      text = witness_output(algebra_isomorphic(a, b));
    } else {
      text = witness_output(graph_isomorphic(graph_operand(o.iso_left), graph_operand(o.iso_right)));
    }
    return exit_ok;
  }

  const MvAlgebra algebra = io::parse_algebra_spec(o.spec);
  if (command == "algebra") {
    text = io::algebra_to_json(algebra).dump() + "\n";
  } else if (command == "ideals") {
    text = io::ideals_to_json(all_ideals(algebra)).dump() + "\n";
  } else if (command == "quotient") {
    text = io::quotient_to_json(quotient(algebra, parse_ideal(algebra, o.ideal_csv))).dump() + "\n";
  } else if (command == "graph") {
    const SimpleGraph g = build_graph(algebra, o);
    text = o.dot ? to_dot(g) : io::graph_to_json(g).dump() + "\n";
  } else if (command == "metrics") {
    text = io::metrics_to_json(metrics(build_graph(algebra, o))).dump() + "\n";
  }
  return exit_ok;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite MV-algebras, their ideals, and ideal-based zero-divisor graphs"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec, "chain:<n>, product:<spec>x<spec>..., or file:<path>")->required();
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "write output to this file instead of stdout");
  };
  const auto add_ideal = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--ideal", o.ideal_csv, "comma-separated element indices");
    if (required) opt->required();
  };
  const auto add_max_order = [&](CLI::App* sub) {
    auto* pos = sub->add_option("max_order", o.max_order, "largest algebra order");
    auto* flag = sub->add_option("--max-order", o.max_order, "largest algebra order");
    pos->excludes(flag);
  };

  auto* algebra = app.add_subcommand("algebra", "validate an algebra and print it as JSON");
  add_spec(algebra);
  add_out(algebra);

  auto* ideals = app.add_subcommand("ideals", "list every ideal");
  add_spec(ideals);
  add_out(ideals);

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient algebra A/I");
  add_spec(quotient_cmd);
  add_ideal(quotient_cmd, true);
  add_out(quotient_cmd);

  auto* graph = app.add_subcommand("graph", "zero-divisor graph, or the ideal-based one with --ideal");
  add_spec(graph);
  add_ideal(graph, false);
  auto* dot = graph->add_flag("--dot", o.dot, "Graphviz output");
  auto* json = graph->add_flag("--json", o.json, "JSON output (default)");
  dot->excludes(json);
  add_out(graph);

  auto* metrics_cmd = app.add_subcommand("metrics", "diameter and girth");
  add_spec(metrics_cmd);
  add_ideal(metrics_cmd, false);
  add_out(metrics_cmd);

  auto* iso = app.add_subcommand("iso", "search for an isomorphism");
  iso->add_option("kind", o.iso_kind, "algebra or graph")
      ->required()
      ->check(CLI::IsMember({"algebra", "graph"}));
  iso->add_option("a", o.iso_left, "algebra spec; for graphs optionally <spec>@<ideal csv>")->required();
  iso->add_option("b", o.iso_right, "algebra spec; for graphs optionally <spec>@<ideal csv>")->required();
  add_out(iso);

  auto* verify = app.add_subcommand("verify", "check every theorem on all algebras up to max_order");
  add_max_order(verify);
  add_out(verify);

  auto* enumerate = app.add_subcommand("enumerate", "one algebra per isomorphism class");
  add_max_order(enumerate);
  add_out(enumerate);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  o.has_ideal = !o.ideal_csv.empty() || (graph->count("--ideal") + metrics_cmd->count("--ideal")) > 0;

  const std::string command = app.get_subcommands().front()->get_name();
  std::string text;
  int status = exit_ok;
  try {
    status = execute(command, o, text);
  } catch (const AxiomViolation& e) {
    err << "error: axiom " << e.axiom() << " violated:";
    for (ElementId w : e.witness()) err << " " << w;
    err << " (" << e.what() << ")\n";
    return exit_input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return exit_input_error;
    }
  }
  return status;
}

}  // namespace mvg::cli
