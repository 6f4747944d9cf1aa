#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdim/constructions.hpp"
#include "mdim/graph_io.hpp"
#include "mdim/labels.hpp"
#include "mdim/products.hpp"
#include "mdim/resolving.hpp"
#include "mdim/search.hpp"

namespace mdim::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphArgs {
  std::string family;
  int n = 0;
  int k = 0;
  int m = 0;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("--family", args.family, "cycle | path | cylinder | prism")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "cylinder", "prism"}));
  cmd->add_option("--n", args.n, "cycle length");
  cmd->add_option("--k", args.k, "path length");
  cmd->add_option("--m", args.m, "number of copies (prism)");
}

LabeledGraph build_graph(const GraphArgs& args) {
  if (args.family == "cycle") return build_cycle(args.n);
  if (args.family == "path") return build_path(args.k);
  if (args.family == "cylinder") return explicit_cylinder(args.n, args.k).graph;
  return explicit_prism(args.n, args.k, args.m).graph;
}

json graph_params(const GraphArgs& args) {
  json p;
  p["family"] = args.family;
  if (args.family != "path") p["n"] = args.n;
  if (args.family != "cycle") p["k"] = args.k;
  if (args.family == "prism") p["m"] = args.m;
  return p;
}

json family_json(const FamilyTag& tag) {
  struct Visitor {
    json operator()(const GenericFamily&) const { return {{"kind", "generic"}}; }
    json operator()(const CycleFamily& f) const { return {{"kind", "cycle"}, {"n", f.n}}; }
    json operator()(const PathFamily& f) const { return {{"kind", "path"}, {"k", f.k}}; }
    json operator()(const CylinderFamily& f) const { return {{"kind", "cylinder"}, {"n", f.n}, {"k", f.k}}; }
    json operator()(const PrismFamily& f) const {
      return {{"kind", "prism"}, {"n", f.n}, {"k", f.k}, {"m", f.m}};
    }
  };
  return std::visit(Visitor{}, tag);
}

json labels_json(const VertexSet& q, const LabelContext& context) {
  json out = json::array();
  for (VertexId v : q) out.push_back(format_label(v, context));
  return out;
}

json indices_json(const VertexSet& q) {
  json out = json::array();
  for (VertexId v : q) out.push_back(v.value());
  return out;
}

json document(const std::string& command, json parameters, json result) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"parameters", std::move(parameters)},
          {"result", std::move(result)}};
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

// Output produced by one command, before it is routed to stdout or a file.
struct Emission {
  std::string text;
  int code = kSuccess;
};

Emission cmd_build(const GraphArgs& args, const std::string& format) {
  const auto g = build_graph(args);
  const auto context = label_context(g);
  if (format == "edges") return {write_edge_list(g)};
  if (format == "dot") return {write_dot(g, context)};
  if (format != "json") throw UsageError("build supports --format json, edges or dot");

  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u.value(), v.value()});
  json result{{"vertex_count", g.vertex_count()},
              {"edge_count", g.edge_count()},
              {"family", family_json(g.family())},
              {"edges", std::move(edges)}};
  auto params = graph_params(args);
  params["format"] = format;
  return {render(document("build", std::move(params), std::move(result)))};
}

Emission cmd_verify(const GraphArgs& args, const std::string& set_text, const std::string& property) {
  const auto g = build_graph(args);
  const auto context = label_context(g);
  const auto q = parse_label_list(set_text, context);
  const auto d = all_pairs_distances(g);

  PairCheck check;
  if (property == "resolving") {
    check = is_resolving(q, d);
  } else if (property == "doubly") {
    check = is_doubly_resolving(q, d);
  } else {
    check = is_strong_resolving(q, d);
  }

  json result{{"property", property},
              {"holds", check.holds},
              {"set", labels_json(q, context)},
              {"set_indices", indices_json(q)}};
  if (check.witness) {
    const auto [u, v] = *check.witness;
    json witness{{"pair", {format_label(u, context), format_label(v, context)}},
                 {"pair_indices", {u.value(), v.value()}}};
    if (check.lambda) witness["lambda"] = *check.lambda;
    result["witness"] = std::move(witness);
  }
  auto params = graph_params(args);
  params["set"] = set_text;
  params["property"] = property;
  return {render(document("verify", std::move(params), std::move(result))),
          check.holds ? kSuccess : kPropertyFails};
}

Emission cmd_search(const GraphArgs& args, const std::string& parameter, std::optional<int> cap,
                    std::ostream& err) {
  const auto g = build_graph(args);
  const auto context = label_context(g);
  const auto d = all_pairs_distances(g);
  const int size_cap = cap.value_or(default_size_cap(g));
  const SearchOptions options{size_cap};

  auto params = graph_params(args);
  params["parameter"] = parameter;
  params["cap"] = size_cap;

  const auto start = std::chrono::steady_clock::now();
  try {
    SearchResult found = parameter == "beta"  ? min_resolving(g, d, options)
                         : parameter == "psi" ? min_doubly_resolving(g, d, options)
                                              : min_strong_resolving(g, d, options);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    err << "search finished in " << std::fixed << std::setprecision(1) << elapsed.count() << " ms\n";
    json result{{"parameter", std::string(to_string(found.parameter))},
                {"value", found.value},
                {"witness", labels_json(found.witness, context)},
                {"witness_indices", indices_json(found.witness)},
                {"exhausted_sizes", found.exhausted_sizes},
                {"subsets_examined", found.subsets_examined}};
    return {render(document("search", std::move(params), std::move(result)))};
  } catch (const SearchCapExceeded& e) {
    json result{{"parameter", std::string(to_string(e.parameter()))},
                {"cap_exhausted", true},
                {"cap", e.cap()},
                {"subsets_examined", e.subsets_examined()}};
    err << e.what() << "\n";
    return {render(document("search", std::move(params), std::move(result))), kCapExhausted};
  }
}

std::string tuple_text(const RepresentationVector& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

Emission cmd_table(const GraphArgs& args, const std::string& set_text, const std::string& format) {
  const auto g = build_graph(args);
  const auto context = label_context(g);
  const auto q = parse_label_list(set_text, context);
  const auto d = all_pairs_distances(g);

  if (format == "text") {
    std::size_t width = std::string("vertex").size();
    for (int v = 1; v <= g.vertex_count(); ++v) width = std::max(width, format_label(VertexId(v), context).size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width + 2)) << "vertex" << "r(v|Q), Q = " << format_set(q, context)
        << "\n";
    for (int v = 1; v <= g.vertex_count(); ++v) {
      out << std::setw(static_cast<int>(width + 2)) << format_label(VertexId(v), context)
          << tuple_text(representation(VertexId(v), q, d)) << "\n";
    }
    return {out.str()};
  }
  if (format != "json") throw UsageError("table supports --format json or text");

  json rows = json::array();
  for (int v = 1; v <= g.vertex_count(); ++v) {
    rows.push_back({{"vertex", format_label(VertexId(v), context)},
                    {"index", v},
                    {"representation", representation(VertexId(v), q, d)}});
  }
  json result{{"set", labels_json(q, context)}, {"set_indices", indices_json(q)}, {"rows", std::move(rows)}};
  auto params = graph_params(args);
  params["set"] = set_text;
  params["format"] = format;
  return {render(document("table", std::move(params), std::move(result)))};
}

Emission cmd_construct(const std::string& id_text, const FamilyParams& family_params) {
  const auto id = parse_family_id(id_text);
  const auto family = make_family(id, family_params);
  const LabelContext context = family.params.m == 0
                                   ? LabelContext{family.params.n * family.params.k, 1}
                                   : LabelContext{family.params.n * family.params.k, family.params.m};
  json claims = json::array();
  for (auto c : family.claims) claims.push_back(std::string(to_string(c)));

  json params{{"id", id_text}, {"n", family_params.n}, {"k", family_params.k}};
  if (family_params.m != 0) params["m"] = family_params.m;
  if (family_params.index != 0) params["index"] = family_params.index;

  json result{{"id", std::string(to_string(family.id))},
              {"target", family.params.m == 0 ? "cylinder" : "prism"},
              {"target_params", {{"n", family.params.n}, {"k", family.params.k}, {"m", family.params.m}}},
              {"set", labels_json(family.set, context)},
              {"set_indices", indices_json(family.set)},
              {"claims", std::move(claims)}};
  return {render(document("construct", std::move(params), std::move(result)))};
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolving sets, doubly resolving sets and strong resolving sets of cycle/path products", "mdim"};
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("--output", output_path, "write the document to this file instead of stdout");

  GraphArgs graph;
  std::string format = "json";
  std::string set_text;
  std::string property;
  std::string parameter;
  std::optional<int> cap;
  std::string family_id;
  FamilyParams family_params;

  auto* build = app.add_subcommand("build", "emit a graph");
  add_graph_options(build, graph);
  build->add_option("--format", format, "json | edges | dot")->check(CLI::IsMember({"json", "edges", "dot"}));

  auto* verify = app.add_subcommand("verify", "check a vertex set against a property");
  add_graph_options(verify, graph);
  verify->add_option("--set", set_text, "comma-separated labels, e.g. x1^1,x3^1")->required();
  verify->add_option("--property", property, "resolving | doubly | strong")
      ->required()
      ->check(CLI::IsMember({"resolving", "doubly", "strong"}));

  auto* search = app.add_subcommand("search", "exhaustive minimum-size search");
  add_graph_options(search, graph);
  search->add_option("--parameter", parameter, "beta | psi | sdim")
      ->required()
      ->check(CLI::IsMember({"beta", "psi", "sdim"}));
  search->add_option("--cap", cap, "largest set size to try");

  auto* table = app.add_subcommand("table", "representation of every vertex");
  add_graph_options(table, graph);
  table->add_option("--set", set_text, "comma-separated labels")->required();
  table->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* construct = app.add_subcommand("construct", "closed-form witness set");
  construct->add_option("--id", family_id, "M N A B A1 B1 C D E1 E2 E3 E3_1 E4 T")->required();
  construct->add_option("--n", family_params.n)->required();
  construct->add_option("--k", family_params.k)->required();
  construct->add_option("--m", family_params.m);
  construct->add_option("--i,--j,--index", family_params.index, "family index i or j");

  for (auto* sub : app.get_subcommands({})) sub->add_option("--output", output_path, "write the document here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kUsageError;
  }

  Emission emission;
  try {
    if (*build) {
      emission = cmd_build(graph, format);
    } else if (*verify) {
      emission = cmd_verify(graph, set_text, property);
    } else if (*search) {
      emission = cmd_search(graph, parameter, cap, err);
    } else if (*table) {
      emission = cmd_table(graph, set_text, format);
    } else {
      emission = cmd_construct(family_id, family_params);
    }
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return kUsageError;
  } catch (const std::domain_error& e) {
    report_error(err, "domain", e.what());
    return kUsageError;
  } catch (const std::out_of_range& e) {
    report_error(err, "range", e.what());
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    report_error(err, "invalid", e.what());
    return kUsageError;
  }

  if (output_path.empty()) {
    out << emission.text;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      report_error(err, "io", "cannot open " + output_path);
      return kUsageError;
    }
    file << emission.text;
  }
  return emission.code;
}

}  // namespace mdim::cli
