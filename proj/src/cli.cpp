#include "otl/cli.hpp"

#include <CLI11.hpp>

#include "otl/error.hpp"
#include "otl/fixtures.hpp"
#include "otl/invariants.hpp"
#include "otl/positivize.hpp"
#include "otl/reduce.hpp"

namespace otl {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string kind = "word";
  std::string format = "text";
  std::string var = "A";
  bool min_order = false;
  bool all = false;
  std::string action;
  std::string name;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("--format " + o.format + " is not available here (use " + list + ")");
}

std::string coloring_text(const std::vector<int>& c) {
  std::string s;
  for (int x : c) s += std::string(s.empty() ? "" : " ") + (x > 0 ? "+" : "-");
  return s;
}

std::string poly_text(const LaurentPoly& p, const std::string& var) { return var == "t" ? to_t_string(p) : p.to_string("A"); }
nlohmann::json poly_json(const LaurentPoly& p, const std::string& var) { return var == "t" ? to_t_json(p) : p.to_json("A"); }

void cmd_parse(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const GroupElement g = element_from_input(o.kind, o.input);
  const bool oriented = is_bipartite(tait_graph(g));
  if (o.format == "json") {
    nlohmann::json j = element_to_json(g);
    j["leaves"] = g.leaf_count();
    j["positive"] = is_positive(g);
    j["oriented"] = oriented;
    out << j.dump() << "\n";
    return;
  }
  out << "top: " << print_tree(g.top()) << "\n"
      << "bottom: " << print_tree(g.bottom()) << "\n"
      << "leaves: " << g.leaf_count() << "\n"
      << "positive: " << (is_positive(g) ? "yes" : "no") << "\n"
      << "oriented: " << (oriented ? "yes" : "no") << "\n";
}

SignedTaitGraph colored_if_possible(const GroupElement& g) {
  SignedTaitGraph graph = tait_graph(g);
  return is_bipartite(graph) ? canonical_coloring(graph) : graph;
}

void cmd_gamma(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "dot", "svg"});
  const SignedTaitGraph graph = colored_if_possible(element_from_input(o.kind, o.input));
  if (o.format == "json") {
    out << graph_to_json(graph).dump() << "\n";
  } else if (o.format == "dot") {
    out << to_dot(graph);
  } else if (o.format == "svg") {
    out << to_svg(graph);
  } else {
    out << "vertices: " << graph.n << "\n";
    for (const auto& e : graph.edges) out << (e.sign > 0 ? "+ " : "- ") << e.u << "-" << e.v << "\n";
    if (graph.coloring) out << "coloring: " << coloring_text(*graph.coloring) << "\n";
  }
}

void cmd_color(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const SignedTaitGraph graph = canonical_coloring(tait_graph(element_from_input(o.kind, o.input)));
  if (o.format == "json") out << nlohmann::json{{"coloring", graph_to_json(graph)["coloring"]}}.dump() << "\n";
  else out << coloring_text(*graph.coloring) << "\n";
}

void cmd_diagram(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "pd"});
  const LinkDiagram d = diagram_of(element_from_input(o.kind, o.input));
  if (o.format == "json") {
    out << diagram_to_json(d).dump() << "\n";
  } else if (o.format == "pd") {
    out << print_pd(to_pd(d)) << "\n";
  } else {
    out << "crossings: " << d.crossing_count() << "\n"
        << "components: " << components(d) << "\n"
        << "writhe: " << writhe(d) << "\n"
        << "negative: " << negative_crossings(d) << "\n"
        << "gauss: " << to_gauss(d) << "\n";
  }
}

void cmd_pd(const Options& o, std::ostream& out) {
  require_format(o, {"text", "pd", "json"});
  const PDCode pd = to_pd(diagram_of(element_from_input(o.kind, o.input)));
  if (o.format == "json") out << nlohmann::json{{"pd", print_pd(pd)}}.dump() << "\n";
  else out << print_pd(pd) << "\n";
}

void cmd_jones(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const LaurentPoly j = jones(diagram_of(element_from_input(o.kind, o.input)));
  if (o.format == "json") out << poly_json(j, o.var).dump() << "\n";
  else out << poly_text(j, o.var) << "\n";
}

void cmd_positivize(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "pd"});
  const PositivizeResult r = positivize_traced(element_from_input(o.kind, o.input));
  auto [stripped, removed] = strip_trivial(r.diagram);
  if (o.format == "json") {
    nlohmann::json j = positivize_to_json(r);
    j["stripped"] = diagram_to_json(stripped);
    j["removedUnknots"] = removed;
    j["jones"] = poly_json(jones(stripped), o.var);
    out << j.dump() << "\n";
  } else if (o.format == "pd") {
    out << "before: " << print_pd(to_pd(r.raw)) << "\n"
        << "after: " << print_pd(to_pd(r.diagram)) << "\n"
        << "stripped: " << print_pd(to_pd(stripped)) << "\n";
  } else {
    out << "tree: " << print_tree(r.ternary_top) << "\n"
        << "crossings: " << r.raw.crossing_count() << " -> " << r.diagram.crossing_count() << " (stripped "
        << stripped.crossing_count() << ", " << removed << " unknots removed)\n"
        << "right-leaf bound: " << right_leaf_count(r.ternary_top) << "\n"
        << "components: " << components(stripped) << "\n"
        << "jones: " << poly_text(jones(stripped), o.var) << "\n";
    for (const auto& s : r.log)
      out << "leaf " << s.leaf << " " << leaf_class_name(s.cls) << ": " << s.move << " -" << s.removed << " +"
          << s.added << "\n";
  }
}

void cmd_unknot_bound(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const GroupElement g = element_from_input(o.kind, o.input);
  const ReductionTrace tr = unknotting_bound(g);
  const int min_bound = o.min_order ? min_bound_over_orders(alpha_inverse(g).top()) : -1;
  if (o.format == "json") {
    nlohmann::json j = trace_to_json(tr);
    if (o.min_order) j["minOverOrders"] = min_bound;
    out << j.dump() << "\n";
    return;
  }
  out << "bound: " << tr.bound << "\n";
  if (o.min_order) out << "min over orders: " << min_bound << "\n";
  for (std::size_t k = 0; k < tr.steps.size(); ++k) {
    const auto& s = tr.steps[k];
    out << "pattern " << s.pattern << " at node " << s.node << " (-" << s.leaves_removed << " leaves, cost " << s.cost
        << "): " << print_tree(tr.trees[k + 1]) << "\n";
  }
}

int cmd_examples(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.action == "list") {
    if (!o.name.empty() || o.all) throw UsageError("examples list takes no name");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : examples_corpus()) {
      if (o.format == "json")
        arr.push_back({{"name", f.name}, {"input", f.input_kind}, {"literal", f.input}, {"expected", f.expected},
                       {"note", f.note}});
      else
        out << f.name << "\t" << f.input_kind << "\t" << f.expected << "\n";
    }
    if (o.format == "json") out << arr.dump() << "\n";
    return 0;
  }
  if (o.action != "run") throw UsageError("examples action must be list or run");
  if (o.all == !o.name.empty()) throw UsageError("examples run needs exactly one of NAME or --all");
  std::vector<const ExampleFixture*> selected;
  if (o.all)
    for (const auto& f : examples_corpus()) selected.push_back(&f);
  else
    selected.push_back(&find_example(o.name));
  bool all_pass = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto* f : selected) {
    const ExampleOutcome r = run_example(*f);
    all_pass = all_pass && r.pass;
    if (o.format == "json") {
      arr.push_back({{"name", f->name}, {"pass", r.pass}, {"rawCrossings", r.raw_crossings},
                     {"positiveCrossings", r.positive_crossings}, {"components", r.components},
                     {"removedUnknots", r.removed_unknots}, {"jones", r.jones}, {"detail", r.detail}});
    } else {
      out << (r.pass ? "PASS " : "FAIL ") << f->name << ": " << r.detail << " (" << r.raw_crossings << " -> "
          << r.positive_crossings << " crossings, components " << r.components << ")\n";
    }
  }
  if (o.format == "json") out << (o.all ? arr : arr[0]).dump() << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Links from Thompson group elements", "otl"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json", "dot", "pd", "svg"};
  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("INPUT", o.input, "word, binary tree or ternary tree literal")->required();
      sub->add_option("--input", o.kind, "how to read INPUT")->check(CLI::IsMember({"word", "btree", "ttree"}));
    }
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--var", o.var, "polynomial variable")->check(CLI::IsMember({"A", "t"}));
  };
  std::map<std::string, CLI::App*> subs;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"parse", "reduced tree pair and membership flags"},
      {"gamma", "signed Tait graph"},
      {"color", "canonical 2-coloring of the Tait graph"},
      {"diagram", "oriented link diagram"},
      {"pd", "PD code of the link diagram"},
      {"jones", "Jones polynomial of the link"},
      {"positivize", "positive diagram with move log"},
      {"unknot-bound", "6-move count of the ternary reduction"},
  };
  for (const auto& [name, help] : commands) {
    subs[name] = app.add_subcommand(name, help);
    add_common(subs[name], true);
  }
  subs["unknot-bound"]->add_flag("--min-order", o.min_order, "also minimize over all reduction orders (<= 15 leaves)");
  CLI::App* ex = app.add_subcommand("examples", "built-in example corpus");
  ex->add_option("action", o.action, "list or run")->required()->check(CLI::IsMember({"list", "run"}));
  ex->add_option("name", o.name, "example name");
  ex->add_flag("--all", o.all, "run every example");
  add_common(ex, false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << nlohmann::json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  try {
    if (subs["parse"]->parsed()) cmd_parse(o, out);
    else if (subs["gamma"]->parsed()) cmd_gamma(o, out);
    else if (subs["color"]->parsed()) cmd_color(o, out);
    else if (subs["diagram"]->parsed()) cmd_diagram(o, out);
    else if (subs["pd"]->parsed()) cmd_pd(o, out);
    else if (subs["jones"]->parsed()) cmd_jones(o, out);
    else if (subs["positivize"]->parsed()) cmd_positivize(o, out);
    else if (subs["unknot-bound"]->parsed()) cmd_unknot_bound(o, out);
    else if (ex->parsed()) return cmd_examples(o, out);
  } catch (const UsageError& e) {
    err << nlohmann::json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    err << nlohmann::json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace otl
