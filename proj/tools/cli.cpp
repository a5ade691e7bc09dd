#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gis/digraph.hpp"
#include "gis/element.hpp"
#include "gis/errors.hpp"
#include "gis/output.hpp"
#include "gis/structure.hpp"

namespace gis::cli {

namespace {

Digraph load_graph(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open graph file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

std::string join(Digraph const& g, std::vector<Element> const& elements) {
  std::string s;
  for (Element const& a : elements) {
    if (!s.empty()) {
      s += ' ';
    }
    s += to_string(g, a);
  }
  return s;
}

void print_element_set(std::ostream& out, Digraph const& g,
                       std::vector<Element> const& elements,
                       std::optional<std::size_t> bound, bool quiet,
                       bool json) {
  if (json) {
    nlohmann::ordered_json j;
    j["count"] = elements.size();
    if (bound) {
      j["bound"] = *bound;
    } else {
      j["bound"] = nullptr;
    }
    j["elements"] = nlohmann::ordered_json::array();
    for (Element const& a : elements) {
      j["elements"].push_back(to_string(g, a));
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << elements.size() << " elements";
  if (bound) {
    out << " (bound " << *bound << ")";
  }
  if (!quiet) {
    out << ": " << join(g, elements);
  }
  out << '\n';
}

void run_enumerate(std::ostream& out, std::string const& graph_file,
                   std::optional<std::size_t> bound, bool quiet, bool json) {
  Digraph g = load_graph(graph_file);
  SemigroupTable t = enumerate(g, bound);
  print_element_set(out, g, t.elements(), t.bound(), quiet, json);
}

void run_idempotents(std::ostream& out, std::string const& graph_file,
                     std::optional<std::size_t> bound, bool dot, bool json,
                     bool quiet) {
  Digraph g = load_graph(graph_file);
  HasseDiagram h = idempotent_lattice(enumerate(g, bound));
  if (dot) {
    out << hasse_to_dot(g, h);
    return;
  }
  if (json) {
    out << hasse_to_json(g, h);
    return;
  }
  out << h.nodes.size() << " idempotents";
  if (!quiet) {
    out << ": " << join(g, h.nodes);
  }
  out << '\n';
  if (quiet) {
    return;
  }
  out << "covers:";
  for (auto const& [lower, upper] : h.covers) {
    out << ' ' << to_string(g, h.nodes[lower]) << '<'
        << to_string(g, h.nodes[upper]);
  }
  out << '\n';
}

void run_green(std::ostream& out, std::string const& relation,
               std::string const& graph_file,
               std::optional<std::size_t> bound, bool dot, bool json,
               bool quiet) {
  auto rel = parse_green_relation(relation);
  if (!rel) {
    throw Error("unknown Green relation '" + relation
                + "', expected one of L R H D J");
  }
  Digraph g = load_graph(graph_file);
  auto classes = green_classes(enumerate(g, bound), *rel);
  if (dot) {
    out << classes_to_dot(g, classes, *rel);
    return;
  }
  if (json) {
    out << classes_to_json(g, classes, *rel);
    return;
  }
  out << classes.size() << " classes: sizes";
  for (auto const& block : classes) {
    out << ' ' << block.size();
  }
  out << '\n';
  if (quiet) {
    return;
  }
  for (auto const& block : classes) {
    out << '{' << join(g, block) << "}\n";
  }
}

void run_primitive(std::ostream& out, std::string const& graph_file) {
  Digraph g = load_graph(graph_file);
  out << "primitive: " << (is_primitive(g) ? "yes" : "no") << '\n';
}

void run_local(std::ostream& out, std::string const& vertex,
               std::string const& graph_file,
               std::optional<std::size_t> bound, bool quiet, bool json) {
  Digraph g = load_graph(graph_file);
  auto v = g.find_vertex(vertex);
  if (!v) {
    throw Error("unknown vertex '" + vertex + "'");
  }
  Element e = make_element(Path::at(*v), Path::at(*v));
  auto elements = local_submonoid(g, e, bound);
  print_element_set(out, g, elements, bound, quiet, json);
}

void run_reduce(std::ostream& out, std::string const& graph_file,
                std::string const& word) {
  Digraph g = load_graph(graph_file);
  Word w = parse_word(g, word);
  if (w.empty()) {
    throw Error("empty word");
  }
  out << to_string(g, reduce_word(g, w)) << '\n';
}

void run_mul(std::ostream& out, std::string const& graph_file,
             std::string const& lhs, std::string const& rhs) {
  Digraph g = load_graph(graph_file);
  Element a = parse_element(g, lhs);
  Element b = parse_element(g, rhs);
  out << to_string(g, multiply(a, b)) << '\n';
}

void run_order(std::ostream& out, std::string const& graph_file,
               std::string const& lhs, std::string const& rhs) {
  Digraph g = load_graph(graph_file);
  Element a = parse_element(g, lhs);
  Element b = parse_element(g, rhs);
  out << to_string(g, a) << " <= " << to_string(g, b) << ": "
      << (nat_leq(a, b) ? "yes" : "no") << '\n';
  out << to_string(g, b) << " <= " << to_string(g, a) << ": "
      << (nat_leq(b, a) ? "yes" : "no") << '\n';
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph inverse semigroup toolkit"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string word;
  std::string lhs;
  std::string rhs;
  std::string relation;
  std::string vertex;
  std::optional<std::size_t> bound;
  bool dot = false;
  bool json = false;
  bool quiet = false;

  auto add_bound = [&bound](CLI::App* sub) {
    sub->add_option("--bound", bound,
                    "maximum path length (required for cyclic graphs)");
  };

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "list the elements of the semigroup");
  enumerate_cmd->add_option("graph", graph_file, "graph file")->required();
  add_bound(enumerate_cmd);
  enumerate_cmd->add_flag("--quiet", quiet, "print the count only");
  enumerate_cmd->add_flag("--json", json, "emit JSON");
  enumerate_cmd->callback(
      [&] { run_enumerate(out, graph_file, bound, quiet, json); });

  auto* idem_cmd = app.add_subcommand(
      "idempotents", "idempotent semilattice and its Hasse diagram");
  idem_cmd->add_option("graph", graph_file, "graph file")->required();
  add_bound(idem_cmd);
  idem_cmd->add_flag("--dot", dot, "emit the Hasse diagram as DOT");
  idem_cmd->add_flag("--json", json, "emit JSON");
  idem_cmd->add_flag("--quiet", quiet, "print the count only");
  idem_cmd->callback(
      [&] { run_idempotents(out, graph_file, bound, dot, json, quiet); });

  auto* green_cmd =
      app.add_subcommand("green", "Green's relation class partition");
  green_cmd->add_option("relation", relation, "one of L R H D J")->required();
  green_cmd->add_option("graph", graph_file, "graph file")->required();
  add_bound(green_cmd);
  green_cmd->add_flag("--dot", dot, "emit class summaries as DOT");
  green_cmd->add_flag("--json", json, "emit JSON");
  green_cmd->add_flag("--quiet", quiet, "print class sizes only");
  green_cmd->callback([&] {
    run_green(out, relation, graph_file, bound, dot, json, quiet);
  });

  auto* primitive_cmd =
      app.add_subcommand("primitive", "is the semigroup primitive?");
  primitive_cmd->add_option("graph", graph_file, "graph file")->required();
  primitive_cmd->callback([&] { run_primitive(out, graph_file); });

  auto* local_cmd =
      app.add_subcommand("local", "local submonoid at a vertex");
  local_cmd->add_option("vertex", vertex, "vertex id")->required();
  local_cmd->add_option("graph", graph_file, "graph file")->required();
  add_bound(local_cmd);
  local_cmd->add_flag("--quiet", quiet, "print the count only");
  local_cmd->add_flag("--json", json, "emit JSON");
  local_cmd->callback(
      [&] { run_local(out, vertex, graph_file, bound, quiet, json); });

  auto* reduce_cmd =
      app.add_subcommand("reduce", "normal form of a word over the generators");
  reduce_cmd->add_option("graph", graph_file, "graph file")->required();
  reduce_cmd->add_option("word", word, "word, e.g. \"e* e\"")->required();
  reduce_cmd->callback([&] { run_reduce(out, graph_file, word); });

  auto* mul_cmd = app.add_subcommand("mul", "multiply two elements");
  mul_cmd->add_option("graph", graph_file, "graph file")->required();
  mul_cmd->add_option("a", lhs, "left element")->required();
  mul_cmd->add_option("b", rhs, "right element")->required();
  mul_cmd->callback([&] { run_mul(out, graph_file, lhs, rhs); });

  auto* order_cmd = app.add_subcommand(
      "order", "compare two idempotents under the natural partial order");
  order_cmd->add_option("graph", graph_file, "graph file")->required();
  order_cmd->add_option("a", lhs, "first idempotent")->required();
  order_cmd->add_option("b", rhs, "second idempotent")->required();
  order_cmd->callback([&] { run_order(out, graph_file, lhs, rhs); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    return app.exit(e, out, err);
  } catch (Error const& e) {
    err << "gis: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gis::cli
