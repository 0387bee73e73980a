#include "gis/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gis/congruence.hpp"
#include "gis/graph.hpp"
#include "gis/green.hpp"
#include "gis/morphisms.hpp"
#include "gis/oracle.hpp"
#include "gis/representation.hpp"
#include "gis/semigroup.hpp"

namespace gis::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

const char* bool_text(bool b) { return b ? "true" : "false"; }

void cmd_info(const Graph& g, std::ostream& out) {
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "sccs: " << scc(g).components.size() << "\n";
  out << "acyclic: " << bool_text(is_acyclic(g)) << "\n";
  auto count = element_count(g);
  out << "elements: ";
  if (count) {
    out << *count << "\n";
  } else {
    out << "infinite\n";
  }
  auto degree = min_faithful_degree(g);
  out << "min-degree: ";
  if (degree) {
    out << *degree << "\n";
  } else {
    out << "infinite\n";
  }
  out << "only-rees: " << bool_text(has_only_rees_congruences(g)) << "\n";
  out << "congruence-free: ";
  if (g.vertex_count() <= 1 && g.edge_count() == 0) {
    out << "n/a\n";
  } else {
    out << bool_text(is_congruence_free(g)) << "\n";
  }
}

void cmd_elements(const Graph& g, std::size_t max_len, bool bounded, std::ostream& out) {
  ElementSet elements = bounded ? bounded_elements(g, max_len) : enumerate_elements(g);
  for (const Element& a : elements) {
    out << element_to_string(g, a) << "\n";
  }
}

void cmd_jposet(const Graph& g, bool dot, std::ostream& out) {
  Poset p = j_poset(g);
  if (!dot) {
    out << poset_to_text(p);
    return;
  }
  out << "digraph jposet {\n";
  for (const auto& label : p.labels) {
    out << "  \"" << label << "\";\n";
  }
  auto pairs = covering_pairs(p);
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return std::make_pair(p.labels[a.second], p.labels[a.first]) <
           std::make_pair(p.labels[b.second], p.labels[b.first]);
  });
  for (const auto& [lower, upper] : pairs) {
    out << "  \"" << p.labels[upper] << "\" -> \"" << p.labels[lower] << "\";\n";
  }
  out << "}\n";
}

std::vector<std::size_t> parse_vertex_list(const Graph& g, const std::string& list) {
  std::vector<std::size_t> vertices;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::string name = list.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!name.empty()) {
      vertices.push_back(g.require_vertex(name));
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return vertices;
}

void cmd_congruences(const Graph& g, std::size_t bound, bool classify, std::ostream& out) {
  oracle::MulTable t = oracle::build_table(g);
  for (const oracle::Partition& p : oracle::enumerate_congruences(t, bound)) {
    std::string line;
    if (classify) {
      line += oracle::is_rees_partition(t, p) ? "rees " : "non-rees ";
    }
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      if (b > 0) {
        line += ' ';
      }
      line += '{';
      for (std::size_t k = 0; k < p.blocks[b].size(); ++k) {
        if (k > 0) {
          line += ',';
        }
        line += element_to_string(g, t.elements[p.blocks[b][k]]);
      }
      line += '}';
    }
    out << line << "\n";
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph inverse semigroup toolkit"};
  app.name("gis");
  app.require_subcommand(1);

  std::string graph_file;
  std::string graph_file2;
  std::string map_file;
  std::string poset_file;
  std::string lhs;
  std::string rhs;
  std::string relation;
  std::string edge_name;
  std::string vertex_list;
  std::vector<std::string> member_pair;
  std::size_t max_len = 0;
  std::size_t bound = 12;
  bool dot = false;
  bool classify = false;
  bool check = false;
  bool extend = false;

  auto* info = app.add_subcommand("info", "Summarise a graph and its semigroup");
  info->add_option("graph", graph_file)->required();

  auto* elements = app.add_subcommand("elements", "List the elements of a finite G(E)");
  elements->add_option("graph", graph_file)->required();
  auto* max_len_opt = elements->add_option("--max-len", max_len,
                                           "List the window of elements with paths this long");

  auto* mul = app.add_subcommand("mul", "Multiply two elements");
  mul->add_option("graph", graph_file)->required();
  mul->add_option("a", lhs)->required();
  mul->add_option("b", rhs)->required();

  auto* green = app.add_subcommand("green", "Test one of Green's relations L R J H D");
  green->add_option("graph", graph_file)->required();
  green->add_option("relation", relation)->required();
  green->add_option("a", lhs)->required();
  green->add_option("b", rhs)->required();

  auto* jposet_cmd = app.add_subcommand("jposet", "The poset of nonzero J-classes");
  jposet_cmd->add_option("graph", graph_file)->required();
  jposet_cmd->add_flag("--dot", dot, "Emit the Hasse diagram as DOT");

  auto* quotient = app.add_subcommand("quotient", "Rees quotient by the ideal of a vertex set");
  quotient->add_option("graph", graph_file)->required();
  quotient->add_option("--vertices", vertex_list, "Comma-separated seed vertices")->required();

  auto* congruences = app.add_subcommand("congruences", "Enumerate all congruences");
  congruences->add_option("graph", graph_file)->required();
  congruences->add_flag("--classify", classify, "Mark each congruence rees/non-rees");
  congruences->add_option("--bound", bound, "Element-count bound for enumeration");

  auto* nonrees = app.add_subcommand("nonrees", "The canonical non-Rees congruence at an edge");
  nonrees->add_option("graph", graph_file)->required();
  nonrees->add_option("edge", edge_name)->required();
  auto* member_opt =
      nonrees->add_option("--member", member_pair, "Test a pair for membership")->expected(2);

  auto* mindegree = app.add_subcommand("mindegree", "Minimum faithful partial-map degree");
  mindegree->add_option("graph", graph_file)->required();

  auto* vp = app.add_subcommand("vp", "The right-translation representation of a finite G(E)");
  vp->add_option("graph", graph_file)->required();

  auto* aut = app.add_subcommand("aut", "All graph automorphisms");
  aut->add_option("graph", graph_file)->required();

  auto* iso = app.add_subcommand("iso", "Find a graph isomorphism");
  iso->add_option("graph", graph_file)->required();
  iso->add_option("graph2", graph_file2)->required();

  auto* hom = app.add_subcommand("hom", "Check or extend a graph homomorphism");
  hom->add_option("graph", graph_file)->required();
  hom->add_option("graph2", graph_file2)->required();
  hom->add_option("mapfile", map_file)->required();
  hom->add_flag("--check", check, "Report whether the map is a graph homomorphism");
  hom->add_flag("--extend", extend, "Print the zero-preserving semigroup extension");

  auto* realize = app.add_subcommand("realize-poset", "A graph whose J-poset realizes a poset");
  realize->add_option("posetfile", poset_file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (app.got_subcommand(info)) {
    cmd_info(load_graph(graph_file), out);
  } else if (app.got_subcommand(elements)) {
    cmd_elements(load_graph(graph_file), max_len, max_len_opt->count() > 0, out);
  } else if (app.got_subcommand(mul)) {
    Graph g = load_graph(graph_file);
    out << element_to_string(g, multiply(g, parse_element(g, lhs), parse_element(g, rhs)))
        << "\n";
  } else if (app.got_subcommand(green)) {
    Graph g = load_graph(graph_file);
    out << bool_text(related(g, parse_green_relation(relation), parse_element(g, lhs),
                             parse_element(g, rhs)))
        << "\n";
  } else if (app.got_subcommand(jposet_cmd)) {
    cmd_jposet(load_graph(graph_file), dot, out);
  } else if (app.got_subcommand(quotient)) {
    Graph g = load_graph(graph_file);
    out << to_text(rees_quotient_graph(g, ideal_closure(g, parse_vertex_list(g, vertex_list))));
  } else if (app.got_subcommand(congruences)) {
    cmd_congruences(load_graph(graph_file), bound, classify, out);
  } else if (app.got_subcommand(nonrees)) {
    Graph g = load_graph(graph_file);
    std::size_t e = g.require_edge(edge_name);
    if (member_opt->count() == 0) {
      out << bool_text(hypothesis_holds(g, e)) << "\n";
    } else {
      NonReesCanonical spec = nonrees_spec(g, e);
      out << bool_text(nonrees_member(g, spec, parse_element(g, member_pair[0]),
                                      parse_element(g, member_pair[1])))
          << "\n";
    }
  } else if (app.got_subcommand(mindegree)) {
    auto degree = min_faithful_degree(load_graph(graph_file));
    if (degree) {
      out << *degree << "\n";
    } else {
      out << "infinite\n";
    }
  } else if (app.got_subcommand(vp)) {
    Graph g = load_graph(graph_file);
    out << format_representation(g, vagner_preston(g));
  } else if (app.got_subcommand(aut)) {
    Graph g = load_graph(graph_file);
    auto autos = graph_automorphisms(g);
    out << autos.size() << "\n";
    for (const GraphHom& h : autos) {
      out << format_graph_hom(g, g, h) << "\n";
    }
  } else if (app.got_subcommand(iso)) {
    Graph a = load_graph(graph_file);
    Graph b = load_graph(graph_file2);
    if (auto h = graphs_isomorphic(a, b)) {
      out << format_graph_hom(a, b, *h) << "\n";
    } else {
      out << "none\n";
    }
  } else if (app.got_subcommand(hom)) {
    if (check == extend) {
      throw ParseError("hom needs exactly one of --check or --extend");
    }
    Graph a = load_graph(graph_file);
    Graph b = load_graph(graph_file2);
    GraphHom h = parse_map_file(a, b, read_file(map_file));
    if (check) {
      out << bool_text(check_graph_hom(a, b, h)) << "\n";
    } else {
      SemigroupMap m = extend_hom(a, b, h);
      for (std::size_t i = 0; i < m.domain.size(); ++i) {
        out << element_to_string(a, m.domain[i]) << " -> " << element_to_string(b, m.images[i])
            << "\n";
      }
    }
  } else if (app.got_subcommand(realize)) {
    out << to_text(realize_poset(parse_poset(read_file(poset_file))));
  }
  return 0;
}

}  // namespace

}  // namespace gis::cli
