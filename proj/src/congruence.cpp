#include "gis/congruence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace gis {

Ideal ideal_closure(const Graph& g, const std::vector<std::size_t>& seed) {
  std::vector<bool> in(g.vertex_count(), false);
  std::vector<std::size_t> stack;
  for (std::size_t v : seed) {
    if (v >= g.vertex_count()) {
      throw LookupError("vertex index out of range");
    }
    if (!in[v]) {
      in[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.out_edges(v)) {
      std::size_t w = g.range(e);
      if (!in[w]) {
        in[w] = true;
        stack.push_back(w);
      }
    }
  }
  Ideal out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) {
      out.vertices.push_back(v);
    }
  }
  return out;
}

bool ideal_contains(const Graph& g, const Ideal& ideal, const Element& a) {
  if (a.is_zero()) {
    return true;
  }
  validate_element(g, a);
  return std::binary_search(ideal.vertices.begin(), ideal.vertices.end(),
                            path_range(g, a.left()));
}

Graph rees_quotient_graph(const Graph& g, const Ideal& ideal) {
  auto removed = [&](std::size_t v) {
    return std::binary_search(ideal.vertices.begin(), ideal.vertices.end(), v);
  };
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!removed(v)) {
      vertices.push_back(g.vertex_name(v));
    }
  }
  std::vector<Graph::EdgeDecl> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!removed(g.source(e)) && !removed(g.range(e))) {
      edges.push_back(
          {g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e))});
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

bool hypothesis_holds(const Graph& g, std::size_t edge) {
  if (edge >= g.edge_count()) {
    throw LookupError("edge index out of range");
  }
  for (std::size_t f : g.out_edges(g.source(edge))) {
    if (f != edge && reachable(g, g.range(f), g.range(edge))) {
      return false;
    }
  }
  return true;
}

bool has_only_rees_congruences(const Graph& g) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (hypothesis_holds(g, e)) {
      return false;
    }
  }
  return true;
}

bool is_congruence_free(const Graph& g) {
  if (g.vertex_count() <= 1 && g.edge_count() == 0) {
    throw SizeGuardError("G(E) has at most 2 elements; the criterion needs |G(E)| > 2");
  }
  if (scc(g).components.size() != 1) {
    return false;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) < 2) {
      return false;
    }
  }
  return true;
}

NonReesCanonical nonrees_spec(const Graph& g, std::size_t edge) {
  if (edge >= g.edge_count()) {
    throw LookupError("edge index out of range");
  }
  if (!hypothesis_holds(g, edge)) {
    throw PreconditionError("edge " + g.edge_name(edge) +
                            " admits a competing path; the canonical congruence needs every " +
                            "path between its endpoints to start with it");
  }
  return NonReesCanonical{g.source(edge), edge};
}

namespace {

void check_spec(const Graph& g, const NonReesCanonical& spec) {
  if (spec.edge >= g.edge_count() || spec.vertex != g.source(spec.edge) ||
      !hypothesis_holds(g, spec.edge)) {
    throw PreconditionError("invalid non-Rees congruence descriptor");
  }
}

Ideal competing_ideal(const Graph& g, const NonReesCanonical& spec) {
  std::vector<std::size_t> seed;
  for (std::size_t f : g.out_edges(spec.vertex)) {
    if (f != spec.edge) {
      seed.push_back(g.range(f));
    }
  }
  return ideal_closure(g, seed);
}

}  // namespace

Element nonrees_canon(const Graph& g, const NonReesCanonical& spec, const Element& a) {
  check_spec(g, spec);
  validate_element(g, a);
  if (a.is_zero()) {
    return a;
  }
  Path left = a.left();
  Path right = a.right();
  while (!left.edges.empty() && !right.edges.empty() && left.edges.back() == spec.edge &&
         right.edges.back() == spec.edge) {
    left.edges.pop_back();
    right.edges.pop_back();
  }
  return Element::of(std::move(left), std::move(right));
}

bool nonrees_member(const Graph& g, const NonReesCanonical& spec, const Element& a,
                    const Element& b) {
  check_spec(g, spec);
  validate_element(g, a);
  validate_element(g, b);
  if (nonrees_canon(g, spec, a) == nonrees_canon(g, spec, b)) {
    return true;
  }
  Ideal ideal = competing_ideal(g, spec);
  return ideal_contains(g, ideal, a) && ideal_contains(g, ideal, b);
}

std::vector<ElementSet> rees_congruence_classes(const Graph& g, const Ideal& ideal) {
  ElementSet all = enumerate_elements(g);
  std::vector<ElementSet> classes;
  ElementSet in_ideal;
  for (const Element& a : all) {
    if (ideal_contains(g, ideal, a)) {
      in_ideal.push_back(a);
    } else {
      classes.push_back({a});
    }
  }
  classes.push_back(std::move(in_ideal));
  std::sort(classes.begin(), classes.end(), [](const ElementSet& a, const ElementSet& b) {
    return element_less(a.front(), b.front());
  });
  return classes;
}

oracle::MulTable quotient_table(const Graph& g, const std::vector<ElementSet>& classes) {
  ElementSet all = enumerate_elements(g);
  std::vector<std::size_t> class_of(all.size(), npos);
  auto index_of = [&](const Element& a) {
    auto it = std::lower_bound(all.begin(), all.end(), a, element_less);
    if (it == all.end() || !(*it == a)) {
      throw NotACongruenceError("partition mentions an element outside G(E)");
    }
    return static_cast<std::size_t>(it - all.begin());
  };
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw NotACongruenceError("partition has an empty class");
    }
    for (const Element& a : classes[c]) {
      std::size_t i = index_of(a);
      if (class_of[i] != npos) {
        throw NotACongruenceError("partition classes overlap at " + element_to_string(g, a));
      }
      class_of[i] = c;
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (class_of[i] == npos) {
      throw NotACongruenceError("partition misses " + element_to_string(g, all[i]));
    }
  }

  auto class_of_elem = [&](const Element& a) { return class_of[index_of(a)]; };
  for (const ElementSet& cls : classes) {
    for (std::size_t k = 1; k < cls.size(); ++k) {
      const Element& a = cls[0];
      const Element& b = cls[k];
      for (const Element& c : all) {
        if (class_of_elem(multiply(g, c, a)) != class_of_elem(multiply(g, c, b)) ||
            class_of_elem(multiply(g, a, c)) != class_of_elem(multiply(g, b, c))) {
          throw NotACongruenceError(
              "not a congruence: " + element_to_string(g, a) + " ~ " + element_to_string(g, b) +
              " but multiplying by " + element_to_string(g, c) + " separates them");
        }
      }
    }
  }

  // Representatives: the least element of each class, in canonical order.
  std::vector<Element> reps;
  reps.reserve(classes.size());
  for (const ElementSet& cls : classes) {
    reps.push_back(*std::min_element(cls.begin(), cls.end(), element_less));
  }
  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return element_less(reps[a], reps[b]); });
  std::vector<std::size_t> rank(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
  }

  oracle::MulTable t;
  t.elements.reserve(classes.size());
  for (std::size_t i : order) {
    t.elements.push_back(reps[i]);
  }
  t.product.assign(classes.size(), std::vector<std::size_t>(classes.size(), 0));
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      std::size_t c = class_of_elem(multiply(g, t.elements[a], t.elements[b]));
      t.product[a][b] = rank[c];
    }
  }
  oracle::verify_associative(t);
  return t;
}

std::vector<std::pair<Element, Element>> parse_pair_file(const Graph& g, std::string_view text) {
  std::vector<std::pair<Element, Element>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head.front() == '#') {
      continue;
    }
    std::string first;
    std::string second;
    std::string rest;
    if (head != "pair" || !(ls >> first >> second) || (ls >> rest)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected: pair ELEMENT ELEMENT");
    }
    try {
      pairs.emplace_back(parse_element(g, first), parse_element(g, second));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return pairs;
}

std::vector<ElementSet> congruence_classes(const Graph& g, const CongruenceSpec& spec) {
  if (const auto* rees = std::get_if<ReesOf>(&spec)) {
    return rees_congruence_classes(g, rees->ideal);
  }

  std::vector<std::pair<Element, Element>> pairs;
  if (const auto* generated = std::get_if<GeneratedBy>(&spec)) {
    pairs = generated->pairs;
  } else {
    const auto& canonical = std::get<NonReesCanonical>(spec);
    check_spec(g, canonical);
    pairs.emplace_back(Element::vertex(canonical.vertex),
                       Element::of(edge_path(g, canonical.edge), edge_path(g, canonical.edge)));
  }

  oracle::MulTable t = oracle::build_table(g);
  std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
  index_pairs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    index_pairs.emplace_back(t.index_of(a), t.index_of(b));
  }
  oracle::Partition p = oracle::congruence_closure(t, index_pairs);
  std::vector<ElementSet> classes;
  classes.reserve(p.blocks.size());
  for (const auto& block : p.blocks) {
    ElementSet cls;
    cls.reserve(block.size());
    for (std::size_t i : block) {
      cls.push_back(t.elements[i]);
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace gis
