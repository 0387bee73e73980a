#include "gis/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "gis/green.hpp"

namespace gis {

GraphHom GraphHom::identity(const Graph& g) {
  GraphHom h;
  h.vertex_map.resize(g.vertex_count());
  h.edge_map.resize(g.edge_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    h.vertex_map[v] = v;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    h.edge_map[e] = e;
  }
  return h;
}

namespace {

void check_totality(const Graph& a, const Graph& b, const GraphHom& h) {
  if (h.vertex_map.size() != a.vertex_count() || h.edge_map.size() != a.edge_count()) {
    throw Error("graph map is not total on the source graph");
  }
  for (std::size_t w : h.vertex_map) {
    if (w >= b.vertex_count()) {
      throw LookupError("graph map targets an unknown vertex");
    }
  }
  for (std::size_t f : h.edge_map) {
    if (f >= b.edge_count()) {
      throw LookupError("graph map targets an unknown edge");
    }
  }
}

}  // namespace

bool check_graph_hom(const Graph& a, const Graph& b, const GraphHom& h) {
  check_totality(a, b, h);
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    if (h.vertex_map[a.source(e)] != b.source(h.edge_map[e]) ||
        h.vertex_map[a.range(e)] != b.range(h.edge_map[e])) {
      return false;
    }
  }
  return true;
}

GraphHom parse_map_file(const Graph& a, const Graph& b, std::string_view text) {
  GraphHom h;
  h.vertex_map.assign(a.vertex_count(), npos);
  h.edge_map.assign(a.edge_count(), npos);
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
    std::string from;
    std::string to;
    std::string rest;
    if ((head != "v" && head != "e") || !(ls >> from >> to) || (ls >> rest)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected: v|e NAME NAME");
    }
    try {
      if (head == "v") {
        std::size_t s = a.require_vertex(from);
        if (h.vertex_map[s] != npos) {
          throw ParseError("vertex mapped twice: " + from);
        }
        h.vertex_map[s] = b.require_vertex(to);
      } else {
        std::size_t s = a.require_edge(from);
        if (h.edge_map[s] != npos) {
          throw ParseError("edge mapped twice: " + from);
        }
        h.edge_map[s] = b.require_edge(to);
      }
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    if (h.vertex_map[v] == npos) {
      throw ParseError("map is not total: vertex " + a.vertex_name(v) + " unassigned");
    }
  }
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    if (h.edge_map[e] == npos) {
      throw ParseError("map is not total: edge " + a.edge_name(e) + " unassigned");
    }
  }
  return h;
}

std::string format_graph_hom(const Graph& a, const Graph& b, const GraphHom& h) {
  std::string out;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    if (v > 0) {
      out += ' ';
    }
    out += a.vertex_name(v) + "=" + b.vertex_name(h.vertex_map[v]);
  }
  if (a.edge_count() > 0) {
    out += " |";
    for (std::size_t e = 0; e < a.edge_count(); ++e) {
      out += ' ';
      out += a.edge_name(e) + "=" + b.edge_name(h.edge_map[e]);
    }
  }
  return out;
}

GraphHom compose(const GraphHom& f, const GraphHom& g) {
  GraphHom out;
  out.vertex_map.reserve(f.vertex_map.size());
  out.edge_map.reserve(f.edge_map.size());
  for (std::size_t w : f.vertex_map) {
    out.vertex_map.push_back(g.vertex_map[w]);
  }
  for (std::size_t e : f.edge_map) {
    out.edge_map.push_back(g.edge_map[e]);
  }
  return out;
}

Element apply_graph_hom(const Graph& a, const Graph& b, const GraphHom& h, const Element& x) {
  check_totality(a, b, h);
  validate_element(a, x);
  if (x.is_zero()) {
    return x;
  }
  auto map_path = [&](const Path& p) {
    Path out;
    out.source = h.vertex_map[p.source];
    out.edges.reserve(p.edges.size());
    for (std::size_t e : p.edges) {
      out.edges.push_back(h.edge_map[e]);
    }
    return out;
  };
  return Element::of(map_path(x.left()), map_path(x.right()));
}

Element SemigroupMap::apply(const Element& x) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), x, element_less);
  if (it == domain.end() || !(*it == x)) {
    throw Error("element is outside the map's domain");
  }
  return images[static_cast<std::size_t>(it - domain.begin())];
}

SemigroupMap extend_hom(const Graph& a, const Graph& b, const GraphHom& h) {
  if (!check_graph_hom(a, b, h)) {
    throw PreconditionError("the maps are not a graph homomorphism");
  }
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    for (std::size_t w = v + 1; w < a.vertex_count(); ++w) {
      if (h.vertex_map[v] == h.vertex_map[w]) {
        throw NotInjectiveError("no zero-preserving extension: vertices " + a.vertex_name(v) +
                                " and " + a.vertex_name(w) + " share the image " +
                                b.vertex_name(h.vertex_map[v]));
      }
    }
  }
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    for (std::size_t f = e + 1; f < a.edge_count(); ++f) {
      if (h.edge_map[e] == h.edge_map[f]) {
        throw NotInjectiveError("no zero-preserving extension: edges " + a.edge_name(e) +
                                " and " + a.edge_name(f) + " share the image " +
                                b.edge_name(h.edge_map[e]));
      }
    }
  }
  if (!is_acyclic(a)) {
    throw CyclicGraphError("extension is tabulated on finite G(E) only; "
                           "use apply_graph_hom for single elements");
  }
  SemigroupMap m;
  m.domain = enumerate_elements(a);
  m.images.reserve(m.domain.size());
  for (const Element& x : m.domain) {
    m.images.push_back(apply_graph_hom(a, b, h, x));
  }
  return m;
}

GraphHom restrict_iso(const Graph& a, const Graph& b, const SemigroupMap& m) {
  if (!is_acyclic(a) || !is_acyclic(b)) {
    throw CyclicGraphError("isomorphism restriction is verified on finite G(E) only");
  }
  ElementSet domain = enumerate_elements(a);
  ElementSet codomain = enumerate_elements(b);
  if (m.domain != domain) {
    throw NotIsomorphismError("map domain is not all of G(E) in canonical order");
  }
  if (m.images.size() != codomain.size()) {
    throw NotIsomorphismError("map is not bijective: size mismatch");
  }
  for (const Element& y : m.images) {
    validate_element(b, y);
  }
  {
    ElementSet sorted = m.images;
    std::sort(sorted.begin(), sorted.end(), element_less);
    if (sorted != codomain) {
      throw NotIsomorphismError("map is not a bijection onto G(E) of the target");
    }
  }
  for (const Element& x : domain) {
    for (const Element& y : domain) {
      Element lhs = m.apply(multiply(a, x, y));
      Element rhs = multiply(b, m.apply(x), m.apply(y));
      if (!(lhs == rhs)) {
        throw NotIsomorphismError("map is not multiplicative at " + element_to_string(a, x) +
                                  " * " + element_to_string(a, y));
      }
    }
  }

  GraphHom h;
  h.vertex_map.assign(a.vertex_count(), npos);
  h.edge_map.assign(a.edge_count(), npos);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    Element image = m.apply(Element::vertex(v));
    if (image.is_zero() || image.left().length() != 0 || image.right().length() != 0) {
      throw NotIsomorphismError("vertex " + a.vertex_name(v) +
                                " does not map to a vertex element");
    }
    h.vertex_map[v] = image.left().source;
  }
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    Element image = m.apply(Element::edge(a, e));
    if (image.is_zero() || image.left().length() != 1 || image.right().length() != 0) {
      throw NotIsomorphismError("edge " + a.edge_name(e) + " does not map to an edge element");
    }
    h.edge_map[e] = image.left().edges.front();
  }
  if (!check_graph_hom(a, b, h)) {
    throw NotIsomorphismError("restriction is not a graph homomorphism");
  }
  return h;
}

namespace {

using EdgeClasses = std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>;

EdgeClasses edges_by_endpoints(const Graph& g) {
  EdgeClasses classes;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    classes[{g.source(e), g.range(e)}].push_back(e);
  }
  return classes;
}

std::size_t multiplicity(const EdgeClasses& classes, std::size_t s, std::size_t r) {
  auto it = classes.find({s, r});
  return it == classes.end() ? 0 : it->second.size();
}

// Enumerates all graph isomorphisms a -> b; stops when visit returns true.
// Vertices are assigned by (in-degree, out-degree) signature then index;
// edge bijections run through parallel classes in lexicographic order.
void for_each_graph_isomorphism(const Graph& a, const Graph& b,
                                const std::function<bool(const GraphHom&)>& visit) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return;
  }
  const std::size_t n = a.vertex_count();
  EdgeClasses ea = edges_by_endpoints(a);
  EdgeClasses eb = edges_by_endpoints(b);

  auto signature = [](const Graph& g, std::size_t v) {
    return std::make_pair(g.in_degree(v), g.out_degree(v));
  };

  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) {
    order[v] = v;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
    return std::make_pair(signature(a, u), u) < std::make_pair(signature(a, v), v);
  });

  std::vector<std::size_t> vmap(n, npos);
  std::vector<bool> used(n, false);
  bool stop = false;

  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (stop) {
      return;
    }
    if (k == n) {
      // Vertex bijection fixed; enumerate the edge bijections parallel
      // class by parallel class.
      std::vector<const std::vector<std::size_t>*> from;
      std::vector<std::vector<std::size_t>> to;
      for (const auto& [endpoints, edges] : ea) {
        auto it = eb.find({vmap[endpoints.first], vmap[endpoints.second]});
        if (it == eb.end() || it->second.size() != edges.size()) {
          return;
        }
        from.push_back(&edges);
        to.push_back(it->second);  // sorted: the first permutation
      }
      while (true) {
        GraphHom h;
        h.vertex_map = vmap;
        h.edge_map.assign(a.edge_count(), npos);
        for (std::size_t c = 0; c < from.size(); ++c) {
          for (std::size_t i = 0; i < from[c]->size(); ++i) {
            h.edge_map[(*from[c])[i]] = to[c][i];
          }
        }
        if (visit(h)) {
          stop = true;
          return;
        }
        // Odometer step over the per-class permutations.
        std::size_t c = 0;
        while (c < to.size() && !std::next_permutation(to[c].begin(), to[c].end())) {
          ++c;  // that class wrapped around to the sorted order; carry on
        }
        if (c == to.size()) {
          return;
        }
      }
    }

    std::size_t v = order[k];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || signature(b, w) != signature(a, v)) {
        continue;
      }
      bool ok = multiplicity(ea, v, v) == multiplicity(eb, w, w);
      for (std::size_t j = 0; j < k && ok; ++j) {
        std::size_t u = order[j];
        ok = multiplicity(ea, u, v) == multiplicity(eb, vmap[u], w) &&
             multiplicity(ea, v, u) == multiplicity(eb, w, vmap[u]);
      }
      if (!ok) {
        continue;
      }
      vmap[v] = w;
      used[w] = true;
      assign(k + 1);
      if (stop) {
        return;
      }
      vmap[v] = npos;
      used[w] = false;
    }
  };

  assign(0);
}

}  // namespace

std::optional<GraphHom> graphs_isomorphic(const Graph& a, const Graph& b) {
  std::optional<GraphHom> found;
  for_each_graph_isomorphism(a, b, [&](const GraphHom& h) {
    found = h;
    return true;
  });
  return found;
}

std::vector<GraphHom> graph_automorphisms(const Graph& g) {
  std::vector<GraphHom> out;
  for_each_graph_isomorphism(g, g, [&](const GraphHom& h) {
    out.push_back(h);
    return false;
  });
  return out;
}

std::size_t jposet_order_automorphisms(const Graph& g) {
  if (!is_simple(g) || !is_acyclic(g)) {
    throw NotSimpleAcyclicError("the J-poset correspondence needs a simple acyclic graph");
  }
  return count_poset_automorphisms(j_poset(g));
}

}  // namespace gis
