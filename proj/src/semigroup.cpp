#include "gis/semigroup.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace gis {

Element Element::of(Path left, Path right) {
  Element out;
  out.zero_ = false;
  out.left_ = std::move(left);
  out.right_ = std::move(right);
  return out;
}

Element Element::vertex(std::size_t v) { return of(vertex_path(v), vertex_path(v)); }

Element Element::edge(const Graph& g, std::size_t e) {
  return of(edge_path(g, e), vertex_path(g.range(e)));
}

bool element_less(const Element& a, const Element& b) {
  if (a.is_zero() != b.is_zero()) {
    return a.is_zero();
  }
  if (a.is_zero()) {
    return false;
  }
  std::size_t an = a.left().length() + a.right().length();
  std::size_t bn = b.left().length() + b.right().length();
  if (an != bn) {
    return an < bn;
  }
  if (a.left() != b.left()) {
    return path_less(a.left(), b.left());
  }
  return path_less(a.right(), b.right());
}

void validate_element(const Graph& g, const Element& a) {
  if (a.is_zero()) {
    return;
  }
  if (!valid_path(g, a.left()) || !valid_path(g, a.right())) {
    throw InvalidElementError("element paths are not paths of the graph");
  }
  if (path_range(g, a.left()) != path_range(g, a.right())) {
    throw InvalidElementError("element paths have different ranges");
  }
}

Element multiply(const Graph& g, const Element& a, const Element& b) {
  validate_element(g, a);
  validate_element(g, b);
  if (a.is_zero() || b.is_zero()) {
    return Element::zero();
  }
  // a = u.v^{-1}, b = x.y^{-1}; the product telescopes through v^{-1}x.
  if (auto tail = strip_prefix(g, b.left(), a.right())) {  // v = x.t
    return Element::of(a.left(), concat(g, b.right(), *tail));
  }
  if (auto tail = strip_prefix(g, a.right(), b.left())) {  // x = v.t
    return Element::of(concat(g, a.left(), *tail), b.right());
  }
  return Element::zero();
}

Element invert(const Element& a) {
  if (a.is_zero()) {
    return a;
  }
  return Element::of(a.right(), a.left());
}

bool is_idempotent(const Element& a) { return a.is_zero() || a.left() == a.right(); }

bool natural_leq(const Element& a, const Element& b) {
  if (a.is_zero()) {
    return true;
  }
  if (b.is_zero()) {
    return false;
  }
  const Path& u = a.left();
  const Path& v = a.right();
  if (!is_prefix(b.left(), u) || !is_prefix(b.right(), v)) {
    return false;
  }
  std::size_t lu = b.left().length();
  std::size_t lv = b.right().length();
  if (u.length() - lu != v.length() - lv) {
    return false;
  }
  return std::equal(u.edges.begin() + static_cast<std::ptrdiff_t>(lu), u.edges.end(),
                    v.edges.begin() + static_cast<std::ptrdiff_t>(lv));
}

Element idempotent_meet(const Graph& g, const Element& a, const Element& b) {
  if (!is_idempotent(a) || !is_idempotent(b)) {
    throw InvalidElementError("idempotent_meet requires idempotent arguments");
  }
  return multiply(g, a, b);
}

namespace {

std::vector<std::vector<Path>> paths_by_range(const Graph& g, const std::vector<Path>& paths) {
  std::vector<std::vector<Path>> buckets(g.vertex_count());
  for (const Path& p : paths) {
    buckets[path_range(g, p)].push_back(p);
  }
  return buckets;
}

ElementSet pair_up(const Graph& g, const std::vector<Path>& paths) {
  ElementSet out;
  out.push_back(Element::zero());
  for (const auto& bucket : paths_by_range(g, paths)) {
    for (const Path& left : bucket) {
      for (const Path& right : bucket) {
        out.push_back(Element::of(left, right));
      }
    }
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

}  // namespace

ElementSet enumerate_elements(const Graph& g) { return pair_up(g, enumerate_paths(g)); }

ElementSet bounded_elements(const Graph& g, std::size_t max_len) {
  return pair_up(g, enumerate_paths_bounded(g, max_len));
}

std::optional<std::size_t> element_count(const Graph& g) {
  if (!is_acyclic(g)) {
    return std::nullopt;
  }
  // Paths ending at v: the vertex itself plus every path into a neighbour
  // extended by one edge; computed in topological order.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> pending(n, 0);
  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    pending[v] = g.in_degree(v);
    if (pending[v] == 0) {
      ready.push(v);
    }
  }
  std::vector<std::size_t> ending(n, 0);
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop();
    ending[v] = 1;
    for (std::size_t e : g.in_edges(v)) {
      ending[v] += ending[g.source(e)];
    }
    for (std::size_t e : g.out_edges(v)) {
      if (--pending[g.range(e)] == 0) {
        ready.push(g.range(e));
      }
    }
  }
  std::size_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    total += ending[v] * ending[v];
  }
  return total;
}

ElementSet maximal_idempotents(const Graph& g, const ElementSet& pool) {
  for (const Element& a : pool) {
    validate_element(g, a);
  }
  ElementSet out;
  for (const Element& a : pool) {
    bool maximal = true;
    for (const Element& b : pool) {
      if (!(a == b) && natural_leq(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

namespace {

Path parse_path(const Graph& g, std::string_view text) {
  std::vector<std::string_view> names;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string_view::npos) {
      names.push_back(text.substr(start));
      break;
    }
    names.push_back(text.substr(start, dot - start));
    start = dot + 1;
  }
  for (auto name : names) {
    if (name.empty()) {
      throw ParseError("empty name in path: " + std::string(text));
    }
  }

  if (names.size() == 1) {
    auto v = g.find_vertex(names[0]);
    auto e = g.find_edge(names[0]);
    if (v && e) {
      throw ParseError("ambiguous name (both a vertex and an edge): " + std::string(names[0]));
    }
    if (v) {
      return vertex_path(*v);
    }
    if (e) {
      return edge_path(g, *e);
    }
    throw LookupError("unknown vertex or edge: " + std::string(names[0]));
  }

  Path p;
  for (auto name : names) {
    std::size_t e = g.require_edge(name);
    if (p.edges.empty()) {
      p.source = g.source(e);
    } else if (g.range(p.edges.back()) != g.source(e)) {
      throw InvalidElementError("edges do not form a path: " + std::string(text));
    }
    p.edges.push_back(e);
  }
  return p;
}

}  // namespace

Element parse_element(const Graph& g, std::string_view text) {
  if (text == "0") {
    return Element::zero();
  }
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    Path left = parse_path(g, text);
    return Element::of(left, vertex_path(path_range(g, left)));
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw ParseError("element has more than one '/': " + std::string(text));
  }
  Path left = parse_path(g, text.substr(0, slash));
  Path right = parse_path(g, text.substr(slash + 1));
  if (path_range(g, left) != path_range(g, right)) {
    throw InvalidElementError("paths have different ranges: " + std::string(text));
  }
  return Element::of(std::move(left), std::move(right));
}

std::string element_to_string(const Graph& g, const Element& a) {
  if (a.is_zero()) {
    return "0";
  }
  if (a.right().length() == 0 && a.right().source == path_range(g, a.left())) {
    return path_to_string(g, a.left());
  }
  return path_to_string(g, a.left()) + "/" + path_to_string(g, a.right());
}

}  // namespace gis
