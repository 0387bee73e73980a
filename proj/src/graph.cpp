#include "gis/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace gis {

bool valid_identifier(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) {
      tokens.push_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeDecl> edges) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i - 1] == vertices[i]) {
      throw Error("duplicate vertex identifier: " + vertices[i]);
    }
  }
  vertex_names_ = std::move(vertices);

  std::sort(edges.begin(), edges.end(),
            [](const EdgeDecl& a, const EdgeDecl& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].name == edges[i].name) {
      throw Error("duplicate edge identifier: " + edges[i].name);
    }
  }

  out_.assign(vertex_names_.size(), {});
  in_.assign(vertex_names_.size(), {});
  edge_names_.reserve(edges.size());
  sources_.reserve(edges.size());
  ranges_.reserve(edges.size());
  for (auto& decl : edges) {
    std::size_t s = require_vertex(decl.source);
    std::size_t r = require_vertex(decl.range);
    std::size_t e = edge_names_.size();
    edge_names_.push_back(std::move(decl.name));
    sources_.push_back(s);
    ranges_.push_back(r);
    out_[s].push_back(e);
    in_[r].push_back(e);
  }
}

std::optional<std::size_t> Graph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - vertex_names_.begin());
}

std::optional<std::size_t> Graph::find_edge(std::string_view name) const {
  auto it = std::lower_bound(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end() || *it != name) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - edge_names_.begin());
}

std::size_t Graph::require_vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) {
    return *v;
  }
  throw LookupError("unknown vertex: " + std::string(name));
}

std::size_t Graph::require_edge(std::string_view name) const {
  if (auto e = find_edge(name)) {
    return *e;
  }
  throw LookupError("unknown edge: " + std::string(name));
}

Path vertex_path(std::size_t v) { return Path{v, {}}; }

Path edge_path(const Graph& g, std::size_t e) {
  if (e >= g.edge_count()) {
    throw LookupError("edge index out of range");
  }
  return Path{g.source(e), {e}};
}

bool path_less(const Path& a, const Path& b) {
  if (a.edges.size() != b.edges.size()) {
    return a.edges.size() < b.edges.size();
  }
  if (a.edges != b.edges) {
    return a.edges < b.edges;
  }
  return a.source < b.source;
}

bool valid_path(const Graph& g, const Path& p) {
  if (p.source >= g.vertex_count()) {
    return false;
  }
  for (std::size_t e : p.edges) {
    if (e >= g.edge_count()) {
      return false;
    }
  }
  if (p.edges.empty()) {
    return true;
  }
  if (g.source(p.edges.front()) != p.source) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
    if (g.range(p.edges[i]) != g.source(p.edges[i + 1])) {
      return false;
    }
  }
  return true;
}

std::size_t path_range(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.source : g.range(p.edges.back());
}

Path concat(const Graph& g, const Path& a, const Path& b) {
  if (path_range(g, a) != b.source) {
    throw Error("cannot concatenate paths: range and source differ");
  }
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

bool is_prefix(const Path& prefix, const Path& whole) {
  if (prefix.edges.size() > whole.edges.size()) {
    return false;
  }
  if (prefix.edges.empty()) {
    return prefix.source == whole.source;
  }
  return std::equal(prefix.edges.begin(), prefix.edges.end(), whole.edges.begin());
}

std::optional<Path> strip_prefix(const Graph& g, const Path& prefix, const Path& whole) {
  if (!is_prefix(prefix, whole)) {
    return std::nullopt;
  }
  Path tail;
  tail.source = path_range(g, prefix);
  tail.edges.assign(whole.edges.begin() + static_cast<std::ptrdiff_t>(prefix.edges.size()),
                    whole.edges.end());
  return tail;
}

std::string path_to_string(const Graph& g, const Path& p) {
  if (p.edges.empty()) {
    return g.vertex_name(p.source);
  }
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i > 0) {
      out += '.';
    }
    out += g.edge_name(p.edges[i]);
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Graph::EdgeDecl> edges;
  std::set<std::string, std::less<>> vertex_seen;
  std::set<std::string, std::less<>> edge_seen;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      continue;
    }
    if (tokens.front() == "vertex") {
      if (tokens.size() != 2) {
        parse_fail(lineno, "expected: vertex NAME");
      }
      if (!valid_identifier(tokens[1])) {
        parse_fail(lineno, "invalid name: " + std::string(tokens[1]));
      }
      if (!vertex_seen.insert(std::string(tokens[1])).second) {
        parse_fail(lineno, "duplicate vertex identifier: " + std::string(tokens[1]));
      }
      vertices.emplace_back(tokens[1]);
    } else if (tokens.front() == "edge") {
      if (tokens.size() != 4) {
        parse_fail(lineno, "expected: edge NAME SOURCE RANGE");
      }
      for (std::size_t i = 1; i < 4; ++i) {
        if (!valid_identifier(tokens[i])) {
          parse_fail(lineno, "invalid name: " + std::string(tokens[i]));
        }
      }
      if (!edge_seen.insert(std::string(tokens[1])).second) {
        parse_fail(lineno, "duplicate edge identifier: " + std::string(tokens[1]));
      }
      for (std::size_t i = 2; i < 4; ++i) {
        if (vertex_seen.find(tokens[i]) == vertex_seen.end()) {
          parse_fail(lineno, "unknown vertex: " + std::string(tokens[i]));
        }
      }
      edges.push_back({std::string(tokens[1]), std::string(tokens[2]), std::string(tokens[3])});
    } else {
      parse_fail(lineno, "expected 'vertex' or 'edge', got: " + std::string(tokens.front()));
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

std::string to_text(const Graph& g) {
  std::string out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out += "vertex " + g.vertex_name(v) + "\n";
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out += "edge " + g.edge_name(e) + " " + g.vertex_name(g.source(e)) + " " +
           g.vertex_name(g.range(e)) + "\n";
  }
  return out;
}

bool reachable(const Graph& g, std::size_t from, std::size_t to) {
  if (from >= g.vertex_count() || to >= g.vertex_count()) {
    throw LookupError("vertex index out of range");
  }
  if (from == to) {
    return true;
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.out_edges(v)) {
      std::size_t w = g.range(e);
      if (w == to) {
        return true;
      }
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

SccPartition scc(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, npos);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t next_edge;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != npos) {
      continue;
    }
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      const auto& outs = g.out_edges(frame.vertex);
      if (frame.next_edge < outs.size()) {
        std::size_t w = g.range(outs[frame.next_edge]);
        ++frame.next_edge;
        if (index[w] == npos) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.vertex] = std::min(low[frame.vertex], index[w]);
        }
      } else {
        std::size_t v = frame.vertex;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().vertex] = std::min(low[call.back().vertex], low[v]);
        }
        if (low[v] == index[v]) {
          std::vector<std::size_t> component;
          while (true) {
            std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(w);
            if (w == v) {
              break;
            }
          }
          std::sort(component.begin(), component.end());
          components.push_back(std::move(component));
        }
      }
    }
  }

  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SccPartition out;
  out.component_of.assign(n, npos);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t v : components[c]) {
      out.component_of[v] = c;
    }
  }
  out.components = std::move(components);
  return out;
}

bool is_acyclic(const Graph& g) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.source(e) == g.range(e)) {
      return false;
    }
  }
  for (const auto& component : scc(g).components) {
    if (component.size() > 1) {
      return false;
    }
  }
  return true;
}

bool is_simple(const Graph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.source(e) == g.range(e)) {
      return false;
    }
    if (!seen.insert({g.source(e), g.range(e)}).second) {
      return false;
    }
  }
  return true;
}

Graph condensation(const Graph& g) {
  SccPartition parts = scc(g);
  std::vector<std::string> labels;
  labels.reserve(parts.components.size());
  for (const auto& component : parts.components) {
    labels.push_back(g.vertex_name(component.front()));
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::size_t from = parts.component_of[g.source(e)];
    std::size_t to = parts.component_of[g.range(e)];
    if (from != to) {
      pairs.insert({from, to});
    }
  }

  std::vector<Graph::EdgeDecl> edges;
  std::size_t k = 0;
  for (const auto& [from, to] : pairs) {
    edges.push_back({"b" + std::to_string(k++), labels[from], labels[to]});
  }
  return Graph(std::move(labels), std::move(edges));
}

std::vector<Path> enumerate_paths_bounded(const Graph& g, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<Path> level;
  level.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    level.push_back(vertex_path(v));
  }
  std::size_t len = 0;
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) {
      break;
    }
    std::vector<Path> next;
    for (const Path& p : level) {
      for (std::size_t e : g.out_edges(path_range(g, p))) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end(), path_less);
    level = std::move(next);
    ++len;
  }
  return out;
}

std::vector<Path> enumerate_paths(const Graph& g) {
  if (!is_acyclic(g)) {
    throw CyclicGraphError("graph has a cycle: the path set is infinite");
  }
  return enumerate_paths_bounded(g, npos);
}

}  // namespace gis
