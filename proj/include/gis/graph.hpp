#ifndef GIS_GRAPH_HPP_
#define GIS_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gis/errors.hpp"

namespace gis {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Identifiers are nonempty and drawn from [A-Za-z0-9_].
bool valid_identifier(std::string_view name);

/// A finite directed multigraph with named vertices and named edges.
///
/// Vertices and edges are addressed by dense indices. Both index orders
/// follow the lexicographic order of the identifiers, so every enumeration
/// in the library is deterministic. Parallel edges and loops are allowed;
/// the two identifier namespaces are independent. Instances are immutable
/// after construction and safe to share across threads.
class Graph {
 public:
  struct EdgeDecl {
    std::string name;
    std::string source;
    std::string range;
  };

  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<EdgeDecl> edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }

  const std::string& vertex_name(std::size_t v) const { return vertex_names_[v]; }
  const std::string& edge_name(std::size_t e) const { return edge_names_[e]; }
  std::size_t source(std::size_t e) const { return sources_[e]; }
  std::size_t range(std::size_t e) const { return ranges_[e]; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view name) const;
  std::size_t require_vertex(std::string_view name) const;  // throws LookupError
  std::size_t require_edge(std::string_view name) const;    // throws LookupError

  /// Edge indices leaving/entering a vertex, sorted.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }
  std::size_t out_degree(std::size_t v) const { return out_[v].size(); }
  std::size_t in_degree(std::size_t v) const { return in_[v].size(); }

 private:
  std::vector<std::string> vertex_names_;  // sorted
  std::vector<std::string> edge_names_;    // sorted
  std::vector<std::size_t> sources_;
  std::vector<std::size_t> ranges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// A path: a source vertex and a chain of edges, possibly empty. A path of
/// length 0 stands for its source vertex, whose source and range are the
/// vertex itself.
struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

Path vertex_path(std::size_t v);
Path edge_path(const Graph& g, std::size_t e);

/// Canonical path order: by length, then edge sequence, then source.
bool path_less(const Path& a, const Path& b);

bool valid_path(const Graph& g, const Path& p);
std::size_t path_range(const Graph& g, const Path& p);

/// Concatenation; requires range(a) == source(b).
Path concat(const Graph& g, const Path& a, const Path& b);

/// True if prefix's edge sequence starts whole (for length 0: same source).
bool is_prefix(const Path& prefix, const Path& whole);

/// The path t with whole = prefix . t, if one exists.
std::optional<Path> strip_prefix(const Graph& g, const Path& prefix, const Path& whole);

std::string path_to_string(const Graph& g, const Path& p);

/// Strongly connected components. Components are ordered by their least
/// member vertex, and each component lists its vertices sorted.
struct SccPartition {
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
};

/// Parses the graph file grammar:
///
///   line        := comment | vertex-decl | edge-decl | blank
///   comment     := "#" any-text
///   vertex-decl := "vertex" WS name
///   edge-decl   := "edge" WS name WS name WS name    (id, source, range)
///   name        := [A-Za-z0-9_]+
///
/// Vertices must be declared before edges that use them. Errors carry the
/// offending line number.
Graph parse_graph(std::string_view text);

/// Renders a graph in the file grammar above (vertices first, sorted).
std::string to_text(const Graph& g);

/// True iff some path runs from `from` to `to`; reflexive by length-0 paths.
bool reachable(const Graph& g, std::size_t from, std::size_t to);

SccPartition scc(const Graph& g);

/// A graph is cyclic iff some component has two or more vertices or some
/// edge is a loop.
bool is_acyclic(const Graph& g);

/// No loops, and at most one edge per ordered vertex pair.
bool is_simple(const Graph& g);

/// The condensation: one vertex per strongly connected component, named
/// after the component's least member, and one edge per ordered pair of
/// distinct components joined by at least one edge. Simple and acyclic.
Graph condensation(const Graph& g);

/// All paths of an acyclic graph in canonical order, length-0 paths
/// included. Throws CyclicGraphError otherwise.
std::vector<Path> enumerate_paths(const Graph& g);

/// All paths of length at most max_len, in canonical order.
std::vector<Path> enumerate_paths_bounded(const Graph& g, std::size_t max_len);

}  // namespace gis

#endif  // GIS_GRAPH_HPP_
