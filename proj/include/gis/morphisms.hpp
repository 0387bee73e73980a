#ifndef GIS_MORPHISMS_HPP_
#define GIS_MORPHISMS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gis/graph.hpp"
#include "gis/semigroup.hpp"

namespace gis {

/// A pair of total maps on vertex and edge indices of a source graph into a
/// target graph.
struct GraphHom {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;

  static GraphHom identity(const Graph& g);
  friend bool operator==(const GraphHom&, const GraphHom&) = default;
};

/// True iff the maps commute with source and range on every edge. Totality
/// and target validity are checked first and raise errors.
bool check_graph_hom(const Graph& a, const Graph& b, const GraphHom& h);

/// Map file grammar: lines "v NAME NAME" and "e NAME NAME" (source name,
/// then image name), plus blank lines and "#" comments. The map must cover
/// every vertex and edge of the source graph exactly once.
GraphHom parse_map_file(const Graph& a, const Graph& b, std::string_view text);

std::string format_graph_hom(const Graph& a, const Graph& b, const GraphHom& h);

/// Composition: first f, then g.
GraphHom compose(const GraphHom& f, const GraphHom& g);

/// The edgewise extension of a graph homomorphism to a single element:
/// both paths are mapped edge by edge, length-0 paths through the vertex
/// map. Defined for any element, finite semigroup or not.
Element apply_graph_hom(const Graph& a, const Graph& b, const GraphHom& h, const Element& x);

/// A total zero-preserving map between two finite graph inverse semigroups,
/// tabulated over the canonical element order of the source.
struct SemigroupMap {
  std::vector<Element> domain;
  std::vector<Element> images;

  Element apply(const Element& x) const;
};

/// The unique zero-preserving extension of an injective graph homomorphism,
/// tabulated over G(a) (so a must be acyclic). Throws NotInjectiveError with
/// a witness collision when either map identifies two generators: no
/// zero-preserving extension exists then.
SemigroupMap extend_hom(const Graph& a, const Graph& b, const GraphHom& h);

/// Restricts a semigroup isomorphism G(a) -> G(b) to vertex and edge
/// elements, returning the induced graph isomorphism. The map is first
/// verified to be a multiplicative bijection; NotIsomorphismError carries a
/// witness otherwise. Both graphs must be acyclic.
GraphHom restrict_iso(const Graph& a, const Graph& b, const SemigroupMap& m);

/// A graph isomorphism (vertex and edge bijections commuting with source
/// and range) found by backtracking, or nullopt. Deterministic: vertices
/// are assigned by (in-degree, out-degree) signature then identifier, and
/// parallel edges in identifier order.
std::optional<GraphHom> graphs_isomorphic(const Graph& a, const Graph& b);

/// All automorphisms, in the enumeration order of graphs_isomorphic.
std::vector<GraphHom> graph_automorphisms(const Graph& g);

/// Number of order-automorphisms of the J-class poset. The graph must be
/// simple and acyclic; throws NotSimpleAcyclicError otherwise.
std::size_t jposet_order_automorphisms(const Graph& g);

}  // namespace gis

#endif  // GIS_MORPHISMS_HPP_
