#ifndef GIS_GREEN_HPP_
#define GIS_GREEN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gis/graph.hpp"
#include "gis/semigroup.hpp"

namespace gis {

enum class GreenRelation { l, r, j, h, d };

/// Parses one of "L", "R", "J", "H", "D" (case-insensitive).
GreenRelation parse_green_relation(std::string_view name);

/// Green's preorders on G(E), read off the normal forms: for a = u.v^{-1}
/// and b = x.y^{-1},
///   a <=_L b  iff  v = y.t for some path t,
///   a <=_R b  iff  u = x.t for some path t,
///   a <=_J b  iff  range(u) is reachable from range(x).
/// Zero is below everything; nothing nonzero is below zero.
bool leq_l(const Graph& g, const Element& a, const Element& b);
bool leq_r(const Graph& g, const Element& a, const Element& b);
bool leq_j(const Graph& g, const Element& a, const Element& b);

/// Green's equivalences: L compares right paths, R left paths, J the
/// strongly connected components of the ranges, H is equality and D
/// compares ranges. Zero is related only to zero.
bool related(const Graph& g, GreenRelation rel, const Element& a, const Element& b);

/// A finite partially ordered set over string labels. The label order fixes
/// the carrier order; leq[i][j] means labels[i] <= labels[j].
struct Poset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return labels.size(); }
};

/// Builds a poset from labels plus generating pairs (lower, upper). The
/// relation is closed reflexively and transitively; a closure that fails
/// antisymmetry raises NotPartialOrderError.
Poset make_poset(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& leq_pairs);

/// Poset file grammar: lines "element NAME" and "leq NAME NAME" (lower
/// first), plus blank lines and "#" comments.
Poset parse_poset(std::string_view text);

std::string poset_to_text(const Poset& p);

/// Validates reflexivity, antisymmetry and transitivity.
void validate_poset(const Poset& p);

/// Covering pairs (lower, upper): lower < upper with nothing in between.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Poset& p);

/// The poset of nonzero J-classes: one carrier element per strongly
/// connected component, labelled by its least vertex; U <= V iff some
/// vertex of U is reachable from some vertex of V.
Poset j_poset(const Graph& g);

/// A simple acyclic graph whose J-class poset is order-isomorphic to p: one
/// vertex per carrier element and one edge upper -> lower per covering
/// pair. The isomorphism is re-checked before returning.
Graph realize_poset(const Poset& p);

/// An order isomorphism a -> b found by backtracking over rank-compatible
/// candidates, or nullopt. Deterministic by label order.
std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& a, const Poset& b);

std::size_t count_poset_automorphisms(const Poset& p);

}  // namespace gis

#endif  // GIS_GREEN_HPP_
