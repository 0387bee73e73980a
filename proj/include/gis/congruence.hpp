#ifndef GIS_CONGRUENCE_HPP_
#define GIS_CONGRUENCE_HPP_

#include <cstddef>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gis/graph.hpp"
#include "gis/oracle.hpp"
#include "gis/semigroup.hpp"

namespace gis {

/// An ideal of G(E), determined by a reachability-closed vertex set. The
/// corresponding semigroup ideal is {0} plus every element whose left path
/// ends in the set.
struct Ideal {
  std::vector<std::size_t> vertices;  // sorted, closed under reachability
};

/// Smallest reachability-closed superset of seed.
Ideal ideal_closure(const Graph& g, const std::vector<std::size_t>& seed);

bool ideal_contains(const Graph& g, const Ideal& ideal, const Element& a);

/// The graph of the Rees quotient G(E)/(I x I u diagonal): the ideal's
/// vertices and all incident edges removed.
Graph rees_quotient_graph(const Graph& g, const Ideal& ideal);

/// True iff every nontrivial path from source(e) to range(e) starts with e;
/// equivalently, no other edge at source(e) reaches range(e).
bool hypothesis_holds(const Graph& g, std::size_t edge);

/// True iff no edge satisfies hypothesis_holds, i.e. every edge has a
/// competing nontrivial path between its endpoints.
bool has_only_rees_congruences(const Graph& g);

/// True iff g is strongly connected and every vertex has out-degree at
/// least 2. Throws SizeGuardError when |G(E)| <= 2 (an empty or a
/// single-vertex edgeless graph), where the criterion does not apply.
bool is_congruence_free(const Graph& g);

/// The canonical non-Rees congruence datum: the least congruence relating
/// vertex = source(edge) to edge.edge^{-1}. Valid only when
/// hypothesis_holds(g, edge).
struct NonReesCanonical {
  std::size_t vertex;
  std::size_t edge;
};

NonReesCanonical nonrees_spec(const Graph& g, std::size_t edge);

/// The normal form of a under the congruence: both paths stripped of their
/// common trailing run of spec.edge.
Element nonrees_canon(const Graph& g, const NonReesCanonical& spec, const Element& a);

/// Membership in the canonical non-Rees congruence: equal normal forms, or
/// both elements inside the ideal generated by the ranges of the competing
/// edges at spec.vertex.
bool nonrees_member(const Graph& g, const NonReesCanonical& spec, const Element& a,
                    const Element& b);

/// The classes of the Rees congruence of an ideal on a finite G(E): the
/// ideal's elements (zero included) form one class, all else singletons.
std::vector<ElementSet> rees_congruence_classes(const Graph& g, const Ideal& ideal);

/// Multiplication table on class representatives. The partition must cover
/// G(E) exactly and be a congruence; otherwise NotACongruenceError names a
/// violating triple.
oracle::MulTable quotient_table(const Graph& g, const std::vector<ElementSet>& classes);

/// A congruence descriptor: a Rees congruence, a congruence generated by
/// element pairs, or the canonical non-Rees congruence of an edge.
struct ReesOf {
  Ideal ideal;
};
struct GeneratedBy {
  std::vector<std::pair<Element, Element>> pairs;
};
using CongruenceSpec = std::variant<ReesOf, GeneratedBy, NonReesCanonical>;

/// Pair file grammar: lines "pair ELEMENT ELEMENT" in the element grammar,
/// plus blank lines and "#" comments.
std::vector<std::pair<Element, Element>> parse_pair_file(const Graph& g, std::string_view text);

/// Resolves a descriptor to its classes on a finite G(E). Generated and
/// canonical descriptors go through the congruence closure of the full
/// multiplication table.
std::vector<ElementSet> congruence_classes(const Graph& g, const CongruenceSpec& spec);

}  // namespace gis

#endif  // GIS_CONGRUENCE_HPP_
