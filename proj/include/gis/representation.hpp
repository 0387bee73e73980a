#ifndef GIS_REPRESENTATION_HPP_
#define GIS_REPRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gis/graph.hpp"
#include "gis/semigroup.hpp"

namespace gis {

/// A partial function on the points 0..degree-1; npos marks "undefined".
struct PartialMap {
  std::size_t degree = 0;
  std::vector<std::size_t> image;  // size == degree

  static PartialMap empty(std::size_t degree);
  bool defined(std::size_t p) const { return image[p] != npos; }

  friend bool operator==(const PartialMap&, const PartialMap&) = default;
};

/// Left-to-right composition: p (f;g) = (p f) g.
PartialMap compose(const PartialMap& f, const PartialMap& g);

/// A representation of a finite G(E) by partial maps, one per element in
/// canonical order.
struct Representation {
  std::size_t degree = 0;
  std::vector<Element> elements;
  std::vector<PartialMap> maps;
};

/// True iff the idempotent path.path^{-1} is join-irreducible in the
/// idempotent semilattice, which happens exactly when the out-degree of the
/// path's range is at most 1.
bool is_join_irreducible(const Graph& g, const Path& path);

/// Minimum degree of a faithful representation by partial maps: for acyclic
/// g the number of paths whose range has out-degree at most 1; nullopt
/// (countably infinite) when g has a cycle.
std::optional<std::size_t> min_faithful_degree(const Graph& g);

/// Number of nonzero join-irreducible idempotents of a finite G(E); equals
/// min_faithful_degree.
std::size_t join_irreducible_count(const Graph& g);

/// The right-translation representation on the elements themselves: each a
/// acts by x -> x.a on the domain where x.a.a^{-1} = x. Degree |G(E)|,
/// faithful; the homomorphism law is re-checked before returning.
Representation vagner_preston(const Graph& g);

/// One line per element: "ELEMENT : p1->q1, p2->q2, ..." with points
/// indexed by the canonical element order.
std::string format_representation(const Graph& g, const Representation& rep);

}  // namespace gis

#endif  // GIS_REPRESENTATION_HPP_
