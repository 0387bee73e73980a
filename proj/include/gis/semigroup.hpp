#ifndef GIS_SEMIGROUP_HPP_
#define GIS_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gis/graph.hpp"

namespace gis {

/// An element of the graph inverse semigroup G(E): either zero, or the
/// normal form of l . r^{-1} for two paths l, r with a common range. Every
/// nonzero element has exactly one such form, so structural equality is
/// semantic equality. Values are immutable.
class Element {
 public:
  Element() = default;  // zero

  static Element zero() { return Element(); }

  /// Normal-form pair; the caller guarantees range(left) == range(right).
  static Element of(Path left, Path right);

  /// The canonical embedding of a vertex: v . v^{-1}.
  static Element vertex(std::size_t v);

  /// The canonical embedding of an edge: e . range(e)^{-1}.
  static Element edge(const Graph& g, std::size_t e);

  bool is_zero() const { return zero_; }
  const Path& left() const { return left_; }
  const Path& right() const { return right_; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  bool zero_ = true;
  Path left_;
  Path right_;
};

/// Canonical element order: zero first, then by total length, left path,
/// right path.
bool element_less(const Element& a, const Element& b);

/// Elements in canonical order without duplicates.
using ElementSet = std::vector<Element>;

/// Throws InvalidElementError unless a is zero or both paths are valid in g
/// with a common range.
void validate_element(const Graph& g, const Element& a);

/// The product in G(E). For a = u.v^{-1} and b = x.y^{-1}: if v = x.t the
/// product is u.(y.t)^{-1}; if x = v.t it is (u.t).y^{-1}; otherwise zero.
Element multiply(const Graph& g, const Element& a, const Element& b);

/// The inverse: zero maps to zero, l.r^{-1} to r.l^{-1}.
Element invert(const Element& a);

/// True iff a is zero or both paths agree.
bool is_idempotent(const Element& a);

/// The natural partial order. Zero is below everything; u.v^{-1} lies below
/// x.y^{-1} iff u = x.t and v = y.t for one common tail t.
bool natural_leq(const Element& a, const Element& b);

/// Greatest lower bound of two idempotents, which is their product.
Element idempotent_meet(const Graph& g, const Element& a, const Element& b);

/// All of G(E) for acyclic g, canonically ordered. The size is
/// 1 + sum over vertices v of (number of paths ending at v)^2.
ElementSet enumerate_elements(const Graph& g);

/// |G(E)| for acyclic g; nullopt when g has a cycle (G(E) is infinite).
std::optional<std::size_t> element_count(const Graph& g);

/// The window of elements whose paths both have length <= max_len,
/// zero included. For acyclic g and large max_len this is all of G(E).
ElementSet bounded_elements(const Graph& g, std::size_t max_len);

/// Elements of pool with no strictly greater element in pool under the
/// natural partial order.
ElementSet maximal_idempotents(const Graph& g, const ElementSet& pool);

/// Element text grammar:
///
///   element := "0" | path | path "/" path
///   path    := name ("." name)*
///
/// "l/r" denotes l.r^{-1}; bare "l" denotes l.range(l)^{-1}. A single name
/// is a vertex or an edge, resolved by the graph's namespaces; a name in
/// both namespaces is rejected as ambiguous.
Element parse_element(const Graph& g, std::string_view text);

/// Renders an element in the grammar above; zero prints as "0".
std::string element_to_string(const Graph& g, const Element& a);

}  // namespace gis

#endif  // GIS_SEMIGROUP_HPP_
