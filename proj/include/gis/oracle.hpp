#ifndef GIS_ORACLE_HPP_
#define GIS_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gis/graph.hpp"
#include "gis/semigroup.hpp"

namespace gis::oracle {

/// A finite semigroup as an explicit multiplication table over a canonical
/// element list. Associativity is verified on construction.
struct MulTable {
  std::vector<Element> elements;
  std::vector<std::vector<std::size_t>> product;

  std::size_t size() const { return elements.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return product[a][b]; }
  std::size_t index_of(const Element& a) const;
  std::optional<std::size_t> zero_index() const;
};

/// Checks i*(j*k) == (i*j)*k over the whole table.
void verify_associative(const MulTable& t);

/// The full table of a finite G(E). Throws CyclicGraphError on cyclic input.
MulTable build_table(const Graph& g);

/// A generator symbol of G(E): a vertex, an edge, or a formal edge inverse.
struct Generator {
  enum class Kind { vertex, edge, edge_inverse };
  Kind kind;
  std::size_t index;

  static Generator vertex(std::size_t v) { return {Kind::vertex, v}; }
  static Generator edge(std::size_t e) { return {Kind::edge, e}; }
  static Generator edge_inverse(std::size_t e) { return {Kind::edge_inverse, e}; }
};

/// Normal form of a generator word, computed by exhaustive rewriting with
/// the defining relations of G(E) (vertex products, source/range absorption
/// and inverse cancellation). Independent of Element multiplication.
Element reduce_word(const Graph& g, const std::vector<Generator>& word);

/// A partition of table indices. Blocks are sorted, block ids are numbered
/// by least member, and block_of[i] names the block of index i.
struct Partition {
  std::vector<std::size_t> block_of;
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition make_partition(const std::vector<std::size_t>& raw_class_of);

/// Least congruence containing the given pairs: union-find saturation that
/// re-queues (c*a, c*b) and (a*c, b*c) whenever a and b are merged.
Partition congruence_closure(const MulTable& t,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

bool is_congruence(const MulTable& t, const Partition& p);

/// All congruences of t: the join closure of the principal congruences plus
/// the diagonal. Throws BoundExceededError if t has more than `bound`
/// elements. Deterministic order: coarser partitions last.
std::vector<Partition> enumerate_congruences(const MulTable& t, std::size_t bound = 12);

/// True iff p has at most one non-singleton block, and that block is a
/// two-sided ideal containing the zero element.
bool is_rees_partition(const MulTable& t, const Partition& p);

/// Principal ideals read off the table.
std::vector<std::size_t> left_ideal(const MulTable& t, std::size_t a);
std::vector<std::size_t> right_ideal(const MulTable& t, std::size_t a);
std::vector<std::size_t> two_sided_ideal(const MulTable& t, std::size_t a);

/// A multiplicative bijection between two tables found by backtracking,
/// pruned by idempotency and principal-ideal-size signatures; nullopt when
/// none exists. Deterministic.
std::optional<std::vector<std::size_t>> tables_isomorphic(const MulTable& t1, const MulTable& t2);

}  // namespace gis::oracle

#endif  // GIS_ORACLE_HPP_
