#include "gis/representation.hpp"

#include <algorithm>

namespace gis {

PartialMap PartialMap::empty(std::size_t degree) {
  PartialMap m;
  m.degree = degree;
  m.image.assign(degree, npos);
  return m;
}

PartialMap compose(const PartialMap& f, const PartialMap& g) {
  if (f.degree != g.degree) {
    throw Error("cannot compose partial maps of different degrees");
  }
  PartialMap out = PartialMap::empty(f.degree);
  for (std::size_t p = 0; p < f.degree; ++p) {
    if (f.defined(p) && g.defined(f.image[p])) {
      out.image[p] = g.image[f.image[p]];
    }
  }
  return out;
}

bool is_join_irreducible(const Graph& g, const Path& path) {
  if (!valid_path(g, path)) {
    throw InvalidElementError("not a path of the graph");
  }
  return g.out_degree(path_range(g, path)) <= 1;
}

std::optional<std::size_t> min_faithful_degree(const Graph& g) {
  if (!is_acyclic(g)) {
    return std::nullopt;
  }
  std::size_t count = 0;
  for (const Path& p : enumerate_paths(g)) {
    if (g.out_degree(path_range(g, p)) <= 1) {
      ++count;
    }
  }
  return count;
}

std::size_t join_irreducible_count(const Graph& g) {
  if (!is_acyclic(g)) {
    throw CyclicGraphError("join-irreducible idempotents are counted on finite G(E) only");
  }
  // Nonzero idempotents are exactly the x.x^{-1}, so counting paths with
  // small out-degree at the range counts them.
  return *min_faithful_degree(g);
}

Representation vagner_preston(const Graph& g) {
  Representation rep;
  rep.elements = enumerate_elements(g);
  rep.degree = rep.elements.size();
  const std::size_t n = rep.degree;

  auto index_of = [&](const Element& a) {
    auto it = std::lower_bound(rep.elements.begin(), rep.elements.end(), a, element_less);
    return static_cast<std::size_t>(it - rep.elements.begin());
  };

  rep.maps.reserve(n);
  for (const Element& a : rep.elements) {
    PartialMap m = PartialMap::empty(n);
    Element stabilizer = multiply(g, a, invert(a));
    for (std::size_t p = 0; p < n; ++p) {
      if (multiply(g, rep.elements[p], stabilizer) == rep.elements[p]) {
        m.image[p] = index_of(multiply(g, rep.elements[p], a));
      }
    }
    rep.maps.push_back(std::move(m));
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = index_of(multiply(g, rep.elements[a], rep.elements[b]));
      if (compose(rep.maps[a], rep.maps[b]) != rep.maps[ab]) {
        throw Error("right-translation representation failed the homomorphism check");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rep.maps[a] == rep.maps[b]) {
        throw Error("right-translation representation is not faithful");
      }
    }
  }
  return rep;
}

std::string format_representation(const Graph& g, const Representation& rep) {
  std::string out;
  for (std::size_t a = 0; a < rep.elements.size(); ++a) {
    out += element_to_string(g, rep.elements[a]) + " :";
    bool first = true;
    for (std::size_t p = 0; p < rep.degree; ++p) {
      if (!rep.maps[a].defined(p)) {
        continue;
      }
      out += first ? " " : ", ";
      out += std::to_string(p) + "->" + std::to_string(rep.maps[a].image[p]);
      first = false;
    }
    out += "\n";
  }
  return out;
}

}  // namespace gis
