#include "gis/green.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace gis {

GreenRelation parse_green_relation(std::string_view name) {
  if (name.size() == 1) {
    switch (name[0]) {
      case 'L':
      case 'l':
        return GreenRelation::l;
      case 'R':
      case 'r':
        return GreenRelation::r;
      case 'J':
      case 'j':
        return GreenRelation::j;
      case 'H':
      case 'h':
        return GreenRelation::h;
      case 'D':
      case 'd':
        return GreenRelation::d;
      default:
        break;
    }
  }
  throw ParseError("unknown Green's relation: " + std::string(name) +
                   " (expected one of L R J H D)");
}

bool leq_l(const Graph& g, const Element& a, const Element& b) {
  validate_element(g, a);
  validate_element(g, b);
  if (a.is_zero()) {
    return true;
  }
  if (b.is_zero()) {
    return false;
  }
  return is_prefix(b.right(), a.right());
}

bool leq_r(const Graph& g, const Element& a, const Element& b) {
  validate_element(g, a);
  validate_element(g, b);
  if (a.is_zero()) {
    return true;
  }
  if (b.is_zero()) {
    return false;
  }
  return is_prefix(b.left(), a.left());
}

bool leq_j(const Graph& g, const Element& a, const Element& b) {
  validate_element(g, a);
  validate_element(g, b);
  if (a.is_zero()) {
    return true;
  }
  if (b.is_zero()) {
    return false;
  }
  return reachable(g, path_range(g, b.left()), path_range(g, a.left()));
}

bool related(const Graph& g, GreenRelation rel, const Element& a, const Element& b) {
  validate_element(g, a);
  validate_element(g, b);
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() == b.is_zero();
  }
  switch (rel) {
    case GreenRelation::l:
      return a.right() == b.right();
    case GreenRelation::r:
      return a.left() == b.left();
    case GreenRelation::j: {
      auto parts = scc(g);
      return parts.component_of[path_range(g, a.left())] ==
             parts.component_of[path_range(g, b.left())];
    }
    case GreenRelation::h:
      return a == b;
    case GreenRelation::d:
      return path_range(g, a.left()) == path_range(g, b.left());
  }
  return false;
}

Poset make_poset(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] == labels[i]) {
      throw Error("duplicate poset element: " + labels[i]);
    }
  }
  const std::size_t n = labels.size();
  auto index_of = [&](const std::string& name) {
    auto it = std::lower_bound(labels.begin(), labels.end(), name);
    if (it == labels.end() || *it != name) {
      throw LookupError("unknown poset element: " + name);
    }
    return static_cast<std::size_t>(it - labels.begin());
  };

  Poset p;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    p.leq[i][i] = true;
  }
  for (const auto& [lower, upper] : leq_pairs) {
    p.leq[index_of(lower)][index_of(upper)] = true;
  }
  // Transitive closure, then the antisymmetry check.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq[i][k]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (p.leq[k][j]) {
          p.leq[i][j] = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.leq[i][j] && p.leq[j][i]) {
        throw NotPartialOrderError("relation is not antisymmetric: " + labels[i] + " and " +
                                   labels[j] + " are equivalent");
      }
    }
  }
  p.labels = std::move(labels);
  return p;
}

Poset parse_poset(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head.front() == '#') {
      continue;
    }
    if (head == "element") {
      std::string name;
      std::string rest;
      if (!(ls >> name) || (ls >> rest)) {
        throw ParseError("line " + std::to_string(lineno) + ": expected: element NAME");
      }
      if (!valid_identifier(name)) {
        throw ParseError("line " + std::to_string(lineno) + ": invalid name: " + name);
      }
      labels.push_back(name);
    } else if (head == "leq") {
      std::string lower;
      std::string upper;
      std::string rest;
      if (!(ls >> lower >> upper) || (ls >> rest)) {
        throw ParseError("line " + std::to_string(lineno) + ": expected: leq NAME NAME");
      }
      pairs.emplace_back(lower, upper);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'element' or 'leq'");
    }
  }
  return make_poset(std::move(labels), pairs);
}

std::string poset_to_text(const Poset& p) {
  std::string out;
  for (const auto& label : p.labels) {
    out += "element " + label + "\n";
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i != j && p.leq[i][j]) {
        out += "leq " + p.labels[i] + " " + p.labels[j] + "\n";
      }
    }
  }
  return out;
}

void validate_poset(const Poset& p) {
  const std::size_t n = p.size();
  if (p.leq.size() != n) {
    throw NotPartialOrderError("relation size does not match the carrier");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.leq[i].size() != n || !p.leq[i][i]) {
      throw NotPartialOrderError("relation is not reflexive");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq[i][j] && p.leq[j][i]) {
        throw NotPartialOrderError("relation is not antisymmetric");
      }
      if (!p.leq[i][j]) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (p.leq[j][k] && !p.leq[i][k]) {
          throw NotPartialOrderError("relation is not transitive");
        }
      }
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = p.size();
  for (std::size_t lower = 0; lower < n; ++lower) {
    for (std::size_t upper = 0; upper < n; ++upper) {
      if (lower == upper || !p.leq[lower][upper]) {
        continue;
      }
      bool covering = true;
      for (std::size_t mid = 0; mid < n && covering; ++mid) {
        if (mid != lower && mid != upper && p.leq[lower][mid] && p.leq[mid][upper]) {
          covering = false;
        }
      }
      if (covering) {
        out.emplace_back(lower, upper);
      }
    }
  }
  return out;
}

Poset j_poset(const Graph& g) {
  SccPartition parts = scc(g);
  const std::size_t n = parts.components.size();
  Poset p;
  p.labels.reserve(n);
  for (const auto& component : parts.components) {
    p.labels.push_back(g.vertex_name(component.front()));
  }
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Component i sits below component j when a path runs from j into i.
      p.leq[i][j] = reachable(g, parts.components[j].front(), parts.components[i].front());
    }
  }
  return p;
}

Graph realize_poset(const Poset& p) {
  validate_poset(p);
  std::vector<Graph::EdgeDecl> edges;
  auto pairs = covering_pairs(p);
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return std::make_pair(p.labels[a.second], p.labels[a.first]) <
           std::make_pair(p.labels[b.second], p.labels[b.first]);
  });
  std::size_t k = 0;
  for (const auto& [lower, upper] : pairs) {
    edges.push_back({"c" + std::to_string(k++), p.labels[upper], p.labels[lower]});
  }
  Graph g(p.labels, std::move(edges));
  if (!poset_isomorphism(j_poset(g), p)) {
    throw Error("poset realization failed its self-check");
  }
  return g;
}

namespace {

// Rank signature: (size of down-set, size of up-set); order-isomorphisms
// preserve both.
std::vector<std::pair<std::size_t, std::size_t>> rank_signature(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> sig(n, {0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq[j][i]) {
        ++sig[i].first;
      }
      if (p.leq[i][j]) {
        ++sig[i].second;
      }
    }
  }
  return sig;
}

// Enumerates order-isomorphisms a -> b in lexicographic order of the image
// vector; stops early when visit returns true.
bool for_each_order_isomorphism(const Poset& a, const Poset& b,
                                const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (a.size() != b.size()) {
    return false;
  }
  const std::size_t n = a.size();
  auto siga = rank_signature(a);
  auto sigb = rank_signature(b);
  std::vector<std::size_t> map(n, npos);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) {
      return visit(map);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sigb[j] != siga[i]) {
        continue;
      }
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = (a.leq[k][i] == static_cast<bool>(b.leq[map[k]][j])) &&
             (a.leq[i][k] == static_cast<bool>(b.leq[j][map[k]]));
      }
      if (!ok) {
        continue;
      }
      map[i] = j;
      used[j] = true;
      if (assign(i + 1)) {
        return true;
      }
      map[i] = npos;
      used[j] = false;
    }
    return false;
  };
  return assign(0);
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& a, const Poset& b) {
  std::optional<std::vector<std::size_t>> found;
  for_each_order_isomorphism(a, b, [&](const std::vector<std::size_t>& map) {
    found = map;
    return true;
  });
  return found;
}

std::size_t count_poset_automorphisms(const Poset& p) {
  std::size_t count = 0;
  for_each_order_isomorphism(p, p, [&](const std::vector<std::size_t>&) {
    ++count;
    return false;
  });
  return count;
}

}  // namespace gis
