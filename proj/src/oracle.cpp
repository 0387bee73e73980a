#include "gis/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

namespace gis::oracle {

std::size_t MulTable::index_of(const Element& a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a, element_less);
  if (it == elements.end() || !(*it == a)) {
    throw Error("element is not in the table");
  }
  return static_cast<std::size_t>(it - elements.begin());
}

std::optional<std::size_t> MulTable::zero_index() const {
  for (std::size_t z = 0; z < size(); ++z) {
    bool absorbing = true;
    for (std::size_t a = 0; a < size() && absorbing; ++a) {
      absorbing = mul(z, a) == z && mul(a, z) == z;
    }
    if (absorbing) {
      return z;
    }
  }
  return std::nullopt;
}

void verify_associative(const MulTable& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) {
          throw Error("multiplication table is not associative");
        }
      }
    }
  }
}

MulTable build_table(const Graph& g) {
  MulTable t;
  t.elements = enumerate_elements(g);
  const std::size_t n = t.elements.size();
  t.product.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.product[a][b] = t.index_of(multiply(g, t.elements[a], t.elements[b]));
    }
  }
  verify_associative(t);
  return t;
}

Element reduce_word(const Graph& g, const std::vector<Generator>& word) {
  if (word.empty()) {
    throw Error("empty word has no normal form");
  }
  for (const Generator& s : word) {
    if (s.kind == Generator::Kind::vertex) {
      if (s.index >= g.vertex_count()) {
        throw LookupError("unknown generator: vertex index out of range");
      }
    } else if (s.index >= g.edge_count()) {
      throw LookupError("unknown generator: edge index out of range");
    }
  }

  using Kind = Generator::Kind;
  std::vector<Generator> w = word;
  bool zero = false;

  // One rewriting pass: find the leftmost adjacent pair matching a defining
  // relation, contract it (or annihilate the word), repeat to fixpoint.
  while (!zero) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Generator a = w[i];
      const Generator b = w[i + 1];
      std::optional<Generator> replacement;
      bool kill = false;

      if (a.kind == Kind::vertex && b.kind == Kind::vertex) {
        if (a.index == b.index) {
          replacement = a;
        } else {
          kill = true;
        }
      } else if (a.kind == Kind::vertex && b.kind == Kind::edge) {
        if (g.source(b.index) == a.index) {
          replacement = b;
        } else {
          kill = true;
        }
      } else if (a.kind == Kind::edge && b.kind == Kind::vertex) {
        if (g.range(a.index) == b.index) {
          replacement = a;
        } else {
          kill = true;
        }
      } else if (a.kind == Kind::vertex && b.kind == Kind::edge_inverse) {
        if (g.range(b.index) == a.index) {
          replacement = b;
        } else {
          kill = true;
        }
      } else if (a.kind == Kind::edge_inverse && b.kind == Kind::vertex) {
        if (g.source(a.index) == b.index) {
          replacement = a;
        } else {
          kill = true;
        }
      } else if (a.kind == Kind::edge_inverse && b.kind == Kind::edge) {
        if (a.index == b.index) {
          replacement = Generator::vertex(g.range(a.index));
        } else {
          kill = true;
        }
      } else if (a.kind == Kind::edge && b.kind == Kind::edge) {
        if (g.range(a.index) != g.source(b.index)) {
          kill = true;
        }
      } else if (a.kind == Kind::edge_inverse && b.kind == Kind::edge_inverse) {
        // a^{-1} b^{-1} = (b a)^{-1}, which needs range(b) == source(a).
        if (g.range(b.index) != g.source(a.index)) {
          kill = true;
        }
      } else {  // edge followed by edge inverse: a normal-form junction
        if (g.range(a.index) != g.range(b.index)) {
          kill = true;
        }
      }

      if (kill) {
        zero = true;
        changed = true;
        break;
      }
      if (replacement) {
        w[i] = *replacement;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
    if (!changed) {
      break;
    }
  }

  if (zero) {
    return Element::zero();
  }
  if (w.size() == 1) {
    switch (w.front().kind) {
      case Kind::vertex:
        return Element::vertex(w.front().index);
      case Kind::edge:
        return Element::edge(g, w.front().index);
      case Kind::edge_inverse:
        return invert(Element::edge(g, w.front().index));
    }
  }

  // The fixpoint of a nonzero word is a run of edges followed by a run of
  // edge inverses.
  std::size_t split = 0;
  while (split < w.size() && w[split].kind == Kind::edge) {
    ++split;
  }
  for (std::size_t i = split; i < w.size(); ++i) {
    if (w[i].kind != Kind::edge_inverse) {
      throw Error("word reduction reached an unexpected shape");
    }
  }

  Path left;
  Path right;
  if (split > 0) {
    left.source = g.source(w.front().index);
    for (std::size_t i = 0; i < split; ++i) {
      left.edges.push_back(w[i].index);
    }
  }
  if (split < w.size()) {
    right.source = g.source(w.back().index);
    for (std::size_t i = w.size(); i > split; --i) {
      right.edges.push_back(w[i - 1].index);
    }
  }
  if (split == 0) {
    left = vertex_path(path_range(g, right));
  }
  if (split == w.size()) {
    right = vertex_path(path_range(g, left));
  }
  return Element::of(std::move(left), std::move(right));
}

Partition make_partition(const std::vector<std::size_t>& raw_class_of) {
  Partition p;
  p.block_of.assign(raw_class_of.size(), npos);
  std::vector<std::size_t> relabel;
  for (std::size_t i = 0; i < raw_class_of.size(); ++i) {
    std::size_t raw = raw_class_of[i];
    std::size_t id = npos;
    for (std::size_t k = 0; k < relabel.size(); ++k) {
      if (relabel[k] == raw) {
        id = k;
        break;
      }
    }
    if (id == npos) {
      id = relabel.size();
      relabel.push_back(raw);
      p.blocks.emplace_back();
    }
    p.block_of[i] = id;
    p.blocks[id].push_back(i);
  }
  return p;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) {
      parent[i] = i;
    }
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (a > b) {
      std::swap(a, b);
    }
    parent[b] = a;
    return true;
  }
};

std::vector<std::pair<std::size_t, std::size_t>> spanning_pairs(const Partition& p) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& block : p.blocks) {
    for (std::size_t k = 1; k < block.size(); ++k) {
      pairs.emplace_back(block[0], block[k]);
    }
  }
  return pairs;
}

}  // namespace

Partition congruence_closure(const MulTable& t,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = t.size();
  UnionFind uf(n);
  std::deque<std::pair<std::size_t, std::size_t>> queue(pairs.begin(), pairs.end());
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (a >= n || b >= n) {
      throw Error("congruence pair index out of range");
    }
    if (!uf.merge(a, b)) {
      continue;
    }
    for (std::size_t c = 0; c < n; ++c) {
      queue.emplace_back(t.mul(c, a), t.mul(c, b));
      queue.emplace_back(t.mul(a, c), t.mul(b, c));
    }
  }
  std::vector<std::size_t> class_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    class_of[i] = uf.find(i);
  }
  return make_partition(class_of);
}

bool is_congruence(const MulTable& t, const Partition& p) {
  const std::size_t n = t.size();
  for (const auto& block : p.blocks) {
    for (std::size_t k = 1; k < block.size(); ++k) {
      std::size_t a = block[0];
      std::size_t b = block[k];
      for (std::size_t c = 0; c < n; ++c) {
        if (p.block_of[t.mul(c, a)] != p.block_of[t.mul(c, b)] ||
            p.block_of[t.mul(a, c)] != p.block_of[t.mul(b, c)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Partition> enumerate_congruences(const MulTable& t, std::size_t bound) {
  const std::size_t n = t.size();
  if (n > bound) {
    throw BoundExceededError("table has " + std::to_string(n) +
                             " elements, enumeration bound is " + std::to_string(bound));
  }

  std::vector<Partition> principals;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      principals.push_back(congruence_closure(t, {{i, j}}));
    }
  }

  std::set<std::vector<std::size_t>> seen;
  std::vector<Partition> all;
  std::deque<Partition> queue;
  auto add = [&](Partition p) {
    if (seen.insert(p.block_of).second) {
      all.push_back(p);
      queue.push_back(std::move(p));
    }
  };

  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    identity[i] = i;
  }
  add(make_partition(identity));
  for (const Partition& p : principals) {
    add(p);
  }
  while (!queue.empty()) {
    Partition p = std::move(queue.front());
    queue.pop_front();
    for (const Partition& q : principals) {
      auto pairs = spanning_pairs(p);
      auto extra = spanning_pairs(q);
      pairs.insert(pairs.end(), extra.begin(), extra.end());
      add(congruence_closure(t, pairs));
    }
  }

  std::sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
    if (a.blocks.size() != b.blocks.size()) {
      return a.blocks.size() > b.blocks.size();
    }
    return a.block_of < b.block_of;
  });
  return all;
}

bool is_rees_partition(const MulTable& t, const Partition& p) {
  const std::vector<std::size_t>* big = nullptr;
  for (const auto& block : p.blocks) {
    if (block.size() > 1) {
      if (big != nullptr) {
        return false;
      }
      big = &block;
    }
  }
  if (big == nullptr) {
    return true;  // the diagonal, i.e. the Rees congruence of the zero ideal
  }
  auto zero = t.zero_index();
  if (!zero || !std::binary_search(big->begin(), big->end(), *zero)) {
    return false;
  }
  for (std::size_t a : *big) {
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (!std::binary_search(big->begin(), big->end(), t.mul(c, a)) ||
          !std::binary_search(big->begin(), big->end(), t.mul(a, c))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> left_ideal(const MulTable& t, std::size_t a) {
  std::vector<std::size_t> out{a};
  for (std::size_t s = 0; s < t.size(); ++s) {
    out.push_back(t.mul(s, a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> right_ideal(const MulTable& t, std::size_t a) {
  std::vector<std::size_t> out{a};
  for (std::size_t s = 0; s < t.size(); ++s) {
    out.push_back(t.mul(a, s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> two_sided_ideal(const MulTable& t, std::size_t a) {
  std::vector<std::size_t> out{a};
  for (std::size_t s = 0; s < t.size(); ++s) {
    out.push_back(t.mul(s, a));
    out.push_back(t.mul(a, s));
    for (std::size_t r = 0; r < t.size(); ++r) {
      out.push_back(t.mul(t.mul(s, a), r));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

using Signature = std::tuple<bool, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const MulTable& t) {
  std::vector<Signature> sigs;
  sigs.reserve(t.size());
  for (std::size_t a = 0; a < t.size(); ++a) {
    sigs.emplace_back(t.mul(a, a) == a, left_ideal(t, a).size(), right_ideal(t, a).size(),
                      two_sided_ideal(t, a).size());
  }
  return sigs;
}

bool full_check(const MulTable& t1, const MulTable& t2, const std::vector<std::size_t>& m) {
  for (std::size_t a = 0; a < t1.size(); ++a) {
    for (std::size_t b = 0; b < t1.size(); ++b) {
      if (m[t1.mul(a, b)] != t2.mul(m[a], m[b])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> tables_isomorphic(const MulTable& t1,
                                                          const MulTable& t2) {
  if (t1.size() != t2.size()) {
    return std::nullopt;
  }
  const std::size_t n = t1.size();
  auto sig1 = signatures(t1);
  auto sig2 = signatures(t2);
  {
    auto a = sig1;
    auto b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      return std::nullopt;
    }
  }

  std::vector<std::size_t> map(n, npos);
  std::vector<bool> used(n, false);

  // Assign images in index order; a candidate must respect every product
  // among already assigned elements, and products that are not yet assigned
  // must land on an unused image.
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) {
      return full_check(t1, t2, map);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sig2[j] != sig1[i]) {
        continue;
      }
      map[i] = j;
      used[j] = true;
      bool ok = true;
      for (std::size_t a = 0; a <= i && ok; ++a) {
        const std::size_t pairs[3][2] = {{a, i}, {i, a}, {i, i}};
        for (const auto& pr : pairs) {
          std::size_t p = t1.mul(pr[0], pr[1]);
          std::size_t q = t2.mul(map[pr[0]], map[pr[1]]);
          if (p <= i) {
            if (map[p] != q) {
              ok = false;
              break;
            }
          } else if (used[q]) {
            ok = false;
            break;
          }
        }
      }
      if (ok && assign(i + 1)) {
        return true;
      }
      map[i] = npos;
      used[j] = false;
    }
    return false;
  };

  if (assign(0)) {
    return map;
  }
  return std::nullopt;
}

}  // namespace gis::oracle
