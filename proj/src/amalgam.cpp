#include "homflow/amalgam.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace homflow {

namespace {

Embedding identity_embedding(const FinStructure& s, const FinStructure& t,
                             std::vector<int> map) {
  return Embedding{s, t, std::move(map)};
}

// Kahn completion with a deterministic key, B-elements first.
std::vector<int> topo_complete(int n, const PairSet& edges,
                               const std::vector<std::pair<int, int>>& keys) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& [x, y] : edges) {
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::vector<int> out;
  std::vector<char> done(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && indeg[v] == 0 && (best < 0 || keys[v] < keys[best])) best = v;
    if (best < 0) throw std::runtime_error("inadmissible input orders: cyclic constraints");
    done[best] = 1;
    out.push_back(best);
    for (int w : succ[best]) --indeg[w];
  }
  return out;
}

}  // namespace

AmalgamResult joint_embed(const FinStructure& b, const FinStructure& c, const ClassSpec& k) {
  if (!contains(k, b) || !contains(k, c))
    throw std::invalid_argument("joint_embed: inputs must be members of the class");
  FinStructure d(b.sig, b.size + c.size);
  for (size_t s = 0; s < b.relations.size(); ++s) {
    for (const Tuple& t : b.relations[s]) d.add_tuple(static_cast<int>(s), t);
    for (Tuple t : c.relations[s]) {
      for (int& v : t) v += b.size;
      d.add_tuple(static_cast<int>(s), t);
    }
  }
  if (b.partial_order || c.partial_order) {
    PairSet po;
    if (b.partial_order) po = *b.partial_order;
    if (c.partial_order)
      for (const auto& [x, y] : *c.partial_order) po.insert({x + b.size, y + b.size});
    d.partial_order = po;
  }
  if (k.ordered) {
    std::vector<int> lo = *b.linear_order;
    for (int v : *c.linear_order) lo.push_back(v + b.size);
    d.linear_order = lo;
  }
  d.validate();
  std::vector<int> kb(b.size), lc(c.size);
  std::iota(kb.begin(), kb.end(), 0);
  std::iota(lc.begin(), lc.end(), b.size);
  return AmalgamResult{d, identity_embedding(b, d, kb), identity_embedding(c, d, lc)};
}

AmalgamResult amalgamate(const FinStructure& a, const FinStructure& b, const FinStructure& c,
                         const Embedding& i, const Embedding& j, const ClassSpec& k) {
  if (!(i.source == a) || !(i.target == b) || !(j.source == a) || !(j.target == c))
    throw std::invalid_argument("amalgamate: embeddings are not A->B and A->C");
  if (!is_embedding(i) || !is_embedding(j))
    throw std::invalid_argument("amalgamate: maps are not embeddings");

  std::vector<int> glued_of_c(c.size, -1);  // c index -> a index when glued
  for (int x = 0; x < a.size; ++x) glued_of_c[j.map[x]] = x;

  std::vector<int> lmap(c.size, -1);
  int next = b.size;
  for (int cc = 0; cc < c.size; ++cc)
    lmap[cc] = glued_of_c[cc] >= 0 ? i.map[glued_of_c[cc]] : next++;

  FinStructure d(b.sig, next);
  for (size_t s = 0; s < b.relations.size(); ++s) {
    for (const Tuple& t : b.relations[s]) d.add_tuple(static_cast<int>(s), t);
    for (Tuple t : c.relations[s]) {
      for (int& v : t) v = lmap[v];
      d.add_tuple(static_cast<int>(s), t);
    }
  }
  if (b.partial_order || c.partial_order) {
    PairSet po;
    if (b.partial_order) po = *b.partial_order;
    if (c.partial_order)
      for (const auto& [x, y] : *c.partial_order) po.insert({lmap[x], lmap[y]});
    po = transitive_closure(po);
    for (const auto& [x, y] : po)
      if (x == y) throw std::runtime_error("amalgamate: poset closure produced a cycle");
    d.partial_order = po;
  }
  d.validate();
  std::vector<int> kb(b.size);
  std::iota(kb.begin(), kb.end(), 0);
  return AmalgamResult{d, identity_embedding(drop_linear_order(b), d, kb),
                       identity_embedding(drop_linear_order(c), d, lmap)};
}

AmalgamResult amalgamate_ordered(const FinStructure& a, const FinStructure& b,
                                 const FinStructure& c, const Embedding& i, const Embedding& j,
                                 const ClassSpec& k) {
  if (!a.linear_order || !b.linear_order || !c.linear_order)
    throw std::invalid_argument("amalgamate_ordered: inputs must carry linear orders");
  if (a.size > 63) throw std::invalid_argument("amalgamate_ordered: common part too large");
  AmalgamResult base = amalgamate(a, b, c, i, j, k);
  FinStructure d = base.amalgam;
  const std::vector<int>& lmap = base.into_c.map;
  int nd = d.size;

  auto posB = b.linear_positions();
  auto posC = c.linear_positions();
  std::vector<int> c_of(nd, -1);
  for (int cc = 0; cc < c.size; ++cc) c_of[lmap[cc]] = cc;
  auto in_b = [&](int v) { return v < b.size; };

  // Cut of the common part below a non-glued element, as a bitmask over A.
  std::vector<std::uint64_t> cut(nd, 0);
  for (int v = 0; v < nd; ++v) {
    if (in_b(v) && c_of[v] < 0) {
      for (int x = 0; x < a.size; ++x)
        if (posB[i.map[x]] < posB[v]) cut[v] |= 1ull << x;
    } else if (!in_b(v)) {
      for (int x = 0; x < a.size; ++x)
        if (posC[j.map[x]] < posC[c_of[v]]) cut[v] |= 1ull << x;
    }
  }

  auto less = [&](int u, int v) {
    if (in_b(u) && in_b(v)) return posB[u] < posB[v];
    if (c_of[u] >= 0 && c_of[v] >= 0) return posC[c_of[u]] < posC[c_of[v]];
    if (in_b(u))  // u non-glued B, v non-glued C: the (-,.) rule
      return (cut[u] & ~cut[v]) == 0;
    return (cut[v] & ~cut[u]) != 0;  // u non-glued C, v non-glued B
  };

  std::vector<int> order(nd);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), less);

  std::vector<int> pos(nd);
  for (int t = 0; t < nd; ++t) pos[order[t]] = t;
  bool coherent = true;
  for (int u = 0; u < nd && coherent; ++u)
    for (int v = 0; v < nd && coherent; ++v)
      if (u != v) coherent = less(u, v) == (pos[u] < pos[v]);
  if (coherent && d.partial_order)
    for (const auto& [x, y] : *d.partial_order)
      if (pos[x] >= pos[y]) coherent = false;

  if (!coherent) {
    // Degenerate case: keep the forced comparisons and complete by a
    // deterministic topological sort preferring B-elements.
    PairSet edges;
    for (int u = 0; u < nd; ++u)
      for (int v = 0; v < nd; ++v) {
        if (u == v) continue;
        if (in_b(u) && in_b(v) && posB[u] < posB[v]) edges.insert({u, v});
        if (c_of[u] >= 0 && c_of[v] >= 0 && posC[c_of[u]] < posC[c_of[v]]) edges.insert({u, v});
        if (in_b(u) && c_of[u] < 0 && !in_b(v) && (cut[u] & ~cut[v]) == 0) edges.insert({u, v});
      }
    if (d.partial_order)
      for (const auto& [x, y] : *d.partial_order) edges.insert({x, y});
    std::vector<std::pair<int, int>> keys(nd);
    for (int v = 0; v < nd; ++v)
      keys[v] = in_b(v) ? std::make_pair(0, posB[v]) : std::make_pair(1, posC[c_of[v]]);
    order = topo_complete(nd, edges, keys);
  }

  d.linear_order = order;
  d.validate();
  FinStructure bb = b, cc = c;
  return AmalgamResult{d, Embedding{bb, d, base.into_b.map}, Embedding{cc, d, lmap}};
}

}  // namespace homflow
