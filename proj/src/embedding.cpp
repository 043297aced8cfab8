#include "homflow/embedding.hpp"

#include <stdexcept>

namespace homflow {

namespace {

// Tuple-membership counts per element, one pruning vector per symbol.
std::vector<std::vector<int>> tuple_degrees(const FinStructure& a) {
  std::vector<std::vector<int>> deg(a.sig.symbols.size(), std::vector<int>(a.size, 0));
  for (size_t s = 0; s < a.relations.size(); ++s)
    for (const Tuple& t : a.relations[s])
      for (int v : t) ++deg[s][v];
  return deg;
}

struct EmbedSearch {
  const FinStructure& b;
  const FinStructure& a;
  bool require_bijection;
  size_t limit;

  std::vector<int> map, inv;
  std::vector<std::vector<int>> degB, degA;
  bool use_po = false, use_lin = false;
  std::vector<int> posB, posA;
  std::vector<std::vector<int>> results;

  EmbedSearch(const FinStructure& b_, const FinStructure& a_, bool bij, size_t lim)
      : b(b_), a(a_), require_bijection(bij), limit(lim) {
    map.assign(b.size, -1);
    inv.assign(a.size, -1);
    degB = tuple_degrees(b);
    degA = tuple_degrees(a);
    use_po = b.partial_order.has_value() && a.partial_order.has_value();
    use_lin = b.linear_order.has_value() && a.linear_order.has_value();
    if (use_lin) {
      posB = b.linear_positions();
      posA = a.linear_positions();
    }
  }

  bool consistent(int u, int w) const {
    for (size_t s = 0; s < degB.size(); ++s)
      if (degB[s][u] > degA[s][w]) return false;
    for (int v = 0; v < b.size; ++v) {
      if (map[v] < 0 || v == u) continue;
      if (use_po) {
        if (b.po_less(u, v) != (a.partial_order->count({w, map[v]}) > 0)) return false;
        if (b.po_less(v, u) != (a.partial_order->count({map[v], w}) > 0)) return false;
      }
      if (use_lin && ((posB[u] < posB[v]) != (posA[w] < posA[map[v]]))) return false;
    }
    // Preserve: fully-assigned source tuples through u must land in a.
    for (size_t s = 0; s < b.relations.size(); ++s)
      for (const Tuple& t : b.relations[s]) {
        bool through = false, full = true;
        for (int v : t) {
          if (v == u)
            through = true;
          else if (map[v] < 0)
            full = false;
        }
        if (!through || !full) continue;
        Tuple img;
        img.reserve(t.size());
        for (int v : t) img.push_back(v == u ? w : map[v]);
        if (!a.has_tuple(static_cast<int>(s), img)) return false;
      }
    // Reflect: target tuples through w wholly inside the image must pull back.
    for (size_t s = 0; s < a.relations.size(); ++s)
      for (const Tuple& t : a.relations[s]) {
        bool through = false, full = true;
        for (int v : t) {
          if (v == w)
            through = true;
          else if (inv[v] < 0)
            full = false;
        }
        if (!through || !full) continue;
        Tuple pre;
        pre.reserve(t.size());
        for (int v : t) pre.push_back(v == w ? u : inv[v]);
        if (!b.has_tuple(static_cast<int>(s), pre)) return false;
      }
    return true;
  }

  bool run(int u) {
    if (u == b.size) {
      results.push_back(map);
      return results.size() >= limit;
    }
    for (int w = 0; w < a.size; ++w) {
      if (inv[w] >= 0) continue;
      if (!consistent(u, w)) continue;
      map[u] = w;
      inv[w] = u;
      bool done = run(u + 1);
      map[u] = -1;
      inv[w] = -1;
      if (done) return true;
    }
    return false;
  }
};

std::vector<std::vector<int>> search_maps(const FinStructure& b, const FinStructure& a,
                                          bool bijection, size_t limit) {
  if (b.sig != a.sig) throw std::invalid_argument("signature mismatch");
  if (bijection && b.size != a.size) return {};
  if (b.size > a.size) return {};
  EmbedSearch s(b, a, bijection, limit);
  s.run(0);
  return std::move(s.results);
}

}  // namespace

bool is_embedding(const Embedding& e) {
  if (e.source.sig != e.target.sig) throw std::invalid_argument("signature mismatch");
  if (static_cast<int>(e.map.size()) != e.source.size)
    throw std::invalid_argument("malformed embedding: map not total");
  std::vector<int> inv(e.target.size, -1);
  for (int u = 0; u < e.source.size; ++u) {
    int w = e.map[u];
    if (w < 0 || w >= e.target.size)
      throw std::invalid_argument("malformed embedding: image out of range");
    if (inv[w] >= 0) throw std::invalid_argument("malformed embedding: map not injective");
    inv[w] = u;
  }
  const FinStructure& b = e.source;
  const FinStructure& a = e.target;
  for (size_t s = 0; s < b.relations.size(); ++s) {
    for (const Tuple& t : b.relations[s]) {
      Tuple img;
      for (int v : t) img.push_back(e.map[v]);
      if (!a.has_tuple(static_cast<int>(s), img)) return false;
    }
    for (const Tuple& t : a.relations[s]) {
      bool inside = true;
      for (int v : t) inside &= inv[v] >= 0;
      if (!inside) continue;
      Tuple pre;
      for (int v : t) pre.push_back(inv[v]);
      if (!b.has_tuple(static_cast<int>(s), pre)) return false;
    }
  }
  if (b.partial_order && a.partial_order) {
    for (int u = 0; u < b.size; ++u)
      for (int v = 0; v < b.size; ++v) {
        if (u == v) continue;
        if (b.po_less(u, v) != (a.partial_order->count({e.map[u], e.map[v]}) > 0)) return false;
      }
  }
  if (b.linear_order && a.linear_order) {
    auto pb = b.linear_positions();
    auto pa = a.linear_positions();
    for (int u = 0; u < b.size; ++u)
      for (int v = 0; v < b.size; ++v)
        if (u != v && (pb[u] < pb[v]) != (pa[e.map[u]] < pa[e.map[v]])) return false;
  }
  return true;
}

std::vector<std::vector<int>> enumerate_embedding_maps(const FinStructure& b,
                                                       const FinStructure& a) {
  return search_maps(b, a, false, static_cast<size_t>(-1));
}

std::vector<Embedding> enumerate_embeddings(const FinStructure& b, const FinStructure& a) {
  std::vector<Embedding> out;
  for (auto& m : enumerate_embedding_maps(b, a)) out.push_back(Embedding{b, a, std::move(m)});
  return out;
}

bool embeds(const FinStructure& b, const FinStructure& a) {
  return !search_maps(b, a, false, 1).empty();
}

std::vector<std::vector<int>> enumerate_copies(const FinStructure& a, const FinStructure& c) {
  std::set<std::vector<int>> images;
  for (const auto& m : enumerate_embedding_maps(a, c)) {
    std::vector<int> img = m;
    std::sort(img.begin(), img.end());
    images.insert(std::move(img));
  }
  return {images.begin(), images.end()};
}

FinStructure induced_substructure(const FinStructure& a, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  std::vector<int> newIdx(a.size, -1);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= a.size) throw std::invalid_argument("subset out of range");
    if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("subset has duplicates");
    newIdx[s[i]] = static_cast<int>(i);
  }
  FinStructure out(a.sig, static_cast<int>(s.size()));
  for (size_t sym = 0; sym < a.relations.size(); ++sym)
    for (const Tuple& t : a.relations[sym]) {
      bool inside = true;
      for (int v : t) inside &= newIdx[v] >= 0;
      if (!inside) continue;
      Tuple mapped;
      for (int v : t) mapped.push_back(newIdx[v]);
      out.add_tuple(static_cast<int>(sym), mapped);
    }
  if (a.partial_order) {
    PairSet po;
    for (const auto& [x, y] : *a.partial_order)
      if (newIdx[x] >= 0 && newIdx[y] >= 0) po.insert({newIdx[x], newIdx[y]});
    out.partial_order = po;
  }
  if (a.linear_order) {
    std::vector<int> lo;
    for (int v : *a.linear_order)
      if (newIdx[v] >= 0) lo.push_back(newIdx[v]);
    out.linear_order = lo;
  }
  return out;
}

std::optional<Embedding> are_isomorphic(const FinStructure& a, const FinStructure& b) {
  if (a.sig != b.sig) throw std::invalid_argument("signature mismatch");
  if (a.size != b.size) return std::nullopt;
  if (a.partial_order.has_value() != b.partial_order.has_value()) return std::nullopt;
  if (a.linear_order.has_value() != b.linear_order.has_value()) return std::nullopt;
  for (size_t s = 0; s < a.relations.size(); ++s)
    if (a.relations[s].size() != b.relations[s].size()) return std::nullopt;
  auto maps = search_maps(a, b, true, 1);
  if (maps.empty()) return std::nullopt;
  return Embedding{a, b, maps.front()};
}

std::vector<std::vector<int>> automorphisms(const FinStructure& a) {
  return search_maps(a, a, true, static_cast<size_t>(-1));
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

Age age_up_to(const FinStructure& a, int m) {
  if (m < 1) throw std::invalid_argument("age bound must be >= 1");
  Age age;
  age.bound = m;
  for (int k = 1; k <= std::min(m, a.size); ++k)
    for (const auto& s : subsets_of_size(a.size, k)) {
      FinStructure sub = induced_substructure(a, s);
      bool fresh = true;
      for (const FinStructure& rep : age.members)
        if (rep.size == sub.size && are_isomorphic(rep, sub)) {
          fresh = false;
          break;
        }
      if (fresh) age.members.push_back(std::move(sub));
    }
  return age;
}

bool is_ultrahomogeneous(const FinStructure& a) {
  auto auts = automorphisms(a);
  for (int k = 1; k <= a.size; ++k) {
    auto subs = subsets_of_size(a.size, k);
    for (const auto& s : subs) {
      FinStructure sub_s = induced_substructure(a, s);
      for (const auto& t : subs) {
        FinStructure sub_t = induced_substructure(a, t);
        if (sub_s.sig != sub_t.sig) continue;
        for (const auto& phi : search_maps(sub_s, sub_t, true, static_cast<size_t>(-1))) {
          bool extended = false;
          for (const auto& g : auts) {
            bool ok = true;
            for (int i = 0; i < static_cast<int>(s.size()) && ok; ++i)
              ok = g[s[i]] == t[phi[i]];
            if (ok) {
              extended = true;
              break;
            }
          }
          if (!extended) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace homflow
