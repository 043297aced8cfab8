#include "homflow/structure.hpp"

#include <numeric>
#include <stdexcept>

namespace homflow {

int Signature::index_of(const std::string& name) const {
  for (size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i].name == name) return static_cast<int>(i);
  return -1;
}

Signature Signature::graph() { return Signature{{Symbol{"edge", 2, true}}}; }

Signature Signature::empty() { return Signature{}; }

PairSet transitive_closure(const PairSet& rel) {
  PairSet out = rel;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, int>> add;
    for (const auto& [a, b] : out)
      for (const auto& [c, d] : out)
        if (b == c && !out.count({a, d})) add.emplace_back(a, d);
    for (const auto& p : add) {
      out.insert(p);
      changed = true;
    }
  }
  return out;
}

bool has_cycle(const PairSet& rel, int /*n*/) {
  PairSet tc = transitive_closure(rel);
  for (const auto& [a, b] : tc)
    if (a == b) return true;
  return false;
}

FinStructure::FinStructure(Signature s, int n) : sig(std::move(s)), size(n) {
  relations.resize(sig.symbols.size());
}

void FinStructure::add_tuple(int symbol, Tuple t) {
  if (symbol < 0 || symbol >= static_cast<int>(sig.symbols.size()))
    throw std::invalid_argument("add_tuple: unknown symbol");
  const Symbol& sym = sig.symbols[symbol];
  if (static_cast<int>(t.size()) != sym.arity)
    throw std::invalid_argument("add_tuple: arity mismatch");
  for (int v : t)
    if (v < 0 || v >= size) throw std::invalid_argument("add_tuple: element out of range");
  if (sym.symmetric) {
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw std::invalid_argument("add_tuple: repeated entry in symmetric tuple");
  }
  relations[symbol].insert(std::move(t));
}

bool FinStructure::has_tuple(int symbol, Tuple t) const {
  if (sig.symbols[symbol].symmetric) std::sort(t.begin(), t.end());
  return relations[symbol].count(t) > 0;
}

TupleSet FinStructure::expand_symmetric(int symbol) const {
  if (!sig.symbols[symbol].symmetric) return relations[symbol];
  TupleSet out;
  for (Tuple t : relations[symbol]) {
    std::sort(t.begin(), t.end());
    do out.insert(t);
    while (std::next_permutation(t.begin(), t.end()));
  }
  return out;
}

bool FinStructure::po_less(int a, int b) const {
  return partial_order && partial_order->count({a, b}) > 0;
}

bool FinStructure::lin_less(int a, int b) const {
  if (!linear_order) return false;
  auto pos = linear_positions();
  return pos[a] < pos[b];
}

std::vector<int> FinStructure::linear_positions() const {
  std::vector<int> pos(size, -1);
  if (linear_order)
    for (size_t i = 0; i < linear_order->size(); ++i) pos[(*linear_order)[i]] = static_cast<int>(i);
  return pos;
}

void FinStructure::validate() const {
  if (size < 0) throw std::invalid_argument("negative universe");
  if (relations.size() != sig.symbols.size())
    throw std::invalid_argument("relations not aligned with signature");
  std::set<std::string> names;
  for (const Symbol& s : sig.symbols) {
    if (s.arity < 1) throw std::invalid_argument("symbol arity < 1");
    if (!names.insert(s.name).second) throw std::invalid_argument("duplicate symbol name");
    if (s.name == "<" || s.name == "prec")
      throw std::invalid_argument("order slots are not signature symbols");
  }
  for (size_t i = 0; i < relations.size(); ++i) {
    const Symbol& s = sig.symbols[i];
    for (const Tuple& t : relations[i]) {
      if (static_cast<int>(t.size()) != s.arity) throw std::invalid_argument("tuple arity mismatch");
      for (int v : t)
        if (v < 0 || v >= size) throw std::invalid_argument("tuple element out of range");
      if (s.symmetric) {
        if (!std::is_sorted(t.begin(), t.end()))
          throw std::invalid_argument("symmetric tuple not stored sorted");
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
          throw std::invalid_argument("symmetric tuple has repeated entries");
      }
    }
  }
  if (partial_order) {
    for (const auto& [a, b] : *partial_order) {
      if (a < 0 || a >= size || b < 0 || b >= size)
        throw std::invalid_argument("partial order pair out of range");
      if (a == b) throw std::invalid_argument("partial order not irreflexive");
    }
    if (*partial_order != transitive_closure(*partial_order))
      throw std::invalid_argument("partial order not transitive");
    for (const auto& [a, b] : *partial_order)
      if (partial_order->count({b, a})) throw std::invalid_argument("partial order has a cycle");
  }
  if (linear_order) {
    if (static_cast<int>(linear_order->size()) != size)
      throw std::invalid_argument("linear order must list every element");
    std::vector<int> sorted = *linear_order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < size; ++i)
      if (sorted[i] != i) throw std::invalid_argument("linear order is not a permutation");
    if (partial_order) {
      auto pos = linear_positions();
      for (const auto& [a, b] : *partial_order)
        if (pos[a] >= pos[b])
          throw std::invalid_argument("linear order does not extend the partial order");
    }
  }
}

bool FinStructure::operator<(const FinStructure& o) const {
  auto key = [](const FinStructure& s) {
    return std::tie(s.size, s.relations, s.partial_order, s.linear_order);
  };
  return key(*this) < key(o);
}

FinStructure FinStructure::graph(int n, const std::vector<std::pair<int, int>>& edges) {
  FinStructure a(Signature::graph(), n);
  for (auto [u, v] : edges) a.add_tuple(0, {u, v});
  return a;
}

FinStructure FinStructure::complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return graph(n, e);
}

FinStructure FinStructure::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph(n, e);
}

FinStructure FinStructure::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph(n, e);
}

FinStructure FinStructure::poset(int n, const std::vector<std::pair<int, int>>& less) {
  FinStructure a(Signature::empty(), n);
  PairSet rel(less.begin(), less.end());
  a.partial_order = transitive_closure(rel);
  a.validate();
  return a;
}

FinStructure FinStructure::chain_poset(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return poset(n, rel);
}

FinStructure FinStructure::antichain_poset(int n) { return poset(n, {}); }

FinStructure with_linear_order(FinStructure a, std::vector<int> order) {
  a.linear_order = std::move(order);
  a.validate();
  return a;
}

FinStructure drop_linear_order(FinStructure a) {
  a.linear_order.reset();
  return a;
}

}  // namespace homflow
