#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homflow {

struct Symbol {
  std::string name;
  int arity = 2;
  bool symmetric = true;
  bool operator==(const Symbol&) const = default;
};

// Relation symbols only; the partial-order and linear-order slots of a
// structure are not signature symbols.
struct Signature {
  std::vector<Symbol> symbols;

  int index_of(const std::string& name) const;
  bool operator==(const Signature&) const = default;

  static Signature graph();  // one symmetric binary symbol "edge"
  static Signature empty();
};

using Tuple = std::vector<int>;
using TupleSet = std::set<Tuple>;
using PairSet = std::set<std::pair<int, int>>;

PairSet transitive_closure(const PairSet& rel);
bool has_cycle(const PairSet& rel, int n);

// Finite relational structure over universe {0, ..., size-1}.
//
// Tuples of a symmetric symbol are stored sorted (one representative per
// orbit); has_tuple/add_tuple normalize, expand_symmetric lists the full
// orbit closure.
struct FinStructure {
  Signature sig;
  int size = 0;
  std::vector<TupleSet> relations;  // aligned with sig.symbols
  std::optional<PairSet> partial_order;         // irreflexive, transitive
  std::optional<std::vector<int>> linear_order; // all elements, increasing

  FinStructure() = default;
  FinStructure(Signature s, int n);

  void add_tuple(int symbol, Tuple t);
  bool has_tuple(int symbol, Tuple t) const;
  TupleSet expand_symmetric(int symbol) const;

  bool po_less(int a, int b) const;
  bool lin_less(int a, int b) const;
  std::vector<int> linear_positions() const;  // pos[elem] = rank in linear_order

  // Throws std::invalid_argument on any violated invariant.
  void validate() const;

  bool operator==(const FinStructure&) const = default;
  bool operator<(const FinStructure&) const;

  static FinStructure graph(int n, const std::vector<std::pair<int, int>>& edges);
  static FinStructure complete_graph(int n);
  static FinStructure path(int n);   // 0-1-2-...-(n-1)
  static FinStructure cycle(int n);
  static FinStructure poset(int n, const std::vector<std::pair<int, int>>& less);
  static FinStructure chain_poset(int n);
  static FinStructure antichain_poset(int n);
};

FinStructure with_linear_order(FinStructure a, std::vector<int> order);
FinStructure drop_linear_order(FinStructure a);

}  // namespace homflow
