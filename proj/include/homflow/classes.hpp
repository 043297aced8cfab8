#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homflow/embedding.hpp"
#include "homflow/structure.hpp"

namespace homflow {

enum class ClassKind { Graph, KnFree, Hypergraph, AFreeHypergraph, Poset };

// One of the shipped structure classes, with or without order expansion.
// For posets with ordered=true the admissible linear orders are exactly the
// linear extensions of the partial order; graph/hypergraph kinds admit all
// linear orders.
struct ClassSpec {
  ClassKind kind = ClassKind::Graph;
  int n = 0;                            // KnFree only
  std::vector<FinStructure> forbidden;  // AFreeHypergraph only; irreducible
  bool ordered = false;
  Signature sig;

  static ClassSpec graphs(bool ordered = false);
  static ClassSpec kn_free(int n, bool ordered = false);
  static ClassSpec hypergraphs(Signature sig, bool ordered = false);
  static ClassSpec a_free(std::vector<FinStructure> forbidden, bool ordered = false);
  static ClassSpec posets(bool ordered = false);

  ClassSpec reduct() const;  // same kind, ordered = false
  std::string name() const;
};

bool contains(const ClassSpec& k, const FinStructure& a);

// All admissible linear orders on a member of the unordered reduct.
std::vector<std::vector<int>> admissible_orders(const FinStructure& a, const ClassSpec& k);

// Deterministic exhaustive enumeration of members with size <= bound, one
// per isomorphism class.  Ordered classes are enumerated in the canonical
// form whose linear order is 0 < 1 < ... < n-1.
std::vector<FinStructure> enumerate_members(const ClassSpec& k, int bound);

struct ClassCheckResult {
  bool ok = true;
  std::string note;
  std::vector<FinStructure> witnesses;
};

// Generic view so tests can certify artificial classes as well.
struct ClassView {
  std::function<bool(const FinStructure&)> member;
  std::function<std::vector<FinStructure>(int)> members_up_to;
};

ClassView view_of(const ClassSpec& k);

ClassCheckResult check_hereditary(const ClassView& v, int bound);
ClassCheckResult check_hereditary(const ClassSpec& k, int bound);

ClassCheckResult check_jep(const ClassSpec& k, int bound);
ClassCheckResult check_amalgamation(const ClassSpec& k, int bound);
ClassCheckResult check_reasonable(const ClassSpec& k_ordered, int bound);

}  // namespace homflow
