#pragma once

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homflow/classes.hpp"
#include "homflow/embedding.hpp"

namespace homflow {

// A homogeneity defect: a pair of isomorphic finite substructures and the
// isomorphism to be extended to a partial automorphism of the stage.
struct Triple {
  std::vector<int> f, g;  // sorted universe indices
  std::vector<int> phi;   // phi[i] is the image of f[i]
  int stage_born = 0;
  bool order_preserving = false;
};

bool same_triple(const Triple& a, const Triple& b);  // literal identity

Triple make_triple(const FinStructure& stage, std::vector<int> f, std::vector<int> phi,
                   int stage_born);

// One gluing step.  The new stage is numbered canonically: the previous
// stage keeps its indices (its elements are the classes meeting copy 0),
// fresh classes follow sorted by (lowest z, name there).  members is the
// audit map from each index back to its (z, name) pairs.
struct GlueResult {
  FinStructure stage;
  std::vector<int> psi;  // partial map on the new stage, -1 where undefined
  std::vector<std::vector<std::pair<int, int>>> members;
};

// Z-chain gluing truncated to [-n, n], fresh triple: copies of the stage
// glued along G^z ~ F^(z+1) via phi.  Order by iterated ordered amalgamation
// (lower z first whenever possible) when phi preserves it.
GlueResult glue_case1(const FinStructure& a_mu, const Triple& t, int n, const ClassSpec& k);

// Revisit: copies glued along the accumulated partial automorphism psi_b
// (b_set is the universe of the earlier stages for this triple).  Relations
// hold iff all entries share a copy whose names are related in the stage;
// order by the explicit two-clause rule when psi_b preserves it.
GlueResult glue_case2(const FinStructure& a_mu, const Triple& t, const std::vector<int>& b_set,
                      const std::vector<int>& psi_b, int n, const ClassSpec& k);

// The explicit order: same-copy pairs as their names, cross pairs by strict
// inclusion of the cuts (-, x) = {b in b_set : b before the class name},
// ties broken by lower copy first.
std::vector<int> extend_order_case2(const FinStructure& window,
                                    const std::vector<std::vector<std::pair<int, int>>>& members,
                                    const FinStructure& a_mu, const std::vector<int>& b_set);

struct ConstructionState {
  ClassSpec cls;
  int window = 1;
  int max_stage_size = 48;
  int harvest_size = 2;    // largest |F| harvested into the schedule
  int harvest_cap = 6;     // new triples enqueued per step
  int scan_budget = 2000;  // (F, G) pairs examined per harvest pass
  std::vector<FinStructure> stages;
  std::vector<Triple> triples;
  std::vector<std::vector<int>> psi_of;  // empty while unprocessed
  std::vector<int> b_bound;              // stage size after last processing
  std::deque<int> schedule;              // FIFO dovetailing of triple indices
  long scan_cursor = 0;
  bool exhausted = false;  // next step would break max_stage_size
  int steps_done = 0;
};

ConstructionState init_state(const FinStructure& seed, const ClassSpec& k, int n);

// Pops the next scheduled triple and appends a stage; false when the
// schedule is empty or the size cap would be exceeded (exhausted flag).
bool construction_step(ConstructionState& state);

ConstructionState run(const FinStructure& seed, const ClassSpec& k, int budget, int n);

struct AuditReport {
  bool ok = true;
  std::vector<std::string> issues;
};

// Stage-chain invariants: prefix monotonicity, every psi a partial
// automorphism extending its phi (order-preserving when flagged), orders
// extend previous orders and the partial order, every stage in the class.
AuditReport audit_state(const ConstructionState& state);

struct EpReport {
  int pass = 0;
  int fail = 0;
  std::vector<std::pair<FinStructure, FinStructure>> failures;  // (B, C) samples
};

// For B <= C in age(A) and embeddings i: B -> A, j: B -> C, is there
// k: C -> A with i = k o j.
EpReport check_extension_property(const FinStructure& a, const ClassSpec& k, int sub_bound);

}  // namespace homflow
