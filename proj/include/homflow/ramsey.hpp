#pragma once

#include <optional>
#include <vector>

#include "homflow/classes.hpp"
#include "homflow/embedding.hpp"

namespace homflow {

// C -> (B)^A_k.  Degenerate cases: the arrow is false when B does not embed
// into C; with no copies of A at all it is true exactly when B embeds.
struct ArrowInstance {
  FinStructure c, b, a;
  int k = 2;
};

// A k-coloring of the copies of A in C, listed as sorted image sets.
struct ColoringWitness {
  std::vector<Tuple> copies;
  std::vector<int> colors;  // parallel to copies, values in 0..k-1
};

struct ArrowResult {
  bool holds = false;
  std::optional<ColoringWitness> bad;
};

// exhaustive = true forces plain enumeration of all k^m colorings instead of
// the pruned backtracking search; both must agree.
ArrowResult arrows(const ArrowInstance& inst, bool exhaustive = false);
std::optional<ColoringWitness> find_bad_coloring(const ArrowInstance& inst,
                                                 bool exhaustive = false);

// Independent re-check of a claimed bad coloring: total on the copies of A
// in C and no copy of B is monochromatic.
bool verify_bad_coloring(const ArrowInstance& inst, const ColoringWitness& w);

// Smallest member C of K with C -> (B)^A_k and |C| <= size_bound.
std::optional<FinStructure> find_ramsey_witness(const FinStructure& a, const FinStructure& b,
                                                int k, const ClassSpec& kls, int size_bound);

// Smallest D in the unordered reduct such that every admissible order on B
// embeds into every admissible order on D.
std::optional<FinStructure> check_ordering_property(const FinStructure& b,
                                                    const ClassSpec& k_ordered, int size_bound);

// Every automorphism mapping a subset F (|F| <= bound) onto itself fixes it
// pointwise.
bool check_order_rigidity(const FinStructure& a, int bound);

struct RamseyRow {
  FinStructure a, b;
  std::optional<int> witness_size;  // absent when the bounded search exhausted
};

struct RamseyClassReport {
  std::vector<RamseyRow> rows;
  bool all_witnessed = true;
};

RamseyClassReport check_ramsey_class(const ClassSpec& k_ordered, int inst_bound,
                                     int witness_bound);

}  // namespace homflow
