#pragma once

#include <vector>

#include "homflow/classes.hpp"
#include "homflow/embedding.hpp"

namespace homflow {

// A linear order on the universe, listed in increasing order.  The space of
// all such points is the finite stand-in for LO(kappa); topology is discrete,
// so every closure below is a literal orbit.
using OrderPoint = std::vector<int>;

struct FiniteFlow {
  FinStructure base;
  std::vector<OrderPoint> points;          // admissible orders, sorted
  std::vector<std::vector<int>> group;     // full automorphism group of base
};

// points = admissible orders of base per the class; group from the core
// backtracking, capped at max_size elements in the base.
FiniteFlow make_flow(const FinStructure& base, const ClassSpec& k, int max_size = 8);

// alpha precedes beta in the image iff g^-1(alpha) precedes g^-1(beta).
OrderPoint act(const std::vector<int>& g, const OrderPoint& p);

std::vector<OrderPoint> orbit_closure(const FiniteFlow& flow, const OrderPoint& p);

// True iff every induced substructure of size <= m, taken with the candidate
// order, appears as an ordered substructure of (A, ref).
bool in_orbit_closure_age_criterion(const FinStructure& a, const OrderPoint& ref,
                                    const OrderPoint& candidate, int m);

struct TorderReport {
  bool homogeneous = false;
  int pairs = 0;
  bool forward_ok = true;   // orbit membership implies the age criterion
  bool agreement = true;    // both directions on every pair
  std::vector<std::pair<OrderPoint, OrderPoint>> converse_gaps;
};

// Compares the age criterion at bound m against literal orbit membership on
// every pair of admissible orders.  The converse direction is only a theorem
// for homogeneous structures, so gaps are listed, not judged.
TorderReport check_torder_equivalence(const FinStructure& a, int m);

bool is_minimal(const FiniteFlow& flow);

// Points fixed by every automorphism fixing p.
std::vector<OrderPoint> fixed_points_of_order_stabilizer(const FiniteFlow& flow,
                                                         const OrderPoint& p);

}  // namespace homflow
