#pragma once

#include "homflow/classes.hpp"
#include "homflow/embedding.hpp"

namespace homflow {

// D together with the commuting square k . i = l . j over the common part.
struct AmalgamResult {
  FinStructure amalgam;
  Embedding into_b;  // k : B -> D
  Embedding into_c;  // l : C -> D
};

// Disjoint union; when ordered, all B-elements precede all C-elements.
AmalgamResult joint_embed(const FinStructure& b, const FinStructure& c, const ClassSpec& k);

// Quotient of the disjoint union by i(a) ~ j(a); relations are the union of
// both sides (transitive closure for the poset slot).  Drops linear orders.
AmalgamResult amalgamate(const FinStructure& a, const FinStructure& b, const FinStructure& c,
                         const Embedding& i, const Embedding& j, const ClassSpec& k);

// As amalgamate, plus a total order extending <_B and <_C in which a
// non-glued b precedes a non-glued c exactly when (-,b) is contained in
// (-,c), computed against the common part A.
AmalgamResult amalgamate_ordered(const FinStructure& a, const FinStructure& b,
                                 const FinStructure& c, const Embedding& i, const Embedding& j,
                                 const ClassSpec& k);

}  // namespace homflow
