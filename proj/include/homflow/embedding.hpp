#pragma once

#include <optional>
#include <vector>

#include "homflow/structure.hpp"

namespace homflow {

// Injective map between universes, certified by is_embedding to preserve and
// reflect every relation (and the order slots, when both sides carry them).
struct Embedding {
  FinStructure source;
  FinStructure target;
  std::vector<int> map;  // map[s] = image of source element s
};

bool is_embedding(const Embedding& e);

// All embedding maps b -> a, lexicographic on the map vector.
std::vector<std::vector<int>> enumerate_embedding_maps(const FinStructure& b,
                                                       const FinStructure& a);
std::vector<Embedding> enumerate_embeddings(const FinStructure& b, const FinStructure& a);
bool embeds(const FinStructure& b, const FinStructure& a);

// Distinct induced images of embeddings of `a` in `c`, as sorted subsets.
std::vector<std::vector<int>> enumerate_copies(const FinStructure& a, const FinStructure& c);

FinStructure induced_substructure(const FinStructure& a, const std::vector<int>& subset);

std::optional<Embedding> are_isomorphic(const FinStructure& a, const FinStructure& b);

// Full automorphism group (respecting every order slot the structure carries).
std::vector<std::vector<int>> automorphisms(const FinStructure& a);

struct Age {
  int bound = 0;
  std::vector<FinStructure> members;  // pairwise non-isomorphic representatives
};

Age age_up_to(const FinStructure& a, int m);

// Every isomorphism between induced substructures extends to an automorphism.
bool is_ultrahomogeneous(const FinStructure& a);

// All subsets of {0..n-1} with the given size, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

}  // namespace homflow
