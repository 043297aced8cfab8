#include "homflow/classes.hpp"

#include <numeric>
#include <stdexcept>

#include "homflow/amalgam.hpp"

namespace homflow {

namespace {

void check_signature(const ClassSpec& k, const FinStructure& a) {
  if (a.sig != k.sig) throw std::invalid_argument("structure signature does not match class");
}

bool irreducible(const FinStructure& h) {
  if (h.size < 2) return false;
  for (int x = 0; x < h.size; ++x)
    for (int y = x + 1; y < h.size; ++y) {
      bool covered = false;
      for (size_t s = 0; s < h.relations.size() && !covered; ++s)
        for (const Tuple& t : h.relations[s]) {
          bool hasx = false, hasy = false;
          for (int v : t) {
            hasx |= v == x;
            hasy |= v == y;
          }
          if (hasx && hasy) {
            covered = true;
            break;
          }
        }
      if (!covered) return false;
    }
  return true;
}

}  // namespace

ClassSpec ClassSpec::graphs(bool ordered) {
  return ClassSpec{ClassKind::Graph, 0, {}, ordered, Signature::graph()};
}

ClassSpec ClassSpec::kn_free(int n, bool ordered) {
  if (n < 3) throw std::invalid_argument("Kn-free needs n >= 3");
  return ClassSpec{ClassKind::KnFree, n, {}, ordered, Signature::graph()};
}

ClassSpec ClassSpec::hypergraphs(Signature sig, bool ordered) {
  for (const Symbol& s : sig.symbols)
    if (!s.symmetric) throw std::invalid_argument("hypergraph symbols must be symmetric");
  return ClassSpec{ClassKind::Hypergraph, 0, {}, ordered, std::move(sig)};
}

ClassSpec ClassSpec::a_free(std::vector<FinStructure> forbidden, bool ordered) {
  if (forbidden.empty()) throw std::invalid_argument("a-free class needs forbidden structures");
  Signature sig = forbidden.front().sig;
  for (const Symbol& s : sig.symbols)
    if (!s.symmetric) throw std::invalid_argument("hypergraph symbols must be symmetric");
  for (const FinStructure& f : forbidden) {
    f.validate();
    if (f.sig != sig) throw std::invalid_argument("forbidden structures disagree on signature");
    if (!irreducible(f)) throw std::invalid_argument("forbidden structure is not irreducible");
  }
  return ClassSpec{ClassKind::AFreeHypergraph, 0, std::move(forbidden), ordered, std::move(sig)};
}

ClassSpec ClassSpec::posets(bool ordered) {
  return ClassSpec{ClassKind::Poset, 0, {}, ordered, Signature::empty()};
}

ClassSpec ClassSpec::reduct() const {
  ClassSpec r = *this;
  r.ordered = false;
  return r;
}

std::string ClassSpec::name() const {
  std::string base;
  switch (kind) {
    case ClassKind::Graph: base = "graph"; break;
    case ClassKind::KnFree: base = "k" + std::to_string(n) + "-free"; break;
    case ClassKind::Hypergraph: base = "hypergraph"; break;
    case ClassKind::AFreeHypergraph: base = "a-free"; break;
    case ClassKind::Poset: base = "poset"; break;
  }
  return ordered ? base + " (ordered)" : base;
}

bool contains(const ClassSpec& k, const FinStructure& a) {
  check_signature(k, a);
  a.validate();
  if (k.ordered != a.linear_order.has_value()) return false;
  bool is_poset = k.kind == ClassKind::Poset;
  if (!is_poset && a.partial_order.has_value()) return false;
  switch (k.kind) {
    case ClassKind::Graph:
      return true;
    case ClassKind::KnFree: {
      FinStructure kn = FinStructure::complete_graph(k.n);
      return !embeds(kn, drop_linear_order(a));
    }
    case ClassKind::Hypergraph:
      return true;
    case ClassKind::AFreeHypergraph: {
      FinStructure red = drop_linear_order(a);
      for (const FinStructure& f : k.forbidden)
        if (embeds(f, red)) return false;
      return true;
    }
    case ClassKind::Poset:
      // validate() already guarantees a transitive irreflexive partial order
      // and, when ordered, that the linear order extends it.
      return true;
  }
  return false;
}

std::vector<std::vector<int>> admissible_orders(const FinStructure& a, const ClassSpec& k) {
  std::vector<int> perm(a.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (k.kind == ClassKind::Poset && a.partial_order) {
      std::vector<int> pos(a.size);
      for (int i = 0; i < a.size; ++i) pos[perm[i]] = i;
      bool ok = true;
      for (const auto& [x, y] : *a.partial_order)
        if (pos[x] >= pos[y]) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

std::vector<FinStructure> candidates_of_size(const ClassSpec& k, int m) {
  std::vector<FinStructure> out;
  const bool poset = k.kind == ClassKind::Poset;
  if (poset) {
    // Every poset is isomorphic to one whose order is a sub-relation of the
    // natural order on 0..m-1; for ordered posets that form is canonical.
    auto pairs = subsets_of_size(m, 2);
    int np = static_cast<int>(pairs.size());
    if (np > 20) throw std::invalid_argument("poset enumeration bound too large");
    for (unsigned long mask = 0; mask < (1ul << np); ++mask) {
      PairSet rel;
      for (int p = 0; p < np; ++p)
        if (mask >> p & 1) rel.insert({pairs[p][0], pairs[p][1]});
      if (rel != transitive_closure(rel)) continue;
      FinStructure a(Signature::empty(), m);
      a.partial_order = rel;
      out.push_back(std::move(a));
    }
    return out;
  }
  // Hypergraph-like kinds: independent subsets of possible tuples per symbol.
  std::vector<std::vector<Tuple>> slots;
  unsigned long total = 1;
  for (const Symbol& s : k.sig.symbols) {
    std::vector<Tuple> tuples = subsets_of_size(m, s.arity);
    if (tuples.size() > 22 || total > (1ul << 22))
      throw std::invalid_argument("member enumeration bound too large");
    total <<= tuples.size();
    slots.push_back(std::move(tuples));
  }
  std::vector<unsigned long> masks(slots.size(), 0);
  while (true) {
    FinStructure a(k.sig, m);
    for (size_t s = 0; s < slots.size(); ++s)
      for (size_t t = 0; t < slots[s].size(); ++t)
        if (masks[s] >> t & 1) a.add_tuple(static_cast<int>(s), slots[s][t]);
    out.push_back(std::move(a));
    size_t s = 0;
    while (s < slots.size()) {
      if (++masks[s] < (1ul << slots[s].size())) break;
      masks[s] = 0;
      ++s;
    }
    if (s == slots.size()) break;
  }
  return out;
}

}  // namespace

std::vector<FinStructure> enumerate_members(const ClassSpec& k, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  std::vector<FinStructure> out;
  for (int m = 0; m <= bound; ++m) {
    std::vector<FinStructure> kept;
    for (FinStructure& a : candidates_of_size(k, m)) {
      if (k.ordered) {
        std::vector<int> identity(m);
        std::iota(identity.begin(), identity.end(), 0);
        a.linear_order = identity;
        // For ordered posets only sub-relations of the natural order are
        // admissible; other candidates fail validate below.
        try {
          a.validate();
        } catch (const std::invalid_argument&) {
          continue;
        }
      }
      if (!contains(k, a)) continue;
      if (!k.ordered) {
        bool fresh = true;
        for (const FinStructure& rep : kept)
          if (are_isomorphic(rep, a)) {
            fresh = false;
            break;
          }
        if (!fresh) continue;
      }
      kept.push_back(std::move(a));
    }
    for (FinStructure& a : kept) out.push_back(std::move(a));
  }
  return out;
}

ClassView view_of(const ClassSpec& k) {
  return ClassView{[k](const FinStructure& a) { return contains(k, a); },
                   [k](int bound) { return enumerate_members(k, bound); }};
}

ClassCheckResult check_hereditary(const ClassView& v, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  for (const FinStructure& m : v.members_up_to(bound))
    for (int sz = 0; sz <= m.size; ++sz)
      for (const auto& s : subsets_of_size(m.size, sz)) {
        FinStructure sub = induced_substructure(m, s);
        if (!v.member(sub))
          return ClassCheckResult{false, "substructure escapes the class", {m, sub}};
      }
  return {};
}

ClassCheckResult check_hereditary(const ClassSpec& k, int bound) {
  return check_hereditary(view_of(k), bound);
}

ClassCheckResult check_jep(const ClassSpec& k, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  auto members = enumerate_members(k, bound);
  for (const FinStructure& a : members)
    for (const FinStructure& b : members) {
      AmalgamResult r = joint_embed(a, b, k);
      if (!contains(k, r.amalgam) || !is_embedding(r.into_b) || !is_embedding(r.into_c))
        return ClassCheckResult{false, "joint embed fails", {a, b, r.amalgam}};
    }
  return {};
}

ClassCheckResult check_amalgamation(const ClassSpec& k, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  auto members = enumerate_members(k, bound);
  for (const FinStructure& a : members)
    for (const FinStructure& b : members)
      for (const FinStructure& c : members)
        for (const Embedding& i : enumerate_embeddings(a, b))
          for (const Embedding& j : enumerate_embeddings(a, c)) {
            AmalgamResult r = k.ordered ? amalgamate_ordered(a, b, c, i, j, k)
                                        : amalgamate(a, b, c, i, j, k);
            bool commutes = true;
            for (int x = 0; x < a.size; ++x)
              commutes &= r.into_b.map[i.map[x]] == r.into_c.map[j.map[x]];
            if (!commutes || !contains(k, r.amalgam) || !is_embedding(r.into_b) ||
                !is_embedding(r.into_c))
              return ClassCheckResult{false, "amalgamation fails", {a, b, c, r.amalgam}};
          }
  return {};
}

ClassCheckResult check_reasonable(const ClassSpec& k_ordered, int bound) {
  if (!k_ordered.ordered) throw std::invalid_argument("check_reasonable needs an ordered class");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  ClassSpec red = k_ordered.reduct();
  auto members = enumerate_members(red, bound);
  for (const FinStructure& a : members)
    for (const FinStructure& b : members)
      for (const auto& e : enumerate_embedding_maps(a, b))
        for (const auto& oa : admissible_orders(a, k_ordered)) {
          std::vector<int> pa(a.size);
          for (int i = 0; i < a.size; ++i) pa[oa[i]] = i;
          bool found = false;
          for (const auto& ob : admissible_orders(b, k_ordered)) {
            std::vector<int> pb(b.size);
            for (int i = 0; i < b.size; ++i) pb[ob[i]] = i;
            bool preserves = true;
            for (int x = 0; x < a.size && preserves; ++x)
              for (int y = 0; y < a.size && preserves; ++y)
                if (x != y) preserves = (pa[x] < pa[y]) == (pb[e[x]] < pb[e[y]]);
            if (preserves) {
              found = true;
              break;
            }
          }
          if (!found)
            return ClassCheckResult{
                false, "no admissible extension of the order", {with_linear_order(a, oa), b}};
        }
  return {};
}

}  // namespace homflow
