// Acceptance battery: one pass/fail line per criterion, each with a pinned
// wall-clock limit.  Exit status is nonzero iff any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "homflow/amalgam.hpp"
#include "homflow/flows.hpp"
#include "homflow/limit.hpp"
#include "homflow/ramsey.hpp"

using namespace homflow;

namespace {

FinStructure ordered_complete(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return with_linear_order(FinStructure::complete_graph(n), order);
}

FinStructure canonical_order(FinStructure a) {
  std::vector<int> order(a.size);
  for (int i = 0; i < a.size; ++i) order[i] = i;
  return with_linear_order(std::move(a), std::move(order));
}

bool square_commutes(const AmalgamResult& r, const Embedding& i, const Embedding& j) {
  for (int x = 0; x < i.source.size; ++x)
    if (r.into_b.map[i.map[x]] != r.into_c.map[j.map[x]]) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool criterion1() {
  ArrowInstance k6{ordered_complete(6), ordered_complete(3), ordered_complete(2), 2};
  ArrowInstance k5{ordered_complete(5), ordered_complete(3), ordered_complete(2), 2};
  if (!arrows(k6).holds) return false;
  ArrowResult r5 = arrows(k5);
  if (r5.holds || !r5.bad || !verify_bad_coloring(k5, *r5.bad)) return false;
  if (!arrows(k6, true).holds) return false;  // 2^15 colorings
  if (arrows(k5, true).holds) return false;   // 2^10 colorings
  return true;
}

bool criterion2() {
  FinStructure point = FinStructure::graph(1, {});
  FinStructure edge = FinStructure::complete_graph(2);
  auto w = find_ramsey_witness(point, edge, 2, ClassSpec::graphs(), 5);
  if (!w || w->size != 3) return false;
  if (!are_isomorphic(*w, FinStructure::complete_graph(3))) return false;
  return arrows({*w, edge, point, 2}).holds;
}

bool criterion3() {
  auto k2 = check_ordering_property(FinStructure::complete_graph(2), ClassSpec::graphs(true), 4);
  if (!k2 || k2->size != 2) return false;
  auto ch = check_ordering_property(FinStructure::chain_poset(2), ClassSpec::posets(true), 4);
  if (!ch || ch->size != 2) return false;
  auto p3 = check_ordering_property(FinStructure::path(3), ClassSpec::graphs(true), 6);
  return p3.has_value();
}

bool criterion4() {
  Signature sig3;
  sig3.symbols.push_back({"r3", 3, true});
  FinStructure forb = FinStructure::complete_graph(3);
  std::vector<ClassSpec> kinds{ClassSpec::graphs(true), ClassSpec::kn_free(4, true),
                               ClassSpec::hypergraphs(sig3, true),
                               ClassSpec::a_free({forb}, true), ClassSpec::posets(true)};
  std::mt19937 rng(404);
  for (const ClassSpec& k : kinds) {
    auto pool = enumerate_members(k, 5);
    int done = 0;
    for (long trial = 0; done < 1000; ++trial) {
      if (trial > 200000) return false;
      const FinStructure& b = pool[rng() % pool.size()];
      const FinStructure& c = pool[rng() % pool.size()];
      const FinStructure& a = pool[rng() % pool.size()];
      auto is = enumerate_embeddings(a, b);
      auto js = enumerate_embeddings(a, c);
      if (is.empty() || js.empty()) continue;
      const Embedding& i = is[rng() % is.size()];
      const Embedding& j = js[rng() % js.size()];
      AmalgamResult r = amalgamate_ordered(a, b, c, i, j, k);
      if (r.amalgam.size != b.size + c.size - a.size) return false;
      if (!is_embedding(r.into_b) || !is_embedding(r.into_c)) return false;
      if (!square_commutes(r, i, j)) return false;
      if (!contains(k, r.amalgam)) return false;  // covers K4-freeness and A-freeness
      r.amalgam.validate();                       // order totality, poset acyclicity
      // The (-, .)-rule on every non-glued cross pair.
      auto posB = b.linear_positions(), posC = c.linear_positions();
      auto posD = r.amalgam.linear_positions();
      std::vector<bool> glued_b(b.size, false), glued_c(c.size, false);
      for (int x = 0; x < a.size; ++x) glued_b[i.map[x]] = glued_c[j.map[x]] = true;
      for (int u = 0; u < b.size; ++u) {
        if (glued_b[u]) continue;
        std::uint64_t cut_u = 0;
        for (int x = 0; x < a.size; ++x)
          if (posB[i.map[x]] < posB[u]) cut_u |= 1ull << x;
        for (int v = 0; v < c.size; ++v) {
          if (glued_c[v]) continue;
          std::uint64_t cut_v = 0;
          for (int x = 0; x < a.size; ++x)
            if (posC[j.map[x]] < posC[v]) cut_v |= 1ull << x;
          bool b_first = posD[r.into_b.map[u]] < posD[r.into_c.map[v]];
          if (b_first != ((cut_u & ~cut_v) == 0)) return false;
        }
      }
      ++done;
    }
  }
  return true;
}

bool lin_order_transitive(const FinStructure& a) {
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      for (int z = 0; z < a.size; ++z)
        if (a.lin_less(x, y) && a.lin_less(y, z) && !a.lin_less(x, z)) return false;
  return true;
}

bool criterion5() {
  std::mt19937 rng(505);
  std::vector<ClassSpec> classes{ClassSpec::graphs(true), ClassSpec::kn_free(4, true),
                                 ClassSpec::posets(true)};
  for (int trial = 0; trial < 20; ++trial) {
    const ClassSpec& k = classes[trial % classes.size()];
    auto pool = enumerate_members(k, 4);
    std::vector<FinStructure> seeds;
    for (const auto& s : pool)
      if (s.size >= 1) seeds.push_back(s);
    const FinStructure& seed = seeds[rng() % seeds.size()];
    int budget = 5 + static_cast<int>(rng() % 26);
    int n = 1 + static_cast<int>(trial % 2);
    ConstructionState st = init_state(seed, k, n);
    for (int step = 0; step < budget; ++step) {
      if (!construction_step(st)) break;
      // audit_state covers psi extension, order preservation, poset order
      // extension and class membership after every step.
      AuditReport rep = audit_state(st);
      if (!rep.ok) {
        for (const auto& issue : rep.issues) std::fprintf(stderr, "  audit: %s\n", issue.c_str());
        return false;
      }
      if (st.stages.back().linear_order && !lin_order_transitive(st.stages.back())) return false;
    }
    // psi accumulation: replaying half the steps yields a restriction.
    ConstructionState half = init_state(seed, k, n);
    for (int step = 0; step < st.steps_done / 2; ++step)
      if (!construction_step(half)) break;
    for (size_t ti = 0; ti < half.triples.size(); ++ti) {
      if (half.psi_of[ti].empty() || ti >= st.triples.size()) continue;
      if (!same_triple(half.triples[ti], st.triples[ti])) return false;
      if (st.psi_of[ti].empty()) continue;
      const auto& early = half.psi_of[ti];
      const auto& late = st.psi_of[ti];
      for (size_t x = 0; x < early.size(); ++x)
        if (early[x] >= 0 && (x >= late.size() || late[x] != early[x])) return false;
    }
  }
  return true;
}

int class_count_oracle(int m, const std::vector<int>& chi, int n) {
  auto node = [&](int z, int name) { return (z + n) * m + name; };
  int total = (2 * n + 1) * m;
  std::vector<int> label(total);
  for (int v = 0; v < total; ++v) label[v] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int z = -n; z < n; ++z)
      for (int y = 0; y < m; ++y)
        if (chi[y] >= 0) {
          int a = node(z + 1, y), b = node(z, chi[y]);
          int lo = std::min(label[a], label[b]);
          if (label[a] != lo || label[b] != lo) {
            label[a] = label[b] = lo;
            changed = true;
          }
        }
  }
  std::vector<int> uniq = label;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  return static_cast<int>(uniq.size());
}

bool criterion6() {
  std::mt19937 rng(606);
  for (int m = 1; m <= 5; ++m)
    for (int f = 0; f <= m; ++f)
      for (int n = 1; n <= 3; ++n) {
        std::vector<int> elems(m);
        for (int i = 0; i < m; ++i) elems[i] = i;
        std::shuffle(elems.begin(), elems.end(), rng);
        std::vector<int> chi(m, -1);
        std::vector<int> fs(elems.begin(), elems.begin() + f);
        std::vector<int> gs(elems.begin(), elems.begin() + f);
        std::shuffle(gs.begin(), gs.end(), rng);
        for (int i = 0; i < f; ++i) chi[fs[i]] = gs[i];
        int expected = (2 * n + 1) * m - 2 * n * f;
        if (class_count_oracle(m, chi, n) != expected) return false;
        std::sort(fs.begin(), fs.end());
        std::vector<int> phi(f);
        for (int i = 0; i < f; ++i) phi[i] = chi[fs[i]];
        FinStructure base = FinStructure::graph(m, {});
        Triple t = make_triple(base, fs, phi, 0);
        if (glue_case1(base, t, n, ClassSpec::graphs()).stage.size != expected) return false;
      }
  return true;
}

bool criterion7() {
  std::vector<FinStructure> homogeneous{
      FinStructure::complete_graph(3), FinStructure::complete_graph(2),
      FinStructure::antichain_poset(2), FinStructure::antichain_poset(3),
      FinStructure::chain_poset(3)};
  for (const auto& a : homogeneous) {
    TorderReport rep = check_torder_equivalence(a, a.size);
    if (!rep.forward_ok || !rep.agreement) return false;
  }
  for (const ClassSpec& k : {ClassSpec::graphs(), ClassSpec::posets()})
    for (const FinStructure& a : enumerate_members(k, 4)) {
      if (a.size == 0) continue;
      if (!check_torder_equivalence(a, a.size).forward_ok) return false;
    }
  return true;
}

bool criterion8() {
  ClassSpec kp = ClassSpec::posets(true);
  if (admissible_orders(FinStructure::antichain_poset(3), kp).size() != 6) return false;
  if (admissible_orders(FinStructure::chain_poset(3), kp).size() != 1) return false;
  FinStructure n_poset = FinStructure::poset(4, {{0, 2}, {1, 2}, {1, 3}});
  // Brute-force linear extension count.
  std::vector<int> perm{0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  int extensions = 0;
  do {
    std::vector<int> pos(4);
    for (int i = 0; i < 4; ++i) pos[perm[i]] = i;
    bool ok = true;
    for (auto [x, y] : *n_poset.partial_order) ok &= pos[x] < pos[y];
    extensions += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (extensions != 5) return false;
  if (admissible_orders(n_poset, kp).size() != 5) return false;
  if (!is_minimal(make_flow(FinStructure::antichain_poset(3), kp))) return false;
  FinStructure edge_plus_vertex = FinStructure::graph(3, {{0, 1}});
  return !is_minimal(make_flow(edge_plus_vertex, ClassSpec::graphs(true)));
}

bool criterion9() {
  return check_reasonable(ClassSpec::graphs(true), 3).ok &&
         check_reasonable(ClassSpec::posets(true), 3).ok;
}

bool criterion10() {
  std::mt19937 rng(1010);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    FinStructure a;
    if (trial % 2 == 0) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 2) edges.push_back({u, v});
      a = FinStructure::graph(n, edges);
    } else {
      PairSet rel;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 3 == 0) rel.insert({u, v});
      a = FinStructure::poset(n, {rel.begin(), rel.end()});
    }
    if (!check_order_rigidity(canonical_order(std::move(a)), n)) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    bool (*fn)();
    long limit_ms;
  };
  const Row rows[] = {
      {"1 ramsey arrow ground truth", criterion1, 10000},
      {"2 vertex-ramsey witness", criterion2, 5000},
      {"3 ordering property small cases", criterion3, 60000},
      {"4 amalgamation invariant suite", criterion4, 60000},
      {"5 construction invariant suite", criterion5, 120000},
      {"6 window cardinality formula", criterion6, 60000},
      {"7 torder agreement", criterion7, 60000},
      {"8 flow facts", criterion8, 10000},
      {"9 reasonability", criterion9, 30000},
      {"10 rigidity", criterion10, 30000},
  };
  int failures = 0;
  for (const Row& row : rows) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = row.fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  exception: %s\n", e.what());
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ms > row.limit_ms) ok = false;
    std::printf("criterion %s: %s (%ld ms, limit %ld ms)\n", row.name, ok ? "pass" : "fail", ms,
                row.limit_ms);
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
