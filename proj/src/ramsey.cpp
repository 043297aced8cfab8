#include "homflow/ramsey.hpp"

#include <algorithm>
#include <stdexcept>

namespace homflow {

namespace {

// For each copy of B, the indices of the copies of A lying inside it.
std::vector<std::vector<int>> copies_within(const std::vector<Tuple>& a_copies,
                                            const std::vector<Tuple>& b_copies) {
  std::vector<std::vector<int>> inside(b_copies.size());
  for (size_t j = 0; j < b_copies.size(); ++j)
    for (size_t i = 0; i < a_copies.size(); ++i)
      if (std::includes(b_copies[j].begin(), b_copies[j].end(), a_copies[i].begin(),
                        a_copies[i].end()))
        inside[j].push_back(static_cast<int>(i));
  return inside;
}

bool is_bad(const std::vector<std::vector<int>>& inside, const std::vector<int>& colors) {
  for (const auto& grp : inside) {
    bool mono = true;
    for (size_t t = 1; t < grp.size(); ++t)
      if (colors[grp[t]] != colors[grp[0]]) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

std::optional<std::vector<int>> bad_coloring_exhaustive(
    int m, int k, const std::vector<std::vector<int>>& inside) {
  double total = 1;
  for (int i = 0; i < m; ++i) total *= k;
  if (total > (1 << 26)) throw std::invalid_argument("exhaustive coloring space too large");
  std::vector<int> colors(m, 0);
  while (true) {
    if (is_bad(inside, colors)) return colors;
    int i = 0;
    while (i < m && ++colors[i] == k) colors[i++] = 0;
    if (i == m) return std::nullopt;
  }
}

std::optional<std::vector<int>> bad_coloring_backtracking(
    int m, int k, const std::vector<std::vector<int>>& inside) {
  for (const auto& grp : inside)
    if (grp.empty()) return std::nullopt;  // a vacuously monochromatic B-copy

  std::vector<std::vector<int>> groups_of(m);
  for (size_t j = 0; j < inside.size(); ++j)
    for (int i : inside[j]) groups_of[i].push_back(static_cast<int>(j));

  int ng = static_cast<int>(inside.size());
  std::vector<int> rem(ng), first(ng, -1);
  std::vector<char> mixed(ng, 0);
  for (int j = 0; j < ng; ++j) rem[j] = static_cast<int>(inside[j].size());

  std::vector<int> colors(m, -1);
  auto rec = [&](auto&& self, int i, int used) -> bool {
    if (i == m) return true;
    int top = std::min(k - 1, used);  // colors up to first unused; permutation pruning
    for (int col = 0; col <= top; ++col) {
      colors[i] = col;
      bool ok = true;
      std::vector<int> set_first, set_mixed;
      for (int j : groups_of[i]) {
        --rem[j];
        if (first[j] < 0) {
          first[j] = col;
          set_first.push_back(j);
        } else if (first[j] != col && !mixed[j]) {
          mixed[j] = 1;
          set_mixed.push_back(j);
        }
        if (rem[j] == 0 && !mixed[j]) ok = false;
      }
      if (ok && self(self, i + 1, std::max(used, col + 1))) return true;
      for (int j : groups_of[i]) ++rem[j];
      for (int j : set_first) first[j] = -1;
      for (int j : set_mixed) mixed[j] = 0;
      colors[i] = -1;
    }
    return false;
  };
  if (rec(rec, 0, 0)) return colors;
  return std::nullopt;
}

}  // namespace

std::optional<ColoringWitness> find_bad_coloring(const ArrowInstance& inst, bool exhaustive) {
  if (inst.k < 1) throw std::invalid_argument("arrows needs k >= 1");
  auto a_copies = enumerate_copies(inst.a, inst.c);
  if (a_copies.empty()) return std::nullopt;
  auto b_copies = enumerate_copies(inst.b, inst.c);
  if (b_copies.empty())
    return ColoringWitness{a_copies, std::vector<int>(a_copies.size(), 0)};
  if (inst.k == 1) return std::nullopt;
  auto inside = copies_within(a_copies, b_copies);
  int m = static_cast<int>(a_copies.size());
  auto colors = exhaustive ? bad_coloring_exhaustive(m, inst.k, inside)
                           : bad_coloring_backtracking(m, inst.k, inside);
  if (!colors) return std::nullopt;
  return ColoringWitness{std::move(a_copies), std::move(*colors)};
}

ArrowResult arrows(const ArrowInstance& inst, bool exhaustive) {
  if (inst.k < 1) throw std::invalid_argument("arrows needs k >= 1");
  if (!embeds(inst.b, inst.c)) return ArrowResult{false, std::nullopt};
  auto bad = find_bad_coloring(inst, exhaustive);
  if (bad) return ArrowResult{false, std::move(bad)};
  return ArrowResult{true, std::nullopt};
}

bool verify_bad_coloring(const ArrowInstance& inst, const ColoringWitness& w) {
  auto a_copies = enumerate_copies(inst.a, inst.c);
  if (w.copies != a_copies || w.colors.size() != a_copies.size()) return false;
  for (int col : w.colors)
    if (col < 0 || col >= inst.k) return false;
  auto inside = copies_within(a_copies, enumerate_copies(inst.b, inst.c));
  return is_bad(inside, w.colors);
}

namespace {

std::vector<FinStructure> members_of_size(const ClassSpec& k, int m) {
  std::vector<FinStructure> out;
  for (FinStructure& s : enumerate_members(k, m))
    if (s.size == m) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::optional<FinStructure> find_ramsey_witness(const FinStructure& a, const FinStructure& b,
                                                int k, const ClassSpec& kls, int size_bound) {
  if (!contains(kls, a) || !contains(kls, b) || !embeds(a, b))
    throw std::invalid_argument("find_ramsey_witness: need A <= B, both in the class");
  for (int m = b.size; m <= size_bound; ++m)
    for (const FinStructure& c : members_of_size(kls, m))
      if (arrows(ArrowInstance{c, b, a, k}).holds) return c;
  return std::nullopt;
}

std::optional<FinStructure> check_ordering_property(const FinStructure& b,
                                                    const ClassSpec& k_ordered, int size_bound) {
  if (!k_ordered.ordered)
    throw std::invalid_argument("check_ordering_property needs an ordered class");
  ClassSpec red = k_ordered.reduct();
  if (!contains(red, b))
    throw std::invalid_argument("check_ordering_property: B must be in the unordered reduct");
  auto b_orders = admissible_orders(b, k_ordered);
  for (int m = b.size; m <= size_bound; ++m)
    for (const FinStructure& d : members_of_size(red, m)) {
      bool good = true;
      for (const auto& od : admissible_orders(d, k_ordered)) {
        FinStructure dd = with_linear_order(d, od);
        for (const auto& ob : b_orders)
          if (!embeds(with_linear_order(b, ob), dd)) {
            good = false;
            break;
          }
        if (!good) break;
      }
      if (good) return d;
    }
  return std::nullopt;
}

bool check_order_rigidity(const FinStructure& a, int bound) {
  if (bound > a.size) throw std::invalid_argument("check_order_rigidity: bound exceeds |A|");
  auto autos = automorphisms(a);
  for (int sz = 1; sz <= bound; ++sz)
    for (const auto& f : subsets_of_size(a.size, sz)) {
      std::vector<char> in_f(a.size, 0);
      for (int x : f) in_f[x] = 1;
      for (const auto& g : autos) {
        bool setwise = true;
        for (int x : f)
          if (!in_f[g[x]]) {
            setwise = false;
            break;
          }
        if (!setwise) continue;
        for (int x : f)
          if (g[x] != x) return false;
      }
    }
  return true;
}

RamseyClassReport check_ramsey_class(const ClassSpec& k_ordered, int inst_bound,
                                     int witness_bound) {
  if (inst_bound < 1 || witness_bound < 1)
    throw std::invalid_argument("check_ramsey_class: bounds must be >= 1");
  RamseyClassReport report;
  auto members = enumerate_members(k_ordered, inst_bound);
  for (const FinStructure& b : members) {
    if (b.size == 0) continue;
    for (const FinStructure& a : members) {
      if (a.size == 0 || a.size > b.size || !embeds(a, b)) continue;
      auto witness = find_ramsey_witness(a, b, 2, k_ordered, witness_bound);
      std::optional<int> wsize;
      if (witness) wsize = witness->size;
      report.all_witnessed &= witness.has_value();
      report.rows.push_back(RamseyRow{a, b, wsize});
    }
  }
  return report;
}

}  // namespace homflow
