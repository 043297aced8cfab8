#include "homflow/flows.hpp"

#include <algorithm>
#include <stdexcept>

namespace homflow {

FiniteFlow make_flow(const FinStructure& base, const ClassSpec& k, int max_size) {
  if (base.size > max_size) throw std::invalid_argument("make_flow: base too large");
  FiniteFlow flow;
  flow.base = base;
  flow.points = admissible_orders(base, k);
  std::sort(flow.points.begin(), flow.points.end());
  flow.group = automorphisms(base);
  return flow;
}

OrderPoint act(const std::vector<int>& g, const OrderPoint& p) {
  OrderPoint q(p.size());
  for (size_t t = 0; t < p.size(); ++t) q[t] = g[p[t]];
  return q;
}

std::vector<OrderPoint> orbit_closure(const FiniteFlow& flow, const OrderPoint& p) {
  if (!std::binary_search(flow.points.begin(), flow.points.end(), p))
    throw std::invalid_argument("orbit_closure: point is not admissible");
  std::vector<OrderPoint> orbit;
  for (const auto& g : flow.group) orbit.push_back(act(g, p));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

namespace {

FinStructure restrict_ordered(const FinStructure& a, const std::vector<int>& subset,
                              const OrderPoint& order) {
  FinStructure sub = induced_substructure(a, subset);
  std::vector<int> local_of(a.size, -1);
  for (size_t t = 0; t < subset.size(); ++t) local_of[subset[t]] = static_cast<int>(t);
  std::vector<int> lo;
  for (int v : order)
    if (local_of[v] >= 0) lo.push_back(local_of[v]);
  return with_linear_order(sub, lo);
}

}  // namespace

bool in_orbit_closure_age_criterion(const FinStructure& a, const OrderPoint& ref,
                                    const OrderPoint& candidate, int m) {
  if (m > a.size) throw std::invalid_argument("age criterion: m exceeds |A|");
  for (int sz = 1; sz <= m; ++sz) {
    auto subsets = subsets_of_size(a.size, sz);
    std::vector<FinStructure> ref_age;
    for (const auto& t : subsets) ref_age.push_back(restrict_ordered(a, t, ref));
    for (const auto& s : subsets) {
      FinStructure b = restrict_ordered(a, s, candidate);
      bool found = false;
      for (const FinStructure& r : ref_age)
        if (are_isomorphic(b, r)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

TorderReport check_torder_equivalence(const FinStructure& a, int m) {
  ClassSpec k = a.partial_order ? ClassSpec::posets(true)
                                : ClassSpec::hypergraphs(a.sig, true);
  FiniteFlow flow = make_flow(a, k);
  TorderReport report;
  report.homogeneous = is_ultrahomogeneous(a);
  for (const OrderPoint& ref : flow.points) {
    auto orbit = orbit_closure(flow, ref);
    for (const OrderPoint& cand : flow.points) {
      ++report.pairs;
      bool literal = std::binary_search(orbit.begin(), orbit.end(), cand);
      bool age = in_orbit_closure_age_criterion(a, ref, cand, m);
      if (literal && !age) report.forward_ok = false;
      if (literal != age) {
        report.agreement = false;
        if (age && !literal) report.converse_gaps.emplace_back(ref, cand);
      }
    }
  }
  return report;
}

bool is_minimal(const FiniteFlow& flow) {
  if (flow.points.empty()) throw std::invalid_argument("is_minimal: empty flow");
  for (const OrderPoint& p : flow.points)
    if (orbit_closure(flow, p) != flow.points) return false;
  return true;
}

std::vector<OrderPoint> fixed_points_of_order_stabilizer(const FiniteFlow& flow,
                                                         const OrderPoint& p) {
  if (!std::binary_search(flow.points.begin(), flow.points.end(), p))
    throw std::invalid_argument("fixed_points: point is not admissible");
  std::vector<const std::vector<int>*> stab;
  for (const auto& g : flow.group)
    if (act(g, p) == p) stab.push_back(&g);
  std::vector<OrderPoint> fixed;
  for (const OrderPoint& q : flow.points) {
    bool all = true;
    for (const auto* g : stab)
      if (act(*g, q) != q) {
        all = false;
        break;
      }
    if (all) fixed.push_back(q);
  }
  return fixed;
}

}  // namespace homflow
