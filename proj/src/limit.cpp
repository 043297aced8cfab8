#include "homflow/limit.hpp"

#include "homflow/amalgam.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homflow {

bool same_triple(const Triple& a, const Triple& b) {
  return a.f == b.f && a.g == b.g && a.phi == b.phi;
}

Triple make_triple(const FinStructure& stage, std::vector<int> f, std::vector<int> phi,
                   int stage_born) {
  if (f.size() != phi.size()) throw std::invalid_argument("triple: |F| != |phi|");
  if (!std::is_sorted(f.begin(), f.end())) throw std::invalid_argument("triple: F not sorted");
  Triple t;
  t.f = std::move(f);
  t.phi = std::move(phi);
  t.g = t.phi;
  std::sort(t.g.begin(), t.g.end());
  t.stage_born = stage_born;
  FinStructure sub_f = drop_linear_order(induced_substructure(stage, t.f));
  FinStructure sub_g = drop_linear_order(induced_substructure(stage, t.g));
  std::vector<int> local(t.f.size());
  for (size_t i = 0; i < t.f.size(); ++i) {
    auto it = std::lower_bound(t.g.begin(), t.g.end(), t.phi[i]);
    if (it == t.g.end() || *it != t.phi[i])
      throw std::invalid_argument("triple: phi image mismatch");
    local[i] = static_cast<int>(it - t.g.begin());
  }
  if (!is_embedding(Embedding{sub_f, sub_g, local}))
    throw std::invalid_argument("triple: phi is not an isomorphism F -> G");
  if (stage.linear_order) {
    auto pos = stage.linear_positions();
    t.order_preserving = true;
    for (size_t i = 0; i < t.f.size() && t.order_preserving; ++i)
      for (size_t j = 0; j < t.f.size(); ++j)
        if (pos[t.f[i]] < pos[t.f[j]] && pos[t.phi[i]] >= pos[t.phi[j]]) {
          t.order_preserving = false;
          break;
        }
  }
  return t;
}

namespace {

struct ChainGlue {
  int n = 0, m = 0;
  std::vector<int> cls_of;  // node (z + n) * m + name -> canonical class index
  std::vector<std::vector<std::pair<int, int>>> members;
  FinStructure stage;  // relational part + partial order, no linear order
  std::vector<int> psi;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// chi partial injective; glue (z + 1, y) ~ (z, chi(y)).
ChainGlue glue_chain(const FinStructure& a_mu, const std::vector<int>& chi, int n) {
  int m = a_mu.size;
  {
    std::vector<char> hit(m, 0);
    for (int y = 0; y < m; ++y)
      if (chi[y] >= 0) {
        if (chi[y] >= m || hit[chi[y]]) throw std::invalid_argument("chain map not injective");
        hit[chi[y]] = 1;
      }
  }
  int total = (2 * n + 1) * m;
  auto node = [&](int z, int name) { return (z + n) * m + name; };
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  for (int z = -n; z < n; ++z)
    for (int y = 0; y < m; ++y)
      if (chi[y] >= 0) {
        int a = find_root(parent, node(z + 1, y));
        int b = find_root(parent, node(z, chi[y]));
        if (a != b) parent[a] = b;
      }

  ChainGlue out;
  out.n = n;
  out.m = m;
  std::vector<std::vector<std::pair<int, int>>> by_root(total);
  for (int z = -n; z <= n; ++z)
    for (int name = 0; name < m; ++name)
      by_root[find_root(parent, node(z, name))].push_back({z, name});

  // Canonical numbering: copy-0 classes keep their names, the rest follow
  // sorted by (lowest z, name there).
  std::vector<int> canon(total, -1);
  for (int name = 0; name < m; ++name) canon[find_root(parent, node(0, name))] = name;
  std::vector<std::pair<std::pair<int, int>, int>> rest;
  for (int r = 0; r < total; ++r)
    if (!by_root[r].empty() && canon[r] < 0) rest.push_back({by_root[r].front(), r});
  std::sort(rest.begin(), rest.end());
  int next = m;
  for (auto& [key, r] : rest) canon[r] = next++;

  out.cls_of.assign(total, -1);
  out.members.assign(next, {});
  for (int z = -n; z <= n; ++z)
    for (int name = 0; name < m; ++name) {
      int c = canon[find_root(parent, node(z, name))];
      out.cls_of[node(z, name)] = c;
      out.members[c].push_back({z, name});
    }
  for (auto& mem : out.members) std::sort(mem.begin(), mem.end());

  out.stage = FinStructure(a_mu.sig, next);
  for (int z = -n; z <= n; ++z)
    for (size_t s = 0; s < a_mu.relations.size(); ++s)
      for (Tuple t : a_mu.relations[s]) {
        for (int& v : t) v = out.cls_of[node(z, v)];
        out.stage.add_tuple(static_cast<int>(s), t);
      }
  if (a_mu.partial_order) {
    PairSet po;
    for (int z = -n; z <= n; ++z)
      for (const auto& [x, y] : *a_mu.partial_order)
        po.insert({out.cls_of[node(z, x)], out.cls_of[node(z, y)]});
    po = transitive_closure(po);
    for (const auto& [x, y] : po)
      if (x == y) throw std::runtime_error("glue: partial order closure produced a cycle");
    out.stage.partial_order = po;
  }

  out.psi.assign(next, -1);
  for (int c = 0; c < next; ++c)
    for (const auto& [z, name] : out.members[c])
      if (z < n) {
        int img = out.cls_of[node(z + 1, name)];
        if (out.psi[c] >= 0 && out.psi[c] != img)
          throw std::runtime_error("glue: shift map inconsistent");
        out.psi[c] = img;
      }
  return out;
}

FinStructure relabel(const FinStructure& a, const std::vector<int>& new_of_old) {
  FinStructure out(a.sig, a.size);
  for (size_t s = 0; s < a.relations.size(); ++s)
    for (Tuple t : a.relations[s]) {
      for (int& v : t) v = new_of_old[v];
      out.add_tuple(static_cast<int>(s), t);
    }
  if (a.partial_order) {
    PairSet po;
    for (const auto& [x, y] : *a.partial_order) po.insert({new_of_old[x], new_of_old[y]});
    out.partial_order = po;
  }
  if (a.linear_order) {
    std::vector<int> lo;
    for (int v : *a.linear_order) lo.push_back(new_of_old[v]);
    out.linear_order = lo;
  }
  return out;
}

// Deterministic linear extension: old elements keep their relative order,
// new elements follow by index, both subject to the partial order.
std::vector<int> stable_extension(const FinStructure& d, const std::vector<int>& prev_order) {
  int nd = d.size;
  std::vector<std::pair<int, int>> keys(nd);
  for (int v = 0; v < nd; ++v) keys[v] = {1, v};
  for (size_t t = 0; t < prev_order.size(); ++t) keys[prev_order[t]] = {0, static_cast<int>(t)};
  PairSet edges;
  for (size_t t = 0; t + 1 < prev_order.size(); ++t)
    edges.insert({prev_order[t], prev_order[t + 1]});
  if (d.partial_order)
    for (const auto& [x, y] : *d.partial_order) edges.insert({x, y});
  std::vector<int> indeg(nd, 0);
  std::vector<std::vector<int>> succ(nd);
  for (const auto& [x, y] : edges) {
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::vector<int> out;
  std::vector<char> done(nd, 0);
  for (int step = 0; step < nd; ++step) {
    int best = -1;
    for (int v = 0; v < nd; ++v)
      if (!done[v] && indeg[v] == 0 && (best < 0 || keys[v] < keys[best])) best = v;
    if (best < 0) throw std::runtime_error("stable_extension: cyclic constraints");
    done[best] = 1;
    out.push_back(best);
    for (int w : succ[best]) --indeg[w];
  }
  return out;
}

std::vector<int> chi_of_case1(const FinStructure& a_mu, const Triple& t) {
  std::vector<int> chi(a_mu.size, -1);
  for (size_t i = 0; i < t.f.size(); ++i) chi[t.f[i]] = t.phi[i];
  return chi;
}

}  // namespace

GlueResult glue_case1(const FinStructure& a_mu, const Triple& t, int n, const ClassSpec& k) {
  if (n < 1) throw std::invalid_argument("glue_case1: window must be >= 1");
  std::vector<int> chi = chi_of_case1(a_mu, t);
  ChainGlue chain = glue_chain(a_mu, chi, n);

  GlueResult out;
  out.psi = chain.psi;
  out.members = chain.members;

  bool ordered_path = t.order_preserving && a_mu.linear_order.has_value();
  if (!ordered_path) {
    out.stage = chain.stage;
    if (a_mu.linear_order)
      out.stage.linear_order = stable_extension(out.stage, *a_mu.linear_order);
    out.stage.validate();
    return out;
  }

  // Iterated ordered amalgamation, copies attached alternately at +s / -s so
  // that lower copies precede higher ones whenever the cut rule allows.
  FinStructure f_struct = induced_substructure(a_mu, t.f);
  FinStructure cur = a_mu;
  std::map<std::pair<int, int>, int> idx;
  for (int a = 0; a < a_mu.size; ++a) idx[{0, a}] = a;

  for (int s = 1; s <= n; ++s) {
    {  // top copy at z = +s glues via its F-part onto classes of (s-1, phi(f))
      std::vector<int> into_cur, into_copy;
      for (size_t i = 0; i < t.f.size(); ++i) {
        into_cur.push_back(idx[{s - 1, t.phi[i]}]);
        into_copy.push_back(t.f[i]);
      }
      Embedding iw{f_struct, cur, into_cur};
      Embedding jc{f_struct, a_mu, into_copy};
      AmalgamResult r = amalgamate_ordered(f_struct, cur, a_mu, iw, jc, k);
      for (auto& [key, v] : idx) v = r.into_b.map[v];
      for (int a = 0; a < a_mu.size; ++a) idx[{s, a}] = r.into_c.map[a];
      cur = r.amalgam;
    }
    {  // bottom copy at z = -s glues via its G-part onto classes of (-s+1, f)
      std::vector<int> into_copy, into_cur;
      for (size_t i = 0; i < t.f.size(); ++i) {
        into_copy.push_back(t.phi[i]);
        into_cur.push_back(idx[{-s + 1, t.f[i]}]);
      }
      Embedding ic{f_struct, a_mu, into_copy};
      Embedding jw{f_struct, cur, into_cur};
      AmalgamResult r = amalgamate_ordered(f_struct, a_mu, cur, ic, jw, k);
      for (auto& [key, v] : idx) v = r.into_c.map[v];
      for (int a = 0; a < a_mu.size; ++a) idx[{-s, a}] = r.into_b.map[a];
      cur = r.amalgam;
    }
  }

  if (cur.size != chain.stage.size)
    throw std::runtime_error("glue_case1: amalgamation disagrees with the quotient");
  std::vector<int> perm(cur.size, -1);
  for (const auto& [key, v] : idx) {
    int c = chain.cls_of[(key.first + n) * a_mu.size + key.second];
    if (perm[v] >= 0 && perm[v] != c)
      throw std::runtime_error("glue_case1: class map mismatch");
    perm[v] = c;
  }
  out.stage = relabel(cur, perm);
  if (out.stage.relations != chain.stage.relations ||
      out.stage.partial_order != chain.stage.partial_order)
    throw std::runtime_error("glue_case1: relations disagree with the quotient");
  out.stage.validate();
  return out;
}

std::vector<int> extend_order_case2(const FinStructure& window,
                                    const std::vector<std::vector<std::pair<int, int>>>& members,
                                    const FinStructure& a_mu, const std::vector<int>& b_set) {
  if (!a_mu.linear_order) throw std::invalid_argument("extend_order_case2: stage not ordered");
  int nc = static_cast<int>(members.size());
  auto pos = a_mu.linear_positions();

  std::vector<int> zlo(nc), zhi(nc);
  std::vector<std::map<int, int>> name_at(nc);
  for (int c = 0; c < nc; ++c) {
    zlo[c] = members[c].front().first;
    zhi[c] = members[c].back().first;
    for (const auto& [z, name] : members[c]) name_at[c][z] = name;
  }
  // Cuts below the class name; cuts along the chain <_mu are nested, so the
  // threshold count carries the full inclusion order.
  std::vector<int> thr(nc, 0);
  for (int c = 0; c < nc; ++c) {
    int nu = name_at[c][zlo[c]];
    for (int b : b_set)
      if (pos[b] < pos[nu]) ++thr[c];
  }
  auto less = [&](int x, int y) {
    int z = std::max(zlo[x], zlo[y]);
    if (z <= std::min(zhi[x], zhi[y]))
      return pos[name_at[x].at(z)] < pos[name_at[y].at(z)];
    if (thr[x] != thr[y]) return thr[x] < thr[y];
    return zlo[x] < zlo[y];
  };

  std::vector<int> order(nc);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), less);
  std::vector<int> rank(nc);
  for (int t = 0; t < nc; ++t) rank[order[t]] = t;

  bool coherent = true;
  for (int x = 0; x < nc && coherent; ++x)
    for (int y = 0; y < nc && coherent; ++y)
      if (x != y) coherent = less(x, y) == (rank[x] < rank[y]);
  if (coherent && window.partial_order)
    for (const auto& [x, y] : *window.partial_order)
      if (rank[x] >= rank[y]) coherent = false;
  if (coherent) return order;

  // Degenerate partial-chain case: keep the same-copy comparisons and the
  // partial order as hard edges, complete deterministically.
  PairSet edges;
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y) {
      if (x == y) continue;
      int z = std::max(zlo[x], zlo[y]);
      if (z <= std::min(zhi[x], zhi[y]) && pos[name_at[x].at(z)] < pos[name_at[y].at(z)])
        edges.insert({x, y});
    }
  if (window.partial_order)
    for (const auto& [x, y] : *window.partial_order) edges.insert({x, y});
  std::vector<int> indeg(nc, 0);
  std::vector<std::vector<int>> succ(nc);
  for (const auto& [x, y] : edges) {
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::vector<std::array<int, 3>> keys(nc);
  for (int c = 0; c < nc; ++c) keys[c] = {thr[c], zlo[c], pos[name_at[c][zlo[c]]]};
  std::vector<int> out;
  std::vector<char> done(nc, 0);
  for (int step = 0; step < nc; ++step) {
    int best = -1;
    for (int v = 0; v < nc; ++v)
      if (!done[v] && indeg[v] == 0 && (best < 0 || keys[v] < keys[best])) best = v;
    if (best < 0) throw std::runtime_error("extend_order_case2: cyclic constraints");
    done[best] = 1;
    out.push_back(best);
    for (int w : succ[best]) --indeg[w];
  }
  return out;
}

GlueResult glue_case2(const FinStructure& a_mu, const Triple& t, const std::vector<int>& b_set,
                      const std::vector<int>& psi_b, int n, const ClassSpec& k) {
  if (n < 1) throw std::invalid_argument("glue_case2: window must be >= 1");
  if (b_set.empty()) throw std::invalid_argument("glue_case2: B is empty, Case 1 applies");
  if (static_cast<int>(psi_b.size()) > a_mu.size)
    throw std::invalid_argument("glue_case2: psi_B larger than the stage");
  std::vector<int> chi(a_mu.size, -1);
  bool any = false;
  for (size_t y = 0; y < psi_b.size(); ++y)
    if (psi_b[y] >= 0) {
      chi[y] = psi_b[y];
      any = true;
    }
  if (!any) throw std::invalid_argument("glue_case2: psi_B is empty");
  // psi_B must be a partial isomorphism of the stage.
  {
    std::vector<int> dom, ran;
    for (size_t y = 0; y < psi_b.size(); ++y)
      if (psi_b[y] >= 0) {
        dom.push_back(static_cast<int>(y));
        ran.push_back(psi_b[y]);
      }
    std::vector<int> ran_sorted = ran;
    std::sort(ran_sorted.begin(), ran_sorted.end());
    FinStructure sub_d = drop_linear_order(induced_substructure(a_mu, dom));
    FinStructure sub_r = drop_linear_order(induced_substructure(a_mu, ran_sorted));
    std::vector<int> local(dom.size());
    for (size_t i = 0; i < dom.size(); ++i)
      local[i] = static_cast<int>(
          std::lower_bound(ran_sorted.begin(), ran_sorted.end(), ran[i]) - ran_sorted.begin());
    if (!is_embedding(Embedding{sub_d, sub_r, local}))
      throw std::invalid_argument("glue_case2: psi_B is not a partial isomorphism");
  }

  ChainGlue chain = glue_chain(a_mu, chi, n);
  GlueResult out;
  out.psi = chain.psi;
  out.members = chain.members;
  out.stage = chain.stage;

  bool psi_b_order_ok = false;
  if (a_mu.linear_order) {
    auto pos = a_mu.linear_positions();
    psi_b_order_ok = true;
    for (size_t y1 = 0; y1 < psi_b.size() && psi_b_order_ok; ++y1)
      for (size_t y2 = 0; y2 < psi_b.size(); ++y2)
        if (psi_b[y1] >= 0 && psi_b[y2] >= 0 && pos[y1] < pos[y2] &&
            pos[psi_b[y1]] >= pos[psi_b[y2]]) {
          psi_b_order_ok = false;
          break;
        }
  }
  if (a_mu.linear_order) {
    if (t.order_preserving && psi_b_order_ok)
      out.stage.linear_order = extend_order_case2(out.stage, out.members, a_mu, b_set);
    else
      out.stage.linear_order = stable_extension(out.stage, *a_mu.linear_order);
  }
  out.stage.validate();
  return out;
}

ConstructionState init_state(const FinStructure& seed, const ClassSpec& k, int n) {
  if (n < 1) throw std::invalid_argument("init_state: window must be >= 1");
  if (!k.ordered) throw std::invalid_argument("init_state: class must be ordered");
  if (!contains(k, seed)) throw std::invalid_argument("init_state: seed not a member");
  ConstructionState st;
  st.cls = k;
  st.window = n;
  st.stages.push_back(seed);
  return st;
}

namespace {

void harvest(ConstructionState& st) {
  const FinStructure& stage = st.stages.back();
  int sz_max = std::min(st.harvest_size, stage.size);
  // Flat deterministic list of (|F|, F, G) slots; the cursor walks it across
  // steps so later-born pairs eventually get scheduled too.
  std::vector<std::pair<int, std::pair<int, int>>> slots;
  std::vector<std::vector<std::vector<int>>> subs(sz_max + 1);
  for (int sz = 1; sz <= sz_max; ++sz) {
    subs[sz] = subsets_of_size(stage.size, sz);
    int cnt = static_cast<int>(subs[sz].size());
    for (int fi = 0; fi < cnt; ++fi)
      for (int gi = 0; gi < cnt; ++gi) slots.push_back({sz, {fi, gi}});
  }
  if (slots.empty()) return;

  int added = 0;
  long examined = 0;
  long total = static_cast<long>(slots.size());
  for (; examined < std::min<long>(st.scan_budget, total) && added < st.harvest_cap;
       ++examined, ++st.scan_cursor) {
    auto [sz, fg] = slots[st.scan_cursor % total];
    const std::vector<int>& f = subs[sz][fg.first];
    const std::vector<int>& g = subs[sz][fg.second];
    FinStructure sub_f = drop_linear_order(induced_substructure(stage, f));
    FinStructure sub_g = drop_linear_order(induced_substructure(stage, g));
    for (const auto& local : enumerate_embedding_maps(sub_f, sub_g)) {
      std::vector<int> phi(f.size());
      for (size_t i = 0; i < f.size(); ++i) phi[i] = g[local[i]];
      Triple t = make_triple(stage, f, phi, static_cast<int>(st.stages.size()) - 1);
      bool fresh = true;
      for (const Triple& old : st.triples)
        if (same_triple(old, t)) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      st.triples.push_back(std::move(t));
      st.psi_of.emplace_back();
      st.b_bound.push_back(0);
      st.schedule.push_back(static_cast<int>(st.triples.size()) - 1);
      if (++added >= st.harvest_cap) break;
    }
  }
}

}  // namespace

bool construction_step(ConstructionState& st) {
  if (st.schedule.empty()) harvest(st);
  if (st.schedule.empty()) return false;
  int ti = st.schedule.front();
  const Triple& t = st.triples[ti];
  const FinStructure& a_mu = st.stages.back();
  int n = st.window, m = a_mu.size;

  bool fresh = st.psi_of[ti].empty();
  int glued = 0;
  if (fresh) {
    glued = static_cast<int>(t.f.size());
  } else {
    for (int v : st.psi_of[ti])
      if (v >= 0) ++glued;
  }
  long projected = static_cast<long>(2 * n + 1) * m - static_cast<long>(2 * n) * glued;
  if (projected > st.max_stage_size) {
    st.exhausted = true;
    return false;
  }
  st.schedule.pop_front();

  GlueResult r;
  if (fresh) {
    r = glue_case1(a_mu, t, n, st.cls);
  } else {
    std::vector<int> b_set(st.b_bound[ti]);
    std::iota(b_set.begin(), b_set.end(), 0);
    r = glue_case2(a_mu, t, b_set, st.psi_of[ti], n, st.cls);
  }
  st.stages.push_back(r.stage);
  st.psi_of[ti] = r.psi;
  st.b_bound[ti] = r.stage.size;
  ++st.steps_done;
  st.schedule.push_back(ti);
  harvest(st);
  return true;
}

ConstructionState run(const FinStructure& seed, const ClassSpec& k, int budget, int n) {
  ConstructionState st = init_state(seed, k, n);
  harvest(st);
  for (int step = 0; step < budget; ++step)
    if (!construction_step(st)) break;
  return st;
}

namespace {

bool is_partial_automorphism(const FinStructure& stage, const std::vector<int>& psi,
                             bool require_order, std::string& why) {
  std::vector<int> dom, ran;
  for (size_t x = 0; x < psi.size(); ++x)
    if (psi[x] >= 0) {
      dom.push_back(static_cast<int>(x));
      ran.push_back(psi[x]);
    }
  std::vector<int> ran_sorted = ran;
  std::sort(ran_sorted.begin(), ran_sorted.end());
  if (std::adjacent_find(ran_sorted.begin(), ran_sorted.end()) != ran_sorted.end()) {
    why = "psi not injective";
    return false;
  }
  FinStructure sub_d = induced_substructure(stage, dom);
  FinStructure sub_r = induced_substructure(stage, ran_sorted);
  if (!require_order) {
    sub_d = drop_linear_order(sub_d);
    sub_r = drop_linear_order(sub_r);
  }
  std::vector<int> local(dom.size());
  for (size_t i = 0; i < dom.size(); ++i)
    local[i] = static_cast<int>(
        std::lower_bound(ran_sorted.begin(), ran_sorted.end(), ran[i]) - ran_sorted.begin());
  try {
    if (!is_embedding(Embedding{sub_d, sub_r, local})) {
      why = "psi is not an isomorphism of its domain onto its range";
      return false;
    }
  } catch (const std::invalid_argument& e) {
    why = e.what();
    return false;
  }
  return true;
}

}  // namespace

AuditReport audit_state(const ConstructionState& st) {
  AuditReport rep;
  auto flag = [&](const std::string& msg) {
    rep.ok = false;
    rep.issues.push_back(msg);
  };

  for (size_t s = 0; s + 1 < st.stages.size(); ++s) {
    const FinStructure& lo = st.stages[s];
    const FinStructure& hi = st.stages[s + 1];
    if (hi.size < lo.size) {
      flag("stage shrank");
      continue;
    }
    std::vector<int> prefix(lo.size);
    std::iota(prefix.begin(), prefix.end(), 0);
    FinStructure ind = drop_linear_order(induced_substructure(hi, prefix));
    if (!(ind == drop_linear_order(lo))) flag("previous stage is not an identity-prefix substructure");
    if (lo.linear_order && hi.linear_order) {
      auto plo = lo.linear_positions();
      auto phi_pos = hi.linear_positions();
      for (int x = 0; x < lo.size; ++x)
        for (int y = 0; y < lo.size; ++y)
          if (plo[x] < plo[y] && phi_pos[x] >= phi_pos[y]) flag("stage order does not extend the previous one");
    }
  }

  for (const FinStructure& stage : st.stages) {
    try {
      stage.validate();
    } catch (const std::invalid_argument& e) {
      flag(std::string("stage invalid: ") + e.what());
    }
    if (!contains(st.cls, stage)) flag("stage escaped the class");
  }

  const FinStructure& last = st.stages.back();
  for (size_t ti = 0; ti < st.triples.size(); ++ti) {
    if (st.psi_of[ti].empty()) continue;
    const Triple& t = st.triples[ti];
    std::vector<int> psi = st.psi_of[ti];
    psi.resize(last.size, -1);
    std::string why;
    if (!is_partial_automorphism(last, psi, false, why)) flag("triple psi: " + why);
    if (t.order_preserving && !is_partial_automorphism(last, psi, true, why))
      flag("triple psi not order-preserving: " + why);
    for (size_t i = 0; i < t.f.size(); ++i)
      if (psi[t.f[i]] != t.phi[i]) flag("psi does not extend phi");
  }
  return rep;
}

EpReport check_extension_property(const FinStructure& a, const ClassSpec& k, int sub_bound) {
  if (sub_bound < 1) throw std::invalid_argument("check_extension_property: bound must be >= 1");
  if (!contains(k, a)) throw std::invalid_argument("check_extension_property: A not a member");
  EpReport rep;
  Age age = age_up_to(a, sub_bound);
  for (const FinStructure& c : age.members) {
    auto k_maps = enumerate_embedding_maps(c, a);
    for (int sz = 1; sz <= c.size; ++sz)
      for (const auto& s : subsets_of_size(c.size, sz)) {
        FinStructure b = induced_substructure(c, s);
        auto js = enumerate_embedding_maps(b, c);
        auto is = enumerate_embedding_maps(b, a);
        for (const auto& j : js)
          for (const auto& i : is) {
            bool found = false;
            for (const auto& km : k_maps) {
              bool match = true;
              for (size_t x = 0; x < j.size(); ++x)
                if (km[j[x]] != i[x]) {
                  match = false;
                  break;
                }
              if (match) {
                found = true;
                break;
              }
            }
            if (found) {
              ++rep.pass;
            } else {
              ++rep.fail;
              if (rep.failures.size() < 10) rep.failures.push_back({b, c});
            }
          }
      }
  }
  return rep;
}

}  // namespace homflow
