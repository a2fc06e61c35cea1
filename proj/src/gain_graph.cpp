#include "perpdiss/gain_graph.hpp"

#include "perpdiss/union_find.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace perpdiss {

Partition Partition::discrete(int n) {
  Partition p;
  for (int v = 1; v <= n; ++v) p.blocks.push_back({v});
  return p;
}

Partition Partition::from_labels(const std::vector<int>& label) {
  std::map<int, std::vector<int>> by_label;
  for (std::size_t v = 0; v < label.size(); ++v) by_label[label[v]].push_back(static_cast<int>(v) + 1);
  Partition p;
  for (auto& [_, b] : by_label) p.blocks.push_back(std::move(b));
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

std::vector<int> Partition::block_index(int n) const {
  std::vector<int> out(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) {
      if (v < 1 || v > n || out[v - 1] != -1) throw std::invalid_argument("invalid partition");
      out[v - 1] = static_cast<int>(b);
    }
  if (std::find(out.begin(), out.end(), -1) != out.end())
    throw std::invalid_argument("partition does not cover all vertices");
  return out;
}

GainGraph::GainGraph(int n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

std::optional<EdgeId> GainGraph::add_edge(int i, int j, const Rational& gain,
                                          std::optional<EdgeId> id) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("edge endpoint out of range");
  EdgeId eid = id ? *id : next_id_;
  next_id_ = std::max(next_id_, eid + 1);
  if (i == j && gain != 0) return std::nullopt;
  if (index_.count(eid)) throw std::invalid_argument("duplicate edge id");
  Edge e{eid, i, j, gain};
  if (i > j) {
    std::swap(e.i, e.j);
    e.gain = -gain;
  }
  index_[eid] = edges_.size();
  edges_.push_back(e);
  return eid;
}

const Edge& GainGraph::edge(EdgeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown edge id " + std::to_string(id));
  return edges_[it->second];
}

EdgeIdSet GainGraph::edge_ids() const {
  EdgeIdSet ids;
  for (const auto& e : edges_) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

Rational GainGraph::gain(EdgeId id, int from, int to) const {
  const Edge& e = edge(id);
  if (e.i == from && e.j == to) return e.gain;
  if (e.i == to && e.j == from) return -e.gain;
  throw std::invalid_argument("edge does not join the given vertices");
}

bool GainGraph::has_degenerate_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

Partition components(const GainGraph& g, const EdgeIdSet& s) {
  UnionFind uf(g.n());
  for (EdgeId id : s) {
    const Edge& e = g.edge(id);
    uf.unite(e.i - 1, e.j - 1);
  }
  std::vector<int> label(g.n());
  for (int v = 0; v < g.n(); ++v) label[v] = uf.find(v);
  return Partition::from_labels(label);
}

namespace {

std::optional<Potential> exact_potential(const GainGraph& g, const EdgeIdSet& s) {
  const int n = g.n();
  std::vector<std::vector<std::pair<int, Rational>>> adj(n + 1);
  for (EdgeId id : s) {
    const Edge& e = g.edge(id);
    adj[e.i].push_back({e.j, e.gain});
    adj[e.j].push_back({e.i, -e.gain});
  }
  Potential th{std::vector<Rational>(n)};
  std::vector<bool> seen(n + 1, false);
  for (int r = 1; r <= n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    th(r) = 0;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [w, phi] : adj[v]) {
        // phi = theta(v) - theta(w)
        Rational want = th(v) - phi;
        if (!seen[w]) {
          seen[w] = true;
          th(w) = want;
          stack.push_back(w);
        } else if (th(w) != want) {
          return std::nullopt;
        }
      }
    }
  }
  return th;
}

bool zonly_balanced(const GainGraph& g, const EdgeIdSet& s) {
  UnionFind z(g.n());
  for (EdgeId id : s) {
    const Edge& e = g.edge(id);
    if (e.gain == 0) z.unite(e.i - 1, e.j - 1);
  }
  UnionFind rest = z;
  for (EdgeId id : s) {
    const Edge& e = g.edge(id);
    if (e.gain != 0 && !rest.unite(e.i - 1, e.j - 1)) return false;
  }
  return true;
}

}  // namespace

BalanceResult is_balanced(const GainGraph& g, const EdgeIdSet& s, BalanceMode mode) {
  for (EdgeId id : s) g.edge(id);  // validates ids
  BalanceResult r;
  if (mode == BalanceMode::Exact) {
    r.potential = exact_potential(g, s);
    r.balanced = r.potential.has_value();
  } else {
    r.balanced = zonly_balanced(g, s);
  }
  return r;
}

GainGraph switch_gains(const GainGraph& g, const SwitchingFunction& eta) {
  if (static_cast<int>(eta.values.size()) != g.n())
    throw std::invalid_argument("switching function must be total");
  GainGraph out(g.n(), g.alpha());
  for (const Edge& e : g.edges()) out.add_edge(e.i, e.j, e.gain - eta(e.i) + eta(e.j), e.id);
  return out;
}

Contraction contract(const GainGraph& g, const EdgeIdSet& s) {
  auto bal = is_balanced(g, s, BalanceMode::Exact);
  if (!bal.balanced) throw std::invalid_argument("contraction set is unbalanced");
  Contraction c{GainGraph(), components(g, s), *bal.potential};
  GainGraph switched = switch_gains(g, c.eta);
  auto block = c.blocks.block_index(g.n());
  c.graph = GainGraph(static_cast<int>(c.blocks.blocks.size()), g.alpha());
  for (const Edge& e : switched.edges()) {
    if (std::binary_search(s.begin(), s.end(), e.id)) continue;
    c.graph.add_edge(block[e.i - 1] + 1, block[e.j - 1] + 1, e.gain, e.id);
  }
  return c;
}

GainGraph collapse(const GainGraph& g, const Partition& pi) {
  auto block = pi.block_index(g.n());
  GainGraph out(static_cast<int>(pi.blocks.size()), g.alpha());
  for (const Edge& e : g.edges()) {
    int a = block[e.i - 1] + 1, b = block[e.j - 1] + 1;
    if (a == b) continue;
    out.add_edge(a, b, e.gain, e.id);
  }
  return out;
}

EdgeIdSet zero_set(const GainGraph& g) {
  EdgeIdSet z;
  for (const Edge& e : g.edges())
    if (e.gain == 0) z.push_back(e.id);
  std::sort(z.begin(), z.end());
  return z;
}

PlanarStatistics planar_statistics(const GainGraph& g) {
  if (g.has_degenerate_loop()) throw std::invalid_argument("planar statistics need a loop-free graph");
  const int n = g.n();
  // between[a][b] for a < b: gains phi(e; a, b) of the parallel class
  std::vector<std::vector<std::vector<Rational>>> between(n + 1, std::vector<std::vector<Rational>>(n + 1));
  for (const Edge& e : g.edges()) between[e.i][e.j].push_back(e.gain);
  PlanarStatistics st{Integer(g.edges().size()), 0, 0, 0};
  Integer sum_sq = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) sum_sq += Integer(between[a][b].size() * between[a][b].size());
  st.s2 = (st.q * st.q - sum_sq) / 2;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (const auto& x : between[a][b])
          for (const auto& y : between[b][c])
            for (const auto& z : between[a][c]) {
              if (x + y - z == 0) st.t += 1;
              if (x == 0 && y == 0 && z == 0) st.t0 += 1;
            }
  return st;
}

bool has_balanced_circle(const GainGraph& g, bool outside_zero) {
  const int n = g.n();
  struct Arc {
    int to;
    Rational phi;
    EdgeId id;
    bool zero;
  };
  std::vector<std::vector<Arc>> adj(n + 1);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      if (!outside_zero) return true;  // zero loop is a balanced circle inside Z
      continue;
    }
    adj[e.i].push_back({e.j, e.gain, e.id, e.gain == 0});
    adj[e.j].push_back({e.i, -e.gain, e.id, e.gain == 0});
  }
  // Circles through their least vertex s, walking only through larger vertices.
  std::vector<bool> on_path(n + 1, false);
  std::function<bool(int, int, EdgeId, const Rational&, bool, int)> walk =
      [&](int s, int v, EdgeId first, const Rational& sum, bool all_zero, int len) -> bool {
    for (const Arc& a : adj[v]) {
      if (len == 1 && a.id == first) continue;
      if (a.to == s) {
        if (len >= 1 && a.id != first && sum + a.phi == 0 && !(outside_zero && all_zero && a.zero))
          return true;
        continue;
      }
      if (a.to < s || on_path[a.to]) continue;
      on_path[a.to] = true;
      bool hit = walk(s, a.to, len == 0 ? a.id : first, sum + a.phi, all_zero && a.zero, len + 1);
      on_path[a.to] = false;
      if (hit) return true;
    }
    return false;
  };
  for (int s = 1; s <= n; ++s) {
    on_path[s] = true;
    if (walk(s, s, 0, Rational(0), true, 0)) return true;
    on_path[s] = false;
  }
  return false;
}

}  // namespace perpdiss
