#include "perpdiss/lift_semilattice.hpp"

#include "perpdiss/union_find.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace perpdiss {

Integer WhitneyTable::w2_at(int i, int j) const {
  auto it = w2.find({i, j});
  return it == w2.end() ? Integer(0) : it->second;
}

namespace {

// Calls visit(forest) for every forest of non-loop edges with at most max_edges edges,
// edges taken in increasing position of g.edges().
void for_each_forest(const GainGraph& g, int max_edges,
                     const std::function<void(const EdgeIdSet&)>& visit) {
  const auto& edges = g.edges();
  std::size_t count = 0;
  EdgeIdSet current;
  std::function<void(std::size_t, UnionFind&)> dfs = [&](std::size_t start, UnionFind& uf) {
    if (++count > kForestGuard) throw ResourceGuard("more than 2e6 forests");
    EdgeIdSet sorted = current;
    std::sort(sorted.begin(), sorted.end());
    visit(sorted);
    if (static_cast<int>(current.size()) >= max_edges) return;
    for (std::size_t k = start; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      if (e.is_loop()) continue;
      UnionFind next = uf;
      if (!next.unite(e.i - 1, e.j - 1)) continue;
      current.push_back(e.id);
      dfs(k + 1, next);
      current.pop_back();
    }
  };
  UnionFind uf(g.n());
  dfs(0, uf);
}

EdgeIdSet graphic_closure(const GainGraph& g, const EdgeIdSet& s) {
  UnionFind uf(g.n());
  for (EdgeId id : s) uf.unite(g.edge(id).i - 1, g.edge(id).j - 1);
  EdgeIdSet out;
  for (const Edge& e : g.edges())
    if (uf.find(e.i - 1) == uf.find(e.j - 1)) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

int component_count(const GainGraph& g, const EdgeIdSet& s) {
  UnionFind uf(g.n());
  for (EdgeId id : s) uf.unite(g.edge(id).i - 1, g.edge(id).j - 1);
  return uf.count();
}

}  // namespace

EdgeIdSet closure(const GainGraph& g, const EdgeIdSet& s, BalanceMode mode) {
  EdgeIdSet out;
  if (mode == BalanceMode::Exact) {
    auto bal = is_balanced(g, s, BalanceMode::Exact);
    if (!bal.balanced) throw std::invalid_argument("closure of an unbalanced set");
    UnionFind uf(g.n());
    for (EdgeId id : s) uf.unite(g.edge(id).i - 1, g.edge(id).j - 1);
    const Potential& th = *bal.potential;
    for (const Edge& e : g.edges())
      if (uf.find(e.i - 1) == uf.find(e.j - 1) && th(e.i) - th(e.j) == e.gain) out.push_back(e.id);
  } else {
    if (!is_balanced(g, s, BalanceMode::ZOnly).balanced)
      throw std::invalid_argument("closure of an unbalanced set");
    UnionFind z(g.n());
    for (EdgeId id : s)
      if (g.edge(id).gain == 0) z.unite(g.edge(id).i - 1, g.edge(id).j - 1);
    std::set<EdgeId> acc(s.begin(), s.end());
    for (const Edge& e : g.edges())
      if (e.gain == 0 && z.find(e.i - 1) == z.find(e.j - 1)) acc.insert(e.id);
    out.assign(acc.begin(), acc.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Semilattice enumerate_flats(const GainGraph& g, BalanceMode mode, int cap) {
  if (cap < 0 || cap > std::max(g.n() - 1, 0)) throw std::invalid_argument("cap too large");
  std::set<EdgeIdSet> seen;
  Semilattice l;
  l.mode = mode;
  l.cap = cap;
  for_each_forest(g, cap, [&](const EdgeIdSet& forest) {
    EdgeIdSet c = closure(g, forest, mode);
    if (!seen.insert(c).second) return;
    auto bal = is_balanced(g, c, mode);
    if (!bal.balanced) return;
    if (seen.size() > kPosetGuard) throw ResourceGuard("too many flats");
    Flat f{c, components(g, c), static_cast<int>(forest.size()), {}};
    if (mode == BalanceMode::Exact) f.potential = *bal.potential;
    l.elements.push_back(std::move(f));
  });
  std::sort(l.elements.begin(), l.elements.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.edge_ids < b.edge_ids;
  });
  return l;
}

LiftLattice lift_lattice(const GainGraph& g, BalanceMode mode, int cap) {
  if (cap < 1 || cap > g.n()) throw std::invalid_argument("cap too large");
  LiftLattice L;
  L.cap = cap;
  L.full_rank = component_count(g, {}) == 0 ? 1 : g.n() - component_count(g, g.edge_ids()) + 1;
  const bool truncate = cap < L.full_rank;
  // ranks kept below the (possibly truncated) top
  const int keep = truncate ? cap - 1 : L.full_rank;

  L.balanced = enumerate_flats(g, mode, std::min(keep, std::max(g.n() - 1, 0)));
  for (const Flat& f : L.balanced.elements) L.elements.push_back({f.edge_ids, false, f.rank, false});

  std::set<EdgeIdSet> graphic;
  if (keep >= 1) for_each_forest(g, keep - 1, [&](const EdgeIdSet& forest) {
    EdgeIdSet c = graphic_closure(g, forest);
    if (!graphic.insert(c).second) return;
    L.elements.push_back({c, true, static_cast<int>(forest.size()) + 1, false});
  });
  if (truncate) L.elements.push_back({g.edge_ids(), true, cap, true});
  std::stable_sort(L.elements.begin(), L.elements.end(), [](const LiftElement& a, const LiftElement& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.has_e0 != b.has_e0) return !a.has_e0;
    return a.edges < b.edges;
  });
  return L;
}

RankedPoset as_poset(const Semilattice& l) {
  RankedPoset p;
  for (const Flat& f : l.elements) {
    p.rank.push_back(f.rank);
    p.support.push_back(f.edge_ids);
  }
  return p;
}

RankedPoset as_poset(const LiftLattice& l) {
  EdgeId e0 = 0;
  for (const auto& x : l.elements)
    if (!x.edges.empty()) e0 = std::max(e0, x.edges.back() + 1);
  RankedPoset p;
  for (const auto& x : l.elements) {
    p.rank.push_back(x.rank);
    EdgeIdSet s = x.edges;
    if (x.has_e0) s.push_back(e0);
    p.support.push_back(std::move(s));
  }
  return p;
}

WhitneyTable mobius_table(const RankedPoset& p) {
  const std::size_t N = p.rank.size();
  if (N > 40'000) throw ResourceGuard("poset too large for the Mobius table");
  for (std::size_t k = 1; k < N; ++k)
    if (p.rank[k] < p.rank[k - 1]) throw std::invalid_argument("poset must be sorted by rank");

  // Compact bitsets over the union of supports.
  std::vector<EdgeId> ids;
  for (const auto& s : p.support) ids.insert(ids.end(), s.begin(), s.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const std::size_t words = ids.size() / 64 + 1;
  std::vector<std::vector<std::uint64_t>> bits(N, std::vector<std::uint64_t>(words, 0));
  for (std::size_t x = 0; x < N; ++x)
    for (EdgeId e : p.support[x]) {
      auto pos = std::lower_bound(ids.begin(), ids.end(), e) - ids.begin();
      bits[x][pos / 64] |= std::uint64_t(1) << (pos % 64);
    }
  auto leq = [&](std::size_t x, std::size_t y) {
    if (p.rank[x] > p.rank[y]) return false;
    for (std::size_t w = 0; w < words; ++w)
      if (bits[x][w] & ~bits[y][w]) return false;
    return true;
  };

  const std::size_t bw = N / 64 + 1;
  std::vector<std::vector<std::uint64_t>> below(N, std::vector<std::uint64_t>(bw, 0));
  std::vector<std::vector<std::size_t>> up(N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = x; y < N; ++y)
      if (leq(x, y)) {
        up[x].push_back(y);
        if (x != y) below[y][x / 64] |= std::uint64_t(1) << (x % 64);
      }

  WhitneyTable t;
  t.mobius.resize(N);
  int maxr = 0;
  for (int r : p.rank) maxr = std::max(maxr, r);
  t.rank = N ? maxr : 0;
  for (std::size_t x = 0; x < N; ++x) {
    const auto& u = up[x];
    std::vector<std::int64_t> mu(u.size(), 0);
    mu[0] = 1;
    for (std::size_t a = 1; a < u.size(); ++a) {
      const std::size_t y = u[a];
      std::int64_t s = 0;
      for (std::size_t b = 0; b < a; ++b) {
        const std::size_t z = u[b];
        if (mu[b] != 0 && (below[y][z / 64] >> (z % 64) & 1))
          if (__builtin_add_overflow(s, mu[b], &s)) throw ResourceGuard("Mobius value overflow");
      }
      mu[a] = -s;
    }
    for (std::size_t a = 0; a < u.size(); ++a) {
      t.mobius[x].push_back({u[a], mu[a]});
      if (mu[a] != 0) {
        Integer& cell = t.w2[{p.rank[x], p.rank[u[a]]}];
        cell += Integer(static_cast<long>(mu[a]));
      }
    }
  }
  for (auto it = t.w2.begin(); it != t.w2.end();)
    it = it->second == 0 ? t.w2.erase(it) : std::next(it);
  t.w.assign(t.rank + 1, Integer(0));
  t.W.assign(t.rank + 1, Integer(0));
  for (int j = 0; j <= t.rank; ++j) {
    t.w[j] = t.w2_at(0, j);
    t.W[j] = t.w2_at(j, j);
  }
  return t;
}

WhitneyTable mobius_table(const Semilattice& l) { return mobius_table(as_poset(l)); }
WhitneyTable mobius_table(const LiftLattice& l) { return mobius_table(as_poset(l)); }

LatticePolynomials polynomials(const WhitneyTable& t, int n) {
  LatticePolynomials out;
  std::vector<Rational> c(std::max(n, t.rank) + 1, Rational(0));
  for (int j = 0; j <= t.rank; ++j) {
    if (n - j < 0) throw std::invalid_argument("table rank exceeds n");
    c[n - j] = Rational(t.w[j]);
  }
  out.chi_b = Polynomial(c);
  for (const auto& [ij, v] : t.w2) out.w_poly.add(ij.first, n - ij.second, Rational(v));
  return out;
}

Polynomial characteristic_polynomial(const WhitneyTable& t) {
  std::vector<Rational> c(t.rank + 1, Rational(0));
  for (int j = 0; j <= t.rank; ++j) c[t.rank - j] = Rational(t.w[j]);
  return Polynomial(c);
}

}  // namespace perpdiss
