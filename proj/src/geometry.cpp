#include "perpdiss/geometry.hpp"

#include "perpdiss/lift_semilattice.hpp"
#include "perpdiss/union_find.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace perpdiss {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational norm2(const Point& a) { return dot(a, a); }

Point minus(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<Rational> row_of(const Hyperplane& h) {
  std::vector<Rational> r = h.normal;
  r.push_back(h.offset);
  return r;
}

// Reduces v against canonical RREF rows; each row's pivot is its first nonzero entry.
void reduce(const std::vector<std::vector<Rational>>& rows, std::vector<Rational>& v) {
  for (const auto& r : rows) {
    std::size_t p = 0;
    while (r[p] == 0) ++p;
    if (v[p] == 0) continue;
    Rational f = v[p];
    for (std::size_t k = p; k < v.size(); ++k) v[k] -= f * r[k];
  }
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& vecs) {
  if (vecs.empty()) return 0;
  return rref(RationalMatrix(vecs)).rank;
}

bool is_even_nonnegative_integer(const Rational& a) {
  return a.get_den() == 1 && a >= 0 && mpz_even_p(a.get_num().get_mpz_t());
}

void check_config(const GainGraph& g, const PointConfiguration& q) {
  if (q.n() != g.n()) throw std::invalid_argument("point count differs from vertex count");
  for (const auto& p : q.points)
    if (static_cast<int>(p.size()) != q.d) throw std::invalid_argument("point of wrong dimension");
}

}  // namespace

// ------------------------------------------------------------------ AffineFlat

AffineFlat AffineFlat::whole(int d) {
  AffineFlat f;
  f.d_ = d;
  return f;
}

std::optional<AffineFlat> AffineFlat::from_rows(int d, const std::vector<std::vector<Rational>>& rows) {
  AffineFlat f;
  f.d_ = d;
  if (rows.empty()) return f;
  auto r = rref(RationalMatrix(rows));
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == static_cast<std::size_t>(d)) return std::nullopt;
    f.rows_.push_back(r.matrix.row(i));
  }
  return f;
}

bool AffineFlat::contained_in(const Hyperplane& h) const {
  auto v = row_of(h);
  reduce(rows_, v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool AffineFlat::contains(const Point& p) const {
  for (const auto& r : rows_) {
    Rational s = 0;
    for (int i = 0; i < d_; ++i) s += r[i] * p[i];
    if (s != r[d_]) return false;
  }
  return true;
}

std::optional<AffineFlat> AffineFlat::meet(const Hyperplane& h) const {
  auto v = row_of(h);
  reduce(rows_, v);
  bool coeff_zero = std::all_of(v.begin(), v.end() - 1, [](const Rational& x) { return x == 0; });
  if (coeff_zero) {
    if (v.back() != 0) return std::nullopt;
    return *this;
  }
  auto rows = rows_;
  rows.push_back(row_of(h));
  return from_rows(d_, rows);
}

std::optional<AffineFlat> AffineFlat::meet(const AffineFlat& other) const {
  auto rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return from_rows(d_, rows);
}

std::optional<Point> AffineFlat::as_point() const {
  if (dim() != 0) return std::nullopt;
  return some_point();
}

Point AffineFlat::some_point() const {
  Point p(d_, Rational(0));
  for (const auto& r : rows_) {
    std::size_t piv = 0;
    while (r[piv] == 0) ++piv;
    p[piv] = r[d_];
  }
  return p;
}

// ------------------------------------------------------------ construction

Rational pythagorean_coordinate(const Point& p, const Point& qi, const Point& qj) {
  if (p.size() != qi.size() || p.size() != qj.size()) throw std::invalid_argument("dimension mismatch");
  return norm2(minus(p, qi)) - norm2(minus(p, qj));
}

std::vector<Hyperplane> build_arrangement(const GainGraph& g, const PointConfiguration& q) {
  check_config(g, q);
  if (!is_even_nonnegative_integer(g.alpha()))
    throw std::invalid_argument("alpha must be an even nonnegative integer for exact construction");
  const unsigned long half = mpz_get_ui(g.alpha().get_num().get_mpz_t()) / 2;
  std::vector<Hyperplane> out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const Point &qi = q(e.i), &qj = q(e.j);
    Point diff = minus(qj, qi);
    Rational d2 = norm2(diff);
    if (d2 == 0) throw std::invalid_argument("adjacent reference points coincide");
    Rational scale = 1;
    for (unsigned long k = 0; k < half; ++k) scale *= d2;
    Hyperplane h;
    for (auto& x : diff) h.normal.push_back(2 * x);
    h.offset = e.gain * scale - norm2(qi) + norm2(qj);
    h.source_edge = e.id;
    out.push_back(std::move(h));
  }
  return out;
}

GeomSemilattice intersection_semilattice(const std::vector<Hyperplane>& h, int d) {
  if (h.size() > 40) throw ResourceGuard("more than 40 hyperplanes");
  GeomSemilattice L;
  L.d = d;
  std::set<AffineFlat> seen;
  L.flats.push_back(AffineFlat::whole(d));
  seen.insert(L.flats.back());
  for (const Hyperplane& hp : h) {
    const std::size_t snapshot = L.flats.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      if (L.flats[i].contained_in(hp)) continue;
      auto m = L.flats[i].meet(hp);
      if (m && seen.insert(*m).second) {
        if (seen.size() > kPosetGuard) throw ResourceGuard("too many flats");
        L.flats.push_back(*m);
      }
    }
  }
  std::sort(L.flats.begin(), L.flats.end());
  for (auto& f : L.flats)
    for (std::size_t k = 0; k < h.size(); ++k)
      if (f.contained_in(h[k])) f.containing_hyperplanes.push_back(k);
  return L;
}

CountReport geometric_counts(const GeomSemilattice& l, int d) {
  RankedPoset p;
  for (const auto& f : l.flats) {
    p.rank.push_back(f.codim());
    p.support.emplace_back(f.containing_hyperplanes.begin(), f.containing_hyperplanes.end());
  }
  return counts_from_table(mobius_table(p), d);
}

Census planar_census(const std::vector<Hyperplane>& h) {
  for (const auto& x : h)
    if (x.normal.size() != 2) throw std::invalid_argument("planar census needs d = 2");
  std::vector<AffineFlat> lines;
  for (const auto& x : h) {
    auto f = AffineFlat::from_rows(2, {row_of(x)});
    if (!f || f->dim() != 1) throw std::invalid_argument("not a line");
    if (std::find(lines.begin(), lines.end(), *f) != lines.end()) throw std::invalid_argument("duplicate lines");
    lines.push_back(*f);
  }
  std::set<Point> points;
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      auto m = lines[a].meet(lines[b]);
      if (m) points.insert(*m->as_point());
    }
  Census c{Integer(points.size()), 0, 0};
  for (const auto& l : lines) {
    long on = 0;
    for (const auto& p : points)
      if (l.contains(p)) ++on;
    c.f1 += on + 1;
  }
  c.f2 = 1 - c.f0 + c.f1;
  return c;
}

// ---------------------------------------------------------------- genericity

IgpResult check_igp(const PointConfiguration& q) {
  const int n = q.n();
  if (n > 8) throw ResourceGuard("IGP check limited to 8 points");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  const int r = std::min(q.d, n - 1);
  // Circles are always dependent, so IGP holds iff every forest with <= r edges is independent.
  IgpResult res{true, {}};
  std::vector<std::pair<int, int>> cur;
  std::vector<std::vector<Rational>> vecs;
  std::function<bool(std::size_t, UnionFind&)> dfs = [&](std::size_t start, UnionFind& uf) -> bool {
    if (static_cast<int>(cur.size()) >= r) return true;
    for (std::size_t k = start; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      UnionFind next = uf;
      if (!next.unite(i - 1, j - 1)) continue;
      cur.push_back(pairs[k]);
      vecs.push_back(minus(q(j), q(i)));
      if (rank_of(vecs) < vecs.size()) {
        res.ok = false;
        res.witness = cur;
        return false;
      }
      if (!dfs(k + 1, next)) return false;
      cur.pop_back();
      vecs.pop_back();
    }
    return true;
  };
  UnionFind uf(n);
  dfs(0, uf);
  return res;
}

BalanceMode mode_for_alpha(const Rational& alpha) {
  return alpha == 0 ? BalanceMode::Exact : BalanceMode::ZOnly;
}

GpResult check_gp(const GainGraph& g, const PointConfiguration& q) {
  const int d = q.d;
  auto H = build_arrangement(g, q);
  std::map<EdgeId, std::size_t> hidx;
  for (std::size_t k = 0; k < H.size(); ++k) hidx[H[k].source_edge] = k;
  EdgeIdSet loops;
  for (const Edge& e : g.edges())
    if (e.is_loop()) loops.push_back(e.id);
  std::sort(loops.begin(), loops.end());

  const int cap = std::min(d, std::max(g.n() - 1, 0));
  Semilattice pred = enumerate_flats(g, mode_for_alpha(g.alpha()), cap);
  GeomSemilattice geo = intersection_semilattice(H, d);
  auto fail = [](std::string why) { return GpResult{false, std::move(why)}; };

  std::set<AffineFlat> images;
  for (const Flat& f : pred.elements) {
    std::vector<std::vector<Rational>> rows;
    for (EdgeId id : f.edge_ids)
      if (hidx.count(id)) rows.push_back(row_of(H[hidx[id]]));
    auto s = AffineFlat::from_rows(d, rows);
    std::ostringstream key;
    for (EdgeId id : f.edge_ids) key << id << ' ';
    if (!s) return fail("predicted flat {" + key.str() + "} has empty intersection");
    if (s->codim() != f.rank) return fail("predicted flat {" + key.str() + "} has the wrong dimension");
    EdgeIdSet containing = loops;
    for (const auto& hp : H)
      if (s->contained_in(hp)) containing.push_back(hp.source_edge);
    std::sort(containing.begin(), containing.end());
    if (containing != f.edge_ids) return fail("flat of {" + key.str() + "} lies in extra hyperplanes");
    images.insert(*s);
  }
  if (images.size() != pred.elements.size() || geo.flats.size() != pred.elements.size())
    return fail("intersection semilattice has " + std::to_string(geo.flats.size()) + " flats, predicted " +
                std::to_string(pred.elements.size()));

  // Every forest of d+1 edges must meet emptily.
  std::vector<const Hyperplane*> cur;
  std::vector<const Edge*> es;
  for (const Edge& e : g.edges())
    if (!e.is_loop()) es.push_back(&e);
  std::string bad;
  std::function<bool(std::size_t, UnionFind&, const AffineFlat&)> dfs =
      [&](std::size_t start, UnionFind& uf, const AffineFlat& meet) -> bool {
    if (static_cast<int>(cur.size()) == d + 1) {
      bad = "a forest of d+1 edges has a common point";
      return false;
    }
    for (std::size_t k = start; k < es.size(); ++k) {
      UnionFind next = uf;
      if (!next.unite(es[k]->i - 1, es[k]->j - 1)) continue;
      const Hyperplane& hp = H[hidx[es[k]->id]];
      auto m = meet.meet(hp);
      if (!m) continue;
      cur.push_back(&hp);
      bool ok = dfs(k + 1, next, *m);
      cur.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (g.n() - 1 >= d + 1) {
    UnionFind uf(g.n());
    if (!dfs(0, uf, AffineFlat::whole(d))) return fail(bad);
  }
  return {true, std::to_string(pred.elements.size()) + " flats matched"};
}

PointConfiguration sample_generic(const GainGraph& g, int d, const SampleOptions& opt) {
  const int n = g.n();
  if (!(n > d && d >= 1)) throw std::invalid_argument("sampling needs n > d >= 1");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> dist(-opt.bound, opt.bound);
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    PointConfiguration q{d, {}};
    for (int v = 0; v < n; ++v) {
      Point p;
      for (int k = 0; k < d; ++k) p.push_back(Rational(dist(rng)));
      q.points.push_back(std::move(p));
    }
    if (!check_igp(q).ok) continue;
    if (!check_gp(g, q).ok) continue;
    return q;
  }
  throw SamplingFailure("no generic configuration found within the retry budget");
}

// ----------------------------------------------------------------- sections

Point project(const Point& p, const AffineFlat& t) {
  const auto& A = t.rows();
  const std::size_t r = A.size();
  const int d = t.ambient();
  if (r == 0) return p;
  std::vector<std::vector<Rational>> sys(r, std::vector<Rational>(r + 1));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      Rational s = 0;
      for (int k = 0; k < d; ++k) s += A[a][k] * A[b][k];
      sys[a][b] = s;
    }
    Rational s = -A[a][d];
    for (int k = 0; k < d; ++k) s += A[a][k] * p[k];
    sys[a][r] = s;
  }
  auto sol = rref(RationalMatrix(sys)).matrix;  // A has full row rank
  Point out = p;
  for (std::size_t a = 0; a < r; ++a)
    for (int k = 0; k < d; ++k) out[k] -= A[a][k] * sol.at(a, r);
  return out;
}

InducedArrangement induced_arrangement(const GainGraph& g, const PointConfiguration& q, const AffineFlat& t) {
  check_config(g, q);
  if (g.alpha() != 0) throw std::invalid_argument("induced arrangements need alpha = 0");
  if (t.ambient() != q.d) throw std::invalid_argument("flat lives in a different space");
  InducedArrangement out;
  const int n = g.n();
  std::vector<Point> proj;
  out.eta.values.resize(n);
  for (int v = 1; v <= n; ++v) {
    proj.push_back(project(q(v), t));
    out.eta(v) = norm2(minus(q(v), proj.back()));
  }
  std::map<Point, int> label_of;
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = label_of.emplace(proj[v], static_cast<int>(label_of.size())).first->second;
  out.blocks = Partition::from_labels(label);
  out.graph = collapse(switch_gains(g, out.eta), out.blocks);
  out.points.d = q.d;
  for (const auto& b : out.blocks.blocks) out.points.points.push_back(proj[b.front() - 1]);

  auto H = build_arrangement(g, q);
  std::map<EdgeId, const Hyperplane*> orig;
  for (const auto& h : H) orig[h.source_edge] = &h;
  auto Hp = build_arrangement(out.graph, out.points);
  std::map<EdgeId, const Hyperplane*> pred;
  for (const auto& h : Hp) pred[h.source_edge] = &h;

  bool ok = true;
  GainGraph switched = switch_gains(g, out.eta);
  auto block = out.blocks.block_index(n);
  for (const Edge& e : switched.edges()) {
    if (e.is_loop()) continue;
    auto trace = t.meet(*orig[e.id]);
    if (block[e.i - 1] == block[e.j - 1]) {
      // collapsed away: the hyperplane contains t exactly when its switched gain is 0
      bool contains_t = trace && *trace == t;
      ok = ok && (contains_t == (e.gain == 0)) && (contains_t || !trace);
      continue;
    }
    auto expect = t.meet(*pred[e.id]);
    ok = ok && trace && expect && *trace == *expect;
    if (trace) out.traces.push_back(*trace);
  }
  out.verified = ok;
  return out;
}

CrossSection cross_section_embed(const GainGraph& g, const PointConfiguration& q, std::uint64_t seed) {
  check_config(g, q);
  const int n = q.n(), d = q.d;
  if (!(d < n - 1)) throw std::invalid_argument("cross section needs d < n - 1");
  std::vector<std::vector<Rational>> diffs;
  for (int v = 2; v <= n; ++v) diffs.push_back(minus(q(v), q(1)));
  if (static_cast<int>(rank_of(diffs)) != d) throw std::invalid_argument("reference points do not span the space");

  const int m = n - 1 - d, D = n - 1;
  CrossSection cs;
  std::vector<std::vector<Rational>> trows;
  for (int k = d; k < D; ++k) {
    std::vector<Rational> r(D + 1, Rational(0));
    r[k] = 1;
    trows.push_back(r);
  }
  cs.t = *AffineFlat::from_rows(D, trows);

  auto lift = [&](const std::vector<std::vector<Rational>>& offs) {
    PointConfiguration qp{D, {}};
    for (int v = 1; v <= n; ++v) {
      Point p = q(v);
      p.insert(p.end(), offs[v - 1].begin(), offs[v - 1].end());
      qp.points.push_back(std::move(p));
    }
    return qp;
  };
  auto independent = [&](const PointConfiguration& qp) {
    std::vector<std::vector<Rational>> ds;
    for (int v = 2; v <= n; ++v) ds.push_back(minus(qp(v), qp(1)));
    return static_cast<int>(rank_of(ds)) == n - 1;
  };

  std::vector<std::vector<Rational>> offs(n, std::vector<Rational>(m, Rational(0)));
  if (m == 1) {
    // The affine dependency lambda of Q; flipping one sign where lambda != 0 breaks it.
    std::vector<std::vector<Rational>> sys(d + 1, std::vector<Rational>(n));
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < d; ++k) sys[k][v] = q.points[v][k];
      sys[d][v] = 1;
    }
    auto rr = rref(RationalMatrix(sys));
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rational> lambda(n, Rational(0));
    lambda[free_col] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) lambda[rr.pivots[r]] = -rr.matrix.at(r, free_col);
    int flip = 0;
    while (lambda[flip] == 0) ++flip;
    for (int v = 0; v < n; ++v) offs[v][0] = v == flip ? -1 : 1;
    cs.qprime = lift(offs);
    if (!independent(cs.qprime)) throw std::logic_error("sign rule failed to separate the points");
  } else {
    std::vector<int> base(m);
    for (int k = 0; k < m; ++k) base[k] = k + 1;
    std::mt19937_64 rng(seed);
    bool found = false;
    for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
      for (int v = 0; v < n; ++v) {
        std::vector<int> perm = base;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int k = 0; k < m; ++k) offs[v][k] = (rng() & 1) ? perm[k] : -perm[k];
      }
      cs.qprime = lift(offs);
      found = independent(cs.qprime);
    }
    if (!found) throw SamplingFailure("no independent lift found");
  }

  InducedArrangement ind = induced_arrangement(g, cs.qprime, cs.t);
  bool ok = ind.verified && ind.graph.n() == n && ind.graph.edges().size() == g.edges().size();
  if (ok)
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      const Edge &a = g.edges()[k], &b = ind.graph.edges()[k];
      ok = ok && a.id == b.id && a.i == b.i && a.j == b.j && a.gain == b.gain;
    }
  auto H = build_arrangement(g, q);
  auto Hq = build_arrangement(g, cs.qprime);
  for (std::size_t k = 0; ok && k < H.size(); ++k) {
    Hyperplane up = H[k];
    up.normal.resize(D, Rational(0));
    auto want = cs.t.meet(up);
    auto got = cs.t.meet(Hq[k]);
    ok = want && got && *want == *got;
  }
  cs.verified = ok;
  return cs;
}

ParaboloidResult paraboloid_roundtrip(const GainGraph& g, const PointConfiguration& q) {
  check_config(g, q);
  if (g.alpha() != 0) throw std::invalid_argument("paraboloid lift needs alpha = 0");
  const int n = g.n();
  std::set<std::pair<int, int>> adjacent;
  for (const Edge& e : g.edges())
    if (!e.is_loop()) adjacent.insert({e.i, e.j});
  if (static_cast<int>(adjacent.size()) != n * (n - 1) / 2) throw std::invalid_argument("graph is not complete");
  auto bal = is_balanced(g, g.edge_ids(), BalanceMode::Exact);
  if (!bal.balanced) throw std::invalid_argument("graph is unbalanced");

  // Raising tangent i by theta(i) puts h(e) at psi_ij = theta(i) - theta(j) = phi(e;i,j).
  ParaboloidResult res{*bal.potential, true};
  auto H = build_arrangement(g, q);
  for (const auto& h : H) {
    const Edge& e = g.edge(h.source_edge);
    const Point &ai = q(e.i), &aj = q(e.j);
    // tangent T_v: z = 2 a_v . x - c_v + eta(v); subtract T_j from T_i
    Hyperplane t;
    for (int k = 0; k < q.d; ++k) t.normal.push_back(2 * (ai[k] - aj[k]));
    t.offset = (norm2(ai) - res.eta(e.i)) - (norm2(aj) - res.eta(e.j));
    auto a = AffineFlat::from_rows(q.d, {row_of(h)});
    auto b = AffineFlat::from_rows(q.d, {row_of(t)});
    res.verified = res.verified && a && b && *a == *b;
  }
  return res;
}

// ------------------------------------------------------------------- render

std::string render_svg(const GainGraph& g, const PointConfiguration& q) {
  if (q.d != 2) throw std::invalid_argument("rendering needs d = 2");
  auto H = build_arrangement(g, q);
  auto to_d = [](const Rational& r) { return r.get_d(); };
  std::vector<std::pair<double, double>> pts;
  for (std::size_t a = 0; a < H.size(); ++a)
    for (std::size_t b = a + 1; b < H.size(); ++b) {
      auto fa = AffineFlat::from_rows(2, {row_of(H[a])});
      if (!fa) continue;
      auto m = fa->meet(H[b]);
      if (m && m->dim() == 0) {
        auto p = *m->as_point();
        pts.push_back({to_d(p[0]), to_d(p[1])});
      }
    }
  for (const auto& p : q.points) pts.push_back({to_d(p[0]), to_d(p[1])});
  double x0 = pts.empty() ? -1 : pts[0].first, x1 = x0, y0 = pts.empty() ? -1 : pts[0].second, y1 = y0;
  for (auto [x, y] : pts) {
    x0 = std::min(x0, x), x1 = std::max(x1, x);
    y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  double span = std::max({x1 - x0, y1 - y0, 1e-9});
  if (x1 - x0 < 1e-9 * span) x0 -= span / 2, x1 += span / 2;
  if (y1 - y0 < 1e-9 * span) y0 -= span / 2, y1 += span / 2;
  double px = 0.2 * (x1 - x0), py = 0.2 * (y1 - y0);
  x0 -= px, x1 += px, y0 -= py, y1 += py;
  const double w = x1 - x0, hgt = y1 - y0, unit = std::max(w, hgt) / 400.0;

  char buf[512];
  std::ostringstream os;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6g %.6g %.6g %.6g\" width=\"600\" "
                "height=\"%.0f\">\n",
                x0, 0.0 - y1, w, hgt, 600.0 * hgt / w);
  os << buf;
  std::snprintf(buf, sizeof buf, "<rect x=\"%.6g\" y=\"%.6g\" width=\"%.6g\" height=\"%.6g\" fill=\"white\"/>\n",
                x0, 0.0 - y1, w, hgt);
  os << buf;
  for (const auto& h : H) {
    const double a = to_d(h.normal[0]), b = to_d(h.normal[1]), c = to_d(h.offset);
    // clip a x + b y = c to the box
    std::vector<std::pair<double, double>> hits;
    if (std::abs(b) > 0)
      for (double x : {x0, x1}) {
        double y = (c - a * x) / b;
        if (y >= y0 && y <= y1) hits.push_back({x, y});
      }
    if (std::abs(a) > 0)
      for (double y : {y0, y1}) {
        double x = (c - b * y) / a;
        if (x >= x0 && x <= x1) hits.push_back({x, y});
      }
    if (hits.size() < 2) continue;
    std::sort(hits.begin(), hits.end());
    const bool bisector = g.edge(h.source_edge).gain == 0;
    std::snprintf(buf, sizeof buf,
                  "<path d=\"M %.6g %.6g L %.6g %.6g\" stroke=\"%s\" stroke-width=\"%.6g\" fill=\"none\" "
                  "data-edge=\"%zu\"/>\n",
                  hits.front().first, 0.0 - hits.front().second, hits.back().first, 0.0 - hits.back().second,
                  bisector ? "black" : "#3060a0", (bisector ? 2.5 : 1.0) * unit, h.source_edge);
    os << buf;
  }
  for (int v = 1; v <= q.n(); ++v) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.6g\" cy=\"%.6g\" r=\"%.6g\" fill=\"#c03020\" data-vertex=\"%d\"/>\n",
                  to_d(q(v)[0]), 0.0 - to_d(q(v)[1]), 4 * unit, v);
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace perpdiss
