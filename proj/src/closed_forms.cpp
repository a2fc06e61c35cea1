#include "perpdiss/closed_forms.hpp"

#include "perpdiss/union_find.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace perpdiss {

namespace {

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer sign_pow(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

// All partitions of n as (part size -> multiplicity).
std::vector<std::map<int, int>> partitions_of(int n) {
  std::vector<std::map<int, int>> out;
  std::map<int, int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      ++cur[p];
      rec(rest - p, p);
      if (--cur[p] == 0) cur.erase(p);
    }
  };
  rec(n, n);
  return out;
}

}  // namespace

CountReport counts_from_table(const WhitneyTable& t, int d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  CountReport r;
  r.d = d;
  r.f.assign(d + 1, Integer(0));
  r.b.assign(d + 1, Integer(0));
  r.a.assign(d + 1, Integer(0));
  for (int k = 0; k <= d; ++k) {
    const int i = d - k;
    Integer sum = 0;
    for (int j = i; j <= d; ++j) {
      r.f[k] += iabs(t.w2_at(i, j));
      sum += t.w2_at(i, j);
    }
    r.b[k] = iabs(sum);
    r.a[k] = i <= t.rank ? t.W[i] : Integer(0);
  }
  std::vector<Rational> c(d + 1, Rational(0));
  for (int j = 0; j <= std::min(d, t.rank); ++j) c[d - j] = Rational(t.w[j]);
  r.p = Polynomial(c);
  return r;
}

CountReport counts_from_whitney(const WhitneyTable& t, int d, int n) {
  if (t.rank > n) throw std::invalid_argument("table rank exceeds vertex count");
  return counts_from_table(t, d);
}

ProjectiveCounts projective_counts(const LiftLattice& l, int d) {
  WhitneyTable t = mobius_table(l);
  ProjectiveCounts pc;
  pc.f.assign(d + 1, std::nullopt);
  pc.a.assign(d + 1, Integer(0));
  const bool empty_meet = t.rank == d + 1;
  for (int k = 0; k <= d; ++k) {
    const int i = d - k;
    pc.a[k] = i <= t.rank ? t.W[i] : Integer(0);
    if (empty_meet) {
      Integer s = 0;
      for (int j = d; j >= i; j -= 2) s += iabs(t.w2_at(i, j));  // d - j even
      pc.f[k] = s;
    } else if (k > d - t.rank) {
      Integer s = 0;
      for (int j = i; j <= d + 1; ++j) s += iabs(t.w2_at(i, j));
      pc.f[k] = s / 2;
    }
  }
  return pc;
}

CountReport stirling_counts(int n, int d) {
  if (!(n > d && d >= 1)) throw std::invalid_argument("need n > d >= 1");
  CountReport r;
  r.d = d;
  r.f.assign(d + 1, Integer(0));
  r.b.assign(d + 1, Integer(0));
  r.a.assign(d + 1, Integer(0));
  for (int k = 0; k <= d; ++k) {
    Integer S = stirling(StirlingKind::Second, n, n - d + k);
    Integer fs = 0, bs = 0;
    for (int j = d - k; j <= d; ++j) {
      Integer s = stirling(StirlingKind::First, n - d + k, n - j);
      fs += iabs(s);
      bs += s;
    }
    r.a[k] = S;
    r.f[k] = S * fs;
    r.b[k] = S * iabs(bs);
  }
  std::vector<Rational> c(d + 1);
  for (int i = 0; i <= d; ++i) c[d - i] = Rational(stirling(StirlingKind::First, n, n - i));
  r.p = Polynomial(c);
  return r;
}

std::vector<Integer> forest_numbers(const GainGraph& g) {
  const int n = g.n();
  std::vector<Integer> F(n + 1, Integer(0));
  std::vector<const Edge*> es;
  for (const Edge& e : g.edges())
    if (!e.is_loop()) es.push_back(&e);
  std::size_t count = 0;
  std::function<void(std::size_t, UnionFind&, int)> dfs = [&](std::size_t start, UnionFind& uf, int size) {
    if (++count > kForestGuard) throw ResourceGuard("more than 2e6 forests");
    F[n - size] += 1;
    for (std::size_t k = start; k < es.size(); ++k) {
      UnionFind next = uf;
      if (next.unite(es[k]->i - 1, es[k]->j - 1)) dfs(k + 1, next, size + 1);
    }
  };
  UnionFind uf(n);
  dfs(0, uf, 0);
  return F;
}

CountReport forest_counts(const GainGraph& g, int d) {
  const int n = g.n();
  auto F = forest_numbers(g);
  auto Fat = [&](int l) { return (l >= 0 && l <= n) ? F[l] : Integer(0); };
  CountReport r;
  r.d = d;
  r.f.assign(d + 1, Integer(0));
  r.b.assign(d + 1, Integer(0));
  r.a.assign(d + 1, Integer(0));
  for (int k = 0; k <= d; ++k) {
    Integer bs = 0;
    for (int i = d - k; i <= d; ++i) {
      Integer term = binomial(i, d - k) * Fat(n - i);
      r.f[k] += term;
      bs += sign_pow(d - i) * term;
    }
    r.b[k] = iabs(bs);
    r.a[k] = Fat(n - d + k);
  }
  UnionFind uf(n);
  for (const Edge& e : g.edges()) uf.unite(e.i - 1, e.j - 1);
  const int kx = d - n + uf.count();
  if (kx > 0 && kx <= d) r.b_unreliable.push_back(kx);
  std::vector<Rational> c(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) c[d - i] = Rational(sign_pow(i) * Fat(n - i));
  r.p = Polynomial(c);
  return r;
}

CountReport planar_counts(const Integer& q, const Integer& s2, const Integer& t) {
  CountReport r;
  r.d = 2;
  Integer points = s2 - 2 * t;
  r.a = {points, q, Integer(1)};
  r.f = {points, q + 2 * s2 - 3 * t, 1 + q + s2 - t};
  // b_k is the magnitude of a signed Whitney sum; lines with fewer than two points make the raw value negative
  r.b = {points, iabs(2 * s2 - q - 3 * t), iabs(1 + s2 - q - t)};
  for (const auto* v : {&r.f, &r.a})
    for (const Integer& x : *v)
      if (x < 0) throw std::invalid_argument("invalid planar statistics");
  r.p = Polynomial({Rational(s2 - t), Rational(-q), Rational(1)});
  return r;
}

ChiPair composed_partition_chi(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("need n >= 1, k >= 0");
  Polynomial tail = falling_factorial_poly(Rational(n * k + 1), n - 1);
  return {Polynomial::lambda() * tail, (Polynomial::lambda() - Polynomial::constant(1)) * tail};
}

Polynomial no_bisector_chi(int n, int k, int order) {
  if (n < 1 || order < n) throw std::invalid_argument("order too small");
  // f(z) = g(e^z - 1) with g(u) = sum_l (-lk-1)_{l-1} u^l / l!, so the linear coefficient
  // c_m of chi_m is sum_l S(m,l) (-lk-1)_{l-1} and f'(z) = sum_j c_{j+1} z^j / j!.
  PolySeries fprime(order - 1);
  for (int j = 0; j < order; ++j) {
    const int m = j + 1;
    Rational c = 0;
    for (int l = 1; l <= m; ++l) {
      Rational ff = 1;
      for (int s = 0; s < l - 1; ++s) ff *= Rational(-l * k - 1 - s);
      c += Rational(stirling(StirlingKind::Second, m, l)) * ff;
    }
    fprime[j] = Polynomial::constant(c / Rational(factorial(j)));
  }
  PolySeries egf = series_exp_of_integral(fprime, Polynomial::lambda());
  return egf[n] * Rational(factorial(n));
}

Polynomial composed_chi_via_egf(int n, int k, int order) {
  Polynomial p0;
  for (int l = 1; l <= n; ++l) {
    Polynomial pl = no_bisector_chi(l, k, order).polynomial_part_div(1);
    p0 += pl * Rational(stirling(StirlingKind::First, n, l));
  }
  return Polynomial::lambda() * p0;
}

EvenCase even_case_chi(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1, k >= 1");
  auto p0_of = [&](int m) {
    Polynomial acc;
    for (int i = 0; i <= m; ++i) {
      Polynomial x = Polynomial::lambda() * frac(1, 2) + Polynomial::constant(frac(i, 2) - 1 - k * i);
      acc += falling_factorial(x, m - 1) * Rational(binomial(m, i));
    }
    return acc * frac(1, 2);
  };
  EvenCase out;
  out.p0 = p0_of(n);
  for (int l = 1; l <= n; ++l) out.p += p0_of(l) * Rational(stirling(StirlingKind::Second, n, l));
  return out;
}

FatForestWhitney fat_forest_whitney(int n, int M) {
  if (n < 2 || M < 1) throw std::invalid_argument("need n >= 2, M >= 1");
  auto inner = [&](int k, bool second_kind) -> Rational {
    Rational s = 0;
    for (const auto& mu : partitions_of(k)) {
      Integer parts = 0, den = 1;
      for (const auto& [j, mj] : mu) {
        parts += mj;
        den *= factorial(mj);
        if (second_kind)
          for (int r = 0; r < mj; ++r) den *= factorial(j - 1);
      }
      Integer num;
      mpz_pow_ui(num.get_mpz_t(), Integer(k * M).get_mpz_t(), parts.get_ui());
      s += frac(num, den);
    }
    return s / Rational(k * k * M);
  };
  FatForestWhitney out;
  out.w.assign(n, Integer(0));
  out.W.assign(n, Integer(0));
  for (int second = 0; second < 2; ++second) {
    std::vector<Rational> acc(n + 1, Rational(0));  // by number of blocks i
    for (const auto& lam : partitions_of(n)) {
      int blocks = 0;
      Rational prod = 1;
      for (const auto& [k, lk] : lam) {
        blocks += lk;
        Rational base = inner(k, second == 1);
        for (int r = 0; r < lk; ++r) prod *= base;
        prod /= Rational(factorial(lk));
      }
      acc[blocks] += prod;
    }
    for (int i = 1; i <= n; ++i) {
      Rational v = acc[i] * Rational(factorial(n));
      if (v.get_den() != 1) throw std::logic_error("fat forest sum not integral");
      if (second)
        out.W[n - i] = v.get_num();
      else
        out.w[n - i] = sign_pow(n - i) * v.get_num();
    }
  }
  out.W_top = out.W[n - 1];
  return out;
}

Integer renyi_forest_count(int n, int i, int m) {
  if (n < 1 || i < 0 || i > n - 1) return 0;
  Rational s = 0;
  for (int k = 0; k <= n - i; ++k) {
    if (i - k < 0) continue;
    Rational term = Rational(binomial(n - i, k) * binomial(n - 1, i - k) * factorial(n - i + k));
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), n, i - k);
    term *= Rational(pw);
    Integer two_k = Integer(1) << k;
    s += term * frac(k % 2 ? -1 : 1, two_k);
  }
  Integer mp;
  mpz_ui_pow_ui(mp.get_mpz_t(), m, i);
  s *= Rational(mp) / Rational(factorial(n - i));
  if (s.get_den() != 1) throw std::logic_error("forest count not integral");
  return s.get_num();
}

GainGraph make_family(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < 1) throw std::invalid_argument("family needs n >= 1");
  auto with_gains = [&](const std::vector<Rational>& gains) {
    GainGraph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (const auto& x : gains) g.add_edge(i, j, x);
    return g;
  };
  const std::string& name = spec.name;
  if (name == "bisectors") return with_gains({Rational(0)});
  if (name == "odd" || name == "catalan" || name == "no_bisector" || name == "even") {
    int k = name == "catalan" ? 1 : spec.k;
    if (k < (name == "odd" ? 0 : 1)) throw std::invalid_argument("invalid k");
    std::vector<Rational> gains;
    if (name == "even")
      for (int x = -(2 * k - 1); x <= 2 * k - 1; x += 2) gains.push_back(x);
    else
      for (int x = -k; x <= k; ++x)
        if (x != 0 || name != "no_bisector") gains.push_back(x);
    return with_gains(gains);
  }
  std::mt19937_64 rng(spec.seed);
  if (name == "power_diagram") {
    SwitchingFunction eta{spec.weights};
    if (eta.values.empty()) {
      std::uniform_int_distribution<long> dist(-1000, 1000);
      for (int v = 0; v < n; ++v) eta.values.push_back(Rational(dist(rng)));
    }
    if (static_cast<int>(eta.values.size()) != n) throw std::invalid_argument("need one weight per vertex");
    return switch_gains(with_gains({Rational(0)}), eta);
  }
  if (name == "contrabalanced" || name == "fat") {
    const bool fat = name == "fat";
    const int mult = fat ? spec.M : spec.m;
    if (mult < 1) throw std::invalid_argument("invalid multiplicity");
    std::uniform_int_distribution<long> dist(1, 1'000'000'000);
    for (int attempt = 0; attempt < 100; ++attempt) {
      GainGraph g(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (fat) g.add_edge(i, j, 0);
          for (int r = 0; r < mult; ++r) g.add_edge(i, j, Rational(dist(rng)));
        }
      if (!has_balanced_circle(g, fat)) return g;
    }
    throw std::runtime_error("could not draw generic gains");
  }
  throw std::invalid_argument("unknown family \"" + name + "\"");
}

}  // namespace perpdiss
