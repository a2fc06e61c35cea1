#include "oracles.hpp"

#include "perpdiss/closed_forms.hpp"
#include "perpdiss/lift_semilattice.hpp"

#include <doctest.h>

using namespace perpdiss;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.push_back(x);
  return out;
}

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.push_back(Rational(x));
  return Polynomial(v);
}

BalanceMode mode_of(const GainGraph& g) { return g.alpha() == 0 ? BalanceMode::Exact : BalanceMode::ZOnly; }

CountReport whitney_counts(const GainGraph& g, int d) {
  const int cap = std::min(d, g.n() - 1);
  return counts_from_whitney(mobius_table(enumerate_flats(g, mode_of(g), cap)), d, g.n());
}

Polynomial chi_of(const GainGraph& g) {
  return polynomials(mobius_table(enumerate_flats(g, BalanceMode::Exact, g.n() - 1)), g.n()).chi_b;
}

GainGraph family(const char* name, int n, int k = 1, int M = 1, int m = 2) {
  FamilySpec s{name, n};
  s.k = k;
  s.M = M;
  s.m = m;
  return make_family(s);
}

void check_evaluations(const CountReport& r) {
  const Integer sign = r.d % 2 ? -1 : 1;
  CHECK(Rational(r.f[r.d]) == sign * r.p.eval(-1));
  if (r.a[0] > 0)
    CHECK(Rational(r.b[r.d]) == sign * r.p.eval(1));
  else
    CHECK(Rational(r.b[r.d]) == abs(r.p.eval(1)));
}

}  // namespace

TEST_CASE("counts from Whitney numbers") {
  auto k4 = whitney_counts(family("bisectors", 4), 2);
  CHECK(k4.f[2] == 18);
  CHECK(k4.b[2] == 6);
  CHECK(k4.a == ints({7, 6, 1}));
  CHECK(k4.f == ints({7, 24, 18}));
  CHECK(k4.b == ints({7, 12, 6}));
  CHECK(k4.p == P({11, -6, 1}));

  auto odd = whitney_counts(family("odd", 4, 2), 2);
  CHECK(odd.p == P({299, -30, 1}));
  CHECK(odd.f[2] == 330);
  CHECK(odd.b[2] == 270);
}

TEST_CASE("projective counts") {
  GainGraph one(2);
  one.add_edge(1, 2, 1);
  auto a = projective_counts(lift_lattice(one, BalanceMode::Exact, 2), 1);
  REQUIRE(a.f[1]);
  CHECK(*a.f[1] == 2);  // a point and the ideal point cut the projective line in two

  auto k3 = projective_counts(lift_lattice(family("bisectors", 3), BalanceMode::Exact, 3), 2);
  REQUIRE(k3.f[2]);
  CHECK(*k3.f[2] == 6);

  auto empty = projective_counts(lift_lattice(GainGraph(2), BalanceMode::Exact, 2), 1);
  REQUIRE(empty.f[1]);
  CHECK(*empty.f[1] == 1);
  CHECK_FALSE(empty.f[0]);
}

TEST_CASE("Stirling closed form") {
  auto r = stirling_counts(4, 2);
  CHECK(r.f[2] == 18);
  CHECK(r.b[2] == 6);
  CHECK(r.a[0] == 7);
  CHECK(stirling_counts(3, 2).f[2] == 6);
  CHECK(stirling_counts(2, 1).f[1] == 2);
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n; ++d) {
      auto s = stirling_counts(n, d);
      CHECK(s == whitney_counts(family("bisectors", n), d));
      check_evaluations(s);
    }
  CHECK_THROWS_AS(stirling_counts(2, 2), std::invalid_argument);
}

TEST_CASE("forest numbers and counts") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 30; ++it) {
    auto g = oracle::random_graph(rng, 2 + it % 4, 10);
    CHECK(forest_numbers(g) == oracle::forest_numbers(g));
  }
  auto k4 = family("bisectors", 4);
  CHECK(forest_numbers(k4)[1] == 16);

  auto c3 = family("contrabalanced", 3, 1, 1, 2);
  auto fc = forest_counts(c3, 2);
  CHECK(fc.f[2] == 19);
  CHECK(fc.b[2] == 7);
  CHECK(fc.p == P({12, -6, 1}));
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto g = family("contrabalanced", n, 1, 1, m);
      for (int d = 1; d < n; ++d) {
        auto x = forest_counts(g, d), y = whitney_counts(g, d);
        CHECK(x.f == y.f);
        CHECK(x.a == y.a);
        CHECK(x.p == y.p);
        for (int k = 0; k <= d; ++k)
          if (std::find(x.b_unreliable.begin(), x.b_unreliable.end(), k) == x.b_unreliable.end()) CHECK(x.b[k] == y.b[k]);
      }
    }
  // ZOnly graph whose zero edges form a forest: the same formulas apply
  GainGraph z(3, 2);
  z.add_edge(1, 2, 0);
  z.add_edge(2, 3, 0);
  z.add_edge(1, 3, 5);
  z.add_edge(1, 3, 7);
  CHECK(forest_counts(z, 2).f == whitney_counts(z, 2).f);
}

TEST_CASE("Renyi forest sum") {
  CHECK(renyi_forest_count(4, 3) == 16);
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto F = oracle::forest_numbers(family("contrabalanced", n, 1, 1, m));
      for (int i = 0; i < n; ++i) CHECK(renyi_forest_count(n, i, m) == F[n - i]);
    }
  // the shortcut formula m^3 C(n,3) (n^2 - 5n - 12) / 8 is negative at n = 4
  Rational shortcut = Rational(binomial(4, 3)) * Rational(16 - 20 - 12) / 8;
  CHECK(shortcut == -8);
  CHECK(Rational(renyi_forest_count(4, 3)) != shortcut);
}

TEST_CASE("planar closed form") {
  auto r = planar_counts(9, 27, 1);
  CHECK(r.f[2] == 36);
  CHECK(r.b[2] == 18);
  CHECK(r.a == ints({25, 9, 1}));
  auto e = planar_counts(0, 0, 0);
  CHECK(e.f == ints({0, 0, 1}));
  CHECK(e.b == ints({0, 0, 1}));
  CHECK(e.a == ints({0, 0, 1}));
  CHECK_THROWS_AS(planar_counts(3, 1, 1), std::invalid_argument);

  // t counts balanced triangles (Exact), t0 zero triangles (ZOnly)
  std::mt19937_64 rng(43);
  for (int it = 0; it < 50; ++it) {
    auto g = oracle::random_graph(rng, 3 + it % 3, 10);
    auto st = planar_statistics(g);
    CHECK(planar_counts(st.q, st.s2, st.t) == whitney_counts(g, 2));
    g.set_alpha(2);
    CHECK(planar_counts(st.q, st.s2, st.t0) == whitney_counts(g, 2));
  }
}

TEST_CASE("composed partitions") {
  for (auto [n, k] : {std::pair{3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
    auto c = composed_partition_chi(n, k);
    CHECK(c.chi_b == Polynomial::lambda() * falling_factorial_poly(n * k + 1, n - 1));
    CHECK(c.chi_b == chi_of(family("odd", n, k)));
    CHECK(c.chi_lift == (Polynomial::lambda() - Polynomial::constant(1)) * falling_factorial_poly(n * k + 1, n - 1));
  }
  for (int n = 1; n <= 4; ++n) CHECK(composed_partition_chi(n, 0).chi_b == falling_factorial_poly(0, n));
}

TEST_CASE("no-bisector family") {
  CHECK(no_bisector_chi(1, 1) == Polynomial::lambda());
  CHECK(no_bisector_chi(2, 1) == P({0, -2, 1}));
  CHECK(no_bisector_chi(3, 1) == P({0, 12, -6, 1}));
  CHECK(no_bisector_chi(4, 1) == P({0, -110, 60, -12, 1}));
  for (int k = 1; k <= 2; ++k)
    for (int n = 1; n <= 4; ++n) {
      auto g = family("no_bisector", n, k);
      auto chi = no_bisector_chi(n, k);
      CHECK(chi == chi_of(g));
      if (n <= 3) CHECK(chi == oracle::chromatic_by_coloring(g));
    }
  // planar truncation of {±1,±2}K_4
  CHECK(no_bisector_chi(4, 2).polynomial_part_div(2) == P({216, -24, 1}));
  // {±1}K_3 in the plane has 19 regions
  CHECK(no_bisector_chi(3, 1).polynomial_part_div(1).eval(-1) == 19);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 2; ++k) CHECK(composed_chi_via_egf(n, k) == composed_partition_chi(n, k).chi_b);
  CHECK_THROWS(no_bisector_chi(9, 1, 8));
}

TEST_CASE("balanced triangles of the no-bisector family") {
  // 3k(k-1) per vertex triple; the planar polynomial's constant is s2 - t
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      auto st = planar_statistics(family("no_bisector", n, k));
      CHECK(st.t == 3 * k * (k - 1) * binomial(n, 3));
      CHECK(st.s2 - st.t == 3 * k * (k * n + 1) * binomial(n, 3));
    }
}

TEST_CASE("even family") {
  for (int n = 1; n <= 4; ++n) {
    auto e = even_case_chi(n, 1);
    CHECK(e.p * Polynomial::lambda() == no_bisector_chi(n, 1));
  }
  CHECK(even_case_chi(1, 3).p == even_case_chi(1, 3).p0);
  CHECK(even_case_chi(3, 2).p == P({48, -12, 1}));
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k) CHECK(even_case_chi(n, k).p * Polynomial::lambda() == chi_of(family("even", n, k)));
}

TEST_CASE("fat forests") {
  CHECK(fat_forest_whitney(2, 1).w == ints({1, -2}));
  for (auto [n, M] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}}) {
    auto f = fat_forest_whitney(n, M);
    auto g = family("fat", n, 1, M);
    auto t = mobius_table(enumerate_flats(g, BalanceMode::Exact, n - 1));
    CHECK(f.w == t.w);
    CHECK(f.W == t.W);
    CHECK(f.W_top == t.W[n - 1]);
    // the same graph read with alpha != 0: only the zero edges may close circles
    g.set_alpha(2);
    CHECK(mobius_table(enumerate_flats(g, BalanceMode::ZOnly, n - 1)).w == f.w);
  }
  CHECK(planar_counts(6, 12, 1).f[2] == 18);
}

TEST_CASE("families") {
  auto k4 = family("bisectors", 4);
  CHECK(k4.edges().size() == 6);
  for (const Edge& e : k4.edges()) CHECK(e.gain == 0);
  CHECK(family("odd", 4, 2).edges().size() == 30);
  CHECK(family("catalan", 3).edges().size() == 9);
  CHECK_THROWS_AS(family("nonsense", 3), std::invalid_argument);
  CHECK_THROWS_AS(family("odd", 0), std::invalid_argument);

  auto c = family("contrabalanced", 4, 1, 1, 3);
  CHECK_FALSE(has_balanced_circle(c));
  CHECK(family("contrabalanced", 4, 1, 1, 3).edges()[5].gain == c.edges()[5].gain);  // deterministic

  auto pd = family("power_diagram", 4);
  CHECK(is_balanced(pd, pd.edge_ids(), BalanceMode::Exact).balanced);
  FamilySpec w{"power_diagram", 3};
  w.weights = {1, 2, 4};
  auto pw = make_family(w);
  CHECK(pw.edges()[0].gain == 1);  // 0 - 1 + 2
}

TEST_CASE("reports satisfy the evaluation identities") {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + it % 4;
    auto g = oracle::random_graph(rng, n, 10, it % 2 ? 2 : 0);
    for (int d = 1; d <= n; ++d) {
      auto r = whitney_counts(g, d);
      check_evaluations(r);
      Integer fsum = 0;
      for (int k = 0; k <= d; ++k) fsum += r.f[k] * ((d - k) % 2 ? -1 : 1);
      CHECK(fsum == 1);  // Euler characteristic of the space
    }
  }
}
