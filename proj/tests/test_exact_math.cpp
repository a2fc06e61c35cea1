#include "perpdiss/exact_math.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace perpdiss;

namespace {
Rational R(const char* s) { return parse_rational(s); }
Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.push_back(Rational(x));
  return Polynomial(v);
}
}  // namespace

TEST_CASE("parse_rational canonicalizes and rejects junk") {
  CHECK(R("3/6") == frac(1, 2));
  CHECK(R("-4") == -4);
  CHECK(R("+2/4") == frac(1, 2));
  CHECK(R("-6/4").get_den() == 2);
  for (const char* bad : {"", "1/0", "a", "1/-2", "/3", "3/", "1.5", "-"}) CHECK_THROWS_AS(R(bad), std::invalid_argument);
  CHECK(to_string(frac(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
}

TEST_CASE("rational arithmetic agrees with integer cross-multiplication") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int it = 0; it < 1000; ++it) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational s = frac(a, b) + frac(c, d);
    CHECK(s == frac(a * d + c * b, b * d));
    CHECK(s.get_num() * (b * d) == Integer(a * d + c * b) * s.get_den());
  }
}

TEST_CASE("polynomial basics") {
  Polynomial p = P({8, -5, 1});
  CHECK(p.degree() == 2);
  CHECK(Polynomial().degree() == -1);
  CHECK(p.eval(-1) == 14);
  CHECK(p.eval(1) == 4);
  CHECK(p.to_text() == "λ^2 - 5λ + 8");
  CHECK(P({0, -1}).to_text() == "-λ");
  CHECK((p - p).is_zero());
  CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
  CHECK(P({-4, 8, -5, 1}).polynomial_part_div(1) == P({8, -5, 1}));
  CHECK(P({1, 2}).polynomial_part_div(-2) == P({0, 0, 1, 2}));
  CHECK(P({1, 2}).polynomial_part_div(5).is_zero());
}

TEST_CASE("falling factorials") {
  CHECK(falling_factorial_poly(9, 3) == P({-990, 299, -30, 1}));
  CHECK(falling_factorial_poly(0, 0) == P({1}));
  CHECK(falling_factorial_poly(4, 2) == P({20, -9, 1}));
  for (long a = -3; a <= 5; ++a)
    for (long r = 1; r <= 5; ++r) CHECK(falling_factorial_poly(a, r).eval(a) == 0);
}

TEST_CASE("rref examples") {
  RationalMatrix id({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = rref(id);
  CHECK(r.rank == 3);
  CHECK(r.matrix == id);
  auto d = rref(RationalMatrix({{1, 2}, {2, 4}}));
  CHECK(d.rank == 1);
  CHECK(d.matrix == RationalMatrix({{1, 2}, {0, 0}}));
  auto s = rref(RationalMatrix({{0, 1}, {1, 0}}));
  CHECK(s.rank == 2);
  CHECK(s.matrix == RationalMatrix({{1, 0}, {0, 1}}));
}

TEST_CASE("rref is idempotent and invariant under row shuffles") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 6), cols(1, 8), val(-3, 3), zero(0, 2);
  for (int it = 0; it < 200; ++it) {
    const int r = dim(rng), c = cols(rng);
    std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c));
    for (auto& row : rows)
      for (auto& x : row) x = zero(rng) == 0 ? Rational(0) : frac(val(rng), 1 + zero(rng));
    auto a = rref(RationalMatrix(rows));
    CHECK(rref(a.matrix).matrix == a.matrix);
    std::shuffle(rows.begin(), rows.end(), rng);
    auto b = rref(RationalMatrix(rows));
    CHECK(b.matrix == a.matrix);
    CHECK(b.rank == a.rank);
  }
}

TEST_CASE("stirling numbers, bell, catalan, binomials") {
  CHECK(stirling(StirlingKind::First, 4, 2) == 11);
  CHECK(stirling(StirlingKind::Second, 4, 2) == 7);
  CHECK(stirling(StirlingKind::First, 3, 3) == 1);
  CHECK(stirling(StirlingKind::First, 4, 3) == -6);
  CHECK(stirling(StirlingKind::Second, 3, 5) == 0);
  for (long n = 0; n <= 10; ++n) {
    Integer sum_first = 0, sum_second = 0;
    for (long k = 0; k <= n; ++k) {
      sum_first += abs(stirling(StirlingKind::First, n, k));
      sum_second += stirling(StirlingKind::Second, n, k);
    }
    CHECK(sum_first == factorial(n));
    CHECK(sum_second == bell(n));
    // the two kinds are inverse matrices
    for (long m = 0; m <= n; ++m) {
      Integer s = 0;
      for (long k = m; k <= n; ++k) s += stirling(StirlingKind::First, n, k) * stirling(StirlingKind::Second, k, m);
      CHECK(s == (m == n ? 1 : 0));
    }
  }
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(bell(5) == 52);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(frac(-1, 2), 2) == frac(3, 8));
  CHECK(binomial(Rational(-3), 2) == 6);
}

TEST_CASE("exponential of an integrated series") {
  PolySeries one(1);
  one[0] = Polynomial::constant(1);
  auto e = series_exp_of_integral(one, Polynomial::lambda());
  CHECK(e.order() == 2);
  CHECK(e[0].is_zero());
  CHECK(e[1] == P({0, 1}));
  CHECK(e[2] == Polynomial({0, 0, frac(1, 2)}));

  auto z = series_exp_of_integral(one, Polynomial());
  for (std::size_t m = 0; m <= z.order(); ++m) CHECK(z[m].is_zero());

  // exp(lambda z) through order 6: coefficient lambda^m / m!
  PolySeries longer(5);
  longer[0] = Polynomial::constant(1);
  auto e6 = series_exp_of_integral(longer, Polynomial::lambda());
  for (int m = 1; m <= 6; ++m) CHECK(e6[m] == Polynomial::lambda().polynomial_part_div(-(m - 1)) * frac(1, factorial(m)));
}

TEST_CASE("bivariate polynomial drops cancelled terms") {
  BivariatePolynomial b;
  b.add(1, 2, 3);
  b.add(1, 2, -3);
  CHECK(b.terms().empty());
  b.add(0, 1, frac(1, 2));
  CHECK(b.coeff(0, 1) == frac(1, 2));
}
