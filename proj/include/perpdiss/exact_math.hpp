#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace perpdiss {

using Integer = mpz_class;
using Rational = mpq_class;

// a/b in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational frac(const Integer& a, const Integer& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q"; result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial lambda();  // the variable itself

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  // Drops terms of degree < m and divides by lambda^m; m < 0 multiplies.
  Polynomial polynomial_part_div(int m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Human notation in lambda, highest degree first.
  std::string to_text(const char* var = "λ") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

class BivariatePolynomial {
 public:
  void add(int xdeg, int ldeg, const Rational& v);
  Rational coeff(int xdeg, int ldeg) const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return t_; }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.t_ == b.t_;
  }

 private:
  std::map<std::pair<int, int>, Rational> t_;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& row);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const RationalMatrix& m);

// Truncated power series in z with polynomial-in-lambda coefficients.
class PolySeries {
 public:
  explicit PolySeries(std::size_t order = 8) : c_(order + 1) {}
  std::size_t order() const { return c_.size() - 1; }
  Polynomial& operator[](std::size_t i) { return c_[i]; }
  const Polynomial& operator[](std::size_t i) const { return c_[i]; }
  friend bool operator==(const PolySeries& a, const PolySeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Polynomial> c_;
};

// exp(scale * integral(fprime)) - 1, with zero constant of integration.
// Result order is fprime.order() + 1.
PolySeries series_exp_of_integral(const PolySeries& fprime, const Polynomial& scale);

enum class StirlingKind { First, Second };

// Signed first kind; out-of-range arguments give 0.
Integer stirling(StirlingKind kind, long n, long k);
Integer binomial(long n, long k);
// binom(x, k) for rational (possibly negative) x.
Rational binomial(const Rational& x, long k);
Integer factorial(long n);
Integer catalan(long n);
Integer bell(long n);

// (lambda - a)(lambda - a - 1)...(lambda - a - r + 1)
Polynomial falling_factorial_poly(const Rational& a, long r);
// (x)(x - 1)...(x - r + 1) for a polynomial x
Polynomial falling_factorial(const Polynomial& x, long r);

}  // namespace perpdiss
