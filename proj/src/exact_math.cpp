#include "perpdiss/exact_math.hpp"

#include <sstream>
#include <stdexcept>

namespace perpdiss {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational: \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  Integer n(num), d(den);
  if (d == 0) throw bad();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }
Polynomial Polynomial::lambda() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::polynomial_part_div(int m) const {
  if (m <= 0) {
    std::vector<Rational> out(static_cast<std::size_t>(-m), Rational(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return Polynomial(std::move(out));
  }
  if (m >= static_cast<int>(c_.size())) return Polynomial();
  return Polynomial(std::vector<Rational>(c_.begin() + m, c_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

std::string Polynomial::to_text(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

// ------------------------------------------------------- BivariatePolynomial

void BivariatePolynomial::add(int xdeg, int ldeg, const Rational& v) {
  auto key = std::make_pair(xdeg, ldeg);
  Rational nv = coeff(xdeg, ldeg) + v;
  if (nv == 0)
    t_.erase(key);
  else
    t_[key] = nv;
}

Rational BivariatePolynomial::coeff(int xdeg, int ldeg) const {
  auto it = t_.find({xdeg, ldeg});
  return it == t_.end() ? Rational(0) : it->second;
}

// ------------------------------------------------------------ RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows[0].size();
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return std::vector<Rational>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  e_.insert(e_.end(), row.begin(), row.end());
  ++rows_;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult res{m, 0, {}};
  RationalMatrix& a = res.matrix;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(p, k), a.at(r, k));
    Rational inv = 1 / a.at(r, c);
    for (std::size_t k = c; k < a.cols(); ++k) a.at(r, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c);
      for (std::size_t k = c; k < a.cols(); ++k) a.at(i, k) -= f * a.at(r, k);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

// ---------------------------------------------------------------- PolySeries

PolySeries series_exp_of_integral(const PolySeries& fprime, const Polynomial& scale) {
  const std::size_t n = fprime.order() + 1;
  // g = scale * integral(fprime); G = exp(g) satisfies m G_m = sum_k k g_k G_{m-k}.
  std::vector<Polynomial> g(n + 1);
  for (std::size_t k = 1; k <= n; ++k) g[k] = scale * fprime[k - 1] * frac(1, k);
  PolySeries out(n);
  std::vector<Polynomial> G(n + 1);
  G[0] = Polynomial::constant(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial acc;
    for (std::size_t k = 1; k <= m; ++k) acc += g[k] * G[m - k] * Rational(k);
    G[m] = acc * frac(1, m);
    out[m] = G[m];
  }
  return out;
}

// ------------------------------------------------------------- combinatorics

Integer stirling(StirlingKind kind, long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Integer> row(n + 1, Integer(0)), next(n + 1);
  row[0] = 1;
  for (long m = 1; m <= n; ++m) {
    next.assign(n + 1, Integer(0));
    for (long j = 1; j <= m; ++j) {
      if (kind == StirlingKind::First)
        next[j] = row[j - 1] - Integer(m - 1) * row[j];
      else
        next[j] = row[j - 1] + Integer(j) * row[j];
    }
    row.swap(next);
  }
  return row[k];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= (x - i);
  r /= Rational(factorial(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) return 0;
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer catalan(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / Integer(n + 1);
}

Integer bell(long n) {
  Integer s = 0;
  for (long k = 0; k <= n; ++k) s += stirling(StirlingKind::Second, n, k);
  return s;
}

Polynomial falling_factorial_poly(const Rational& a, long r) {
  return falling_factorial(Polynomial::lambda() - Polynomial::constant(a), r);
}

Polynomial falling_factorial(const Polynomial& x, long r) {
  Polynomial p = Polynomial::constant(1);
  for (long i = 0; i < r; ++i) p *= x - Polynomial::constant(i);
  return p;
}

}  // namespace perpdiss
