#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gspec {

using Rational = mpq_class;

// Dense polynomial, coefficients in ascending degree order.
// The zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : c_(c) { normalize(); }
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { normalize(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(int k, const T& v = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    c.back() = v;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : T(0);
  }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  template <class U>
  U operator()(const U& x) const {
    U acc = U(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> c = c_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using RealPolynomial = Polynomial<double>;
using RationalPolynomial = Polynomial<Rational>;

// Long division a = q*b + r with deg r < deg b.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<T>{}, a};
  std::vector<T> r = a.coeffs();
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
  for (int i = a.degree() - db; i >= 0; --i) {
    T f = r[i + db] / b.leading();
    q[i] = f;
    for (int j = 0; j < db; ++j) r[i + j] -= f * b.coeffs()[j];
    r[i + db] = T(0);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

// x^d * p(x + 1/x) with d = deg p, a polynomial of degree 2d.
template <class T>
Polynomial<T> joukowski_clear(const Polynomial<T>& p, int d) {
  if (p.is_zero()) return {};
  if (d < p.degree()) throw std::invalid_argument("joukowski_clear: shift below degree");
  const Polynomial<T> s{T(1), T(0), T(1)};
  Polynomial<T> acc;
  Polynomial<T> pw = Polynomial<T>::constant(T(1));
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) != T(0)) acc += Polynomial<T>::monomial(d - k, p.coeff(k)) * pw;
    pw = pw * s;
  }
  return acc;
}

template <class T>
Polynomial<T> chebyshev_t_as(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_t: n must be >= 0");
  Polynomial<T> a = Polynomial<T>::constant(T(1));
  if (n == 0) return a;
  Polynomial<T> b = Polynomial<T>::monomial(1);
  const Polynomial<T> two_x = Polynomial<T>::monomial(1, T(2));
  for (int k = 1; k < n; ++k) {
    Polynomial<T> c = two_x * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

template <class T>
Polynomial<T> chebyshev_u_as(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_u: n must be >= 0");
  Polynomial<T> a = Polynomial<T>::constant(T(1));
  if (n == 0) return a;
  Polynomial<T> b = Polynomial<T>::monomial(1, T(2));
  const Polynomial<T> two_x = Polynomial<T>::monomial(1, T(2));
  for (int k = 1; k < n; ++k) {
    Polynomial<T> c = two_x * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

// p(c x)
template <class T>
Polynomial<T> scale_argument(const Polynomial<T>& p, const T& c) {
  std::vector<T> out = p.coeffs();
  T f = T(1);
  for (auto& v : out) {
    v *= f;
    f *= c;
  }
  return Polynomial<T>(std::move(out));
}

RealPolynomial chebyshev_t(int n);
RealPolynomial chebyshev_u(int n);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};
Interval make_interval(double lo, double hi);

struct Root {
  double value = 0.0;
  int multiplicity = 1;
};

struct RootIsolation {
  std::vector<Root> roots;             // strictly inside, away from the endpoints
  std::vector<Root> boundary_suspect;  // within tol of an endpoint
};

inline constexpr double kDefaultRootTol = 1e-11;

int descartes_bound(const RealPolynomial& p);

RootIsolation real_roots_in_interval(const RealPolynomial& p, Interval iv,
                                     double tol = kDefaultRootTol);
RootIsolation real_roots_in_interval(const RationalPolynomial& p, Interval iv,
                                     double tol = kDefaultRootTol);

// Factors f_i with p = c * prod f_i^i, each f_i square-free and monic.
std::vector<std::pair<RationalPolynomial, int>> square_free_decomposition(const RationalPolynomial& p);
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

double joukowski(double z);
std::complex<double> joukowski(std::complex<double> z);
double joukowski_inverse_in_disk(double lambda);

Rational exact_rational(double x);
// Small-denominator rational r with |r - x| <= rel_tol * max(1,|x|); rel_tol = 0
// asks that r rounds to x exactly.
std::optional<Rational> recognize_rational(double x, double rel_tol = 0.0,
                                           long max_den = 1000000);
RationalPolynomial to_rational(const RealPolynomial& p);
RealPolynomial to_real(const RationalPolynomial& p);
double to_double(const Rational& q);

using RationalMatrix = std::vector<std::vector<Rational>>;

RealPolynomial characteristic_polynomial(const Eigen::MatrixXd& m);
std::optional<RationalPolynomial> characteristic_polynomial_exact(const Eigen::MatrixXd& m);
RationalPolynomial characteristic_polynomial(const RationalMatrix& m);

// Largest coefficient difference, used for polynomial identity checks.
double max_coeff_diff(const RealPolynomial& a, const RealPolynomial& b);
double max_abs_coeff(const RealPolynomial& p);

}  // namespace gspec
