#include "gspec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gspec {

RealPolynomial chebyshev_t(int n) { return chebyshev_t_as<double>(n); }
RealPolynomial chebyshev_u(int n) { return chebyshev_u_as<double>(n); }

Interval make_interval(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi)
    throw std::invalid_argument("interval requires lo <= hi");
  return {lo, hi};
}

int descartes_bound(const RealPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("indeterminate sign count");
  int changes = 0;
  int last = 0;
  for (double c : p.coeffs()) {
    if (c == 0.0) continue;
    const int s = c > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

double joukowski(double z) {
  if (z == 0.0) throw std::domain_error("joukowski map undefined at z = 0");
  return z + 1.0 / z;
}

std::complex<double> joukowski(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0))
    throw std::domain_error("joukowski map undefined at z = 0");
  return z + 1.0 / z;
}

double joukowski_inverse_in_disk(double lambda) {
  if (!(std::abs(lambda) > 2.0))
    throw std::domain_error("inside essential spectrum, no disk preimage on reals");
  const double s = lambda > 0 ? 1.0 : -1.0;
  // small root of z^2 - lambda z + 1, written to avoid cancellation
  return 2.0 / (lambda + s * std::sqrt((lambda - 2.0) * (lambda + 2.0)));
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
  return Rational(x);
}

double to_double(const Rational& q) { return q.get_d(); }

std::optional<Rational> recognize_rational(double x, double rel_tol, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  if (x == std::trunc(x) && std::abs(x) < 9007199254740992.0) return Rational(x);
  const Rational exact = exact_rational(x);
  // continued fraction of the exact binary value
  mpz_class num = exact.get_num(), den = exact.get_den();
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  const double scale = std::max(1.0, std::abs(x));
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpz_class r = num - a * den;
    num = den;
    den = r;
    const Rational cand(p1, q1);
    if (rel_tol == 0.0) {
      if (abs(p1) < mpz_class("9007199254740992") &&
          p1.get_d() / q1.get_d() == x)
        return cand;
    } else if (std::abs(to_double(cand - exact)) <= rel_tol * scale) {
      return cand;
    }
  }
  return std::nullopt;
}

RationalPolynomial to_rational(const RealPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (double v : p.coeffs()) c.push_back(exact_rational(v));
  return RationalPolynomial(std::move(c));
}

RealPolynomial to_real(const RationalPolynomial& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(to_double(v));
  return RealPolynomial(std::move(c));
}

double max_abs_coeff(const RealPolynomial& p) {
  double m = 0.0;
  for (double c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double max_coeff_diff(const RealPolynomial& a, const RealPolynomial& b) {
  double m = 0.0;
  const int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return m;
}

namespace {

RationalPolynomial make_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

// Positive rescaling to coprime integer coefficients; signs are unchanged.
RationalPolynomial primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    Rational t = c * l;
    mpz_class v = t.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational f(l, g);
  f.canonicalize();
  return p * f;
}

int sign_at(const RationalPolynomial& p, const Rational& x) { return sgn(p(x)); }

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& f) {
  std::vector<RationalPolynomial> s{primitive_part(f), primitive_part(f.derivative())};
  while (!s.back().is_zero() && s.back().degree() > 0) {
    auto r = divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(primitive_part(-r));
  }
  return s;
}

int sign_changes(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

class Isolator {
 public:
  explicit Isolator(const RationalPolynomial& f) : f_(primitive_part(f)), chain_(sturm_chain(f)) {}

  // Roots of f in (a, b]; f(a) != 0 required.
  void run(const Rational& a, const Rational& b, std::vector<Rational>& lo,
           std::vector<Rational>& hi) {
    const int n = sign_changes(chain_, a) - sign_changes(chain_, b);
    split(a, b, n, lo, hi);
  }

  // Bisect an isolating interval (a, b] down to double resolution.
  double refine(Rational a, Rational b) const {
    if (sign_at(f_, b) == 0) return to_double(b);
    const int sa = -sign_at(f_, b);
    for (int it = 0; it < 4000; ++it) {
      if (to_double(a) == to_double(b)) break;
      if (to_double(b - a) < 1e-300) break;
      Rational m = (a + b) / 2;
      const int sm = sign_at(f_, m);
      if (sm == 0) return to_double(m);
      if (sm == sa) a = m; else b = m;
    }
    return to_double((a + b) / 2);
  }

 private:
  void split(const Rational& a, const Rational& b, int n, std::vector<Rational>& lo,
             std::vector<Rational>& hi) {
    if (n <= 0) return;
    if (n == 1) {
      lo.push_back(a);
      hi.push_back(b);
      return;
    }
    Rational m = (a + b) / 2;
    if (sign_at(f_, m) == 0) {
      // m is a root; carve a root-free neighbourhood around it
      Rational d = (b - a) / 4;
      while (sign_changes(chain_, m - d) - sign_changes(chain_, m + d) != 1) d /= 2;
      lo.push_back(m - d);
      hi.push_back(m);
      const int left = sign_changes(chain_, a) - sign_changes(chain_, m - d);
      const int right = sign_changes(chain_, m + d) - sign_changes(chain_, b);
      split(a, m - d, left, lo, hi);
      split(m + d, b, right, lo, hi);
      return;
    }
    const int vm = sign_changes(chain_, m);
    split(a, m, sign_changes(chain_, a) - vm, lo, hi);
    split(m, b, vm - sign_changes(chain_, b), lo, hi);
  }

  RationalPolynomial f_;
  std::vector<RationalPolynomial> chain_;
};

double cauchy_bound(const RationalPolynomial& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k) / p.leading());
    if (r > m) m = r;
  }
  return 1.0 + to_double(m) + 1.0;
}

}  // namespace

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  return make_monic(a);
}

std::vector<std::pair<RationalPolynomial, int>> square_free_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<std::pair<RationalPolynomial, int>> out;
  if (p.degree() == 0) return out;
  RationalPolynomial f = make_monic(p);
  RationalPolynomial c = gcd(f, f.derivative());
  RationalPolynomial w = make_monic(divmod(f, c).first);
  int i = 1;
  while (c.degree() > 0) {
    RationalPolynomial y = gcd(w, c);
    RationalPolynomial z = make_monic(divmod(w, y).first);
    if (z.degree() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = make_monic(divmod(c, y).first);
  }
  if (w.degree() > 0) out.emplace_back(w, i);
  return out;
}

RootIsolation real_roots_in_interval(const RationalPolynomial& p, Interval iv, double tol) {
  if (p.is_zero()) throw std::domain_error("root search on the zero polynomial");
  if (!(tol > 0)) throw std::invalid_argument("root tolerance must be positive");
  if (std::isnan(iv.lo) || std::isnan(iv.hi) || iv.lo > iv.hi)
    throw std::invalid_argument("interval requires lo <= hi");
  RootIsolation out;
  if (p.degree() == 0) return out;

  const double bound = cauchy_bound(p);
  const double lo = std::isfinite(iv.lo) ? iv.lo : -bound;
  const double hi = std::isfinite(iv.hi) ? iv.hi : bound;
  if (lo - tol > hi + tol) return out;

  std::vector<std::pair<double, int>> found;
  for (const auto& [f, mult] : square_free_decomposition(p)) {
    Rational a = exact_rational(lo) - exact_rational(tol);
    Rational b = exact_rational(hi) + exact_rational(tol);
    Rational step = exact_rational(tol) / 2;
    while (sgn(f(a)) == 0) a -= step;
    Isolator iso(f);
    std::vector<Rational> los, his;
    iso.run(a, b, los, his);
    for (std::size_t k = 0; k < los.size(); ++k) found.emplace_back(iso.refine(los[k], his[k]), mult);
  }
  std::sort(found.begin(), found.end());
  const bool open_lo = std::isfinite(iv.lo), open_hi = std::isfinite(iv.hi);
  for (const auto& [r, m] : found) {
    const bool near_lo = open_lo && r <= iv.lo + tol;
    const bool near_hi = open_hi && r >= iv.hi - tol;
    if (near_lo || near_hi)
      out.boundary_suspect.push_back({r, m});
    else
      out.roots.push_back({r, m});
  }
  return out;
}

RootIsolation real_roots_in_interval(const RealPolynomial& p, Interval iv, double tol) {
  if (p.is_zero()) throw std::domain_error("root search on the zero polynomial");
  return real_roots_in_interval(to_rational(p), iv, tol);
}

RationalPolynomial characteristic_polynomial(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  // Faddeev-LeVerrier; A is usually sparse so products skip zeros
  std::vector<std::vector<std::pair<std::size_t, Rational>>> nz(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != 0) nz[i].emplace_back(j, m[i][j]);
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix am(n, std::vector<Rational>(n, Rational(0)));  // A * M_k
  RationalMatrix mk(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      mk[i] = am[i];
      mk[i][i] += c[n - k + 1];
    }
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (const auto& [l, v] : nz[i]) s += v * mk[l][j];
        am[i][j] = s;
      }
      tr += am[i][i];
    }
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return RationalPolynomial(std::move(c));
}

namespace {

void check_symmetric_square(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("matrix is not symmetric");
}

constexpr long kExactMaxOrder = 64;

}  // namespace

std::optional<RationalPolynomial> characteristic_polynomial_exact(const Eigen::MatrixXd& m) {
  check_symmetric_square(m);
  if (m.rows() > kExactMaxOrder) return std::nullopt;
  const auto n = static_cast<std::size_t>(m.rows());
  RationalMatrix q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto r = recognize_rational(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      if (!r) return std::nullopt;
      q[i][j] = *r;
    }
  return characteristic_polynomial(q);
}

RealPolynomial characteristic_polynomial(const Eigen::MatrixXd& m) {
  if (auto exact = characteristic_polynomial_exact(m)) return to_real(*exact);
  const Eigen::Index n = m.rows();
  // det(xI - M) sampled at n+1 Chebyshev points of [-R, R], expanded in T_k
  const double radius = std::max(1.0, m.cwiseAbs().rowwise().sum().maxCoeff());
  std::vector<double> s(n + 1), f(n + 1);
  for (Eigen::Index j = 0; j <= n; ++j) {
    s[j] = std::cos(std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(n + 1));
    Eigen::MatrixXd shifted = -m / radius;
    shifted.diagonal().array() += s[j];
    f[j] = shifted.partialPivLu().determinant();
  }
  RealPolynomial in_s;
  for (Eigen::Index k = 0; k <= n; ++k) {
    double ck = 0.0;
    for (Eigen::Index j = 0; j <= n; ++j)
      ck += f[j] * std::cos(static_cast<double>(k) * std::numbers::pi * (static_cast<double>(j) + 0.5) /
                            static_cast<double>(n + 1));
    ck *= (k == 0 ? 1.0 : 2.0) / static_cast<double>(n + 1);
    in_s += chebyshev_t(static_cast<int>(k)) * ck;
  }
  // undo the scaling x = R s, det(xI - M) = R^n det(sI - M/R)
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (Eigen::Index k = 0; k <= n; ++k)
    c[k] = in_s.coeff(static_cast<int>(k)) * std::pow(radius, static_cast<double>(n - k));
  c[n] = 1.0;
  return RealPolynomial(std::move(c));
}

}  // namespace gspec
