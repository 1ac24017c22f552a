#include "gspec/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gspec {

double JacobiComponent::b_at(int n) const {
  return shift + std::visit([n](const auto& j) { return j.b_at(n); }, op);
}

double JacobiComponent::a_at(int n) const {
  return std::visit([n](const auto& j) { return j.a_at(n); }, op);
}

namespace {

void require_symmetric(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("adjacency matrix must be square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("adjacency matrix must be symmetric");
}

std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + m.rows()};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

CanonicalForm reduce_single_tail(const Eigen::MatrixXd& a, const TailSpec& tail) {
  require_symmetric(a);
  const int n = static_cast<int>(a.rows());
  if (tail.attach < 1 || tail.attach > n) throw std::invalid_argument("tail attach vertex is not in the graph");
  if (!(tail.bridge > 0)) throw std::invalid_argument("tail bridge weight must be positive");

  const double norm = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
  const double breakdown = kBreakdownTol * norm;
  Eigen::MatrixXd q(n, n);
  std::vector<double> alpha, beta;
  q.col(0).setZero();
  q(tail.attach - 1, 0) = 1.0;
  int k = 1;
  for (;; ++k) {
    Eigen::VectorXd w = a * q.col(k - 1);
    alpha.push_back(q.col(k - 1).dot(w));
    // two passes of classical Gram-Schmidt against the whole basis
    for (int pass = 0; pass < 2; ++pass) w -= q.leftCols(k) * (q.leftCols(k).transpose() * w);
    const double b = w.norm();
    if (k == n || b < breakdown) break;
    beta.push_back(b);
    q.col(k) = w / b;
  }

  CanonicalForm cf;
  cf.krylov_dimension = k;
  std::vector<double> jb(alpha.rbegin(), alpha.rend());
  std::vector<double> ja(beta.rbegin(), beta.rend());
  ja.push_back(tail.bridge);
  ja.insert(ja.end(), tail.tail_weights.begin(), tail.tail_weights.end());
  JacobiComponent comp;
  comp.op = FiniteRankJacobi(jb, ja);
  comp.label = "J";
  cf.jacobi_components.push_back(std::move(comp));

  if (k < n) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(q.leftCols(k));
    Eigen::MatrixXd full = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd c = full.rightCols(n - k);
    Eigen::MatrixXd f = c.transpose() * a * c;
    cf.finite_component = 0.5 * (f + f.transpose());
  } else {
    cf.finite_component.resize(0, 0);
  }
  if (n >= 2 && k == 1) cf.notes.push_back("finite component has dimension n-1 (attachment vertex is isolated)");
  return cf;
}

CanonicalForm reduce_single_tail(const WeightedGraph& g, const TailSpec& tail) {
  validate_tail(g, tail);
  CanonicalForm cf = reduce_single_tail(adjacency_matrix(g), tail);
  if (!g.is_connected()) cf.notes.push_back("finite graph is not connected");
  return cf;
}

CanonicalForm multi_ray_attach(const WeightedGraph& g, int v, int p) {
  if (p < 1) throw std::invalid_argument("number of rays must be >= 1");
  TailSpec t;
  t.attach = v;
  t.bridge = std::sqrt(static_cast<double>(p));
  CanonicalForm cf = reduce_single_tail(g, t);
  cf.free_copies = p - 1;
  return cf;
}

Spectrum component_spectrum(const JacobiComponent& c) {
  SpectrumBuilder sb;
  const double s = c.shift;
  const int m = c.multiplicity;
  if (const auto* fr = std::get_if<FiniteRankJacobi>(&c.op)) {
    sb.add_band({s - 2.0, s + 2.0}, m);
    const JostAnalysis ja = analyze_jost(*fr);
    for (const auto& e : ja.eigenvalues) sb.add_eigenvalue(s + e.lambda, m);
    for (double z : ja.resonances)
      sb.add_note("resonance of " + (c.label.empty() ? std::string("J") : c.label) + " at z = " + fmt(z) +
                  " (band edge " + fmt(s + joukowski(z)) + "), not an eigenvalue");
  } else {
    const auto& pj = std::get<PeriodicJacobi>(c.op);
    const BandStructure bs = essential_bands(pj);
    for (const auto& b : bs.bands) sb.add_band({s + b.lo, s + b.hi}, m);
    for (const auto& g : bs.gaps)
      if (!g.open) sb.add_note("closed gap at " + fmt(s + g.span.lo));
    for (const auto& r : classify_gap_roots(pj)) {
      switch (r.cls) {
        case GapRootClass::eigenvalue: sb.add_eigenvalue(s + r.lambda, m); break;
        case GapRootClass::edge:
          sb.add_note("root of p_N at gap edge " + fmt(s + r.lambda) + ", not an eigenvalue");
          break;
        case GapRootClass::indeterminate:
          sb.add_note("sign rule indeterminate at " + fmt(s + r.lambda) + " (gamma vanishes)");
          break;
        default: break;
      }
    }
  }
  return sb.build();
}

Spectrum spectrum_of_canonical(const CanonicalForm& cf) {
  SpectrumBuilder sb;
  for (double x : sym_eigenvalues(cf.finite_component)) sb.add_eigenvalue(x, 1);
  for (const auto& c : cf.jacobi_components) sb.merge(component_spectrum(c));
  for (const auto& r : cf.repeated_blocks) {
    std::vector<double> ev = sym_eigenvalues(r.block);
    for (double x : ev) sb.add_infinite_eigenvalue(x);
  }
  if (cf.free_copies > 0) sb.add_band({-2.0, 2.0}, cf.free_copies);
  for (const auto& n : cf.notes) sb.add_note(n);
  return sb.build();
}

Eigen::MatrixXd canonical_finite_section(const CanonicalForm& cf, int m) {
  if (cf.jacobi_components.size() != 1 || !cf.repeated_blocks.empty())
    throw std::invalid_argument("finite section of the canonical form needs exactly one Jacobi component");
  const int nf = static_cast<int>(cf.finite_component.rows());
  if (m < nf) throw std::invalid_argument("section smaller than the finite component");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  out.topLeftCorner(nf, nf) = cf.finite_component;
  const auto& c = cf.jacobi_components.front();
  for (int k = 1; k <= m - nf; ++k) {
    out(nf + k - 1, nf + k - 1) = c.b_at(k);
    if (k < m - nf) out(nf + k - 1, nf + k) = out(nf + k, nf + k - 1) = c.a_at(k);
  }
  return out;
}

RaysResult rays_at_every_vertex(const WeightedGraph& g, int p) {
  if (p < 1) throw std::invalid_argument("number of rays must be >= 1");
  if (!g.unit_weights()) throw std::invalid_argument("rays at every vertex requires an unweighted graph");
  RaysResult out;
  const double root_p = std::sqrt(static_cast<double>(p));
  for (double l : sym_eigenvalues(adjacency_matrix(g))) {
    JacobiComponent c;
    c.op = FiniteRankJacobi({l}, {root_p});
    c.label = "J(" + fmt(l) + ", sqrt p)";
    out.form.jacobi_components.push_back(std::move(c));
  }
  out.form.finite_component.resize(0, 0);
  out.form.free_copies = (p - 1) * g.order();
  out.spectrum = spectrum_of_canonical(out.form);
  return out;
}

ComponentClaim claim_jacobi(const JacobiComponent& c, std::function<SparseVector(int)> basis, int count) {
  ComponentClaim out;
  out.label = c.label;
  out.basis = std::move(basis);
  out.count = count;
  out.bandwidth = 1;
  out.entry = [c](int k, int j) {
    if (k == j) return c.b_at(k);
    if (std::abs(k - j) == 1) return c.a_at(std::min(k, j));
    return 0.0;
  };
  return out;
}

ComponentClaim claim_repeated(const RepeatedBlock& r, std::function<SparseVector(int)> basis, int count) {
  ComponentClaim out;
  out.label = r.label;
  out.basis = std::move(basis);
  out.count = count;
  const int s = static_cast<int>(r.block.rows());
  out.bandwidth = std::max(0, s - 1);
  Eigen::MatrixXd blk = r.block;
  out.entry = [blk, s](int k, int j) {
    if ((k - 1) / s != (j - 1) / s) return 0.0;
    return blk((k - 1) % s, (j - 1) % s);
  };
  return out;
}

ComponentClaim claim_finite(const std::string& label, const Eigen::MatrixXd& f, std::function<SparseVector(int)> basis) {
  ComponentClaim out;
  out.label = label;
  out.basis = std::move(basis);
  const int s = static_cast<int>(f.rows());
  out.count = s;
  out.bandwidth = s;
  Eigen::MatrixXd m = f;
  out.entry = [m, s](int k, int j) {
    if (k < 1 || j < 1 || k > s || j > s) return 0.0;
    return m(k - 1, j - 1);
  };
  return out;
}

VerifyReport verify_invariant_decomposition(const InvariantBasis& b, double tol) {
  const int n = b.window.order();
  const Eigen::MatrixXd a = adjacency_matrix(b.window);
  auto dense = [n](const SparseVector& v, const std::string& who) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    for (const auto& [id, c] : v) {
      if (id < 1 || id > n) throw std::invalid_argument("basis vector " + who + " leaves the window");
      d(id - 1) += c;
    }
    return d;
  };

  struct Item {
    std::string name;
    Eigen::VectorXd v;
  };
  std::vector<Item> all;
  for (const auto& c : b.components)
    for (int k = 1; k <= c.count; ++k) {
      const std::string name = c.label + "[" + std::to_string(k) + "]";
      all.push_back({name, dense(c.basis(k), name)});
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      const double g = all[i].v.dot(all[j].v);
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - want) > tol)
        throw std::invalid_argument("basis not orthonormal: <" + all[i].name + ", " + all[j].name + "> = " + fmt(g));
    }

  VerifyReport rep;
  rep.ok = true;
  for (const auto& c : b.components) {
    for (int k = 1; k <= c.count; ++k) {
      const std::string name = c.label + "[" + std::to_string(k) + "]";
      const SparseVector hv = c.basis(k);
      for (const auto& [id, coef] : hv) {
        (void)coef;
        if (id > b.interior) throw std::invalid_argument("basis vector " + name + " reaches past the interior of the window");
      }
      Eigen::VectorXd r = a * dense(hv, name);
      for (int j = std::max(1, k - c.bandwidth); j <= k + c.bandwidth; ++j) {
        const double e = c.entry(k, j);
        if (e != 0.0) r -= e * dense(c.basis(j), c.label + "[" + std::to_string(j) + "]");
      }
      const double res = r.cwiseAbs().maxCoeff();
      if (res > rep.max_residual) rep.max_residual = res;
      if (res > tol && rep.ok) {
        rep.ok = false;
        rep.detail = "action mismatch at " + name + " (residual " + fmt(res) + ")";
      }
    }
  }
  return rep;
}

}  // namespace gspec
