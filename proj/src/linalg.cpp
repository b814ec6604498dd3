#include "qmb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmb {

namespace {

double hermiticity_error(const ComplexMatrix& m) {
  double e = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      e = std::max(e, std::abs(m(i, j) - std::conj(m(j, i))));
  return e;
}

double symmetry_error(const RealMatrix& m) {
  double e = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j) e = std::max(e, std::abs(m(i, j) - m(j, i)));
  return e;
}

double antisymmetry_error(const RealMatrix& m) {
  double e = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j) e = std::max(e, std::abs(m(i, j) + m(j, i)));
  return e;
}

double validation_scale(double max_abs) { return tol::kValidation * std::max(1.0, max_abs); }

// Off-diagonal Frobenius norm, squared.
template <class T>
double off_diag_sq(const Matrix<T>& a) {
  double s = 0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = p + 1; q < a.cols(); ++q) s += 2.0 * std::norm(a(p, q));
  return s;
}

// Jacobi rotation parameter: smaller root of t^2 + 2 theta t - 1 = 0.
double jacobi_tangent(double theta) {
  if (std::abs(theta) > 1e150) return 0.5 / theta;
  const double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  return theta >= 0 ? t : -t;
}

void sort_ascending(std::vector<double>& vals, std::vector<int>& perm) {
  perm.resize(vals.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return vals[a] < vals[b]; });
  std::vector<double> sorted(vals.size());
  for (std::size_t i = 0; i < perm.size(); ++i) sorted[i] = vals[perm[i]];
  vals = std::move(sorted);
}

constexpr int kMaxSweeps = 100;

EighResult eigh_real_core(RealMatrix a) {
  const int n = a.rows();
  RealMatrix v = RealMatrix::identity(n);
  const double scale = a.frobenius_norm();
  const double target = scale > 0 ? 1e-28 * scale * scale : 0.0;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diag_sq(a) <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = jacobi_tangent(theta);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J = I + rotation in the (p,q) plane.
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = a(i, i);
  std::vector<int> perm;
  sort_ascending(vals, perm);
  RealMatrix vec(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) vec(i, j) = v(i, perm[j]);
  return {std::move(vals), std::move(vec)};
}

EighResultC eigh_hermitian_core(ComplexMatrix a) {
  const int n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();
  const double target = scale > 0 ? 1e-28 * scale * scale : 0.0;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diag_sq(a) <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx w = apq / mag;  // unit phase; rotation zeroes a(p,q)
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = jacobi_tangent(theta);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx sw = s * w;
        const cplx swc = s * std::conj(w);
        // U has U(p,p)=c, U(p,q)=-s w, U(q,p)=s conj(w), U(q,q)=c; A <- U^dag A U.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + swc * akq;
          a(k, q) = -sw * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + sw * aqk;
          a(q, k) = -swc * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + swc * vkq;
          v(k, q) = -sw * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = a(i, i).real();
  std::vector<int> perm;
  sort_ascending(vals, perm);
  ComplexMatrix vec(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) vec(i, j) = v(i, perm[j]);
  return {std::move(vals), std::move(vec)};
}

}  // namespace

DenseHermitian::DenseHermitian(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() < 1)
    throw std::invalid_argument("DenseHermitian: matrix must be square and non-empty");
  const double e = hermiticity_error(m_);
  if (e > validation_scale(m_.max_abs()))
    throw std::invalid_argument("DenseHermitian: matrix is not Hermitian (error " +
                                std::to_string(e) + ")");
}

RealSymmetric::RealSymmetric(RealMatrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() < 1)
    throw std::invalid_argument("RealSymmetric: matrix must be square and non-empty");
  const double e = symmetry_error(m_);
  if (e > validation_scale(m_.max_abs()))
    throw std::invalid_argument("RealSymmetric: matrix is not symmetric (error " +
                                std::to_string(e) + ")");
}

RealSymmetric RealSymmetric::symmetrized(const RealMatrix& m) {
  RealMatrix s(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
  return RealSymmetric(kUnchecked, std::move(s));
}

RealAntisymmetric::RealAntisymmetric(RealMatrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() < 2 || m_.rows() % 2 != 0)
    throw std::invalid_argument("RealAntisymmetric: dimension must be even and positive");
  const double e = antisymmetry_error(m_);
  if (e > validation_scale(m_.max_abs()))
    throw std::invalid_argument("RealAntisymmetric: matrix is not antisymmetric (error " +
                                std::to_string(e) + ")");
}

RealAntisymmetric RealAntisymmetric::antisymmetrized(const RealMatrix& m) {
  RealMatrix s(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s(i, j) = 0.5 * (m(i, j) - m(j, i));
  return RealAntisymmetric(kUnchecked, std::move(s));
}

EighResult eigh(const RealSymmetric& m) { return eigh_real_core(m.mat()); }

EighResultC eigh(const DenseHermitian& m) {
  // Real input is common (diagonal models, Richardson); the real path is
  // several times faster.
  if (max_imag_abs(m.mat()) <= tol::kValidation * std::max(1.0, m.mat().max_abs())) {
    EighResult r = eigh_real_core(real_part(m.mat()));
    return {std::move(r.eigenvalues), to_complex(r.eigenvectors)};
  }
  return eigh_hermitian_core(m.mat());
}

double operator_norm(const RealMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const RealMatrix g = m.transposed() * m;
  EighResult r = eigh_real_core(g);
  return std::sqrt(std::max(0.0, r.eigenvalues.back()));
}

double operator_norm(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const ComplexMatrix g = adjoint(m) * m;
  EighResultC r = eigh_hermitian_core(g);
  return std::sqrt(std::max(0.0, r.eigenvalues.back()));
}

RealSymmetric psd_project(const RealSymmetric& m) {
  EighResult r = eigh(m);
  const int n = m.dim();
  RealMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    const double lam = std::max(0.0, r.eigenvalues[j]);
    if (lam == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const double vij = r.eigenvectors(i, j);
      if (vij == 0.0) continue;
      for (int k = i; k < n; ++k) out(i, k) += lam * vij * r.eigenvectors(k, j);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < i; ++k) out(i, k) = out(k, i);
  return RealSymmetric(kUnchecked, std::move(out));
}

RealSymmetric psd_sqrt(const RealSymmetric& m) {
  EighResult r = eigh(m);
  const double floor = -1e-8 * std::max(1.0, std::abs(r.eigenvalues.back()));
  if (r.eigenvalues.front() < floor)
    throw std::invalid_argument("psd_sqrt: matrix is significantly indefinite (min eigenvalue " +
                                std::to_string(r.eigenvalues.front()) + ")");
  const int n = m.dim();
  RealMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    const double lam = std::sqrt(std::max(0.0, r.eigenvalues[j]));
    if (lam == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const double vij = r.eigenvectors(i, j);
      if (vij == 0.0) continue;
      for (int k = i; k < n; ++k) out(i, k) += lam * vij * r.eigenvectors(k, j);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < i; ++k) out(i, k) = out(k, i);
  return RealSymmetric(kUnchecked, std::move(out));
}

}  // namespace qmb
