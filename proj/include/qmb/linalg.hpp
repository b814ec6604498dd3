#pragma once

#include <string>
#include <vector>

#include "qmb/matrix.hpp"
#include "qmb/tolerances.hpp"

namespace qmb {

// Tag for constructors that skip structural validation. Used on hot paths
// where the invariant holds by construction (e.g. inside the SDP solver).
struct Unchecked {};
inline constexpr Unchecked kUnchecked{};

// Hermitian matrix; validated against its conjugate transpose on construction.
class DenseHermitian {
 public:
  explicit DenseHermitian(ComplexMatrix m);
  DenseHermitian(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}

  int dim() const { return m_.rows(); }
  const ComplexMatrix& mat() const { return m_; }

 private:
  ComplexMatrix m_;
};

class RealSymmetric {
 public:
  explicit RealSymmetric(RealMatrix m);
  RealSymmetric(Unchecked, RealMatrix m) : m_(std::move(m)) {}

  // Builds (m + m^T)/2 without validation; for results that are symmetric
  // up to roundoff.
  static RealSymmetric symmetrized(const RealMatrix& m);

  int dim() const { return m_.rows(); }
  const RealMatrix& mat() const { return m_; }

 private:
  RealMatrix m_;
};

class RealAntisymmetric {
 public:
  explicit RealAntisymmetric(RealMatrix m);
  RealAntisymmetric(Unchecked, RealMatrix m) : m_(std::move(m)) {}

  static RealAntisymmetric antisymmetrized(const RealMatrix& m);

  int dim() const { return m_.rows(); }
  const RealMatrix& mat() const { return m_; }

 private:
  RealMatrix m_;
};

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  RealMatrix eigenvectors;          // orthonormal columns, same order
};

struct EighResultC {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns
};

// Cyclic Jacobi eigensolver. Deterministic and accurate for the dense
// symmetric/Hermitian problems that arise here (dims up to a few thousand).
EighResult eigh(const RealSymmetric& m);
EighResultC eigh(const DenseHermitian& m);

// Largest singular value (via eigh of m^T m / m^dag m).
double operator_norm(const RealMatrix& m);
double operator_norm(const ComplexMatrix& m);

// Nearest PSD matrix in Frobenius norm: negative eigenvalues clipped to zero.
RealSymmetric psd_project(const RealSymmetric& m);

// Symmetric PSD square root. Eigenvalues in [-1e-8, 0) are clipped; smaller
// ones raise a validation error.
RealSymmetric psd_sqrt(const RealSymmetric& m);

}  // namespace qmb
