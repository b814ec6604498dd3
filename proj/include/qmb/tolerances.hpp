#pragma once

// Central numerical tolerances. Every module pulls its thresholds from here
// so that tests and library code agree on a single source of truth.
namespace qmb::tol {

// Structural validation of matrix types (symmetry, hermiticity, ...).
inline constexpr double kValidation = 1e-12;

// Generic numerical equality used by reconstruction / round-trip checks.
inline constexpr double kTight = 1e-10;
inline constexpr double kNumeric = 1e-9;
inline constexpr double kLoose = 1e-8;

// Eigen-decomposition targets.
inline constexpr double kEighResidual = 1e-9;       // ||A - V L V^T||_F / ||A||_F
inline constexpr double kOrthonormality = 1e-10;    // eigenvector Gram error

// Gram factorization of SDP moment matrices.
inline constexpr double kGramReconstruction = 1e-7;
inline constexpr double kGramRankTol = 1e-8;

// SDP solver defaults.
inline constexpr double kSdpFeasTol = 1e-6;
inline constexpr double kSdpObjTol = 1e-7;
inline constexpr int kSdpMaxIter = 50000;

}  // namespace qmb::tol
