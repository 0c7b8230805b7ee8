#pragma once

#include "maglap/linalg.hpp"
#include "maglap/magnetic.hpp"
#include "maglap/markov.hpp"

#include <utility>
#include <vector>

namespace maglap {

enum class EmbeddingKind { phase, planar, torus };
enum class Part { real, imag, phase };

/// Per-node coordinates derived from eigenvectors; one row per node.
struct Embedding {
  EmbeddingKind kind = EmbeddingKind::phase;
  RealMatrix coordinates;
  std::vector<Index> sources;

  Index size() const noexcept { return coordinates.rows(); }
};

/// Phase angles on the torus plus the matching points on a 3D torus surface.
struct TorusEmbedding {
  Embedding angles;
  RealMatrix surface;
};

inline constexpr double kTorusMajorRadius = 2.0;
inline constexpr double kTorusMinorRadius = 1.0;

/// Eigenvalue at or below which eigenvector 0 counts as trivial.
inline constexpr double kTrivialEigenvalue = 1e-8;

/// arg(z) mapped into [0, 2 pi); zero maps to 0.
double wrapped_phase(Complex z);

Embedding phase_of(const SpectralDecomposition& decomp, Index k);
Embedding planar(const SpectralDecomposition& decomp, Index a, Index b, Part part = Part::real);
TorusEmbedding torus(const SpectralDecomposition& decomp, Index a, Index b);

/// ((R + r cos t1) cos t2, (R + r cos t1) sin t2, r sin t1).
Eigen::Vector3d torus_point(double theta1, double theta2);

/// Eigenvector pair used for scatter plots: the leading two for the
/// unnormalized construction, the first two non-trivial ones for Markov.
std::pair<Index, Index> default_embedding_indices(Construction c) noexcept;

bool has_trivial_principal(const SpectralDecomposition& decomp) noexcept;

/// Phases relative to the modulus-weighted circular mean, in (-pi, pi].
RealVector centered_phases(const ComplexVector& v);

/// Column-mass term used in the predicted principal eigenvector.
enum class ColumnMass {
  /// sum_j of the limiting matrix 1 h^T, i.e. n * h_i (what L^(t) converges to).
  stationary_limit,
  /// sum_j P(j, i) of the one-step transition matrix, read literally.
  one_step,
};

/// Limit principal eigenvector of the degree-normalized Markov Laplacian:
/// phi_i proportional to exp(2 pi i g h_i) * sqrt((1 + colmass_i) / 2), unit norm.
struct TheoremPrediction {
  ComplexVector phi;
  RealVector pagerank;
  double g = 0.0;
};

TheoremPrediction theorem1_prediction(const TransitionMatrix& p, double g,
                                      ColumnMass mass = ColumnMass::stationary_limit);

struct PhaseAlignment {
  Complex c;
  double residual = 0.0;
};

/// Unit c minimizing ||u - c v||_2.
PhaseAlignment align_phase(const ComplexVector& u, const ComplexVector& v);

}  // namespace maglap
