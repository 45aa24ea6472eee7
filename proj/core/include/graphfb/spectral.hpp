#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "graphfb/graph.hpp"

namespace graphfb {

/// Ascending eigenvalues and orthonormal eigenvectors (columns) of a graph
/// Laplacian.
struct SpectralDecomposition {
  Vector eigenvalues;
  Matrix basis;

  Index n() const { return eigenvalues.size(); }
  double lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }
};

/// Two eigenvalues are tied when they differ by at most this amount.
double tie_tolerance(const Vector& eigenvalues);

/// Group label per index for an ascending eigenvalue vector; consecutive
/// eigenvalues within tie_tolerance share a label. Labels start at 0 and are
/// nondecreasing.
std::vector<Index> tie_groups(const Vector& eigenvalues);

/// Dense symmetric eigendecomposition with a deterministic basis:
///  - inside a group of tied eigenvalues the basis is rebuilt from the
///    projections of e_0, e_1, ... onto the eigenspace (pivoted Gram-Schmidt),
///    so it does not depend on the solver's choice within the eigenspace;
///  - each eigenvector's first entry with magnitude above 1e-12 is positive;
///  - an eigenvalue within tie_tolerance of zero at the bottom is set to 0.
SpectralDecomposition eig_sym(const Matrix& l);

Vector gft(const SpectralDecomposition& sd, const Signal& x);
Signal igft(const SpectralDecomposition& sd, const Vector& xhat);

/// U diag(h) U^T x, evaluated as three products.
Signal apply_filter(const SpectralDecomposition& sd, const Vector& h, const Signal& x);

inline constexpr Index kDenseFilterLimit = 4096;

/// The explicit filter operator U diag(h) U^T, symmetric by construction.
Matrix filter_matrix(const SpectralDecomposition& sd, const Vector& h,
                     Index dense_limit = kDenseFilterLimit);

// Binary eigendecomposition cache. Layout: the 15 bytes "graphfb-eig v1\n",
// n as little-endian uint64, then n eigenvalues and the n*n basis entries in
// row-major order, all little-endian IEEE-754 doubles.
std::uint64_t content_hash(const Matrix& l);
void save_decomposition(const SpectralDecomposition& sd, const std::filesystem::path& path);
SpectralDecomposition load_decomposition(const std::filesystem::path& path);

/// eig_sym with a cache file "<hash>.eig" under `cache_dir` (created on demand).
SpectralDecomposition eig_sym_cached(const Matrix& l, const std::filesystem::path& cache_dir);

}  // namespace graphfb
