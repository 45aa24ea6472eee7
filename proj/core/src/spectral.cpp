#include "graphfb/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "graphfb/error.hpp"

namespace graphfb {

namespace {

constexpr double kSignThreshold = 1e-12;

void require_length(Index expected, Index got, const char* what) {
  if (expected != got) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + ": expected length " +
                                               std::to_string(expected) + ", got " +
                                               std::to_string(got));
  }
}

// Replaces the columns of `block` (an orthonormal basis of one eigenspace)
// with a basis determined by the eigenspace alone.
void canonicalize_eigenspace(Eigen::Ref<Matrix> block) {
  const Index n = block.rows();
  const Index k = block.cols();
  // Row j of `block` is the coordinate vector of P e_j in the current basis.
  Matrix coords = block.transpose();  // k x n
  Matrix chosen(k, k);
  for (Index t = 0; t < k; ++t) {
    Vector norms(n);
    for (Index j = 0; j < n; ++j) {
      Vector r = coords.col(j);
      for (int pass = 0; pass < 2; ++pass) {
        for (Index p = 0; p < t; ++p) r -= chosen.col(p).dot(r) * chosen.col(p);
      }
      norms(j) = r.norm();
    }
    const double best = norms.maxCoeff();
    Index pick = 0;
    while (norms(pick) < (1.0 - 1e-6) * best) ++pick;
    Vector r = coords.col(pick);
    for (int pass = 0; pass < 2; ++pass) {
      for (Index p = 0; p < t; ++p) r -= chosen.col(p).dot(r) * chosen.col(p);
    }
    chosen.col(t) = r / r.norm();
  }
  block = (block * chosen).eval();
}

void fix_sign(Eigen::Ref<Vector> v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kSignThreshold) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

double tie_tolerance(const Vector& eigenvalues) {
  const double top = eigenvalues.size() > 0 ? eigenvalues(eigenvalues.size() - 1) : 0.0;
  return 1e-8 * std::max(1.0, top);
}

std::vector<Index> tie_groups(const Vector& eigenvalues) {
  const double tol = tie_tolerance(eigenvalues);
  std::vector<Index> label(static_cast<std::size_t>(eigenvalues.size()), 0);
  for (Index i = 1; i < eigenvalues.size(); ++i) {
    const bool tied = std::abs(eigenvalues(i) - eigenvalues(i - 1)) <= tol;
    label[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(i - 1)] + (tied ? 0 : 1);
  }
  return label;
}

SpectralDecomposition eig_sym(const Matrix& l) {
  if (l.rows() != l.cols()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  const Index n = l.rows();
  if (n == 0) throw Error(ErrorCode::InvalidParam, "empty matrix");
  const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
  if ((l - l.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  }
  const Matrix sym = 0.5 * (l + l.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigFailure, "symmetric eigensolver did not converge");
  }

  SpectralDecomposition sd{solver.eigenvalues(), solver.eigenvectors()};
  if (std::abs(sd.eigenvalues(0)) <= tie_tolerance(sd.eigenvalues)) sd.eigenvalues(0) = 0.0;

  const auto groups = tie_groups(sd.eigenvalues);
  Index start = 0;
  while (start < n) {
    Index end = start + 1;
    while (end < n && groups[static_cast<std::size_t>(end)] ==
                          groups[static_cast<std::size_t>(start)]) {
      ++end;
    }
    if (end - start > 1) canonicalize_eigenspace(sd.basis.middleCols(start, end - start));
    start = end;
  }
  for (Index c = 0; c < n; ++c) fix_sign(sd.basis.col(c));
  return sd;
}

Vector gft(const SpectralDecomposition& sd, const Signal& x) {
  require_length(sd.n(), x.size(), "gft");
  return sd.basis.transpose() * x;
}

Signal igft(const SpectralDecomposition& sd, const Vector& xhat) {
  require_length(sd.n(), xhat.size(), "igft");
  return sd.basis * xhat;
}

Signal apply_filter(const SpectralDecomposition& sd, const Vector& h, const Signal& x) {
  require_length(sd.n(), h.size(), "apply_filter (filter)");
  require_length(sd.n(), x.size(), "apply_filter (signal)");
  const Vector xhat = sd.basis.transpose() * x;
  return sd.basis * h.cwiseProduct(xhat);
}

Matrix filter_matrix(const SpectralDecomposition& sd, const Vector& h, Index dense_limit) {
  require_length(sd.n(), h.size(), "filter_matrix");
  if (sd.n() > dense_limit) {
    throw Error(ErrorCode::TooLarge, "n = " + std::to_string(sd.n()) +
                                         " exceeds dense limit " + std::to_string(dense_limit));
  }
  const Matrix f = sd.basis * h.asDiagonal() * sd.basis.transpose();
  return 0.5 * (f + f.transpose());
}

}  // namespace graphfb
