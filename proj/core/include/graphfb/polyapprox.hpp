#pragma once

#include <Eigen/SparseCore>

#include "graphfb/graph.hpp"
#include "graphfb/spectral.hpp"

namespace graphfb {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Polynomial p of degree m on [0, domain_max], stored by its Chebyshev
/// coefficients in t = 2 lambda / domain_max - 1.
struct FilterPolynomial {
  Index degree = 0;
  double domain_max = 1.0;
  Vector chebyshev;  // length degree + 1
  /// max_i |h_i - p(lambda_i)| over the eigenvalues the fit was made on.
  double sup_error = 0.0;
  bool converged = true;

  double operator()(double lambda) const;
  Vector evaluate(const Vector& lambdas) const;
  /// Coefficients of 1, lambda, lambda^2, ...; loses accuracy at high degree.
  Vector monomial() const;
  static FilterPolynomial from_monomial(const Vector& coeffs, double domain_max);
};

struct RemezOptions {
  Index max_iterations = 200;
  double level_tolerance = 1e-8;
  Index min_grid = 2000;
  Index grid_per_degree = 50;
};

/// Best uniform approximation of degree m to the piecewise-linear interpolant
/// of (lambda_i, h_i) on [0, lambda_max], by discrete Remez exchange on a
/// Chebyshev grid that includes every eigenvalue. If the exchange does not
/// settle, the best iterate is returned with converged = false.
FilterPolynomial remez_fit(const Vector& eigenvalues, const Vector& h, Index m,
                           const RemezOptions& opts = {});

/// p(L) x using m products with L (Clenshaw recurrence), so the result at a
/// vertex depends only on x within m hops.
Signal poly_apply(const FilterPolynomial& p, const SparseMatrix& l, const Signal& x);
Signal poly_apply(const FilterPolynomial& p, const Matrix& l, const Signal& x);

/// max_i |h_i - p(lambda_i)|, which is ||F_h - p(L)||_2.
double operator_error(const SpectralDecomposition& sd, const Vector& h, const FilterPolynomial& p);

/// Upper bound 6 lambda_max M / m on the best degree-m uniform error for a
/// filter with Lipschitz constant M.
double error_bound(double lipschitz, double lambda_max, Index m);

SparseMatrix sparse_laplacian(const Graph& g);

}  // namespace graphfb
