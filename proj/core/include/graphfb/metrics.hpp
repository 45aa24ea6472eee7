#pragma once

#include <optional>
#include <utility>

#include "graphfb/filter_design.hpp"
#include "graphfb/graph.hpp"
#include "graphfb/polyapprox.hpp"
#include "graphfb/spectral.hpp"

namespace graphfb {

/// 10 log10(||f||^2 / ||f - fr||^2) in dB; +infinity when fr == f.
/// Throws ZeroSignal when f is zero.
double snr(const Signal& f, const Signal& fr);

/// ||f - fr|| / ||f||. Throws ZeroSignal when f is zero.
double rel_error(const Signal& f, const Signal& fr);

/// Bound on the lowpass-only reconstruction error:
/// ||x - F_g0 B_L A_L F_h0 x|| <= (A1 sqrt(sigma1) + A2 sqrt(sigma2)) / 2.
struct ErrorBoundParts {
  double sigma1 = 0.0;  // sum of lambda_i |xhat_i|^2 over the low r frequencies
  double sigma2 = 0.0;  // same over the top r frequencies
  double a1 = 0.0;
  double a2 = 0.0;
  double bound = 0.0;
};

/// Requires g0 to vanish at the largest eigenvalue (HypothesisViolated).
ErrorBoundParts lowpass_error_bound(const FilterBank& bank, const SpectralDecomposition& sd,
                                    const Signal& x);

/// A1, A2 through the orthogonal-bank shortcut c_i(h0) = sqrt(2):
/// A1 = max_{1<=i<r} sqrt(2 (2 - y_i) / lambda_i), A2 = the same over i >= s.
/// Must agree with lowpass_error_bound for orthogonal banks.
std::pair<double, double> orthogonal_bound_constants(const FilterBank& bank,
                                                     const SpectralDecomposition& sd);

/// ||x - F_g0 B_L A_L F_h0 x||. B_L A_L = (I + Q) / 2 for every valid U1, so
/// this only needs the spectrum and the bank.
double lowpass_error(const FilterBank& bank, const SpectralDecomposition& sd, const Signal& x);

struct DirichletBoundCheck {
  double lhs = 0.0;  // measured lowpass error
  double rhs = 0.0;  // sqrt(A1^2 + A2^2) sqrt(x^T L x) / 2
  bool holds() const { return lhs <= rhs + 1e-10; }
};

DirichletBoundCheck dirichlet_bound_check(const FilterBank& bank, const SpectralDecomposition& sd,
                                          const Signal& x);

/// F_h e_v.
Signal impulse_response(const SpectralDecomposition& sd, const Vector& h, Index v);
/// p(L) e_v.
Signal impulse_response(const Graph& g, const FilterPolynomial& p, Index v);

/// Largest hop distance from v of a vertex with |response| > tau; tau defaults
/// to 1e-3 times the peak magnitude. 0 for an all-zero response.
Index spread_radius(const Graph& g, const Signal& response, Index v,
                    std::optional<double> tau = std::nullopt);

Index impulse_spread(const Graph& g, const SpectralDecomposition& sd, const Vector& h, Index v,
                     std::optional<double> tau = std::nullopt);
Index impulse_spread(const Graph& g, const FilterPolynomial& p, Index v,
                     std::optional<double> tau = std::nullopt);

/// x(k) = 0.2 sin(k pi / (2 (n - 1))), k = 0..n-1.
Signal step_signal(Index n);

}  // namespace graphfb
