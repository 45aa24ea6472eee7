#include "graphfb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "graphfb/error.hpp"
#include "graphfb/sampler.hpp"

namespace graphfb {

namespace {

void require_same_length(const Signal& f, const Signal& fr) {
  if (f.size() != fr.size()) {
    throw Error(ErrorCode::LengthMismatch, "signals have lengths " + std::to_string(f.size()) +
                                               " and " + std::to_string(fr.size()));
  }
}

void check_bank(const FilterBank& bank, const SpectralDecomposition& sd, const Signal& x) {
  if (bank.n() != sd.n()) throw Error(ErrorCode::ShapeMismatch, "bank size differs from spectrum");
  if (x.size() != sd.n()) throw Error(ErrorCode::LengthMismatch, "signal length mismatch");
}

void check_hypothesis(const FilterBank& bank) {
  const double tail = std::abs(bank.g0(bank.n() - 1));
  if (tail > 1e-12) {
    throw Error(ErrorCode::HypothesisViolated,
                "g0 does not vanish at the largest eigenvalue (|g0| = " + format_double(tail) + ")");
  }
}

void check_vertex(const Graph& g, Index v) {
  if (v < 0 || v >= g.n()) {
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

double snr(const Signal& f, const Signal& fr) {
  require_same_length(f, fr);
  const double num = f.squaredNorm();
  if (num == 0.0) throw Error(ErrorCode::ZeroSignal, "reference signal is zero");
  const double den = (f - fr).squaredNorm();
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(num / den);
}

double rel_error(const Signal& f, const Signal& fr) {
  require_same_length(f, fr);
  const double norm = f.norm();
  if (norm == 0.0) throw Error(ErrorCode::ZeroSignal, "reference signal is zero");
  return (f - fr).norm() / norm;
}

ErrorBoundParts lowpass_error_bound(const FilterBank& bank, const SpectralDecomposition& sd,
                                    const Signal& x) {
  check_bank(bank, sd, x);
  check_hypothesis(bank);
  const Index n = sd.n();
  const Index r = highpass_size(n);
  const Index s = lowpass_size(n);
  const Vector xhat = gft(sd, x);
  const Vector& lam = sd.eigenvalues;

  ErrorBoundParts parts;
  for (Index i = 0; i < r; ++i) parts.sigma1 += lam(i) * xhat(i) * xhat(i);
  for (Index i = s; i < n; ++i) parts.sigma2 += lam(i) * xhat(i) * xhat(i);

  auto term = [&](Index i) {
    const double c = std::hypot(bank.h0(i), bank.h0(n - 1 - i));
    return std::abs(c * bank.g0(n - 1 - i)) / std::sqrt(lam(i));
  };
  // lambda_0 = 0 is skipped; its term carries g0 at the top, which is zero.
  for (Index i = 1; i < r; ++i) parts.a1 = std::max(parts.a1, term(i));
  for (Index i = s; i < n; ++i) parts.a2 = std::max(parts.a2, term(i));
  parts.bound = 0.5 * (parts.a1 * std::sqrt(parts.sigma1) + parts.a2 * std::sqrt(parts.sigma2));
  return parts;
}

std::pair<double, double> orthogonal_bound_constants(const FilterBank& bank,
                                                     const SpectralDecomposition& sd) {
  if (bank.kind != BankKind::Orthogonal) {
    throw Error(ErrorCode::InvalidParam, "orthogonal shortcut needs an orthogonal bank");
  }
  if (bank.n() != sd.n()) throw Error(ErrorCode::ShapeMismatch, "bank size differs from spectrum");
  check_hypothesis(bank);
  const Index n = sd.n();
  const Index r = highpass_size(n);
  const Index s = lowpass_size(n);
  auto term = [&](Index i) {
    return std::sqrt(std::max(0.0, 2.0 * (2.0 - bank.y(i))) / sd.eigenvalues(i));
  };
  double a1 = 0.0, a2 = 0.0;
  for (Index i = 1; i < r; ++i) a1 = std::max(a1, term(i));
  for (Index i = s; i < n; ++i) a2 = std::max(a2, term(i));
  return {a1, a2};
}

double lowpass_error(const FilterBank& bank, const SpectralDecomposition& sd, const Signal& x) {
  check_bank(bank, sd, x);
  const Vector xhat = gft(sd, x);
  const Vector filtered = bank.h0.cwiseProduct(xhat);
  // Q acts as the index reversal in the spectral domain.
  const Vector folded = 0.5 * (filtered + filtered.reverse());
  return (xhat - bank.g0.cwiseProduct(folded)).norm();
}

DirichletBoundCheck dirichlet_bound_check(const FilterBank& bank, const SpectralDecomposition& sd,
                                          const Signal& x) {
  const ErrorBoundParts parts = lowpass_error_bound(bank, sd, x);
  const Vector xhat = gft(sd, x);
  const double s2 = sd.eigenvalues.dot(xhat.cwiseAbs2());
  DirichletBoundCheck out;
  out.lhs = lowpass_error(bank, sd, x);
  out.rhs = 0.5 * std::hypot(parts.a1, parts.a2) * std::sqrt(std::max(0.0, s2));
  return out;
}

Signal impulse_response(const SpectralDecomposition& sd, const Vector& h, Index v) {
  if (v < 0 || v >= sd.n()) {
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  return apply_filter(sd, h, Signal::Unit(sd.n(), v));
}

Signal impulse_response(const Graph& g, const FilterPolynomial& p, Index v) {
  check_vertex(g, v);
  return poly_apply(p, sparse_laplacian(g), Signal::Unit(g.n(), v));
}

Index spread_radius(const Graph& g, const Signal& response, Index v, std::optional<double> tau) {
  check_vertex(g, v);
  if (response.size() != g.n()) throw Error(ErrorCode::LengthMismatch, "response length mismatch");
  const double peak = response.cwiseAbs().maxCoeff();
  const double threshold = tau.value_or(1e-3 * peak);
  if (!(threshold > 0.0)) {
    if (tau) throw Error(ErrorCode::InvalidParam, "threshold must be positive");
    return 0;
  }
  const std::vector<Index> hops = hop_distances(g, v);
  Index radius = 0;
  for (Index i = 0; i < g.n(); ++i) {
    if (std::abs(response(i)) > threshold) radius = std::max(radius, hops[static_cast<std::size_t>(i)]);
  }
  return radius;
}

Index impulse_spread(const Graph& g, const SpectralDecomposition& sd, const Vector& h, Index v,
                     std::optional<double> tau) {
  return spread_radius(g, impulse_response(sd, h, v), v, tau);
}

Index impulse_spread(const Graph& g, const FilterPolynomial& p, Index v,
                     std::optional<double> tau) {
  return spread_radius(g, impulse_response(g, p, v), v, tau);
}

Signal step_signal(Index n) {
  if (n < 2) throw Error(ErrorCode::InvalidParam, "step signal needs n >= 2");
  Signal x(n);
  for (Index k = 0; k < n; ++k) {
    x(k) = 0.2 * std::sin(static_cast<double>(k) * std::numbers::pi /
                          (2.0 * static_cast<double>(n - 1)));
  }
  return x;
}

}  // namespace graphfb
