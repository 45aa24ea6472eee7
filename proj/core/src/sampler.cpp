#include "graphfb/sampler.hpp"

#include <cmath>

#include "graphfb/error.hpp"

namespace graphfb {

Matrix make_phi(Index n) {
  if (n < 1) throw Error(ErrorCode::InvalidParam, "n must be positive");
  Matrix phi = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) phi(i, n - 1 - i) = 1.0;
  return phi;
}

ChannelFactors make_p0_p1(Index n) {
  if (n < 2) throw Error(ErrorCode::InvalidParam, "n must be at least 2");
  const Index r = highpass_size(n);
  const Index s = lowpass_size(n);
  ChannelFactors f{Matrix::Zero(n, s), Matrix::Zero(n, r)};
  // Top block I_r, bottom block +/- Phi_r; odd n adds a middle row.
  for (Index i = 0; i < r; ++i) {
    f.p0(i, i) = 1.0;
    f.p1(i, i) = 1.0;
    f.p0(n - 1 - i, i) = 1.0;
    f.p1(n - 1 - i, i) = -1.0;
  }
  if (n % 2 == 1) f.p0(r, r) = std::sqrt(2.0);
  return f;
}

Matrix make_q(const SpectralDecomposition& sd) {
  // U Phi reverses the column order of U.
  const Matrix flipped = sd.basis.rowwise().reverse();
  const Matrix q = flipped * sd.basis.transpose();
  return 0.5 * (q + q.transpose());
}

SamplerSet make_samplers(const SpectralDecomposition& sd, const Matrix& u1) {
  const Index n = sd.n();
  const Index s = lowpass_size(n);
  const Index r = highpass_size(n);
  if (u1.rows() != s || u1.cols() != s) {
    throw Error(ErrorCode::ShapeMismatch, "U1 must be " + std::to_string(s) + "x" +
                                              std::to_string(s));
  }
  const double dev = (u1.transpose() * u1 - Matrix::Identity(s, s)).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw Error(ErrorCode::NotOrthogonal, "U1^T U1 deviates from I by " + std::to_string(dev));
  }
  const ChannelFactors f = make_p0_p1(n);
  const double c = 1.0 / std::sqrt(2.0);
  SamplerSet out;
  out.s = s;
  out.r = r;
  out.u1 = u1;
  out.a_low = c * (u1 * (sd.basis * f.p0).transpose());
  out.a_high = c * (sd.basis * f.p1).transpose();
  out.q = make_q(sd);
  return out;
}

SamplerSet make_samplers(const SpectralDecomposition& sd) {
  const Index s = lowpass_size(sd.n());
  return make_samplers(sd, Matrix::Identity(s, s));
}

}  // namespace graphfb
