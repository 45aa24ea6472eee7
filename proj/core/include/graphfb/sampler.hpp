#pragma once

#include "graphfb/spectral.hpp"

namespace graphfb {

/// Size of the lowpass channel, floor((n+1)/2).
constexpr Index lowpass_size(Index n) { return (n + 1) / 2; }
/// Size of the highpass channel, floor(n/2).
constexpr Index highpass_size(Index n) { return n / 2; }

/// Anti-diagonal permutation [e_n, ..., e_1]: symmetric, an involution, with
/// trace 0 (n even) or 1 (n odd).
Matrix make_phi(Index n);

/// Factors with I + Phi = P0 P0^T (n x s) and I - Phi = P1 P1^T (n x r).
struct ChannelFactors {
  Matrix p0;
  Matrix p1;
};
ChannelFactors make_p0_p1(Index n);

/// Spectral flip Q = U Phi U^T; maps u_k to u_{n+1-k}.
Matrix make_q(const SpectralDecomposition& sd);

/// Generalized down/up samplers with B_L A_L = (I+Q)/2 and B_H A_H = (I-Q)/2.
struct SamplerSet {
  Index s = 0;
  Index r = 0;
  Matrix a_low;   // s x n, (1/sqrt 2) U1 P0^T U^T
  Matrix a_high;  // r x n, (1/sqrt 2) P1^T U^T
  Matrix q;       // n x n
  Matrix u1;      // s x s orthogonal

  Matrix b_low() const { return a_low.transpose(); }
  Matrix b_high() const { return a_high.transpose(); }
};

/// Throws NotOrthogonal when U1 deviates from orthogonality by more than 1e-10.
SamplerSet make_samplers(const SpectralDecomposition& sd, const Matrix& u1);

/// make_samplers with U1 = I.
SamplerSet make_samplers(const SpectralDecomposition& sd);

}  // namespace graphfb
