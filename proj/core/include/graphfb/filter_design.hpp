#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graphfb/graph.hpp"

namespace graphfb {

enum class BankKind { Orthogonal, Biorthogonal };

/// How a bank's filter profile was produced.
///  Ideal   - half-band profile
///  Alpha   - equal slopes of sqrt(y) in lambda on the low half
///  Beta    - equal slopes of sqrt(2 - y) in the mirrored eigenvalues
///  Flat    - y = 1 everywhere (two-vertex graphs, where neither slope
///            strategy has a free variable)
///  General - biorthogonal bank from a free product vector f
enum class DesignStrategy { Ideal, Alpha, Beta, Flat, General };

enum class SplitRule { Sqrt, Uneven };

std::string_view to_string(BankKind kind);
std::string_view to_string(DesignStrategy strategy);
std::string_view to_string(SplitRule rule);
BankKind parse_bank_kind(std::string_view s);
DesignStrategy parse_design_strategy(std::string_view s);
SplitRule parse_split_rule(std::string_view s);

/// Two-channel filter bank in the spectral domain. Indices follow the
/// ascending eigenvalue order; index k pairs with its mirror n-1-k.
struct FilterBank {
  BankKind kind = BankKind::Orthogonal;
  Vector h0, h1, g0, g1;
  /// Product profile f = h0 .* g0.
  Vector y;
  /// Lipschitz constant of h0; NaN when h0 is not constant on tied eigenvalues.
  double lipschitz = 0.0;
  Vector eigenvalues;
  DesignStrategy strategy = DesignStrategy::Ideal;
  bool tie_adjusted = false;

  Index n() const { return h0.size(); }
};

/// Cluster label per index: indices are merged when their eigenvalues tie or
/// when their mirrors' eigenvalues tie. Clusters are contiguous and the
/// mirror of a cluster is a cluster.
std::vector<Index> mirror_tie_clusters(const Vector& eigenvalues);

/// Orthogonal bank from a full profile y with y(n-1-k) = 2 - y(k):
/// h0 = g0 = sqrt(y), h1 = g1 = h0 reversed.
FilterBank orthogonal_bank(const Vector& eigenvalues, const Vector& y, DesignStrategy strategy);

/// Ideal half-band profile. A tie cluster on which the profile is not
/// constant (it straddles the channel boundary) is set to y = 1 together
/// with its mirror, and the bank is flagged tie_adjusted.
FilterBank design_ideal(const Vector& eigenvalues);

/// One of the two slope-equalizing profiles, or nullopt when its denominator
/// (lambda_s for Alpha, lambda_n - lambda_{r+1} for Beta) vanishes.
std::optional<FilterBank> design_local_candidate(const Vector& eigenvalues,
                                                 DesignStrategy strategy);

/// The Alpha or Beta candidate with the smaller Lipschitz constant (Alpha on
/// equality). Throws DegenerateSpectrum when neither is defined.
FilterBank design_local(const Vector& eigenvalues);

/// General biorthogonal bank. `f_free` gives f(0..r-1) in (0, 2); f is
/// completed by f(n-1-k) = 2 - f(k) and f(middle) = 1 for odd n, split into
/// h0 .* g0 = f by `split`, and h1(k) = g0(n-1-k), g1(k) = h0(n-1-k).
FilterBank design_biorthogonal(const Vector& eigenvalues, const Vector& f_free,
                               SplitRule split = SplitRule::Sqrt);

/// Seeded free profile for design_biorthogonal: r values uniform in [0.1, 1.9].
Vector random_free_profile(Index r, std::uint64_t seed);

/// max |h(i+1) - h(i)| / (lambda(i+1) - lambda(i)) over consecutive untied
/// eigenvalues. Throws TieViolation when h differs on tied eigenvalues.
double lipschitz_constant(const Vector& h, const Vector& eigenvalues);

/// Minimizer of ||x||_inf subject to a^T x = b, x >= 0, for a >= 0 nonzero:
/// x_i = b / sum_{a_j != 0} a_j where a_i != 0, else 0.
Vector minmax_allocation(const Vector& a, double b);

struct PrReport {
  double sum_residual = 0.0;         // max |g0 h0 + g1 h1 - 2|
  double flip_residual = 0.0;        // max |g0(n-1-k) h0(k) - g1(n-1-k) h1(k)|
  double orthogonal_residual = 0.0;  // max |h0^2 + h1^2 - 2|, |h0 - g0|, |h1 - g1|
  bool pass = false;
};

inline constexpr double kPrTolerance = 1e-10;

PrReport verify_pr_conditions(const FilterBank& bank, double tol = kPrTolerance);

}  // namespace graphfb
