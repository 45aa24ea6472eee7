#include "graphfb/filter_design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "graphfb/error.hpp"
#include "graphfb/sampler.hpp"
#include "graphfb/spectral.hpp"

namespace graphfb {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_eigenvalues(const Vector& lambda) {
  if (lambda.size() < 2) throw Error(ErrorCode::InvalidParam, "need at least 2 eigenvalues");
  for (Index i = 1; i < lambda.size(); ++i) {
    if (lambda(i) < lambda(i - 1)) throw Error(ErrorCode::InvalidParam, "eigenvalues not ascending");
  }
}

struct DisjointSets {
  std::vector<Index> parent;
  explicit DisjointSets(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Indices grouped by cluster label, in ascending order.
std::vector<std::vector<Index>> cluster_members(const std::vector<Index>& label) {
  const Index count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Index>> members(static_cast<std::size_t>(count));
  for (Index i = 0; i < static_cast<Index>(label.size()); ++i) {
    members[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(i);
  }
  return members;
}

void mirror_from_low_half(Vector& y) {
  const Index n = y.size();
  const Index s = lowpass_size(n);
  for (Index i = 0; i < s; ++i) {
    if (n - 1 - i != i) y(n - 1 - i) = 2.0 - y(i);
  }
  if (n % 2 == 1) y(s - 1) = 1.0;
}

// Makes y constant on every mirror-tie cluster: a self-mirrored cluster gets
// 1, the cluster holding index 0 keeps y = 2, any other cluster its mean.
// Returns true when some value moved by more than 1e-12.
bool enforce_tie_consistency(const Vector& lambda, Vector& y) {
  const Index n = y.size();
  const auto label = mirror_tie_clusters(lambda);
  const Vector before = y;
  for (const auto& members : cluster_members(label)) {
    if (members.size() < 2) continue;
    const Index mirror_label = label[static_cast<std::size_t>(n - 1 - members.front())];
    double value = 0.0;
    if (mirror_label == label[static_cast<std::size_t>(members.front())]) {
      value = 1.0;
    } else if (members.front() == 0) {
      value = 2.0;
    } else {
      for (Index i : members) value += y(i);
      value /= static_cast<double>(members.size());
    }
    for (Index i : members) y(i) = value;
  }
  mirror_from_low_half(y);
  return (y - before).cwiseAbs().maxCoeff() > 1e-12;
}

double lipschitz_or_nan(const Vector& h, const Vector& lambda) {
  try {
    return lipschitz_constant(h, lambda);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TieViolation) throw;
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

std::string_view to_string(BankKind kind) {
  return kind == BankKind::Orthogonal ? "orthogonal" : "biorthogonal";
}

std::string_view to_string(DesignStrategy strategy) {
  switch (strategy) {
    case DesignStrategy::Ideal: return "ideal";
    case DesignStrategy::Alpha: return "alpha";
    case DesignStrategy::Beta: return "beta";
    case DesignStrategy::Flat: return "flat";
    case DesignStrategy::General: return "general";
  }
  return "unknown";
}

std::string_view to_string(SplitRule rule) {
  return rule == SplitRule::Sqrt ? "sqrt" : "uneven";
}

BankKind parse_bank_kind(std::string_view s) {
  if (s == "orthogonal") return BankKind::Orthogonal;
  if (s == "biorthogonal") return BankKind::Biorthogonal;
  throw Error(ErrorCode::ParseError, "unknown bank kind '" + std::string(s) + "'");
}

DesignStrategy parse_design_strategy(std::string_view s) {
  for (auto st : {DesignStrategy::Ideal, DesignStrategy::Alpha, DesignStrategy::Beta,
                  DesignStrategy::Flat, DesignStrategy::General}) {
    if (to_string(st) == s) return st;
  }
  throw Error(ErrorCode::ParseError, "unknown strategy '" + std::string(s) + "'");
}

SplitRule parse_split_rule(std::string_view s) {
  if (s == "sqrt") return SplitRule::Sqrt;
  if (s == "uneven") return SplitRule::Uneven;
  throw Error(ErrorCode::ParseError, "unknown split rule '" + std::string(s) + "'");
}

std::vector<Index> mirror_tie_clusters(const Vector& lambda) {
  const Index n = lambda.size();
  const double tol = tie_tolerance(lambda);
  DisjointSets sets(n);
  for (Index i = 1; i < n; ++i) {
    if (std::abs(lambda(i) - lambda(i - 1)) <= tol) {
      sets.unite(i - 1, i);
      sets.unite(n - i, n - 1 - i);
    }
  }
  // Relabel roots in order of first appearance.
  std::vector<Index> label(static_cast<std::size_t>(n), -1);
  std::vector<Index> root_label(static_cast<std::size_t>(n), -1);
  Index next = 0;
  for (Index i = 0; i < n; ++i) {
    auto& rl = root_label[static_cast<std::size_t>(sets.find(i))];
    if (rl < 0) rl = next++;
    label[static_cast<std::size_t>(i)] = rl;
  }
  return label;
}

FilterBank orthogonal_bank(const Vector& lambda, const Vector& y, DesignStrategy strategy) {
  require_eigenvalues(lambda);
  if (y.size() != lambda.size()) throw Error(ErrorCode::LengthMismatch, "y length != n");
  FilterBank bank;
  bank.kind = BankKind::Orthogonal;
  bank.strategy = strategy;
  bank.eigenvalues = lambda;
  bank.y = y;
  bank.h0 = y.cwiseMax(0.0).cwiseSqrt();
  bank.g0 = bank.h0;
  bank.h1 = bank.h0.reverse();
  bank.g1 = bank.h1;
  bank.lipschitz = lipschitz_or_nan(bank.h0, lambda);
  return bank;
}

FilterBank design_ideal(const Vector& lambda) {
  require_eigenvalues(lambda);
  const Index n = lambda.size();
  const Index s = lowpass_size(n);
  Vector y = Vector::Zero(n);
  y.head(s - 1).setConstant(2.0);
  y(s - 1) = (n % 2 == 1) ? 1.0 : 2.0;

  bool adjusted = false;
  const auto label = mirror_tie_clusters(lambda);
  for (const auto& members : cluster_members(label)) {
    double lo = y(members.front());
    double hi = lo;
    for (Index i : members) {
      lo = std::min(lo, y(i));
      hi = std::max(hi, y(i));
    }
    if (hi == lo) continue;
    adjusted = true;
    for (Index i : members) {
      y(i) = 1.0;
      y(n - 1 - i) = 1.0;
    }
  }
  FilterBank bank = orthogonal_bank(lambda, y, DesignStrategy::Ideal);
  bank.tie_adjusted = adjusted;
  return bank;
}

std::optional<FilterBank> design_local_candidate(const Vector& lambda, DesignStrategy strategy) {
  require_eigenvalues(lambda);
  const Index n = lambda.size();
  const Index s = lowpass_size(n);
  const Index r = highpass_size(n);
  const double tol = tie_tolerance(lambda);
  if (s < 2) return std::nullopt;

  // Successive eigenvalue gaps along which sqrt(y) (Alpha) or sqrt(2 - y)
  // (Beta) changes; the allocation spreads the total change with equal slope.
  Vector gaps(s - 1);
  double total = 0.0;
  if (strategy == DesignStrategy::Alpha) {
    if (!(lambda(s - 1) - lambda(0) > tol)) return std::nullopt;
    for (Index i = 0; i + 1 < s; ++i) gaps(i) = lambda(i + 1) - lambda(i);
    total = kSqrt2 - 1.0;
  } else if (strategy == DesignStrategy::Beta) {
    if (!(lambda(n - 1) - lambda(r) > tol)) return std::nullopt;
    for (Index i = 0; i + 1 < s; ++i) gaps(i) = lambda(n - 1 - i) - lambda(n - 2 - i);
    total = 1.0;
  } else {
    throw Error(ErrorCode::InvalidParam, "local design supports alpha and beta only");
  }
  const Vector slope = minmax_allocation(gaps, total);

  Vector y(n);
  double acc = 0.0;
  for (Index i = 0; i < s; ++i) {
    if (i > 0) acc += slope(i - 1) * gaps(i - 1);
    if (strategy == DesignStrategy::Alpha) {
      const double root = kSqrt2 - acc;
      y(i) = root * root;
    } else {
      y(i) = 2.0 - acc * acc;
    }
  }
  y(0) = 2.0;
  y(s - 1) = 1.0;
  mirror_from_low_half(y);
  const bool adjusted = enforce_tie_consistency(lambda, y);
  FilterBank bank = orthogonal_bank(lambda, y, strategy);
  bank.tie_adjusted = adjusted;
  return bank;
}

FilterBank design_local(const Vector& lambda) {
  require_eigenvalues(lambda);
  if (lambda.size() == 2) {
    return orthogonal_bank(lambda, Vector::Ones(2), DesignStrategy::Flat);
  }
  auto alpha = design_local_candidate(lambda, DesignStrategy::Alpha);
  auto beta = design_local_candidate(lambda, DesignStrategy::Beta);
  if (!alpha && !beta) {
    throw Error(ErrorCode::DegenerateSpectrum, "lambda_s = 0 and lambda_n = lambda_{r+1}");
  }
  if (!beta) return *alpha;
  if (!alpha) return *beta;
  // NaN (tie violation) loses against any finite constant.
  const double ma = alpha->lipschitz;
  const double mb = beta->lipschitz;
  if (std::isnan(ma)) return *beta;
  if (std::isnan(mb)) return *alpha;
  return mb < ma ? *beta : *alpha;
}

FilterBank design_biorthogonal(const Vector& lambda, const Vector& f_free, SplitRule split) {
  require_eigenvalues(lambda);
  const Index n = lambda.size();
  const Index r = highpass_size(n);
  if (f_free.size() != r) {
    throw Error(ErrorCode::LengthMismatch, "f_free must have length " + std::to_string(r));
  }
  for (Index k = 0; k < r; ++k) {
    if (!(f_free(k) > 0.0 && f_free(k) < 2.0)) {
      throw Error(ErrorCode::OutOfRange, "f values must lie in (0, 2)");
    }
  }
  Vector f(n);
  for (Index k = 0; k < r; ++k) {
    f(k) = f_free(k);
    f(n - 1 - k) = 2.0 - f_free(k);
  }
  if (n % 2 == 1) f(r) = 1.0;

  FilterBank bank;
  bank.kind = BankKind::Biorthogonal;
  bank.strategy = DesignStrategy::General;
  bank.eigenvalues = lambda;
  bank.y = f;
  if (split == SplitRule::Sqrt) {
    bank.h0 = f.cwiseSqrt();
    bank.g0 = bank.h0;
  } else {
    bank.h0 = f;
    bank.g0 = Vector::Ones(n);
  }
  bank.h1 = bank.g0.reverse();
  bank.g1 = bank.h0.reverse();
  bank.lipschitz = lipschitz_or_nan(bank.h0, lambda);
  return bank;
}

double lipschitz_constant(const Vector& h, const Vector& lambda) {
  if (h.size() != lambda.size()) throw Error(ErrorCode::LengthMismatch, "h length != n");
  const double tol = tie_tolerance(lambda);
  const double htol = 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff());
  double m = 0.0;
  for (Index i = 0; i + 1 < h.size(); ++i) {
    const double dl = lambda(i + 1) - lambda(i);
    const double dh = std::abs(h(i + 1) - h(i));
    if (std::abs(dl) <= tol) {
      if (dh > htol) {
        throw Error(ErrorCode::TieViolation,
                    "filter differs on tied eigenvalues at index " + std::to_string(i));
      }
      continue;
    }
    m = std::max(m, dh / std::abs(dl));
  }
  return m;
}

Vector random_free_profile(Index r, std::uint64_t seed) {
  if (r < 1) throw Error(ErrorCode::InvalidParam, "free profile needs r >= 1");
  std::mt19937_64 rng(seed);
  Vector f(r);
  for (Index k = 0; k < r; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    f(k) = 0.1 + 1.8 * u;
  }
  return f;
}

Vector minmax_allocation(const Vector& a, double b) {
  if (a.size() == 0) throw Error(ErrorCode::Infeasible, "empty allocation");
  if ((a.array() < 0.0).any()) throw Error(ErrorCode::InvalidParam, "a must be nonnegative");
  const double total = a.sum();
  if (!(total > 0.0)) throw Error(ErrorCode::Infeasible, "a is zero");
  if (b < 0.0) throw Error(ErrorCode::Infeasible, "b < 0 with a, x >= 0");
  const double level = b / total;
  Vector x = Vector::Zero(a.size());
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != 0.0) x(i) = level;
  }
  return x;
}

PrReport verify_pr_conditions(const FilterBank& bank, double tol) {
  PrReport rep;
  const Index n = bank.n();
  if (bank.h1.size() != n || bank.g0.size() != n || bank.g1.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "filter vectors differ in length");
  }
  for (Index k = 0; k < n; ++k) {
    const Index m = n - 1 - k;
    rep.sum_residual = std::max(
        rep.sum_residual, std::abs(bank.g0(k) * bank.h0(k) + bank.g1(k) * bank.h1(k) - 2.0));
    rep.flip_residual = std::max(
        rep.flip_residual, std::abs(bank.g0(m) * bank.h0(k) - bank.g1(m) * bank.h1(k)));
    if (bank.kind == BankKind::Orthogonal) {
      rep.orthogonal_residual = std::max(
          {rep.orthogonal_residual,
           std::abs(bank.h0(k) * bank.h0(k) + bank.h1(k) * bank.h1(k) - 2.0),
           std::abs(bank.h0(k) - bank.g0(k)), std::abs(bank.h1(k) - bank.g1(k))});
    }
  }
  rep.pass = rep.sum_residual <= tol && rep.flip_residual <= tol && rep.orthogonal_residual <= tol;
  return rep;
}

}  // namespace graphfb
