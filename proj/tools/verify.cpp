// Invariant suite behind `graphfb verify`.
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <iostream>
#include <random>
#include <string>

#include "commands.hpp"
#include "graphfb/error.hpp"
#include "graphfb/filter_design.hpp"
#include "graphfb/mallat.hpp"
#include "graphfb/metrics.hpp"
#include "graphfb/polyapprox.hpp"
#include "graphfb/sampler.hpp"

namespace graphfb::cli {

namespace {

class Report {
 public:
  void check(const std::string& name, bool ok, double value, double limit) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << " value=" << value << " limit=" << limit
              << '\n';
    if (!ok) ++failures_;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

Vector random_signal(std::mt19937_64& rng, Index n) {
  Vector x(n);
  for (Index i = 0; i < n; ++i) x(i) = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
  return x;
}

}  // namespace

int cmd_verify(const VerifyArgs& a) {
  const Graph g = read_graph(a.graph);
  const Index n = g.n();
  const LevelOptions opts = [] {
    LevelOptions o;
    if (const char* dir = std::getenv("GRAPHFB_EIG_CACHE"); dir != nullptr && *dir != '\0') {
      o.eig_cache = dir;
    }
    return o;
  }();
  std::mt19937_64 rng(a.seed);
  Report rep;

  const SpectralDecomposition sd = decompose(g, opts);
  const Matrix l = laplacian(g);
  const Matrix& u = sd.basis;
  const double scale = std::max(1.0, sd.lambda_max());
  const Matrix id = Matrix::Identity(n, n);
  {
    const double orth = (u.transpose() * u - id).cwiseAbs().maxCoeff();
    rep.check("eigenbasis orthonormal", orth <= 1e-10, orth, 1e-10);
    const double resid = (l * u - u * sd.eigenvalues.asDiagonal()).cwiseAbs().maxCoeff();
    rep.check("eigen residual", resid <= 1e-9 * scale, resid, 1e-9 * scale);
  }

  const CoarseMap cm = coarsen(g);
  const SamplerSet sam = make_samplers(sd, coarse_basis(cm));
  {
    const Matrix& q = sam.q;
    const double low = (sam.b_low() * sam.a_low - 0.5 * (id + q)).cwiseAbs().maxCoeff();
    const double high = (sam.b_high() * sam.a_high - 0.5 * (id - q)).cwiseAbs().maxCoeff();
    const double flip = (q * u - u * make_phi(n)).cwiseAbs().maxCoeff();
    const double invol = (q * q - id).cwiseAbs().maxCoeff();
    rep.check("B_L A_L = (I+Q)/2", low <= 1e-10, low, 1e-10);
    rep.check("B_H A_H = (I-Q)/2", high <= 1e-10, high, 1e-10);
    rep.check("Q U = U Phi", flip <= 1e-10, flip, 1e-10);
    rep.check("Q^2 = I", invol <= 1e-10, invol, 1e-10);
  }

  struct Named {
    std::string name;
    FilterBank bank;
  };
  std::vector<Named> banks;
  banks.push_back({"ideal", design_ideal(sd.eigenvalues)});
  banks.push_back({"local", design_local(sd.eigenvalues)});
  banks.push_back({"bior", design_biorthogonal(sd.eigenvalues,
                                               random_free_profile(highpass_size(n), a.seed))});

  for (const auto& [name, bank] : banks) {
    const PrReport pr = verify_pr_conditions(bank);
    rep.check(name + " PR sum condition", pr.sum_residual <= kPrTolerance, pr.sum_residual,
              kPrTolerance);
    rep.check(name + " PR flip condition", pr.flip_residual <= kPrTolerance, pr.flip_residual,
              kPrTolerance);
    if (bank.kind == BankKind::Orthogonal) {
      rep.check(name + " orthogonality", pr.orthogonal_residual <= 1e-12, pr.orthogonal_residual,
                1e-12);
    }
    const LevelTransform lt = make_level(g, sd, bank);
    double worst = 0.0;
    for (Index k = 0; k < a.signals; ++k) {
      const Vector x = random_signal(rng, n);
      const ChannelPair ch = analyze(lt, x);
      worst = std::max(worst, rel_error(x, synthesize(lt, ch.low, ch.high)));
    }
    rep.check(name + " single-level roundtrip", worst <= 1e-10, worst, 1e-10);

    if (std::abs(bank.g0(n - 1)) <= 1e-12) {
      double excess = -std::numeric_limits<double>::infinity();
      double relaxed = -std::numeric_limits<double>::infinity();
      for (Index k = 0; k < a.signals; ++k) {
        const Vector x = random_signal(rng, n);
        const ErrorBoundParts parts = lowpass_error_bound(bank, sd, x);
        const DirichletBoundCheck d = dirichlet_bound_check(bank, sd, x);
        excess = std::max(excess, d.lhs - parts.bound);
        relaxed = std::max(relaxed, d.lhs - d.rhs);
      }
      rep.check(name + " lowpass error bound", excess <= 1e-10, excess, 1e-10);
      rep.check(name + " Dirichlet relaxation", relaxed <= 1e-10, relaxed, 1e-10);
    }
  }

  {
    const Pyramid p = build_pyramid(g, static_cast<Index>(a.depth), Design::Local, opts);
    const Vector x = random_signal(rng, n);
    const Coefficients c = multilevel_analyze(p, x);
    rep.check("critical sampling", c.total_size() == n, static_cast<double>(c.total_size()),
              static_cast<double>(n));
    const double re = rel_error(x, multilevel_synthesize(p, c));
    rep.check("multilevel roundtrip (depth " + std::to_string(p.depth()) + ")", re <= 1e-9, re,
              1e-9);
  }

  {
    const FilterBank& local = banks[1].bank;
    const SparseMatrix sl = sparse_laplacian(g);
    double prev = std::numeric_limits<double>::infinity();
    double worst_bound = -std::numeric_limits<double>::infinity();
    double worst_mono = -std::numeric_limits<double>::infinity();
    double worst_locality = 0.0;
    for (Index m = 2; m <= 10; ++m) {
      const FilterPolynomial p = remez_fit(sd.eigenvalues, local.h0, m);
      worst_bound = std::max(worst_bound,
                             p.sup_error - error_bound(local.lipschitz, sd.lambda_max(), m));
      worst_mono = std::max(worst_mono, p.sup_error - prev);
      prev = p.sup_error;
      const Vector resp = poly_apply(p, sl, Vector::Unit(n, 0));
      const std::vector<Index> hops = hop_distances(g, 0);
      for (Index i = 0; i < n; ++i) {
        if (hops[static_cast<std::size_t>(i)] > m) {
          worst_locality = std::max(worst_locality, std::abs(resp(i)));
        }
      }
    }
    rep.check("polynomial error bound", worst_bound <= 0.0, worst_bound, 0.0);
    rep.check("polynomial error monotone", worst_mono <= 1e-10, worst_mono, 1e-10);
    rep.check("polynomial locality", worst_locality <= 1e-12, worst_locality, 1e-12);
  }

  if (rep.failures() > 0) {
    std::cerr << "graphfb: " << rep.failures() << " invariant(s) failed\n";
    return 3;
  }
  return 0;
}

}  // namespace graphfb::cli
