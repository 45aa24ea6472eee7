#include "graphfb/polyapprox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "graphfb/error.hpp"
#include "graphfb/filter_design.hpp"

namespace graphfb {

namespace {

double clenshaw(const Vector& c, double t) {
  double b1 = 0.0, b2 = 0.0;
  for (Index k = c.size() - 1; k >= 1; --k) {
    const double b0 = c(k) + 2.0 * t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c(0) + t * b1 - b2;
}

double to_t(double lambda, double domain_max) { return 2.0 * lambda / domain_max - 1.0; }

// Piecewise-linear interpolant through strictly increasing knots, constant
// outside them.
struct PiecewiseLinear {
  std::vector<double> x, y;

  double operator()(double v) const {
    if (v <= x.front()) return y.front();
    if (v >= x.back()) return y.back();
    const auto it = std::upper_bound(x.begin(), x.end(), v);
    const std::size_t k = static_cast<std::size_t>(it - x.begin());
    const double w = (v - x[k - 1]) / (x[k] - x[k - 1]);
    return y[k - 1] + w * (y[k] - y[k - 1]);
  }
};

PiecewiseLinear make_target(const Vector& eigenvalues, const Vector& h) {
  PiecewiseLinear pl;
  const std::vector<Index> groups = tie_groups(eigenvalues);
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    if (i > 0 && groups[static_cast<std::size_t>(i)] == groups[static_cast<std::size_t>(i - 1)]) {
      continue;
    }
    pl.x.push_back(eigenvalues(i));
    pl.y.push_back(h(i));
  }
  return pl;
}

std::vector<double> make_grid(const Vector& eigenvalues, double domain_max, Index count) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count + eigenvalues.size()));
  for (Index j = 0; j < count; ++j) {
    const double theta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(count - 1);
    grid.push_back(0.5 * domain_max * (1.0 - std::cos(theta)));
  }
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    grid.push_back(std::clamp(eigenvalues(i), 0.0, domain_max));
  }
  std::sort(grid.begin(), grid.end());
  // Near-coincident nodes would make the reference system singular.
  const double min_gap = 1e-13 * domain_max;
  std::vector<double> out;
  for (double v : grid) {
    if (out.empty() || v - out.back() > min_gap) out.push_back(v);
  }
  return out;
}

// One extremum per sign run of the error, dropping those below the current
// level and then merging neighbours of equal sign (the larger survives). The
// old reference points sit at the level, so at least m + 2 points remain.
std::vector<std::size_t> alternating_extrema(const Vector& err, double level) {
  std::vector<std::size_t> runs;
  int sign = 0;
  for (Index j = 0; j < err.size(); ++j) {
    const double e = err(j);
    const int sj = e > 0.0 ? 1 : (e < 0.0 ? -1 : 0);
    if (sj == 0) continue;
    if (sj != sign) {
      runs.push_back(static_cast<std::size_t>(j));
      sign = sj;
    } else if (std::abs(e) > std::abs(err(static_cast<Index>(runs.back())))) {
      runs.back() = static_cast<std::size_t>(j);
    }
  }
  const double floor = level * (1.0 - 1e-9);
  std::vector<std::size_t> ext;
  for (std::size_t j : runs) {
    const double e = err(static_cast<Index>(j));
    if (std::abs(e) < floor) continue;
    if (!ext.empty() && (e > 0.0) == (err(static_cast<Index>(ext.back())) > 0.0)) {
      if (std::abs(e) > std::abs(err(static_cast<Index>(ext.back())))) ext.back() = j;
    } else {
      ext.push_back(j);
    }
  }
  return ext;
}

// Classical single-point exchange: insert `star` keeping sign alternation.
std::vector<std::size_t> insert_point(std::vector<std::size_t> ref, std::size_t star,
                                      const Vector& err) {
  auto sgn = [&](std::size_t j) { return err(static_cast<Index>(j)) >= 0.0; };
  if (std::find(ref.begin(), ref.end(), star) != ref.end()) return ref;
  if (star < ref.front()) {
    if (sgn(star) == sgn(ref.front())) {
      ref.front() = star;
    } else {
      ref.pop_back();
      ref.insert(ref.begin(), star);
    }
    return ref;
  }
  if (star > ref.back()) {
    if (sgn(star) == sgn(ref.back())) {
      ref.back() = star;
    } else {
      ref.erase(ref.begin());
      ref.push_back(star);
    }
    return ref;
  }
  const auto it = std::upper_bound(ref.begin(), ref.end(), star);
  std::size_t& left = *(it - 1);
  std::size_t& right = *it;
  if (sgn(star) == sgn(left)) {
    left = star;
  } else {
    right = star;
  }
  return ref;
}

std::vector<std::size_t> initial_reference(const std::vector<double>& t, Index m) {
  const std::size_t count = static_cast<std::size_t>(m + 2);
  std::vector<std::size_t> ref;
  for (std::size_t i = 0; i < count; ++i) {
    const double target =
        -std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(count - 1));
    auto it = std::lower_bound(t.begin(), t.end(), target);
    std::size_t j = static_cast<std::size_t>(it - t.begin());
    if (j == t.size()) j = t.size() - 1;
    if (j > 0 && std::abs(t[j - 1] - target) < std::abs(t[j] - target)) --j;
    if (!ref.empty() && j <= ref.back()) j = ref.back() + 1;
    ref.push_back(j);
  }
  // Bumping may have pushed past the end; pull back from the right.
  for (std::size_t i = count; i-- > 0;) {
    const std::size_t cap = t.size() - (count - i);
    if (ref[i] > cap) ref[i] = cap;
    if (i + 1 < count && ref[i] >= ref[i + 1]) ref[i] = ref[i + 1] - 1;
  }
  return ref;
}

}  // namespace

double FilterPolynomial::operator()(double lambda) const {
  return clenshaw(chebyshev, to_t(lambda, domain_max));
}

Vector FilterPolynomial::evaluate(const Vector& lambdas) const {
  Vector out(lambdas.size());
  for (Index i = 0; i < lambdas.size(); ++i) out(i) = (*this)(lambdas(i));
  return out;
}

Vector FilterPolynomial::monomial() const {
  // T_k(a lambda + b) expanded in powers of lambda.
  const double a = 2.0 / domain_max;
  const double b = -1.0;
  const Index m = degree;
  Vector out = Vector::Zero(m + 1);
  Vector prev = Vector::Zero(m + 1);
  Vector cur = Vector::Zero(m + 1);
  prev(0) = 1.0;
  out += chebyshev(0) * prev;
  if (m == 0) return out;
  cur(0) = b;
  cur(1) = a;
  out += chebyshev(1) * cur;
  for (Index k = 2; k <= m; ++k) {
    Vector next = Vector::Zero(m + 1);
    for (Index p = 0; p < m; ++p) {
      next(p + 1) += 2.0 * a * cur(p);
      next(p) += 2.0 * b * cur(p);
    }
    next -= prev;
    out += chebyshev(k) * next;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

FilterPolynomial FilterPolynomial::from_monomial(const Vector& coeffs, double domain_max) {
  if (coeffs.size() < 1) throw Error(ErrorCode::InvalidParam, "empty coefficient vector");
  if (!(domain_max > 0.0) || !std::isfinite(domain_max)) {
    throw Error(ErrorCode::InvalidParam, "domain_max must be positive");
  }
  const Index m = coeffs.size() - 1;
  const Index nodes = m + 1;
  FilterPolynomial p;
  p.degree = m;
  p.domain_max = domain_max;
  p.chebyshev = Vector::Zero(m + 1);
  // Discrete Chebyshev transform at the first-kind nodes; exact for degree <= m.
  for (Index j = 0; j < nodes; ++j) {
    const double theta =
        std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(nodes);
    const double t = std::cos(theta);
    const double lambda = 0.5 * domain_max * (t + 1.0);
    double value = 0.0;
    for (Index k = m; k >= 0; --k) value = value * lambda + coeffs(k);
    for (Index k = 0; k <= m; ++k) {
      p.chebyshev(k) += value * std::cos(static_cast<double>(k) * theta);
    }
  }
  p.chebyshev *= 2.0 / static_cast<double>(nodes);
  p.chebyshev(0) *= 0.5;
  return p;
}

FilterPolynomial remez_fit(const Vector& eigenvalues, const Vector& h, Index m,
                           const RemezOptions& opts) {
  if (m < 1) throw Error(ErrorCode::InvalidParam, "degree must be at least 1");
  if (h.size() != eigenvalues.size()) {
    throw Error(ErrorCode::LengthMismatch, "filter and eigenvalue lengths differ");
  }
  if (eigenvalues.size() < 2) throw Error(ErrorCode::InvalidParam, "need at least 2 eigenvalues");
  const double domain_max = eigenvalues(eigenvalues.size() - 1);
  if (!(domain_max > 0.0)) throw Error(ErrorCode::InvalidParam, "largest eigenvalue must be positive");
  // Throws TieViolation for filters that differ on tied eigenvalues.
  (void)lipschitz_constant(h, eigenvalues);

  const PiecewiseLinear target = make_target(eigenvalues, h);
  const Index grid_count = std::max(opts.min_grid, opts.grid_per_degree * (m + 1));
  const std::vector<double> grid = make_grid(eigenvalues, domain_max, grid_count);
  const Index g = static_cast<Index>(grid.size());
  if (g < m + 2) throw Error(ErrorCode::InvalidParam, "grid too small for the requested degree");

  std::vector<double> t(grid.size());
  Vector f(g);
  for (Index j = 0; j < g; ++j) {
    t[static_cast<std::size_t>(j)] = to_t(grid[static_cast<std::size_t>(j)], domain_max);
    f(j) = target(grid[static_cast<std::size_t>(j)]);
  }
  // Chebyshev-Vandermonde rows on the grid.
  Matrix basis(g, m + 1);
  for (Index j = 0; j < g; ++j) {
    const double tj = t[static_cast<std::size_t>(j)];
    basis(j, 0) = 1.0;
    basis(j, 1) = tj;
    for (Index k = 2; k <= m; ++k) basis(j, k) = 2.0 * tj * basis(j, k - 1) - basis(j, k - 2);
  }
  const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());

  std::vector<std::size_t> ref = initial_reference(t, m);
  Vector best = Vector::Zero(m + 1);
  double best_err = std::numeric_limits<double>::infinity();
  bool converged = false;

  for (Index iter = 0; iter < opts.max_iterations; ++iter) {
    Matrix sys(m + 2, m + 2);
    Vector rhs(m + 2);
    for (Index i = 0; i < m + 2; ++i) {
      const Index j = static_cast<Index>(ref[static_cast<std::size_t>(i)]);
      sys.row(i).head(m + 1) = basis.row(j);
      sys(i, m + 1) = (i % 2 == 0) ? 1.0 : -1.0;
      rhs(i) = f(j);
    }
    const Vector sol = sys.colPivHouseholderQr().solve(rhs);
    const Vector c = sol.head(m + 1);
    const double level = std::abs(sol(m + 1));
    if (!c.allFinite()) break;

    const Vector err = f - basis * c;
    Index jmax = 0;
    const double gmax = err.cwiseAbs().maxCoeff(&jmax);
    if (gmax < best_err) {
      best_err = gmax;
      best = c;
    }
    if (gmax <= 1e-14 * scale || gmax - level <= opts.level_tolerance * gmax) {
      converged = true;
      break;
    }

    std::vector<std::size_t> next = alternating_extrema(err, level);
    if (static_cast<Index>(next.size()) >= m + 2) {
      while (static_cast<Index>(next.size()) > m + 2) {
        const double front = std::abs(err(static_cast<Index>(next.front())));
        const double back = std::abs(err(static_cast<Index>(next.back())));
        if (front < back || (front == back && next.back() != static_cast<std::size_t>(jmax))) {
          next.erase(next.begin());
        } else {
          next.pop_back();
        }
      }
    } else {
      next = insert_point(ref, static_cast<std::size_t>(jmax), err);
    }
    if (next == ref) break;
    ref = std::move(next);
  }

  FilterPolynomial p;
  p.degree = m;
  p.domain_max = domain_max;
  p.chebyshev = best;
  p.converged = converged;
  p.sup_error = (h - p.evaluate(eigenvalues)).cwiseAbs().maxCoeff();
  return p;
}

Signal poly_apply(const FilterPolynomial& p, const SparseMatrix& l, const Signal& x) {
  if (l.rows() != l.cols() || l.rows() != x.size()) {
    throw Error(ErrorCode::LengthMismatch, "Laplacian is " + std::to_string(l.rows()) + "x" +
                                               std::to_string(l.cols()) + ", signal has length " +
                                               std::to_string(x.size()));
  }
  const Vector& c = p.chebyshev;
  const Index m = c.size() - 1;
  const double a = 2.0 / p.domain_max;
  // t(L) v = a L v - v
  auto shifted = [&](const Vector& v) -> Vector { return a * (l * v) - v; };
  if (m == 0) return c(0) * x;
  Vector b2 = Vector::Zero(x.size());
  Vector b1 = c(m) * x;
  for (Index k = m - 1; k >= 1; --k) {
    Vector b0 = c(k) * x + 2.0 * shifted(b1) - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return c(0) * x + shifted(b1) - b2;
}

Signal poly_apply(const FilterPolynomial& p, const Matrix& l, const Signal& x) {
  const SparseMatrix sl = l.sparseView();
  return poly_apply(p, sl, x);
}

double operator_error(const SpectralDecomposition& sd, const Vector& h, const FilterPolynomial& p) {
  if (h.size() != sd.n()) throw Error(ErrorCode::LengthMismatch, "filter length mismatch");
  return (h - p.evaluate(sd.eigenvalues)).cwiseAbs().maxCoeff();
}

double error_bound(double lipschitz, double lambda_max, Index m) {
  if (m < 1) throw Error(ErrorCode::InvalidParam, "degree must be at least 1");
  return 6.0 * lambda_max * lipschitz / static_cast<double>(m);
}

SparseMatrix sparse_laplacian(const Graph& g) {
  const Matrix l = laplacian(g);
  return l.sparseView();
}

}  // namespace graphfb
