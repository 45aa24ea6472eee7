#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "graphfb/error.hpp"
#include "graphfb/filter_design.hpp"
#include "graphfb/spectral.hpp"
#include "test_support.hpp"

using namespace graphfb;
using graphfb::testing::four_vertex_graph;
using graphfb::testing::max_abs;
using graphfb::testing::uniform_vector;

namespace {

void expect_contract(const SpectralDecomposition& sd, const Matrix& l) {
  const Index n = sd.n();
  const double scale = std::max(1.0, sd.lambda_max());
  EXPECT_LE(max_abs(sd.basis.transpose() * sd.basis - Matrix::Identity(n, n)), 1e-10);
  EXPECT_LE(max_abs(l * sd.basis - sd.basis * sd.eigenvalues.asDiagonal()), 1e-8 * scale);
  EXPECT_EQ(sd.eigenvalues(0), 0.0);
  for (Index i = 1; i < n; ++i) EXPECT_LE(sd.eigenvalues(i - 1), sd.eigenvalues(i));
  for (Index k = 0; k < n; ++k) {
    Index first = 0;
    while (std::abs(sd.basis(first, k)) <= 1e-12) ++first;
    EXPECT_GT(sd.basis(first, k), 0.0) << "column " << k;
  }
}

}  // namespace

TEST(EigSym, FourVertexGraphSpectrum) {
  const SpectralDecomposition sd = eig_sym(laplacian(four_vertex_graph()));
  const Vector expected = (Vector(4) << 0, 4, 5, 7).finished();
  EXPECT_LE((sd.eigenvalues - expected).cwiseAbs().maxCoeff(), 1e-9);
  expect_contract(sd, laplacian(four_vertex_graph()));
}

TEST(EigSym, RingSpectrumMatchesCycleFormula) {
  for (Index n : {4, 5, 16, 31}) {
    const Matrix l = laplacian(gen_ring(n));
    const SpectralDecomposition sd = eig_sym(l);
    std::vector<double> analytic;
    for (Index k = 0; k < n; ++k) {
      analytic.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                              static_cast<double>(n)));
    }
    std::sort(analytic.begin(), analytic.end());
    for (Index k = 0; k < n; ++k) {
      EXPECT_NEAR(sd.eigenvalues(k), analytic[static_cast<std::size_t>(k)], 1e-10);
    }
    expect_contract(sd, l);
  }
}

TEST(EigSym, ZeroMatrixGivesIdentity) {
  const SpectralDecomposition sd = eig_sym(Matrix::Zero(3, 3));
  EXPECT_EQ(sd.eigenvalues, Vector::Zero(3));
  EXPECT_LE(max_abs(sd.basis - Matrix::Identity(3, 3)), 1e-15);
}

TEST(EigSym, DeterministicAndCorpusContract) {
  for (const auto& [name, g] : graphfb::testing::small_corpus()) {
    const Matrix l = laplacian(g);
    const SpectralDecomposition a = eig_sym(l);
    const SpectralDecomposition b = eig_sym(l);
    EXPECT_EQ(a.eigenvalues, b.eigenvalues) << name;
    EXPECT_EQ(a.basis, b.basis) << name;
    expect_contract(a, l);
  }
}

TEST(EigSym, TiedEigenspaceBasisIsCanonical) {
  // Scaling L keeps every eigenspace but changes what the solver sees; the
  // canonical basis inside tied groups must not move.
  const Matrix l = laplacian(gen_ring(12));
  const SpectralDecomposition a = eig_sym(l);
  const SpectralDecomposition b = eig_sym(2.5 * l);
  EXPECT_LE(max_abs(a.basis - b.basis), 1e-10);
  EXPECT_LE((2.5 * a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(EigSym, RejectsAsymmetric) {
  Matrix m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(eig_sym(m), Error);
}

TEST(Gft, BasisVectorAndRoundTrip) {
  const Graph g = gen_sensor(80, 2, 0.3);
  const SpectralDecomposition sd = eig_sym(laplacian(g));
  EXPECT_LE((gft(sd, sd.basis.col(0)) - Vector::Unit(80, 0)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(gft(sd, Vector::Zero(80)), Vector::Zero(80));
  std::mt19937_64 rng(5);
  const Vector x = uniform_vector(rng, 80);
  const Vector y = uniform_vector(rng, 80);
  EXPECT_LE((igft(sd, gft(sd, x)) - x).norm(), 1e-10 * x.norm());
  EXPECT_NEAR(gft(sd, x).norm(), x.norm(), 1e-10 * x.norm());
  EXPECT_NEAR(gft(sd, x).dot(y), x.dot(igft(sd, y)), 1e-10);
  EXPECT_THROW(gft(sd, Vector::Zero(3)), Error);
}

TEST(ApplyFilter, IdentityAndProjection) {
  const SpectralDecomposition sd = eig_sym(laplacian(gen_ring(4)));
  std::mt19937_64 rng(9);
  const Vector x = uniform_vector(rng, 4);
  EXPECT_LE((apply_filter(sd, Vector::Ones(4), x) - x).cwiseAbs().maxCoeff(), 1e-12);
  // Indicator of the zero frequency projects onto the constants.
  const Vector mean = apply_filter(sd, Vector::Unit(4, 0), x);
  EXPECT_LE((mean - Vector::Constant(4, x.mean())).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(apply_filter(sd, Vector::Ones(3), x), Error);
}

TEST(ApplyFilter, IdealLowpassKillsTopFrequency) {
  const SpectralDecomposition sd = eig_sym(laplacian(gen_sensor(40, 1, 0.4)));
  const FilterBank bank = design_ideal(sd.eigenvalues);
  EXPECT_LE(apply_filter(sd, bank.h0, sd.basis.col(39)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FilterMatrix, Identities) {
  const Graph g = gen_sensor(30, 6, 0.4);
  const Matrix l = laplacian(g);
  const SpectralDecomposition sd = eig_sym(l);
  EXPECT_LE(max_abs(filter_matrix(sd, Vector::Ones(30)) - Matrix::Identity(30, 30)), 1e-12);
  EXPECT_LE(max_abs(filter_matrix(sd, sd.eigenvalues) - l), 1e-8 * sd.lambda_max());
  std::mt19937_64 rng(1);
  const Vector h = uniform_vector(rng, 30);
  const Matrix f = filter_matrix(sd, h);
  EXPECT_LE(max_abs(f - f.transpose()), 1e-12);
  const Vector x = uniform_vector(rng, 30);
  EXPECT_LE((f * x - apply_filter(sd, h, x)).cwiseAbs().maxCoeff(), 1e-10);
  try {
    filter_matrix(sd, h, 10);
    ADD_FAILURE() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(FilterMatrix, OperatorNormEqualsMaxDifferenceOnSpectrum) {
  // Singular-value oracle for ||F_h - F_h'||_2 with filters constant on ties.
  const SpectralDecomposition sd = eig_sym(laplacian(gen_ring(16)));
  const std::vector<Index> groups = tie_groups(sd.eigenvalues);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const Vector per_group = uniform_vector(rng, 16);
    const Vector per_group2 = uniform_vector(rng, 16);
    Vector h(16), h2(16);
    for (Index i = 0; i < 16; ++i) {
      h(i) = per_group(groups[static_cast<std::size_t>(i)]);
      h2(i) = per_group2(groups[static_cast<std::size_t>(i)]);
    }
    const Matrix diff = filter_matrix(sd, h) - filter_matrix(sd, h2);
    const double norm2 = Eigen::JacobiSVD<Matrix>(diff).singularValues()(0);
    EXPECT_NEAR(norm2, (h - h2).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(TieGroups, RingPairs) {
  const SpectralDecomposition sd = eig_sym(laplacian(gen_ring(6)));
  EXPECT_EQ(tie_groups(sd.eigenvalues), (std::vector<Index>{0, 1, 1, 2, 2, 3}));
}

TEST(EigCache, RoundTripAndCachedCall) {
  const auto dir = std::filesystem::temp_directory_path() / "graphfb_eig_cache_test";
  std::filesystem::remove_all(dir);
  const Matrix l = laplacian(gen_sensor(25, 3, 0.4));
  const SpectralDecomposition fresh = eig_sym_cached(l, dir);
  const SpectralDecomposition cached = eig_sym_cached(l, dir);
  EXPECT_EQ(fresh.eigenvalues, cached.eigenvalues);
  EXPECT_EQ(fresh.basis, cached.basis);
  EXPECT_EQ(fresh.basis, eig_sym(l).basis);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    EXPECT_EQ(entry.path().extension(), ".eig");
    ++files;
  }
  EXPECT_EQ(files, 1u);
  EXPECT_NE(content_hash(l), content_hash(laplacian(gen_ring(25))));
  std::filesystem::remove_all(dir);
}

TEST(EigCache, RejectsCorruptFile) {
  const auto path = std::filesystem::temp_directory_path() / "graphfb_bad.eig";
  {
    std::ofstream out(path, std::ios::binary);
    out << "not an eig file";
  }
  EXPECT_THROW(load_decomposition(path), Error);
  std::filesystem::remove(path);
}
