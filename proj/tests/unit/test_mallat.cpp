#include <gtest/gtest.h>

#include <sstream>

#include "graphfb/error.hpp"
#include "graphfb/mallat.hpp"
#include "graphfb/metrics.hpp"
#include "test_support.hpp"

using namespace graphfb;
using graphfb::testing::four_vertex_graph;
using graphfb::testing::max_abs;
using graphfb::testing::uniform_vector;

TEST(Analyze, ZeroAndShapes) {
  const LevelTransform lt = make_level(gen_ring(9), Design::Local);
  const ChannelPair ch = analyze(lt, Vector::Zero(9));
  EXPECT_EQ(ch.low, Vector::Zero(5));
  EXPECT_EQ(ch.high, Vector::Zero(4));
  EXPECT_EQ(synthesize(lt, Vector::Zero(5), Vector::Zero(4)), Vector::Zero(9));
  EXPECT_EQ(lowpass_reconstruct(lt, Vector::Zero(5)), Vector::Zero(9));
  EXPECT_THROW(analyze(lt, Vector::Zero(8)), Error);
  EXPECT_THROW(synthesize(lt, Vector::Zero(4), Vector::Zero(4)), Error);
  EXPECT_THROW(lowpass_reconstruct(lt, Vector::Zero(4)), Error);
}

TEST(Analyze, IdealKillsConstantInHighChannel) {
  const LevelTransform lt = make_level(gen_sensor(30, 2, 0.4), Design::Ideal);
  const ChannelPair ch = analyze(lt, lt.spectral.basis.col(0));
  EXPECT_LE(ch.high.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Analyze, FourVertexGraphRoundTrip) {
  std::mt19937_64 rng(1);
  for (Design d : {Design::Ideal, Design::Local}) {
    const LevelTransform lt = make_level(four_vertex_graph(), d);
    const Vector x = uniform_vector(rng, 4);
    const ChannelPair ch = analyze(lt, x);
    EXPECT_LE((synthesize(lt, ch.low, ch.high) - x).norm(), 1e-10 * x.norm());
  }
}

TEST(Analyze, CorpusRoundTripAndEnergy) {
  std::mt19937_64 rng(2);
  for (const auto& [name, g] : graphfb::testing::small_corpus()) {
    for (Design d : {Design::Ideal, Design::Local}) {
      const LevelTransform lt = make_level(g, d);
      const Vector x = uniform_vector(rng, g.n());
      const ChannelPair ch = analyze(lt, x);
      EXPECT_LE(rel_error(x, synthesize(lt, ch.low, ch.high)), 1e-10) << name;
      // Orthogonal banks give an orthogonal stacked analysis operator.
      EXPECT_NEAR(ch.low.squaredNorm() + ch.high.squaredNorm(), x.squaredNorm(),
                  1e-9 * x.squaredNorm())
          << name;
      Matrix stacked(g.n(), g.n());
      stacked.topRows(lt.samplers.s) = lt.samplers.a_low * filter_matrix(lt.spectral, lt.bank.h0);
      stacked.bottomRows(lt.samplers.r) =
          lt.samplers.a_high * filter_matrix(lt.spectral, lt.bank.h1);
      EXPECT_LE(max_abs(stacked.transpose() * stacked - Matrix::Identity(g.n(), g.n())), 1e-9)
          << name;
    }
  }
}

TEST(Analyze, BiorthogonalRoundTrip) {
  const Graph g = gen_sensor(40, 12, 0.35);
  const SpectralDecomposition sd = eig_sym(laplacian(g));
  std::mt19937_64 rng(5);
  for (SplitRule rule : {SplitRule::Sqrt, SplitRule::Uneven}) {
    const FilterBank bank = design_biorthogonal(sd.eigenvalues, random_free_profile(20, 9), rule);
    const LevelTransform lt = make_level(g, sd, bank);
    const Vector x = uniform_vector(rng, 40);
    const ChannelPair ch = analyze(lt, x);
    EXPECT_LE(rel_error(x, synthesize(lt, ch.low, ch.high)), 1e-10);
  }
}

TEST(MakeLevel, RejectsBankForOtherSpectrum) {
  const Graph g = gen_ring(8);
  const SpectralDecomposition sd = eig_sym(laplacian(g));
  const FilterBank other = design_local(eig_sym(laplacian(gen_sensor(8, 1, 0.6))).eigenvalues);
  EXPECT_THROW(make_level(g, sd, other), Error);
}

TEST(LowpassReconstruct, BandlimitedIsExactForIdeal) {
  const Graph g = gen_sensor(60, 21, 0.3);
  const LevelTransform lt = make_level(g, Design::Ideal);
  ASSERT_FALSE(lt.bank.tie_adjusted);
  std::mt19937_64 rng(8);
  const Vector coeffs = uniform_vector(rng, 30);
  const Vector x = lt.spectral.basis.leftCols(30) * coeffs;
  const Vector y = lowpass_reconstruct(lt, analyze(lt, x).low);
  EXPECT_LE((y - x).norm(), 1e-10 * x.norm());
}

TEST(LowpassReconstruct, SmoothSignalWithinBound) {
  const Graph g = gen_sensor(80, 4, 0.25);
  const LevelTransform lt = make_level(g, Design::Local);
  std::mt19937_64 rng(6);
  Vector x(80);
  for (Index i = 0; i < 80; ++i) x(i) = std::cos(0.05 * static_cast<double>(i)) + 0.01 * uniform_vector(rng, 1)(0);
  const double err = (x - lowpass_reconstruct(lt, analyze(lt, x).low)).norm();
  EXPECT_LE(err, lowpass_error_bound(lt.bank, lt.spectral, x).bound + 1e-10);
  EXPECT_NEAR(err, lowpass_error(lt.bank, lt.spectral, x), 1e-10);
}

TEST(Pyramid, LevelSizesAndTruncation) {
  const Pyramid p = build_pyramid(gen_ring(16), 3, Design::Local);
  ASSERT_EQ(p.depth(), 3);
  EXPECT_EQ(p.levels[0].graph.n(), 16);
  EXPECT_EQ(p.levels[1].graph.n(), 8);
  EXPECT_EQ(p.levels[2].graph.n(), 4);
  EXPECT_FALSE(p.truncated());

  const Pyramid q = build_pyramid(gen_ring(5), 2, Design::Ideal);
  ASSERT_EQ(q.depth(), 2);
  EXPECT_EQ(q.levels[1].graph.n(), 3);

  const Pyramid t = build_pyramid(gen_ring(5), 10, Design::Local);
  EXPECT_TRUE(t.truncated());
  EXPECT_EQ(t.depth(), 3);  // 5 -> 3 -> 2, and 2 coarsens to a single vertex
  EXPECT_EQ(t.levels.back().graph.n(), 2);

  EXPECT_THROW(build_pyramid(gen_ring(5), 0, Design::Local), Error);
}

TEST(Pyramid, LevelsChainThroughCoarseGraphs) {
  const Pyramid p = build_pyramid(gen_sensor(50, 3, 0.3), 4, Design::Local);
  for (std::size_t l = 0; l + 1 < p.levels.size(); ++l) {
    EXPECT_TRUE(*p.levels[l].coarse.coarse_graph == p.levels[l + 1].graph);
  }
}

TEST(Multilevel, DepthOneMatchesSingleLevel) {
  const Pyramid p = build_pyramid(gen_ring(12), 1, Design::Local);
  std::mt19937_64 rng(4);
  const Vector x = uniform_vector(rng, 12);
  const Coefficients c = multilevel_analyze(p, x);
  const ChannelPair ch = analyze(p.levels[0], x);
  EXPECT_EQ(c.approx, ch.low);
  ASSERT_EQ(c.details.size(), 1u);
  EXPECT_EQ(c.details[0], ch.high);
  EXPECT_EQ(multilevel_synthesize(p, c), synthesize(p.levels[0], ch.low, ch.high));
}

TEST(Multilevel, CriticalSamplingAndRoundTrip) {
  const Pyramid p3 = build_pyramid(gen_ring(64), 3, Design::Local);
  std::mt19937_64 rng(7);
  const Vector x = uniform_vector(rng, 64);
  const Coefficients c3 = multilevel_analyze(p3, x);
  EXPECT_EQ(c3.layout(), (std::vector<Index>{8, 8, 16, 32}));
  EXPECT_EQ(c3.total_size(), 64);

  const Pyramid p4 = build_pyramid(gen_ring(64), 4, Design::Ideal);
  const Coefficients c4 = multilevel_analyze(p4, x);
  EXPECT_EQ(c4.total_size(), 64);
  EXPECT_LE(rel_error(x, multilevel_synthesize(p4, c4)), 1e-9);

  for (const auto& [name, g] : graphfb::testing::small_corpus()) {
    const Pyramid p = build_pyramid(g, 3, Design::Local);
    const Vector y = uniform_vector(rng, g.n());
    const Coefficients c = multilevel_analyze(p, y);
    EXPECT_EQ(c.total_size(), g.n()) << name;
    EXPECT_LE(rel_error(y, multilevel_synthesize(p, c)), 1e-9) << name;
  }
}

TEST(Multilevel, ShapeMismatch) {
  const Pyramid p = build_pyramid(gen_ring(16), 2, Design::Local);
  Coefficients c = multilevel_analyze(p, Vector::Ones(16));
  c.details.pop_back();
  EXPECT_THROW(multilevel_synthesize(p, c), Error);
}

TEST(Coefficients, FlattenLayoutAndFileRoundTrip) {
  const Pyramid p = build_pyramid(gen_ring(10), 2, Design::Local);
  std::mt19937_64 rng(1);
  const Coefficients c = multilevel_analyze(p, uniform_vector(rng, 10));
  // Coarsest approximation, then details from coarsest to finest.
  EXPECT_EQ(c.layout(), (std::vector<Index>{3, 2, 5}));
  const Vector flat = c.flatten();
  EXPECT_EQ(flat.head(3), c.approx);
  EXPECT_EQ(flat.segment(3, 2), c.details[1]);
  EXPECT_EQ(flat.tail(5), c.details[0]);

  std::stringstream ss;
  format_coefficients(ss, c);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "graphfb-coeffs v1 2 3 2 5");
  const Coefficients back = parse_coefficients(ss);
  EXPECT_EQ(back.approx, c.approx);
  EXPECT_EQ(back.details, c.details);

  std::stringstream bad("graphfb-coeffs v1 2 3 2\n1\n");
  EXPECT_THROW(parse_coefficients(bad), Error);
}
