#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphfb/graph.hpp"

namespace graphfb::testing {

/// The four-vertex example graph: w01 = w02 = w12 = w13 = 1, w03 = w23 = 2.
inline Graph four_vertex_graph() {
  const std::vector<Edge> edges = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 2.0},
                                   {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 2.0}};
  return build_graph(4, edges);
}

inline Vector uniform_vector(std::mt19937_64& rng, Index n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// 50 connected graphs with sizes spread over 2..64, cycling through ring,
/// sensor and community generators with fixed seeds.
inline std::vector<NamedGraph> small_corpus() {
  std::vector<NamedGraph> out;
  for (Index k = 0; k < 50; ++k) {
    const Index n = 2 + (k * 62) / 49;
    const auto seed = static_cast<std::uint64_t>(1000 + k);
    const Index kind = k % 3;
    if (kind == 0 && n >= 3) {
      out.push_back({"ring" + std::to_string(n), gen_ring(n)});
    } else if (kind == 2 && n >= 4) {
      const Index blocks = std::min<Index>(4, n / 4);
      out.push_back({"community" + std::to_string(n) + "-" + std::to_string(seed),
                     gen_community(n, seed, blocks, 0.3, 0.02)});
    } else {
      out.push_back({"sensor" + std::to_string(n) + "-" + std::to_string(seed),
                     gen_sensor(n, seed, 0.3)});
    }
  }
  return out;
}

}  // namespace graphfb::testing
