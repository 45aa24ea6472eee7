#include "graphfb/coarsen.hpp"

#include <algorithm>

#include "graphfb/error.hpp"
#include "graphfb/sampler.hpp"
#include "graphfb/spectral.hpp"

namespace graphfb {

CoarseMap coarsen(const Graph& g) {
  const Index n = g.n();
  const Index s = lowpass_size(n);
  const Index r = highpass_size(n);

  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  std::vector<Index> mate(static_cast<std::size_t>(n), -1);
  Index merges = 0;
  for (const Edge& e : edges) {
    if (merges == r) break;
    auto& mi = mate[static_cast<std::size_t>(e.i)];
    auto& mj = mate[static_cast<std::size_t>(e.j)];
    if (mi < 0 && mj < 0) {
      mi = e.j;
      mj = e.i;
      ++merges;
    }
  }
  Index pending = -1;
  for (Index v = 0; v < n && merges < r; ++v) {
    if (mate[static_cast<std::size_t>(v)] >= 0) continue;
    if (pending < 0) {
      pending = v;
    } else {
      mate[static_cast<std::size_t>(v)] = pending;
      mate[static_cast<std::size_t>(pending)] = v;
      pending = -1;
      ++merges;
    }
  }

  CoarseMap cm;
  cm.fine_n = n;
  cm.coarse_n = s;
  cm.assignment.assign(static_cast<std::size_t>(n), -1);
  Index next = 0;
  for (Index v = 0; v < n; ++v) {
    if (cm.assignment[static_cast<std::size_t>(v)] >= 0) continue;
    cm.assignment[static_cast<std::size_t>(v)] = next;
    const Index m = mate[static_cast<std::size_t>(v)];
    if (m >= 0) cm.assignment[static_cast<std::size_t>(m)] = next;
    ++next;
  }
  if (next != s) throw Error(ErrorCode::InvalidParam, "coarsening produced wrong supernode count");

  if (s >= 2) {
    Matrix w = Matrix::Zero(s, s);
    for (const Edge& e : g.edges()) {
      const Index a = cm.assignment[static_cast<std::size_t>(e.i)];
      const Index b = cm.assignment[static_cast<std::size_t>(e.j)];
      if (a == b) continue;
      w(a, b) += e.w;
      w(b, a) += e.w;
    }
    chain_components(w);
    cm.coarse_graph = Graph::from_weights(std::move(w));
  }
  return cm;
}

Matrix coarse_basis(const CoarseMap& cm) {
  if (cm.trivial() || !cm.coarse_graph) return Matrix::Identity(cm.coarse_n, cm.coarse_n);
  return eig_sym(laplacian(*cm.coarse_graph)).basis;
}

}  // namespace graphfb
