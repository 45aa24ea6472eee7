#include "graphfb/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <string>

#include "graphfb/error.hpp"

namespace graphfb {

namespace {

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_square(const Matrix& w) {
  if (w.rows() != w.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "weight matrix must be square");
  }
  if (w.rows() < 2) {
    throw Error(ErrorCode::InvalidParam, "graph needs at least 2 vertices");
  }
}

}  // namespace

Graph Graph::from_weights(Matrix weights) {
  require_square(weights);
  const Index n = weights.rows();
  for (Index i = 0; i < n; ++i) {
    if (weights(i, i) != 0.0) {
      throw Error(ErrorCode::SelfLoop, "nonzero diagonal at vertex " + std::to_string(i));
    }
    for (Index j = 0; j < n; ++j) {
      const double w = weights(i, j);
      if (!std::isfinite(w)) {
        throw Error(ErrorCode::InvalidParam, "non-finite weight");
      }
      if (w < 0.0) {
        throw Error(ErrorCode::NegativeWeight,
                    "w(" + std::to_string(i) + "," + std::to_string(j) + ") < 0");
      }
      if (w != weights(j, i)) {
        throw Error(ErrorCode::NotSymmetric, "weights are not symmetric");
      }
    }
  }
  const auto comp = connected_components(weights);
  if (*std::max_element(comp.begin(), comp.end()) != 0) {
    throw Error(ErrorCode::Disconnected, "graph has more than one component");
  }
  return Graph(std::move(weights));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Index i = 0; i < n(); ++i) {
    for (Index j = i + 1; j < n(); ++j) {
      if (weights_(i, j) != 0.0) out.push_back({i, j, weights_(i, j)});
    }
  }
  return out;
}

std::vector<std::vector<Index>> Graph::adjacency() const {
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n()));
  for (Index i = 0; i < n(); ++i) {
    for (Index j = 0; j < n(); ++j) {
      if (weights_(i, j) != 0.0) adj[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  return adj;
}

Graph build_graph(Index n, std::span<const Edge> edges, IndexBase base) {
  if (n < 2) throw Error(ErrorCode::InvalidParam, "graph needs at least 2 vertices");
  const Index offset = base == IndexBase::One ? 1 : 0;
  Matrix w = Matrix::Zero(n, n);
  for (const Edge& e : edges) {
    const Index i = e.i - offset;
    const Index j = e.j - offset;
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw Error(ErrorCode::InvalidParam, "edge index out of range");
    }
    if (i == j) throw Error(ErrorCode::SelfLoop, "edge at vertex " + std::to_string(e.i));
    if (!std::isfinite(e.w)) throw Error(ErrorCode::InvalidParam, "non-finite weight");
    if (e.w < 0.0) throw Error(ErrorCode::NegativeWeight, "negative edge weight");
    if (e.w == 0.0) throw Error(ErrorCode::InvalidParam, "zero edge weight");
    if (w(i, j) != 0.0 && w(i, j) != e.w) {
      throw Error(ErrorCode::DuplicateEdgeConflict,
                  "pair (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                      ") listed with differing weights");
    }
    w(i, j) = e.w;
    w(j, i) = e.w;
  }
  return Graph::from_weights(std::move(w));
}

Matrix laplacian(const Graph& g) {
  Matrix l = -g.weights();
  l.diagonal() = g.degrees();
  return l;
}

double dirichlet_energy(const Graph& g, const Signal& x) {
  if (x.size() != g.n()) throw Error(ErrorCode::LengthMismatch, "signal length != n");
  double s = 0.0;
  const Matrix& w = g.weights();
  for (Index i = 0; i < g.n(); ++i) {
    for (Index j = i + 1; j < g.n(); ++j) {
      const double d = x(i) - x(j);
      s += w(i, j) * d * d;
    }
  }
  return s;
}

double dirichlet_ordered_sum(const Graph& g, const Signal& x) {
  if (x.size() != g.n()) throw Error(ErrorCode::LengthMismatch, "signal length != n");
  double s = 0.0;
  const Matrix& w = g.weights();
  for (Index i = 0; i < g.n(); ++i) {
    for (Index j = 0; j < g.n(); ++j) {
      const double d = x(i) - x(j);
      s += w(i, j) * d * d;
    }
  }
  return s;
}

std::vector<Index> connected_components(const Matrix& weights) {
  const Index n = weights.rows();
  std::vector<Index> label(static_cast<std::size_t>(n), -1);
  Index next = 0;
  for (Index start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    std::queue<Index> q;
    q.push(start);
    label[static_cast<std::size_t>(start)] = next;
    while (!q.empty()) {
      const Index v = q.front();
      q.pop();
      for (Index u = 0; u < n; ++u) {
        if (weights(v, u) != 0.0 && label[static_cast<std::size_t>(u)] < 0) {
          label[static_cast<std::size_t>(u)] = next;
          q.push(u);
        }
      }
    }
    ++next;
  }
  return label;
}

void chain_components(Matrix& weights) {
  const auto label = connected_components(weights);
  // The lowest vertex of component c is the first vertex carrying label c.
  std::vector<Index> lowest;
  for (Index v = 0; v < static_cast<Index>(label.size()); ++v) {
    if (label[static_cast<std::size_t>(v)] == static_cast<Index>(lowest.size())) {
      lowest.push_back(v);
    }
  }
  for (std::size_t c = 1; c < lowest.size(); ++c) {
    weights(lowest[c - 1], lowest[c]) = 1.0;
    weights(lowest[c], lowest[c - 1]) = 1.0;
  }
}

std::vector<Index> hop_distances(const Graph& g, Index source) {
  if (source < 0 || source >= g.n()) throw Error(ErrorCode::InvalidParam, "vertex out of range");
  const auto adj = g.adjacency();
  std::vector<Index> dist(static_cast<std::size_t>(g.n()), -1);
  std::queue<Index> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const Index v = q.front();
    q.pop();
    for (Index u : adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

Graph gen_ring(Index n) {
  if (n < 3) throw Error(ErrorCode::InvalidParam, "ring needs n >= 3");
  Matrix w = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const Index j = (i + 1) % n;
    w(i, j) = 1.0;
    w(j, i) = 1.0;
  }
  return Graph::from_weights(std::move(w));
}

Graph gen_sensor(Index n, std::uint64_t seed, double radius) {
  if (n < 2) throw Error(ErrorCode::InvalidParam, "sensor graph needs n >= 2");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidParam, "radius must be positive");
  }
  std::mt19937_64 rng(seed);
  Matrix pts(n, 2);
  for (Index i = 0; i < n; ++i) {
    pts(i, 0) = unit_uniform(rng);
    pts(i, 1) = unit_uniform(rng);
  }
  const double sigma = radius / 2.0;
  Matrix w = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double d2 = (pts.row(i) - pts.row(j)).squaredNorm();
      if (d2 <= radius * radius) {
        const double v = std::exp(-d2 / (2.0 * sigma * sigma));
        w(i, j) = v;
        w(j, i) = v;
      }
    }
  }
  chain_components(w);
  return Graph::from_weights(std::move(w));
}

Graph gen_community(Index n, std::uint64_t seed, Index blocks, double p_in, double p_out) {
  if (n < 2) throw Error(ErrorCode::InvalidParam, "community graph needs n >= 2");
  if (blocks < 1 || blocks > n) throw Error(ErrorCode::InvalidParam, "blocks must be in [1, n]");
  if (!(p_in >= 0.0 && p_in <= 1.0) || !(p_out >= 0.0 && p_out <= 1.0)) {
    throw Error(ErrorCode::InvalidParam, "probabilities must be in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  Matrix w = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const bool same = (i * blocks / n) == (j * blocks / n);
      if (unit_uniform(rng) < (same ? p_in : p_out)) {
        w(i, j) = 1.0;
        w(j, i) = 1.0;
      }
    }
  }
  chain_components(w);
  return Graph::from_weights(std::move(w));
}

}  // namespace graphfb
