#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace graphfb {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A real value per vertex, in vertex order.
using Signal = Eigen::VectorXd;

struct Edge {
  Index i = 0;
  Index j = 0;
  double w = 0.0;
};

enum class IndexBase { Zero, One };

/// Connected, undirected, weighted graph without loops or multi-edges.
/// Stored as a dense symmetric weight matrix; immutable once built.
class Graph {
 public:
  /// Validates symmetry, zero diagonal, nonnegativity and connectivity.
  static Graph from_weights(Matrix weights);

  Index n() const { return weights_.rows(); }
  const Matrix& weights() const { return weights_; }
  double weight(Index i, Index j) const { return weights_(i, j); }

  Vector degrees() const { return weights_.rowwise().sum(); }

  /// Undirected edges with i < j, in row-major order.
  std::vector<Edge> edges() const;

  /// Neighbor lists over nonzero weights.
  std::vector<std::vector<Index>> adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.weights_.rows() == b.weights_.rows() && a.weights_ == b.weights_;
  }

 private:
  explicit Graph(Matrix w) : weights_(std::move(w)) {}
  Matrix weights_;
};

/// Builds a graph from an edge list. Pairs may be listed in either direction;
/// a pair listed twice must carry the same weight.
Graph build_graph(Index n, std::span<const Edge> edges, IndexBase base = IndexBase::Zero);

/// L = D - W.
Matrix laplacian(const Graph& g);

/// Sum of w_ij (x_i - x_j)^2 over undirected edges; equals x^T L x.
double dirichlet_energy(const Graph& g, const Signal& x);

/// The double sum over ordered pairs (i, j); twice dirichlet_energy.
double dirichlet_ordered_sum(const Graph& g, const Signal& x);

/// Component label per vertex over nonzero weights; labels are assigned in
/// order of each component's lowest vertex.
std::vector<Index> connected_components(const Matrix& weights);

/// Joins components by unit-weight edges between the lowest-index vertices of
/// successive components. No-op on a connected weight matrix.
void chain_components(Matrix& weights);

/// Hop distance from `source` over the unweighted support graph.
std::vector<Index> hop_distances(const Graph& g, Index source);

Graph gen_ring(Index n);

/// Uniform points in the unit square; pairs within `radius` are joined with
/// weight exp(-d^2 / (2 sigma^2)), sigma = radius / 2.
Graph gen_sensor(Index n, std::uint64_t seed, double radius);

/// Stochastic block model with contiguous, equally sized blocks and unit weights.
Graph gen_community(Index n, std::uint64_t seed, Index blocks, double p_in, double p_out);

// Text formats: "graphfb-graph v1 <n>" followed by "i j w" lines, and
// "graphfb-signal v1 <n>" followed by one value per line.
Graph parse_graph(std::istream& in);
void format_graph(std::ostream& out, const Graph& g);
Signal parse_signal(std::istream& in);
void format_signal(std::ostream& out, const Signal& x);

Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);
Signal read_signal(const std::filesystem::path& path);
void write_signal(const Signal& x, const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);
/// Strict parse of a whole token; throws ParseError.
double parse_double(std::string_view token);

}  // namespace graphfb
