#pragma once

#include <optional>
#include <vector>

#include "graphfb/graph.hpp"

namespace graphfb {

/// Assignment of fine vertices to s = floor((n+1)/2) supernodes, each holding
/// one or two fine vertices, plus the coarse graph with summed weights.
struct CoarseMap {
  Index fine_n = 0;
  Index coarse_n = 0;
  std::vector<Index> assignment;
  /// Empty when coarse_n == 1: a single supernode is not a graph.
  std::optional<Graph> coarse_graph;

  bool trivial() const { return coarse_n == 1; }
};

/// Greedy heavy-edge matching (descending weight, ties by lowest index pair),
/// then leftover singletons merged pairwise in ascending index order until
/// exactly s supernodes remain. Supernodes are numbered by their lowest fine
/// vertex.
CoarseMap coarsen(const Graph& g);

/// Orthonormal eigenbasis of the coarse Laplacian (s x s); the 1x1 identity
/// for a trivial map.
Matrix coarse_basis(const CoarseMap& cm);

}  // namespace graphfb
