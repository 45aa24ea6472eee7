#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "graphfb/coarsen.hpp"
#include "graphfb/filter_design.hpp"
#include "graphfb/graph.hpp"
#include "graphfb/sampler.hpp"
#include "graphfb/spectral.hpp"

namespace graphfb {

enum class Design { Ideal, Local };

std::string_view to_string(Design d);
Design parse_design(std::string_view s);

struct LevelOptions {
  /// Directory for cached eigendecompositions; none disables caching.
  std::optional<std::filesystem::path> eig_cache;
};

/// One analysis/synthesis stage on a graph. The lowpass sampler uses the
/// eigenbasis of the coarse graph as U1.
struct LevelTransform {
  Graph graph;
  SpectralDecomposition spectral;
  FilterBank bank;
  SamplerSet samplers;
  CoarseMap coarse;
};

SpectralDecomposition decompose(const Graph& g, const LevelOptions& opts = {});

FilterBank design_bank(Design design, const Vector& eigenvalues);

LevelTransform make_level(const Graph& g, Design design, const LevelOptions& opts = {});

/// Uses a precomputed bank; its eigenvalues must match the graph spectrum.
LevelTransform make_level(const Graph& g, SpectralDecomposition sd, FilterBank bank);

struct ChannelPair {
  Vector low;   // length s
  Vector high;  // length r
};

/// low = A_L F_h0 x, high = A_H F_h1 x.
ChannelPair analyze(const LevelTransform& lt, const Signal& x);

/// F_g0 B_L low + F_g1 B_H high.
Signal synthesize(const LevelTransform& lt, const Vector& low, const Vector& high);

/// F_g0 B_L low, i.e. synthesis with the highpass channel zeroed.
Signal lowpass_reconstruct(const LevelTransform& lt, const Vector& low);

/// Level l+1 lives on level l's coarse graph.
struct Pyramid {
  std::vector<LevelTransform> levels;
  Index requested_depth = 0;

  Index depth() const { return static_cast<Index>(levels.size()); }
  bool truncated() const { return depth() < requested_depth; }
};

/// Depth is cut short (truncated() == true) once the next graph would have
/// fewer than 2 vertices. Throws InvalidDepth for depth < 1.
Pyramid build_pyramid(const Graph& g, Index depth, Design design, const LevelOptions& opts = {});

/// Pyramid whose finest level uses `finest`; coarser levels use `design`.
Pyramid build_pyramid(LevelTransform finest, Index depth, Design design,
                      const LevelOptions& opts = {});

/// Multilevel coefficients. details[0] is the finest highpass channel.
struct Coefficients {
  Vector approx;
  std::vector<Vector> details;

  Index depth() const { return static_cast<Index>(details.size()); }
  Index total_size() const;
  /// Block lengths in file order: approx, then details coarsest to finest.
  std::vector<Index> layout() const;
  /// Values concatenated in layout order.
  Vector flatten() const;
  static Coefficients unflatten(const Vector& values, const std::vector<Index>& layout);
};

Coefficients multilevel_analyze(const Pyramid& p, const Signal& x);
Signal multilevel_synthesize(const Pyramid& p, const Coefficients& c);

// "graphfb-coeffs v1 <depth> <len_1> ... <len_{depth+1}>" then one value per line.
Coefficients parse_coefficients(std::istream& in);
void format_coefficients(std::ostream& out, const Coefficients& c);
Coefficients read_coefficients(const std::filesystem::path& path);
void write_coefficients(const Coefficients& c, const std::filesystem::path& path);

}  // namespace graphfb
