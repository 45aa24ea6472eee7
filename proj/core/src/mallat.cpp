#include "graphfb/mallat.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "graphfb/error.hpp"

namespace graphfb {

namespace {

void require_length(Index expected, Index got, const char* what) {
  if (expected != got) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + ": expected length " +
                                               std::to_string(expected) + ", got " +
                                               std::to_string(got));
  }
}

}  // namespace

std::string_view to_string(Design d) { return d == Design::Ideal ? "ideal" : "local"; }

Design parse_design(std::string_view s) {
  if (s == "ideal") return Design::Ideal;
  if (s == "local") return Design::Local;
  throw Error(ErrorCode::InvalidParam, "unknown design '" + std::string(s) + "'");
}

SpectralDecomposition decompose(const Graph& g, const LevelOptions& opts) {
  const Matrix l = laplacian(g);
  if (opts.eig_cache) return eig_sym_cached(l, *opts.eig_cache);
  return eig_sym(l);
}

FilterBank design_bank(Design design, const Vector& eigenvalues) {
  return design == Design::Ideal ? design_ideal(eigenvalues) : design_local(eigenvalues);
}

LevelTransform make_level(const Graph& g, Design design, const LevelOptions& opts) {
  SpectralDecomposition sd = decompose(g, opts);
  FilterBank bank = design_bank(design, sd.eigenvalues);
  return make_level(g, std::move(sd), std::move(bank));
}

LevelTransform make_level(const Graph& g, SpectralDecomposition sd, FilterBank bank) {
  if (sd.n() != g.n() || bank.n() != g.n()) {
    throw Error(ErrorCode::ShapeMismatch, "bank size does not match graph size");
  }
  if (bank.eigenvalues.size() == sd.n()) {
    const double tol = 1e-8 * std::max(1.0, sd.lambda_max());
    if ((bank.eigenvalues - sd.eigenvalues).cwiseAbs().maxCoeff() > tol) {
      throw Error(ErrorCode::ShapeMismatch, "bank was designed for a different spectrum");
    }
  }
  CoarseMap cm = coarsen(g);
  SamplerSet samplers = make_samplers(sd, coarse_basis(cm));
  return LevelTransform{g, std::move(sd), std::move(bank), std::move(samplers), std::move(cm)};
}

ChannelPair analyze(const LevelTransform& lt, const Signal& x) {
  require_length(lt.graph.n(), x.size(), "analyze");
  return ChannelPair{lt.samplers.a_low * apply_filter(lt.spectral, lt.bank.h0, x),
                     lt.samplers.a_high * apply_filter(lt.spectral, lt.bank.h1, x)};
}

Signal synthesize(const LevelTransform& lt, const Vector& low, const Vector& high) {
  require_length(lt.samplers.s, low.size(), "synthesize (low)");
  require_length(lt.samplers.r, high.size(), "synthesize (high)");
  return apply_filter(lt.spectral, lt.bank.g0, lt.samplers.a_low.transpose() * low) +
         apply_filter(lt.spectral, lt.bank.g1, lt.samplers.a_high.transpose() * high);
}

Signal lowpass_reconstruct(const LevelTransform& lt, const Vector& low) {
  require_length(lt.samplers.s, low.size(), "lowpass_reconstruct");
  return apply_filter(lt.spectral, lt.bank.g0, lt.samplers.a_low.transpose() * low);
}

Pyramid build_pyramid(const Graph& g, Index depth, Design design, const LevelOptions& opts) {
  if (depth < 1) throw Error(ErrorCode::InvalidDepth, "depth must be at least 1");
  return build_pyramid(make_level(g, design, opts), depth, design, opts);
}

Pyramid build_pyramid(LevelTransform finest, Index depth, Design design,
                      const LevelOptions& opts) {
  if (depth < 1) throw Error(ErrorCode::InvalidDepth, "depth must be at least 1");
  Pyramid p;
  p.requested_depth = depth;
  p.levels.push_back(std::move(finest));
  while (p.depth() < depth && p.levels.back().coarse.coarse_graph) {
    // Copy out: push_back may reallocate and invalidate the reference.
    const Graph next = *p.levels.back().coarse.coarse_graph;
    p.levels.push_back(make_level(next, design, opts));
  }
  return p;
}

Index Coefficients::total_size() const {
  Index total = approx.size();
  for (const auto& d : details) total += d.size();
  return total;
}

std::vector<Index> Coefficients::layout() const {
  std::vector<Index> out{approx.size()};
  for (auto it = details.rbegin(); it != details.rend(); ++it) out.push_back(it->size());
  return out;
}

Vector Coefficients::flatten() const {
  Vector v(total_size());
  Index pos = 0;
  v.segment(pos, approx.size()) = approx;
  pos += approx.size();
  for (auto it = details.rbegin(); it != details.rend(); ++it) {
    v.segment(pos, it->size()) = *it;
    pos += it->size();
  }
  return v;
}

Coefficients Coefficients::unflatten(const Vector& values, const std::vector<Index>& layout) {
  if (layout.size() < 2) throw Error(ErrorCode::ShapeMismatch, "layout needs depth >= 1");
  Index total = 0;
  for (Index len : layout) {
    if (len < 0) throw Error(ErrorCode::ShapeMismatch, "negative block length");
    total += len;
  }
  if (total != values.size()) throw Error(ErrorCode::ShapeMismatch, "layout does not match values");
  Coefficients c;
  Index pos = 0;
  c.approx = values.segment(pos, layout[0]);
  pos += layout[0];
  c.details.resize(layout.size() - 1);
  // File order is coarsest first; details[0] is the finest.
  for (std::size_t b = 1; b < layout.size(); ++b) {
    c.details[layout.size() - 1 - b] = values.segment(pos, layout[b]);
    pos += layout[b];
  }
  return c;
}

Coefficients multilevel_analyze(const Pyramid& p, const Signal& x) {
  Coefficients c;
  Vector current = x;
  for (const auto& level : p.levels) {
    ChannelPair ch = analyze(level, current);
    c.details.push_back(std::move(ch.high));
    current = std::move(ch.low);
  }
  c.approx = std::move(current);
  return c;
}

Signal multilevel_synthesize(const Pyramid& p, const Coefficients& c) {
  if (c.depth() != p.depth()) {
    throw Error(ErrorCode::ShapeMismatch, "coefficient depth " + std::to_string(c.depth()) +
                                              " != pyramid depth " + std::to_string(p.depth()));
  }
  for (Index l = 0; l < p.depth(); ++l) {
    const auto& s = p.levels[static_cast<std::size_t>(l)].samplers;
    if (c.details[static_cast<std::size_t>(l)].size() != s.r) {
      throw Error(ErrorCode::ShapeMismatch, "detail block size mismatch at level " +
                                                std::to_string(l));
    }
  }
  if (c.approx.size() != p.levels.back().samplers.s) {
    throw Error(ErrorCode::ShapeMismatch, "approximation block size mismatch");
  }
  Vector current = c.approx;
  for (Index l = p.depth() - 1; l >= 0; --l) {
    current = synthesize(p.levels[static_cast<std::size_t>(l)], current,
                         c.details[static_cast<std::size_t>(l)]);
  }
  return current;
}

Coefficients parse_coefficients(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "missing header");
  std::istringstream hs(line);
  std::string magic, version;
  Index depth = 0;
  if (!(hs >> magic >> version >> depth) || magic != "graphfb-coeffs" || version != "v1" ||
      depth < 1) {
    throw Error(ErrorCode::ParseError, "expected header 'graphfb-coeffs v1 <depth> <len>...'");
  }
  std::vector<Index> layout;
  Index len = 0;
  while (hs >> len) layout.push_back(len);
  if (!hs.eof() || static_cast<Index>(layout.size()) != depth + 1) {
    throw Error(ErrorCode::ParseError, "header must list depth+1 block lengths");
  }
  std::vector<double> values;
  while (std::getline(in, line)) {
    std::string_view v(line);
    while (!v.empty() && (v.back() == '\r' || v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    if (v.empty()) continue;
    values.push_back(parse_double(v));
  }
  const Vector flat = Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
  try {
    return Coefficients::unflatten(flat, layout);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

void format_coefficients(std::ostream& out, const Coefficients& c) {
  out << "graphfb-coeffs v1 " << c.depth();
  for (Index len : c.layout()) out << ' ' << len;
  out << '\n';
  const Vector flat = c.flatten();
  for (Index i = 0; i < flat.size(); ++i) out << format_double(flat(i)) << '\n';
}

Coefficients read_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return parse_coefficients(in);
}

void write_coefficients(const Coefficients& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  format_coefficients(out, c);
}

}  // namespace graphfb
