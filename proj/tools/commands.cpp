#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>

#include "graphfb/error.hpp"
#include "graphfb/filter_design.hpp"
#include "graphfb/graph.hpp"
#include "graphfb/mallat.hpp"
#include "graphfb/metrics.hpp"
#include "graphfb/polyapprox.hpp"
#include "graphfb/sampler.hpp"
#include "graphfb/serialize.hpp"

namespace graphfb::cli {

namespace {

LevelOptions level_options() {
  LevelOptions opts;
  if (const char* dir = std::getenv("GRAPHFB_EIG_CACHE"); dir != nullptr && *dir != '\0') {
    opts.eig_cache = dir;
  }
  return opts;
}

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  write(out);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

Index checked_count(long long v, const char* what) {
  if (v < 0) throw Error(ErrorCode::InvalidParam, std::string(what) + " must be nonnegative");
  return static_cast<Index>(v);
}

const Vector& select_filter(const FilterBank& bank, const std::string& name) {
  if (name == "h0") return bank.h0;
  if (name == "h1") return bank.h1;
  if (name == "g0") return bank.g0;
  if (name == "g1") return bank.g1;
  throw Error(ErrorCode::InvalidParam, "unknown filter '" + name + "'");
}

LevelTransform finest_level(const Graph& g, const BankSource& src, const LevelOptions& opts) {
  if (src.bank.empty()) return make_level(g, parse_design(src.design), opts);
  FilterBank bank = bank_from_json(read_json(src.bank));
  return make_level(g, decompose(g, opts), std::move(bank));
}

Pyramid load_pyramid(const Graph& g, const BankSource& src, Index depth) {
  if (depth < 1) throw Error(ErrorCode::InvalidDepth, "depth must be at least 1");
  const LevelOptions opts = level_options();
  Pyramid p = build_pyramid(finest_level(g, src, opts), depth, parse_design(src.design), opts);
  if (p.truncated()) {
    std::cerr << "graphfb: warning: depth truncated from " << depth << " to " << p.depth()
              << " (coarsest graph has " << p.levels.back().graph.n() << " vertices)\n";
  }
  return p;
}

FilterBank load_or_design_bank(const std::string& bank_path, const std::string& design,
                               const SpectralDecomposition& sd) {
  if (!bank_path.empty()) return bank_from_json(read_json(bank_path));
  return design_bank(parse_design(design.empty() ? "local" : design), sd.eigenvalues);
}

}  // namespace

int cmd_gen(const GenArgs& a) {
  const Index n = checked_count(a.n, "n");
  Graph g = [&] {
    if (a.kind == "ring") return gen_ring(n);
    if (a.kind == "sensor") return gen_sensor(n, a.seed, a.radius);
    return gen_community(n, a.seed, checked_count(a.blocks, "blocks"), a.p_in, a.p_out);
  }();
  emit(a.out, [&](std::ostream& out) { format_graph(out, g); });
  return 0;
}

int cmd_signal(const SignalArgs& a) {
  const Index n = checked_count(a.n, "n");
  Signal x;
  if (a.kind == "step") {
    x = step_signal(n);
  } else if (a.kind == "impulse") {
    if (n < 1 || a.vertex < 0 || a.vertex >= a.n) {
      throw Error(ErrorCode::OutOfRange, "impulse vertex out of range");
    }
    x = Signal::Unit(n, static_cast<Index>(a.vertex));
  } else {
    if (n < 1) throw Error(ErrorCode::InvalidParam, "n must be positive");
    std::mt19937_64 rng(a.seed);
    x.resize(n);
    for (Index i = 0; i < n; ++i) x(i) = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
  }
  emit(a.out, [&](std::ostream& out) { format_signal(out, x); });
  return 0;
}

int cmd_design(const DesignArgs& a) {
  const Graph g = read_graph(a.graph);
  const SpectralDecomposition sd = decompose(g, level_options());
  FilterBank bank;
  if (a.design == "bior") {
    const Vector f_free = a.f_free.empty() ? random_free_profile(highpass_size(g.n()), a.seed)
                                           : read_signal(a.f_free);
    bank = design_biorthogonal(sd.eigenvalues, f_free, parse_split_rule(a.split));
  } else {
    bank = design_bank(parse_design(a.design), sd.eigenvalues);
  }
  if (bank.tie_adjusted) {
    std::cerr << "graphfb: note: profile adjusted on tied eigenvalues\n";
  }
  emit(a.out, [&](std::ostream& out) { out << bank_to_json(bank).dump(2) << '\n'; });
  return 0;
}

int cmd_analyze(const AnalyzeArgs& a) {
  const Graph g = read_graph(a.graph);
  const Signal x = read_signal(a.signal);
  const Pyramid p = load_pyramid(g, a.source, static_cast<Index>(a.depth));
  const Coefficients c = multilevel_analyze(p, x);
  emit(a.out, [&](std::ostream& out) { format_coefficients(out, c); });
  return 0;
}

int cmd_synthesize(const SynthesizeArgs& a) {
  const Graph g = read_graph(a.graph);
  const Coefficients c = read_coefficients(a.coeffs);
  const Pyramid p = load_pyramid(g, a.source, c.depth());
  const Signal x = multilevel_synthesize(p, c);
  emit(a.out, [&](std::ostream& out) { format_signal(out, x); });
  return 0;
}

int cmd_metrics(const MetricsArgs& a) {
  const Signal f = read_signal(a.orig);
  const Signal fr = read_signal(a.recon);
  const double re = rel_error(f, fr);
  const double s = snr(f, fr);
  emit(a.out, [&](std::ostream& out) {
    if (a.format == "csv") {
      format_metrics_csv(out, {{"re", re}, {"snr", s}});
    } else {
      Json j;
      j["re"] = metric_value(re);
      j["snr"] = metric_value(s);
      out << j.dump() << '\n';
    }
  });
  return 0;
}

int cmd_polyfit(const PolyfitArgs& a) {
  const Graph g = read_graph(a.graph);
  const SpectralDecomposition sd = decompose(g, level_options());
  const FilterBank bank = load_or_design_bank(a.source.bank, a.source.design, sd);
  if (bank.n() != g.n()) throw Error(ErrorCode::ShapeMismatch, "bank size differs from graph");
  const Vector& h = select_filter(bank, a.filter);
  const Index m = static_cast<Index>(a.degree);
  const FilterPolynomial p = remez_fit(sd.eigenvalues, h, m);
  if (!p.converged) std::cerr << "graphfb: warning: Remez exchange did not converge\n";
  Json j = polynomial_to_json(p);
  j["filter"] = a.filter;
  const double lip = lipschitz_constant(h, sd.eigenvalues);
  j["lipschitz"] = lip;
  j["error_bound"] = error_bound(lip, sd.lambda_max(), m);
  emit(a.out, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
  return 0;
}

int cmd_locality(const LocalityArgs& a) {
  const Graph g = read_graph(a.graph);
  const Index v = static_cast<Index>(a.vertex);
  if (v < 0 || v >= g.n()) throw Error(ErrorCode::OutOfRange, "vertex out of range");
  Signal response;
  if (!a.poly.empty()) {
    response = impulse_response(g, polynomial_from_json(read_json(a.poly)), v);
  } else {
    const SpectralDecomposition sd = decompose(g, level_options());
    const FilterBank bank = load_or_design_bank(a.bank, a.design, sd);
    if (bank.n() != g.n()) throw Error(ErrorCode::ShapeMismatch, "bank size differs from graph");
    response = impulse_response(sd, select_filter(bank, a.filter), v);
  }
  const std::vector<Index> hops = hop_distances(g, v);
  const Index radius = spread_radius(g, response, v, a.tau);
  emit(a.out, [&](std::ostream& out) {
    out << "vertex,hop,response\n";
    for (Index i = 0; i < g.n(); ++i) {
      out << i << ',' << hops[static_cast<std::size_t>(i)] << ',' << format_double(response(i))
          << '\n';
    }
  });
  std::cerr << "spread radius: " << radius << '\n';
  return 0;
}

}  // namespace graphfb::cli
