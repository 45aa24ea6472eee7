#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace graphfb::cli {

struct GenArgs {
  std::string kind;
  long long n = 0;
  std::uint64_t seed = 1;
  double radius = 0.15;
  long long blocks = 4;
  double p_in = 0.3;
  double p_out = 0.01;
  std::string out;
};

struct SignalArgs {
  std::string kind;
  long long n = 0;
  long long vertex = 0;
  std::uint64_t seed = 1;
  std::string out;
};

struct DesignArgs {
  std::string graph;
  std::string design;
  std::uint64_t seed = 1;
  std::string f_free;
  std::string split = "sqrt";
  std::string out;
};

// Either a bank file for the finest level or a design name; coarser levels
// always use `design`.
struct BankSource {
  std::string bank;
  std::string design = "local";
};

struct AnalyzeArgs {
  std::string graph;
  BankSource source;
  std::string signal;
  long long depth = 1;
  std::string out;
};

struct SynthesizeArgs {
  std::string graph;
  BankSource source;
  std::string coeffs;
  std::string out;
};

struct MetricsArgs {
  std::string orig;
  std::string recon;
  std::string format = "json";
  std::string out;
};

struct PolyfitArgs {
  std::string graph;
  BankSource source;
  std::string filter = "h0";
  long long degree = 5;
  std::string out;
};

struct LocalityArgs {
  std::string graph;
  std::string bank;
  std::string design;
  std::string poly;
  std::string filter = "h0";
  long long vertex = 0;
  std::optional<double> tau;
  std::string out;
};

struct VerifyArgs {
  std::string graph;
  long long depth = 3;
  std::uint64_t seed = 1;
  long long signals = 20;
};

int cmd_gen(const GenArgs& a);
int cmd_signal(const SignalArgs& a);
int cmd_design(const DesignArgs& a);
int cmd_analyze(const AnalyzeArgs& a);
int cmd_synthesize(const SynthesizeArgs& a);
int cmd_metrics(const MetricsArgs& a);
int cmd_polyfit(const PolyfitArgs& a);
int cmd_locality(const LocalityArgs& a);
int cmd_verify(const VerifyArgs& a);

}  // namespace graphfb::cli
