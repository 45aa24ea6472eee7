#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "graphfb/error.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

void add_bank_source(CLI::App* cmd, graphfb::cli::BankSource& src) {
  cmd->add_option("--bank", src.bank, "Bank JSON for the finest level");
  cmd->add_option("--design", src.design, "Design for levels without a bank file")
      ->check(CLI::IsMember({"ideal", "local"}));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace graphfb::cli;
  CLI::App app{"Two-channel filter banks on arbitrary undirected graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("kind", gen.kind, "ring | sensor | community")
      ->required()
      ->check(CLI::IsMember({"ring", "sensor", "community"}));
  gen_cmd->add_option("n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--radius", gen.radius, "Sensor connection radius");
  gen_cmd->add_option("--blocks", gen.blocks, "Community count");
  gen_cmd->add_option("--p-in", gen.p_in, "Edge probability inside a community");
  gen_cmd->add_option("--p-out", gen.p_out, "Edge probability across communities");
  gen_cmd->add_option("-o,--out", gen.out);

  SignalArgs sig;
  auto* sig_cmd = app.add_subcommand("signal", "Generate a test signal");
  sig_cmd->add_option("kind", sig.kind, "step | impulse | random")
      ->required()
      ->check(CLI::IsMember({"step", "impulse", "random"}));
  sig_cmd->add_option("n", sig.n, "Signal length")->required();
  sig_cmd->add_option("--vertex", sig.vertex, "Impulse location");
  sig_cmd->add_option("--seed", sig.seed);
  sig_cmd->add_option("-o,--out", sig.out);

  DesignArgs des;
  auto* des_cmd = app.add_subcommand("design", "Design a filter bank for a graph");
  des_cmd->add_option("-g,--graph", des.graph)->required();
  des_cmd->add_option("--design", des.design)
      ->required()
      ->check(CLI::IsMember({"ideal", "local", "bior"}));
  des_cmd->add_option("--seed", des.seed, "Seed for a random biorthogonal profile");
  des_cmd->add_option("--f-free", des.f_free, "Signal file with the free biorthogonal profile");
  des_cmd->add_option("--split", des.split)->check(CLI::IsMember({"sqrt", "uneven"}));
  des_cmd->add_option("-o,--out", des.out);

  AnalyzeArgs ana;
  auto* ana_cmd = app.add_subcommand("analyze", "Multilevel analysis of a signal");
  ana_cmd->add_option("-g,--graph", ana.graph)->required();
  add_bank_source(ana_cmd, ana.source);
  ana_cmd->add_option("-s,--signal", ana.signal)->required();
  ana_cmd->add_option("--depth", ana.depth);
  ana_cmd->add_option("-o,--out", ana.out);

  SynthesizeArgs syn;
  auto* syn_cmd = app.add_subcommand("synthesize", "Rebuild a signal from coefficients");
  syn_cmd->add_option("-g,--graph", syn.graph)->required();
  add_bank_source(syn_cmd, syn.source);
  syn_cmd->add_option("-c,--coeffs", syn.coeffs)->required();
  syn_cmd->add_option("-o,--out", syn.out);

  MetricsArgs met;
  auto* met_cmd = app.add_subcommand("metrics", "RE and SNR of a reconstruction");
  met_cmd->add_option("orig", met.orig)->required();
  met_cmd->add_option("recon", met.recon)->required();
  met_cmd->add_option("--format", met.format)->check(CLI::IsMember({"json", "csv"}));
  met_cmd->add_option("-o,--out", met.out);

  PolyfitArgs pf;
  auto* pf_cmd = app.add_subcommand("polyfit", "Minimax polynomial fit of a bank filter");
  pf_cmd->add_option("-g,--graph", pf.graph)->required();
  add_bank_source(pf_cmd, pf.source);
  pf_cmd->add_option("--filter", pf.filter)->check(CLI::IsMember({"h0", "h1", "g0", "g1"}));
  pf_cmd->add_option("-m,--degree", pf.degree)->required();
  pf_cmd->add_option("-o,--out", pf.out);

  LocalityArgs loc;
  auto* loc_cmd = app.add_subcommand("locality", "Impulse response with hop distances (CSV)");
  loc_cmd->add_option("-g,--graph", loc.graph)->required();
  auto* bank_opt = loc_cmd->add_option("--bank", loc.bank, "Bank JSON");
  auto* design_opt = loc_cmd->add_option("--design", loc.design, "Design a bank on the fly")
                         ->check(CLI::IsMember({"ideal", "local"}));
  auto* poly_opt = loc_cmd->add_option("--poly", loc.poly, "Polynomial JSON");
  bank_opt->excludes(design_opt)->excludes(poly_opt);
  design_opt->excludes(poly_opt);
  loc_cmd->add_option("--filter", loc.filter)->check(CLI::IsMember({"h0", "h1", "g0", "g1"}));
  loc_cmd->add_option("-v,--vertex", loc.vertex);
  loc_cmd->add_option("--tau", loc.tau, "Response threshold for the reported radius");
  loc_cmd->add_option("-o,--out", loc.out);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run the invariant suite on a graph");
  ver_cmd->add_option("-g,--graph", ver.graph)->required();
  ver_cmd->add_option("--depth", ver.depth);
  ver_cmd->add_option("--seed", ver.seed);
  ver_cmd->add_option("--signals", ver.signals, "Random signals per bound check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*sig_cmd) return cmd_signal(sig);
    if (*des_cmd) return cmd_design(des);
    if (*ana_cmd) return cmd_analyze(ana);
    if (*syn_cmd) return cmd_synthesize(syn);
    if (*met_cmd) return cmd_metrics(met);
    if (*pf_cmd) return cmd_polyfit(pf);
    if (*loc_cmd) return cmd_locality(loc);
    if (*ver_cmd) return cmd_verify(ver);
  } catch (const graphfb::Error& e) {
    std::cerr << "graphfb: " << e.what() << '\n';
    return graphfb::is_numeric_failure(e.code()) ? kExitNumeric : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "graphfb: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
