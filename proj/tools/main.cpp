#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "sunisb/cli.hpp"

int main(int argc, char** argv) {
  using sunisb::cli::Command;
  using sunisb::cli::Format;

  CLI::App app{"SU(N) irreps from irreducible Schwinger bosons, and their coherent states"};
  app.require_subcommand(1);

  sunisb::cli::RunConfig cfg;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--N", cfg.N, "SU(N) rank parameter")->check(CLI::PositiveNumber);
    sub->add_option("--irrep", cfg.irrep, "row lengths n_1,n_2,... (trailing zeros optional)");
    sub->add_option("--seed", cfg.seed, "64-bit RNG seed");
    sub->add_option("--out", cfg.out, "output file");
    sub->add_option("--format", cfg.format, "json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  };

  auto* basis = app.add_subcommand("basis", "build and persist an irrep basis");
  add_common(basis);
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify);
  verify->add_flag("--all", cfg.all, "sweep N in {2,3,4}, at most 4 boxes");
  auto* coherent = app.add_subcommand("coherent", "evaluate a coherent state at a frame");
  add_common(coherent);
  coherent->add_option("--frame", cfg.frame, "frame CSV (i,alpha,re,im); default: Haar sample from --seed");
  auto* resolve = app.add_subcommand("resolve-id", "Monte Carlo resolution of identity");
  add_common(resolve);
  resolve->add_option("--samples", cfg.samples, "number of Haar samples");
  auto* euler = app.add_subcommand("euler-check", "SU(2) Euler-angle cross-check");
  add_common(euler);
  euler->add_option("--samples", cfg.samples, "number of random angle triples")->default_val(10);

  CLI11_PARSE(app, argc, argv);

  if (basis->parsed()) cfg.command = Command::Basis;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (coherent->parsed()) cfg.command = Command::Coherent;
  if (resolve->parsed()) cfg.command = Command::ResolveId;
  if (euler->parsed()) cfg.command = Command::EulerCheck;
  if (cfg.irrep.empty() && !cfg.all) {
    std::cerr << "error: --irrep is required\n";
    return sunisb::cli::kExitInvalid;
  }
  return sunisb::cli::run(cfg, std::cout, std::cerr);
}
