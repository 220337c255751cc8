#pragma once

// Command implementations behind the `sunisb` executable. Each returns the
// process exit code: 0 success, 1 invalid configuration, 2 failed check.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sunisb/coherent.hpp"
#include "sunisb/isb.hpp"
#include "sunisb/serialize.hpp"
#include "sunisb/verify.hpp"

namespace sunisb::cli {

enum class Command { Basis, Verify, Coherent, ResolveId, EulerCheck };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::Basis;
  int N = 2;
  std::string irrep;  ///< comma-separated rows, trailing zeros optional
  std::int64_t samples = 20000;
  std::uint64_t seed = 1;
  std::string out;    ///< empty: no file
  Format format = Format::Json;
  bool all = false;
  unsigned threads = 0;
  std::string frame;  ///< optional frame CSV for `coherent`
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitFailed = 2;
inline constexpr double kEulerTolerance = 1e-10;

namespace detail {

inline void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) return;
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::Parse, "cannot open " + cfg.out + " for writing");
  f << text;
}

inline std::string residual_text(double r) { return format_double(r); }

}  // namespace detail

inline int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  const IrrepLabel irrep = IrrepLabel::parse(cfg.N, cfg.irrep);
  const std::uint64_t weyl = weyl_dimension(irrep);
  try {
    const IrrepBasis basis = irrep_basis(irrep);
    out << "dim=" << basis.states.size() << " weyl=" << weyl << " OK\n";
    detail::write_output(cfg, to_json(basis).dump(2) + "\n");
    return kExitOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConstructionFailure) throw;
    out << e.what() << "\nweyl=" << weyl << " MISMATCH\n";
    return kExitFailed;
  }
}

inline json verify_one(const IrrepLabel& irrep, const RunConfig& cfg, std::ostream& out, bool& all_pass) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  json checks = json::array();
  for (const auto& r : verify_irrep(irrep, opts)) {
    all_pass = all_pass && r.pass;
    out << "SU(" << irrep.rank() << ") " << irrep.str() << ' ' << r.check << " residual=" << detail::residual_text(r.max_residual)
        << (r.pass ? " PASS" : " FAIL") << '\n';
    checks.push_back(to_json(r));
  }
  const std::string casimir = to_string(quadratic_casimir(irrep));
  out << "SU(" << irrep.rank() << ") " << irrep.str() << " quadratic Casimir = " << casimir << '\n';
  return {{"N", irrep.rank()}, {"irrep", irrep.rows()}, {"quadratic_casimir", casimir}, {"checks", checks}};
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  bool all_pass = true;
  json report = json::array();
  if (cfg.all) {
    for (int N = 2; N <= 4; ++N) {
      for (const auto& irrep : irreps_up_to(N, 4)) report.push_back(verify_one(irrep, cfg, out, all_pass));
    }
  } else {
    report.push_back(verify_one(IrrepLabel::parse(cfg.N, cfg.irrep), cfg, out, all_pass));
  }
  detail::write_output(cfg, report.dump(2) + "\n");
  out << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
  return all_pass ? kExitOk : kExitFailed;
}

inline int cmd_coherent(const RunConfig& cfg, std::ostream& out) {
  const IrrepLabel irrep = IrrepLabel::parse(cfg.N, cfg.irrep);
  ManifoldPoint p;
  if (cfg.frame.empty()) {
    p = haar_sample(cfg.N, cfg.seed);
  } else {
    std::ifstream f(cfg.frame);
    if (!f) throw Error(ErrorCode::Parse, "cannot open frame file " + cfg.frame);
    p = read_frame_csv(f, cfg.N);
  }
  const CoherentState cs = coherent_state(irrep, p);
  const IrrepBasis basis = irrep_basis(irrep);
  const MatrixRep rep = matrix_rep(basis.states, GeneratorBasis(cfg.N));
  const double membership = rep.projection_residual(cs.vector);
  out << "SU(" << cfg.N << ") " << irrep.str() << " coherent state: terms=" << cs.vector.size()
      << " norm=" << format_double(norm(cs.vector)) << " membership_residual=" << format_double(membership) << '\n';
  std::ostringstream frame;
  write_frame_csv(frame, p);
  out << frame.str();
  if (cfg.format == Format::Json) {
    json doc = to_json(cs.vector);
    doc["irrep"] = irrep.rows();
    detail::write_output(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    write_state_csv(csv, cs.vector);
    detail::write_output(cfg, csv.str());
  }
  return membership < kExpansionTolerance ? kExitOk : kExitFailed;
}

inline int cmd_resolve_id(const RunConfig& cfg, std::ostream& out) {
  const IrrepLabel irrep = IrrepLabel::parse(cfg.N, cfg.irrep);
  if (cfg.samples < 1) throw Error(ErrorCode::IndexOutOfRange, "--samples must be >= 1");
  const IdentityReport report = identity_resolution(irrep, cfg.samples, cfg.seed, cfg.threads);
  const std::string text = to_json(report).dump(2) + "\n";
  out << text;
  detail::write_output(cfg, text);
  return report.pass ? kExitOk : kExitFailed;
}

/// Compares Schwinger and Euler-angle coherent states for spin j = n/2 at
/// `samples` random angle triples.
inline int cmd_euler_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.N != 2) throw Error(ErrorCode::InvalidRank, "euler-check is defined for N=2 only");
  const IrrepLabel irrep = IrrepLabel::parse(2, cfg.irrep);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
  json rows = json::array();
  bool pass = true;
  for (std::int64_t t = 0; t < cfg.samples; ++t) {
    const double theta = polar(rng), phi = angle(rng), psi = angle(rng);
    const EulerCheck check = euler_cross_check(irrep.row(1), theta, phi, psi);
    pass = pass && check.max_deviation < kEulerTolerance;
    rows.push_back({{"theta", theta}, {"phi", phi}, {"psi", psi}, {"phase", check.phase},
                    {"max_deviation", check.max_deviation}});
  }
  const json report = {{"two_j", irrep.row(1)}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"pass", pass}, {"checks", rows}};
  const std::string text = report.dump(2) + "\n";
  out << text;
  detail::write_output(cfg, text);
  return pass ? kExitOk : kExitFailed;
}

/// Dispatches and maps library errors to exit code 1.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Basis: return cmd_basis(cfg, out);
      case Command::Verify: return cmd_verify(cfg, out);
      case Command::Coherent: return cmd_coherent(cfg, out);
      case Command::ResolveId: return cmd_resolve_id(cfg, out);
      case Command::EulerCheck: return cmd_euler_check(cfg, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace sunisb::cli
