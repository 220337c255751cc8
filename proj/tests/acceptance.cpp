// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "sunisb/sunisb.hpp"

using namespace sunisb;

namespace {

constexpr double kLieResidualTol = 1e-10;
constexpr double kJacobiTol = 1e-12;
constexpr double kCovarianceTol = 1e-8;
constexpr double kEulerTol = 1e-10;
constexpr double kExpansionTol = 1e-10;
constexpr double kSigma = 5.0;
constexpr int kSweepBoxes = 4;
constexpr int kCoherentBoxes = 3;
constexpr int kCovariancePoints = 20;
constexpr std::int64_t kIdentitySamples = 20000;
constexpr int kEulerTriples = 10;
constexpr int kHwCutoff = 40;

struct Result {
  bool pass;
  std::string detail;
};

std::vector<IrrepLabel> sweep(int max_boxes) {
  std::vector<IrrepLabel> out;
  for (int N = 2; N <= 4; ++N) {
    for (auto& irrep : irreps_up_to(N, max_boxes)) out.push_back(irrep);
  }
  return out;
}

std::string label(const IrrepLabel& irrep) { return "SU(" + std::to_string(irrep.rank()) + ")" + irrep.str(); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Result constraint_annihilation(const std::vector<IrrepBasis>& bases) {
  std::size_t vectors = 0;
  for (const auto& b : bases) {
    const int N = b.irrep.rank();
    for (const auto& v : b.states) {
      ++vectors;
      for (int i = 1; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
          if (!apply_constraint(i, j, v).empty()) return {false, label(b.irrep) + " L_" + std::to_string(i) + std::to_string(j) + " != 0"};
        }
      }
    }
  }
  return {true, std::to_string(vectors) + " basis vectors in " + std::to_string(bases.size()) + " irreps, all L_ij v == 0 exactly"};
}

Result casimir_labels(const std::vector<IrrepBasis>& bases) {
  for (const auto& b : bases) {
    for (const auto& v : b.states) {
      for (int i = 1; i < b.irrep.rank(); ++i) {
        if (plet_number(v, i) != b.irrep.row(i)) return {false, label(b.irrep) + " plet " + std::to_string(i)};
      }
    }
  }
  return {true, "plet_number == n_i exactly on every basis vector"};
}

Result dimensions(const std::vector<IrrepBasis>& bases) {
  for (const auto& b : bases) {
    const std::uint64_t oracle = oracle::hook_content_dimension(b.irrep.rank(), b.irrep.rows());
    if (b.states.size() != weyl_dimension(b.irrep) || b.states.size() != oracle) {
      return {false, label(b.irrep) + " dim=" + std::to_string(b.states.size()) + " oracle=" + std::to_string(oracle)};
    }
  }
  for (int n = 0; n <= 6; ++n) {
    if (irrep_basis(IrrepLabel(2, {n})).states.size() != static_cast<std::size_t>(n + 1)) {
      return {false, "SU(2)[" + std::to_string(n) + "] != n+1"};
    }
  }
  if (irrep_basis(IrrepLabel(3, {1, 1})).states.size() != 3) return {false, "SU(3)[1,1] != 3"};
  return {true, "sweep matches Weyl and hook-content; SU(2)[n]=n+1 for n<=6; SU(3)[1,1]=3"};
}

Result lie_algebra(const std::vector<IrrepBasis>& bases) {
  double lie = 0.0, jacobi = 0.0;
  bool casimir_exact = true;
  for (const auto& b : bases) {
    const GeneratorBasis g(b.irrep.rank());
    std::vector<FloatState> probes;
    for (const auto& s : b.states) probes.push_back(to_float(s));
    lie = std::max(lie, check_lie_algebra(g, probes).max_residual);
    casimir_exact = casimir_exact && check_casimir_commutation(g, b.states).pass;
  }
  for (int N = 2; N <= 4; ++N) jacobi = std::max(jacobi, jacobi_residual(GeneratorBasis(N)));
  const bool pass = lie < kLieResidualTol && casimir_exact && jacobi < kJacobiTol;
  return {pass, "commutator residual " + sci(lie) + " (<" + sci(kLieResidualTol) + "), [Q,N_i]=0 " +
                    (casimir_exact ? "exact" : "VIOLATED") + ", Jacobi " + sci(jacobi) + " (<" + sci(kJacobiTol) + ")"};
}

Result antisymmetric_example() {
  const ComplexRational half(Rational(1, 2));
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      if (a == b) continue;
      const ExactState seed = create(vacuum(3), {1, a});
      const ExactState v = isb_create(2, b, seed);
      const ExactState antisym = create(create(vacuum(3), {1, a}), {2, b}) - create(create(vacuum(3), {1, b}), {2, a});
      if (v != oracle::su3_second_row_oracle(b, seed)) return {false, "disagrees with term-by-term oracle"};
      if (v != half * antisym) return {false, "not 1/2 times the antisymmetric combination"};
      if (v != ComplexRational(-1) * isb_create(2, a, create(vacuum(3), {1, b}))) return {false, "not antisymmetric"};
    }
  }
  return {true, "A†_b[2] a†_a[1]|0> = (1/2)(a†_b[2]a†_a[1] - a†_a[2]a†_b[1])|0> exactly, factor 1/2"};
}

struct CoherentSweep {
  double covariance = 0.0;
  double expansion = 0.0;
  int points = 0;
  std::string worst;
};

CoherentSweep coherent_sweep() {
  CoherentSweep out;
  std::mt19937_64 rng(2024);
  for (const auto& irrep : sweep(kCoherentBoxes)) {
    const GeneratorBasis g(irrep.rank());
    const MatrixRep rep = matrix_rep(irrep_basis(irrep).states, g);
    for (int t = 0; t < kCovariancePoints; ++t) {
      const ManifoldPoint p = haar_sample(irrep.rank(), rng());
      const std::vector<double> theta = random_theta(g.dimension(), 1.0, rng);
      const double c = covariance_check(irrep, p, theta, rep, g);
      if (c > out.covariance) {
        out.covariance = c;
        out.worst = label(irrep);
      }
      out.expansion = std::max(out.expansion, expansion_residual(irrep, p));
      ++out.points;
    }
  }
  return out;
}

Result identity() {
  const std::vector<IrrepLabel> cases{IrrepLabel(2, {1}),    IrrepLabel(2, {2}),    IrrepLabel(3, {1, 0}),
                                      IrrepLabel(3, {1, 1}), IrrepLabel(3, {2, 1}), IrrepLabel(4, {1, 0, 0})};
  double worst = 0.0;
  std::string which;
  for (const auto& irrep : cases) {
    const IdentityReport r = identity_resolution(irrep, kIdentitySamples, 7);
    const double z = std::max(r.max_offdiag_z, r.max_diag_z);
    if (z > worst) {
      worst = z;
      which = label(irrep);
    }
  }
  return {worst < kSigma, std::to_string(cases.size()) + " irreps, " + std::to_string(kIdentitySamples) +
                              " samples, worst deviation " + sci(worst) + " sigma (" + which + ", band " + sci(kSigma) + ")"};
}

Result euler() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi), polar(0.0, std::numbers::pi);
  double worst = 0.0;
  for (int two_j = 1; two_j <= 3; ++two_j) {
    for (int t = 0; t < kEulerTriples; ++t) {
      const double theta = polar(rng), phi = angle(rng), psi = angle(rng);
      worst = std::max(worst, euler_cross_check(two_j, theta, phi, psi).max_deviation);
    }
  }
  return {worst < kEulerTol, "j in {1/2,1,3/2}, " + std::to_string(kEulerTriples) + " triples each, max deviation " + sci(worst) +
                                 " (<" + sci(kEulerTol) + ")"};
}

Result hw_baseline() {
  double worst_ratio = 0.0;
  for (double r : {0.1, 0.5, 0.8, 1.0}) {
    for (double phase : {0.0, 0.7, 2.0, 4.4}) {
      const HwEigenCheck c = hw_eigen_check(std::polar(r, phase), kHwCutoff);
      if (!c.within_bound) return {false, "|z|=" + sci(r) + " exceeds truncation bound"};
      if (c.bound > 0) worst_ratio = std::max(worst_ratio, c.residual / c.bound);
    }
  }
  return {true, "|(a-z)|z>|/||z>| within |z|^41/sqrt(40!) for |z|<=1, cutoff " + std::to_string(kHwCutoff) +
                    ", worst residual/bound " + sci(worst_ratio)};
}

void report(int n, const std::string& name, const std::function<Result()>& f, bool& all) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  all = all && r.pass;
  std::printf("[%s] %2d. %s: %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", n, name.c_str(), r.detail.c_str(), secs);
  std::fflush(stdout);
}

}  // namespace

int main() {
  bool all = true;
  std::vector<IrrepBasis> bases;
  for (const auto& irrep : sweep(kSweepBoxes)) bases.push_back(irrep_basis(irrep));

  report(1, "constraint annihilation", [&] { return constraint_annihilation(bases); }, all);
  report(2, "Casimir labels", [&] { return casimir_labels(bases); }, all);
  report(3, "dimension", [&] { return dimensions(bases); }, all);
  report(4, "Lie algebra", [&] { return lie_algebra(bases); }, all);
  report(5, "SU(3) antisymmetric example", antisymmetric_example, all);
  CoherentSweep cs;
  report(6, "coherent covariance", [&] {
    cs = coherent_sweep();
    return Result{cs.covariance < kCovarianceTol, std::to_string(kCovariancePoints) + " (p,theta) per irrep, N<=4, boxes<=3, max residual " +
                                                    sci(cs.covariance) + " (" + cs.worst + ", <" + sci(kCovarianceTol) + ")"};
  }, all);
  report(7, "resolution of identity", identity, all);
  report(8, "SU(2) Euler cross-check", euler, all);
  report(9, "HW baseline", hw_baseline, all);
  report(10, "structure-function expansion", [&] {
    return Result{cs.points > 0 && cs.expansion < kExpansionTol,
                  std::to_string(cs.points) + " points from the sweep of 6, max residual " + sci(cs.expansion) + " (<" + sci(kExpansionTol) + ")"};
  }, all);
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
