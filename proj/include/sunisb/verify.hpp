#pragma once

// Invariant suite run per irrep by `sunisb verify` and the acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "sunisb/coherent.hpp"
#include "sunisb/isb.hpp"
#include "sunisb/liealg.hpp"
#include "sunisb/manifold.hpp"

namespace sunisb {

struct VerifyOptions {
  int covariance_points = 20;
  double max_theta_norm = 1.0;
  int expansion_points = 3;
  std::uint64_t seed = 1;
};

inline constexpr double kCovarianceTolerance = 1e-8;
inline constexpr double kExpansionTolerance = 1e-10;
inline constexpr double kJacobiTolerance = 1e-12;

/// Random theta with |theta| <= max_norm.
inline std::vector<double> random_theta(int dimension, double max_norm, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> theta(static_cast<std::size_t>(dimension));
  double n2 = 0.0;
  for (auto& t : theta) {
    t = gauss(rng);
    n2 += t * t;
  }
  const double scale = max_norm * unit(rng) / std::sqrt(n2);
  for (auto& t : theta) t *= scale;
  return theta;
}

/// L_ij v == 0 exactly for every basis vector and i < j.
inline CheckReport check_constraint_annihilation(const IrrepBasis& basis) {
  const int N = basis.irrep.rank();
  double worst = 0.0;
  bool exact_zero = true;
  for (const auto& v : basis.states) {
    for (int i = 1; i < N - 1; ++i) {
      for (int j = i + 1; j < N; ++j) {
        const ExactState r = apply_constraint(i, j, v);
        if (!r.empty()) {
          exact_zero = false;
          worst = std::max(worst, norm(r) / norm(v));
        }
      }
    }
  }
  return {"constraint_annihilation", worst, exact_zero, static_cast<int>(basis.states.size())};
}

/// plet_number(v, i) == n_i for every basis vector.
inline CheckReport check_casimir_labels(const IrrepBasis& basis) {
  double worst = 0.0;
  for (const auto& v : basis.states) {
    for (int i = 1; i < basis.irrep.rank(); ++i) {
      try {
        worst = std::max(worst, static_cast<double>(std::abs(plet_number(v, i) - basis.irrep.row(i))));
      } catch (const Error&) {
        worst = std::max(worst, 1.0);
      }
    }
  }
  return {"casimir_labels", worst, worst == 0.0, static_cast<int>(basis.states.size())};
}

inline CheckReport check_dimension(const IrrepBasis& basis) {
  const double diff = std::abs(static_cast<double>(basis.states.size()) - static_cast<double>(weyl_dimension(basis.irrep)));
  return {"dimension", diff, diff == 0.0, static_cast<int>(basis.states.size())};
}

/// sum_a Q^a Q^a = C_2 I on the irrep, with C_2 from the row lengths.
inline CheckReport check_quadratic_casimir(const IrrepLabel& irrep, const MatrixRep& rep) {
  const double expected = static_cast<double>(quadratic_casimir(irrep));
  const Eigen::MatrixXcd diff = rep.casimir() - expected * Eigen::MatrixXcd::Identity(rep.dimension(), rep.dimension());
  const double worst = diff.cwiseAbs().maxCoeff();
  return {"quadratic_casimir", worst, worst < kLieTolerance, rep.dimension()};
}

/// [L_ij, A†_alpha[k]] v == 0 and [A†_alpha[k], A†_beta[k]] v == 0 on constrained v.
inline std::pair<CheckReport, CheckReport> check_isb_commutators(const IrrepBasis& basis) {
  const int N = basis.irrep.rank();
  bool weak_ok = true;
  bool row_ok = true;
  double weak_worst = 0.0;
  double row_worst = 0.0;
  for (const auto& v : basis.states) {
    for (int k = 1; k < N; ++k) {
      std::vector<ExactState> raised;
      for (int alpha = 1; alpha <= N; ++alpha) raised.push_back(isb_create(k, alpha, v));
      for (int alpha = 1; alpha <= N; ++alpha) {
        const ExactState& w = raised[static_cast<std::size_t>(alpha - 1)];
        for (int i = 1; i < N - 1; ++i) {
          for (int j = i + 1; j < N; ++j) {
            const ExactState r = apply_constraint(i, j, w) - isb_create(k, alpha, apply_constraint(i, j, v));
            if (!r.empty()) {
              weak_ok = false;
              weak_worst = std::max(weak_worst, norm(r));
            }
          }
        }
        for (int beta = alpha + 1; beta <= N; ++beta) {
          const ExactState r = isb_create(k, alpha, raised[static_cast<std::size_t>(beta - 1)]) - isb_create(k, beta, w);
          if (!r.empty()) {
            row_ok = false;
            row_worst = std::max(row_worst, norm(r));
          }
        }
      }
    }
  }
  const int probes = static_cast<int>(basis.states.size());
  return {{"weak_commutator", weak_worst, weak_ok, probes}, {"row_exchange", row_worst, row_ok, probes}};
}

/// Covariance of coherent states under exp(i theta.Q) at random (p, theta).
inline CheckReport check_covariance(const IrrepLabel& irrep, const MatrixRep& rep, const GeneratorBasis& gens,
                                    const VerifyOptions& opts) {
  std::mt19937_64 rng(mix_seed(opts.seed, 0xC0));
  double worst = 0.0;
  for (int t = 0; t < opts.covariance_points; ++t) {
    const ManifoldPoint p = haar_sample(irrep.rank(), rng());
    const std::vector<double> theta = random_theta(gens.dimension(), opts.max_theta_norm, rng);
    worst = std::max(worst, covariance_check(irrep, p, theta, rep, gens));
  }
  return {"covariance", worst, worst < kCovarianceTolerance, opts.covariance_points};
}

/// Structure-function expansion and irrep membership of coherent states.
inline std::pair<CheckReport, CheckReport> check_coherent_expansion(const IrrepLabel& irrep, const MatrixRep& rep,
                                                                    const VerifyOptions& opts) {
  std::mt19937_64 rng(mix_seed(opts.seed, 0xE0));
  double expansion = 0.0;
  double membership = 0.0;
  for (int t = 0; t < opts.expansion_points; ++t) {
    const ManifoldPoint p = haar_sample(irrep.rank(), rng());
    expansion = std::max(expansion, expansion_residual(irrep, p));
    membership = std::max(membership, rep.projection_residual(coherent_state(irrep, p).vector));
  }
  return {{"expansion_identity", expansion, expansion < kExpansionTolerance, opts.expansion_points},
          {"membership", membership, membership < kExpansionTolerance, opts.expansion_points}};
}

/// Full suite for one irrep. Construction failures surface as failed checks.
inline std::vector<CheckReport> verify_irrep(const IrrepLabel& irrep, const VerifyOptions& opts = {}) {
  std::vector<CheckReport> out;
  const GeneratorBasis gens(irrep.rank());
  IrrepBasis basis{irrep, {}, {}};
  try {
    basis = irrep_basis(irrep);
  } catch (const Error& e) {
    out.push_back({"dimension", 1.0, false, 0});
    return out;
  }
  out.push_back(check_dimension(basis));
  out.push_back(check_constraint_annihilation(basis));
  out.push_back(check_casimir_labels(basis));

  std::vector<FloatState> probes;
  for (const auto& s : basis.states) probes.push_back(to_float(s));
  out.push_back(check_lie_algebra(gens, probes));
  out.push_back(check_casimir_commutation(gens, basis.states));
  out.push_back(check_hermiticity(gens, basis.states));
  const double jacobi = jacobi_residual(gens);
  out.push_back({"jacobi", jacobi, jacobi < kJacobiTolerance, 0});

  auto [weak, row] = check_isb_commutators(basis);
  out.push_back(weak);
  out.push_back(row);

  try {
    const MatrixRep rep = matrix_rep(basis.states, gens);
    out.push_back({"invariance", rep.invariance_residual(), true, rep.dimension()});
    out.push_back(check_quadratic_casimir(irrep, rep));
    out.push_back(check_covariance(irrep, rep, gens, opts));
    auto [expansion, membership] = check_coherent_expansion(irrep, rep, opts);
    out.push_back(expansion);
    out.push_back(membership);
  } catch (const Error& e) {
    out.push_back({"invariance", 1.0, false, 0});
  }
  return out;
}

}  // namespace sunisb
