#pragma once

// Coherent states: Heisenberg-Weyl baseline, the projected SU(N) coherent state
//   |z>_[n] = (z[N-1].A†[N-1])^{n_{N-1}}/n_{N-1}! ... (z[1].A†[1])^{n_1}/n_1! |0>,
// its structure-function expansion, covariance under SU(N), Monte Carlo
// resolution of identity, and the SU(2) Euler-angle comparison.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "sunisb/error.hpp"
#include "sunisb/fock.hpp"
#include "sunisb/isb.hpp"
#include "sunisb/liealg.hpp"
#include "sunisb/manifold.hpp"

namespace sunisb {

using cdouble = std::complex<double>;

// ---------------------------------------------------------------------------
// Heisenberg-Weyl

inline constexpr ModeIndex kHwMode{1, 1};

/// sum_{n <= cutoff} z^n/n! (a†)^n |0> on the single mode (1,1) of an N=2 space.
/// With Scalar = ComplexRational the double z is taken as its exact binary value.
template <class Scalar = cdouble>
StateVector<Scalar> hw_coherent(cdouble z, int cutoff, bool normalize = false) {
  if (cutoff < 0) throw Error(ErrorCode::IndexOutOfRange, "cutoff must be >= 0");
  Scalar zs;
  if constexpr (std::is_same_v<Scalar, ComplexRational>) {
    zs = ComplexRational(Rational(z.real()), Rational(z.imag()));
  } else {
    zs = z;
  }
  StateVector<Scalar> v(2);
  Scalar coeff(1);
  FockState s(2);
  for (int n = 0; n <= cutoff; ++n) {
    if (n > 0) {
      coeff *= zs;
      if constexpr (std::is_same_v<Scalar, ComplexRational>) {
        coeff *= ComplexRational(Rational(1, n));
      } else {
        coeff /= static_cast<double>(n);
      }
    }
    s.set_occupation(kHwMode, n);
    v.add_term(s, coeff);
  }
  if (normalize) {
    if constexpr (std::is_same_v<Scalar, ComplexRational>) {
      throw Error(ErrorCode::ShapeMismatch, "exact coherent states cannot be normalized");
    } else {
      v *= Scalar(1.0 / norm(v));
    }
  }
  return v;
}

/// Coefficient of the sqrt-normalized occupation state |n> = (a†)^n/sqrt(n!) |0>.
inline cdouble hw_coefficient(const FloatState& v, int n) {
  FockState s(v.rank());
  s.set_occupation(kHwMode, n);
  return v.amplitude(s) * std::sqrt(s.norm_squared_double());
}

struct HwEigenCheck {
  double residual;  ///< |(a - z)|z>| / ||z>|
  double bound;     ///< |z|^{cutoff+1} / sqrt(cutoff!)
  bool within_bound;
};

/// Annihilation eigenproperty of the truncated state, evaluated exactly.
inline HwEigenCheck hw_eigen_check(cdouble z, int cutoff) {
  const ExactState v = hw_coherent<ComplexRational>(z, cutoff);
  const ComplexRational zs(Rational(z.real()), Rational(z.imag()));
  const ExactState r = annihilate(v, kHwMode) - zs * v;
  const Rational ratio = inner(r, r).re / inner(v, v).re;
  Rational bound_sq = 1;
  const Rational mod_sq = zs.re * zs.re + zs.im * zs.im;
  for (int k = 0; k <= cutoff; ++k) bound_sq *= mod_sq;
  for (int k = 2; k <= cutoff; ++k) bound_sq /= k;
  return {std::sqrt(static_cast<double>(ratio)), std::sqrt(static_cast<double>(bound_sq)), ratio <= bound_sq};
}

// ---------------------------------------------------------------------------
// SU(N)

struct CoherentState {
  IrrepLabel irrep;
  ManifoldPoint point;
  FloatState vector;
  bool normalized = false;
};

inline void check_point(const IrrepLabel& irrep, const ManifoldPoint& p) {
  if (p.N != irrep.rank()) throw Error(ErrorCode::RankMismatch, "point and irrep rank differ");
  check_frame_shape(p.z, p.N);
}

/// Applies the factors (z[k].A†[k])^{n_k}/n_k! for k = 1..N-1 in that order.
inline CoherentState coherent_state(const IrrepLabel& irrep, const ManifoldPoint& p, bool normalize = false) {
  check_point(irrep, p);
  const int N = irrep.rank();
  FloatState v = vacuum<cdouble>(N);
  for (int k = 1; k < N; ++k) {
    double factorial = 1.0;
    for (int step = 1; step <= irrep.row(k); ++step) {
      FloatState next(N);
      for (int alpha = 1; alpha <= N; ++alpha) {
        const cdouble za = p.z[static_cast<std::size_t>(k - 1)](alpha - 1);
        if (za == cdouble{}) continue;
        next += za * isb_create(k, alpha, v);
      }
      v = std::move(next);
      factorial *= step;
    }
    v *= cdouble(1.0 / factorial);
  }
  if (v.empty()) throw Error(ErrorCode::ZeroState, "coherent state vanished for " + irrep.str());
  if (normalize) v *= cdouble(1.0 / norm(v));
  return {irrep, p, std::move(v), normalize};
}

/// F(colors)(z) = prod_i prod_t z[i]_{colors[i][t]} / prod_i n_i!.
inline cdouble structure_function(const IrrepLabel& irrep, const ManifoldPoint& p, const ColorTableau& colors) {
  check_point(irrep, p);
  check_tableau_shape(irrep, colors);
  cdouble value = 1.0;
  for (int i = 1; i < irrep.rank(); ++i) {
    double factorial = 1.0;
    int t = 0;
    for (int c : colors[static_cast<std::size_t>(i - 1)]) {
      value *= p.z[static_cast<std::size_t>(i - 1)](c - 1);
      factorial *= ++t;
    }
    value /= factorial;
  }
  return value;
}

/// Every color tableau of the irrep's shape (all N^{boxes} assignments).
inline std::vector<ColorTableau> all_colorings(const IrrepLabel& irrep) {
  const int N = irrep.rank();
  std::vector<ColorTableau> out;
  ColorTableau t(static_cast<std::size_t>(N - 1));
  for (int i = 1; i < N; ++i) t[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(irrep.row(i)), 1);
  while (true) {
    out.push_back(t);
    // odometer increment, last cell fastest
    int i = N - 1;
    int pos = irrep.row(i) - 1;
    while (i >= 1) {
      if (pos < 0) {
        --i;
        if (i >= 1) pos = irrep.row(i) - 1;
        continue;
      }
      int& cell = t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(pos)];
      if (cell < N) {
        ++cell;
        break;
      }
      cell = 1;
      --pos;
    }
    if (i < 1) break;
  }
  return out;
}

/// |coherent_state - sum_colors F(colors) monomial(colors)| / |coherent_state|.
inline double expansion_residual(const IrrepLabel& irrep, const ManifoldPoint& p) {
  const CoherentState cs = coherent_state(irrep, p);
  FloatState sum(irrep.rank());
  for (const auto& colors : all_colorings(irrep)) {
    const cdouble f = structure_function(irrep, p, colors);
    if (f == cdouble{}) continue;
    sum += f * to_float(monomial_state(irrep, colors));
  }
  return norm(cs.vector - sum) / norm(cs.vector);
}

/// |exp(i theta.Q)|p> - |rotate(p, theta)>| / ||p>| in the irrep basis.
inline double covariance_check(const IrrepLabel& irrep, const ManifoldPoint& p, std::span<const double> theta,
                               const MatrixRep& rep, const GeneratorBasis& gens) {
  if (rep.rank() != irrep.rank() || static_cast<std::uint64_t>(rep.dimension()) != weyl_dimension(irrep)) {
    throw Error(ErrorCode::ShapeMismatch, "representation does not match irrep " + irrep.str());
  }
  const Eigen::VectorXcd before = rep.coordinates(coherent_state(irrep, p).vector);
  const Eigen::VectorXcd after = rep.coordinates(coherent_state(irrep, rotate_point(p, theta, gens)).vector);
  return (rep.group_element(theta) * before - after).norm() / before.norm();
}

/// All projections of the generating function with at most `max_boxes` boxes.
inline std::vector<CoherentState> coherent_family(const ManifoldPoint& p, int max_boxes) {
  std::vector<CoherentState> out;
  for (const auto& irrep : irreps_up_to(p.N, max_boxes)) out.push_back(coherent_state(irrep, p));
  return out;
}

// ---------------------------------------------------------------------------
// Resolution of identity

struct IdentityReport {
  IrrepLabel irrep;
  int dim = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  Eigen::MatrixXcd estimate;  ///< O = mean of |p><p| in the orthonormal irrep basis
  double c = 0.0;             ///< Tr(O)/d
  double max_offdiag = 0.0;
  double max_diag_dev = 0.0;
  double stderr_max = 0.0;    ///< largest per-entry standard error
  double max_offdiag_z = 0.0; ///< max |O_ab| / se_ab over a != b
  double max_diag_z = 0.0;    ///< max |O_aa - c| / se_aa
  bool pass = false;
};

inline constexpr double kSigmaBand = 5.0;
inline constexpr std::int64_t kResolutionChunk = 256;

/// Monte Carlo estimate of the Haar average of normalized coherent-state
/// projectors. Sample k uses the frame haar_sample(N, mix_seed(seed, k)); chunks
/// are reduced in index order so the result does not depend on `threads`.
inline IdentityReport identity_resolution(const IrrepLabel& irrep, std::int64_t samples, std::uint64_t seed,
                                          unsigned threads = 0) {
  if (samples < 1) throw Error(ErrorCode::IndexOutOfRange, "samples must be >= 1");
  const int N = irrep.rank();
  const GeneratorBasis gens(N);
  const IrrepBasis basis = irrep_basis(irrep);
  const MatrixRep rep = matrix_rep(basis.states, gens);
  const int d = rep.dimension();

  struct Partial {
    Eigen::MatrixXcd sum;
    Eigen::MatrixXd sum_sq;
  };
  const std::int64_t chunks = (samples + kResolutionChunk - 1) / kResolutionChunk;
  std::vector<Partial> partials(static_cast<std::size_t>(chunks));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::int64_t chunk = next++; chunk < chunks; chunk = next++) {
        Partial part{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXd::Zero(d, d)};
        const std::int64_t lo = chunk * kResolutionChunk;
        const std::int64_t hi = std::min(samples, lo + kResolutionChunk);
        for (std::int64_t k = lo; k < hi; ++k) {
          const ManifoldPoint p = haar_sample(N, mix_seed(seed, static_cast<std::uint64_t>(k)));
          const CoherentState cs = coherent_state(irrep, p, true);
          const Eigen::VectorXcd c = rep.coordinates(cs.vector);
          const Eigen::MatrixXcd outer = c * c.adjoint();
          part.sum += outer;
          part.sum_sq += outer.cwiseAbs2();
        }
        partials[static_cast<std::size_t>(chunk)] = std::move(part);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, chunks));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(d, d);
  for (const auto& part : partials) {
    sum += part.sum;
    sum_sq += part.sum_sq;
  }

  IdentityReport report{irrep, d, samples, seed, {}, 0, 0, 0, 0, 0, 0, false};
  const double m = static_cast<double>(samples);
  report.estimate = sum / m;
  report.c = report.estimate.trace().real() / d;
  bool pass = true;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const cdouble mean = report.estimate(a, b);
      const double var = samples > 1 ? std::max(0.0, (sum_sq(a, b) - m * std::norm(mean)) / (m - 1.0)) : 0.0;
      const double se = std::sqrt(var / m);
      report.stderr_max = std::max(report.stderr_max, se);
      const double dev = a == b ? std::abs(mean.real() - report.c) : std::abs(mean);
      double z = 0.0;
      if (se > 0.0) {
        z = dev / se;
      } else if (dev > 1e-12) {
        z = std::numeric_limits<double>::infinity();
      }
      if (a == b) {
        report.max_diag_dev = std::max(report.max_diag_dev, dev);
        report.max_diag_z = std::max(report.max_diag_z, z);
      } else {
        report.max_offdiag = std::max(report.max_offdiag, dev);
        report.max_offdiag_z = std::max(report.max_offdiag_z, z);
      }
      if (z >= kSigmaBand) pass = false;
    }
  }
  report.pass = pass;
  return report;
}

// ---------------------------------------------------------------------------
// SU(2) Euler angles

/// C_m = e^{-i(m phi + j psi)} sqrt((2j)!/((j+m)!(j-m)!)) sin(theta/2)^{j-m} cos(theta/2)^{j+m},
/// returned for m = -j, -j+1, ..., j. The spin is given as two_j = 2j.
inline std::vector<cdouble> su2_euler_coefficients(int two_j, double theta, double phi, double psi) {
  if (two_j < 0) throw Error(ErrorCode::InvalidSpin, "2j must be a non-negative integer");
  auto factorial = [](int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  const double j = two_j / 2.0;
  std::vector<cdouble> c;
  for (int up = 0; up <= two_j; ++up) {  // up = j + m
    const int down = two_j - up;         // j - m
    const double m = up - j;
    const double mag = std::sqrt(factorial(two_j) / (factorial(up) * factorial(down))) *
                       std::pow(std::sin(theta / 2), down) * std::pow(std::cos(theta / 2), up);
    c.push_back(std::polar(mag, -(m * phi + j * psi)));
  }
  return c;
}

/// exp(-i phi J3) exp(-i theta J2) exp(-i psi J3) in the defining representation.
inline Eigen::MatrixXcd su2_euler_matrix(double theta, double phi, double psi, const GeneratorBasis& gens) {
  if (gens.rank() != 2) throw Error(ErrorCode::RankMismatch, "Euler angles need the SU(2) basis");
  const cdouble mi(0.0, -0.5);
  const Eigen::MatrixXcd j2 = gens.lambda(2);
  const Eigen::MatrixXcd j3 = gens.lambda(3);
  return (mi * phi * j3).exp() * (mi * theta * j2).exp() * (mi * psi * j3).exp();
}

struct EulerCheck {
  double phase = 0.0;          ///< global phase e^{i phase} taking C_m onto the Schwinger state
  double max_deviation = 0.0;  ///< max_m |D_m e^{-i phase} - C_m|
  std::vector<cdouble> schwinger;  ///< D_m in the |j,m> basis, m = -j..j
  std::vector<cdouble> euler;      ///< C_m, m = -j..j
};

/// Compares the normalized Schwinger coherent state at the first column of
/// U(theta, phi, psi) with sum_m C_m |j,m>.
inline EulerCheck euler_cross_check(int two_j, double theta, double phi, double psi) {
  const GeneratorBasis gens(2);
  const Eigen::MatrixXcd u = su2_euler_matrix(theta, phi, psi, gens);
  const ManifoldPoint p{2, {u.col(0)}};
  const CoherentState cs = coherent_state(IrrepLabel(2, {two_j}), p, true);
  EulerCheck out;
  out.euler = su2_euler_coefficients(two_j, theta, phi, psi);
  for (int up = 0; up <= two_j; ++up) {
    FockState s(2);
    s.set_occupation({1, 1}, up);
    s.set_occupation({1, 2}, two_j - up);
    out.schwinger.push_back(cs.vector.amplitude(s) * std::sqrt(s.norm_squared_double()));
  }
  cdouble overlap = 0.0;
  for (std::size_t k = 0; k < out.euler.size(); ++k) overlap += std::conj(out.euler[k]) * out.schwinger[k];
  out.phase = std::arg(overlap);
  const cdouble undo = std::polar(1.0, -out.phase);
  for (std::size_t k = 0; k < out.euler.size(); ++k) {
    out.max_deviation = std::max(out.max_deviation, std::abs(out.schwinger[k] * undo - out.euler[k]));
  }
  return out;
}

}  // namespace sunisb
