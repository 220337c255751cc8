#pragma once

// SU(N) coset coordinates: N-1 orthonormal complex N-vectors z[1..N-1],
// completed to a special unitary matrix by the conjugated wedge product.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sunisb/error.hpp"
#include "sunisb/liealg.hpp"

namespace sunisb {

inline constexpr double kOrthonormalTolerance = 1e-10;

/// Largest |conj(z[i]) . z[j] - delta_ij|.
inline double orthonormality_defect(std::span<const Eigen::VectorXcd> z) {
  double worst = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      const std::complex<double> g = z[i].dot(z[j]);  // Eigen's dot conjugates the left operand
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

struct ManifoldPoint {
  int N = 2;
  std::vector<Eigen::VectorXcd> z;  ///< z[i-1] holds the N-vector z[i]

  double defect() const { return orthonormality_defect(z); }
};

struct UnitaryFrame {
  Eigen::MatrixXcd U;
};

inline void check_frame_shape(std::span<const Eigen::VectorXcd> z, int N) {
  if (static_cast<int>(z.size()) != N - 1) throw Error(ErrorCode::ShapeMismatch, "frame needs N-1 vectors");
  for (const auto& v : z) {
    if (v.size() != N) throw Error(ErrorCode::ShapeMismatch, "frame vectors must have N components");
  }
}

/// Column w such that [z[1] ... z[N-1] w] has determinant +1; for orthonormal
/// input w_j is the complex conjugate of the (j, N) cofactor.
inline Eigen::VectorXcd wedge_complement(std::span<const Eigen::VectorXcd> z) {
  const int N = static_cast<int>(z.size()) + 1;
  if (N < 2) throw Error(ErrorCode::InvalidRank, "wedge complement needs at least one vector");
  check_frame_shape(z, N);
  if (const double d = orthonormality_defect(z); d > kOrthonormalTolerance) {
    throw Error(ErrorCode::NonOrthonormal, "frame defect " + std::to_string(d));
  }
  Eigen::MatrixXcd cols(N, N - 1);
  for (int i = 0; i < N - 1; ++i) cols.col(i) = z[static_cast<std::size_t>(i)];
  Eigen::VectorXcd w(N);
  for (int j = 0; j < N; ++j) {
    Eigen::MatrixXcd minor(N - 1, N - 1);
    for (int r = 0, mr = 0; r < N; ++r) {
      if (r == j) continue;
      minor.row(mr++) = cols.row(r);
    }
    const std::complex<double> det = minor.determinant();
    const double sign = ((j + N - 1) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{(j+1)+N}
    w(j) = std::conj(sign * det);
  }
  return w;
}

inline UnitaryFrame assemble_unitary(const ManifoldPoint& p) {
  check_frame_shape(p.z, p.N);
  UnitaryFrame frame{Eigen::MatrixXcd(p.N, p.N)};
  for (int i = 0; i < p.N - 1; ++i) frame.U.col(i) = p.z[static_cast<std::size_t>(i)];
  frame.U.col(p.N - 1) = wedge_complement(p.z);
  return frame;
}

inline ManifoldPoint point_from_unitary(const Eigen::MatrixXcd& U) {
  ManifoldPoint p{static_cast<int>(U.rows()), {}};
  for (int i = 0; i < p.N - 1; ++i) p.z.push_back(U.col(i));
  return p;
}

inline ManifoldPoint identity_point(int N) {
  if (N < 2) throw Error(ErrorCode::InvalidRank, "N must be >= 2");
  return point_from_unitary(Eigen::MatrixXcd::Identity(N, N));
}

/// Haar-distributed special unitary: QR of a complex Ginibre matrix, columns
/// rephased by R_ii/|R_ii|, last column rotated to make det = 1.
inline Eigen::MatrixXcd haar_unitary(int N, std::uint64_t seed) {
  if (N < 2) throw Error(ErrorCode::InvalidRank, "N must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(N, N);
  for (int c = 0; c < N; ++c) {
    for (int r = 0; r < N; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = {re, im};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < N; ++c) {
    const std::complex<double> d = r(c, c);
    q.col(c) *= d / std::abs(d);
  }
  const std::complex<double> det = q.determinant();
  q.col(N - 1) *= std::conj(det) / std::abs(det);
  return q;
}

inline ManifoldPoint haar_sample(int N, std::uint64_t seed) { return point_from_unitary(haar_unitary(N, seed)); }

/// z[i] -> exp(i theta . Lambda / 2) z[i] for every i.
inline ManifoldPoint rotate_point(const ManifoldPoint& p, std::span<const double> theta, const GeneratorBasis& gens) {
  if (gens.rank() != p.N) throw Error(ErrorCode::RankMismatch, "point and generator basis rank differ");
  const Eigen::MatrixXcd g = gens.group_element(theta);
  ManifoldPoint out{p.N, {}};
  for (const auto& v : p.z) out.z.push_back(g * v);
  return out;
}

/// splitmix64; derives independent per-sample seeds from a run seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace sunisb
