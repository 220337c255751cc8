#pragma once

// Generalized Gell-Mann basis, the Schwinger-boson generators
// Q^a = sum_i a†[i] (Lambda^a / 2) a[i], plet number operators, constraint
// operators L_ij and numerical verification of the su(N) algebra.

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "sunisb/error.hpp"
#include "sunisb/exact_linalg.hpp"
#include "sunisb/fock.hpp"
#include "sunisb/rational.hpp"

namespace sunisb {

using ComplexLD = std::complex<long double>;
using MatrixXcld = Eigen::Matrix<ComplexLD, Eigen::Dynamic, Eigen::Dynamic>;

/// Lambda^a = scale(a) * M^a with M^a an exact matrix over Q(i). Off-diagonal
/// generators have scale 1; the l-th diagonal generator has scale sqrt(2/(l(l+1))).
class GeneratorBasis {
 public:
  enum class Kind { Symmetric, Antisymmetric, Diagonal };

  explicit GeneratorBasis(int N) : n_(N) {
    if (N < 2) throw Error(ErrorCode::InvalidRank, "N must be >= 2, got " + std::to_string(N));
    for (int k = 2; k <= N; ++k) {
      for (int j = 1; j < k; ++j) {
        std::vector<ComplexRational> sym(cells()), anti(cells());
        sym[cell(j, k)] = 1;
        sym[cell(k, j)] = 1;
        anti[cell(j, k)] = ComplexRational(0, -1);
        anti[cell(k, j)] = ComplexRational(0, 1);
        push(Kind::Symmetric, std::move(sym), Rational(1));
        push(Kind::Antisymmetric, std::move(anti), Rational(1));
      }
      const int l = k - 1;
      std::vector<ComplexRational> diag(cells());
      for (int m = 1; m <= l; ++m) diag[cell(m, m)] = 1;
      diag[cell(k, k)] = -l;
      push(Kind::Diagonal, std::move(diag), Rational(2, l * (l + 1)));
    }
    compute_structure_constants();
  }

  int rank() const { return n_; }
  /// N^2 - 1.
  int dimension() const { return static_cast<int>(exact_.size()); }

  Kind kind(int a) const { return kinds_[index(a)]; }
  /// Entry (row, col) of M^a; rows and columns are 1-based colors.
  const ComplexRational& rational_entry(int a, int row, int col) const { return exact_[index(a)][cell(row, col)]; }
  const Rational& scale_squared(int a) const { return scale_sq_[index(a)]; }
  long double scale(int a) const { return std::sqrt(static_cast<long double>(scale_sq_[index(a)])); }
  bool is_rational(int a) const { return scale_sq_[index(a)] == 1; }

  MatrixXcld lambda_ld(int a) const {
    MatrixXcld m(n_, n_);
    const long double s = scale(a);
    for (int r = 1; r <= n_; ++r) {
      for (int c = 1; c <= n_; ++c) {
        const auto& z = rational_entry(a, r, c);
        m(r - 1, c - 1) = ComplexLD(s * static_cast<long double>(z.re), s * static_cast<long double>(z.im));
      }
    }
    return m;
  }

  Eigen::MatrixXcd lambda(int a) const { return lambda_ld(a).cast<std::complex<double>>(); }

  /// f^{abc} with [Lambda^a, Lambda^b] = 2i f^{abc} Lambda^c.
  long double structure_constant(int a, int b, int c) const {
    return f_[static_cast<std::size_t>(((index(a) * dimension()) + index(b)) * dimension() + index(c))];
  }

  /// exp(i sum_a theta^a Lambda^a / 2) in the defining representation.
  Eigen::MatrixXcd group_element(std::span<const double> theta) const {
    if (static_cast<int>(theta.size()) != dimension()) {
      throw Error(ErrorCode::ShapeMismatch, "theta must have N^2-1 entries");
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n_, n_);
    for (int a = 1; a <= dimension(); ++a) h += theta[static_cast<std::size_t>(a - 1)] * lambda(a);
    return (std::complex<double>(0.0, 0.5) * h).exp();
  }

 private:
  std::size_t cells() const { return static_cast<std::size_t>(n_ * n_); }
  std::size_t cell(int row, int col) const { return static_cast<std::size_t>((row - 1) * n_ + (col - 1)); }
  std::size_t index(int a) const {
    if (a < 1 || a > dimension()) {
      throw Error(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(a) + " outside 1.." +
                                                  std::to_string(dimension()));
    }
    return static_cast<std::size_t>(a - 1);
  }

  void push(Kind kind, std::vector<ComplexRational> m, Rational scale_sq) {
    kinds_.push_back(kind);
    exact_.push_back(std::move(m));
    scale_sq_.push_back(std::move(scale_sq));
  }

  void compute_structure_constants() {
    const int d = dimension();
    std::vector<MatrixXcld> l;
    for (int a = 1; a <= d; ++a) l.push_back(lambda_ld(a));
    f_.assign(static_cast<std::size_t>(d * d * d), 0.0L);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const MatrixXcld comm = l[a] * l[b] - l[b] * l[a];
        for (int c = 0; c < d; ++c) {
          // f = -(i/4) Tr([La, Lb] Lc)
          const ComplexLD tr = (comm * l[c]).trace();
          f_[static_cast<std::size_t>((a * d + b) * d + c)] = (ComplexLD(0, -0.25L) * tr).real();
        }
      }
    }
  }

  int n_;
  std::vector<Kind> kinds_;
  std::vector<std::vector<ComplexRational>> exact_;
  std::vector<Rational> scale_sq_;
  std::vector<long double> f_;
};

inline GeneratorBasis build_gell_mann(int N) { return GeneratorBasis(N); }

namespace detail {

/// sum_i sum_{alpha,beta} coeff(alpha,beta) a†_alpha[i] a_beta[i] v over the given plets.
template <class Scalar, class Coeff>
StateVector<Scalar> apply_one_body(const StateVector<Scalar>& v, int plet_lo, int plet_hi, Coeff&& coeff) {
  const int N = v.rank();
  StateVector<Scalar> out(N);
  for (const auto& [s, amp] : v) {
    for (int i = plet_lo; i <= plet_hi; ++i) {
      for (int beta = 1; beta <= N; ++beta) {
        const int nb = s.occupation({i, beta});
        if (nb == 0) continue;
        for (int alpha = 1; alpha <= N; ++alpha) {
          const Scalar c = coeff(alpha, beta);
          if (is_zero(c)) continue;
          FockState t = s;
          t.set_occupation({i, beta}, nb - 1);
          t.set_occupation({i, alpha}, t.occupation({i, alpha}) + 1);
          out.add_term(t, amp * c * Scalar(nb));
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Q^a v = scale * state, where state is exact.
struct ScaledState {
  long double scale;
  ExactState state;
};

/// Exact action of the rational part of Q^a; the true image is scale * state.
inline ScaledState apply_generator(int a, const ExactState& v, const GeneratorBasis& g) {
  if (v.rank() != g.rank()) throw Error(ErrorCode::RankMismatch, "state and generator basis rank differ");
  const ComplexRational half(Rational(1, 2));
  ExactState image = detail::apply_one_body(v, 1, v.rank() - 1, [&](int alpha, int beta) {
    return g.rational_entry(a, alpha, beta) * half;
  });
  return {g.scale(a), std::move(image)};
}

inline FloatState apply_generator(int a, const FloatState& v, const GeneratorBasis& g) {
  if (v.rank() != g.rank()) throw Error(ErrorCode::RankMismatch, "state and generator basis rank differ");
  const double s = static_cast<double>(g.scale(a)) * 0.5;
  return detail::apply_one_body(v, 1, v.rank() - 1, [&](int alpha, int beta) {
    return to_complex(g.rational_entry(a, alpha, beta)) * s;
  });
}

/// N_i v.
template <class Scalar>
StateVector<Scalar> apply_number(int plet, const StateVector<Scalar>& v) {
  if (plet < 1 || plet > v.rank() - 1) throw Error(ErrorCode::IndexOutOfRange, "plet " + std::to_string(plet));
  return detail::apply_one_body(v, plet, plet, [](int alpha, int beta) {
    return alpha == beta ? Scalar(1) : Scalar(0);
  });
}

/// a†[i] . a[j] v for any pair of plets (raising or lowering).
template <class Scalar>
StateVector<Scalar> apply_hopping(int i, int j, const StateVector<Scalar>& v) {
  const int N = v.rank();
  if (i < 1 || i > N - 1 || j < 1 || j > N - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "plet pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  StateVector<Scalar> out(N);
  for (const auto& [s, amp] : v) {
    for (int alpha = 1; alpha <= N; ++alpha) {
      const int nj = s.occupation({j, alpha});
      if (nj == 0) continue;
      FockState t = s;
      t.set_occupation({j, alpha}, nj - 1);
      t.set_occupation({i, alpha}, t.occupation({i, alpha}) + 1);
      out.add_term(t, amp * Scalar(nj));
    }
  }
  return out;
}

/// L_ij v = a†[i] . a[j] v with i < j.
template <class Scalar>
StateVector<Scalar> apply_constraint(int i, int j, const StateVector<Scalar>& v) {
  if (i >= j) {
    throw Error(ErrorCode::InvalidConstraintPair,
                "constraint requires i < j, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return apply_hopping(i, j, v);
}

/// Outcome of one verification check.
struct CheckReport {
  std::string check;
  double max_residual = 0.0;
  bool pass = false;
  int probes = 0;
};

inline constexpr double kLieTolerance = 1e-10;

/// max_{a,b,probe} |([Q^a,Q^b] - i sum_c f^{abc} Q^c) v| / |v|.
inline CheckReport check_lie_algebra(const GeneratorBasis& g, std::span<const FloatState> probes) {
  const int d = g.dimension();
  double worst = 0.0;
  for (const auto& v : probes) {
    const double vn = norm(v);
    if (vn == 0.0) throw Error(ErrorCode::ZeroState, "lie-algebra probe is the zero vector");
    std::vector<FloatState> qv;
    qv.reserve(static_cast<std::size_t>(d));
    for (int a = 1; a <= d; ++a) qv.push_back(apply_generator(a, v, g));
    for (int a = 1; a <= d; ++a) {
      for (int b = a + 1; b <= d; ++b) {
        FloatState r = apply_generator(a, qv[static_cast<std::size_t>(b - 1)], g) -
                       apply_generator(b, qv[static_cast<std::size_t>(a - 1)], g);
        for (int c = 1; c <= d; ++c) {
          const double f = static_cast<double>(g.structure_constant(a, b, c));
          if (f == 0.0) continue;
          r -= std::complex<double>(0.0, f) * qv[static_cast<std::size_t>(c - 1)];
        }
        worst = std::max(worst, norm(r) / vn);
      }
    }
  }
  return {"lie_algebra", worst, worst < kLieTolerance, static_cast<int>(probes.size())};
}

/// [Q^a, N_i] v = 0 for every a, i and probe; checked in exact arithmetic.
inline CheckReport check_casimir_commutation(const GeneratorBasis& g, std::span<const ExactState> probes) {
  double worst = 0.0;
  bool exact_zero = true;
  for (const auto& v : probes) {
    for (int a = 1; a <= g.dimension(); ++a) {
      for (int i = 1; i < g.rank(); ++i) {
        ExactState r = apply_generator(a, apply_number(i, v), g).state - apply_number(i, apply_generator(a, v, g).state);
        if (!r.empty()) {
          exact_zero = false;
          worst = std::max(worst, norm(r));
        }
      }
    }
  }
  return {"casimir_commutation", worst, exact_zero, static_cast<int>(probes.size())};
}

/// <u|Q^a v> = conj(<v|Q^a u>) for all probe pairs, exactly.
inline CheckReport check_hermiticity(const GeneratorBasis& g, std::span<const ExactState> probes) {
  double worst = 0.0;
  bool exact_zero = true;
  for (int a = 1; a <= g.dimension(); ++a) {
    std::vector<ExactState> images;
    for (const auto& v : probes) images.push_back(apply_generator(a, v, g).state);
    for (std::size_t p = 0; p < probes.size(); ++p) {
      for (std::size_t q = p; q < probes.size(); ++q) {
        const ComplexRational diff = inner(probes[p], images[q]) - conj(inner(probes[q], images[p]));
        if (!diff.is_zero()) {
          exact_zero = false;
          worst = std::max(worst, std::abs(to_complex(diff)));
        }
      }
    }
  }
  return {"hermiticity", worst, exact_zero, static_cast<int>(probes.size())};
}

/// max |f^{abd} f^{dce} + f^{bcd} f^{dae} + f^{cad} f^{dbe}|.
inline double jacobi_residual(const GeneratorBasis& g) {
  const int d = g.dimension();
  long double worst = 0.0L;
  for (int a = 1; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) {
      for (int c = b + 1; c <= d; ++c) {
        for (int e = 1; e <= d; ++e) {
          long double sum = 0.0L;
          for (int x = 1; x <= d; ++x) {
            sum += g.structure_constant(a, b, x) * g.structure_constant(x, c, e) +
                   g.structure_constant(b, c, x) * g.structure_constant(x, a, e) +
                   g.structure_constant(c, a, x) * g.structure_constant(x, b, e);
          }
          worst = std::max(worst, std::abs(sum));
        }
      }
    }
  }
  return static_cast<double>(worst);
}

/// Generator matrices on an orthonormalized invariant subspace of Fock space.
class MatrixRep {
 public:
  int rank() const { return n_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<FloatState>& basis() const { return basis_; }
  /// Q^a as a d x d matrix, a = 1..N^2-1.
  const Eigen::MatrixXcd& generator(int a) const { return q_.at(static_cast<std::size_t>(a - 1)); }
  int generator_count() const { return static_cast<int>(q_.size()); }
  /// Largest |Q^a e_c - P Q^a e_c| found while building the representation.
  double invariance_residual() const { return invariance_residual_; }

  Eigen::VectorXcd coordinates(const FloatState& psi) const {
    Eigen::VectorXcd c(dimension());
    for (int b = 0; b < dimension(); ++b) c(b) = inner(basis_[static_cast<std::size_t>(b)], psi);
    return c;
  }

  FloatState expand(const Eigen::VectorXcd& c) const {
    FloatState out(n_);
    for (int b = 0; b < dimension(); ++b) out += c(b) * basis_[static_cast<std::size_t>(b)];
    return out;
  }

  /// |psi - P psi| / |psi| for the orthogonal projector P onto the span.
  double projection_residual(const FloatState& psi) const {
    const double n = norm(psi);
    if (n == 0.0) return 0.0;
    return norm(psi - expand(coordinates(psi))) / n;
  }

  /// exp(i sum_a theta^a Q^a).
  Eigen::MatrixXcd group_element(std::span<const double> theta) const {
    if (static_cast<int>(theta.size()) != generator_count()) {
      throw Error(ErrorCode::ShapeMismatch, "theta must have N^2-1 entries");
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dimension(), dimension());
    for (int a = 1; a <= generator_count(); ++a) h += theta[static_cast<std::size_t>(a - 1)] * generator(a);
    return (std::complex<double>(0.0, 1.0) * h).exp();
  }

  /// sum_a Q^a Q^a.
  Eigen::MatrixXcd casimir() const {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dimension(), dimension());
    for (const auto& q : q_) c += q * q;
    return c;
  }

 private:
  friend MatrixRep matrix_rep(std::span<const ExactState>, const GeneratorBasis&);

  int n_ = 2;
  std::vector<FloatState> basis_;
  std::vector<Eigen::MatrixXcd> q_;
  double invariance_residual_ = 0.0;
};

inline constexpr double kDependenceThreshold = 1e-12;
inline constexpr double kInvarianceTolerance = 1e-10;

/// Orthonormalizes `states` (classical Gram-Schmidt, two passes) and computes the
/// generator matrices. Fails if the states are dependent or the span is not invariant.
inline MatrixRep matrix_rep(std::span<const ExactState> states, const GeneratorBasis& gens) {
  if (states.empty()) throw Error(ErrorCode::ShapeMismatch, "matrix_rep needs at least one state");
  MatrixRep rep;
  rep.n_ = gens.rank();
  for (const auto& s : states) {
    if (s.rank() != gens.rank()) throw Error(ErrorCode::RankMismatch, "basis state rank differs from N");
  }
  if (exact_rank(states) != states.size()) {
    throw Error(ErrorCode::DependentStates, "input states are linearly dependent");
  }
  for (const auto& s : states) {
    FloatState e = to_float(s);
    const double original = norm(e);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& prev : rep.basis_) e -= inner(prev, e) * prev;
    }
    const double remaining = norm(e);
    if (remaining < kDependenceThreshold * original) {
      throw Error(ErrorCode::DependentStates, "Gram-Schmidt residual below dependence threshold");
    }
    e *= std::complex<double>(1.0 / remaining);
    rep.basis_.push_back(std::move(e));
  }
  const int d = rep.dimension();
  for (int a = 1; a <= gens.dimension(); ++a) {
    Eigen::MatrixXcd q(d, d);
    for (int c = 0; c < d; ++c) {
      const FloatState image = apply_generator(a, rep.basis_[static_cast<std::size_t>(c)], gens);
      FloatState rest = image;
      for (int b = 0; b < d; ++b) {
        q(b, c) = inner(rep.basis_[static_cast<std::size_t>(b)], image);
        rest -= q(b, c) * rep.basis_[static_cast<std::size_t>(b)];
      }
      rep.invariance_residual_ = std::max(rep.invariance_residual_, norm(rest));
    }
    rep.q_.push_back(std::move(q));
  }
  if (rep.invariance_residual_ > kInvarianceTolerance) {
    throw Error(ErrorCode::NonInvariantSubspace,
                "projection residual " + std::to_string(rep.invariance_residual_) + " exceeds tolerance");
  }
  return rep;
}

}  // namespace sunisb
