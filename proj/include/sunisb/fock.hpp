#pragma once

// Sparse Fock-space arithmetic over N-1 Schwinger boson N-plets.
//
// Amplitudes use the monomial convention: a†|n> = |n+1>, a|n> = n|n-1>,
// <n|n'> = delta(n,n') * prod_m n_m!. Every ket built from creation operators
// on the vacuum therefore has integer (or, with ISB coefficients, rational)
// amplitudes and all algebraic identities can be checked exactly.

#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sunisb/error.hpp"
#include "sunisb/rational.hpp"

namespace sunisb {

/// One bosonic mode a†_color[plet]; both indices are 1-based.
struct ModeIndex {
  int plet = 1;
  int color = 1;

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

inline void check_rank(int N) {
  if (N < 2) throw Error(ErrorCode::InvalidRank, "N must be >= 2, got " + std::to_string(N));
}

inline void check_mode(int N, ModeIndex m) {
  if (m.plet < 1 || m.plet > N - 1 || m.color < 1 || m.color > N) {
    throw Error(ErrorCode::InvalidMode, "mode (" + std::to_string(m.plet) + "," +
                                            std::to_string(m.color) + ") invalid for N=" +
                                            std::to_string(N));
  }
}

/// Occupation-number configuration of the N(N-1) modes. Storage is a dense
/// vector indexed by (plet-1)*N + (color-1), which is the canonical key.
class FockState {
 public:
  explicit FockState(int N) : n_(N), occ_(static_cast<std::size_t>(N * (N - 1)), 0) { check_rank(N); }

  int rank() const { return n_; }

  int occupation(ModeIndex m) const { return occ_[slot(m)]; }

  void set_occupation(ModeIndex m, int count) {
    if (count < 0) throw Error(ErrorCode::InvalidMode, "negative occupation");
    occ_[slot(m)] = static_cast<std::uint16_t>(count);
  }

  int plet_total(int plet) const {
    int total = 0;
    for (int color = 1; color <= n_; ++color) total += occupation({plet, color});
    return total;
  }

  /// (n_1, ..., n_{N-1}).
  std::vector<int> plet_totals() const {
    std::vector<int> totals(static_cast<std::size_t>(n_ - 1));
    for (int i = 1; i < n_; ++i) totals[static_cast<std::size_t>(i - 1)] = plet_total(i);
    return totals;
  }

  int total_quanta() const {
    int total = 0;
    for (auto n : occ_) total += n;
    return total;
  }

  /// Prod_m n_m!, the squared norm of this configuration.
  Integer norm_squared() const {
    Integer result = 1;
    for (auto n : occ_) {
      for (int k = 2; k <= n; ++k) result *= k;
    }
    return result;
  }

  double norm_squared_double() const {
    double result = 1.0;
    for (auto n : occ_) {
      for (int k = 2; k <= n; ++k) result *= k;
    }
    return result;
  }

  const std::vector<std::uint16_t>& occupations() const { return occ_; }

  friend bool operator==(const FockState&, const FockState&) = default;
  friend auto operator<=>(const FockState& a, const FockState& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.occ_ <=> b.occ_;
  }

 private:
  std::size_t slot(ModeIndex m) const {
    check_mode(n_, m);
    return static_cast<std::size_t>((m.plet - 1) * n_ + (m.color - 1));
  }

  int n_;
  std::vector<std::uint16_t> occ_;
};

/// Sparse superposition of Fock configurations. Zero amplitudes are never stored.
template <class Scalar>
class StateVector {
 public:
  using scalar_type = Scalar;
  using map_type = std::map<FockState, Scalar>;

  explicit StateVector(int N) : n_(N) { check_rank(N); }

  int rank() const { return n_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar amplitude(const FockState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  void add_term(const FockState& s, const Scalar& amp) {
    if (s.rank() != n_) throw Error(ErrorCode::RankMismatch, "FockState rank differs from vector rank");
    if (is_zero(amp)) return;
    auto [it, inserted] = terms_.try_emplace(s, amp);
    if (!inserted) {
      it->second += amp;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  StateVector& operator+=(const StateVector& o) {
    require_same_rank(o);
    for (const auto& [s, amp] : o.terms_) add_term(s, amp);
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    require_same_rank(o);
    for (const auto& [s, amp] : o.terms_) add_term(s, -amp);
    return *this;
  }
  StateVector& operator*=(const Scalar& c) {
    if (is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, amp] : terms_) amp *= c;
    return *this;
  }

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(const Scalar& c, StateVector v) { return v *= c; }
  friend StateVector operator*(StateVector v, const Scalar& c) { return v *= c; }
  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void require_same_rank(const StateVector& o) const {
    if (o.n_ != n_) {
      throw Error(ErrorCode::RankMismatch,
                  "state vectors of rank " + std::to_string(n_) + " and " + std::to_string(o.n_));
    }
  }

 private:
  int n_;
  map_type terms_;
};

using ExactState = StateVector<ComplexRational>;
using FloatState = StateVector<std::complex<double>>;

template <class Scalar = ComplexRational>
StateVector<Scalar> vacuum(int N) {
  StateVector<Scalar> v(N);
  v.add_term(FockState(N), Scalar(1));
  return v;
}

template <class Scalar>
StateVector<Scalar> create(const StateVector<Scalar>& v, ModeIndex m) {
  check_mode(v.rank(), m);
  StateVector<Scalar> out(v.rank());
  for (const auto& [s, amp] : v) {
    FockState t = s;
    t.set_occupation(m, s.occupation(m) + 1);
    out.add_term(t, amp);
  }
  return out;
}

template <class Scalar>
StateVector<Scalar> annihilate(const StateVector<Scalar>& v, ModeIndex m) {
  check_mode(v.rank(), m);
  StateVector<Scalar> out(v.rank());
  for (const auto& [s, amp] : v) {
    const int n = s.occupation(m);
    if (n == 0) continue;
    FockState t = s;
    t.set_occupation(m, n - 1);
    out.add_term(t, amp * Scalar(n));
  }
  return out;
}

/// <u|v>, antilinear in u.
template <class Scalar>
Scalar inner(const StateVector<Scalar>& u, const StateVector<Scalar>& v) {
  u.require_same_rank(v);
  Scalar result{};
  const auto& small = u.size() <= v.size() ? u : v;
  const auto& large = u.size() <= v.size() ? v : u;
  for (const auto& [s, amp] : small) {
    auto it = large.terms().find(s);
    if (it == large.terms().end()) continue;
    const Scalar& ua = (&small == &u) ? amp : it->second;
    const Scalar& va = (&small == &u) ? it->second : amp;
    if constexpr (std::is_same_v<Scalar, ComplexRational>) {
      result += conj(ua) * va * ComplexRational(Rational(s.norm_squared()));
    } else {
      result += conj(ua) * va * s.norm_squared_double();
    }
  }
  return result;
}

/// Fock norm; for exact vectors the square root is taken in double precision.
template <class Scalar>
double norm(const StateVector<Scalar>& v) {
  double sum = 0.0;
  for (const auto& [s, amp] : v) sum += std::norm(to_complex(amp)) * s.norm_squared_double();
  return std::sqrt(sum);
}

/// Returns n_i when every term carries the same plet-i total.
template <class Scalar>
int plet_number(const StateVector<Scalar>& v, int plet) {
  if (plet < 1 || plet > v.rank() - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "plet " + std::to_string(plet));
  }
  if (v.empty()) throw Error(ErrorCode::ZeroState, "plet_number of the zero vector");
  std::optional<int> value;
  for (const auto& [s, amp] : v) {
    const int n = s.plet_total(plet);
    if (value && *value != n) {
      throw Error(ErrorCode::MixedEigenvalue, "state mixes plet-" + std::to_string(plet) + " sectors");
    }
    value = n;
  }
  return *value;
}

/// (n_1..n_{N-1}) of a simultaneous eigenstate of all plet number operators.
template <class Scalar>
std::vector<int> sector(const StateVector<Scalar>& v) {
  std::vector<int> totals;
  for (int i = 1; i < v.rank(); ++i) totals.push_back(plet_number(v, i));
  return totals;
}

inline FloatState to_float(const ExactState& v) {
  FloatState out(v.rank());
  for (const auto& [s, amp] : v) out.add_term(s, to_complex(amp));
  return out;
}

}  // namespace sunisb
