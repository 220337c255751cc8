#pragma once

// Irreducible Schwinger bosons
//
//   A†_alpha[k] = a†_alpha[k]
//       + sum over chains k > i_1 > ... > i_r >= 1 of
//         F^k_{i_1} ... F^k_{i_r} L_{k i_1} L_{i_1 i_2} ... L_{i_{r-1} i_r} a†_alpha[i_r]
//
// with F^k_i = -1 / (n_i - n_k + 1 + k - i). Within a term the ladder factors
// act right to left and the F factors are evaluated on the occupations of the
// state those factors produce. Monomials of A† on the vacuum satisfy every
// constraint L_ij (i < j) exactly and span the irrep labelled by the row lengths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "sunisb/error.hpp"
#include "sunisb/exact_linalg.hpp"
#include "sunisb/fock.hpp"
#include "sunisb/liealg.hpp"
#include "sunisb/rational.hpp"

namespace sunisb {

/// Young diagram [n_1 >= n_2 >= ... >= n_{N-1} >= 0] labelling an SU(N) irrep.
class IrrepLabel {
 public:
  IrrepLabel(int N, std::vector<int> rows) : n_(N), rows_(std::move(rows)) {
    if (N < 2) throw Error(ErrorCode::InvalidRank, "N must be >= 2, got " + std::to_string(N));
    if (static_cast<int>(rows_.size()) > N - 1) {
      throw Error(ErrorCode::InvalidIrrep, "SU(" + std::to_string(N) + ") irreps have at most " +
                                               std::to_string(N - 1) + " rows");
    }
    rows_.resize(static_cast<std::size_t>(N - 1), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] < 0) throw Error(ErrorCode::InvalidIrrep, "negative row length");
      if (i > 0 && rows_[i] > rows_[i - 1]) {
        throw Error(ErrorCode::InvalidIrrep, "row lengths must be non-increasing: " + str());
      }
    }
  }

  /// Comma-separated row lengths; trailing zero rows may be omitted.
  static IrrepLabel parse(int N, const std::string& text) {
    std::vector<int> rows;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        rows.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidIrrep, "cannot parse row length '" + item + "'");
      }
    }
    return IrrepLabel(N, std::move(rows));
  }

  int rank() const { return n_; }
  const std::vector<int>& rows() const { return rows_; }
  int row(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }
  int boxes() const {
    int total = 0;
    for (int r : rows_) total += r;
    return total;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
    return s + "]";
  }

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;

 private:
  int n_;
  std::vector<int> rows_;
};

/// F^k_i(n) = -1 / (n_i - n_k + 1 + k - i), 1 <= i < k <= N-1.
inline Rational f_coefficient(int k, int i, std::span<const int> occupations) {
  const int plets = static_cast<int>(occupations.size());
  if (i < 1 || k <= i || k > plets) {
    throw Error(ErrorCode::IndexOutOfRange,
                "F^k_i needs 1 <= i < k <= N-1, got k=" + std::to_string(k) + " i=" + std::to_string(i));
  }
  const int den = occupations[static_cast<std::size_t>(i - 1)] - occupations[static_cast<std::size_t>(k - 1)] + 1 + k - i;
  if (den == 0) throw Error(ErrorCode::SingularCoefficient, "F^k_i denominator vanishes");
  return Rational(-1, den);
}

namespace detail {

/// All descending chains k > i_1 > ... > i_r >= 1 with r >= 1.
inline std::vector<std::vector<int>> isb_chains(int k) {
  std::vector<std::vector<int>> chains;
  const int below = k - 1;
  for (std::uint32_t mask = 1; mask < (1u << below); ++mask) {
    std::vector<int> chain;
    for (int i = below; i >= 1; --i) {
      if (mask & (1u << (i - 1))) chain.push_back(i);
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

}  // namespace detail

/// A†_alpha[k] v. The input must be a simultaneous N_i eigenstate (or zero).
template <class Scalar>
StateVector<Scalar> isb_create(int k, int alpha, const StateVector<Scalar>& v) {
  const int N = v.rank();
  if (k < 1 || k > N - 1) throw Error(ErrorCode::IndexOutOfRange, "plet " + std::to_string(k));
  if (alpha < 1 || alpha > N) throw Error(ErrorCode::IndexOutOfRange, "color " + std::to_string(alpha));
  if (v.empty()) return v;
  sector(v);  // throws MixedEigenvalue

  StateVector<Scalar> result = create(v, {k, alpha});
  for (const auto& chain : detail::isb_chains(k)) {
    StateVector<Scalar> w = create(v, {chain.back(), alpha});
    for (std::size_t t = chain.size(); t-- > 0;) {
      const int upper = t == 0 ? k : chain[t - 1];
      w = apply_hopping(upper, chain[t], w);
      if (w.empty()) break;
    }
    if (w.empty()) continue;
    const std::vector<int> n = w.begin()->first.plet_totals();
    Rational coeff = 1;
    for (int i : chain) coeff *= f_coefficient(k, i, n);
    w *= scalar_from_rational<Scalar>(coeff);
    result += w;
  }
  return result;
}

/// colors[i-1] lists the colors alpha^{[i]}_1..alpha^{[i]}_{n_i} of row i.
using ColorTableau = std::vector<std::vector<int>>;

inline void check_tableau_shape(const IrrepLabel& irrep, const ColorTableau& colors) {
  if (static_cast<int>(colors.size()) != irrep.rank() - 1) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(irrep.rank() - 1) + " color rows");
  }
  for (int i = 1; i < irrep.rank(); ++i) {
    const auto& row = colors[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != irrep.row(i)) {
      throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i) + " needs " + std::to_string(irrep.row(i)) +
                                                " colors, got " + std::to_string(row.size()));
    }
    for (int c : row) {
      if (c < 1 || c > irrep.rank()) throw Error(ErrorCode::ShapeMismatch, "color out of range");
    }
  }
}

/// (A†[N-1] ...)(...)(A†[1] ...)|0>, built right to left: row 1 first.
template <class Scalar = ComplexRational>
StateVector<Scalar> monomial_state(const IrrepLabel& irrep, const ColorTableau& colors) {
  check_tableau_shape(irrep, colors);
  StateVector<Scalar> v = vacuum<Scalar>(irrep.rank());
  for (int k = 1; k < irrep.rank(); ++k) {
    const auto& row = colors[static_cast<std::size_t>(k - 1)];
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      v = isb_create(k, *it, v);
      if (v.empty()) return v;
    }
  }
  return v;
}

/// prod_{1<=r<s<=N} (l_r - l_s + s - r) / (s - r) with l = (n_1..n_{N-1}, 0).
inline std::uint64_t weyl_dimension(const IrrepLabel& irrep) {
  std::vector<int> l = irrep.rows();
  l.push_back(0);
  Rational dim = 1;
  const int N = irrep.rank();
  for (int r = 0; r < N; ++r) {
    for (int s = r + 1; s < N; ++s) {
      dim *= Rational(l[static_cast<std::size_t>(r)] - l[static_cast<std::size_t>(s)] + s - r, s - r);
    }
  }
  return static_cast<std::uint64_t>(numerator(dim));
}

/// Eigenvalue of sum_a Q^a Q^a on the irrep (generators normalized Tr(T^a T^b) = delta/2).
inline Rational quadratic_casimir(const IrrepLabel& irrep) {
  const int N = irrep.rank();
  Rational sum = 0;
  int boxes = 0;
  for (int i = 1; i < N; ++i) {
    const int l = irrep.row(i);
    sum += l * (l + N + 1 - 2 * i);
    boxes += l;
  }
  return (sum - Rational(boxes * boxes, N)) / 2;
}

/// Every tableau with non-decreasing colors in each row, in lexicographic order
/// (row 1 most significant).
inline std::vector<ColorTableau> row_colorings(const IrrepLabel& irrep) {
  const int N = irrep.rank();
  std::vector<std::vector<std::vector<int>>> per_row;
  for (int i = 1; i < N; ++i) {
    std::vector<std::vector<int>> options;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int lowest) {
      if (static_cast<int>(current.size()) == irrep.row(i)) {
        options.push_back(current);
        return;
      }
      for (int c = lowest; c <= N; ++c) {
        current.push_back(c);
        rec(c);
        current.pop_back();
      }
    };
    rec(1);
    per_row.push_back(std::move(options));
  }
  std::vector<ColorTableau> out;
  ColorTableau tableau(per_row.size());
  std::function<void(std::size_t)> combine = [&](std::size_t row) {
    if (row == per_row.size()) {
      out.push_back(tableau);
      return;
    }
    for (const auto& option : per_row[row]) {
      tableau[row] = option;
      combine(row + 1);
    }
  };
  combine(0);
  return out;
}

struct IrrepBasis {
  IrrepLabel irrep;
  std::vector<ExactState> states;
  std::vector<ColorTableau> colors;  ///< colors[b] generated states[b]
};

/// Independent ISB monomials spanning the irrep; the count is checked against
/// the Weyl dimension.
inline IrrepBasis irrep_basis(const IrrepLabel& irrep) {
  std::vector<ExactState> candidates;
  std::vector<ColorTableau> candidate_colors;
  for (auto& tableau : row_colorings(irrep)) {
    ExactState v = monomial_state(irrep, tableau);
    if (v.empty()) continue;
    candidates.push_back(std::move(v));
    candidate_colors.push_back(std::move(tableau));
  }
  IrrepBasis basis{irrep, {}, {}};
  for (std::size_t k : independent_subset(candidates)) {
    basis.states.push_back(std::move(candidates[k]));
    basis.colors.push_back(std::move(candidate_colors[k]));
  }
  const std::uint64_t weyl = weyl_dimension(irrep);
  if (basis.states.size() != weyl) {
    throw Error(ErrorCode::ConstructionFailure, "irrep " + irrep.str() + " produced " +
                                                    std::to_string(basis.states.size()) +
                                                    " independent states, Weyl dimension is " + std::to_string(weyl));
  }
  return basis;
}

/// Every irrep of SU(N) with at most `max_boxes` boxes, ordered by box count then
/// reverse-lexicographically within a count.
inline std::vector<IrrepLabel> irreps_up_to(int N, int max_boxes) {
  std::vector<IrrepLabel> out;
  std::vector<int> rows;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (static_cast<int>(rows.size()) == N - 1) {
      if (remaining == 0) out.emplace_back(N, rows);
      return;
    }
    for (int r = std::min(remaining, cap); r >= 0; --r) {
      rows.push_back(r);
      rec(remaining - r, r);
      rows.pop_back();
    }
  };
  for (int boxes = 0; boxes <= max_boxes; ++boxes) rec(boxes, boxes);
  return out;
}

}  // namespace sunisb
