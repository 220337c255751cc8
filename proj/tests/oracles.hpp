#pragma once

// Reference computations that share no code with the library beyond the
// bosonic ladder operators.

#include <cstdint>
#include <vector>

#include "sunisb/fock.hpp"

namespace oracle {

using namespace sunisb;

/// Hook-content formula: dim = prod over cells of (N + col - row) / hook.
inline std::uint64_t hook_content_dimension(int N, const std::vector<int>& rows) {
  std::vector<int> lambda;
  for (int r : rows) {
    if (r > 0) lambda.push_back(r);
  }
  Rational dim = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      int below = 0;
      for (std::size_t s = r + 1; s < lambda.size() && lambda[s] > c; ++s) ++below;
      const int hook = (lambda[r] - c - 1) + below + 1;
      dim *= Rational(N + c - static_cast<int>(r), hook);
    }
  }
  return static_cast<std::uint64_t>(numerator(dim));
}

/// L_21 = sum_beta a†_beta[2] a_beta[1], from the ladder primitives only.
inline ExactState lower_21(const ExactState& v) {
  ExactState out(v.rank());
  for (int beta = 1; beta <= v.rank(); ++beta) out += create(annihilate(v, {1, beta}), {2, beta});
  return out;
}

/// SU(3): A†_a[2] v = a†_a[2] v - (n_1 - n_2 + 2)^{-1} L_21 a†_a[1] v with the
/// occupations read off the state L_21 a†_a[1] v.
inline ExactState su3_second_row_oracle(int a, const ExactState& v) {
  ExactState out = create(v, {2, a});
  ExactState t = lower_21(create(v, {1, a}));
  if (t.empty()) return out;
  const FockState& s = t.begin()->first;
  const int n1 = s.plet_total(1), n2 = s.plet_total(2);
  t *= ComplexRational(Rational(-1, n1 - n2 + 2));
  return out + t;
}

}  // namespace oracle
