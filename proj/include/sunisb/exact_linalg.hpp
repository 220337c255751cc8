#pragma once

// Exact rank extraction over Q(i) by fraction-free elimination. Rows are
// scaled to Gaussian integers, reduced with cross-multiplication, and divided
// by their integer content after every step so coefficients stay small.

#include <map>
#include <span>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "sunisb/fock.hpp"
#include "sunisb/rational.hpp"

namespace sunisb {

struct GaussianInteger {
  Integer re{0};
  Integer im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re - b.re, a.im - b.im};
  }
};

/// Incremental row echelon form. Rows are kept only when they enlarge the span,
/// so feeding vectors in order keeps the earliest maximal independent subset.
class ExactEchelon {
 public:
  /// Returns true and stores the row when it is independent of every stored row.
  bool insert(const std::map<std::size_t, ComplexRational>& sparse_row) {
    std::map<std::size_t, GaussianInteger> row = clear_denominators(sparse_row);
    for (const auto& pivot : rows_) {
      auto it = row.find(pivot.column);
      if (it == row.end()) continue;
      const GaussianInteger factor = it->second;
      std::map<std::size_t, GaussianInteger> next;
      for (const auto& [col, value] : row) {
        GaussianInteger scaled = pivot.value * value;
        if (!scaled.is_zero()) next[col] = scaled;
      }
      for (const auto& [col, value] : pivot.entries) {
        GaussianInteger updated = next[col] - factor * value;
        if (updated.is_zero()) {
          next.erase(col);
        } else {
          next[col] = updated;
        }
      }
      row = remove_content(std::move(next));
      if (row.empty()) return false;
    }
    if (row.empty()) return false;
    const auto first = row.begin();
    rows_.push_back({first->first, first->second, std::move(row)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct PivotRow {
    std::size_t column;
    GaussianInteger value;
    std::map<std::size_t, GaussianInteger> entries;
  };

  static std::map<std::size_t, GaussianInteger> clear_denominators(
      const std::map<std::size_t, ComplexRational>& in) {
    Integer lcm = 1;
    for (const auto& [col, z] : in) {
      lcm = boost::integer::lcm(lcm, Integer(denominator(z.re)));
      lcm = boost::integer::lcm(lcm, Integer(denominator(z.im)));
    }
    std::map<std::size_t, GaussianInteger> out;
    for (const auto& [col, z] : in) {
      if (z.is_zero()) continue;
      out[col] = {numerator(z.re) * (lcm / denominator(z.re)), numerator(z.im) * (lcm / denominator(z.im))};
    }
    return remove_content(std::move(out));
  }

  static std::map<std::size_t, GaussianInteger> remove_content(std::map<std::size_t, GaussianInteger> row) {
    Integer g = 0;
    for (const auto& [col, z] : row) {
      g = boost::integer::gcd(g, Integer(abs(z.re)));
      g = boost::integer::gcd(g, Integer(abs(z.im)));
      if (g == 1) return row;
    }
    if (g > 1) {
      for (auto& [col, z] : row) {
        z.re /= g;
        z.im /= g;
      }
    }
    return row;
  }

  std::vector<PivotRow> rows_;
};

/// Indexes every Fock configuration appearing in `states` as a matrix column.
inline std::map<FockState, std::size_t> column_index(std::span<const ExactState> states) {
  std::map<FockState, std::size_t> index;
  for (const auto& v : states) {
    for (const auto& term : v) index.try_emplace(term.first, 0);
  }
  std::size_t next = 0;
  for (auto& entry : index) entry.second = next++;
  return index;
}

/// Positions of the earliest maximal linearly independent subset of `states`.
inline std::vector<std::size_t> independent_subset(std::span<const ExactState> states) {
  const auto columns = column_index(states);
  ExactEchelon echelon;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::map<std::size_t, ComplexRational> row;
    for (const auto& [s, amp] : states[k]) row.emplace(columns.at(s), amp);
    if (echelon.insert(row)) kept.push_back(k);
  }
  return kept;
}

inline std::size_t exact_rank(std::span<const ExactState> states) {
  return independent_subset(states).size();
}

}  // namespace sunisb
