#include <gtest/gtest.h>

#include <random>

#include "sunisb/isb.hpp"
#include "sunisb/liealg.hpp"
#include "oracles.hpp"

using namespace sunisb;

namespace {

using oracle::hook_content_dimension;
using oracle::su3_second_row_oracle;

ExactState a_dag(int N, std::initializer_list<ModeIndex> modes) {
  ExactState v = vacuum(N);
  for (auto m : modes) v = create(v, m);
  return v;
}

}  // namespace

TEST(IrrepLabel, ParsesAndPads) {
  const IrrepLabel l = IrrepLabel::parse(4, "2,1");
  EXPECT_EQ(l.rows(), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(l.boxes(), 3);
  EXPECT_EQ(IrrepLabel::parse(3, "1,1").row(2), 1);
}

TEST(IrrepLabel, RejectsBadLabels) {
  try {
    IrrepLabel(3, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidIrrep);
  }
  EXPECT_THROW(IrrepLabel(3, {-1}), Error);
  EXPECT_THROW(IrrepLabel(2, {1, 1}), Error);
  EXPECT_THROW(IrrepLabel::parse(3, "1,x"), Error);
  EXPECT_THROW(IrrepLabel::parse(1, "1"), Error);
}

TEST(FCoefficient, Examples) {
  const std::vector<int> a{1, 1}, b{2, 1, 0}, c{0, 0};
  EXPECT_EQ(f_coefficient(2, 1, a), Rational(-1, 2));
  EXPECT_EQ(f_coefficient(3, 1, b), Rational(-1, 5));
  EXPECT_EQ(f_coefficient(2, 1, c), Rational(-1, 2));
  EXPECT_THROW(f_coefficient(1, 1, a), Error);
}

TEST(IsbCreate, FirstRowIsBareCreation) {
  for (int N = 2; N <= 4; ++N) {
    for (const auto& irrep : irreps_up_to(N, 3)) {
      for (const auto& v : irrep_basis(irrep).states) {
        for (int alpha = 1; alpha <= N; ++alpha) EXPECT_EQ(isb_create(1, alpha, v), create(v, {1, alpha}));
      }
    }
  }
}

TEST(IsbCreate, SU3AntisymmetricExample) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const ExactState v = isb_create(2, b, a_dag(3, {{1, a}}));
      const ExactState expected = ComplexRational(Rational(1, 2)) * (a_dag(3, {{2, b}, {1, a}}) - a_dag(3, {{2, a}, {1, b}}));
      EXPECT_EQ(v, expected) << a << "," << b;
      EXPECT_EQ(v, su3_second_row_oracle(b, a_dag(3, {{1, a}})));
      EXPECT_EQ(v, ComplexRational(-1) * isb_create(2, a, a_dag(3, {{1, b}})));
      EXPECT_TRUE(apply_constraint(1, 2, v).empty());
    }
  }
}

TEST(IsbCreate, SU3AgreesWithOracleOnLargerStates) {
  for (const auto& irrep : irreps_up_to(3, 4)) {
    for (const auto& v : irrep_basis(irrep).states) {
      for (int a = 1; a <= 3; ++a) EXPECT_EQ(isb_create(2, a, v), su3_second_row_oracle(a, v)) << irrep.str();
    }
  }
}

TEST(IsbCreate, Errors) {
  EXPECT_THROW(isb_create(3, 1, vacuum(3)), Error);
  EXPECT_THROW(isb_create(1, 4, vacuum(3)), Error);
  const ExactState mixed = a_dag(3, {{1, 1}}) + a_dag(3, {{1, 1}, {1, 2}});
  try {
    isb_create(2, 1, mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedEigenvalue);
  }
  EXPECT_TRUE(isb_create(2, 1, ExactState(3)).empty());
}

TEST(MonomialState, Examples) {
  EXPECT_EQ(monomial_state(IrrepLabel(2, {2}), {{1, 1}}), a_dag(2, {{1, 1}, {1, 1}}));
  for (int a = 1; a <= 3; ++a) EXPECT_TRUE(monomial_state(IrrepLabel(3, {1, 1}), {{a}, {a}}).empty());
  const ExactState v = monomial_state(IrrepLabel(3, {2, 1}), {{1, 2}, {3}});
  EXPECT_FALSE(v.empty());
  EXPECT_EQ(plet_number(v, 1), 2);
  EXPECT_EQ(plet_number(v, 2), 1);
  EXPECT_TRUE(apply_constraint(1, 2, v).empty());
  EXPECT_THROW(monomial_state(IrrepLabel(3, {2, 1}), {{1}, {3}}), Error);
}

TEST(MonomialState, RandomColoringsSatisfyConstraints) {
  std::mt19937 rng(17);
  for (int N = 3; N <= 5; ++N) {
    std::uniform_int_distribution<int> color(1, N);
    for (const auto& irrep : irreps_up_to(N, 4)) {
      for (int trial = 0; trial < 3; ++trial) {
        ColorTableau t(static_cast<std::size_t>(N - 1));
        for (int i = 1; i < N; ++i) {
          for (int k = 0; k < irrep.row(i); ++k) t[static_cast<std::size_t>(i - 1)].push_back(color(rng));
        }
        const ExactState v = monomial_state(irrep, t);
        if (v.empty()) continue;
        for (int i = 1; i < N; ++i) {
          EXPECT_EQ(plet_number(v, i), irrep.row(i));
          for (int j = i + 1; j < N; ++j) EXPECT_TRUE(apply_constraint(i, j, v).empty()) << irrep.str();
        }
      }
    }
  }
}

TEST(MonomialState, RowExchangeSymmetry) {
  // A†[k] operators of one row commute on constrained states
  const IrrepLabel irrep(4, {2, 2, 1});
  EXPECT_EQ(monomial_state(irrep, {{1, 2}, {3, 4}, {2}}), monomial_state(irrep, {{2, 1}, {4, 3}, {2}}));
}

TEST(Weyl, Examples) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(weyl_dimension(IrrepLabel(2, {n})), static_cast<std::uint64_t>(n + 1));
  EXPECT_EQ(weyl_dimension(IrrepLabel(3, {1, 1})), 3u);
  EXPECT_EQ(weyl_dimension(IrrepLabel(3, {2, 2})), 6u);
  EXPECT_EQ(weyl_dimension(IrrepLabel(3, {2, 1})), 8u);
  EXPECT_EQ(weyl_dimension(IrrepLabel(5, {1, 0, 0, 0})), 5u);
  EXPECT_EQ(weyl_dimension(IrrepLabel(4, {1, 1, 1})), 4u);
}

TEST(Weyl, MatchesHookContentFormula) {
  for (int N = 2; N <= 6; ++N) {
    for (const auto& irrep : irreps_up_to(N, 6)) {
      EXPECT_EQ(weyl_dimension(irrep), hook_content_dimension(N, irrep.rows())) << N << " " << irrep.str();
    }
  }
}

TEST(QuadraticCasimir, KnownValues) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(quadratic_casimir(IrrepLabel(2, {n})), Rational(n * (n + 2), 4));
  EXPECT_EQ(quadratic_casimir(IrrepLabel(3, {1, 0})), Rational(4, 3));
  EXPECT_EQ(quadratic_casimir(IrrepLabel(3, {1, 1})), Rational(4, 3));
  EXPECT_EQ(quadratic_casimir(IrrepLabel(3, {2, 1})), Rational(3));
  EXPECT_EQ(quadratic_casimir(IrrepLabel(4, {2, 1, 1})), Rational(4));
  EXPECT_EQ(quadratic_casimir(IrrepLabel(4, {1, 0, 0})), Rational(15, 8));
}

TEST(IrrepBasis, Sizes) {
  EXPECT_EQ(irrep_basis(IrrepLabel(2, {3})).states.size(), 4u);
  EXPECT_EQ(irrep_basis(IrrepLabel(3, {1, 1})).states.size(), 3u);
  EXPECT_EQ(irrep_basis(IrrepLabel(3, {2, 1})).states.size(), 8u);
  EXPECT_EQ(irrep_basis(IrrepLabel(4, {1, 1, 1})).states.size(), 4u);
  EXPECT_EQ(irrep_basis(IrrepLabel(4, {0, 0, 0})).states.size(), 1u);
}

TEST(IrrepBasis, SweepMatchesWeylAndIsInvariant) {
  for (int N = 2; N <= 4; ++N) {
    const GeneratorBasis g(N);
    for (const auto& irrep : irreps_up_to(N, 4)) {
      const IrrepBasis b = irrep_basis(irrep);
      EXPECT_EQ(b.states.size(), weyl_dimension(irrep));
      EXPECT_EQ(exact_rank(b.states), b.states.size());
      EXPECT_NO_THROW(matrix_rep(b.states, g)) << irrep.str();
    }
  }
}

TEST(IrrepBasis, IrrepsUpTo) {
  EXPECT_EQ(irreps_up_to(2, 4).size(), 5u);
  // partitions of 0..3 with at most 2 parts
  EXPECT_EQ(irreps_up_to(3, 3).size(), 6u);
}
