#include "scp/rgbf.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "gtest/gtest.h"

namespace scp {
namespace {

std::vector<Exponent> exponents(std::initializer_list<int> values) {
  std::vector<Exponent> out;
  for (int v : values) {
    if (v < 0) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(static_cast<std::uint32_t>(v));
    }
  }
  return out;
}

GeneralizedBooleanFunction random_function(std::mt19937_64& rng, int q, int m) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<int> coefficient(0, 3 * q);
  std::uniform_int_distribution<int> var(1, m);
  std::uniform_int_distribution<int> degree(0, 3);
  std::vector<Monomial> terms;
  for (int k = count(rng); k > 0; --k) {
    Monomial term{coefficient(rng), {}};
    for (int j = degree(rng); j > 0; --j) term.vars.push_back(var(rng));
    terms.push_back(std::move(term));
  }
  return {q, m, std::move(terms)};
}

Restriction random_restriction(std::mt19937_64& rng, int m) {
  std::vector<int> vars(static_cast<std::size_t>(m));
  std::iota(vars.begin(), vars.end(), 1);
  std::shuffle(vars.begin(), vars.end(), rng);
  const int t = std::uniform_int_distribution<int>(0, m - 1)(rng);
  Restriction r;
  for (int a = 0; a < t; ++a) {
    r.indices.push_back(vars[a]);
    r.values.push_back(static_cast<std::uint8_t>(rng() & 1u));
  }
  return r;
}

TEST(GeneralizedBooleanFunctionTest, ThreeVariableTruthTable) {
  const auto f = fixtures::quaternary3_function();
  std::vector<int> table;
  for (std::uint64_t i = 0; i < 8; ++i) table.push_back(f.evaluate(i));
  EXPECT_EQ(table, (std::vector<int>{0, 1, 0, 1, 0, 1, 2, 3}));
}

TEST(GeneralizedBooleanFunctionTest, AllOnesAssignment) {
  const auto f = fixtures::quaternary3_function();
  const std::uint8_t ones[] = {1, 1, 1};
  EXPECT_EQ(f.evaluate(ones), 3);
}

TEST(GeneralizedBooleanFunctionTest, AssignmentFollowsLittleEndianIndex) {
  const auto f = fixtures::quaternary3_function();
  for (std::uint64_t i = 0; i < 8; ++i) {
    const std::uint8_t bits[] = {static_cast<std::uint8_t>(i & 1), static_cast<std::uint8_t>((i >> 1) & 1),
                                 static_cast<std::uint8_t>((i >> 2) & 1)};
    EXPECT_EQ(f.evaluate(bits), f.evaluate(i)) << "index " << i;
  }
}

TEST(GeneralizedBooleanFunctionTest, ConstantFunction) {
  const GeneralizedBooleanFunction g(4, 3, {{3, {}}});
  for (std::uint64_t i = 0; i < 8; ++i) EXPECT_EQ(g.evaluate(i), 3);
}

TEST(GeneralizedBooleanFunctionTest, CoefficientsReducedModQ) {
  const GeneralizedBooleanFunction f(4, 2, {{7, {1}}, {-1, {}}});
  EXPECT_EQ(f.terms()[0].coefficient, 3);
  EXPECT_EQ(f.terms()[1].coefficient, 3);
  EXPECT_EQ(f.evaluate(1), 2);
}

TEST(GeneralizedBooleanFunctionTest, RejectsOddAlphabet) {
  EXPECT_THROW(GeneralizedBooleanFunction(3, 2), ParameterError);
  EXPECT_THROW(GeneralizedBooleanFunction(0, 2), ParameterError);
}

TEST(GeneralizedBooleanFunctionTest, RejectsOutOfRangeVariable) {
  EXPECT_THROW(GeneralizedBooleanFunction(4, 3, {{1, {4}}}), ParameterError);
  EXPECT_THROW(GeneralizedBooleanFunction(4, 3, {{1, {0}}}), ParameterError);
}

TEST(GeneralizedBooleanFunctionTest, RejectsWrongAssignmentWidth) {
  const auto f = fixtures::quaternary3_function();
  const std::uint8_t two[] = {1, 0};
  EXPECT_THROW(f.evaluate(two), ParameterError);
}

TEST(GeneralizedBooleanFunctionTest, EvaluationIsLinearOverTermConcatenation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int q = 2 * std::uniform_int_distribution<int>(1, 4)(rng);
    const int m = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto f = random_function(rng, q, m);
    const auto g = random_function(rng, q, m);
    const auto sum = f.plus(g);
    for (std::uint64_t i = 0; i < (1u << m); ++i) {
      ASSERT_EQ(sum.evaluate(i), (f.evaluate(i) + g.evaluate(i)) % q);
    }
  }
}

TEST(SequenceTest, FullSequenceOfThreeVariableFunction) {
  const auto s = to_full_sequence(fixtures::quaternary3_function());
  EXPECT_EQ(s.entries(), exponents({0, 1, 0, 1, 0, 1, 2, 3}));
  EXPECT_EQ(s.zero_count(), 0u);
}

TEST(SequenceTest, FullSequenceSmallCases) {
  EXPECT_EQ(to_full_sequence(GeneralizedBooleanFunction(2, 1)).entries(), exponents({0, 0}));
  EXPECT_EQ(to_full_sequence(GeneralizedBooleanFunction(2, 2, {{1, {1}}})).entries(),
            exponents({0, 1, 0, 1}));
}

TEST(SequenceTest, SingleVariableRestriction) {
  const Restriction r{{2}, {0}};
  const auto s = restrict_function(fixtures::quaternary3_function(), r);
  EXPECT_EQ(s.entries(), exponents({0, 1, -1, -1, 0, 1, -1, -1}));

  const auto bounds = truncation_bounds(r, 3);
  EXPECT_EQ(bounds.first, 0u);
  EXPECT_EQ(bounds.last, 5u);

  const auto truncated = truncate(s, bounds);
  EXPECT_EQ(truncated.entries(), exponents({0, 1, -1, -1, 0, 1}));
  EXPECT_EQ(truncated.sparsity(), (Sparsity{2, 6}));
  EXPECT_TRUE(truncated.sparsity().equivalent({1, 3}));
}

TEST(SequenceTest, EmptyRestrictionMatchesFullSequence) {
  const auto f = fixtures::quaternary3_function();
  EXPECT_EQ(restrict_function(f, {}), to_full_sequence(f));
  const auto bounds = truncation_bounds({}, 3);
  EXPECT_EQ(bounds.first, 0u);
  EXPECT_EQ(bounds.last, 7u);
  EXPECT_EQ(truncate(to_full_sequence(f), bounds), to_full_sequence(f));
}

TEST(SequenceTest, RestrictingEveryVariableIsRejected) {
  // t must stay below m.
  const auto f = fixtures::quaternary3_function();
  EXPECT_THROW(restrict_function(f, Restriction{{1, 2, 3}, {0, 0, 0}}), ParameterError);
  const GeneralizedBooleanFunction g(4, 4, {{1, {4}}});
  const auto s = restrict_function(g, Restriction{{1, 2, 3}, {0, 0, 0}});
  EXPECT_EQ(s.nonzero_count(), 2u);
  EXPECT_TRUE(s[0].has_value());
  EXPECT_TRUE(s[8].has_value());
}

TEST(SequenceTest, SingleFreeVariableOfSmallerFunction) {
  // m = 4, t = 3 leaves exactly 2^(m-t) = 2 non-zero entries.
  const GeneralizedBooleanFunction g(2, 4);
  const auto s = restrict_function(g, Restriction{{2, 3, 4}, {0, 0, 0}});
  EXPECT_EQ(s.nonzero_count(), 2u);
  const auto t = truncate(s, truncation_bounds(Restriction{{2, 3, 4}, {0, 0, 0}}, 4));
  EXPECT_EQ(t.length(), 2u);
}

TEST(SequenceTest, Length27TruncationBoundsMatchScan) {
  // Frozen from scanning the restricted sequence for its first/last non-zero entry.
  const Restriction r{{1, 3}, {0, 0}};
  const GeneralizedBooleanFunction f(4, 5, {{2, {2, 4}}, {2, {4, 5}}, {3, {2}}});
  const auto s = restrict_function(f, r);
  std::size_t first = s.length(), last = 0;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (s[i]) {
      first = std::min(first, i);
      last = i;
    }
  }
  EXPECT_EQ(first, 0u);
  EXPECT_EQ(last, 26u);
  const auto bounds = truncation_bounds(r, 5);
  EXPECT_EQ(bounds.first, 0u);
  EXPECT_EQ(bounds.last, 26u);
  EXPECT_EQ(bounds.length(), 27u);
}

TEST(SequenceTest, TruncateRejectsZeroBoundary) {
  const auto s = restrict_function(fixtures::quaternary3_function(), Restriction{{2}, {0}});
  EXPECT_THROW(truncate(s, {0, 6}), ParameterError);
  EXPECT_THROW(truncate(s, {2, 5}), ParameterError);
  EXPECT_THROW(truncate(s, {0, 8}), ParameterError);
}

TEST(SequenceTest, RestrictionValidation) {
  EXPECT_THROW(Restriction({{1, 1}, {0, 0}}).validate(3), ParameterError);
  EXPECT_THROW(Restriction({{1}, {0, 1}}).validate(3), ParameterError);
  EXPECT_THROW(Restriction({{4}, {0}}).validate(3), ParameterError);
  EXPECT_THROW(Restriction({{1}, {2}}).validate(3), ParameterError);
  EXPECT_NO_THROW(Restriction({{3, 1}, {1, 0}}).validate(3));
}

TEST(SequenceTest, RejectsExponentOutsideAlphabet) {
  EXPECT_THROW(SparseSequence(4, exponents({0, 4})), ParameterError);
  EXPECT_THROW(SparseSequence(4, {}), ParameterError);
}

TEST(SequenceTest, ParseExponents) {
  EXPECT_EQ(parse_exponents(4, "0 . 3").entries(), exponents({0, -1, 3}));
  EXPECT_THROW(parse_exponents(4, "0 x 3"), ParameterError);
}

// Restriction keeps 2^(m-t) entries; the truncation bounds are the actual
// first/last non-zero indices; truncation never leaves a zero boundary.
TEST(SequenceProperty, RestrictedSupportAndBounds) {
  std::mt19937_64 rng(2024);
  for (int m = 1; m <= 10; ++m) {
    for (int trial = 0; trial < 40; ++trial) {
      const int q = 2 * std::uniform_int_distribution<int>(1, 4)(rng);
      const auto f = random_function(rng, q, m);
      const auto r = random_restriction(rng, m);
      const auto s = restrict_function(f, r);
      ASSERT_EQ(s.length(), std::size_t{1} << m);
      ASSERT_EQ(s.nonzero_count(), std::size_t{1} << (m - r.t()));

      std::size_t first = s.length(), last = 0;
      for (std::size_t i = 0; i < s.length(); ++i) {
        if (s[i]) {
          first = std::min(first, i);
          last = i;
        }
      }
      const auto bounds = truncation_bounds(r, m);
      ASSERT_EQ(bounds.first, first);
      ASSERT_EQ(bounds.last, last);

      const auto truncated = truncate(s, bounds);
      ASSERT_TRUE(truncated.has_nonzero_boundary());
      ASSERT_EQ(truncated.nonzero_count(), std::size_t{1} << (m - r.t()));
    }
  }
}

}  // namespace
}  // namespace scp
