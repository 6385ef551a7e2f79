#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace enriques;
using namespace enriques::testing;

namespace {

// Isomorphism of decomposition types by trying every bijection of terms.
bool isomorphic(const DecompositionType& a, const DecompositionType& b) {
  if (a.eps != b.eps || a.terms.size() != b.terms.size()) return false;
  auto ma = pairing_matrix(a), mb = pairing_matrix(b);
  std::vector<std::size_t> p(a.terms.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < p.size(); ++i) {
      ok = a.terms[i].coeff == b.terms[p[i]].coeff;
      for (std::size_t j = 0; ok && j < p.size(); ++j) ok = ma[i][j] == mb[p[i]][p[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

DecompositionType random_type(std::mt19937& rng) {
  while (true) {
    DecompositionType d;
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int k = 0; k < n; ++k) {
      Symbol s;
      s.i = std::uniform_int_distribution<int>(1, 6)(rng);
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        s.j = std::uniform_int_distribution<int>(1, 6)(rng);
        if (s.j == s.i) continue;
        if (s.j < s.i) std::swap(s.i, s.j);
      }
      bool dup = false;
      for (const auto& t : d.terms) dup = dup || t.symbol == s;
      if (!dup) d.terms.push_back({std::uniform_int_distribution<int>(1, 3)(rng), s});
    }
    d.eps = std::uniform_int_distribution<int>(0, 1)(rng);
    if (!d.terms.empty() && validate_simple(d).valid) return d;
  }
}

DecompositionType relabel(DecompositionType d, std::mt19937& rng) {
  std::vector<int> perm(11);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  for (auto& t : d.terms) {
    t.symbol.i = perm[t.symbol.i];
    if (t.symbol.j) {
      t.symbol.j = perm[t.symbol.j];
      if (t.symbol.j < t.symbol.i) std::swap(t.symbol.i, t.symbol.j);
    }
  }
  std::shuffle(d.terms.begin(), d.terms.end(), rng);
  return d;
}

}  // namespace

TEST(Decomposition, Parse) {
  auto d = parse_decomposition("2E1+2E2+E3");
  ASSERT_EQ(d.terms.size(), 3u);
  EXPECT_EQ(d.terms[0].coeff, 2);
  EXPECT_EQ(d.terms[1].symbol, (Symbol{2, 0}));
  EXPECT_EQ(d.terms[2].coeff, 1);
  EXPECT_EQ(d.eps, 0);
  EXPECT_EQ(parse_decomposition("4E1+4E2+K").eps, 1);
  auto p = parse_decomposition("E1+E{1,2}");
  EXPECT_EQ(p.terms[1].symbol, (Symbol{1, 2}));
  EXPECT_EQ(parse_decomposition("E1 + E2,1"), parse_decomposition("E1+E{1,2}"));
}

TEST(Decomposition, ParseErrors) {
  EXPECT_THROW(parse_decomposition(""), ParseError);
  EXPECT_THROW(parse_decomposition("2(E1+E{1,2})"), ParseError);
  EXPECT_THROW(parse_decomposition("E1+E1"), ParseError);
  EXPECT_THROW(parse_decomposition("0E1"), ParseError);
  EXPECT_THROW(parse_decomposition("E11"), ParseError);
  EXPECT_THROW(parse_decomposition("E{1,1}"), ParseError);
  EXPECT_THROW(parse_decomposition("K+E1"), ParseError);
  EXPECT_THROW(parse_decomposition("E1-E2"), ParseError);
  try {
    parse_decomposition("E1+E2+F3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Decomposition, RoundTrip) {
  std::mt19937 rng(19);
  for (int t = 0; t < 200; ++t) {
    DecompositionType d = random_type(rng);
    EXPECT_EQ(parse_decomposition(to_string(d)), d);
  }
}

TEST(Decomposition, Realize) {
  EXPECT_EQ(square(of("E1+E2+E{1,2}")), 10);
  EXPECT_EQ(square(of("2E1+2E{1,2}")), 16);
  EXPECT_EQ(square(of("E1")), 0);
  EXPECT_EQ(of("E1+K").eps, 1);
}

TEST(Decomposition, Validation) {
  auto a = validate_simple(parse_decomposition("E1+E2+E3+E4"));
  EXPECT_TRUE(a.valid);
  EXPECT_EQ(a.shape, 1);
  auto b = validate_simple(parse_decomposition("2E1+E{1,2}"));
  EXPECT_TRUE(b.valid);
  EXPECT_EQ(b.shape, 2);
  auto c = validate_simple(parse_decomposition("E1+E{1,2}+E{1,3}"));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.shape, 3);
  EXPECT_FALSE(validate_simple(parse_decomposition("E1+E2+E3+E4+E5+E6+E7+E8+E9")).valid);
  EXPECT_TRUE(validate_simple(parse_decomposition("E1+E2+E3+E4+E5+E6+E7+E8+E9+E10")).valid);
  EXPECT_FALSE(validate_simple(parse_decomposition("E1+E2+E{1,2}+E{3,4}+E{5,6}")).valid);
  EXPECT_EQ(validate_simple(parse_decomposition("E{1,2}+E{3,4}")).shape, 2);
}

TEST(Decomposition, CanonicalTypeExamples) {
  EXPECT_TRUE(same_type(parse_decomposition("2E1+E2+E3"), parse_decomposition("2E3+E1+E2")));
  EXPECT_FALSE(same_type(parse_decomposition("3E1+E{1,2}"), parse_decomposition("3E1+2E2")));
  EXPECT_FALSE(same_type(parse_decomposition("4E1+2E2"), parse_decomposition("4E1+2E2+K")));
}

TEST(Decomposition, CanonicalTypeMatchesPermutationOracle) {
  std::mt19937 rng(23);
  for (int t = 0; t < 300; ++t) {
    DecompositionType a = random_type(rng);
    DecompositionType b = relabel(a, rng);
    ASSERT_TRUE(validate_simple(b).valid);
    EXPECT_TRUE(same_type(a, b)) << to_string(a) << " vs " << to_string(b);
    DecompositionType c = random_type(rng);
    EXPECT_EQ(same_type(a, c), isomorphic(a, c)) << to_string(a) << " vs " << to_string(c);
  }
}
