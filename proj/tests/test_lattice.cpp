#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace enriques;
using namespace enriques::testing;

namespace {

Integer determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return numerator(det);
}

NumClass random_class(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  NumClass n;
  for (std::size_t i = 0; i < kRank; ++i) n[i] = d(rng);
  return n;
}

}  // namespace

TEST(Lattice, GramEntries) {
  auto g = basis_gram();
  EXPECT_EQ(g[0][0], 10);
  EXPECT_EQ(g[0][3], 3);
  EXPECT_EQ(g[1][2], 1);
  EXPECT_EQ(g[4][4], 0);
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) EXPECT_EQ(g[i][j], g[j][i]);
}

TEST(Lattice, DeterminantIsMinusOne) {
  auto g = basis_gram();
  std::vector<std::vector<Rational>> m(kRank, std::vector<Rational>(kRank));
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) m[i][j] = g[i][j];
  EXPECT_EQ(determinant(m), -1);
}

TEST(Lattice, SignatureByPivots) {
  // Symmetric elimination in the basis (Delta, f1, f2 - f1, ..., f9 - f1),
  // whose leading minors are all nonzero.
  std::vector<NumClass> b{NumClass::unit(0), NumClass::unit(1)};
  for (std::size_t i = 2; i < kRank; ++i) b.push_back(NumClass::unit(i) - NumClass::unit(1));
  std::vector<std::vector<Rational>> m(kRank, std::vector<Rational>(kRank));
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) m[i][j] = Rational(inner(b[i], b[j]));
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < kRank; ++k) {
    ASSERT_NE(m[k][k], 0) << "zero pivot at " << k;
    (m[k][k] > 0 ? pos : neg)++;
    for (std::size_t i = k + 1; i < kRank; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < kRank; ++j) m[i][j] -= f * m[k][j];
    }
  }
  EXPECT_EQ(pos, 1);
  EXPECT_EQ(neg, 9);
}

TEST(Lattice, InnerAgreesWithGramAndIsEven) {
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    NumClass a = random_class(rng, 20), b = random_class(rng, 20), c = random_class(rng, 20);
    std::array<long long, kRank> x{}, y{};
    for (std::size_t i = 0; i < kRank; ++i) {
      x[i] = a[i].convert_to<long long>();
      y[i] = b[i].convert_to<long long>();
    }
    EXPECT_EQ(inner(a, b), gram_form(x, y));
    EXPECT_EQ(inner(a, b), inner(b, a));
    EXPECT_EQ(inner(a + c, b), inner(a, b) + inner(c, b));
    EXPECT_EQ(inner(3 * a, b), 3 * inner(a, b));
    EXPECT_EQ(square(a) % 2, 0);
  }
}

TEST(Lattice, NamedProducts) {
  EXPECT_EQ(inner(isotropic_generator(1), isotropic_generator(2)), 1);
  EXPECT_EQ(inner(NumClass::unit(0), isotropic_generator(3)), 3);
  NumClass x = isotropic_generator(1) + isotropic_generator(2);
  EXPECT_EQ(square(x), 2);
  NumClass y = isotropic_generator(1) + isotropic_generator(2) - isotropic_generator(3) - isotropic_generator(4);
  EXPECT_EQ(square(y), -4);
}

TEST(Lattice, IsotropicGenerators) {
  for (int i = 1; i <= 10; ++i) {
    EXPECT_EQ(square(isotropic_generator(i)), 0);
    for (int j = 1; j <= 10; ++j)
      if (i != j) {
        EXPECT_EQ(inner(isotropic_generator(i), isotropic_generator(j)), 1);
      }
  }
  EXPECT_EQ(isotropic_generator(1), NumClass::unit(1));
  EXPECT_EQ(isotropic_generator(10), NumClass::from({3, -1, -1, -1, -1, -1, -1, -1, -1, -1}));
  EXPECT_EQ(inner(isotropic_generator(10), isotropic_generator(1)), 1);
  EXPECT_THROW(isotropic_generator(0), PreconditionError);
  EXPECT_THROW(isotropic_generator(11), PreconditionError);
}

TEST(Lattice, PairGenerators) {
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) {
      NumClass e = two_isotropic_generator(i, j);
      EXPECT_EQ(square(e), 0);
      for (int k = 1; k <= 10; ++k)
        EXPECT_EQ(inner(e, isotropic_generator(k)), (k == i || k == j) ? 2 : 1);
    }
  EXPECT_EQ(inner(two_isotropic_generator(1, 2), isotropic_generator(1)), 2);
  EXPECT_EQ(inner(two_isotropic_generator(1, 2), isotropic_generator(3)), 1);
}

TEST(Lattice, Divisibility) {
  EXPECT_EQ(divisibility(2 * (isotropic_generator(1) + isotropic_generator(2))), 2);
  EXPECT_EQ(divisibility(isotropic_generator(1)), 1);
  EXPECT_EQ(divisibility(isotropic_generator(10)), 1);
  EXPECT_EQ(divisibility(NumClass{}), 0);
}

TEST(Lattice, TextRoundTrip) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    NumClass a = random_class(rng, 1000);
    EXPECT_EQ(parse_num(to_string(a)), a);
  }
  EXPECT_EQ(parse_num(" num[ 1, 0,0,0,0,0,0,0,0, -2 ] "), NumClass::from({1, 0, 0, 0, 0, 0, 0, 0, 0, -2}));
  EXPECT_THROW(parse_num("num[1,2,3]"), ParseError);
  EXPECT_THROW(parse_num("num[1,0,0,0,0,0,0,0,0,0"), ParseError);
  EXPECT_THROW(parse_num("pic[1,0,0,0,0,0,0,0,0,0]"), ParseError);
}
