#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "qcartan/snf.hpp"

using namespace qcartan;
using testing_helpers::V;

namespace {

QMatrix qmat(std::initializer_list<std::initializer_list<long>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  size_t i = 0;
  for (const auto& r : rows) {
    size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<mpz_class> ints(std::initializer_list<long> xs) {
  std::vector<mpz_class> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LMatrix random_laurent(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<int> c(-2, 2), e(-1, 1);
  LMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = V(e(rng), c(rng)) + V(e(rng), c(rng));
  return m;
}

}  // namespace

TEST(SnfIntegers, Examples) {
  auto f = snf(qmat({{2, 1}, {1, 2}}), RingSpec::integers());
  EXPECT_EQ(f.integers, ints({1, 3}));
  EXPECT_TRUE(f.is_chain());
  EXPECT_EQ(f.serialize(), (std::vector<std::string>{"1", "3"}));
  EXPECT_EQ(snf(qmat({{2, 4}, {6, 8}}), RingSpec::integers()).integers, ints({2, 4}));
}

TEST(SnfIntegers, RankDeficientAndRectangular) {
  auto f = snf(qmat({{1, 2, 3}, {2, 4, 6}}), RingSpec::integers());
  EXPECT_EQ(f.integers, ints({1}));
  EXPECT_EQ(f.zeros, 1u);
  EXPECT_EQ(f.rank(), 1u);
  EXPECT_EQ(f.serialize(), (std::vector<std::string>{"1", "0"}));
}

TEST(SnfIntegersInverted, StripsInvertedPrimes) {
  auto f = snf(qmat({{6, 0}, {0, 10}}), RingSpec::integers_inverted(2));
  EXPECT_EQ(f.integers, ints({1, 15}));
  EXPECT_EQ(strip_primes(mpz_class(-360), 6), 5);
}

TEST(SnfLaurent, Example) {
  LaurentPoly q = V(1) + V(-1);
  LMatrix m(2, 2);
  m(0, 0) = q;
  m(0, 1) = 1;
  m(1, 1) = q;
  auto f = snf(m);
  ASSERT_EQ(f.laurent.size(), 2u);
  EXPECT_EQ(f.laurent[0], LaurentPoly(1));
  EXPECT_EQ(f.laurent[1], (V(2) + 1) * (V(2) + 1));
  EXPECT_EQ(snf_laurent_euclidean(m), f);
}

TEST(SnfLaurent, CycloDiagonalMatchesGeneralRoute) {
  using testing_helpers::C;
  std::vector<CycloProduct> d{C({{4, 1}}), C({{3, 1}, {4, 1}}), C({{6, 2}})};
  std::vector<LaurentPoly> e;
  for (const auto& c : d) e.push_back(c.expand());
  EXPECT_EQ(snf_cyclo_diagonal(d), snf(LMatrix::diagonal(e)));
}

TEST(SnfPLocal, Example) {
  auto f = snf(qmat({{2, 0}, {0, 1}}), RingSpec::p_local(2));
  EXPECT_EQ(f.exponents, (std::vector<long>{0, 1}));
  EXPECT_EQ(f.serialize(), (std::vector<std::string>{"1", "2"}));
}

TEST(GcdMinors, IntegerExamples) {
  auto m = qmat({{2, 4}, {6, 8}});
  EXPECT_EQ(gcd_minors_oracle(m, RingSpec::integers(), 1), 2);
  EXPECT_EQ(gcd_minors_oracle(m, RingSpec::integers(), 2), 8);
}

TEST(GcdMinors, AgreesWithLaurentSnfOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_laurent(rng, 3);
    auto f = snf(m);
    ASSERT_TRUE(f.is_chain());
    for (size_t k = 1; k <= 3; ++k) EXPECT_EQ(f.laurent_product(k), gcd_minors_oracle(m, k)) << trial << ' ' << k;
    EXPECT_EQ(snf_laurent_euclidean(m), f);
  }
}

TEST(Specialize, Examples) {
  LMatrix d = LMatrix::diagonal({qint(2, 1), qint(3, 2), qint(4, 3)});
  auto s1 = specialize(d, 1, 1);
  EXPECT_EQ(s1.matrix, QMatrix::diagonal({mpq_class(2), mpq_class(3), mpq_class(4)}));
  EXPECT_EQ(s1.N, 1);
  auto s2 = specialize(LMatrix::diagonal({V(1) + V(-1)}), 2, 1);
  EXPECT_EQ(s2.matrix(0, 0), mpq_class(5, 2));
  EXPECT_EQ(s2.N, 2);
  EXPECT_EQ(specialize(d, -4, 6).N, 6);
  EXPECT_THROW(specialize(d, 0, 1), std::domain_error);
}

TEST(Specialize, CommutesWithProducts) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_laurent(rng, 3), b = random_laurent(rng, 3);
    mpq_class theta(trial + 2, 3);
    EXPECT_EQ(specialize_entries(a * b, theta), specialize_entries(a, theta) * specialize_entries(b, theta));
  }
}

TEST(Equiv, Examples) {
  auto a = qmat({{1, 0}, {0, 2}});
  EXPECT_TRUE(equiv(a, a, RingSpec::integers()));
  EXPECT_TRUE(equiv(a, qmat({{2, 0}, {0, 1}}), RingSpec::integers()));
  EXPECT_FALSE(equiv(qmat({{2, 0}, {0, 2}}), qmat({{1, 0}, {0, 4}}), RingSpec::integers()));
  EXPECT_TRUE(equiv(qmat({{2, 0}, {0, 2}}), qmat({{1, 0}, {0, 4}}), RingSpec::integers_inverted(2)));
  EXPECT_THROW(equiv(a, qmat({{1}}), RingSpec::integers()), std::invalid_argument);
}

TEST(Equiv, BarTransposeOfLaurentMatrix) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto m = random_laurent(rng, 3);
    auto sym = m * bar_transpose(m);
    EXPECT_TRUE(equiv(sym, bar_transpose(sym)));
  }
}
