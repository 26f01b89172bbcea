#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qcartan/cyclotomic.hpp"
#include "qcartan/laurent.hpp"
#include "qcartan/numtheory.hpp"
#include "qcartan/oracles.hpp"

using namespace qcartan;
using testing_helpers::C;
using testing_helpers::V;

TEST(LaurentPoly, CanonicalFormAndArithmetic) {
  auto f = V(1) + V(-1);
  EXPECT_EQ(f * f, V(2) + 2 + V(-2));
  EXPECT_EQ(f - f, LaurentPoly());
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.low_degree(), -1);
  EXPECT_EQ(f.high_degree(), 1);
  EXPECT_EQ(f.breadth(), 2);
  auto half = LaurentPoly(mpq_class(1, 2)) * f;
  EXPECT_FALSE(half.is_integral());
  EXPECT_EQ(half * LaurentPoly(2), f);
  EXPECT_EQ(f.to_string(), "v^-1 + v");
}

TEST(LaurentPoly, DivisionAndGcd) {
  auto a = (V(1) + 1) * (V(2) + 1);
  EXPECT_EQ(divexact(a, V(1) + 1), V(2) + 1);
  EXPECT_THROW(divexact(a, V(1) - 1), std::domain_error);
  EXPECT_TRUE(divides(V(2) + 1, a.shifted(-5)));
  EXPECT_EQ(gcd(a, (V(1) + 1) * (V(1) - 1)), V(1) + 1);
  auto [q, r] = divrem(a, V(1) + 2);
  EXPECT_EQ(q * (V(1) + 2) + r, a);
  EXPECT_LT(r.breadth(), 1);
}

TEST(LaurentPoly, NormalizedIsMonicWithZeroLowDegree) {
  auto f = (V(-3) * LaurentPoly(mpq_class(-2, 3))) + V(-1, 4);
  auto n = f.normalized();
  EXPECT_EQ(n.low_degree(), 0);
  EXPECT_EQ(n.leading_coefficient(), 1);
}

TEST(QuantumIntegers, Examples) {
  EXPECT_EQ(qint(1, 5), LaurentPoly(1));
  EXPECT_EQ(qint(2, 1), V(1) + V(-1));
  EXPECT_EQ(qint(3, 1), V(2) + 1 + V(-2));
  EXPECT_EQ(qfact(0, 1), LaurentPoly(1));
  EXPECT_EQ(qfact(2, 1), V(1) + V(-1));
  EXPECT_EQ(qfact(3, 1), (V(1) + V(-1)) * (V(2) + 1 + V(-2)));
}

TEST(QuantumIntegers, MatchSymmetricSumAndSpecializeToN) {
  for (long n = 0; n <= 12; ++n)
    for (long m = 1; m <= 5; ++m) {
      auto q = qint(n, m);
      EXPECT_EQ(q, oracle::qint_by_sum(n, m));
      EXPECT_EQ(q.bar(), q);
      EXPECT_EQ(eval_at(q, 1, 1), n);
    }
}

TEST(LaurentPoly, InflateBarAndEvaluation) {
  auto f = V(1) + V(-1);
  EXPECT_EQ(inflate(1, f), f);
  EXPECT_EQ(inflate(2, f), V(2) + V(-2));
  EXPECT_EQ(bar(V(2) + 3), V(-2) + 3);
  EXPECT_EQ(eval_at(f, 2, 1), mpq_class(5, 2));
  EXPECT_EQ(f.eval_at(mpq_class(-1, 3)), mpq_class(-10, 3));
}

TEST(Cyclotomic, ScaledPsiExamples) {
  EXPECT_EQ(psi(4), V(1) + V(-1));
  EXPECT_EQ(psi(3), V(1) + 1 + V(-1));
  EXPECT_EQ(psi(6), V(1) - 1 + V(-1));
}

TEST(Cyclotomic, RecursionMatchesMoebiusProduct) {
  for (long n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic(n), oracle::cyclotomic_by_moebius(n)) << n;
}

TEST(CycloProduct, QintFactorExamples) {
  EXPECT_TRUE(qint_factor(1, 7).empty());
  EXPECT_EQ(qint_factor(2, 1), C({{4, 1}}));
  EXPECT_EQ(qint_factor(3, 1), C({{3, 1}, {6, 1}}));
  for (long n = 1; n <= 15; ++n)
    for (long m = 1; m <= 6; ++m) EXPECT_EQ(qint_factor(n, m).expand(), qint(n, m)) << n << ' ' << m;
}

TEST(CycloProduct, RhoExamples) {
  auto P = C({{3, 1}, {4, 1}, {6, 1}, {12, 1}});
  EXPECT_EQ(rho(2, 3, P), C({{3, 1}, {6, 1}, {12, 1}}));
  EXPECT_EQ(rho(2, 1, C({{3, 1}, {4, 1}, {6, 1}})), C({{4, 1}}));
}

TEST(CycloProduct, MultiplicationAndEvaluation) {
  auto a = C({{3, 1}, {4, 2}});
  auto b = C({{4, 1}});
  EXPECT_EQ(a * b, C({{3, 1}, {4, 3}}));
  EXPECT_EQ((a * b).count(), 4);
  EXPECT_EQ(b.pow(3), C({{4, 3}}));
  EXPECT_EQ(a.eval_at(2), a.expand().eval_at(mpq_class(2)));
}

TEST(NumberTheory, ValuationsAndParts) {
  EXPECT_EQ(val_p(12L, 2), 2);
  EXPECT_EQ(val_p(mpq_class(3, 4), 2), std::optional<long>(-2));
  EXPECT_FALSE(val_p(mpq_class(0), 2).has_value());
  EXPECT_EQ(pi_part(12L, PrimeSet{2}), 4);
  EXPECT_EQ(pi_complement_part(12L, PrimeSet{2}), 3);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(divisors(12), (std::vector<long>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(prime_divisors(-60L), (std::vector<long>{2, 3, 5}));
}
