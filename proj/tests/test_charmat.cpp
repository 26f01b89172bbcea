#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qcartan/charmat.hpp"
#include "qcartan/numtheory.hpp"
#include "qcartan/oracles.hpp"
#include "qcartan/snf.hpp"

using namespace qcartan;
using testing_helpers::P;
using testing_helpers::V;

namespace {

template <class T>
Matrix<T> mat(std::initializer_list<std::initializer_list<T>> rows) {
  Matrix<T> m(rows.size(), rows.begin()->size());
  size_t i = 0;
  for (const auto& r : rows) {
    size_t j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

ZMatrix zmat(std::initializer_list<std::initializer_list<long>> rows) {
  ZMatrix m(rows.size(), rows.begin()->size());
  size_t i = 0;
  for (const auto& r : rows) {
    size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST(MMatrix, SmallExamples) {
  auto m2 = M_matrix(2);
  EXPECT_EQ(m2.entries, zmat({{1, 1}, {0, 2}}));
  EXPECT_EQ(m2.row_labels, as_labels(parts_all(2)));
  auto m3 = M_matrix(3);
  EXPECT_EQ(m3.entries(1, 0), 0);
  EXPECT_EQ(m3.entries(1, 1), 1);
  EXPECT_EQ(m3.entries(1, 2), 3);
  EXPECT_EQ(M_matrix(0).entries, zmat({{1}}));
}

TEST(MMatrix, EntriesMatchMapCounting) {
  for (int n = 0; n <= 6; ++n) {
    const auto& ps = parts_all(n);
    auto m = M_matrix(n);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = 0; j < ps.size(); ++j)
        EXPECT_EQ(m.entries(i, j), oracle::M_entry_by_maps(ps[i], ps[j])) << ps[i].to_string() << ' ' << ps[j].to_string();
  }
}

TEST(MMatrix, DiagonalIsProductOfMultiplicityFactorials) {
  for (const auto& l : parts_all(7)) {
    mpz_class expect = 1;
    for (auto [k, m] : l.multiplicities()) expect *= factorial(m);
    EXPECT_EQ(M_entry(l, l), expect);
  }
}

TEST(MInverse, ExamplesAndIdentity) {
  EXPECT_EQ(M_inverse(0).entries, mat<mpq_class>({{1}}));
  EXPECT_EQ(M_inverse(2).entries, mat<mpq_class>({{1, mpq_class(-1, 2)}, {0, mpq_class(1, 2)}}));
  auto prod = to_rational(M_matrix(6).entries) * M_inverse(6).entries;
  EXPECT_EQ(prod, QMatrix::identity(parts_all(6).size()));
}

TEST(NMatrix, PowerPartitionSubmatrices) {
  EXPECT_EQ(N_matrix(2, 2).entries, zmat({{1, 1}, {0, 2}}));
  EXPECT_EQ(N_matrix(2, 3).entries, zmat({{1, 3}, {0, 6}}));
  EXPECT_EQ(N_matrix(2, 3).row_labels, as_labels(std::vector<Partition>{P({2, 1}), P({1, 1, 1})}));
}

TEST(LMatrix, SquareAndInvertible) {
  for (int p : {2, 3})
    for (int n = 0; n <= 6; ++n) {
      auto l = L_matrix(p, n);
      ASSERT_TRUE(l.entries.square());
      EXPECT_NE(determinant(to_rational(l.entries)), 0);
    }
}

TEST(ConjugatedDiag, SmallExamples) {
  EXPECT_EQ(conjugated_diag(0, 2).entries, mat<LaurentPoly>({{LaurentPoly(1)}}));
  EXPECT_EQ(conjugated_diag(1, 2).entries, mat<LaurentPoly>({{V(1) + V(-1)}}));
  auto x = conjugated_diag(2, 2).entries;
  EXPECT_TRUE(all_integral(x));
  auto expect = J_graded(2, P({2})).expand() * J_graded(2, P({1, 1})).expand();
  EXPECT_EQ(determinant(x).normalized(), expect.normalized());
}

TEST(ConjugatedDiag, IntegralForAllSmallCases) {
  for (int ell = 2; ell <= 6; ++ell)
    for (int n = 0; n <= 6; ++n) EXPECT_TRUE(all_integral(conjugated_diag(n, ell).entries)) << ell << ' ' << n;
}

TEST(ConjugatedDiagLocal, PIntegralExamples) {
  auto a = conjugated_diag_local(2, 2, 2, 3).entries;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) EXPECT_TRUE(mpz_odd_p(a(i, j).get_den().get_mpz_t()));
  auto b = conjugated_diag_local(3, 3, 3, 1).entries;
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) EXPECT_EQ(b(i, j).get_den(), 1);
  EXPECT_EQ(conjugated_diag_local(2, 1, 2, 3).entries.rows(), 1u);
}

TEST(SymPower, BasisAndLowPowers) {
  EXPECT_EQ(mult_tuples(2, 2), (std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}}));
  auto A = mat<LaurentPoly>({{V(1), 2}, {V(-1) + 1, 3}});
  EXPECT_EQ(sym_power(A, 1).matrix, A);
  EXPECT_EQ(sym_power(LMatrix::identity(2), 2).matrix, LMatrix::identity(3));
}

TEST(SymPower, SquareLayoutOfTwoByTwo) {
  LaurentPoly a = V(1), b = 2, c = V(-1) + 1, d = 3;
  auto s = sym_power(mat<LaurentPoly>({{a, b}, {c, d}}), 2).matrix;
  auto expect = mat<LaurentPoly>({{a * a, a * b, b * b},
                                  {LaurentPoly(2) * a * c, a * d + b * c, LaurentPoly(2) * b * d},
                                  {c * c, c * d, d * d}});
  EXPECT_EQ(s, expect);
}

TEST(SymPower, EntriesMatchPolynomialExpansion) {
  auto A = mat<LaurentPoly>({{V(1), 2, 0}, {V(-1) + 1, 3, -1}, {1, V(2), V(1) - 1}});
  for (int m = 1; m <= 3; ++m) {
    auto s = sym_power(A, m);
    for (size_t i = 0; i < s.basis.size(); ++i)
      for (size_t j = 0; j < s.basis.size(); ++j)
        EXPECT_EQ(s.matrix(i, j), oracle::sym_power_entry(A, s.basis[i], s.basis[j]));
  }
}

TEST(SymPower, Functorial) {
  auto A = mat<LaurentPoly>({{V(1), 2}, {V(-1) + 1, 3}});
  auto B = mat<LaurentPoly>({{1, V(-1)}, {-2, V(1) + V(-1)}});
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(sym_power(A * B, m).matrix, sym_power(A, m).matrix * sym_power(B, m).matrix);
}

TEST(SD, DegreeZeroAndOne) {
  auto A = quantized_cartan_A(2);
  EXPECT_EQ(S_d(A, 0).entries, mat<LaurentPoly>({{LaurentPoly(1)}}));
  auto s1 = S_d(A, 1);
  EXPECT_EQ(s1.entries, A);
  EXPECT_EQ(s1.row_labels, as_labels(multipartitions(2, 1)));
}

TEST(SD, OneColorIsDiagonalOfInflatedPowers) {
  auto f = V(1) + 2;
  for (int d = 0; d <= 5; ++d) {
    auto s = S_d(mat<LaurentPoly>({{f}}), d).entries;
    const auto& ps = parts_all(d);
    ASSERT_EQ(s.rows(), ps.size());
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = 0; j < ps.size(); ++j) {
        LaurentPoly expect = 0;
        if (i == j) {
          expect = 1;
          for (auto [t, m] : ps[i].multiplicities()) expect *= f.inflate(t).pow(m);
        }
        EXPECT_EQ(s(i, j), expect);
      }
  }
}

TEST(MColored, OneColorIsTransposeAndSmallBlocks) {
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(M_colored(1, d).entries, M_matrix(d).entries.transpose());
  EXPECT_EQ(M_colored(2, 1).entries, ZMatrix::identity(2));
  auto tM2 = M_matrix(2).entries.transpose();
  EXPECT_EQ(M_colored(2, 2).entries, direct_sum<mpz_class>({tM2, ZMatrix::identity(1), tM2}));
}

TEST(QuantizedCartan, DeterminantAndTriangularization) {
  EXPECT_EQ(quantized_cartan_A(1), mat<LaurentPoly>({{V(1) + V(-1)}}));
  for (int ell = 1; ell <= 8; ++ell) {
    auto A = quantized_cartan_A(ell);
    EXPECT_EQ(determinant(A), qint(ell + 1));
    EXPECT_EQ(oracle::det_by_cofactors(A), qint(ell + 1));
    auto QA = Q_matrix(ell) * A;
    EXPECT_TRUE(QA.is_upper_triangular());
    for (int i = 0; i + 1 < ell; ++i) EXPECT_EQ(QA(i, i), LaurentPoly(1));
    EXPECT_EQ(QA(ell - 1, ell - 1), qint(ell + 1).shifted(ell));
    EXPECT_EQ(determinant(Q_matrix(ell)), V(ell));
  }
}

TEST(GradedCartan, DegreeZeroAndOne) {
  EXPECT_EQ(graded_cartan_lhs(2, 0).entries, mat<LaurentPoly>({{LaurentPoly(1)}}));
  EXPECT_EQ(graded_cartan_rhs(2, 0).entries, mat<LaurentPoly>({{LaurentPoly(1)}}));
  EXPECT_TRUE(equiv(graded_cartan_lhs(2, 1).entries, graded_cartan_rhs(2, 1).entries));
  EXPECT_EQ(snf(graded_cartan_rhs(2, 1).entries).laurent, std::vector<LaurentPoly>{(V(2) + 1)});
}

TEST(GradedCartan, IntegralAndEquivalentInDegreeTwo) {
  auto lhs = graded_cartan_lhs(3, 2).entries;
  EXPECT_TRUE(all_integral(lhs));
  EXPECT_EQ(lhs.rows(), multipartitions(2, 2).size());
  EXPECT_TRUE(equiv(lhs, graded_cartan_rhs(3, 2).entries));
}

TEST(GradedCartan, IntegralForEveryColorCountAndDegree) {
  for (int ell = 2; ell <= 4; ++ell)
    for (int d = 0; d <= 3; ++d) EXPECT_TRUE(all_integral(graded_cartan_lhs(ell, d).entries)) << ell << ' ' << d;
}
