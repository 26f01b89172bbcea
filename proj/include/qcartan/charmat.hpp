#pragma once

#include <stdexcept>
#include <vector>

#include "qcartan/invariants.hpp"
#include "qcartan/matrix.hpp"

namespace qcartan {

/// Thrown when a matrix that must be p-integral has an entry with denominator divisible by p.
class LocalIntegralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// M_{lambda,mu}: maps from the parts of mu to the parts of lambda with fibre sums lambda_i.
mpz_class M_entry(const Partition& lambda, const Partition& mu);

LabeledMatrix<mpz_class> M_matrix(int n);
LabeledMatrix<mpq_class> M_inverse(int n);

LabeledMatrix<mpz_class> N_matrix(int p, int n);
LabeledMatrix<mpz_class> L_matrix(int p, int n);

/// M_n diag(J(lambda)) M_n^{-1} over Z[v,v^-1]; throws IntegralityViolation otherwise.
LabeledMatrix<LaurentPoly> conjugated_diag(int n, int ell);

/// N diag(J(lambda)|_theta) N^{-1} over Pow_p(n); throws LocalIntegralityViolation if not p-integral.
LabeledMatrix<mpq_class> conjugated_diag_local(int p, int n, int ell, const mpq_class& theta);

struct SymPower {
  std::vector<std::vector<int>> basis;  // weakly increasing tuples, lexicographic
  LMatrix matrix;
};

/// Weakly increasing m-tuples over {0,...,n-1} in lexicographic order.
std::vector<std::vector<int>> mult_tuples(int m, int n);

/// Column convention: column J holds the coefficients of prod_k A v_{J_k}.
SymPower sym_power(const LMatrix& A, int m);

/// S^d(A) indexed by multipartitions(A.rows(), d). Tensor factors are row-convention symmetric
/// powers (v_i -> sum_j a_ij v_j), i.e. the transpose of sym_power of the transpose.
LabeledMatrix<LaurentPoly> S_d(const LMatrix& A, int d);

LabeledMatrix<mpz_class> M_colored(int ell, int d);

/// [A_ell]: v+v^-1 on the diagonal, -1 next to it.
LMatrix quantized_cartan_A(int ell);
LMatrix Q_matrix(int ell);

LabeledMatrix<LaurentPoly> graded_cartan_lhs(int ell, int d);
LabeledMatrix<LaurentPoly> graded_cartan_rhs(int ell, int d);

/// Conjugates D by an invertible rational matrix P: P^{-1} D P, entries assumed in Q[v,v^-1].
LMatrix conjugate_by(const QMatrix& P, const LMatrix& D);

}  // namespace qcartan
