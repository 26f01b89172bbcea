#pragma once

// Slow, definition-level reference implementations. They share no code paths with the
// production routines they are compared against.

#include <gmpxx.h>

#include <vector>

#include "qcartan/laurent.hpp"
#include "qcartan/matrix.hpp"
#include "qcartan/partitions.hpp"

namespace qcartan::oracle {

/// |Par(n)| by Euler's pentagonal recurrence.
mpz_class partition_count(int n);

/// Partitions of n by naive recursion on the largest part, unordered.
std::vector<std::vector<int>> partitions_naive(int n);

/// Counts maps from the parts of mu to the parts of lambda with the right fibre sums by
/// enumerating all ell(lambda)^ell(mu) functions.
mpz_class M_entry_by_maps(const Partition& lambda, const Partition& mu);

/// ell-core test through the full hook-length table of the Young diagram.
bool is_core_by_hooks(int ell, const Partition& lambda);

/// Phi_n = prod_{d | n} (v^d - 1)^{mu(n/d)}.
LaurentPoly cyclotomic_by_moebius(long n);

/// [n]_m as the sum v^{m(n-1)} + v^{m(n-3)} + ... + v^{-m(n-1)} (n >= 0).
LaurentPoly qint_by_sum(long n, long m);

/// Determinant by cofactor expansion (tiny matrices only).
LaurentPoly det_by_cofactors(const LMatrix& m);
mpq_class det_by_cofactors(const QMatrix& m);

/// Sym^m(A) entry (I, J) by expanding prod_k (sum_i A(i, J_k) x_i) as a polynomial in x.
LaurentPoly sym_power_entry(const LMatrix& A, const std::vector<int>& I, const std::vector<int>& J);

/// nu_p(x^n - y^n) computed directly.
long val_of_power_difference(long x, long y, long n, long p);

}  // namespace qcartan::oracle
