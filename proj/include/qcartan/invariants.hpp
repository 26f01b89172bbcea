#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "qcartan/cyclotomic.hpp"
#include "qcartan/laurent.hpp"
#include "qcartan/partitions.hpp"

namespace qcartan {

/// Thrown when a quantity that must lie in Z[v,v^-1] has a non-integral coefficient.
class IntegralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InvariantKind { RClassic, RGraded, IGraded, JGraded, ILocal };

struct InvariantFormula {
  InvariantKind kind;
  int ell;
  long p = 0;  // only for ILocal
};

/// ell_k = ell / gcd(ell, k).
long ell_k(long ell, long k);

mpz_class r_classic(int ell, const Partition& lambda);
CycloProduct r_graded(int ell, const Partition& lambda);
CycloProduct I_graded(int ell, const Partition& lambda);
CycloProduct J_graded(int ell, const Partition& lambda);

CycloProduct f_factor(long ell, long k, long t);
CycloProduct g_factor(long ell, long p, long k, long t);
CycloProduct I_local(int ell, long p, const Partition& lambda);

/// Evaluates a graded kind; RClassic is rejected (use r_classic).
CycloProduct evaluate_graded(const InvariantFormula& formula, const Partition& lambda);

/// Sum over Pow_p(n) of z_nu^{-1} prod_j theta_j^{m_{p^j}(nu)}; theta[j] must exist whenever p^j <= n.
mpq_class a_p_theta(int p, const std::vector<mpq_class>& theta, int n);

/// Sum over Par(n) of z_lambda^{-1} prod_k fl_k(f)^{m_k(lambda)}; throws IntegralityViolation if
/// the result leaves Z[v,v^-1] (f must have integer coefficients).
LaurentPoly b_theta(const LaurentPoly& f, int n);

}  // namespace qcartan
