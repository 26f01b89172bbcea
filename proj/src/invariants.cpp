#include "qcartan/invariants.hpp"

#include <numeric>

#include "qcartan/numtheory.hpp"

namespace qcartan {

namespace {

PrimeSet prime_set_of(long n) {
  auto v = prime_divisors(n);
  return {v.begin(), v.end()};
}

}  // namespace

long ell_k(long ell, long k) { return ell / std::gcd(ell, k); }

mpz_class r_classic(int ell, const Partition& lambda) {
  if (ell < 2) throw std::invalid_argument("r_classic: ell must be at least 2");
  mpz_class r = 1;
  for (auto [k, m] : lambda.multiplicities()) {
    if (k % ell == 0) continue;
    long q = m / ell;
    if (!q) continue;
    long lk = ell_k(ell, k);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(lk), static_cast<unsigned long>(q));
    r *= power * pi_part(factorial(q), prime_set_of(lk));
  }
  return r;
}

CycloProduct f_factor(long ell, long k, long t) {
  if (ell < 2 || k < 1 || t < 1) throw std::invalid_argument("f_factor: bad arguments");
  long lk = ell_k(ell, k);
  PrimeSet pi = prime_set_of(lk);
  long tpi = pi_part(t, pi);
  return qint_factor(lk * tpi, std::gcd(ell, k) * (t / tpi));
}

CycloProduct r_graded(int ell, const Partition& lambda) {
  if (ell < 2) throw std::invalid_argument("r_graded: ell must be at least 2");
  CycloProduct out;
  for (auto [k, m] : lambda.multiplicities())
    for (long t = 1; t <= m / ell; ++t) out *= f_factor(ell, k, t);
  return out;
}

CycloProduct I_graded(int ell, const Partition& lambda) {
  if (ell < 2) throw std::invalid_argument("I_graded: ell must be at least 2");
  CycloProduct out;
  for (auto [k, m] : lambda.multiplicities())
    for (long t = 1; t <= m; ++t) out *= f_factor(ell, k, t);
  return out;
}

CycloProduct J_graded(int ell, const Partition& lambda) {
  if (ell < 2) throw std::invalid_argument("J_graded: ell must be at least 2");
  CycloProduct out;
  for (auto [k, m] : lambda.multiplicities()) out *= qint_factor(ell, k).pow(m);
  return out;
}

CycloProduct g_factor(long ell, long p, long k, long t) {
  if (ell < 2 || k < 1 || t < 1 || !is_prime(p)) throw std::invalid_argument("g_factor: bad arguments");
  if (val_p(k, p) >= val_p(ell, p)) return qint_factor(p_prime_part(ell, p), p_prime_part(k, p) * p_part(ell * t, p));
  return qint_factor(ell * p_part(t, p) / p_part(k, p), k);
}

CycloProduct I_local(int ell, long p, const Partition& lambda) {
  CycloProduct out;
  for (auto [k, m] : lambda.multiplicities())
    for (long t = 1; t <= m; ++t) out *= g_factor(ell, p, k, t);
  return out;
}

CycloProduct evaluate_graded(const InvariantFormula& formula, const Partition& lambda) {
  switch (formula.kind) {
    case InvariantKind::RGraded: return r_graded(formula.ell, lambda);
    case InvariantKind::IGraded: return I_graded(formula.ell, lambda);
    case InvariantKind::JGraded: return J_graded(formula.ell, lambda);
    case InvariantKind::ILocal: return I_local(formula.ell, formula.p, lambda);
    case InvariantKind::RClassic: break;
  }
  throw std::invalid_argument("evaluate_graded: r_classic is an integer invariant");
}

mpq_class a_p_theta(int p, const std::vector<mpq_class>& theta, int n) {
  mpq_class sum = 0;
  for (const auto& nu : parts_filtered(PartitionFilter::pow(p), n)) {
    mpq_class term(1);
    for (auto [part, m] : nu.multiplicities()) {
      size_t j = static_cast<size_t>(val_p(static_cast<long>(part), p));
      if (j >= theta.size()) throw std::invalid_argument("a_p_theta: theta sequence too short");
      term *= pow(theta[j], m);
    }
    term /= z_of(nu);
    sum += term;
  }
  return sum;
}

LaurentPoly b_theta(const LaurentPoly& f, int n) {
  if (!f.is_integral()) throw std::invalid_argument("b_theta: f must have integer coefficients");
  LaurentPoly sum;
  for (const auto& lambda : parts_all(n)) {
    LaurentPoly term(1L);
    for (auto [k, m] : lambda.multiplicities()) term *= f.inflate(k).pow(static_cast<unsigned>(m));
    term *= mpq_class(1, 1) / mpq_class(z_of(lambda));
    sum += term;
  }
  if (!sum.is_integral()) throw IntegralityViolation("b_theta: non-integral sum " + sum.to_string());
  return sum;
}

}  // namespace qcartan
