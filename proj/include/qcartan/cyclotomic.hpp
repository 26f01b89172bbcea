#pragma once

#include <map>
#include <string>

#include "qcartan/laurent.hpp"

namespace qcartan {

/// Ordinary cyclotomic polynomial Phi_n (n >= 1), lowest exponent 0.
const LaurentPoly& cyclotomic(long n);

/// Psi_b = v^{-phi(b)/2} Phi_b for b >= 3.
LaurentPoly psi(long b);

/// Formal product of Psi_b^{e_b}.
class CycloProduct {
 public:
  CycloProduct() = default;
  explicit CycloProduct(std::map<long, long> factors);

  const std::map<long, long>& factors() const { return factors_; }
  long exponent(long b) const;
  bool empty() const { return factors_.empty(); }
  /// Total number of factors counted with multiplicity.
  long count() const;

  CycloProduct& operator*=(const CycloProduct& o);
  friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }
  CycloProduct pow(long e) const;

  bool operator==(const CycloProduct&) const = default;

  /// Multiplies out smallest factors first.
  LaurentPoly expand() const;
  /// Value at v = theta, computed factorwise.
  mpq_class eval_at(const mpq_class& theta) const;

  std::string to_string() const;

 private:
  std::map<long, long> factors_;
};

/// Factor multiset of [n]_m: every b >= 3 with b | 2mn and b not dividing 2m.
CycloProduct qint_factor(long n, long m);

/// rho^{(p)}_z: keep the factors whose p'-part equals z.
CycloProduct rho(long p, long z, const CycloProduct& P);

}  // namespace qcartan
