#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qcartan/cyclotomic.hpp"
#include "qcartan/matrix.hpp"

namespace qcartan {

struct RingSpec {
  enum class Kind { Integers, IntegersInverted, RationalLaurent, PLocal };
  Kind kind = Kind::Integers;
  long param = 0;  // N for IntegersInverted, p for PLocal

  static RingSpec integers() { return {Kind::Integers, 0}; }
  static RingSpec integers_inverted(long N) { return {Kind::IntegersInverted, N}; }
  static RingSpec rational_laurent() { return {Kind::RationalLaurent, 0}; }
  static RingSpec p_local(long p) { return {Kind::PLocal, p}; }

  std::string to_string() const;
  bool operator==(const RingSpec&) const = default;
};

/// Normalized divisibility chain d_1 | d_2 | ... plus the number of zero invariant factors.
///
/// Integers and IntegersInverted use `integers` (positive, N-primes stripped for the latter),
/// RationalLaurent uses `laurent` (monic, lowest exponent 0) and PLocal uses `exponents`.
struct InvariantFactors {
  RingSpec ring;
  std::vector<mpz_class> integers;
  std::vector<LaurentPoly> laurent;
  std::vector<long> exponents;
  size_t zeros = 0;

  size_t rank() const;
  /// Decimal strings, p^e as a decimal for PLocal, canonical polynomials for Laurent; zeros as "0".
  std::vector<std::string> serialize() const;
  bool is_chain() const;

  /// d_1 ... d_k (zero if k exceeds the rank); PLocal returns p^(e_1+...+e_k).
  mpz_class integer_product(size_t k) const;
  LaurentPoly laurent_product(size_t k) const;

  bool operator==(const InvariantFactors& o) const;
};

InvariantFactors snf(const QMatrix& m, const RingSpec& ring);
InvariantFactors snf(const ZMatrix& m, const RingSpec& ring);
InvariantFactors snf(const LMatrix& m, const RingSpec& ring = RingSpec::rational_laurent());
/// Plain Euclidean elimination over Q[v,v^-1] by breadth; slow on large inputs.
InvariantFactors snf_laurent_euclidean(const LMatrix& m);

/// Invariant factors over Q[v,v^-1] of diag(P_1, ..., P_r) computed from the factorizations.
InvariantFactors snf_cyclo_diagonal(const std::vector<CycloProduct>& diag);

/// gcd of all k x k minors (normalized); independent check of d_1 ... d_k.
mpz_class gcd_minors_oracle(const QMatrix& m, const RingSpec& ring, size_t k);
LaurentPoly gcd_minors_oracle(const LMatrix& m, size_t k);

/// Fraction-free determinant over Q[v,v^-1].
LaurentPoly determinant(const LMatrix& m);

struct Specialized {
  QMatrix matrix;
  mpq_class theta;
  long N;  // |a b|, the integer to invert downstream
};

Specialized specialize(const LMatrix& m, long a, long b);

bool equiv(const QMatrix& a, const QMatrix& b, const RingSpec& ring);
bool equiv(const LMatrix& a, const LMatrix& b);

/// Integer associate of x over Z[1/N]: |x| with every prime dividing N removed.
mpz_class strip_primes(const mpz_class& x, long N);

}  // namespace qcartan
