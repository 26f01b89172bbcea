#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcartan {

/// Laurent polynomial in v with exact rational coefficients.
///
/// Stored densely as v^lo * (num[0] + num[1] v + ...) / den with den > 0,
/// num trimmed at both ends and gcd(content(num), den) = 1, so every value has
/// exactly one representation.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, const mpq_class& coeff = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly from_terms(const std::map<int, mpq_class>& terms);
  /// Integer coefficients c[0..] starting at exponent lo.
  static LaurentPoly from_dense(int lo, std::vector<mpz_class> coeffs, mpz_class den = 1);

  bool is_zero() const { return num_.empty(); }
  bool is_integral() const { return den_ == 1; }
  bool is_constant() const { return num_.size() <= 1 && (num_.empty() || lo_ == 0); }
  bool is_monomial() const { return num_.size() == 1; }

  int low_degree() const { return lo_; }
  int high_degree() const { return lo_ + static_cast<int>(num_.size()) - 1; }
  /// hi - lo for nonzero values, -1 for zero.
  int breadth() const { return static_cast<int>(num_.size()) - 1; }

  mpq_class coefficient(int exponent) const;
  mpq_class leading_coefficient() const { return coefficient(high_degree()); }
  mpq_class trailing_coefficient() const { return coefficient(low_degree()); }
  std::map<int, mpq_class> terms() const;

  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& c) { return a *= c; }

  bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && den_ == o.den_ && num_ == o.num_; }

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned e) const;

  /// v -> v^{-1}.
  LaurentPoly bar() const;
  /// v -> v^t.
  LaurentPoly inflate(int t) const;
  /// Exact value at v = a/b.
  mpq_class eval_at(long a, long b) const;
  mpq_class eval_at(const mpq_class& theta) const;

  /// Positive rational c with this = c * (integer primitive polynomial).
  mpq_class content() const;
  LaurentPoly primitive_part() const;

  /// Associate that is monic with lowest exponent 0 (canonical under units Q^x v^Z).
  LaurentPoly normalized() const;

  /// Ascending powers, e.g. "v^-1 + 1/2 + 3*v^2"; "0" for zero.
  std::string to_string() const;

 private:
  void canonicalize();

  int lo_ = 0;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

/// Division in Q[v,v^-1] by breadth: a = q*b + r with breadth(r) < breadth(b).
std::pair<LaurentPoly, LaurentPoly> divrem(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a/b; throws std::domain_error if b does not divide a in Q[v,v^-1].
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Normalized gcd in Q[v,v^-1] (zero only if both are zero).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly inflate(int t, const LaurentPoly& f);
inline LaurentPoly bar(const LaurentPoly& f) { return f.bar(); }
inline mpq_class eval_at(const LaurentPoly& f, long a, long b) { return f.eval_at(a, b); }

/// Quantum integer [n]_m = (v^{mn} - v^{-mn}) / (v^m - v^{-m}).
LaurentPoly qint(long n, long m = 1);
/// [n]_m! = [n]_m [n-1]_m ... [1]_m.
LaurentPoly qfact(long n, long m = 1);

}  // namespace qcartan
