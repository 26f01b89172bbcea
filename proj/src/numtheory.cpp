#include "qcartan/numtheory.hpp"

#include <stdexcept>

namespace qcartan {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_divisors(long n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::invalid_argument("prime_divisors: zero has no finite prime set");
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long> prime_divisors(const mpz_class& n) {
  if (!n.fits_slong_p()) throw std::invalid_argument("prime_divisors: argument too large");
  return prime_divisors(n.get_si());
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long euler_phi(long n) {
  long result = n;
  for (long p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

long val_p(long n, long p) {
  if (n == 0) throw std::invalid_argument("val_p: zero has infinite valuation");
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long val_p(const mpz_class& n, long p) {
  if (n == 0) throw std::invalid_argument("val_p: zero has infinite valuation");
  mpz_class prime = p;
  return static_cast<long>(mpz_remove(mpz_class().get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

std::optional<long> val_p(const mpq_class& x, long p) {
  if (x == 0) return std::nullopt;
  return val_p(x.get_num(), p) - val_p(x.get_den(), p);
}

long pi_part(long n, const PrimeSet& primes) {
  if (n < 1) throw std::invalid_argument("pi_part: n must be positive");
  long part = 1;
  for (long p : primes)
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

mpz_class pi_part(const mpz_class& n, const PrimeSet& primes) {
  if (n < 1) throw std::invalid_argument("pi_part: n must be positive");
  mpz_class rest = n, part = 1;
  for (long p : primes) {
    mpz_class prime = p, stripped;
    auto e = mpz_remove(stripped.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    rest = stripped;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), e);
    part *= power;
  }
  return part;
}

long pi_complement_part(long n, const PrimeSet& primes) { return n / pi_part(n, primes); }

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpq_class pow(const mpq_class& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("pow: zero to a negative power");
    return pow(mpq_class(base.get_den(), base.get_num()), -exponent);
  }
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out.canonicalize();
  return out;
}

}  // namespace qcartan
