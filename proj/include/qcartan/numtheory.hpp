#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <vector>

namespace qcartan {

using PrimeSet = std::set<long>;

bool is_prime(long n);

/// Prime divisors of |n| in increasing order (empty for n = +-1).
std::vector<long> prime_divisors(long n);
std::vector<long> prime_divisors(const mpz_class& n);

/// Positive divisors of n >= 1 in increasing order.
std::vector<long> divisors(long n);

long euler_phi(long n);

/// p-adic valuation of a nonzero integer.
long val_p(long n, long p);
long val_p(const mpz_class& n, long p);

/// p-adic valuation on Q; std::nullopt stands for +infinity (x == 0).
std::optional<long> val_p(const mpq_class& x, long p);

/// The Pi-part n_Pi = prod_{p in Pi} p^{val_p(n)} of n >= 1.
long pi_part(long n, const PrimeSet& primes);
mpz_class pi_part(const mpz_class& n, const PrimeSet& primes);

/// The Pi'-part n / n_Pi.
long pi_complement_part(long n, const PrimeSet& primes);

inline long p_part(long n, long p) { return pi_part(n, PrimeSet{p}); }
inline long p_prime_part(long n, long p) { return pi_complement_part(n, PrimeSet{p}); }

mpz_class factorial(long n);

/// Exact power of a rational with integer (possibly negative) exponent.
mpq_class pow(const mpq_class& base, long exponent);

}  // namespace qcartan
