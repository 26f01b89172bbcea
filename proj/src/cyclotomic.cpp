#include "qcartan/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qcartan/numtheory.hpp"

namespace qcartan {

namespace {

std::mutex g_cyclo_mutex;
std::map<long, std::unique_ptr<LaurentPoly>> g_cyclo_cache;

// Exact quotient of integer polynomials (constant term first) by a monic divisor.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> f, const std::vector<mpz_class>& g) {
  size_t dg = g.size() - 1;
  std::vector<mpz_class> q(f.size() - dg);
  for (size_t k = f.size(); k-- > dg;) {
    const mpz_class c = f[k];
    if (c == 0) continue;
    q[k - dg] = c;
    for (size_t j = 0; j <= dg; ++j) mpz_submul(f[k - dg + j].get_mpz_t(), c.get_mpz_t(), g[j].get_mpz_t());
  }
  for (size_t j = 0; j < dg; ++j)
    if (f[j] != 0) throw std::logic_error("cyclotomic: inexact division");
  return q;
}

// Phi_n via Phi_{mp}(x) = Phi_m(x^p) when p | m, else Phi_m(x^p) / Phi_m(x).
const LaurentPoly& cyclotomic_locked(long n) {
  auto& slot = g_cyclo_cache[n];
  if (slot) return *slot;
  LaurentPoly f;
  if (n == 1) {
    f = LaurentPoly::from_dense(0, {mpz_class(-1), mpz_class(1)});
  } else {
    long p = prime_divisors(n).back();
    long m = n / p;
    LaurentPoly inflated = cyclotomic_locked(m).inflate(static_cast<int>(p));
    if (m % p == 0) {
      f = inflated;
    } else {
      f = LaurentPoly::from_dense(0, divide_monic(inflated.numerators(), cyclotomic_locked(m).numerators()));
    }
  }
  slot = std::make_unique<LaurentPoly>(std::move(f));
  return *slot;
}

}  // namespace

const LaurentPoly& cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  std::lock_guard lock(g_cyclo_mutex);
  return cyclotomic_locked(n);
}

LaurentPoly psi(long b) {
  if (b < 3) throw std::invalid_argument("psi: b must be at least 3");
  return cyclotomic(b).shifted(static_cast<int>(-euler_phi(b) / 2));
}

CycloProduct::CycloProduct(std::map<long, long> factors) {
  for (auto [b, e] : factors) {
    if (b < 3) throw std::invalid_argument("CycloProduct: factor index must be at least 3");
    if (e < 0) throw std::invalid_argument("CycloProduct: negative exponent");
    if (e) factors_[b] = e;
  }
}

long CycloProduct::exponent(long b) const {
  auto it = factors_.find(b);
  return it == factors_.end() ? 0 : it->second;
}

long CycloProduct::count() const {
  long n = 0;
  for (auto [b, e] : factors_) n += e;
  return n;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& o) {
  for (auto [b, e] : o.factors_) factors_[b] += e;
  return *this;
}

CycloProduct CycloProduct::pow(long e) const {
  if (e < 0) throw std::invalid_argument("CycloProduct::pow: negative exponent");
  CycloProduct out;
  if (e == 0) return out;
  for (auto [b, x] : factors_) out.factors_[b] = x * e;
  return out;
}

LaurentPoly CycloProduct::expand() const {
  LaurentPoly out(1L);
  for (auto [b, e] : factors_) out *= psi(b).pow(static_cast<unsigned>(e));
  return out;
}

mpq_class CycloProduct::eval_at(const mpq_class& theta) const {
  mpq_class out = 1;
  for (auto [b, e] : factors_) out *= qcartan::pow(psi(b).eval_at(theta), e);
  return out;
}

std::string CycloProduct::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (auto [b, e] : factors_) {
    if (!s.empty()) s += '*';
    s += "Psi" + std::to_string(b);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

CycloProduct qint_factor(long n, long m) {
  if (n < 1 || m < 1) throw std::invalid_argument("qint_factor: n and m must be positive");
  std::map<long, long> f;
  for (long b : divisors(2 * m * n))
    if (b >= 3 && (2 * m) % b != 0) f[b] = 1;
  return CycloProduct(std::move(f));
}

CycloProduct rho(long p, long z, const CycloProduct& P) {
  if (!is_prime(p)) throw std::invalid_argument("rho: p must be prime");
  if (z < 1 || z % p == 0) throw std::invalid_argument("rho: z must be positive and prime to p");
  std::map<long, long> f;
  for (auto [b, e] : P.factors())
    if (p_prime_part(b, p) == z) f[b] = e;
  return CycloProduct(std::move(f));
}

}  // namespace qcartan
