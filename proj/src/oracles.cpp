#include "qcartan/oracles.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "qcartan/numtheory.hpp"

namespace qcartan::oracle {

mpz_class partition_count(int n) {
  if (n < 0) return 0;
  std::vector<mpz_class> p(static_cast<size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      int sign = (k % 2) ? 1 : -1;
      s += sign * p[static_cast<size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<size_t>(m - g2)];
    }
    p[static_cast<size_t>(m)] = s;
  }
  return p[static_cast<size_t>(n)];
}

std::vector<std::vector<int>> partitions_naive(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

mpz_class M_entry_by_maps(const Partition& lambda, const Partition& mu) {
  std::vector<int> L = lambda.parts(), U = mu.parts();
  if (lambda.size() != mu.size()) return 0;
  if (U.empty()) return L.empty() ? 1 : 0;
  if (L.empty()) return 0;
  std::vector<size_t> f(U.size(), 0);
  mpz_class count = 0;
  while (true) {
    std::vector<int> sums(L.size(), 0);
    for (size_t j = 0; j < U.size(); ++j) sums[f[j]] += U[j];
    if (sums == L) ++count;
    size_t j = 0;
    while (j < f.size() && ++f[j] == L.size()) f[j++] = 0;
    if (j == f.size()) break;
  }
  return count;
}

bool is_core_by_hooks(int ell, const Partition& lambda) {
  std::vector<int> rows = lambda.parts();
  if (rows.empty()) return true;
  std::vector<int> cols(static_cast<size_t>(rows[0]), 0);
  for (int r : rows)
    for (int j = 0; j < r; ++j) ++cols[static_cast<size_t>(j)];
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - j - 1;
      int leg = cols[static_cast<size_t>(j)] - static_cast<int>(i) - 1;
      if ((arm + leg + 1) % ell == 0) return false;
    }
  return true;
}

namespace {

int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

LaurentPoly cyclotomic_by_moebius(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_by_moebius: n must be positive");
  LaurentPoly num(1L), den(1L);
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = moebius(n / d);
    LaurentPoly f = LaurentPoly::monomial(static_cast<int>(d)) - LaurentPoly(1L);
    if (mu == 1) num *= f;
    if (mu == -1) den *= f;
  }
  return divexact(num, den);
}

LaurentPoly qint_by_sum(long n, long m) {
  if (n < 0) return -qint_by_sum(-n, m);
  LaurentPoly s;
  for (long k = 0; k < n; ++k) s += LaurentPoly::monomial(static_cast<int>(m * (n - 1 - 2 * k)));
  return s;
}

namespace {

template <class T>
T cofactor_det(const Matrix<T>& m) {
  size_t n = m.rows();
  if (n == 0) return T(1L);
  if (n == 1) return m(0, 0);
  T total{};
  for (size_t c = 0; c < n; ++c) {
    if (m(0, c) == T{}) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    T term = m(0, c) * cofactor_det(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace

LaurentPoly det_by_cofactors(const LMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det_by_cofactors: not square");
  return cofactor_det(m);
}

mpq_class det_by_cofactors(const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det_by_cofactors: not square");
  return cofactor_det(m);
}

LaurentPoly sym_power_entry(const LMatrix& A, const std::vector<int>& I, const std::vector<int>& J) {
  size_t n = A.rows();
  using Mono = std::vector<int>;
  std::map<Mono, LaurentPoly> poly{{Mono(n, 0), LaurentPoly(1L)}};
  for (int jk : J) {
    std::map<Mono, LaurentPoly> next;
    for (const auto& [mono, c] : poly)
      for (size_t i = 0; i < n; ++i) {
        const LaurentPoly& a = A(i, static_cast<size_t>(jk));
        if (a.is_zero()) continue;
        Mono e = mono;
        ++e[i];
        next[e] += c * a;
      }
    poly = std::move(next);
  }
  Mono target(n, 0);
  for (int i : I) ++target[static_cast<size_t>(i)];
  auto it = poly.find(target);
  return it == poly.end() ? LaurentPoly() : it->second;
}

long val_of_power_difference(long x, long y, long n, long p) {
  mpz_class a, b;
  mpz_set_si(a.get_mpz_t(), x);
  mpz_set_si(b.get_mpz_t(), y);
  mpz_class xn, yn;
  mpz_pow_ui(xn.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(yn.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class d = xn - yn;
  if (d == 0) throw std::domain_error("val_of_power_difference: zero");
  long v = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

}  // namespace qcartan::oracle
