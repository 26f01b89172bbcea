#include "qcartan/verify/properties.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "local_snf.hpp"
#include "qcartan/charmat.hpp"
#include "qcartan/invariants.hpp"
#include "qcartan/numtheory.hpp"
#include "qcartan/oracles.hpp"
#include "qcartan/snf.hpp"

namespace qcartan::verify {

namespace {

struct Outcome {
  long cases = 0;
  std::string failure;

  // Records one case; keeps the first failure message.
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failure.empty()) failure = what;
  }
};

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::string str(const Partition& p) { return p.to_string(); }

mpz_class zpow(long base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

bool p_integral(const mpq_class& x, long p) { return !mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)); }

long vp_factorial(long m, long p) { return val_p(factorial(m), p); }

long random_unit_to(Rng& rng, long p, long lo, long hi) {
  long x;
  do x = uniform(rng, lo, hi);
  while (x == 0 || x % p == 0);
  return x;
}

LaurentPoly random_laurent(Rng& rng, int lo, int hi, long cmax) {
  std::map<int, mpq_class> t;
  for (int e = lo; e <= hi; ++e)
    if (uniform(rng, 0, 2) == 0) t[e] = uniform(rng, -cmax, cmax);
  return LaurentPoly::from_terms(t);
}

LaurentPoly random_unit_laurent(Rng& rng) {
  mpq_class c(uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 3));
  c.canonicalize();
  return LaurentPoly::monomial(static_cast<int>(uniform(rng, -2, 2)), c);
}

// Small elements of Z[v,v^-1]: zero, units and short quantum integers.
LaurentPoly random_A_entry(Rng& rng) {
  switch (uniform(rng, 0, 4)) {
    case 0: return LaurentPoly();
    case 1: return LaurentPoly::monomial(static_cast<int>(uniform(rng, -2, 2)), uniform(rng, 0, 1) ? 1 : -1);
    case 2: return qint(uniform(rng, -3, 4), uniform(rng, 1, 3));
    case 3: return qint(uniform(rng, 1, 3), 1) * LaurentPoly::monomial(static_cast<int>(uniform(rng, -1, 1)));
    default: return LaurentPoly(uniform(rng, -2, 2));
  }
}

LMatrix random_A_matrix(Rng& rng, size_t n) {
  LMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = random_A_entry(rng);
  return m;
}

QMatrix random_int_matrix(Rng& rng, size_t r, size_t c, long bound) {
  QMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, -bound, bound);
  // occasionally force a rank drop
  if (r >= 2 && uniform(rng, 0, 4) == 0) {
    size_t a = static_cast<size_t>(uniform(rng, 0, static_cast<long>(r) - 1)), b = (a + 1) % r;
    long k = uniform(rng, -2, 2);
    for (size_t j = 0; j < c; ++j) m(b, j) = m(a, j) * k;
  }
  return m;
}

// U diag(products of cyclotomics) V with U, V products of elementary matrices over Z[v,v^-1].
LMatrix random_cyclotomic_equivalent(Rng& rng, size_t n) {
  std::vector<LaurentPoly> d;
  for (size_t i = 0; i < n; ++i) {
    LaurentPoly x(1L);
    for (long k = uniform(rng, 0, 3); k > 0; --k) x *= cyclotomic(uniform(rng, 1, 12));
    d.push_back(x);
  }
  LMatrix m = LMatrix::diagonal(d);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    size_t a = static_cast<size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    size_t b = static_cast<size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (a == b) continue;
    LaurentPoly c = LaurentPoly::monomial(static_cast<int>(uniform(rng, -1, 1)), uniform(rng, -2, 2));
    if (uniform(rng, 0, 1)) {
      for (size_t j = 0; j < n; ++j) m(a, j) += c * m(b, j);
    } else {
      for (size_t i = 0; i < n; ++i) m(i, a) += c * m(i, b);
    }
  }
  return m;
}

template <class T>
Matrix<T> permuted(const Matrix<T>& m, const std::vector<size_t>& rp, const std::vector<size_t>& cp) {
  Matrix<T> out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rp[i], cp[j]);
  return out;
}

std::vector<size_t> random_perm(Rng& rng, size_t n) {
  std::vector<size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// ---- partitions ----

void prop_partition_enumeration(Outcome& o, int nmax) {
  for (int n = 0; n <= nmax; ++n) {
    const auto& ps = parts_all(n);
    o.expect(mpz_class(static_cast<unsigned long>(ps.size())) == oracle::partition_count(n),
             "|Par(" + std::to_string(n) + ")| disagrees with the pentagonal recurrence");
    std::set<std::vector<int>> got, want;
    for (const auto& p : ps) got.insert(p.parts());
    for (const auto& p : oracle::partitions_naive(n)) want.insert(p);
    o.expect(got == want, "Par(" + std::to_string(n) + ") differs from naive enumeration");
    for (size_t i = 1; i < ps.size(); ++i)
      o.expect(ps[i - 1].parts() > ps[i].parts(), "Par(" + std::to_string(n) + ") not lexicographically decreasing");
  }
}

void prop_glaisher_bijection(Outcome& o, int nmax) {
  for (int s = 2; s <= 5; ++s)
    for (int n = 0; n <= nmax; ++n) {
      auto rp = parts_filtered(PartitionFilter::regular(s), n);
      auto crp = parts_filtered(PartitionFilter::class_regular(s), n);
      const std::string tag = "s=" + std::to_string(s) + " n=" + std::to_string(n);
      o.expect(rp.size() == crp.size(), tag + ": |RP| != |CRP|");
      std::set<Partition> image;
      for (const auto& lam : rp) {
        Partition mu = glaisher(s, lam);
        o.expect(mu.size() == n && is_class_regular(s, mu), tag + ": image of " + str(lam) + " not class regular");
        o.expect(glaisher_inverse(s, mu) == lam, tag + ": inverse fails on " + str(lam));
        image.insert(mu);
      }
      o.expect(image.size() == rp.size(), tag + ": not injective");
    }
}

void prop_cut_red_block_multiset(Outcome& o, int nmax) {
  for (int ell = 2; ell <= 4; ++ell)
    for (int n = 0; n <= nmax; ++n) {
      std::map<Partition, long> lhs, rhs;
      for (const auto& bl : blocks(ell, n))
        for (int s = 0; s <= bl.weight; ++s) {
          auto copies = static_cast<long>(multipartitions(ell - 2, bl.weight - s).size());
          for (const auto& lam : parts_all(s)) lhs[cut_red(ell, lam).cut] += copies;
        }
      for (const auto& lam : parts_filtered(PartitionFilter::class_regular(ell), n)) rhs[cut_red(ell, lam).red] += 1;
      std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
      o.expect(lhs == rhs, "ell=" + std::to_string(ell) + " n=" + std::to_string(n) + ": multisets differ");
    }
}

void prop_p_adic_split(Outcome& o, int nmax) {
  for (int p : {2, 3})
    for (int n = 0; n <= nmax; ++n) {
      std::map<Partition, long> fibre;
      for (const auto& lam : parts_all(n)) {
        auto sp = p_adic_split(p, lam);
        bool ok = is_class_regular(p, sp.nu) && sp.nu.size() == n;
        for (const auto& [j, part] : sp.family)
          ok = ok && j % p != 0 && is_p_power_partition(p, part) && part.size() == sp.nu.mult(j);
        o.expect(ok, "p=" + std::to_string(p) + ": bad split of " + str(lam));
        o.expect(p_adic_join(p, sp.family) == lam, "p=" + std::to_string(p) + ": round trip fails on " + str(lam));
        ++fibre[sp.nu];
      }
      for (const auto& nu : parts_filtered(PartitionFilter::class_regular(p), n)) {
        long count = 1;
        for (auto [j, m] : nu.multiplicities()) count *= static_cast<long>(parts_filtered(PartitionFilter::pow(p), m).size());
        o.expect(fibre[nu] == count, "p=" + std::to_string(p) + ": fibre over " + str(nu) + " has the wrong size");
      }
    }
}

void prop_split_r_sizes(Outcome& o, int nmax) {
  for (int p : {2, 3})
    for (int r = 0; r <= 2; ++r)
      for (int n = 0; n <= nmax; ++n)
        for (const auto& lam : parts_filtered(PartitionFilter::pow(p), n)) {
          auto s = split_r(p, r, lam);
          long pr = zpow(p, static_cast<unsigned long>(r)).get_si();
          o.expect(s.lo.size() + pr * s.hi.size() == n && s.bar.size() == n, "split_r sizes fail on " + str(lam));
        }
}

void prop_beta_bijection(Outcome& o, int nmax) {
  for (int M = 1; M <= 3; ++M)
    for (int n = 0; n <= nmax; ++n) {
      std::set<Partition> image;
      for (const auto& lam : parts_all(n)) {
        Partition b = beta(M, lam);
        o.expect(b.size() == n, "beta(" + std::to_string(M) + ") changes the size of " + str(lam));
        image.insert(b);
      }
      o.expect(image.size() == parts_all(n).size(), "beta(" + std::to_string(M) + ") not injective on Par(" + std::to_string(n) + ")");
    }
}

void prop_core_by_hooks(Outcome& o, int nmax) {
  for (int ell = 2; ell <= 5; ++ell)
    for (int n = 0; n <= nmax; ++n)
      for (const auto& lam : parts_all(n))
        o.expect(is_core(ell, lam) == oracle::is_core_by_hooks(ell, lam), "is_core disagrees on " + str(lam));
}

// ---- quantum integers and cyclotomics ----

void prop_qint_factor_expansion(Outcome& o, int qmax) {
  for (long n = 1; n <= qmax; ++n)
    for (long m = 1; m <= qmax; ++m)
      o.expect(qint_factor(n, m).expand() == qint(n, m), "[" + std::to_string(n) + "]_" + std::to_string(m));
}

void prop_psi_bar_invariant(Outcome& o, int bmax) {
  for (long b = 3; b <= bmax; ++b) {
    LaurentPoly f = psi(b);
    o.expect(f.bar() == f && f.is_integral(), "psi(" + std::to_string(b) + ")");
  }
}

void prop_cyclotomic_by_moebius(Outcome& o, int bmax) {
  for (long b = 1; b <= bmax; ++b)
    o.expect(cyclotomic(b) == oracle::cyclotomic_by_moebius(b), "Phi_" + std::to_string(b));
}

void prop_qint_bar_and_value(Outcome& o, int qmax) {
  for (long n = 1; n <= qmax; ++n)
    for (long m = 1; m <= qmax; ++m) {
      LaurentPoly q = qint(n, m);
      o.expect(q.bar() == q, "bar [" + std::to_string(n) + "]_" + std::to_string(m));
      o.expect(q.eval_at(1, 1) == n, "[" + std::to_string(n) + "]_" + std::to_string(m) + " at v=1");
      if (n <= 12 && m <= 4) o.expect(q == oracle::qint_by_sum(n, m), "[n]_m differs from its defining sum");
    }
}

// ---- valuations ----

std::string vtag(long p, long a, long b, long n, long m) {
  return "p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b) + " n=" + std::to_string(n) +
         " m=" + std::to_string(m);
}

long power_diff_val(long a, long b, long e, long p) { return oracle::val_of_power_difference(a, b, e, p); }

void prop_valuation_case_one(Outcome& o, Rng& rng, int samples) {
  const long ps[] = {2, 3, 5};
  for (int i = 0; i < samples; ++i) {
    long p = ps[uniform(rng, 0, 2)];
    long a = random_unit_to(rng, p, -40, 40), b;
    do b = random_unit_to(rng, p, -40, 40);
    while ((a * a - b * b) % p != 0);
    long n = uniform(rng, 1, 30), m = uniform(rng, 1, 30);
    auto v = val_p(qint(n, m).eval_at(a, b), p);
    o.expect(v && *v == val_p(n, p), vtag(p, a, b, n, m));
  }
}

// p = 3 cannot occur: every unit squares to 1 mod 3.
void prop_valuation_case_two(Outcome& o, Rng& rng, int samples) {
  const long ps[] = {5, 7, 11, 13};
  for (int i = 0; i < samples; ++i) {
    long p = ps[uniform(rng, 0, 3)];
    long a, b;
    do {
      a = random_unit_to(rng, p, -30, 30);
      b = random_unit_to(rng, p, -30, 30);
    } while ((a * a - b * b) % p == 0);
    long t0 = 1;
    while (power_diff_val(a, b, 2 * t0, p) == 0) ++t0;
    long gamma = power_diff_val(a, b, 2 * t0, p);
    long n = t0 * uniform(rng, 1, 5);
    if (n < 2) n = 2 * t0;
    long s = uniform(rng, 0, 2);
    long m = zpow(p, static_cast<unsigned long>(s)).get_si();
    auto v = val_p(qint(n, m).eval_at(a, b), p);
    o.expect(v && *v == val_p(n, p) + s + gamma, vtag(p, a, b, n, m));
  }
}

void prop_valuation_case_three(Outcome& o, Rng& rng, int samples) {
  const long ps[] = {2, 3, 5, 7};
  for (int i = 0; i < samples; ++i) {
    long p = ps[uniform(rng, 0, 3)];
    long a = random_unit_to(rng, p, -30, 30), b = random_unit_to(rng, p, -30, 30);
    long n = uniform(rng, 1, 12);
    if (a * a == b * b || power_diff_val(a, b, 2 * n, p) != 0) {
      --i;
      continue;
    }
    long s = uniform(rng, 0, 2);
    long m = zpow(p, static_cast<unsigned long>(s)).get_si();
    auto v = val_p(qint(n, m).eval_at(a, b), p);
    o.expect(v && *v == 0, vtag(p, a, b, n, m));
  }
}

void prop_power_difference_valuation(Outcome& o, Rng& rng, int samples) {
  const long ps[] = {2, 3, 5, 7};
  for (int i = 0; i < samples; ++i) {
    long p = ps[uniform(rng, 0, 3)];
    long d = uniform(rng, p == 2 ? 2 : 1, 3);
    long y = random_unit_to(rng, p, -50, 50);
    long z = random_unit_to(rng, p, -5, 5);
    long x = y + zpow(p, static_cast<unsigned long>(d)).get_si() * z;
    if (x % p == 0) {
      --i;
      continue;
    }
    long n = uniform(rng, 1, 40);
    o.expect(power_diff_val(x, y, n, p) == d + val_p(n, p), vtag(p, x, y, n, d));
  }
}

// ---- invariants ----

void prop_red_cut_identities(Outcome& o, int nmax) {
  for (int ell = 2; ell <= 6; ++ell)
    for (int n = 0; n <= nmax; ++n)
      for (const auto& lam : parts_all(n)) {
        auto cr = cut_red(ell, lam);
        o.expect(r_graded(ell, lam) == I_graded(ell, cr.red), "r^v = I^v(Red) fails on " + str(lam));
        o.expect(I_graded(ell, lam) == I_graded(ell, cr.cut), "I^v = I^v(Cut) fails on " + str(lam));
      }
}

void prop_rho_reduction(Outcome& o, int nmax) {
  for (long p : {2L, 3L, 5L})
    for (int ell = 2; ell <= 6; ++ell)
      for (long z = 1; z <= 30; ++z) {
        if (z % p == 0) continue;
        int M = static_cast<int>(z / std::gcd(z, 2L * ell));
        for (int n = 0; n <= nmax; ++n)
          for (const auto& lam : parts_all(n)) {
            auto lhs = rho(p, z, I_graded(ell, lam));
            auto rhs = rho(p, z, I_local(ell, p, beta(M, lam)));
            o.expect(lhs == rhs, "p=" + std::to_string(p) + " ell=" + std::to_string(ell) + " z=" + std::to_string(z) +
                                     " lambda=" + str(lam));
          }
      }
}

std::vector<mpq_class> random_theta(Rng& rng, long p, int len, long min_val) {
  std::vector<mpq_class> t;
  for (int j = 0; j < len; ++j) {
    long e = min_val < 0 ? uniform(rng, -2, 2) : min_val + j + uniform(rng, 0, 1);
    mpq_class x(uniform(rng, -20, 20), random_unit_to(rng, p, 1, 15));
    x.canonicalize();
    t.push_back(x * pow(mpq_class(p), e));
  }
  return t;
}

int theta_len(long p, int n) {
  int len = 1;
  for (long q = p; q <= n; q *= p) ++len;
  return len;
}

void prop_a_p_theta(Outcome& o, Rng& rng, int samples, int nmax) {
  const long ps[] = {2, 3, 5};
  // (a) convolution
  for (int i = 0; i < samples / 4; ++i) {
    long p = ps[uniform(rng, 0, 2)];
    int n = static_cast<int>(uniform(rng, 0, std::min(nmax, 12)));
    int len = theta_len(p, n);
    auto t1 = random_theta(rng, p, len, -1), t2 = random_theta(rng, p, len, -1);
    std::vector<mpq_class> sum(len);
    for (int j = 0; j < len; ++j) sum[j] = t1[j] + t2[j];
    mpq_class conv = 0;
    for (int k = 0; k <= n; ++k) conv += a_p_theta(static_cast<int>(p), t1, k) * a_p_theta(static_cast<int>(p), t2, n - k);
    o.expect(a_p_theta(static_cast<int>(p), sum, n) == conv, "convolution identity, n=" + std::to_string(n));
  }
  // (b) high valuation
  for (int i = 0; i < samples / 4; ++i) {
    long p = ps[uniform(rng, 0, 2)];
    int n = static_cast<int>(uniform(rng, 0, std::min(2 * nmax, 16)));
    auto t = random_theta(rng, p, theta_len(p, n), 1);
    o.expect(p_integral(a_p_theta(static_cast<int>(p), t, n), p), "nu_p(theta_j) >= j+1, n=" + std::to_string(n));
  }
  // (c) theta_j = s c^{p^j}
  for (int i = 0; i < samples / 4; ++i) {
    long p = ps[uniform(rng, 0, 2)];
    int n = static_cast<int>(uniform(rng, 0, std::min(nmax, 12)));
    long s = uniform(rng, 1, 6);
    mpq_class c(uniform(rng, -9, 9), random_unit_to(rng, p, 1, 9));
    c.canonicalize();
    std::vector<mpq_class> t;
    for (int j = 0; j < theta_len(p, n); ++j) t.push_back(s * pow(c, zpow(p, static_cast<unsigned long>(j)).get_si()));
    o.expect(p_integral(a_p_theta(static_cast<int>(p), t, n), p), "theta_j = s c^{p^j}, n=" + std::to_string(n));
  }
}

void prop_b_theta_integral(Outcome& o, Rng& rng, int samples, int nmax) {
  int top = std::min(nmax, 6);
  for (int n = 0; n <= top; ++n) {
    o.expect(b_theta(LaurentPoly(1L), n) == LaurentPoly(1L), "b_1(n) = 1");
    for (int m = -2; m <= 2; ++m) {
      o.expect(b_theta(LaurentPoly::monomial(m), n) == LaurentPoly::monomial(m * n), "b_{v^m}(n) = v^{mn}");
      // generating function exp(-sum v^{km} t^k / k) = 1 - v^m t
      LaurentPoly want = n == 0 ? LaurentPoly(1L) : n == 1 ? -LaurentPoly::monomial(m) : LaurentPoly();
      o.expect(b_theta(-LaurentPoly::monomial(m), n) == want, "b_{-v^m}(n)");
    }
  }
  for (int i = 0; i < samples / 4 && top > 0; ++i) {
    LaurentPoly f = random_laurent(rng, -2, 2, 3);
    int n = static_cast<int>(uniform(rng, 1, top));
    try {
      LaurentPoly b = b_theta(f, n);
      o.expect(b.is_integral(), "b_theta(" + f.to_string() + ", " + std::to_string(n) + ")");
    } catch (const IntegralityViolation& e) {
      o.expect(false, e.what());
    }
  }
}

// ---- charmat ----

void prop_M_entries(Outcome& o, int nmax) {
  for (int n = 0; n <= nmax; ++n) {
    const auto& ps = parts_all(n);
    for (const auto& lam : ps) {
      mpz_class diag = 1;
      for (auto [k, m] : lam.multiplicities()) diag *= factorial(m);
      mpz_class Mll = M_entry(lam, lam);
      o.expect(Mll == diag, "M_{lambda,lambda} = prod m_j! fails on " + str(lam));
      long sum_lam = 0;
      for (auto [k, m] : lam.multiplicities()) sum_lam += m;
      for (const auto& mu : ps) {
        mpz_class x = M_entry(lam, mu);
        if (n <= 6) o.expect(x == oracle::M_entry_by_maps(lam, mu), "M differs from map count at " + str(lam) + "," + str(mu));
        o.expect(mpz_divisible_p(x.get_mpz_t(), Mll.get_mpz_t()) != 0, "M_{lambda,lambda} divides M_{lambda,mu}");
        if (x <= 0) continue;
        o.expect(lam.length() <= mu.length(), "length bound at " + str(lam) + "," + str(mu));
        if (lam == mu) continue;
        for (long p : {3L, 5L}) {
          long rhs = lam.length() - mu.length();
          for (auto [k, m] : mu.multiplicities()) rhs += vp_factorial(m, p);
          o.expect(val_p(x, p) > rhs, "p-adic estimate at " + str(lam) + "," + str(mu));
        }
      }
    }
  }
}

void prop_length_minus_factorial_valuations(Outcome& o, int nmax) {
  for (long p : {3L, 5L, 7L})
    for (int n = 1; n <= nmax; ++n)
      for (const auto& lam : parts_all(n)) {
        long x = lam.length();
        for (auto [k, m] : lam.multiplicities()) x -= vp_factorial(m, p);
        o.expect(x >= 1 && ((x == 1) == (lam.length() == 1)), "fails on " + str(lam) + " p=" + std::to_string(p));
      }
}

void prop_colored_conjugation_integral(Outcome& o, Rng& rng, int samples) {
  for (int i = 0; i < samples / 2; ++i) {
    int ell = static_cast<int>(uniform(rng, 1, 3));
    int d = static_cast<int>(uniform(rng, 0, 4));
    LMatrix A = random_A_matrix(rng, static_cast<size_t>(ell));
    auto S = S_d(A, d);
    auto Mc = M_colored(ell, d);
    o.expect(S.row_labels == Mc.row_labels, "S_d and M_colored index orders differ");
    LMatrix C = conjugate_by(to_rational(Mc.entries), S.entries);
    bool integral = true;
    for (size_t r = 0; r < C.rows(); ++r)
      for (size_t c = 0; c < C.cols(); ++c) integral = integral && C(r, c).is_integral();
    o.expect(integral, "M^-1 S_d(A) M not integral, ell=" + std::to_string(ell) + " d=" + std::to_string(d));
  }
}

void prop_local_conjugation_integral(Outcome& o, Rng& rng, int nmax) {
  for (long p : {2L, 3L})
    for (int ell = 2; ell <= 6; ++ell)
      for (int n = 0; n <= nmax; ++n) {
        long a, b;
        do {
          a = random_unit_to(rng, p, -25, 25);
          b = random_unit_to(rng, p, -25, 25);
        } while ((a * a - b * b) % p != 0);
        mpq_class theta(a, b);
        theta.canonicalize();
        long r = val_p(static_cast<long>(ell), p);
        auto N = N_matrix(static_cast<int>(p), n);
        QMatrix Nq = to_rational(N.entries);
        std::vector<mpq_class> d;
        for (const auto& lab : N.col_labels) {
          const auto& lam = std::get<Partition>(lab);
          mpq_class x = pow(mpq_class(p), -r * lam.length());
          for (auto [k, m] : lam.multiplicities()) {
            long j = val_p(static_cast<long>(k), p);
            long step = zpow(p, static_cast<unsigned long>(r + j)).get_si();
            x *= pow(qint_factor(ell, step).eval_at(theta), m);
          }
          d.push_back(x);
        }
        QMatrix C = Nq * QMatrix::diagonal(d) * inverse(Nq);
        bool ok = true;
        for (size_t i = 0; i < C.rows(); ++i)
          for (size_t j = 0; j < C.cols(); ++j) ok = ok && p_integral(C(i, j), p);
        o.expect(ok, "p=" + std::to_string(p) + " ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                         " theta=" + theta.get_str());
      }
}

void prop_sym_functorial(Outcome& o, Rng& rng, int samples) {
  for (int i = 0; i < samples / 8; ++i) {
    auto n = static_cast<size_t>(uniform(rng, 1, 3));
    int m = static_cast<int>(uniform(rng, 0, 3));
    LMatrix A = random_A_matrix(rng, n), B = random_A_matrix(rng, n);
    auto SA = sym_power(A, m), SB = sym_power(B, m), SAB = sym_power(A * B, m);
    o.expect(SAB.matrix == SA.matrix * SB.matrix, "Sym^m(AB) = Sym^m(A) Sym^m(B)");
    if (m <= 2)
      for (size_t r = 0; r < SA.basis.size(); ++r)
        for (size_t c = 0; c < SA.basis.size(); ++c)
          o.expect(SA.matrix(r, c) == oracle::sym_power_entry(A, SA.basis[r], SA.basis[c]), "Sym^m entry differs from expansion");
  }
}

// ---- exact SNF ----

void prop_snf_integer_minors(Outcome& o, Rng& rng, int samples) {
  for (int i = 0; i < samples; ++i) {
    auto r = static_cast<size_t>(uniform(rng, 1, 5)), c = static_cast<size_t>(uniform(rng, 1, 5));
    QMatrix m = random_int_matrix(rng, r, c, 9);
    RingSpec ring = uniform(rng, 0, 2) ? RingSpec::integers() : RingSpec::integers_inverted(uniform(rng, 2, 12));
    auto f = snf(m, ring);
    o.expect(f.is_chain(), "chain property over " + ring.to_string());
    for (size_t k = 1; k <= std::min(r, c); ++k)
      o.expect(f.integer_product(k) == gcd_minors_oracle(m, ring, k), "d_1...d_k vs gcd of minors over " + ring.to_string());
  }
}

void prop_snf_laurent_minors(Outcome& o, Rng& rng, int samples) {
  for (int i = 0; i < samples; ++i) {
    auto n = static_cast<size_t>(uniform(rng, 1, 3)), c = static_cast<size_t>(uniform(rng, 1, 3));
    LMatrix m(n, c);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < c; ++b) m(a, b) = random_laurent(rng, -1, 2, 3);
    auto f = snf(m);
    o.expect(f.is_chain(), "Laurent chain property");
    for (size_t k = 1; k <= std::min(n, c); ++k)
      o.expect(f.laurent_product(k) == gcd_minors_oracle(m, k), "Laurent d_1...d_k vs gcd of minors");
  }
}

void prop_snf_localization_vs_euclidean(Outcome& o, Rng& rng, int samples) {
  for (int i = 0; i < samples; ++i) {
    auto n = static_cast<size_t>(uniform(rng, 1, 4));
    LMatrix m = random_cyclotomic_equivalent(rng, n);
    auto loc = detail::snf_by_localization(m);
    o.expect(loc.has_value(), "localization declined a cyclotomic determinant");
    if (!loc) continue;
    o.expect(*loc == snf_laurent_euclidean(m), "localization and Euclidean elimination disagree");
    if (n <= 3)
      for (size_t k = 1; k <= n; ++k) o.expect(loc->laurent_product(k) == gcd_minors_oracle(m, k), "localization vs minors");
  }
}

void prop_snf_permutation_unit_invariance(Outcome& o, Rng& rng, int samples) {
  for (int i = 0; i < samples; ++i) {
    auto r = static_cast<size_t>(uniform(rng, 1, 4)), c = static_cast<size_t>(uniform(rng, 1, 4));
    QMatrix m = random_int_matrix(rng, r, c, 7);
    long N = uniform(rng, 2, 10);
    QMatrix pm = permuted(m, random_perm(rng, r), random_perm(rng, c));
    size_t row = static_cast<size_t>(uniform(rng, 0, static_cast<long>(r) - 1));
    QMatrix neg = pm, scaled = pm;
    for (size_t j = 0; j < c; ++j) {
      neg(row, j) = -neg(row, j);
      scaled(row, j) *= N;
    }
    o.expect(snf(m, RingSpec::integers()) == snf(neg, RingSpec::integers()), "Z: permutation and sign");
    o.expect(snf(m, RingSpec::integers_inverted(N)) == snf(scaled, RingSpec::integers_inverted(N)), "Z[1/N]: scaling by N");
  }
  for (int i = 0; i < samples / 4; ++i) {
    auto n = static_cast<size_t>(uniform(rng, 1, 3));
    LMatrix m = random_cyclotomic_equivalent(rng, n);
    LMatrix pm = permuted(m, random_perm(rng, n), random_perm(rng, n));
    size_t row = static_cast<size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    LaurentPoly u = random_unit_laurent(rng);
    for (size_t j = 0; j < n; ++j) pm(row, j) = pm(row, j) * u;
    o.expect(snf(m) == snf(pm), "Q[v,v^-1]: permutation and unit scaling");
  }
}

void prop_snf_bar_transpose(Outcome& o, int nmax) {
  for (int ell = 2; ell <= 3; ++ell)
    for (int d = 0; d <= std::min(nmax, ell == 2 ? 3 : 2); ++d) {
      LMatrix C = graded_cartan_lhs(ell, d).entries;
      LMatrix Ct = C.transpose().map<LaurentPoly>([](const LaurentPoly& x) { return x.bar(); });
      o.expect(snf(C) == snf(Ct), "bar-transpose, ell=" + std::to_string(ell) + " d=" + std::to_string(d));
    }
}

void prop_plocal_vs_integers(Outcome& o, Rng& rng, int samples) {
  for (int i = 0; i < samples; ++i) {
    auto r = static_cast<size_t>(uniform(rng, 1, 5)), c = static_cast<size_t>(uniform(rng, 1, 5));
    QMatrix m = random_int_matrix(rng, r, c, 12);
    long p = std::vector<long>{2, 3, 5}[static_cast<size_t>(uniform(rng, 0, 2))];
    auto z = snf(m, RingSpec::integers());
    auto l = snf(m, RingSpec::p_local(p));
    std::vector<long> want;
    for (const auto& d : z.integers) want.push_back(val_p(d, p));
    o.expect(l.exponents == want && l.zeros == z.zeros, "p-local exponents vs integer chain, p=" + std::to_string(p));
  }
}

}  // namespace

CheckReport run_property_suite(std::uint64_t seed, const PropertyBounds& bounds) {
  CheckReport report;
  report.task = "props";
  report.params = Json{{"seed", seed}, {"n", bounds.n}, {"qmax", bounds.qmax}, {"samples", bounds.samples}};
  auto t0 = std::chrono::steady_clock::now();

  const bool vacuous = bounds.n <= 0;
  const int n = vacuous ? -1 : bounds.n;
  const int wide = vacuous ? -1 : bounds.n + 4;
  const int nM = vacuous ? -1 : bounds.n + 1;
  const int q = vacuous ? 0 : bounds.qmax;
  const int s = vacuous ? 0 : bounds.samples;
  Rng rng(seed);

  using Body = std::function<void(Outcome&)>;
  const std::vector<std::pair<std::string, Body>> props = {
      {"partition_enumeration_matches_oracle", [&](Outcome& o) { prop_partition_enumeration(o, wide); }},
      {"glaisher_bijection", [&](Outcome& o) { prop_glaisher_bijection(o, wide); }},
      {"cut_red_block_multiset", [&](Outcome& o) { prop_cut_red_block_multiset(o, n); }},
      {"p_adic_split_round_trip", [&](Outcome& o) { prop_p_adic_split(o, n); }},
      {"split_r_sizes", [&](Outcome& o) { prop_split_r_sizes(o, n); }},
      {"beta_size_preserving_bijection", [&](Outcome& o) { prop_beta_bijection(o, n); }},
      {"core_test_matches_hook_lengths", [&](Outcome& o) { prop_core_by_hooks(o, wide); }},
      {"qint_factor_expansion", [&](Outcome& o) { prop_qint_factor_expansion(o, q); }},
      {"psi_bar_invariant", [&](Outcome& o) { prop_psi_bar_invariant(o, 5 * q); }},
      {"cyclotomic_matches_moebius", [&](Outcome& o) { prop_cyclotomic_by_moebius(o, 3 * q); }},
      {"qint_bar_invariant_and_value_at_one", [&](Outcome& o) { prop_qint_bar_and_value(o, q); }},
      {"valuation_when_p_divides_a2_minus_b2", [&](Outcome& o) { prop_valuation_case_one(o, rng, s); }},
      {"valuation_with_order_t0", [&](Outcome& o) { prop_valuation_case_two(o, rng, s); }},
      {"valuation_zero_when_p_coprime", [&](Outcome& o) { prop_valuation_case_three(o, rng, s); }},
      {"power_difference_valuation", [&](Outcome& o) { prop_power_difference_valuation(o, rng, s); }},
      {"red_cut_invariant_identities", [&](Outcome& o) { prop_red_cut_identities(o, n); }},
      {"rho_component_reduction", [&](Outcome& o) { prop_rho_reduction(o, n); }},
      {"a_p_theta_convolution_and_integrality", [&](Outcome& o) { prop_a_p_theta(o, rng, s, 2 * std::max(n, 0)); }},
      {"b_theta_integrality", [&](Outcome& o) { prop_b_theta_integral(o, rng, s, n); }},
      {"M_diagonal_divisibility_length_valuation", [&](Outcome& o) { prop_M_entries(o, nM); }},
      {"length_minus_factorial_valuations", [&](Outcome& o) { prop_length_minus_factorial_valuations(o, wide); }},
      {"colored_conjugation_integral", [&](Outcome& o) { prop_colored_conjugation_integral(o, rng, s); }},
      {"local_conjugation_p_integral", [&](Outcome& o) { prop_local_conjugation_integral(o, rng, n); }},
      {"sym_power_functorial", [&](Outcome& o) { prop_sym_functorial(o, rng, s); }},
      {"snf_integer_vs_minor_gcd", [&](Outcome& o) { prop_snf_integer_minors(o, rng, s); }},
      {"snf_laurent_vs_minor_gcd", [&](Outcome& o) { prop_snf_laurent_minors(o, rng, s / 2); }},
      {"snf_localization_vs_euclidean", [&](Outcome& o) { prop_snf_localization_vs_euclidean(o, rng, s / 2); }},
      {"snf_permutation_and_unit_invariance", [&](Outcome& o) { prop_snf_permutation_unit_invariance(o, rng, s / 2); }},
      {"snf_bar_transpose_invariance", [&](Outcome& o) { prop_snf_bar_transpose(o, n); }},
      {"snf_plocal_vs_integers", [&](Outcome& o) { prop_plocal_vs_integers(o, rng, s / 2); }},
  };

  std::vector<std::string> lhs, rhs;
  Json cases = Json::object(), millis = Json::object();
  for (const auto& [name, body] : props) {
    Outcome o;
    auto p0 = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      if (o.failure.empty()) o.failure = std::string("exception: ") + e.what();
    }
    millis[name] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - p0).count();
    cases[name] = o.cases;
    const bool ok = o.failure.empty();
    report.check(ok, ok ? name : name + ": " + o.failure);
    lhs.push_back(name + (ok ? ":pass" : ":fail"));
    rhs.push_back(name + ":pass");
  }
  report.extra["cases"] = cases;
  report.extra["property_millis"] = millis;
  report.set_sides(std::move(lhs), std::move(rhs));
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace qcartan::verify
