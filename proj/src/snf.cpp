#include "qcartan/snf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "local_snf.hpp"
#include "qcartan/numtheory.hpp"

namespace qcartan {

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::IntegersInverted: return "Z[1/" + std::to_string(param) + "]";
    case Kind::RationalLaurent: return "Q[v,v^-1]";
    case Kind::PLocal: return "Z_(" + std::to_string(param) + ")";
  }
  return "?";
}

size_t InvariantFactors::rank() const {
  switch (ring.kind) {
    case RingSpec::Kind::RationalLaurent: return laurent.size();
    case RingSpec::Kind::PLocal: return exponents.size();
    default: return integers.size();
  }
}

std::vector<std::string> InvariantFactors::serialize() const {
  std::vector<std::string> out;
  switch (ring.kind) {
    case RingSpec::Kind::RationalLaurent:
      for (const auto& f : laurent) out.push_back(f.to_string());
      break;
    case RingSpec::Kind::PLocal:
      for (long e : exponents) {
        mpz_class x;
        mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(ring.param), static_cast<unsigned long>(e));
        out.push_back(x.get_str());
      }
      break;
    default:
      for (const auto& x : integers) out.push_back(x.get_str());
  }
  out.insert(out.end(), zeros, "0");
  return out;
}

bool InvariantFactors::is_chain() const {
  switch (ring.kind) {
    case RingSpec::Kind::RationalLaurent:
      for (size_t i = 1; i < laurent.size(); ++i)
        if (!divides(laurent[i - 1], laurent[i])) return false;
      return true;
    case RingSpec::Kind::PLocal:
      return std::is_sorted(exponents.begin(), exponents.end());
    default:
      for (size_t i = 1; i < integers.size(); ++i)
        if (!mpz_divisible_p(integers[i].get_mpz_t(), integers[i - 1].get_mpz_t())) return false;
      return true;
  }
}

mpz_class InvariantFactors::integer_product(size_t k) const {
  if (ring.kind == RingSpec::Kind::RationalLaurent) throw std::logic_error("integer_product: Laurent chain");
  if (k > rank()) return 0;
  if (ring.kind == RingSpec::Kind::PLocal) {
    long e = std::accumulate(exponents.begin(), exponents.begin() + static_cast<long>(k), 0L);
    mpz_class x;
    mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(ring.param), static_cast<unsigned long>(e));
    return x;
  }
  mpz_class x = 1;
  for (size_t i = 0; i < k; ++i) x *= integers[i];
  return x;
}

LaurentPoly InvariantFactors::laurent_product(size_t k) const {
  if (ring.kind != RingSpec::Kind::RationalLaurent) throw std::logic_error("laurent_product: not a Laurent chain");
  if (k > rank()) return {};
  LaurentPoly x(1L);
  for (size_t i = 0; i < k; ++i) x *= laurent[i];
  return x;
}

bool InvariantFactors::operator==(const InvariantFactors& o) const {
  return ring == o.ring && zeros == o.zeros && integers == o.integers && laurent == o.laurent &&
         exponents == o.exponents;
}

mpz_class strip_primes(const mpz_class& x, long N) {
  mpz_class out = abs(x);
  if (out == 0 || N <= 1) return out;
  for (long p : prime_divisors(N)) {
    mpz_class prime = p;
    mpz_remove(out.get_mpz_t(), out.get_mpz_t(), prime.get_mpz_t());
  }
  return out;
}

namespace {

// Euclidean elimination shared by Z and Q[v,v^-1]. Traits supply the size key used for
// pivoting, division with remainder, unit and divisibility tests, and optional row/column
// rescaling by units.
template <class T, class Traits>
std::pair<std::vector<T>, size_t> euclid_snf(Matrix<T> a) {
  size_t m = a.rows(), n = a.cols(), r = std::min(m, n);
  std::vector<T> diag;
  auto row_op = [&](size_t i, const T& q, size_t t) {
    for (size_t j = t; j < n; ++j)
      if (!Traits::zero(a(t, j))) a(i, j) -= q * a(t, j);
    Traits::rescale_row(a, i, t);
  };
  auto col_op = [&](size_t j, const T& q, size_t t) {
    for (size_t i = t; i < m; ++i)
      if (!Traits::zero(a(i, t))) a(i, j) -= a(i, t) * q;
    Traits::rescale_col(a, j, t);
  };
  for (size_t t = 0; t < r; ++t) {
    bool found = false;
    size_t pi = t, pj = t;
    typename Traits::Key best{};
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        if (Traits::zero(a(i, j))) continue;
        auto k = Traits::key(a(i, j));
        if (!found || k < best) {
          found = true;
          best = k;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);
    for (;;) {
      for (size_t i = t + 1; i < m; ++i) {
        if (Traits::zero(a(i, t))) continue;
        auto q = Traits::quotient(a(i, t), a(t, t));
        if (!Traits::zero(q)) row_op(i, q, t);
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (Traits::zero(a(t, j))) continue;
        auto q = Traits::quotient(a(t, j), a(t, t));
        if (!Traits::zero(q)) col_op(j, q, t);
      }
      // any leftover in row/column t is a remainder smaller than the pivot
      bool swapped = false;
      auto pk = Traits::key(a(t, t));
      size_t bi = t, bj = t;
      for (size_t i = t + 1; i < m; ++i)
        if (!Traits::zero(a(i, t)) && Traits::key(a(i, t)) < pk) {
          pk = Traits::key(a(i, t));
          bi = i;
          bj = t;
        }
      for (size_t j = t + 1; j < n; ++j)
        if (!Traits::zero(a(t, j)) && Traits::key(a(t, j)) < pk) {
          pk = Traits::key(a(t, j));
          bi = t;
          bj = j;
        }
      if (bi != t) {
        a.swap_rows(t, bi);
        swapped = true;
      } else if (bj != t) {
        a.swap_cols(t, bj);
        swapped = true;
      }
      if (swapped) continue;
      bool clear = true;
      for (size_t i = t + 1; i < m && clear; ++i) clear = Traits::zero(a(i, t));
      for (size_t j = t + 1; j < n && clear; ++j) clear = Traits::zero(a(t, j));
      if (!clear) continue;
      if (Traits::is_unit(a(t, t))) break;
      size_t bad = m;
      for (size_t i = t + 1; i < m && bad == m; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (!Traits::zero(a(i, j)) && !Traits::divides(a(t, t), a(i, j))) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (size_t j = t; j < n; ++j) a(t, j) += a(bad, j);
    }
    diag.push_back(Traits::normalize(a(t, t)));
  }
  return {diag, r - diag.size()};
}

struct IntTraits {
  using Key = mpz_class;
  static bool zero(const mpz_class& x) { return x == 0; }
  static Key key(const mpz_class& x) { return abs(x); }
  static mpz_class quotient(const mpz_class& a, const mpz_class& b) {
    // nearest-integer quotient keeps remainders small
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) > abs(b)) q += 1;
    return q;
  }
  static bool is_unit(const mpz_class& x) { return abs(x) == 1; }
  static bool divides(const mpz_class& b, const mpz_class& a) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()); }
  static mpz_class normalize(const mpz_class& x) { return abs(x); }
  static void rescale_row(ZMatrix&, size_t, size_t) {}
  static void rescale_col(ZMatrix&, size_t, size_t) {}
};

struct LaurentTraits {
  using Key = std::pair<int, size_t>;
  static bool zero(const LaurentPoly& x) { return x.is_zero(); }
  static Key key(const LaurentPoly& x) {
    size_t bits = 0;
    for (const auto& c : x.numerators()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return {x.breadth(), bits + mpz_sizeinbase(x.denominator().get_mpz_t(), 2)};
  }
  static LaurentPoly quotient(const LaurentPoly& a, const LaurentPoly& b) { return divrem(a, b).first; }
  static bool is_unit(const LaurentPoly& x) { return x.is_monomial(); }
  static bool divides(const LaurentPoly& b, const LaurentPoly& a) { return qcartan::divides(b, a); }
  static LaurentPoly normalize(const LaurentPoly& x) { return x.normalized(); }

  // divide a row or column by its rational content so coefficients stay small integers
  template <class Get>
  static void rescale(size_t count, Get get) {
    mpz_class g = 0, l = 1;
    for (size_t k = 0; k < count; ++k) {
      const LaurentPoly& f = get(k);
      if (f.is_zero()) continue;
      for (const auto& c : f.numerators()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      }
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.denominator().get_mpz_t());
    }
    if (g == 0 || (g == 1 && l == 1)) return;
    mpq_class s(l, g);
    s.canonicalize();
    for (size_t k = 0; k < count; ++k) get(k) *= s;
  }
  static void rescale_row(LMatrix& a, size_t i, size_t t) {
    rescale(a.cols() - t, [&](size_t k) -> LaurentPoly& { return a(i, t + k); });
  }
  static void rescale_col(LMatrix& a, size_t j, size_t t) {
    rescale(a.rows() - t, [&](size_t k) -> LaurentPoly& { return a(t + k, j); });
  }
};

InvariantFactors snf_integer(ZMatrix z, const RingSpec& ring) {
  auto [diag, zeros] = euclid_snf<mpz_class, IntTraits>(std::move(z));
  InvariantFactors out;
  out.ring = ring;
  out.zeros = zeros;
  for (auto& d : diag) out.integers.push_back(ring.kind == RingSpec::Kind::IntegersInverted ? strip_primes(d, ring.param) : d);
  return out;
}

// Scales each row of a rational matrix to integers using only units of Z[1/N].
ZMatrix integralize_rows(const QMatrix& m, long N) {
  ZMatrix z(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    if (strip_primes(l, N) != 1)
      throw std::invalid_argument("snf: entry with denominator " + l.get_str() + " is outside the ring");
    mpz_class g = 0;
    for (size_t j = 0; j < m.cols(); ++j) {
      z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z(i, j).get_mpz_t());
    }
    if (g != 0 && N > 1) {
      mpz_class unit = g / strip_primes(g, N);
      if (unit != 1)
        for (size_t j = 0; j < m.cols(); ++j) mpz_divexact(z(i, j).get_mpz_t(), z(i, j).get_mpz_t(), unit.get_mpz_t());
    }
  }
  return z;
}

InvariantFactors snf_plocal(QMatrix a, long p) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).get_den() % p == 0)
        throw std::invalid_argument("snf: entry " + a(i, j).get_str() + " is not p-integral");
  size_t m = a.rows(), n = a.cols(), r = std::min(m, n);
  InvariantFactors out;
  out.ring = RingSpec::p_local(p);
  for (size_t t = 0; t < r; ++t) {
    long best = -1;
    size_t pi = t, pj = t;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        auto v = val_p(a(i, j), p);
        if (v && (best < 0 || *v < best)) {
          best = *v;
          pi = i;
          pj = j;
        }
      }
    if (best < 0) break;
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);
    for (size_t i = t + 1; i < m; ++i) {
      if (a(i, t) == 0) continue;
      mpq_class f = a(i, t) / a(t, t);
      for (size_t j = t; j < n; ++j) a(i, j) -= f * a(t, j);
    }
    out.exponents.push_back(best);
  }
  out.zeros = r - out.exponents.size();
  return out;
}

std::vector<std::vector<size_t>> combinations(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  Matrix<T> s(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

}  // namespace

InvariantFactors snf(const QMatrix& m, const RingSpec& ring) {
  switch (ring.kind) {
    case RingSpec::Kind::Integers: return snf_integer(integralize_rows(m, 1), ring);
    case RingSpec::Kind::IntegersInverted:
      if (ring.param < 1) throw std::invalid_argument("snf: N must be positive");
      return snf_integer(integralize_rows(m, ring.param), ring);
    case RingSpec::Kind::PLocal:
      if (!is_prime(ring.param)) throw std::invalid_argument("snf: PLocal needs a prime");
      return snf_plocal(m, ring.param);
    case RingSpec::Kind::RationalLaurent: return snf(to_laurent(m), ring);
  }
  throw std::invalid_argument("snf: unknown ring");
}

InvariantFactors snf(const ZMatrix& m, const RingSpec& ring) { return snf(to_rational(m), ring); }

InvariantFactors snf(const LMatrix& m, const RingSpec& ring) {
  if (ring.kind != RingSpec::Kind::RationalLaurent) {
    QMatrix q(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_constant()) throw std::invalid_argument("snf: non-constant entry outside the ring");
        q(i, j) = m(i, j).coefficient(0);
      }
    return snf(q, ring);
  }
  if (auto f = detail::snf_by_localization(m)) return *f;
  return snf_laurent_euclidean(m);
}

InvariantFactors snf_laurent_euclidean(const LMatrix& m) {
  const RingSpec ring = RingSpec::rational_laurent();
  LMatrix work = m;
  for (size_t i = 0; i < work.rows(); ++i) LaurentTraits::rescale_row(work, i, 0);
  auto [diag, zeros] = euclid_snf<LaurentPoly, LaurentTraits>(std::move(work));
  InvariantFactors out;
  out.ring = ring;
  out.laurent = std::move(diag);
  out.zeros = zeros;
  return out;
}

InvariantFactors snf_cyclo_diagonal(const std::vector<CycloProduct>& diag) {
  std::map<long, std::vector<long>> exps;
  for (const auto& P : diag)
    for (auto [b, e] : P.factors()) exps[b];
  for (auto& [b, v] : exps) {
    for (const auto& P : diag) v.push_back(P.exponent(b));
    std::sort(v.begin(), v.end());
  }
  InvariantFactors out;
  out.ring = RingSpec::rational_laurent();
  for (size_t i = 0; i < diag.size(); ++i) {
    std::map<long, long> f;
    for (const auto& [b, v] : exps)
      if (v[i]) f[b] = v[i];
    out.laurent.push_back(CycloProduct(f).expand().normalized());
  }
  return out;
}

LaurentPoly determinant(const LMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
  size_t n = m.rows();
  if (n == 0) return LaurentPoly(1L);
  LMatrix a = m;
  LaurentPoly prev(1L);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return {};
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

mpz_class gcd_minors_oracle(const QMatrix& m, const RingSpec& ring, size_t k) {
  if (k > std::min(m.rows(), m.cols())) throw std::invalid_argument("gcd_minors_oracle: k too large");
  if (k == 0) return 1;
  auto rows = combinations(m.rows(), k), cols = combinations(m.cols(), k);
  if (ring.kind == RingSpec::Kind::PLocal) {
    long best = -1;
    for (const auto& r : rows)
      for (const auto& c : cols) {
        auto v = val_p(determinant(submatrix(m, r, c)), ring.param);
        if (v && (best < 0 || *v < best)) best = *v;
      }
    if (best < 0) return 0;
    mpz_class x;
    mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(ring.param), static_cast<unsigned long>(best));
    return x;
  }
  long N = ring.kind == RingSpec::Kind::IntegersInverted ? ring.param : 1;
  QMatrix z = to_rational(integralize_rows(m, N));
  mpz_class g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      mpq_class d = determinant(submatrix(z, r, c));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_num_mpz_t());
    }
  return strip_primes(g, N);
}

LaurentPoly gcd_minors_oracle(const LMatrix& m, size_t k) {
  if (k > std::min(m.rows(), m.cols())) throw std::invalid_argument("gcd_minors_oracle: k too large");
  if (k == 0) return LaurentPoly(1L);
  LaurentPoly g;
  for (const auto& r : combinations(m.rows(), k))
    for (const auto& c : combinations(m.cols(), k)) {
      g = gcd(g, determinant(submatrix(m, r, c)));
      if (g.is_monomial()) return g;
    }
  return g;
}

Specialized specialize(const LMatrix& m, long a, long b) {
  if (a == 0) throw std::domain_error("specialize: theta must be nonzero");
  if (b == 0) throw std::domain_error("specialize: zero denominator");
  mpq_class theta(a);
  theta /= b;
  theta.canonicalize();
  mpz_class N = abs(theta.get_num() * theta.get_den());
  return {specialize_entries(m, theta), theta, N.get_si()};
}

bool equiv(const QMatrix& a, const QMatrix& b, const RingSpec& ring) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("equiv: dimension mismatch");
  return snf(a, ring) == snf(b, ring);
}

bool equiv(const LMatrix& a, const LMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("equiv: dimension mismatch");
  return snf(a) == snf(b);
}

}  // namespace qcartan
