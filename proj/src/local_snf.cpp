#include "local_snf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>

#include "qcartan/cyclotomic.hpp"
#include "qcartan/numtheory.hpp"

namespace qcartan::detail {
namespace {

using ZVec = std::vector<mpz_class>;

// Residue field Q[y]/(mod) for a monic integer polynomial of degree d.
struct Field {
  ZVec mod;
  size_t d = 1;

  explicit Field(const LaurentPoly& monic) {
    const auto& c = monic.numerators();
    mod.assign(static_cast<size_t>(monic.low_degree()), 0);
    mod.insert(mod.end(), c.begin(), c.end());
    d = mod.size() - 1;
  }

  void reduce(ZVec& c) const {
    for (size_t k = c.size(); k-- > d;) {
      if (c[k] == 0) continue;
      const mpz_class t = c[k];
      for (size_t i = 0; i < d; ++i)
        if (mod[i] != 0) mpz_submul(c[k - d + i].get_mpz_t(), t.get_mpz_t(), mod[i].get_mpz_t());
      c[k] = 0;
    }
    c.resize(d);
  }
};

// Truncated power series in x with coefficients in the field: block k of `c` holds the
// coefficient of x^k, all over the common denominator `den`.
struct Series {
  ZVec c;
  mpz_class den = 1;
};

struct Ctx {
  const Field& F;
  size_t P;

  size_t d() const { return F.d; }

  Series zero() const { return {ZVec(P * F.d), 1}; }

  bool block_zero(const Series& s, size_t k) const {
    for (size_t i = 0; i < F.d; ++i)
      if (s.c[k * F.d + i] != 0) return false;
    return true;
  }

  size_t valuation(const Series& s) const {
    for (size_t k = 0; k < P; ++k)
      if (!block_zero(s, k)) return k;
    return P;
  }

  size_t bits(const Series& s) const {
    size_t b = mpz_sizeinbase(s.den.get_mpz_t(), 2);
    for (const auto& x : s.c)
      if (x != 0) b += mpz_sizeinbase(x.get_mpz_t(), 2);
    return b;
  }

  void normalize(Series& s) const {
    mpz_class g = s.den;
    bool any = false;
    for (const auto& x : s.c) {
      if (x == 0) continue;
      any = true;
      if (g == 1) break;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (!any) {
      s.den = 1;
      return;
    }
    if (g == 1) return;
    for (auto& x : s.c)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(s.den.get_mpz_t(), s.den.get_mpz_t(), g.get_mpz_t());
  }

  Series mul(const Series& a, const Series& b) const {
    const size_t d = F.d;
    size_t va = valuation(a), vb = valuation(b);
    Series out = zero();
    if (va + vb >= P) return out;
    std::vector<char> nza(P), nzb(P);
    for (size_t k = 0; k < P; ++k) {
      nza[k] = !block_zero(a, k);
      nzb[k] = !block_zero(b, k);
    }
    ZVec tmp(2 * d - 1);
    for (size_t k = va + vb; k < P; ++k) {
      for (auto& x : tmp) x = 0;
      bool touched = false;
      for (size_t s = va; s + vb <= k; ++s) {
        if (!nza[s] || !nzb[k - s]) continue;
        touched = true;
        const mpz_class* x = &a.c[s * d];
        const mpz_class* y = &b.c[(k - s) * d];
        for (size_t i = 0; i < d; ++i) {
          if (x[i] == 0) continue;
          for (size_t j = 0; j < d; ++j)
            if (y[j] != 0) mpz_addmul(tmp[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
        }
      }
      if (!touched) continue;
      F.reduce(tmp);
      for (size_t i = 0; i < d; ++i) out.c[k * d + i].swap(tmp[i]);
      tmp.resize(2 * d - 1);
    }
    out.den = a.den * b.den;
    normalize(out);
    return out;
  }

  // a -= b
  void sub(Series& a, const Series& b) const {
    if (a.den == b.den) {
      for (size_t i = 0; i < a.c.size(); ++i)
        if (b.c[i] != 0) a.c[i] -= b.c[i];
    } else {
      for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] != 0) a.c[i] *= b.den;
        if (b.c[i] != 0) mpz_submul(a.c[i].get_mpz_t(), b.c[i].get_mpz_t(), a.den.get_mpz_t());
      }
      a.den *= b.den;
    }
    normalize(a);
  }

  // divide by x^k, padding with zeros
  Series shift_down(const Series& s, size_t k) const {
    Series out = zero();
    for (size_t i = k * F.d; i < s.c.size(); ++i) out.c[i - k * F.d] = s.c[i];
    out.den = s.den;
    return out;
  }

  Series inverse(const Series& u) const;
};

// Dense rational polynomials in y, used only to invert field elements.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::pair<QPoly, QPoly> qdivrem(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    size_t s = a.size() - b.size();
    mpq_class t = a.back() / b.back();
    q[s] = t;
    for (size_t i = 0; i < b.size(); ++i) a[s + i] -= t * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// s with s*a = 1 modulo the field polynomial
QPoly field_inverse(const QPoly& a, const Field& F) {
  QPoly m(F.mod.begin(), F.mod.end());
  QPoly r0 = m, r1 = a, s0, s1{mpq_class(1)};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = qdivrem(r0, r1);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::logic_error("field_inverse: element not invertible");
  for (auto& x : s0) x /= r0[0];
  auto [q, r] = qdivrem(s0, m);
  return r;
}

Series Ctx::inverse(const Series& u) const {
  const size_t d = F.d;
  QPoly u0(d);
  for (size_t i = 0; i < d; ++i) u0[i] = mpq_class(u.c[i], u.den);
  QPoly w0 = field_inverse(u0, F);
  Series w = zero();
  mpz_class l = 1;
  for (const auto& x : w0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (size_t i = 0; i < w0.size(); ++i) w.c[i] = w0[i].get_num() * (l / w0[i].get_den());
  w.den = l;
  normalize(w);
  // Newton iteration w <- w (2 - u w)
  for (size_t prec = 1; prec < P; prec *= 2) {
    Series t = mul(u, w);
    for (auto& x : t.c) x = -x;
    t.c[0] += 2 * t.den;
    normalize(t);
    w = mul(w, t);
  }
  return w;
}

// Local Smith valuations by full-pivot elimination; nullopt if precision P was insufficient.
std::optional<std::vector<long>> local_elimination(std::vector<std::vector<Series>> a, const Ctx& cx) {
  size_t r = a.size();
  std::vector<long> vals;
  for (size_t t = 0; t < r; ++t) {
    size_t best = cx.P, bi = t, bj = t, bbits = 0;
    for (size_t i = t; i < r; ++i)
      for (size_t j = t; j < r; ++j) {
        size_t v = cx.valuation(a[i][j]);
        if (v > best) continue;
        size_t b = cx.bits(a[i][j]);
        if (v < best || b < bbits) {
          best = v;
          bi = i;
          bj = j;
          bbits = b;
        }
      }
    if (best >= cx.P) return std::nullopt;
    std::swap(a[t], a[bi]);
    for (size_t i = t; i < r; ++i) std::swap(a[i][t], a[i][bj]);
    vals.push_back(static_cast<long>(best));
    Series inv = cx.inverse(cx.shift_down(a[t][t], best));
    for (size_t i = t + 1; i < r; ++i) {
      if (cx.valuation(a[i][t]) >= cx.P) continue;
      Series f = cx.mul(cx.shift_down(a[i][t], best), inv);
      for (size_t j = t + 1; j < r; ++j) {
        if (cx.valuation(a[t][j]) >= cx.P) continue;
        cx.sub(a[i][j], cx.mul(f, a[t][j]));
      }
    }
    a[t].clear();
  }
  return vals;
}

using Builder = std::function<std::vector<std::vector<Series>>(const Ctx&)>;

std::optional<std::vector<long>> valuations_adaptive(const Field& F, const Builder& build, size_t pmax) {
  for (size_t P = 4;; P *= 2) {
    Ctx cx{F, P};
    if (auto v = local_elimination(build(cx), cx)) return v;
    if (P > pmax) return std::nullopt;
  }
}

struct RowWindow {
  std::vector<int> lo, hi;
};

RowWindow row_window(const LMatrix& m) {
  RowWindow w;
  for (size_t i = 0; i < m.rows(); ++i) {
    int lo = 0, hi = 0;
    bool any = false;
    for (size_t j = 0; j < m.cols(); ++j) {
      const auto& f = m(i, j);
      if (f.is_zero()) continue;
      lo = any ? std::min(lo, f.low_degree()) : f.low_degree();
      hi = any ? std::max(hi, f.high_degree()) : f.high_degree();
      any = true;
    }
    if (!any) throw std::logic_error("row_window: zero row");
    w.lo.push_back(lo);
    w.hi.push_back(hi);
  }
  return w;
}

// Expansion at v = 0 (at_infinity = false) or in x = 1/v (at_infinity = true), rows scaled by units.
Builder builder_at_pole(const LMatrix& m, const RowWindow& w, bool at_infinity) {
  return [&m, &w, at_infinity](const Ctx& cx) {
    size_t r = m.rows();
    std::vector<std::vector<Series>> a(r, std::vector<Series>(r));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) {
        Series s = cx.zero();
        const auto& f = m(i, j);
        if (!f.is_zero()) {
          const auto& num = f.numerators();
          for (size_t k = 0; k < cx.P; ++k) {
            long e = at_infinity ? w.hi[i] - static_cast<long>(k) : w.lo[i] + static_cast<long>(k);
            long idx = e - f.low_degree();
            if (idx >= 0 && idx < static_cast<long>(num.size())) s.c[k] = num[static_cast<size_t>(idx)];
          }
          s.den = f.denominator();
          cx.normalize(s);
        }
        a[i][j] = std::move(s);
      }
    return a;
  };
}

// Taylor expansion in x = v - zeta for a primitive b-th root of unity zeta.
Builder builder_at_root(const LMatrix& m, const RowWindow& w, long b, const Field& F) {
  auto pw = std::make_shared<std::vector<ZVec>>();
  ZVec cur(F.d);
  cur[0] = 1;
  for (long m2 = 0; m2 < b; ++m2) {
    ZVec red = cur;
    F.reduce(red);
    pw->push_back(red);
    ZVec next(F.d + 1);
    for (size_t i = 0; i < F.d; ++i) next[i + 1] = red[i];
    cur = next;
  }
  return [&m, &w, b, pw](const Ctx& cx) {
    size_t r = m.rows(), d = cx.d();
    std::vector<std::vector<Series>> a(r, std::vector<Series>(r));
    mpz_class bin;
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) {
        Series s = cx.zero();
        const auto& f = m(i, j);
        if (!f.is_zero()) {
          const auto& num = f.numerators();
          for (size_t t = 0; t < num.size(); ++t) {
            if (num[t] == 0) continue;
            unsigned long jj = static_cast<unsigned long>(f.low_degree() + static_cast<long>(t) - w.lo[i]);
            for (unsigned long k = 0; k < cx.P && k <= jj; ++k) {
              mpz_bin_uiui(bin.get_mpz_t(), jj, k);
              bin *= num[t];
              const ZVec& z = (*pw)[(jj - k) % static_cast<unsigned long>(b)];
              for (size_t q = 0; q < d; ++q)
                if (z[q] != 0) mpz_addmul(s.c[k * d + q].get_mpz_t(), bin.get_mpz_t(), z[q].get_mpz_t());
            }
          }
          s.den = f.denominator();
          cx.normalize(s);
        }
        a[i][j] = std::move(s);
      }
    return a;
  };
}

// ---- modular screen: det(m)(zeta) mod q for q = 1 mod b ----

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

u64 powmod(u64 a, u64 e, u64 q) {
  u64 r = 1 % q;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

// inverse if gcd(a, q) = 1
std::optional<u64> invmod(u64 a, u64 q) {
  __int128 t = 0, nt = 1, r = q, nr = a;
  while (nr != 0) {
    __int128 qq = r / nr;
    __int128 tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += q;
  return static_cast<u64>(t);
}

u64 mod_of(const mpz_class& x, u64 q) { return mpz_fdiv_ui(x.get_mpz_t(), q); }

// false only when det(m) certainly does not vanish at a primitive b-th root of unity,
// i.e. Phi_b does not divide det(m)
bool may_vanish_at_root(const LMatrix& m, long b) {
  const LaurentPoly& phi = cyclotomic(b);
  mpz_class q = mpz_class(1) << 61;
  q = (q / b + 1) * b + 1;
  while (mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) q += b;
  u64 Q = q.get_ui();
  u64 zeta = 0;
  for (u64 g = 2; g < 1000 && zeta == 0; ++g) {
    u64 z = powmod(g, (Q - 1) / static_cast<u64>(b), Q);
    u64 acc = 0;
    const auto& c = phi.numerators();
    for (size_t k = c.size(); k-- > 0;) acc = (mulmod(acc, z, Q) + mod_of(c[k], Q)) % Q;
    if (acc == 0) zeta = z;
  }
  if (zeta == 0) return true;
  std::vector<u64> zp(static_cast<size_t>(b));
  for (long k = 0; k < b; ++k) zp[static_cast<size_t>(k)] = powmod(zeta, static_cast<u64>(k), Q);
  size_t r = m.rows();
  std::vector<std::vector<u64>> a(r, std::vector<u64>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const auto& f = m(i, j);
      if (f.is_zero()) continue;
      u64 acc = 0;
      const auto& num = f.numerators();
      for (size_t t = 0; t < num.size(); ++t) {
        if (num[t] == 0) continue;
        long e = ((f.low_degree() + static_cast<long>(t)) % b + b) % b;
        acc = (acc + mulmod(mod_of(num[t], Q), zp[static_cast<size_t>(e)], Q)) % Q;
      }
      auto dinv = invmod(mod_of(f.denominator(), Q), Q);
      if (!dinv) return true;
      a[i][j] = mulmod(acc, *dinv, Q);
    }
  for (size_t t = 0; t < r; ++t) {
    size_t p = t;
    while (p < r && a[p][t] == 0) ++p;
    if (p == r) return true;
    std::swap(a[t], a[p]);
    auto inv = invmod(a[t][t], Q);
    if (!inv) return true;
    for (size_t i = t + 1; i < r; ++i) {
      if (a[i][t] == 0) continue;
      u64 f = mulmod(a[i][t], *inv, Q);
      for (size_t j = t; j < r; ++j) a[i][j] = (a[i][j] + Q - mulmod(f, a[t][j], Q)) % Q;
    }
  }
  return false;
}

// phi(n) > n / (e^gamma lnln n + 3 / lnln n) for n >= 3
bool phi_certainly_exceeds(long b, long R) {
  if (b < 3) return false;
  double ll = std::log(std::log(static_cast<double>(b)));
  if (ll <= 0) return false;
  return static_cast<double>(b) / (1.7811 * ll + 3.0 / ll) > static_cast<double>(R) + 1;
}

bool has_zero_row_or_col(const LMatrix& m) {
  for (size_t i = 0; i < m.rows(); ++i) {
    bool z = true;
    for (size_t j = 0; j < m.cols() && z; ++j) z = m(i, j).is_zero();
    if (z) return true;
  }
  for (size_t j = 0; j < m.cols(); ++j) {
    bool z = true;
    for (size_t i = 0; i < m.rows() && z; ++i) z = m(i, j).is_zero();
    if (z) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<long>> local_valuations_at_cyclotomic(const LMatrix& m, long b) {
  if (!m.square()) throw std::invalid_argument("local_valuations_at_cyclotomic: matrix not square");
  if (m.rows() == 0) return std::vector<long>{};
  if (has_zero_row_or_col(m)) return std::nullopt;
  RowWindow w = row_window(m);
  size_t window = 0;
  for (size_t i = 0; i < m.rows(); ++i) window += static_cast<size_t>(w.hi[i] - w.lo[i]);
  Field F(cyclotomic(b));
  return valuations_adaptive(F, builder_at_root(m, w, b, F), window / F.d + 1);
}

std::optional<InvariantFactors> snf_by_localization(const LMatrix& m) {
  if (!m.square()) return std::nullopt;
  InvariantFactors out;
  out.ring = RingSpec::rational_laurent();
  size_t r = m.rows();
  if (r == 0) return out;
  if (has_zero_row_or_col(m)) return std::nullopt;

  RowWindow w = row_window(m);
  size_t window = 0;
  for (size_t i = 0; i < r; ++i) window += static_cast<size_t>(w.hi[i] - w.lo[i]);
  Field Fy(LaurentPoly::v());
  auto v0 = valuations_adaptive(Fy, builder_at_pole(m, w, false), window + 1);
  if (!v0) return std::nullopt;
  auto vinf = valuations_adaptive(Fy, builder_at_pole(m, w, true), window + 1);
  if (!vinf) return std::nullopt;
  long lo = 0, hi = 0;
  for (size_t i = 0; i < r; ++i) {
    lo += w.lo[i] + (*v0)[i];
    hi += w.hi[i] - (*vinf)[i];
  }
  long R = hi - lo;  // breadth of det(m)

  std::map<long, std::vector<long>> local;
  for (long b = 1; R > 0; ++b) {
    if (phi_certainly_exceeds(b, R)) return std::nullopt;
    long ph = euler_phi(b);
    if (ph > R) continue;
    if (!may_vanish_at_root(m, b)) continue;
    Field F(cyclotomic(b));
    auto vals = valuations_adaptive(F, builder_at_root(m, w, b, F), static_cast<size_t>(R / ph) + 1);
    if (!vals) return std::nullopt;
    long e = 0;
    for (long x : *vals) e += x;
    if (e == 0) continue;
    R -= ph * e;
    if (R < 0) return std::nullopt;
    local[b] = std::move(*vals);
  }

  for (size_t i = 0; i < r; ++i) {
    LaurentPoly d(1L);
    for (const auto& [b, vals] : local)
      if (vals[i] > 0) d *= cyclotomic(b).pow(static_cast<unsigned>(vals[i]));
    out.laurent.push_back(d.normalized());
  }
  return out;
}

}  // namespace qcartan::detail
