#include "qcartan/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace qcartan {

namespace {

mpz_class content_of(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool all_small(const std::vector<mpz_class>& v, size_t& max_bits) {
  max_bits = 0;
  for (const auto& c : v) {
    if (!c.fits_slong_p()) return false;
    max_bits = std::max(max_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return true;
}

void set_from_i128(mpz_class& out, __int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  auto hi = static_cast<uint64_t>(u >> 64), lo = static_cast<uint64_t>(u);
  mpz_set_ui(out.get_mpz_t(), hi);
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), 64);
  mpz_add_ui(out.get_mpz_t(), out.get_mpz_t(), lo);
  if (neg) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

std::vector<mpz_class> mul_dense(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  size_t ba, bb;
  size_t shorter = std::min(a.size(), b.size());
  size_t len_bits = 1;
  while ((size_t{1} << len_bits) < shorter + 1) ++len_bits;
  if (all_small(a, ba) && all_small(b, bb) && ba + bb + len_bits < 126) {
    std::vector<int64_t> sa(a.size()), sb(b.size());
    for (size_t i = 0; i < a.size(); ++i) sa[i] = a[i].get_si();
    for (size_t j = 0; j < b.size(); ++j) sb[j] = b[j].get_si();
    std::vector<__int128> acc(out.size(), 0);
    for (size_t i = 0; i < sa.size(); ++i) {
      if (!sa[i]) continue;
      __int128 x = sa[i];
      for (size_t j = 0; j < sb.size(); ++j) acc[i + j] += x * sb[j];
    }
    for (size_t k = 0; k < out.size(); ++k) set_from_i128(out[k], acc[k]);
    return out;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c) num_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) num_.push_back(c);
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) {
    num_.push_back(c.get_num());
    den_ = c.get_den();
  }
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpq_class& coeff) {
  LaurentPoly p(coeff);
  if (!p.is_zero()) p.lo_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, mpq_class>& terms) {
  LaurentPoly out;
  for (const auto& [e, c] : terms) out += monomial(e, c);
  return out;
}

LaurentPoly LaurentPoly::from_dense(int lo, std::vector<mpz_class> coeffs, mpz_class den) {
  if (den == 0) throw std::invalid_argument("LaurentPoly: zero denominator");
  LaurentPoly p;
  p.lo_ = lo;
  p.num_ = std::move(coeffs);
  p.den_ = std::move(den);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  size_t first = 0;
  while (first < num_.size() && num_[first] == 0) ++first;
  if (first == num_.size()) {
    num_.clear();
    lo_ = 0;
    den_ = 1;
    return;
  }
  size_t last = num_.size();
  while (num_[last - 1] == 0) --last;
  if (first > 0 || last < num_.size()) {
    num_.erase(num_.begin() + static_cast<long>(last), num_.end());
    num_.erase(num_.begin(), num_.begin() + static_cast<long>(first));
    lo_ += static_cast<int>(first);
  }
  if (den_ != 1) {
    mpz_class g = content_of(num_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
      for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }
}

mpq_class LaurentPoly::coefficient(int exponent) const {
  if (num_.empty() || exponent < lo_ || exponent > high_degree()) return 0;
  mpq_class q(num_[static_cast<size_t>(exponent - lo_)], den_);
  q.canonicalize();
  return q;
}

std::map<int, mpq_class> LaurentPoly::terms() const {
  std::map<int, mpq_class> out;
  for (size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) out[lo_ + static_cast<int>(i)] = coefficient(lo_ + static_cast<int>(i));
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(high_degree(), o.high_degree());
  std::vector<mpz_class> out(static_cast<size_t>(hi - lo + 1));
  if (den_ == o.den_) {
    for (size_t i = 0; i < num_.size(); ++i) out[static_cast<size_t>(lo_ - lo) + i] = num_[i];
    for (size_t i = 0; i < o.num_.size(); ++i) out[static_cast<size_t>(o.lo_ - lo) + i] += o.num_[i];
  } else {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    mpz_class fa = o.den_ / g, fb = den_ / g;
    for (size_t i = 0; i < num_.size(); ++i) out[static_cast<size_t>(lo_ - lo) + i] = num_[i] * fa;
    for (size_t i = 0; i < o.num_.size(); ++i)
      mpz_addmul(out[static_cast<size_t>(o.lo_ - lo) + i].get_mpz_t(), o.num_[i].get_mpz_t(), fb.get_mpz_t());
    den_ = den_ * fa;
  }
  num_ = std::move(out);
  lo_ = lo;
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly::from_dense(a.lo_ + b.lo_, mul_dense(a.num_, b.num_), a.den_ * b.den_);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
  if (c == 0) return *this = LaurentPoly();
  for (auto& x : num_) x *= c.get_num();
  den_ *= c.get_den();
  canonicalize();
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.lo_ += k;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1L), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return *this;
  LaurentPoly out = *this;
  std::reverse(out.num_.begin(), out.num_.end());
  out.lo_ = -high_degree();
  return out;
}

LaurentPoly LaurentPoly::inflate(int t) const {
  if (is_zero()) return *this;
  if (t == 0) return LaurentPoly(eval_at(1, 1));
  if (t < 0) return bar().inflate(-t);
  LaurentPoly out;
  out.lo_ = lo_ * t;
  out.den_ = den_;
  out.num_.resize((num_.size() - 1) * static_cast<size_t>(t) + 1);
  for (size_t i = 0; i < num_.size(); ++i) out.num_[i * static_cast<size_t>(t)] = num_[i];
  return out;
}

mpq_class LaurentPoly::eval_at(long a, long b) const {
  if (a == 0) throw std::domain_error("eval_at: v must be a unit (a != 0)");
  if (b == 0) throw std::domain_error("eval_at: zero denominator");
  mpq_class theta(a);
  theta /= b;
  return eval_at(theta);
}

mpq_class LaurentPoly::eval_at(const mpq_class& theta_in) const {
  mpq_class theta = theta_in;
  theta.canonicalize();
  if (theta == 0) throw std::domain_error("eval_at: v must be a unit");
  if (is_zero()) return 0;
  const mpz_class& a = theta.get_num();
  const mpz_class& b = theta.get_den();
  // sum c_i a^i b^(deg-i), then divide by b^deg and scale by theta^lo
  size_t deg = num_.size() - 1;
  mpz_class acc = 0, bdeg;
  mpz_pow_ui(bdeg.get_mpz_t(), b.get_mpz_t(), deg);
  std::vector<mpz_class> bpows(deg + 1);
  bpows[0] = 1;
  for (size_t i = 1; i <= deg; ++i) bpows[i] = bpows[i - 1] * b;
  for (size_t i = deg + 1; i-- > 0;) {
    acc *= a;
    acc += num_[i] * bpows[deg - i];
  }
  mpq_class out(acc, den_ * bdeg);
  out.canonicalize();
  long lo = lo_;
  mpz_class num, den;
  if (lo >= 0) {
    mpz_pow_ui(num.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(lo));
    mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(lo));
  } else {
    mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-lo));
    mpz_pow_ui(den.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-lo));
  }
  mpq_class scale(num, den);
  scale.canonicalize();
  return out * scale;
}

mpq_class LaurentPoly::content() const {
  if (is_zero()) return 0;
  mpq_class c(content_of(num_), den_);
  c.canonicalize();
  return abs(c);
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (is_zero()) return *this;
  LaurentPoly out;
  out.lo_ = lo_;
  mpz_class g = content_of(num_);
  if (g < 0) g = -g;
  out.num_.resize(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) mpz_divexact(out.num_[i].get_mpz_t(), num_[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  LaurentPoly out;
  out.num_ = num_;
  out.den_ = num_.back();
  out.canonicalize();
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    int e = lo_ + static_cast<int>(i);
    mpq_class c = coefficient(e);
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = e == 0 ? "" : (e == 1 ? "v" : "v^" + std::to_string(e));
    if (mono.empty()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

std::pair<LaurentPoly, LaurentPoly> divrem(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by zero");
  if (a.is_zero() || a.breadth() < b.breadth()) return {LaurentPoly(), a};
  // shift both to ordinary polynomials with nonzero constant term and run long division over Q
  const auto& an = a.numerators();
  const auto& bn = b.numerators();
  size_t db = bn.size() - 1;
  std::vector<mpq_class> r(an.size());
  for (size_t i = 0; i < an.size(); ++i) r[i] = mpq_class(an[i], a.denominator());
  for (auto& x : r) x.canonicalize();
  std::vector<mpq_class> bq(bn.size());
  for (size_t i = 0; i < bn.size(); ++i) {
    bq[i] = mpq_class(bn[i], b.denominator());
    bq[i].canonicalize();
  }
  std::vector<mpq_class> q(an.size() - db);
  mpq_class lead = bq[db];
  for (size_t k = an.size(); k-- > db;) {
    if (r[k] == 0) continue;
    mpq_class f = r[k] / lead;
    q[k - db] = f;
    for (size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bq[j];
  }
  std::map<int, mpq_class> qt, rt;
  int shift = a.low_degree() - b.low_degree();
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) qt[shift + static_cast<int>(i)] = q[i];
  for (size_t i = 0; i < db && i < r.size(); ++i)
    if (r[i] != 0) rt[a.low_degree() + static_cast<int>(i)] = r[i];
  return {LaurentPoly::from_terms(qt), LaurentPoly::from_terms(rt)};
}

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("divexact: inexact division");
  return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divrem(a, b).second.is_zero();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.primitive_part(), y = b.primitive_part();
  while (!y.is_zero()) {
    auto r = divrem(x, y).second.primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

LaurentPoly inflate(int t, const LaurentPoly& f) { return f.inflate(t); }

LaurentPoly qint(long n, long m) {
  if (m < 1) throw std::invalid_argument("qint: m must be positive");
  if (n == 0) return {};
  if (n < 0) return -qint(-n, m);
  // v^{m(n-1)} + v^{m(n-3)} + ... + v^{-m(n-1)}
  std::vector<mpz_class> c(static_cast<size_t>(2 * m * (n - 1) + 1));
  for (long i = 0; i < n; ++i) c[static_cast<size_t>(2 * m * i)] = 1;
  return LaurentPoly::from_dense(static_cast<int>(-m * (n - 1)), std::move(c));
}

LaurentPoly qfact(long n, long m) {
  if (n < 0) throw std::invalid_argument("qfact: n must be nonnegative");
  LaurentPoly out(1L);
  for (long k = 2; k <= n; ++k) out *= qint(k, m);
  return out;
}

}  // namespace qcartan
