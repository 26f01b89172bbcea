#include "qcartan/partitions.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "qcartan/numtheory.hpp"

namespace qcartan {

Partition Partition::from_parts(const std::vector<int>& parts) {
  Partition out;
  for (int k : parts) {
    if (k <= 0) throw std::invalid_argument("Partition: parts must be positive");
    out.add(k, 1);
  }
  return out;
}

Partition Partition::from_mult(const std::map<int, int>& mult) {
  Partition out;
  for (auto [k, m] : mult) {
    if (k <= 0 || m < 0) throw std::invalid_argument("Partition: bad multiplicity entry");
    out.add(k, m);
  }
  return out;
}

void Partition::add(int k, int m) {
  if (m == 0) return;
  mult_[k] += m;
  size_ += k * m;
  length_ += m;
}

int Partition::mult(int k) const {
  auto it = mult_.find(k);
  return it == mult_.end() ? 0 : it->second;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  out.reserve(length_);
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) out.insert(out.end(), it->second, it->first);
  return out;
}

Partition Partition::operator+(const Partition& other) const {
  Partition out = *this;
  for (auto [k, m] : other.mult_) out.add(k, m);
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  bool first = true;
  for (int k : parts()) {
    if (!first) s += ',';
    s += std::to_string(k);
    first = false;
  }
  return s + ")";
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (size_ != other.size_) return size_ <=> other.size_;
  // compare largest parts first; larger tuple comes first
  auto a = mult_.rbegin(), b = other.mult_.rbegin();
  while (a != mult_.rend() && b != other.mult_.rend()) {
    if (a->first != b->first) return b->first <=> a->first;
    if (a->second != b->second) {
      // the one with more copies of this part is lexicographically larger
      return b->second <=> a->second;
    }
    ++a;
    ++b;
  }
  if (a == mult_.rend() && b == other.mult_.rend()) return std::strong_ordering::equal;
  return a == mult_.rend() ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string to_string(const Multipartition& mp) {
  std::string s = "(";
  for (size_t i = 0; i < mp.size(); ++i) {
    if (i) s += ',';
    s += mp[i].to_string();
  }
  return s + ")";
}

int total_size(const Multipartition& mp) {
  int n = 0;
  for (const auto& p : mp) n += p.size();
  return n;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(cur));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

std::mutex g_par_mutex;
std::unordered_map<int, std::unique_ptr<std::vector<Partition>>> g_par_cache;

std::mutex g_multi_mutex;
std::map<std::pair<int, int>, std::unique_ptr<std::vector<Multipartition>>> g_multi_cache;

}  // namespace

const std::vector<Partition>& parts_all(int n) {
  if (n < 0) throw std::invalid_argument("parts_all: n must be nonnegative");
  std::lock_guard lock(g_par_mutex);
  auto& slot = g_par_cache[n];
  if (!slot) {
    auto v = std::make_unique<std::vector<Partition>>();
    std::vector<int> cur;
    gen_partitions(n, n, cur, *v);
    slot = std::move(v);
  }
  return *slot;
}

bool is_class_regular(int s, const Partition& lambda) {
  for (auto [k, m] : lambda.multiplicities())
    if (k % s == 0) return false;
  return true;
}

bool is_regular(int s, const Partition& lambda) {
  for (auto [k, m] : lambda.multiplicities())
    if (m >= s) return false;
  return true;
}

bool is_p_power_partition(int p, const Partition& lambda) {
  for (auto [k, m] : lambda.multiplicities()) {
    int x = k;
    while (x % p == 0) x /= p;
    if (x != 1) return false;
  }
  return true;
}

bool matches(const PartitionFilter& filter, const Partition& lambda) {
  switch (filter.kind) {
    case FilterKind::ClassRegular: return is_class_regular(filter.param, lambda);
    case FilterKind::Regular: return is_regular(filter.param, lambda);
    case FilterKind::Pow: return is_p_power_partition(filter.param, lambda);
  }
  return false;
}

std::vector<Partition> parts_filtered(const PartitionFilter& filter, int n) {
  if (filter.param < 1) throw std::invalid_argument("parts_filtered: parameter must be positive");
  if (filter.kind == FilterKind::Pow && !is_prime(filter.param))
    throw std::invalid_argument("parts_filtered: pow filter needs a prime");
  std::vector<Partition> out;
  for (const auto& lambda : parts_all(n))
    if (matches(filter, lambda)) out.push_back(lambda);
  return out;
}

mpz_class z_of(const Partition& lambda) {
  mpz_class z = 1;
  for (auto [k, m] : lambda.multiplicities()) {
    mpz_class km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    z *= factorial(m) * km;
  }
  return z;
}

PAdicSplit p_adic_split(int p, const Partition& lambda) {
  std::map<int, std::map<int, int>> fam;
  std::map<int, int> nu;
  for (auto [k, m] : lambda.multiplicities()) {
    int j = k, ps = 1;
    while (j % p == 0) {
      j /= p;
      ps *= p;
    }
    fam[j][ps] += m;
    nu[j] += m * ps;
  }
  PAdicSplit out;
  out.nu = Partition::from_mult(nu);
  for (auto& [j, mult] : fam) out.family[j] = Partition::from_mult(mult);
  return out;
}

Partition p_adic_join(int p, const std::map<int, Partition>& family) {
  std::map<int, int> mult;
  for (const auto& [j, part] : family) {
    if (j % p == 0) throw std::invalid_argument("p_adic_join: family index divisible by p");
    if (!is_p_power_partition(p, part)) throw std::invalid_argument("p_adic_join: component not in Pow_p");
    for (auto [ps, m] : part.multiplicities()) mult[j * ps] += m;
  }
  return Partition::from_mult(mult);
}

Partition glaisher(int s, const Partition& lambda) {
  if (!is_regular(s, lambda)) throw std::invalid_argument("glaisher: partition is not s-regular");
  std::map<int, int> mult;
  for (auto [k, m] : lambda.multiplicities()) {
    int kp = k, sj = 1;
    while (kp % s == 0) {
      kp /= s;
      sj *= s;
    }
    mult[kp] += sj * m;
  }
  return Partition::from_mult(mult);
}

Partition glaisher_inverse(int s, const Partition& mu) {
  if (s < 2) {
    if (!mu.empty()) throw std::invalid_argument("glaisher_inverse: s must be at least 2");
    return mu;
  }
  if (!is_class_regular(s, mu)) throw std::invalid_argument("glaisher_inverse: partition is not s-class-regular");
  std::map<int, int> mult;
  for (auto [k, m] : mu.multiplicities()) {
    int part = k;
    for (int rest = m; rest > 0; rest /= s, part *= s)
      if (rest % s) mult[part] += rest % s;
  }
  return Partition::from_mult(mult);
}

Partition beta(int M, const Partition& lambda) {
  if (M < 1) throw std::invalid_argument("beta: M must be positive");
  std::map<int, int> mu, reg;
  for (auto [a, m] : lambda.multiplicities()) {
    if (m / M) mu[a * M] += m / M;
    if (m % M) reg[a] += m % M;
  }
  Partition regular = Partition::from_mult(reg);
  return Partition::from_mult(mu) + (M == 1 ? regular : glaisher(M, regular));
}

CutRed cut_red(int ell, const Partition& lambda) {
  if (ell < 2) throw std::invalid_argument("cut_red: ell must be at least 2");
  std::map<int, int> cut, red;
  for (auto [k, m] : lambda.multiplicities()) {
    if (k % ell) cut[k] = m;
    if (m / ell) red[k] = m / ell;
  }
  return {Partition::from_mult(cut), Partition::from_mult(red)};
}

SplitR split_r(int p, int r, const Partition& lambda) {
  if (!is_p_power_partition(p, lambda)) throw std::invalid_argument("split_r: parts must be powers of p");
  if (r < 0) throw std::invalid_argument("split_r: r must be nonnegative");
  long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  std::map<int, int> lo, hi;
  long top = 0;
  for (auto [k, m] : lambda.multiplicities()) {
    if (k < pr) {
      lo[k] = m;
    } else {
      hi[static_cast<int>(k / pr)] = m;
      top += (k / pr) * m;
    }
  }
  SplitR out;
  out.lo = Partition::from_mult(lo);
  out.hi = Partition::from_mult(hi);
  auto bar = lo;
  if (top) bar[static_cast<int>(pr)] += static_cast<int>(top);
  out.bar = Partition::from_mult(bar);
  return out;
}

bool is_core(int ell, const Partition& lambda) {
  std::vector<int> parts = lambda.parts();
  int len = static_cast<int>(parts.size());
  std::set<int> beta_set;
  for (int i = 0; i < len; ++i) beta_set.insert(parts[i] + len - 1 - i);
  for (int b : beta_set)
    if (b >= ell && !beta_set.count(b - ell)) return false;
  return true;
}

std::vector<BlockLabel> blocks(int ell, int n) {
  if (ell < 2) throw std::invalid_argument("blocks: ell must be at least 2");
  std::vector<BlockLabel> out;
  for (int d = 0; ell * d <= n; ++d)
    for (const auto& rho : parts_all(n - ell * d))
      if (is_core(ell, rho)) out.push_back({rho, d});
  return out;
}

std::vector<std::vector<int>> compositions(int n, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(len, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == len - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      cur[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  rec(rec, 0, n);
  return out;
}

const std::vector<Multipartition>& multipartitions(int ell, int d) {
  if (ell < 0 || d < 0) throw std::invalid_argument("multipartitions: arguments must be nonnegative");
  std::lock_guard lock(g_multi_mutex);
  auto& slot = g_multi_cache[{ell, d}];
  if (slot) return *slot;
  auto v = std::make_unique<std::vector<Multipartition>>();
  for (const auto& comp : compositions(d, ell)) {
    std::vector<const std::vector<Partition>*> lists;
    for (int ni : comp) lists.push_back(&parts_all(ni));
    Multipartition cur(ell);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == ell) {
        v->push_back(cur);
        return;
      }
      for (const auto& lam : *lists[i]) {
        cur[i] = lam;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  slot = std::move(v);
  return *slot;
}

}  // namespace qcartan
