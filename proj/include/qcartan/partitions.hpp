#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qcartan {

/// Integer partition stored as multiplicities k -> m_k (all stored m_k >= 1).
class Partition {
 public:
  Partition() = default;
  static Partition from_parts(const std::vector<int>& parts);
  static Partition from_mult(const std::map<int, int>& mult);

  int mult(int k) const;
  const std::map<int, int>& multiplicities() const { return mult_; }
  int size() const { return size_; }
  int length() const { return length_; }
  bool empty() const { return mult_.empty(); }
  int largest() const { return mult_.empty() ? 0 : mult_.rbegin()->first; }

  /// Parts in weakly decreasing order.
  std::vector<int> parts() const;

  /// Union of parts (m_k(a+b) = m_k(a) + m_k(b)).
  Partition operator+(const Partition& other) const;

  std::string to_string() const;

  bool operator==(const Partition& other) const { return mult_ == other.mult_; }
  /// Total order: by size, then lexicographically decreasing parts (the canonical order).
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  void add(int k, int m);

  std::map<int, int> mult_;
  int size_ = 0;
  int length_ = 0;
};

using Multipartition = std::vector<Partition>;

std::string to_string(const Multipartition& mp);
int total_size(const Multipartition& mp);

struct BlockLabel {
  Partition core;
  int weight = 0;
  bool operator==(const BlockLabel&) const = default;
};

/// Par(n) in lexicographically decreasing order.
const std::vector<Partition>& parts_all(int n);

enum class FilterKind { ClassRegular, Regular, Pow };

struct PartitionFilter {
  FilterKind kind;
  int param;
  static PartitionFilter class_regular(int s) { return {FilterKind::ClassRegular, s}; }
  static PartitionFilter regular(int s) { return {FilterKind::Regular, s}; }
  static PartitionFilter pow(int p) { return {FilterKind::Pow, p}; }
};

bool is_class_regular(int s, const Partition& lambda);
bool is_regular(int s, const Partition& lambda);
bool is_p_power_partition(int p, const Partition& lambda);
bool matches(const PartitionFilter& filter, const Partition& lambda);

std::vector<Partition> parts_filtered(const PartitionFilter& filter, int n);

mpz_class z_of(const Partition& lambda);

struct PAdicSplit {
  Partition nu;
  std::map<int, Partition> family;  // j (prime to p) -> lambda^(j) in Pow_p
};

PAdicSplit p_adic_split(int p, const Partition& lambda);
Partition p_adic_join(int p, const std::map<int, Partition>& family);

/// Glaisher map from s-regular to s-class-regular partitions.
Partition glaisher(int s, const Partition& lambda);
Partition glaisher_inverse(int s, const Partition& mu);

Partition beta(int M, const Partition& lambda);

struct CutRed {
  Partition cut;
  Partition red;
};

CutRed cut_red(int ell, const Partition& lambda);

struct SplitR {
  Partition lo;
  Partition hi;
  Partition bar;
};

SplitR split_r(int p, int r, const Partition& lambda);

bool is_core(int ell, const Partition& lambda);
std::vector<BlockLabel> blocks(int ell, int n);

/// All ell-multipartitions of total size d; size compositions in lexicographically
/// decreasing order, then componentwise in parts_all order.
const std::vector<Multipartition>& multipartitions(int ell, int d);

/// Compositions of n into `len` nonnegative parts, lexicographically decreasing.
std::vector<std::vector<int>> compositions(int n, int len);

}  // namespace qcartan
