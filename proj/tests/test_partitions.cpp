#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "qcartan/oracles.hpp"
#include "qcartan/partitions.hpp"

using namespace qcartan;
using testing_helpers::P;

TEST(Partition, MultiplicityStorageAndParts) {
  auto p = P({3, 1, 3, 2});
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 3, 2, 1}));
  EXPECT_EQ(p.mult(3), 2);
  EXPECT_EQ(p.mult(4), 0);
  EXPECT_EQ(p.size(), 9);
  EXPECT_EQ(p.length(), 4);
  EXPECT_EQ(p, Partition::from_mult({{1, 1}, {2, 1}, {3, 2}}));
  EXPECT_EQ(P({2, 1}) + P({1}), P({2, 1, 1}));
}

TEST(Partition, RejectsNonPositiveParts) {
  EXPECT_THROW(Partition::from_parts({2, 0}), std::invalid_argument);
  EXPECT_THROW(Partition::from_parts({-1}), std::invalid_argument);
}

TEST(PartsAll, SmallCasesInCanonicalOrder) {
  ASSERT_EQ(parts_all(0).size(), 1u);
  EXPECT_TRUE(parts_all(0)[0].empty());
  EXPECT_EQ(parts_all(2), (std::vector<Partition>{P({2}), P({1, 1})}));
  EXPECT_EQ(parts_all(3), (std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})}));
  EXPECT_EQ(parts_all(8).size(), 22u);
}

TEST(PartsAll, CountsMatchPentagonalRecurrence) {
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(mpz_class(parts_all(n).size()), oracle::partition_count(n)) << n;
}

TEST(PartsFiltered, ClassRegularRegularAndPowerExamples) {
  EXPECT_EQ(parts_filtered(PartitionFilter::class_regular(2), 3), (std::vector<Partition>{P({3}), P({1, 1, 1})}));
  EXPECT_EQ(parts_filtered(PartitionFilter::regular(2), 3), (std::vector<Partition>{P({3}), P({2, 1})}));
  EXPECT_EQ(parts_filtered(PartitionFilter::pow(2), 4),
            (std::vector<Partition>{P({4}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})}));
}

TEST(ZOf, Examples) {
  EXPECT_EQ(z_of(Partition()), 1);
  EXPECT_EQ(z_of(P({1, 1, 1})), 6);
  EXPECT_EQ(z_of(P({2, 1})), 2);
  EXPECT_EQ(z_of(P({2, 2})), 8);
}

TEST(PAdicSplit, SingleOddPart) {
  auto s = p_adic_split(2, P({3}));
  EXPECT_EQ(s.nu, P({3}));
  ASSERT_EQ(s.family.size(), 1u);
  EXPECT_EQ(s.family.at(3), P({1}));
}

TEST(PAdicSplit, MixedExampleAndRejoin) {
  auto s = p_adic_split(2, P({6, 2, 1}));
  EXPECT_EQ(s.nu, P({3, 3, 1, 1, 1}));
  EXPECT_EQ(s.family.at(3), P({2}));
  EXPECT_EQ(s.family.at(1), P({2, 1}));
  EXPECT_EQ(p_adic_join(2, s.family), P({6, 2, 1}));
}

TEST(Glaisher, Examples) {
  EXPECT_EQ(glaisher(2, P({2, 1})), P({1, 1, 1}));
  EXPECT_EQ(glaisher(2, P({3})), P({3}));
  EXPECT_EQ(glaisher(3, P({3, 1})), P({1, 1, 1, 1}));
  EXPECT_EQ(glaisher_inverse(2, P({1, 1, 1})), P({2, 1}));
}

TEST(Glaisher, BijectionRegularToClassRegular) {
  for (int s = 2; s <= 5; ++s)
    for (int n = 0; n <= 12; ++n) {
      auto reg = parts_filtered(PartitionFilter::regular(s), n);
      auto creg = parts_filtered(PartitionFilter::class_regular(s), n);
      ASSERT_EQ(reg.size(), creg.size()) << s << ' ' << n;
      std::set<Partition> images;
      for (const auto& l : reg) {
        auto m = glaisher(s, l);
        EXPECT_TRUE(is_class_regular(s, m));
        EXPECT_EQ(glaisher_inverse(s, m), l);
        images.insert(m);
      }
      EXPECT_EQ(images.size(), reg.size());
    }
}

TEST(Beta, Examples) {
  for (const auto& l : parts_all(5)) EXPECT_EQ(beta(1, l), l);
  EXPECT_EQ(beta(2, P({1, 1, 1})), P({2, 1}));
}

TEST(Beta, PreservesSize) {
  for (int M : {2, 3})
    for (const auto& l : parts_all(7)) EXPECT_EQ(beta(M, l).size(), 7);
}

TEST(CutRed, Examples) {
  auto a = cut_red(2, P({2, 1, 1}));
  EXPECT_EQ(a.cut, P({1, 1}));
  EXPECT_EQ(a.red, P({1}));
  auto b = cut_red(3, P({1, 1}));
  EXPECT_EQ(b.cut, P({1, 1}));
  EXPECT_TRUE(b.red.empty());
  auto c = cut_red(2, P({4, 4}));
  EXPECT_TRUE(c.cut.empty());
  EXPECT_EQ(c.red, P({4}));
}

TEST(SplitR, Examples) {
  auto s = split_r(2, 1, P({4, 2, 1}));
  EXPECT_EQ(s.lo, P({1}));
  EXPECT_EQ(s.hi, P({2, 1}));
  EXPECT_EQ(s.bar, P({2, 2, 2, 1}));
  auto z = split_r(2, 0, P({4, 2, 1}));
  EXPECT_TRUE(z.lo.empty());
  EXPECT_EQ(z.hi, P({4, 2, 1}));
  EXPECT_EQ(z.bar.mult(1), 7);
}

TEST(SplitR, SizeIdentitiesOnPowerPartitions) {
  for (const auto& l : parts_filtered(PartitionFilter::pow(2), 6))
    for (int r : {0, 1, 2}) {
      auto s = split_r(2, r, l);
      EXPECT_EQ(s.lo.size() + (1 << r) * s.hi.size(), l.size());
      EXPECT_EQ(s.bar.size(), l.size());
    }
}

TEST(Cores, BlocksExamples) {
  auto b2 = blocks(2, 2);
  ASSERT_EQ(b2.size(), 1u);
  EXPECT_TRUE(b2[0].core.empty());
  EXPECT_EQ(b2[0].weight, 1);
  auto b1 = blocks(2, 1);
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1[0].core, P({1}));
  EXPECT_EQ(b1[0].weight, 0);
}

TEST(Cores, CoreTestMatchesHookLengths) {
  for (int ell = 2; ell <= 5; ++ell)
    for (int n = 0; n <= 10; ++n)
      for (const auto& l : parts_all(n)) EXPECT_EQ(is_core(ell, l), oracle::is_core_by_hooks(ell, l)) << l.to_string();
}

TEST(Multipartitions, Examples) {
  EXPECT_EQ(multipartitions(1, 3).size(), 3u);
  auto m = multipartitions(2, 1);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], (Multipartition{P({1}), Partition()}));
  EXPECT_EQ(m[1], (Multipartition{Partition(), P({1})}));
  EXPECT_EQ(multipartitions(2, 2).size(), 5u);
  EXPECT_EQ(multipartitions(2, 4).size(), 20u);
  EXPECT_EQ(multipartitions(3, 3).size(), 22u);
}
