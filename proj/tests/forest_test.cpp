#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cwf/forest.hpp"
#include "cwf/treenav.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cwf {
namespace {

using testing::expect_error;

std::set<Plft> as_set(const std::vector<Plft>& v) { return {v.begin(), v.end()}; }

TEST(EnumerateOrphansTest, SmallDeterminants) {
  EXPECT_EQ(enumerate_orphans(1).orphans, std::vector<Plft>{Plft::identity()});
  EXPECT_EQ(as_set(enumerate_orphans(2).orphans),
            (std::set<Plft>{Plft(2, 0, 0, 1), Plft(1, 0, 0, 2), Plft(2, 0, 1, 1), Plft(1, 1, 0, 2)}));
  EXPECT_EQ(as_set(enumerate_orphans(3).orphans),
            (std::set<Plft>{Plft(1, 0, 0, 3), Plft(3, 0, 0, 1), Plft(3, 0, 1, 1), Plft(3, 0, 2, 1),
                            Plft(1, 1, 0, 3), Plft(2, 1, 1, 2), Plft(1, 2, 0, 3)}));
  EXPECT_EQ(as_set(enumerate_orphans(4).orphans),
            (std::set<Plft>{Plft(1, 0, 0, 4), Plft(2, 0, 0, 2), Plft(4, 0, 0, 1), Plft(2, 0, 1, 2),
                            Plft(4, 0, 1, 1), Plft(4, 0, 2, 1), Plft(4, 0, 3, 1), Plft(1, 1, 0, 4),
                            Plft(2, 1, 0, 2), Plft(3, 1, 2, 2), Plft(1, 2, 0, 4), Plft(2, 2, 1, 3),
                            Plft(1, 3, 0, 4)}));
  EXPECT_EQ(enumerate_orphans(-1).orphans, std::vector<Plft>{Plft::swap()});
  expect_error(ErrorCode::ZeroDeterminant, [] { enumerate_orphans(0); });
}

TEST(EnumerateOrphansTest, SortedLexicographically) {
  for (std::int64_t D : {5, -5, 12, -12}) {
    const auto v = enumerate_orphans(D).orphans;
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(std::adjacent_find(v.begin(), v.end()), v.end());
  }
}

TEST(EnumerateOrphansTest, MatchesFilterScan) {
  for (std::int64_t D = -15; D <= 15; ++D) {
    if (D == 0) continue;
    const OrphanSet set = enumerate_orphans(D);
    EXPECT_EQ(set.orphans, oracle::scan_orphans(D)) << "D=" << D;
    for (const Plft& f : set.orphans) {
      EXPECT_EQ(det(f), D);
      EXPECT_TRUE(is_orphan(f));
      if (D > 0) {
        EXPECT_GT(f.a(), f.c());
        EXPECT_LT(f.b(), f.d());
        EXPECT_LE(f.b() + f.c(), D - 1);
      }
    }
  }
}

TEST(ClassNumberTest, Table) {
  const std::vector<std::size_t> expected{1, 4, 7, 13, 15, 26, 25, 39, 40, 54, 49, 79, 63, 88, 88};
  for (std::int64_t D = 1; D <= 15; ++D) EXPECT_EQ(class_number(D), expected[D - 1]) << "D=" << D;
  EXPECT_EQ(class_number(-1), 1u);
  EXPECT_EQ(class_number(-2), 4u);
  expect_error(ErrorCode::ZeroDeterminant, [] { class_number(0); });
}

TEST(ClassNumberTest, SymmetricInSign) {
  for (std::int64_t D = 1; D <= 30; ++D) EXPECT_EQ(class_number(D), class_number(-D)) << D;
}

TEST(ReciprocalTest, Examples) {
  EXPECT_EQ(reciprocal(Plft::identity()), Plft::swap());
  EXPECT_EQ(reciprocal(Plft(2, 0, 1, 1)), Plft(1, 1, 2, 0));
  EXPECT_TRUE(is_orphan(Plft(1, 1, 2, 0)));
  EXPECT_EQ(det(Plft(1, 1, 2, 0)), -2);
  std::mt19937_64 rng(47);
  for (int i = 0; i < 1000; ++i) {
    const Plft f = oracle::random_plft(rng, 10000);
    EXPECT_EQ(reciprocal(reciprocal(f)), f);
    EXPECT_EQ(det(reciprocal(f)), -det(f));
  }
}

TEST(ReciprocalTest, BijectionOnOrphans) {
  for (std::int64_t D = 1; D <= 12; ++D) {
    std::set<Plft> image;
    for (const Plft& f : enumerate_orphans(D).orphans) image.insert(reciprocal(f));
    EXPECT_EQ(image, as_set(enumerate_orphans(-D).orphans));
  }
}

TEST(VerifyPartitionTest, Examples) {
  PartitionReport r = verify_partition(1, 20);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.trees.size(), 1u);
  EXPECT_EQ(r.trees[0].count, r.scanned);

  r = verify_partition(2, 15);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.trees.size(), 4u);

  r = verify_partition(-3, 12);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.trees.size(), 7u);
}

TEST(VerifyPartitionTest, AllSmallDeterminants) {
  for (std::int64_t D = -6; D <= 6; ++D) {
    if (D == 0) continue;
    const PartitionReport r = verify_partition(D, 12);
    EXPECT_TRUE(r.pass) << "D=" << D;
    std::size_t total = 0;
    for (const TreeCount& t : r.trees) total += t.count;
    EXPECT_EQ(total, r.scanned);
    EXPECT_EQ(r.trees.size(), class_number(D));
  }
}

}  // namespace
}  // namespace cwf
