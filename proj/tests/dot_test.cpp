#include <gtest/gtest.h>

#include <regex>

#include "cwf/dot.hpp"
#include "cwf/text.hpp"
#include "test_util.hpp"

namespace cwf {
namespace {

std::size_t count(const std::string& s, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

const std::regex kNode(R"(^\s*"\d+:\d+" \[)", std::regex::multiline);
const std::regex kEdge(R"(->)");

TEST(DotTest, RowOneOfIdentity) {
  const std::string dot = dot_export(Plft::identity(), 1);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(dot, kNode), 3u);
  EXPECT_EQ(count(dot, kEdge), 2u);
  EXPECT_NE(dot.find("\"z/(z+1)\""), std::string::npos);
  EXPECT_NE(dot.find("\"z+1\""), std::string::npos);
  EXPECT_LT(dot.find("\"0:1\" -> \"1:1\""), dot.find("\"0:1\" -> \"1:2\""));
}

TEST(DotTest, DepthZero) {
  const std::string dot = dot_export(Plft::identity(), 0);
  EXPECT_EQ(count(dot, kNode), 1u);
  EXPECT_EQ(count(dot, kEdge), 0u);
}

TEST(DotTest, DeterminantTwoRoot) {
  const std::string dot = dot_export(Plft(2, 0, 1, 1), 2);
  EXPECT_EQ(count(dot, kNode), 7u);
  EXPECT_EQ(count(dot, kEdge), 6u);
}

TEST(DotTest, Deterministic) {
  EXPECT_EQ(dot_export(Plft(3, 1, 2, 2), 4), dot_export(Plft(3, 1, 2, 2), 4));
}

TEST(DotTest, CapEnforced) {
  testing::expect_error(ErrorCode::DepthCapExceeded, [] { dot_export(Plft::identity(), 5, 4); });
}

}  // namespace
}  // namespace cwf
