// The bundled exceptional tables against an independent Bala-Carter enumeration.
#include <gtest/gtest.h>

#include <map>

#include "bala_carter.hpp"
#include "nilsec/exceptional.hpp"
#include "nilsec/orbit.hpp"
#include "nilsec/root_system.hpp"

using namespace nilsec;

namespace {

std::vector<LieType> exceptional_types() {
  return {LieType(Series::E6, 6), LieType(Series::E7, 7), LieType(Series::E8, 8), LieType(Series::F4, 4),
          LieType(Series::G2, 2)};
}

class BalaCarter : public ::testing::TestWithParam<LieType> {};

TEST_P(BalaCarter, OrbitCountsMatchTheStandardLists) {
  const std::map<std::string, std::size_t> expected{{"E6", 21}, {"E7", 45}, {"E8", 70}, {"F4", 16}, {"G2", 5}};
  EXPECT_EQ(oracle::bala_carter(GetParam()).size(), expected.at(GetParam().cartan_name()));
}

TEST_P(BalaCarter, DataFileAgreesLabelByLabel) {
  const auto& table = load_exceptional(GetParam());
  const auto derived = oracle::bala_carter(GetParam());
  ASSERT_EQ(table.orbits.size(), derived.size());
  for (const auto& o : derived) {
    SCOPED_TRACE(o.label);
    ASSERT_TRUE(table.contains(o.label));
    const auto& rec = table.find(o.label);
    EXPECT_EQ(rec.marks, o.marks);
    EXPECT_EQ(rec.dim, o.dim);
  }
}

TEST_P(BalaCarter, SphericalIffHeightAtMostThree) {
  for (const auto& rec : load_exceptional(GetParam()).orbits) {
    SCOPED_TRACE(rec.label);
    EXPECT_EQ(rec.spherical, height_of_marks(GetParam(), rec.marks) <= 3);
  }
}

INSTANTIATE_TEST_SUITE_P(Exceptional, BalaCarter, ::testing::ValuesIn(exceptional_types()),
                         [](const auto& info) { return info.param.cartan_name(); });

TEST(BalaCarterSpot, KnownDimensions) {
  auto dim_of = [](Series s, int rank, const std::string& label) {
    for (const auto& o : oracle::bala_carter(LieType(s, rank)))
      if (o.label == label) return o.dim;
    return -1;
  };
  EXPECT_EQ(dim_of(Series::E6, 6, "A4"), 60);
  EXPECT_EQ(dim_of(Series::E7, 7, "A4"), 100);
  EXPECT_EQ(dim_of(Series::E7, 7, "(A5)''"), 102);
  EXPECT_EQ(dim_of(Series::E7, 7, "(A5)'"), 108);
  EXPECT_EQ(dim_of(Series::E8, 8, "A4"), 180);
  EXPECT_EQ(dim_of(Series::E8, 8, "E8(b4)"), 230);
  EXPECT_EQ(dim_of(Series::F4, 4, "A2"), 30);
  EXPECT_EQ(dim_of(Series::F4, 4, "F4(a3)"), 40);
  EXPECT_EQ(dim_of(Series::G2, 2, "G2(a1)"), 10);
}

TEST(BalaCarterSpot, DoubledMinimalMarksGiveA2) {
  // In E6, E7, E8 the wDd of A2 is twice that of A1.
  for (auto [s, r] : {std::pair{Series::E6, 6}, {Series::E7, 7}, {Series::E8, 8}}) {
    const auto& t = load_exceptional(LieType(s, r));
    auto doubled = t.find("A1").marks;
    for (int& m : doubled) m *= 2;
    EXPECT_EQ(t.find("A2").marks, doubled);
  }
}

}  // namespace
