#include <gtest/gtest.h>

#include <set>

#include "nilsec/errors.hpp"
#include "nilsec/json_io.hpp"

using namespace nilsec;
using nlohmann::json;

namespace {

Orbit O(const std::string& s) { return Orbit::parse(s); }

std::set<std::string> keys(const json& j) {
  std::set<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.insert(it.key());
  return out;
}

TEST(JsonIo, OrbitRecord) {
  const json j = orbit_record(O("sl7:[3,2,2]"));
  EXPECT_EQ(keys(j), (std::set<std::string>{"algebra", "label", "dim", "marks", "spherical"}));
  EXPECT_EQ(j["algebra"], "sl7");
  EXPECT_EQ(j["dim"], 30);
  EXPECT_EQ(j["marks"], json::array({1, 0, 1, 1, 0, 1}));
  EXPECT_EQ(j["spherical"], false);
  EXPECT_EQ(orbit_record(O("E7:(3A1)''"))["label"], "(3A1)''");
}

TEST(JsonIo, ReportFields) {
  const json j = to_json(build_secant_report(O("so11:[2^4,1^3]")));
  EXPECT_EQ(j["dimCS"], 46);
  EXPECT_EQ(j["defect"], 2);
  EXPECT_EQ(j["upsilon"], "Spherical(2)");
  EXPECT_EQ(j["tilde"], "so11:[5^2,1]");
  EXPECT_EQ(j["tOBasis"]["basis"], "epsilon");
  EXPECT_FALSE(to_json(build_secant_report(O("sl4:[4]")))["defect"].is_number());
}

class RoundTrip : public ::testing::TestWithParam<std::string> {};

TEST_P(RoundTrip, ReportsSurviveSerialization) {
  const LieType t = LieType::parse(GetParam());
  for (const auto& o : enumerate_orbits(t)) {
    if (o.is_zero()) continue;
    const SecantReport rep = build_secant_report(o);
    const json j = to_json(rep);
    EXPECT_EQ(report_from_json(json::parse(j.dump())), rep) << o.to_string();
    EXPECT_EQ(descriptor_from_json(to_json(rep.descriptor)), rep.descriptor) << o.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Desk, RoundTrip, ::testing::Values("sl6", "sp8", "so8", "so11", "E6", "E7", "F4", "G2"));

TEST(JsonIo, Malformed) {
  const json good = to_json(build_secant_report(O("sl9:[3,1^6]")));
  EXPECT_THROW(report_from_json(json::array()), ParseError);
  EXPECT_THROW(report_from_json(json::object()), ParseError);
  json bad = good;
  bad.erase("r");
  EXPECT_THROW(report_from_json(bad), ParseError);
  bad = good;
  bad["orbit"] = "sl9:[3,3,3,3]";
  EXPECT_THROW(report_from_json(bad), Error);
  bad = good;
  bad["dimCS"] = "fifty-five";
  EXPECT_THROW(report_from_json(bad), ParseError);
  bad = good;
  bad["descriptor"]["kind"] = "Nonsense";
  EXPECT_THROW(report_from_json(bad), ParseError);
  EXPECT_THROW(descriptor_from_json(json{{"kind", 3}}), ParseError);
}

}  // namespace
