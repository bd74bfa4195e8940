#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace piercing;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    instance_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::Config;
}

}  // namespace

TEST(Json, GridRoundTrip) {
  const GridInstance g = fixtures::worked_example();
  const Json doc = to_json(g);
  EXPECT_EQ(doc["Z"][1][0], "3/2");
  EXPECT_EQ(std::get<GridInstance>(instance_from_json(doc)), g);
  EXPECT_EQ(to_json(std::get<GridInstance>(instance_from_json(Json::parse(doc.dump())))).dump(), doc.dump());
}

TEST(Json, AcceptsIntegersAndDecimalStrings) {
  const Instance inst =
      instance_from_json(Json::parse(R"({"kind":"grid","x":[1,"2.5"],"y":["-1/3"],"Z":[["0.1"],[7]]})"));
  const GridInstance& g = std::get<GridInstance>(inst);
  EXPECT_EQ(g.x()[1], Rat(5, 2));
  EXPECT_EQ(g.z(0, 0), Rat(1, 10));
}

TEST(Json, RejectsMalformedDocuments) {
  EXPECT_EQ(parse_code(R"({"kind":"grid","x":[0.5],"y":[1],"Z":[[0]]})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"kind":"grid","x":[1],"y":[1]})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"kind":"cube"})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"kind":"grid","x":["2","1"],"y":[1],"Z":[[0],[0]]})"), ErrorCode::Monotone);
  EXPECT_EQ(parse_code(R"({"kind":"grid","x":["1"],"y":[1],"Z":[[0,1]]})"), ErrorCode::Dimension);
  EXPECT_EQ(parse_code(R"({"kind":"highdim","d":2,"x":[[1,2,3],[1,2,3]],"z":{"1,1":[0]}})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"kind":"highdim","d":1,"x":[[1,2,3]],"z":{}})"), ErrorCode::Dimension);
}

TEST(Json, HighDimRoundTrip) {
  GenConfig cfg;
  cfg.d = 3;
  cfg.seed = 4;
  const HighDimInstance inst = random_highdim(cfg);
  const Json doc = to_json(inst);
  EXPECT_EQ(doc["z"].size(), 27u);
  EXPECT_TRUE(doc["z"].contains("1,2,3"));
  EXPECT_EQ(to_json(std::get<HighDimInstance>(instance_from_json(doc))).dump(), doc.dump());
}

TEST(Json, SceneRoundTrip) {
  const GeneralScene scene = counterexample_scene();
  const Json doc = to_json(scene);
  const GeneralScene back = std::get<GeneralScene>(instance_from_json(doc));
  EXPECT_EQ(to_json(back).dump(), doc.dump());
  EXPECT_EQ(back.family_b[2].vertices[1], (Point3{Rat(3), Rat(5), Rat(1)}));
}

TEST(Json, ReportsUseExactRationals) {
  const Json trace = to_json(lemma33_pierce(fixtures::worked_example()));
  EXPECT_EQ(trace["z_r"], "7/20");
  EXPECT_EQ(trace["line"]["slope"], "-7/20");
  const Json cert = to_json(extract_dual_certificate(fixtures::ridge(), Axis::X));
  EXPECT_TRUE(cert.contains("u3"));
}
