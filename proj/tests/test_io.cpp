#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "carnot/errors.hpp"
#include "carnot/semigen.hpp"
#include "common.hpp"

using namespace carnot;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    presentation_from_json(Json::parse(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Presentation, CorpusRoundTrip) {
  for (const char* name : {"engel1", "engel2", "engel3", "engel4", "engel1xengel1", "137A", "n626", "heisenberg",
                           "free23", "free33"}) {
    GradedLieAlgebra g = corpus(name);
    std::string text = algebra_to_json(g).dump();
    GradedLieAlgebra h = algebra_from_json(Json::parse(text));
    EXPECT_EQ(g, h) << name;
    EXPECT_EQ(algebra_to_json(h).dump(), text) << name;
  }
}

TEST(Presentation, FieldDiagnostics) {
  EXPECT_EQ(parse_error_of(R"({"name":"a","layers":[2,1],"basis":["X","Y","Z"],
    "brackets":[{"left":"X","right":"Y","result":{"Z":"1/0"}}]})"),
            "brackets[0].result.Z: zero denominator in \"1/0\"");
  EXPECT_EQ(parse_error_of(R"({"name":"a","layers":[2,1],"basis":["X","Y","Z"],
    "brackets":[{"left":"X","right":"W","result":{}}]})"),
            "brackets[0].right: unknown basis element \"W\"");
  EXPECT_EQ(parse_error_of(R"({"name":"a","layers":[2,1],"basis":["X","X","Z"]})"),
            "basis[1]: duplicate basis name \"X\"");
  EXPECT_EQ(parse_error_of(R"({"layers":[1],"basis":["X"]})"), "missing field \"name\"");
  EXPECT_EQ(parse_error_of(R"({"name":"a","layers":[1],"basis":["X"],"extra":1})"), "extra: unknown field");
  EXPECT_EQ(parse_error_of(R"({"name":"a","layers":[-1],"basis":["X"]})"), "layers[0]: expected a nonnegative integer");
}

TEST(Presentation, SyntaxErrorsCarryLineAndColumn) {
  std::string path = ::testing::TempDir() + "/broken.json";
  {
    std::ofstream out(path);
    out << "{\n  \"name\": \"a\",\n  \"layers\": [1,]\n}\n";
  }
  try {
    load_algebra(path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind(path + ":3:", 0), 0u) << e.what();
  }
  std::remove(path.c_str());
}

TEST(Vectors, ParseCommaList) {
  EXPECT_EQ(parse_vector("0, 1/2,-3", 3), (Vec{Rational(0), Rational(1, 2), Rational(-3)}));
  EXPECT_THROW(parse_vector("1,2", 3), DimensionMismatch);
  EXPECT_THROW(parse_vector("1,x", 2), ParseError);
}

TEST(DecisionJson, RoundTripAndReplay) {
  for (const char* name : {"engel2", "free23", "n626", "137A", "heisenberg", "engel1xengel1"}) {
    GradedLieAlgebra g = corpus(name);
    Decision d = decide_semigenerated(g);
    Json j = to_json(g, d);
    EXPECT_EQ(j["schema"], 1);
    Decision back = decision_from_json(g, Json::parse(j.dump()));
    EXPECT_TRUE(verify_certificate(g, back).ok) << name;
    EXPECT_EQ(to_json(g, back)["certificate"].dump(), j["certificate"].dump()) << name;
  }
  GradedLieAlgebra e1 = corpus("engel1");
  Decision h = decide_halfspace(e1, HalfSpace{{Rational(0), Rational(1)}});
  Json j = to_json(e1, h);
  ASSERT_EQ(j["certificate"]["trace"].size(), 2u);
  EXPECT_EQ(j["certificate"]["trace"][0]["rule"], "R2");
  EXPECT_TRUE(verify_certificate(e1, decision_from_json(e1, j)).ok);
}

TEST(DecisionJson, ForgedTraceFailsReplay) {
  GradedLieAlgebra e1 = corpus("engel1");
  Json j = to_json(e1, decide_halfspace(e1, HalfSpace{{Rational(0), Rational(1)}}));
  j["certificate"]["lambda"] = Json::array({"1", "0"});
  VerifyResult r = verify_certificate(e1, decision_from_json(e1, j));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.first_failure.rfind("trace step 1 (R2)", 0), 0u) << r.first_failure;
}

TEST(DecisionJson, Diagnostics) {
  GradedLieAlgebra g = corpus("engel1");
  Json j = to_json(g, decide_semigenerated(g));
  j["certificate"]["engel"]["ideal"] = Json::array({Json::array({"1", "0"})});
  try {
    decision_from_json(g, j);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), "certificate.engel.ideal[0]: expected 4 entries, got 2");
  }
}
