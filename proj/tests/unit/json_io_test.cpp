#include "test_util.hpp"

#include "superjac/tools/json_io.hpp"

namespace superjac::testing {
namespace {

using io::json;

TEST(JsonIo, CurveRoundTrip) {
  for (const auto& c : {genus2(7), picard(13)}) {
    const auto j = io::to_json(c);
    EXPECT_EQ(j["p"], std::to_string(c.field().characteristic()));
    EXPECT_EQ(io::curve_from_json(j), c);
  }
  const auto nested = json::parse(R"({"field": {"p": 7}, "n": 2, "f": [1, 3, 0, 0, 0, 1]})");
  EXPECT_EQ(io::curve_from_json(nested), genus2(7));
}

TEST(JsonIo, DivisorRoundTrip) {
  std::mt19937_64 rng(1);
  const auto c = picard(7);
  for (int t = 0; t < 10; ++t) {
    const auto D = random_divisor(c, 3, rng);
    const auto j = io::to_json(D);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(io::divisor_from_json(j), D);
    EXPECT_EQ(io::divisor_from_json(json::parse(j.dump())), D);
  }
}

TEST(JsonIo, ExtensionElements) {
  const auto K = F(7, 2);
  const auto z = K.generator() + K.one();
  const auto j = io::to_json(z);
  EXPECT_EQ(j, json::parse(R"(["1", "1"])"));
  EXPECT_EQ(io::element_from_json(j, K), z);
  EXPECT_EQ(io::element_from_json(json::parse("[1, 1]"), K), z);
  EXPECT_EQ(io::element_from_json(json::parse("-1"), K), el(K, 6));
}

TEST(JsonIo, ParseErrors) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::PreconditionFailed;
  };
  EXPECT_EQ(code([] { io::curve_from_json(json::parse(R"({"n": 2})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code([] { io::field_from_json(json::parse(R"({"p": "seven"})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code([] { io::field_from_json(json::parse(R"({"p": 7, "k": 2, "modulus": [3, 0, 1]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code([] { io::field_from_json(json::parse(R"({"p": 8})")); }), ErrorCode::NotPrime);
  EXPECT_EQ(code([] { io::divisor_from_json(json::parse(R"({"points": []})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code([] { io::load_json("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code([] { io::load_json("/nonexistent/file.json"); }), ErrorCode::ParseError);
}

}  // namespace
}  // namespace superjac::testing
