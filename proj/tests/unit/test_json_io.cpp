#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rquant/catalog.hpp"
#include "rquant/json_io.hpp"

using rquant::HSeries;
using rquant::Poly;

TEST(Json, ExampleOneDocument) {
  const std::string text = rquant::series_to_json(rquant::example1(2));
  EXPECT_EQ(text.rfind("{\"dim\":2,\"order\":2,\"params\":[\"theta\"],\"coeffs\":", 0), 0u) << text;
  EXPECT_NE(text.find("{\"i\":1,\"j\":1,\"k\":0,\"l\":0,\"c\":\"theta\"}"), std::string::npos);
}

TEST(Json, CatalogRoundTripIsBitExact) {
  for (const HSeries& s : {rquant::example1(2), rquant::example1(4), rquant::example2(3), rquant::example2(6)}) {
    const std::string text = rquant::series_to_json(s);
    const HSeries back = rquant::series_from_json(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(rquant::series_to_json(back), text);
  }
}

TEST(Json, ClassicalRoundTrip) {
  const auto r = rquant::flag_r(3, Poly::variable("c"));
  const std::string text = rquant::classical_to_json(r);
  EXPECT_EQ(rquant::classical_from_json(text), r);
  EXPECT_EQ(rquant::classical_to_json(rquant::classical_from_json(text)), text);
}

TEST(Json, FlagAtCOneHasEightEntries) {
  const auto doc = rquant::classical_to_json(rquant::flag_r(3, Poly(1)));
  std::size_t entries = 0;
  for (std::size_t pos = doc.find("\"c\":"); pos != std::string::npos; pos = doc.find("\"c\":", pos + 1)) ++entries;
  EXPECT_EQ(entries, 8u);
}

TEST(Json, Op2RoundTrip) {
  const auto p = rquant::permutation_P(3);
  EXPECT_EQ(rquant::op2_from_json(rquant::op2_to_json(p)), p);
}

TEST(Json, ParamsKeyIsOptionalOnInput) {
  const std::string text =
      R"({"dim":1,"order":1,"coeffs":[[{"i":0,"j":0,"k":0,"l":0,"c":"1"}],[{"i":0,"j":0,"k":0,"l":0,"c":"b*a + a"}]]})";
  const HSeries s = rquant::series_from_json(text);
  EXPECT_EQ(s.coeff(1).at(0, 0, 0, 0), Poly::parse("a*b + a"));
  EXPECT_EQ(rquant::series_from_json(rquant::series_to_json(s)), s);
}

TEST(Json, MalformedDocumentsRejected) {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"dim":2,"order":0})",
      R"({"dim":0,"order":0,"coeffs":[[]]})",
      R"({"dim":2,"order":1,"coeffs":[[]]})",
      R"({"dim":2,"order":0,"coeffs":[[{"i":2,"j":0,"k":0,"l":0,"c":"1"}]]})",
      R"({"dim":2,"order":0,"coeffs":[[{"i":0,"j":0,"k":0,"l":0,"c":"1/0"}]]})",
      R"({"dim":2,"order":0,"coeffs":[[{"i":0,"j":0,"k":0,"c":"1"}]]})",
      R"({"dim":2,"order":0,"params":["a"],"coeffs":[[{"i":0,"j":0,"k":0,"l":0,"c":"b"}]]})",
      R"({"dim":2,"order":-1,"coeffs":[]})",
  };
  for (const char* text : bad) EXPECT_THROW((void)rquant::series_from_json(text), std::invalid_argument) << text;
}

TEST(JsonProperty, RandomSeriesRoundTrip) {
  rquant::testing::Gen gen(61);
  const auto u = rquant::make_universe({"x", "y"});
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<rquant::Op2> coeffs;
    for (std::size_t n = 0; n <= static_cast<std::size_t>(gen.integer(0, 3)); ++n) {
      rquant::Op2 c(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l)
              if (gen.chance(0.3)) c.at(i, j, k, l) = gen.poly(u, 3, 2);
      coeffs.push_back(std::move(c));
    }
    const HSeries s(std::move(coeffs));
    const std::string text = rquant::series_to_json(s);
    const HSeries back = rquant::series_from_json(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(rquant::series_to_json(back), text);
  }
}

TEST(Json, ResidualReportShape) {
  const auto text = rquant::report_to_json(rquant::involution_residual(rquant::example1(2)));
  EXPECT_EQ(text.rfind(R"({"identity":"involution","is_zero":false,)", 0), 0u) << text;
  EXPECT_NE(text.find(R"("witnesses":[{"index":[2,1,1,0,0],"value":"2*theta"}])"), std::string::npos) << text;
}

TEST(Json, QuantizationDocument) {
  const auto q = rquant::quantize(rquant::classical_limit(rquant::example1()).r, 2, {});
  const auto text = rquant::quantization_to_json(q);
  EXPECT_NE(text.find(R"("per_order":[{"order":2,"equations":64,"rank":0,"kernel_dim":16,)"), std::string::npos) << text;
  EXPECT_NE(text.find(R"("series":{"dim":2,"order":2,)"), std::string::npos);
  EXPECT_EQ(text, rquant::quantization_to_json(rquant::quantize(rquant::classical_limit(rquant::example1()).r, 2, {})));
}
