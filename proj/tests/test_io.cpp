#include <gtest/gtest.h>

#include "qubitinv/io.hpp"
#include "qubitinv/random.hpp"
#include "support.hpp"

using namespace qubitinv;

TEST(Io, DensityRoundTrip) {
  Rng rng(81);
  const DensityOperator rho = random_trace_one(2, rng);
  const io::json j = io::to_json(rho);
  EXPECT_EQ(j["format"], "density");
  EXPECT_EQ(j["matrix"].size(), 4u);
  const DensityOperator back = io::density_from_json(io::parse(io::dump(j)));
  EXPECT_EQ(back.matrix(), rho.matrix());
}

TEST(Io, BlochRoundTripAndKeys) {
  Rng rng(82);
  const BlochState b = random_bloch(3, rng);
  const io::json j = io::to_json(b);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j["components"].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"}));
  EXPECT_EQ(j["components"]["1,2,3"].size(), 27u);
  EXPECT_EQ(io::bloch_from_json(io::parse(io::dump(j))), b);
  EXPECT_EQ(io::read_state(j), b);
}

TEST(Io, RotationRoundTrip) {
  const LocalRotation g = sample(3, 4, SampleMode::Complex);
  EXPECT_EQ(io::rotation_from_json(io::parse(io::dump(io::to_json(g)))), g);
}

TEST(Io, RejectsMalformedInput) {
  EXPECT_ERROR_CODE(io::parse("{\"format\": "), ErrorCode::Parse);

  Rng rng(83);
  io::json j = io::to_json(random_bloch(2, rng));
  io::json extra = j;
  extra["colour"] = "blue";
  EXPECT_ERROR_CODE(io::bloch_from_json(extra), ErrorCode::Parse);
  io::json missing = j;
  missing["components"].erase("1,2");
  EXPECT_ERROR_CODE(io::bloch_from_json(missing), ErrorCode::Parse);
  io::json short_tensor = j;
  short_tensor["components"]["1,2"].erase(0);
  EXPECT_ERROR_CODE(io::bloch_from_json(short_tensor), ErrorCode::Parse);
  io::json bad_key = j;
  bad_key["components"].erase("1,2");
  bad_key["components"]["2,1"] = j["components"]["1,2"];
  EXPECT_ERROR_CODE(io::bloch_from_json(bad_key), ErrorCode::Parse);
  io::json bad_number = j;
  bad_number["components"]["1"][0] = io::json::array({1.0});
  EXPECT_ERROR_CODE(io::bloch_from_json(bad_number), ErrorCode::Parse);

  io::json d = io::to_json(DensityOperator(1, Eigen::MatrixXcd::Identity(2, 2) / 2.0));
  d["matrix"][0][0] = io::json::array({1.0, 0.0});
  EXPECT_ERROR_CODE(io::density_from_json(d), ErrorCode::Parse);
  EXPECT_ERROR_CODE(io::read_state(io::json{{"format", "tensor"}}), ErrorCode::Parse);
  EXPECT_ERROR_CODE(io::read_file("/nonexistent/state.json"), ErrorCode::Parse);
}

TEST(Io, InvariantsJsonAndCsv) {
  Rng rng(84);
  const InvariantVector v = assemble(random_bloch(2, rng), cycle(2));
  const io::json j = io::to_json(v);
  EXPECT_EQ(j["gamma"], "1>2,2>1");
  const io::InvariantFile f = io::invariants_from_json(io::parse(io::dump(j)));
  ASSERT_EQ(f.values.size(), 9u);
  EXPECT_EQ(f.labels[4], "tt11(1,2)");
  for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(f.values[k], v.values[k]);

  const std::string csv = io::to_csv(v);
  EXPECT_EQ(csv.substr(0, 12), "label,re,im\n");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
  EXPECT_NE(csv.find("\"ll(1,2)\","), std::string::npos);
}

TEST(Io, SectionFileCarriesRotation) {
  Rng rng(85);
  const BlochState b = random_bloch(2, rng);
  const Canonicalized c = canonicalize(b, cycle(2));
  const io::json j = io::to_json(c);
  EXPECT_EQ(j["format"], "section");
  EXPECT_EQ(io::rotation_from_json(j["rotation"]), c.rotation);
  EXPECT_EQ(io::read_state(j), c.section.state);
}

TEST(Io, DumpIsDeterministic) {
  Rng a(86), b(86);
  EXPECT_EQ(io::dump(io::to_json(random_trace_one(2, a))),
            io::dump(io::to_json(random_trace_one(2, b))));
}
