// Copyright 2026 The crossgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "crossgame/game_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "crossgame/gamegen.h"
#include "json.hpp"

namespace crossgame {
namespace {

QuadraticGame Fig4Game(std::uint64_t seed) {
  Rng rng(seed);
  return BuildCrossGame({1.0, 200.0, 99.5, 100.5}, GameOptions{}, rng);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          (name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())))
      .string();
}

TEST(FormatRealTest, SeventeenSignificantDigitsRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 1.7976931348623157e308, 0.0}) {
    EXPECT_EQ(std::stod(FormatReal(x)), x) << FormatReal(x);
  }
  EXPECT_EQ(FormatReal(0.1), "0.10000000000000001");
}

TEST(GameJsonTest, RoundTripIsValueExact) {
  const QuadraticGame g = Fig4Game(0);
  const QuadraticGame back = GameFromJson(GameToJson(g));
  EXPECT_EQ(back.A, g.A);
  EXPECT_EQ(back.b, g.b);
  EXPECT_EQ(back.w_star, g.w_star);
  EXPECT_EQ(back.d1, g.d1);
  EXPECT_EQ(back.d2, g.d2);
  EXPECT_EQ(back.S1, g.S1);
  EXPECT_EQ(back.M12, g.M12);
  EXPECT_EQ(back.M21, g.M21);
  EXPECT_EQ(back.S2, g.S2);
  EXPECT_EQ(back.seed, g.seed);
  EXPECT_EQ(back.model.c_prime, g.model.c_prime);
  EXPECT_EQ(back.declared.eigenvalues(), g.declared.eigenvalues());
  EXPECT_TRUE(VerifyGame(back).passed());
}

TEST(GameJsonTest, ReserializationIsByteIdentical) {
  const std::string text = GameToJson(Fig4Game(3));
  EXPECT_EQ(GameToJson(GameFromJson(text)), text);
}

TEST(GameJsonTest, HasDocumentedKeys) {
  const nlohmann::json doc = nlohmann::json::parse(GameToJson(Fig4Game(1)));
  for (const char* key :
       {"dim", "d1", "d2", "mu", "L", "c", "c_prime", "seed", "A", "b", "w_star",
        "eigenvalues"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["dim"], 200);
  EXPECT_EQ(doc["A"].size(), 200u);
  EXPECT_EQ(doc["A"][0].size(), 200u);
  EXPECT_EQ(doc["eigenvalues"][0]["re"], 1.0);
}

TEST(GameFileTest, SameSeedWritesIdenticalBytes) {
  const std::string p1 = TempPath("crossgame_a.json");
  const std::string p2 = TempPath("crossgame_b.json");
  SaveGame(Fig4Game(0), p1);
  SaveGame(Fig4Game(0), p2);
  const std::string a = ReadFile(p1);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, ReadFile(p2));
  EXPECT_EQ(LoadGame(p1).A, Fig4Game(0).A);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST(GameFileTest, MalformedInputsThrow) {
  EXPECT_THROW(GameFromJson("{"), std::runtime_error);
  EXPECT_THROW(GameFromJson("{}"), std::runtime_error);
  EXPECT_THROW(LoadGame("/nonexistent/dir/game.json"), std::runtime_error);

  nlohmann::json doc = nlohmann::json::parse(GameToJson(Fig4Game(2)));
  doc["d1"] = 7;
  EXPECT_THROW(GameFromJson(doc.dump()), std::runtime_error);
  doc = nlohmann::json::parse(GameToJson(Fig4Game(2)));
  doc["A"][3][4] = "x";
  EXPECT_THROW(GameFromJson(doc.dump()), std::runtime_error);
}

}  // namespace
}  // namespace crossgame
