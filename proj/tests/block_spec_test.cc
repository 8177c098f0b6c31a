// Copyright 2026 The c72lab Authors.
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

#include "c72/block_spec.h"

#include <gtest/gtest.h>

#include "c72/generators.h"

namespace c72 {
namespace {

TEST(BlockSpecTest, ParsesNestedText) {
  BlockSpec s = parse_block_spec(
      "pipeline(cols=4, compressor=compressor72_proposed(middle-pick=1))");
  EXPECT_EQ(s.generator, "pipeline");
  EXPECT_EQ(s.params.at("cols"), 4);
  ASSERT_TRUE(s.compressor);
  EXPECT_EQ(s.compressor->generator, "compressor72_proposed");
  EXPECT_EQ(s.compressor->params.at("middle-pick"), 1);
}

TEST(BlockSpecTest, NormalizeFillsDefaults) {
  BlockSpec s = normalize(parse_block_spec("array_reducer"));
  EXPECT_EQ(s.params.at("rows"), 7);
  EXPECT_EQ(s.params.at("cols"), 8);
  ASSERT_TRUE(s.compressor);
  EXPECT_EQ(to_string(s),
            "array_reducer(cols=8,rows=7,compressor=compressor72_proposed("
            "middle-pick=0))");
  EXPECT_EQ(to_string(normalize(parse_block_spec(to_string(s)))),
            to_string(s));
}

TEST(BlockSpecTest, Errors) {
  EXPECT_THROW(normalize(parse_block_spec("nosuchblock")),
               UnknownGeneratorError);
  EXPECT_THROW(normalize(parse_block_spec("kogge_stone(width=0)")),
               ParameterError);
  EXPECT_THROW(normalize(parse_block_spec("kogge_stone(cols=3)")),
               ParameterError);
  EXPECT_THROW(normalize(parse_block_spec("array_reducer(rows=6)")),
               ParameterError);
  EXPECT_THROW(normalize(parse_block_spec("sfa(middle-pick=2)")),
               ParameterError);
  EXPECT_THROW(normalize(parse_block_spec("pipeline(compressor=sfa)")),
               ParameterError);
  EXPECT_THROW(normalize(parse_block_spec("sfa(compressor=sfa)")),
               ParameterError);
  EXPECT_THROW(parse_block_spec("kogge_stone(width=8"), ParameterError);
  EXPECT_THROW(parse_block_spec("kogge_stone(width=8,width=9)"),
               ParameterError);
  EXPECT_THROW(parse_block_spec("kogge_stone(width=x)"), ParameterError);
  EXPECT_THROW(parse_block_spec(""), ParameterError);
}

TEST(BlockSpecTest, EveryGeneratorBuildsAndFitsItsContract) {
  for (const GeneratorInfo& g : generators()) {
    BlockSpec s = normalize(BlockSpec{std::string(g.name), {}, nullptr});
    Circuit c = build(s);
    EXPECT_NO_THROW(contract_for(s, c)) << g.name;
  }
}

TEST(BlockSpecTest, BuildHonoursParameters) {
  EXPECT_EQ(build(parse_block_spec("kogge_stone(width=4)")).inputs().size(),
            9u);
  EXPECT_EQ(build(parse_block_spec("pipeline(cols=2)")).inputs().size(), 14u);
  Circuit cascade = build(parse_block_spec(
      "pipeline(cols=2,compressor=compressor72_cascade)"));
  EXPECT_EQ(cascade.name(), "pipeline_2_compressor72_cascade");
}

TEST(BlockSpecTest, JsonForm) {
  auto j = to_json(normalize(parse_block_spec("kogge_stone")));
  EXPECT_EQ(j["generator"], "kogge_stone");
  EXPECT_EQ(j["params"]["width"], 8);
  EXPECT_FALSE(j.contains("compressor"));
}

}  // namespace
}  // namespace c72
