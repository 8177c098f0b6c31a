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

// Named, parameterized references to generators.
//
// Text form:  generator[(key=value,...)]
// where a value is an integer or, for the "compressor" key, a nested block:
//   kogge_stone(width=8)
//   pipeline(cols=8,compressor=compressor72_cascade)

#ifndef C72_BLOCK_SPEC_H_
#define C72_BLOCK_SPEC_H_

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "c72/netlist.h"
#include "c72/oracle.h"
#include "json.hpp"

namespace c72 {

class UnknownGeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BlockSpec {
  std::string generator;
  std::map<std::string, std::int64_t> params;
  // Set only for generators that embed a (7,2) compressor.
  std::shared_ptr<const BlockSpec> compressor;
};

struct ParamInfo {
  std::string_view name;
  std::int64_t default_value;
};

struct GeneratorInfo {
  std::string_view name;
  std::string_view contract;  // oracle used by verify
  std::vector<ParamInfo> params;
  bool takes_compressor = false;
  std::string_view summary;
};

std::span<const GeneratorInfo> generators();
// Throws UnknownGeneratorError.
const GeneratorInfo& generator_info(std::string_view name);

// Fills defaults and checks names and ranges. Throws UnknownGeneratorError
// or ParameterError.
BlockSpec normalize(const BlockSpec& spec);

BlockSpec parse_block_spec(std::string_view text);
// Canonical text form of the normalized spec.
std::string to_string(const BlockSpec& spec);
nlohmann::ordered_json to_json(const BlockSpec& spec);

Circuit build(const BlockSpec& spec);
Contract contract_for(const BlockSpec& spec, const Circuit& circuit);

}  // namespace c72

#endif  // C72_BLOCK_SPEC_H_
