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

// Integer-arithmetic oracles. Every contract is a weighted-sum identity,
//
//   sum_i in[i] * 2^input_weight[i] == sum_o out[o] * 2^output_weight[o],
//
// optionally strengthened by ordering constraints on the outputs and
// restricted by ordering preconditions on the inputs. The sums are exact
// for any number of ports.

#ifndef C72_ORACLE_H_
#define C72_ORACLE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c72/netlist.h"

namespace c72 {

struct Contract {
  std::string id;
  std::vector<int> input_weights;
  std::vector<int> output_weights;
  // out[first] >= out[second]
  std::vector<std::pair<std::size_t, std::size_t>> output_order;
  // Vectors violating in[first] >= in[second] are don't-cares.
  std::vector<std::pair<std::size_t, std::size_t>> input_order;
  // Input groups set to all-ones by the structured suite (array columns).
  std::vector<std::vector<std::size_t>> saturation_groups;
};

struct Mismatch {
  std::string expected;
  std::string actual;
};

// Known ids: sorter, half-sorter, ordered-triple, sfa, full-adder,
// compressor72, adder, array-sum. Throws ParameterError for an unknown id
// or when the circuit's ports do not fit the contract.
Contract make_contract(std::string_view id, const Circuit& circuit);

bool applies(const Contract& contract, std::span<const std::uint8_t> in);

// nullopt when the vector satisfies the contract or is a don't-care.
std::optional<Mismatch> check(const Contract& contract,
                              std::span<const std::uint8_t> in,
                              std::span<const std::uint8_t> out);

// Exact weighted sum of bits, as binary digits (LSB first, no trailing
// zeros).
std::vector<std::uint8_t> weighted_sum(std::span<const std::uint8_t> bits,
                                       std::span<const int> weights);
// Decimal when the value fits in 64 bits, otherwise "0b" + binary digits.
std::string format_binary_value(std::span<const std::uint8_t> digits);

}  // namespace c72

#endif  // C72_ORACLE_H_
