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

#ifndef C72_SIMULATE_H_
#define C72_SIMULATE_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "c72/netlist.h"

namespace c72 {

using Bits = std::vector<std::uint8_t>;

// Serial reference evaluator: one vector, one byte per bit, cells visited in
// topological order. Inputs follow circuit.inputs(); outputs follow
// circuit.outputs(). Throws NetlistError on a size mismatch.
Bits evaluate(const Circuit& circuit, std::span<const std::uint8_t> inputs);

// Value of every net, indexed by NetRef.
Bits evaluate_nets(const Circuit& circuit,
                   std::span<const std::uint8_t> inputs);

// Name-keyed form. Throws NetlistError when an input is missing or a name
// is not an input port.
std::map<std::string, bool> evaluate(const Circuit& circuit,
                                     const std::map<std::string, bool>& inputs);

// Bit-sliced kernel: lane k of every word belongs to vector k, so one pass
// evaluates 64 vectors. |scratch| is resized to the net count and reused.
void evaluate_lanes(const Circuit& circuit,
                    std::span<const std::uint64_t> input_lanes,
                    std::span<std::uint64_t> output_lanes,
                    std::vector<std::uint64_t>& scratch);

}  // namespace c72

#endif  // C72_SIMULATE_H_
