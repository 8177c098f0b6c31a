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

// Vector-level verification against a Contract.
//
// Input ordering: the first input port is the most significant bit of the
// vector index, so exhaustive vector k assigns input i the bit
// (k >> (n - 1 - i)) & 1 and ascending k is lexicographic order. A failing
// report always carries the lowest failing index, whatever the execution
// mode.
//
// Random mode runs the structured suite first (all zeros, all ones, a
// walking one, a walking zero, then each saturation group), then |count|
// vectors from std::mt19937_64 seeded with |seed|. Each random vector
// consumes ceil(n / 64) draws; input i is bit (i % 64) of draw (i / 64).

#ifndef C72_VERIFY_H_
#define C72_VERIFY_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "c72/netlist.h"
#include "c72/oracle.h"
#include "c72/simulate.h"
#include "json.hpp"

namespace c72 {

inline constexpr int kExhaustiveInputLimit = 24;
inline constexpr const char* kPrngName = "mt19937_64";

// kSerial runs the one-vector-at-a-time reference evaluator. kParallel runs
// the 64-lane kernel across OpenMP threads.
enum class Execution { kSerial, kParallel };

enum class VerifyMode { kExhaustive, kRandom, kStructured };
std::string_view verify_mode_name(VerifyMode mode);

class TooManyInputsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Counterexample {
  std::uint64_t index = 0;
  std::vector<std::string> ports;
  Bits inputs;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string block;
  std::string oracle;
  VerifyMode mode = VerifyMode::kExhaustive;
  std::uint64_t seed = 0;   // random mode only
  std::uint64_t count = 0;  // random vectors requested
  std::uint64_t vectors_tried = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure.has_value(); }
};

// Throws TooManyInputsError above kExhaustiveInputLimit inputs.
VerificationReport verify_exhaustive(const Circuit& circuit,
                                     const Contract& contract,
                                     Execution exec = Execution::kParallel);

VerificationReport verify_structured(const Circuit& circuit,
                                     const Contract& contract,
                                     Execution exec = Execution::kParallel);

// Throws std::invalid_argument when count is 0.
VerificationReport verify_random(const Circuit& circuit,
                                 const Contract& contract, std::uint64_t seed,
                                 std::uint64_t count,
                                 Execution exec = Execution::kParallel);

// For all 128 x-vectors, Co1 and Co2 must not change across the four
// (Ci1, Ci2) combinations. Throws ParameterError without the (7,2) ports.
VerificationReport verify_cout_independence(
    const Circuit& circuit, Execution exec = Execution::kParallel);

// The structured suite used by random mode.
std::vector<Bits> structured_vectors(const Circuit& circuit,
                                     const Contract& contract);

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace c72

#endif  // C72_VERIFY_H_
