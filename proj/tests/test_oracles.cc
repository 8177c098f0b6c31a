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

#include "test_oracles.h"

namespace c72::oracles {

Bits vector_bits(std::uint64_t index, std::size_t n) {
  Bits bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (index >> (n - 1 - i)) & 1;
  return bits;
}

Named name_inputs(const Circuit& circuit, const Bits& bits) {
  Named named;
  for (std::size_t i = 0; i < circuit.inputs().size(); ++i) {
    named[circuit.inputs()[i].name] = bits[i] != 0;
  }
  return named;
}

Named run(const Circuit& circuit, const Named& inputs) {
  return evaluate(circuit, inputs);
}

std::uint64_t word(const Named& ports, const std::string& prefix, int count) {
  std::uint64_t v = 0;
  for (int j = 0; j < count; ++j) {
    if (ports.at(prefix + std::to_string(j))) v |= std::uint64_t{1} << j;
  }
  return v;
}

int compressor_inputs_total(const Named& in) {
  int total = in.at("Ci1") + in.at("Ci2");
  for (int i = 1; i <= 7; ++i) total += in.at("x" + std::to_string(i));
  return total;
}

int compressor_outputs_total(const Named& out) {
  return out.at("Sum") + 2 * out.at("Carry") + 2 * out.at("Co1") +
         4 * out.at("Co2");
}

std::uint64_t Array::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t r : rows) t += r;
  return t;
}

Named Array::ports() const {
  Named named;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < cols; ++c) {
      named["r" + std::to_string(r) + "_c" + std::to_string(c)] =
          (rows[r] >> c) & 1;
    }
  }
  return named;
}

Array random_array(std::mt19937_64& rng, int cols) {
  Array a{cols, std::vector<std::uint64_t>(7)};
  const std::uint64_t mask =
      cols >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
  for (std::uint64_t& r : a.rows) r = rng() & mask;
  return a;
}

Array filled_array(int cols, bool value) {
  const std::uint64_t mask =
      cols >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
  return Array{cols, std::vector<std::uint64_t>(7, value ? mask : 0)};
}

}  // namespace c72::oracles
