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

#include "c72/oracle.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>

#include "c72/generators.h"

namespace c72 {
namespace {

// Splits "a12" into ("a", 12) and "r3_c5" into ("r3_c", 5).
std::optional<std::pair<std::string_view, int>> split_index(
    std::string_view name) {
  std::size_t pos = name.size();
  while (pos > 0 && name[pos - 1] >= '0' && name[pos - 1] <= '9') --pos;
  if (pos == name.size()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(name.data() + pos, name.data() + name.size(), value);
  if (ec != std::errc()) return std::nullopt;
  return std::make_pair(name.substr(0, pos), value);
}

[[noreturn]] void port_error(std::string_view id, const Circuit& c,
                             std::string_view port) {
  throw ParameterError("contract '" + std::string(id) + "' does not fit '" +
                       c.name() + "': unexpected port '" + std::string(port) +
                       "'");
}

std::size_t out_index(std::string_view id, const Circuit& c,
                      std::string_view port) {
  auto i = c.output_index(port);
  if (!i) port_error(id, c, port);
  return *i;
}

std::size_t in_index(std::string_view id, const Circuit& c,
                     std::string_view port) {
  auto i = c.input_index(port);
  if (!i) port_error(id, c, port);
  return *i;
}

// Every weight from a fixed name table; ports outside it are an error.
void weights_by_name(Contract& k, const Circuit& c,
                     const std::map<std::string_view, int>& in,
                     const std::map<std::string_view, int>& out) {
  for (const Circuit::Port& p : c.inputs()) {
    auto it = in.find(p.name);
    if (it == in.end()) port_error(k.id, c, p.name);
    k.input_weights.push_back(it->second);
  }
  for (const Circuit::Port& p : c.outputs()) {
    auto it = out.find(p.name);
    if (it == out.end()) port_error(k.id, c, p.name);
    k.output_weights.push_back(it->second);
  }
  if (k.input_weights.size() != in.size() ||
      k.output_weights.size() != out.size()) {
    throw ParameterError("contract '" + k.id + "' does not fit '" + c.name() +
                         "': missing ports");
  }
}

std::string bit_pattern(std::span<const std::uint8_t> bits) {
  std::string s;
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// Exact sum when every weight is below 48 and at most 2^15 bits are set.
std::optional<std::uint64_t> narrow_sum(std::span<const std::uint8_t> bits,
                                        std::span<const int> weights) {
  if (bits.size() > (std::size_t{1} << 15)) return std::nullopt;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (weights[i] >= 48) return std::nullopt;
    if (bits[i]) total += std::uint64_t{1} << weights[i];
  }
  return total;
}

}  // namespace

std::vector<std::uint8_t> weighted_sum(std::span<const std::uint8_t> bits,
                                       std::span<const int> weights) {
  std::vector<std::uint64_t> count;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    std::size_t w = static_cast<std::size_t>(weights[i]);
    if (count.size() <= w) count.resize(w + 1, 0);
    ++count[w];
  }
  std::vector<std::uint8_t> digits;
  std::uint64_t carry = 0;
  for (std::size_t w = 0; w < count.size() || carry != 0; ++w) {
    std::uint64_t total = carry + (w < count.size() ? count[w] : 0);
    digits.push_back(static_cast<std::uint8_t>(total & 1));
    carry = total >> 1;
  }
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return digits;
}

std::string format_binary_value(std::span<const std::uint8_t> digits) {
  if (digits.size() <= 64) {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = (v << 1) | digits[i];
    return std::to_string(v);
  }
  std::string s = "0b";
  for (std::size_t i = digits.size(); i-- > 0;) s.push_back(digits[i] ? '1' : '0');
  return s;
}

Contract make_contract(std::string_view id, const Circuit& c) {
  Contract k;
  k.id = std::string(id);
  if (id == "sorter") {
    k.input_weights.assign(c.inputs().size(), 0);
    k.output_weights.assign(c.outputs().size(), 0);
    if (c.inputs().size() != c.outputs().size()) {
      throw ParameterError("sorter contract needs as many outputs as inputs");
    }
    for (std::size_t o = 0; o + 1 < c.outputs().size(); ++o) {
      k.output_order.emplace_back(o, o + 1);
    }
  } else if (id == "half-sorter") {
    weights_by_name(k, c, {{"i1", 0}, {"i2", 0}, {"i3", 0}, {"i4", 0}},
                    {{"w1", 0}, {"w2", 0}, {"w3", 0}, {"w4", 0}});
    std::size_t w1 = out_index(id, c, "w1");
    std::size_t w2 = out_index(id, c, "w2");
    std::size_t w3 = out_index(id, c, "w3");
    std::size_t w4 = out_index(id, c, "w4");
    k.output_order = {{w1, w2}, {w2, w4}, {w1, w3}, {w3, w4}};
  } else if (id == "ordered-triple") {
    weights_by_name(k, c, {{"X", 0}, {"Y", 0}, {"Z", 0}},
                    {{"Carry", 1}, {"Sum", 0}});
    k.input_order = {{in_index(id, c, "X"), in_index(id, c, "Y")},
                     {in_index(id, c, "Y"), in_index(id, c, "Z")}};
  } else if (id == "sfa") {
    weights_by_name(k, c, {{"i1", 0}, {"i2", 0}, {"i3", 0}, {"i4", 0}},
                    {{"Carry", 1}, {"Sum", 0}, {"W", 0}});
  } else if (id == "full-adder") {
    weights_by_name(k, c, {{"A", 0}, {"B", 0}, {"C", 0}},
                    {{"Carry", 1}, {"Sum", 0}});
  } else if (id == "compressor72") {
    weights_by_name(k, c,
                    {{"x1", 0}, {"x2", 0}, {"x3", 0}, {"x4", 0}, {"x5", 0},
                     {"x6", 0}, {"x7", 0}, {"Ci1", 0}, {"Ci2", 0}},
                    {{"Sum", 0}, {"Carry", 1}, {"Co1", 1}, {"Co2", 2}});
  } else if (id == "adder") {
    int width = 0;
    for (const Circuit::Port& p : c.inputs()) {
      if (p.name == "cin") {
        k.input_weights.push_back(0);
        continue;
      }
      auto split = split_index(p.name);
      if (!split || (split->first != "a" && split->first != "b")) {
        port_error(id, c, p.name);
      }
      k.input_weights.push_back(split->second);
      width = std::max(width, split->second + 1);
    }
    for (const Circuit::Port& p : c.outputs()) {
      if (p.name == "cout") {
        k.output_weights.push_back(width);
        continue;
      }
      auto split = split_index(p.name);
      if (!split || split->first != "s") port_error(id, c, p.name);
      k.output_weights.push_back(split->second);
    }
  } else if (id == "array-sum") {
    std::map<int, std::vector<std::size_t>> columns;
    for (std::size_t i = 0; i < c.inputs().size(); ++i) {
      const std::string& name = c.inputs()[i].name;
      auto split = split_index(name);
      if (!split || split->first.size() < 3 || split->first.front() != 'r' ||
          !split->first.ends_with("_c")) {
        port_error(id, c, name);
      }
      k.input_weights.push_back(split->second);
      columns[split->second].push_back(i);
    }
    for (const Circuit::Port& p : c.outputs()) {
      auto split = split_index(p.name);
      if (!split) port_error(id, c, p.name);
      if (split->first == "s" || split->first == "p") {
        k.output_weights.push_back(split->second);
      } else if (split->first == "k") {
        k.output_weights.push_back(split->second + 1);
      } else {
        port_error(id, c, p.name);
      }
    }
    for (auto& [col, members] : columns) {
      k.saturation_groups.push_back(std::move(members));
    }
  } else {
    throw ParameterError("unknown contract '" + std::string(id) + "'");
  }
  return k;
}

bool applies(const Contract& contract, std::span<const std::uint8_t> in) {
  return std::all_of(contract.input_order.begin(), contract.input_order.end(),
                     [&](const auto& pair) {
                       return in[pair.first] >= in[pair.second];
                     });
}

std::optional<Mismatch> check(const Contract& contract,
                              std::span<const std::uint8_t> in,
                              std::span<const std::uint8_t> out) {
  if (!applies(contract, in)) return std::nullopt;
  auto lhs_narrow = narrow_sum(in, contract.input_weights);
  auto rhs_narrow = narrow_sum(out, contract.output_weights);
  if (!lhs_narrow || !rhs_narrow || *lhs_narrow != *rhs_narrow) {
    std::vector<std::uint8_t> lhs = weighted_sum(in, contract.input_weights);
    std::vector<std::uint8_t> rhs = weighted_sum(out, contract.output_weights);
    if (lhs != rhs) {
      return Mismatch{"weighted sum " + format_binary_value(lhs),
                      "weighted sum " + format_binary_value(rhs)};
    }
  }
  for (const auto& [hi, lo] : contract.output_order) {
    if (out[hi] < out[lo]) {
      return Mismatch{"out[" + std::to_string(hi) + "] >= out[" +
                          std::to_string(lo) + "]",
                      "outputs " + bit_pattern(out)};
    }
  }
  return std::nullopt;
}

}  // namespace c72
