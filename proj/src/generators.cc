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

#include "c72/generators.h"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace c72 {
namespace {

std::vector<std::string> numbered(std::string_view prefix, int first,
                                  int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) {
    names.push_back(std::string(prefix) + std::to_string(first + i));
  }
  return names;
}

std::string cell_name(int row, int col) {
  return "r" + std::to_string(row) + "_c" + std::to_string(col);
}

}  // namespace

Circuit sorter2() {
  CircuitBuilder b("sorter2", {"In1", "In2"});
  NetRef hi = b.or2(b.input("In1"), b.input("In2"), "max");
  NetRef lo = b.and2(b.input("In1"), b.input("In2"), "min");
  b.add_output("Out1", hi);
  b.add_output("Out2", lo);
  return std::move(b).seal();
}

Circuit half_sorter4() {
  const Circuit cmp = sorter2();
  CircuitBuilder b("half_sorter4", {"i1", "i2", "i3", "i4"});
  // Layer 1: sort the pairs (i1, i2) and (i3, i4).
  PortBindings left =
      b.instantiate(cmp, {{"In1", b.input("i1")}, {"In2", b.input("i2")}},
                    "l1a");
  PortBindings right =
      b.instantiate(cmp, {{"In1", b.input("i3")}, {"In2", b.input("i4")}},
                    "l1b");
  // Layer 2: maxima against maxima, minima against minima.
  PortBindings top =
      b.instantiate(cmp, {{"In1", left.at("Out1")}, {"In2", right.at("Out1")}},
                    "l2a");
  PortBindings bottom =
      b.instantiate(cmp, {{"In1", left.at("Out2")}, {"In2", right.at("Out2")}},
                    "l2b");
  b.add_output("w1", top.at("Out1"));
  b.add_output("w2", top.at("Out2"));
  b.add_output("w3", bottom.at("Out1"));
  b.add_output("w4", bottom.at("Out2"));
  return std::move(b).seal();
}

Circuit sorting_network4() {
  CircuitBuilder b("sorting_network4", {"i1", "i2", "i3", "i4"});
  PortBindings half = b.instantiate(half_sorter4(),
                                    {{"i1", b.input("i1")},
                                     {"i2", b.input("i2")},
                                     {"i3", b.input("i3")},
                                     {"i4", b.input("i4")}},
                                    "hs");
  PortBindings middle = b.instantiate(
      sorter2(), {{"In1", half.at("w2")}, {"In2", half.at("w3")}}, "l3");
  b.add_output("o1", half.at("w1"));
  b.add_output("o2", middle.at("Out1"));
  b.add_output("o3", middle.at("Out2"));
  b.add_output("o4", half.at("w4"));
  return std::move(b).seal();
}

Circuit sfa_core() {
  CircuitBuilder b("sfa_core", {"X", "Y", "Z"});
  NetRef x = b.input("X");
  NetRef y = b.input("Y");
  NetRef z = b.input("Z");
  // Sum = X(~Y + Z); Carry is Y itself.
  NetRef sum = b.and2(x, b.or2(b.inv(y), z, "ny_or_z"), "sum");
  b.add_output("Carry", y);
  b.add_output("Sum", sum);
  return std::move(b).seal();
}

Circuit sfa(MiddlePick pick) {
  CircuitBuilder b("sfa", {"i1", "i2", "i3", "i4"});
  PortBindings half = b.instantiate(half_sorter4(),
                                    {{"i1", b.input("i1")},
                                     {"i2", b.input("i2")},
                                     {"i3", b.input("i3")},
                                     {"i4", b.input("i4")}},
                                    "hs");
  NetRef y = pick == MiddlePick::kFirst ? half.at("w2") : half.at("w3");
  NetRef w = pick == MiddlePick::kFirst ? half.at("w3") : half.at("w2");
  PortBindings core = b.instantiate(
      sfa_core(), {{"X", half.at("w1")}, {"Y", y}, {"Z", half.at("w4")}},
      "core");
  b.add_output("Carry", core.at("Carry"));
  b.add_output("Sum", core.at("Sum"));
  b.add_output("W", w);
  return std::move(b).seal();
}

Circuit traditional_fa() {
  CircuitBuilder b("traditional_fa", {"A", "B", "C"});
  NetRef a = b.input("A");
  NetRef bb = b.input("B");
  NetRef c = b.input("C");
  // Carry = AB + AC + BC as a two-input AND/OR tree.
  NetRef ab = b.and2(a, bb, "ab");
  NetRef ac = b.and2(a, c, "ac");
  NetRef bc = b.and2(bb, c, "bc");
  NetRef carry = b.or2(b.or2(ab, ac, "ab_ac"), bc, "carry");
  NetRef sum = b.xor2(b.xor2(a, bb, "a_xor_b"), c, "sum");
  b.add_output("Carry", carry);
  b.add_output("Sum", sum);
  return std::move(b).seal();
}

Circuit adjusted_fa() {
  CircuitBuilder b("adjusted_fa", {"A", "B", "C"});
  NetRef a = b.input("A");
  NetRef bb = b.input("B");
  NetRef c = b.input("C");
  NetRef h1 = b.or2(a, bb, "h1");
  NetRef h2 = b.and2(a, bb, "h2");
  NetRef half_sum = b.and2(h1, b.inv(h2), "h1_nh2");
  NetRef sum = b.mux2(c, half_sum, b.inv(half_sum), "sum");
  NetRef carry = b.or2(b.and2(c, h1, "c_h1"), h2, "carry");
  b.add_output("Carry", carry);
  b.add_output("Sum", sum);
  return std::move(b).seal();
}

namespace {

std::vector<std::string> compressor_inputs() {
  std::vector<std::string> names = numbered("x", 1, 7);
  names.push_back("Ci1");
  names.push_back("Ci2");
  return names;
}

PortBindings fa_bindings(NetRef a, NetRef b, NetRef c) {
  return {{"A", a}, {"B", b}, {"C", c}};
}

}  // namespace

Circuit compressor72_proposed(MiddlePick pick) {
  const Circuit fa = adjusted_fa();
  CircuitBuilder b("compressor72_proposed", compressor_inputs());
  auto x = [&](int i) { return b.input("x" + std::to_string(i)); };

  // Stage annotations assume every input arrives at stage 0.
  PortBindings head = b.instantiate(
      sfa(pick),
      {{"i1", x(1)}, {"i2", x(2)}, {"i3", x(3)}, {"i4", x(4)}}, "sfa");
  // head: Carry@2, Sum@4, W@2
  PortBindings tail = b.instantiate(fa, fa_bindings(x(5), x(6), x(7)), "fa1");
  // tail: Carry@3, Sum@4
  PortBindings merge = b.instantiate(
      fa, fa_bindings(head.at("Sum"), tail.at("Sum"), head.at("W")), "fa2");
  // merge: Carry@7, Sum@8
  PortBindings lane2 = b.instantiate(
      fa, fa_bindings(head.at("Carry"), tail.at("Carry"), merge.at("Carry")),
      "fa3");
  // lane2: Sum@9 (weight 2), Carry@9 (weight 4)
  PortBindings out = b.instantiate(
      fa, fa_bindings(b.input("Ci1"), b.input("Ci2"), merge.at("Sum")), "fa4");
  // out: Sum@10, Carry@10

  b.add_output("Sum", out.at("Sum"));
  b.add_output("Carry", out.at("Carry"));
  b.add_output("Co1", lane2.at("Sum"));
  b.add_output("Co2", lane2.at("Carry"));
  return std::move(b).seal();
}

Circuit compressor72_cascade() {
  const Circuit fa = traditional_fa();
  CircuitBuilder b("compressor72_cascade", compressor_inputs());
  auto x = [&](int i) { return b.input("x" + std::to_string(i)); };

  PortBindings fa1 = b.instantiate(fa, fa_bindings(x(1), x(2), x(3)), "fa1");
  PortBindings fa2 = b.instantiate(fa, fa_bindings(x(4), x(5), x(6)), "fa2");
  PortBindings fa3 = b.instantiate(
      fa, fa_bindings(fa1.at("Sum"), fa2.at("Sum"), x(7)), "fa3");
  PortBindings fa4 = b.instantiate(
      fa, fa_bindings(fa1.at("Carry"), fa2.at("Carry"), fa3.at("Carry")),
      "fa4");
  PortBindings fa5 = b.instantiate(
      fa, fa_bindings(fa3.at("Sum"), b.input("Ci1"), b.input("Ci2")), "fa5");

  b.add_output("Sum", fa5.at("Sum"));
  b.add_output("Carry", fa5.at("Carry"));
  b.add_output("Co1", fa4.at("Sum"));
  b.add_output("Co2", fa4.at("Carry"));
  return std::move(b).seal();
}

Circuit kogge_stone(int width) {
  if (width < 1) {
    throw ParameterError("kogge_stone: width must be >= 1, got " +
                         std::to_string(width));
  }
  std::vector<std::string> inputs = numbered("a", 0, width);
  for (std::string& name : numbered("b", 0, width)) inputs.push_back(name);
  inputs.push_back("cin");
  CircuitBuilder b("kogge_stone_" + std::to_string(width), std::move(inputs));

  // Prefix position 0 carries cin with a known-zero propagate; position
  // j + 1 carries bit j. After the scan, G at position j is the carry into
  // bit j.
  struct Span {
    NetRef generate;
    std::optional<NetRef> propagate;  // nullopt: constant 0
  };
  std::vector<Span> level;
  std::vector<NetRef> bit_propagate;
  level.push_back({b.input("cin"), std::nullopt});
  for (int j = 0; j < width; ++j) {
    NetRef a = b.input("a" + std::to_string(j));
    NetRef bj = b.input("b" + std::to_string(j));
    std::string tag = std::to_string(j);
    NetRef g = b.and2(a, bj, "g" + tag);
    NetRef p = b.xor2(a, bj, "p" + tag);
    bit_propagate.push_back(p);
    level.push_back({g, p});
  }

  const int positions = width + 1;
  for (int distance = 1, round = 0; distance < positions;
       distance *= 2, ++round) {
    std::vector<Span> next = level;
    for (int i = distance; i < positions; ++i) {
      const Span& hi = level[i];
      const Span& lo = level[i - distance];
      if (!hi.propagate) continue;
      std::string tag = std::to_string(round) + "_" + std::to_string(i);
      // (G, P) o (G', P') = (G + P G', P P')
      NetRef g = b.or2(hi.generate, b.and2(*hi.propagate, lo.generate),
                       "G" + tag);
      std::optional<NetRef> p;
      if (lo.propagate) p = b.and2(*hi.propagate, *lo.propagate, "P" + tag);
      next[i] = {g, p};
    }
    level = std::move(next);
  }

  for (int j = 0; j < width; ++j) {
    b.add_output("s" + std::to_string(j),
                 b.xor2(bit_propagate[j], level[j].generate,
                        "sum" + std::to_string(j)));
  }
  b.add_output("cout", level[width].generate);
  return std::move(b).seal();
}

void require_compressor_ports(const Circuit& circuit) {
  for (const std::string& in : compressor_inputs()) {
    if (!circuit.input_index(in)) {
      throw ParameterError("'" + circuit.name() +
                           "' is not a (7,2) compressor: missing input " + in);
    }
  }
  for (const char* out : {"Sum", "Carry", "Co1", "Co2"}) {
    if (!circuit.output_index(out)) {
      throw ParameterError("'" + circuit.name() +
                           "' is not a (7,2) compressor: missing output " +
                           out);
    }
  }
  if (circuit.inputs().size() != 9 || circuit.outputs().size() != 4) {
    throw ParameterError("'" + circuit.name() +
                         "' is not a (7,2) compressor: extra ports");
  }
}

Circuit array_reducer(int rows, int cols, const Circuit& compressor) {
  if (rows != kArrayRows) {
    throw ParameterError("array_reducer: only " + std::to_string(kArrayRows) +
                         " rows are supported, got " + std::to_string(rows));
  }
  if (cols < 1) {
    throw ParameterError("array_reducer: cols must be >= 1, got " +
                         std::to_string(cols));
  }
  require_compressor_ports(compressor);

  std::vector<std::string> inputs;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) inputs.push_back(cell_name(r, c));
  }
  CircuitBuilder b("array_reducer_" + std::to_string(rows) + "x" +
                       std::to_string(cols),
                   std::move(inputs));

  const int columns = cols + 2;
  std::vector<NetRef> co1(columns);
  std::vector<NetRef> co2(columns);
  const NetRef zero = b.constant(false);
  for (int c = 0; c < columns; ++c) {
    PortBindings bind;
    for (int r = 0; r < rows; ++r) {
      bind.emplace("x" + std::to_string(r + 1),
                   c < cols ? b.input(cell_name(r, c)) : zero);
    }
    bind.emplace("Ci1", c >= 1 ? co1[c - 1] : zero);
    bind.emplace("Ci2", c >= 2 ? co2[c - 2] : zero);
    PortBindings out =
        b.instantiate(compressor, bind, "col" + std::to_string(c));
    co1[c] = out.at("Co1");
    co2[c] = out.at("Co2");
    b.add_output("s" + std::to_string(c), out.at("Sum"));
    b.add_output("k" + std::to_string(c), out.at("Carry"));
  }
  return std::move(b).seal();
}

Circuit pipeline(int cols, const Circuit& compressor) {
  Circuit reducer = array_reducer(kArrayRows, cols, compressor);
  std::vector<std::string> inputs;
  for (const Circuit::Port& p : reducer.inputs()) inputs.push_back(p.name);
  CircuitBuilder b("pipeline_" + std::to_string(cols) + "_" + compressor.name(),
                   std::move(inputs));

  PortBindings bind;
  for (const Circuit::Port& p : reducer.inputs()) {
    bind.emplace(p.name, b.input(p.name));
  }
  PortBindings rows = b.instantiate(reducer, bind, "reduce");

  // 7 * (2^cols - 1) < 2^(cols + 3)
  const int width = cols + 3;
  const int columns = cols + 2;
  const NetRef zero = b.constant(false);
  PortBindings add_bind;
  for (int j = 0; j < width; ++j) {
    std::string tag = std::to_string(j);
    add_bind.emplace("a" + tag,
                     j < columns ? rows.at("s" + tag) : zero);
    add_bind.emplace("b" + tag,
                     j >= 1 ? rows.at("k" + std::to_string(j - 1)) : zero);
  }
  add_bind.emplace("cin", zero);
  PortBindings sum = b.instantiate(kogge_stone(width), add_bind, "merge");
  for (int j = 0; j < width; ++j) {
    b.add_output("p" + std::to_string(j), sum.at("s" + std::to_string(j)));
  }
  return std::move(b).seal();
}

}  // namespace c72
