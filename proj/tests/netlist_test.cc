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

#include "c72/netlist.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "c72/generators.h"
#include "c72/simulate.h"
#include "test_oracles.h"

namespace c72 {
namespace {

bool has_violation(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

TEST(GateKindTest, NamesRoundTrip) {
  for (GateKind k : kAllGateKinds) {
    auto parsed = parse_gate_kind(gate_kind_name(k));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, k);
  }
  EXPECT_FALSE(parse_gate_kind("XOR2").has_value());
  EXPECT_EQ(arity(GateKind::kInv), 1);
  EXPECT_EQ(arity(GateKind::kNor2), 2);
}

TEST(CircuitBuilderTest, RejectsEmptyInputList) {
  EXPECT_THROW(CircuitBuilder("c", {}), NetlistError);
}

TEST(CircuitBuilderTest, RejectsEmptyAndDuplicateNames) {
  EXPECT_THROW(CircuitBuilder("", {"a"}), NetlistError);
  EXPECT_THROW(CircuitBuilder("c", {"a", ""}), NetlistError);
  EXPECT_THROW(CircuitBuilder("c", {"a", "b", "a"}), NetlistError);
  EXPECT_THROW(CircuitBuilder("c", {"9a"}), NetlistError);
}

TEST(CircuitBuilderTest, RejectsWrongArity) {
  CircuitBuilder b("c", {"a", "b"});
  NetRef a = b.input("a");
  NetRef bb = b.input("b");
  EXPECT_THROW(b.add_gate(GateKind::kAnd2, {a}), NetlistError);
  EXPECT_THROW(b.add_gate(GateKind::kInv, {a, bb}), NetlistError);
  EXPECT_THROW(b.add_macro(MacroKind::kMux2, {a, bb}), NetlistError);
}

TEST(CircuitBuilderTest, RejectsUndrivenNet) {
  CircuitBuilder b("c", {"a"});
  EXPECT_THROW(b.and2(b.input("a"), NetRef{42}), NetlistError);
  EXPECT_THROW(b.add_output("y", NetRef{42}), NetlistError);
}

TEST(CircuitBuilderTest, RejectsDuplicateOutput) {
  CircuitBuilder b("c", {"a"});
  b.add_output("y", b.input("a"));
  EXPECT_THROW(b.add_output("y", b.input("a")), NetlistError);
  EXPECT_THROW(b.add_output("a", b.input("a")), NetlistError);
}

TEST(CircuitBuilderTest, UnknownInputPortThrows) {
  CircuitBuilder b("c", {"a"});
  EXPECT_THROW(b.input("b"), NetlistError);
}

TEST(CircuitBuilderTest, InvertersAreShared) {
  CircuitBuilder b("c", {"a"});
  NetRef a = b.input("a");
  NetRef n1 = b.inv(a);
  NetRef n2 = b.inv(a);
  EXPECT_EQ(n1, n2);
  b.add_output("y", n1);
  Circuit c = std::move(b).seal();
  EXPECT_EQ(c.cells().size(), 1u);
}

TEST(CircuitBuilderTest, ConstantsAreSingletons) {
  CircuitBuilder b("c", {"a"});
  EXPECT_EQ(b.constant(false), b.constant(false));
  EXPECT_NE(b.constant(false), b.constant(true));
  b.add_output("lo", b.constant(false));
  b.add_output("hi", b.constant(true));
  Circuit c = std::move(b).seal();
  Bits out = evaluate(c, Bits{1});
  EXPECT_EQ(out, (Bits{0, 1}));
}

TEST(CircuitBuilderTest, SealTwiceThrows) {
  CircuitBuilder b("c", {"a"});
  b.add_output("y", b.input("a"));
  Circuit c = std::move(b).seal();
  EXPECT_THROW(std::move(b).seal(), NetlistError);
}

TEST(MacroTest, XorTruthTable) {
  CircuitBuilder b("x", {"a", "b"});
  b.add_output("y", b.xor2(b.input("a"), b.input("b")));
  Circuit c = std::move(b).seal();
  for (int v = 0; v < 4; ++v) {
    Bits in = oracles::vector_bits(v, 2);
    EXPECT_EQ(evaluate(c, in)[0], in[0] ^ in[1]) << v;
  }
  for (const Circuit::Cell& cell : c.cells()) {
    EXPECT_NE(cell.kind, GateKind::kInv);
  }
}

TEST(MacroTest, MuxTruthTable) {
  CircuitBuilder b("m", {"s", "d0", "d1"});
  b.add_output("y", b.mux2(b.input("s"), b.input("d0"), b.input("d1")));
  Circuit c = std::move(b).seal();
  for (int v = 0; v < 8; ++v) {
    Bits in = oracles::vector_bits(v, 3);
    EXPECT_EQ(evaluate(c, in)[0], in[0] ? in[2] : in[1]) << v;
  }
}

TEST(InstantiateTest, CopiesAreDisjointAndBehave) {
  Circuit s = sorter2();
  CircuitBuilder b("two", {"a", "b", "c", "d"});
  PortBindings first = b.instantiate(
      s, {{"In1", b.input("a")}, {"In2", b.input("b")}});
  PortBindings second = b.instantiate(
      s, {{"In1", b.input("c")}, {"In2", b.input("d")}});
  b.add_output("hi1", first.at("Out1"));
  b.add_output("lo1", first.at("Out2"));
  b.add_output("hi2", second.at("Out1"));
  b.add_output("lo2", second.at("Out2"));
  Circuit c = std::move(b).seal();

  EXPECT_EQ(c.cells().size(), 2 * s.cells().size());
  std::set<std::string> names;
  for (const Circuit::Net& n : c.nets()) {
    EXPECT_TRUE(names.insert(n.name).second) << n.name;
  }
  ASSERT_EQ(c.instances().size(), 2u);
  EXPECT_EQ(c.instances()[0].path, "sorter2_0");
  EXPECT_EQ(c.instances()[1].path, "sorter2_1");
  EXPECT_NE(first.at("Out1"), second.at("Out1"));

  for (int v = 0; v < 16; ++v) {
    Bits in = oracles::vector_bits(v, 4);
    Bits out = evaluate(c, in);
    EXPECT_EQ(out[0], in[0] | in[1]);
    EXPECT_EQ(out[1], in[0] & in[1]);
    EXPECT_EQ(out[2], in[2] | in[3]);
    EXPECT_EQ(out[3], in[2] & in[3]);
  }
}

TEST(InstantiateTest, NestedInstancesKeepPaths) {
  Circuit c = sfa();
  std::vector<std::string> paths;
  for (const Circuit::Instance& i : c.instances()) paths.push_back(i.path);
  EXPECT_NE(std::find(paths.begin(), paths.end(), "hs/l1a"), paths.end());
  EXPECT_NE(std::find(paths.begin(), paths.end(), "core"), paths.end());
}

TEST(InstantiateTest, UnboundOrUnknownPortThrows) {
  Circuit s = sorter2();
  CircuitBuilder b("c", {"a"});
  EXPECT_THROW(b.instantiate(s, {{"In1", b.input("a")}}), NetlistError);
  EXPECT_THROW(b.instantiate(s, {{"In1", b.input("a")},
                                 {"In2", b.input("a")},
                                 {"In3", b.input("a")}}),
               NetlistError);
}

TEST(ValidateTest, ReportsUndrivenNet) {
  NetlistDesc d{"c", {"a"}, {}, {{"y", "t"}}, {{GateKind::kAnd2, {"a", "u"}, "t"}}};
  auto vs = validate(d);
  EXPECT_TRUE(has_violation(vs, ViolationKind::kUndriven));
  EXPECT_THROW(Circuit::from_description(d), NetlistError);
}

TEST(ValidateTest, ReportsCycle) {
  NetlistDesc d{"c",
                {"a"},
                {},
                {{"y", "t"}},
                {{GateKind::kAnd2, {"a", "u"}, "t"},
                 {GateKind::kOr2, {"a", "t"}, "u"}}};
  auto vs = validate(d);
  EXPECT_TRUE(has_violation(vs, ViolationKind::kCycle));
  EXPECT_FALSE(has_violation(vs, ViolationKind::kUndriven));
  EXPECT_THROW(Circuit::from_description(d), NetlistError);
}

TEST(ValidateTest, ReportsMultipleDriversAndArity) {
  NetlistDesc d{"c",
                {"a", "b"},
                {},
                {{"y", "a"}},
                {{GateKind::kInv, {"a", "b"}, "b"}}};
  auto vs = validate(d);
  EXPECT_TRUE(has_violation(vs, ViolationKind::kArity));
  EXPECT_TRUE(has_violation(vs, ViolationKind::kMultipleDrivers));
}

TEST(ValidateTest, ReportsDuplicatePortsAndEmptyNames) {
  NetlistDesc d{"", {"a", "a"}, {}, {{"a", "a"}}, {}};
  auto vs = validate(d);
  EXPECT_TRUE(has_violation(vs, ViolationKind::kDuplicatePort));
  EXPECT_TRUE(has_violation(vs, ViolationKind::kEmptyName));
}

TEST(ValidateTest, GeneratedCircuitsAreClean) {
  for (const Circuit& c : {sorter2(), sfa(), compressor72_proposed(),
                           compressor72_cascade(), kogge_stone(8),
                           pipeline(4, compressor72_proposed())}) {
    EXPECT_TRUE(validate(c).empty()) << c.name();
  }
}

TEST(DescribeTest, FromDescriptionOrdersCellsTopologically) {
  NetlistDesc d{"c",
                {"a", "b"},
                {},
                {{"y", "t2"}},
                {{GateKind::kOr2, {"t1", "b"}, "t2"},
                 {GateKind::kAnd2, {"a", "b"}, "t1"}}};
  Circuit c = Circuit::from_description(d);
  ASSERT_EQ(c.cells().size(), 2u);
  EXPECT_EQ(c.cells()[0].kind, GateKind::kAnd2);
  for (int v = 0; v < 4; ++v) {
    Bits in = oracles::vector_bits(v, 2);
    EXPECT_EQ(evaluate(c, in)[0], (in[0] & in[1]) | in[1]);
  }
}

TEST(DescribeTest, RoundTripIsIdentity) {
  Circuit c = compressor72_proposed();
  NetlistDesc d = c.describe();
  EXPECT_EQ(Circuit::from_description(d).describe(), d);
}

TEST(IdentifierTest, SanitizeProducesIdentifiers) {
  EXPECT_TRUE(is_identifier("r0_c1"));
  EXPECT_FALSE(is_identifier("a/b"));
  EXPECT_EQ(sanitize_identifier("a/b"), "a_b");
  EXPECT_EQ(sanitize_identifier("1x"), "_1x");
  EXPECT_TRUE(is_identifier(sanitize_identifier("hs/l1a-Out1")));
}

}  // namespace
}  // namespace c72
