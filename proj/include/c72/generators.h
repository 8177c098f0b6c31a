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

// Deterministic circuit generators: the sorting-network carry logic, the
// two full adders, both (7,2) compressors, and the 7-row array harness.
//
// Port conventions
//   sorter2           In1 In2 -> Out1 (max) Out2 (min)
//   half_sorter4      i1..i4  -> w1 w2 w3 w4    (w1 max, w4 min)
//   sorting_network4  i1..i4  -> o1 o2 o3 o4    (descending)
//   sfa_core          X Y Z   -> Carry Sum      (X >= Y >= Z assumed)
//   sfa               i1..i4  -> Carry Sum W
//   traditional_fa    A B C   -> Carry Sum
//   adjusted_fa       A B C   -> Carry Sum      (C may arrive 2 stages late)
//   compressor72_*    x1..x7 Ci1 Ci2 -> Sum Carry Co1 Co2
//   kogge_stone(w)    a0.. b0.. cin -> s0.. cout
//   array_reducer     r<row>_c<col> -> s<col> (weight 2^col)
//                                      k<col> (weight 2^(col+1))
//   pipeline          r<row>_c<col> -> p0..p<cols+2>

#ifndef C72_GENERATORS_H_
#define C72_GENERATORS_H_

#include <stdexcept>

#include "c72/netlist.h"

namespace c72 {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Which half-sorter middle wire becomes the SFA's Y input. The other one is
// forwarded as W.
enum class MiddlePick { kFirst, kSecond };

inline constexpr int kArrayRows = 7;

Circuit sorter2();
Circuit half_sorter4();
Circuit sorting_network4();
Circuit sfa_core();
Circuit sfa(MiddlePick pick = MiddlePick::kFirst);
Circuit traditional_fa();
Circuit adjusted_fa();
Circuit compressor72_proposed(MiddlePick pick = MiddlePick::kFirst);
Circuit compressor72_cascade();
Circuit kogge_stone(int width);

// One compressor per column plus two zero-input extension columns that
// absorb trailing horizontal carries. |compressor| must expose the (7,2)
// port set.
Circuit array_reducer(int rows, int cols, const Circuit& compressor);
// array_reducer followed by a (cols + 3)-bit Kogge-Stone merge adder.
Circuit pipeline(int cols, const Circuit& compressor);

// Throws ParameterError when |circuit| lacks the (7,2) port set.
void require_compressor_ports(const Circuit& circuit);

}  // namespace c72

#endif  // C72_GENERATORS_H_
