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

// Interchange formats. JSON is the only format that can be read back; HDL
// and DOT are export-only.
//
// HDL identifiers: characters outside [A-Za-z0-9_] become '_', a leading
// digit gets a '_' prefix, Verilog keywords get a '_' suffix, and clashes
// are resolved with "_<k>" suffixes. An output port takes over the wire of
// the cell that drives it; the only continuous assignments emitted are for
// outputs driven by an input, a constant, or a net already claimed by an
// earlier output.

#ifndef C72_EXPORT_H_
#define C72_EXPORT_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "c72/netlist.h"
#include "c72/timing.h"

namespace c72 {

class ImportError : public std::runtime_error {
 public:
  ImportError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message),
        location_(std::move(location)) {}
  // "byte <n>" for syntax errors, a JSON pointer for schema errors.
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_json(const Circuit& circuit);
// Throws ImportError.
Circuit from_json(std::string_view text);

std::string to_structural_hdl(const Circuit& circuit);

// Throws std::invalid_argument when |annotations| was computed for a
// different circuit shape.
std::string to_dot(const Circuit& circuit,
                   const ArrivalMap* annotations = nullptr);

// Writes through a sibling temporary and renames it into place.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace c72

#endif  // C72_EXPORT_H_
