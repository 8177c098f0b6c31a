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

#ifndef C72_VERSION_H_
#define C72_VERSION_H_

namespace c72 {

inline constexpr const char* kToolVersion = "0.1.0";
// Version of every JSON document this library reads or writes.
inline constexpr const char* kSchemaVersion = "1.0";

}  // namespace c72

#endif  // C72_VERSION_H_
