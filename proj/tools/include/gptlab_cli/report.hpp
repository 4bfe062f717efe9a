// Copyright 2026 The gptlab Authors
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

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gptlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& name);

/// Main tabular payload of a report; CSV output is exactly this table.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct RunReport {
  Json doc = Json::object();
  Table table;
  int exit_code = 0;
};

/// Deterministic rendering: insertion-ordered keys, shortest round-trip
/// reals. CSV quoting follows RFC 4180 with CRLF line ends.
std::string render(const RunReport& report, Format format);

std::string csv_field(const std::string& raw);

}  // namespace gptlab::cli
