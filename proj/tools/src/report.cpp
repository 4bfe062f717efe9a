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

#include "gptlab_cli/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gptlab::cli {

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const RunReport& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << report.doc.dump(2) << "\n";
      break;
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
        os << "\r\n";
      };
      line(report.table.columns);
      for (const auto& row : report.table.rows) {
        std::vector<std::string> fields;
        for (const auto& v : row) fields.push_back(cell(v));
        line(fields);
      }
      break;
    }
    case Format::Table: {
      for (const auto& [key, value] : report.doc.items()) {
        if (value.is_structured()) continue;
        os << key << ": " << cell(value) << "\n";
      }
      std::vector<std::size_t> width;
      for (const auto& c : report.table.columns) width.push_back(c.size());
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : report.table.rows) {
        std::vector<std::string> r;
        for (std::size_t i = 0; i < row.size(); ++i) {
          r.push_back(cell(row[i]));
          if (i < width.size()) width[i] = std::max(width[i], r.back().size());
        }
        cells.push_back(std::move(r));
      }
      auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          os << (i ? "  " : "") << fields[i];
          if (i + 1 < fields.size() && i < width.size()) {
            os << std::string(width[i] - fields[i].size(), ' ');
          }
        }
        os << "\n";
      };
      if (!report.table.columns.empty()) {
        os << "\n";
        line(report.table.columns);
        for (const auto& r : cells) line(r);
      }
      break;
    }
  }
  return os.str();
}

}  // namespace gptlab::cli
