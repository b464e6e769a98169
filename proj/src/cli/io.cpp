// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "dma/cli/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "dma/errors.hpp"

namespace dma::cli {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& where) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
  if (end == begin || *end != '\0' || (errno == ERANGE && std::isinf(v))) {
    throw ConfigError(where + ": cannot parse number '" + text + "'");
  }
  return v;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto first = field.find_first_not_of(" \t");
    const auto last = field.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? std::string{} : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out = open_for_write(path);
  auto emit = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  CsvTable t;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = split_line(line);
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(t.header.size()) + " fields, found " + std::to_string(fields.size()));
    }
    t.rows.push_back(std::move(fields));
    t.line_numbers.push_back(lineno);
  }
  if (!have_header) throw ConfigError(path.string() + ": empty CSV file");
  return t;
}

void write_json(const std::filesystem::path& path, const ordered_json& j) {
  std::ofstream out = open_for_write(path);
  out << j.dump(2) << '\n';
}

ordered_json metrics_to_json(const BeamMetrics& m) {
  auto finite_or_null = [](double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); };
  return {
      {"peak_angle_deg", m.peak_angle},
      {"peak_magnitude", m.peak_magnitude},
      {"hpbw_deg", finite_or_null(m.hpbw)},
      {"sll_db", finite_or_null(m.sll)},
      {"directivity_1d_db", m.directivity_1d},
  };
}

BeamMetrics metrics_from_json(const json& j) {
  auto get = [&j](const char* key, double if_null) {
    const json& v = j.at(key);
    return v.is_null() ? if_null : v.get<double>();
  };
  BeamMetrics m;
  m.peak_angle = j.at("peak_angle_deg").get<double>();
  m.peak_magnitude = j.at("peak_magnitude").get<double>();
  m.hpbw = get("hpbw_deg", std::numeric_limits<double>::quiet_NaN());
  m.sll = get("sll_db", -std::numeric_limits<double>::infinity());
  m.directivity_1d = j.at("directivity_1d_db").get<double>();
  return m;
}

Scene read_scene(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  if (t.header != std::vector<std::string>{"theta_deg", "re", "im"}) {
    throw ConfigError(path.string() + ":1: scene header must be theta_deg,re,im");
  }
  Scene s;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string where = path.string() + ":" + std::to_string(t.line_numbers[r]);
    const auto& row = t.rows[r];
    s.pixel_angles_deg.push_back(parse_double(row[0], where));
    s.reflectivity.emplace_back(parse_double(row[1], where), parse_double(row[2], where));
  }
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return s;
}

void write_scene(const std::filesystem::path& path, const Scene& scene) {
  CsvTable t;
  t.header = {"theta_deg", "re", "im"};
  for (std::size_t p = 0; p < scene.pixel_angles_deg.size(); ++p) {
    t.rows.push_back({format_double(scene.pixel_angles_deg[p]), format_double(scene.reflectivity[p].real()),
                      format_double(scene.reflectivity[p].imag())});
  }
  write_csv(path, t);
}

}  // namespace dma::cli
