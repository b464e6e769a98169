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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dma/aperture.hpp"
#include "dma/imaging.hpp"

namespace dma::cli {

/// Shortest-safe round-trip text for a double ("%.17g"); inf/-inf/nan spelled out.
std::string format_double(double v);

/// Strict parse of a whole field. Throws ConfigError mentioning `where`.
double parse_double(const std::string& text, const std::string& where);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  ///< 1-based source line of each row
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

/// Writes indented JSON followed by a newline.
void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j);

nlohmann::ordered_json metrics_to_json(const BeamMetrics& m);
/// Inverse of metrics_to_json; null maps back to the sentinel (-inf sll, NaN hpbw).
BeamMetrics metrics_from_json(const nlohmann::json& j);

/// Scene file: header "theta_deg,re,im", one pixel per row.
Scene read_scene(const std::filesystem::path& path);
void write_scene(const std::filesystem::path& path, const Scene& scene);

}  // namespace dma::cli
