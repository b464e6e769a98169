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

#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "dma/aperture.hpp"
#include "dma/meta_atom.hpp"

namespace dma::cli {

struct DispersionSettings {
  double f_start = 59.0e9;
  double f_stop = 63.0e9;
  std::size_t n_points = 2001;
  double thickness = 2.0e-3;
  AtomState state = AtomState::On;
};

struct ImagingSettings {
  std::vector<double> frequencies = {59.5e9, 60.5e9, 61.5e9, 62.5e9};
  std::size_t n_random_codes = 10;
  std::size_t n_pixels = 32;
  double rank_threshold = 1e-3;
  double single_frequency = 61.0e9;  ///< comparison ensemble for the metrics command
};

/// Everything a run depends on. An empty config file gives exactly these defaults.
struct RunConfig {
  ApertureConfig aperture = ApertureConfig::uniform(16, 2.0e-3);
  DispersionSettings dispersion;
  std::vector<HologramCode> codes;  ///< defaults to the six example codes
  std::vector<double> scan_frequencies = {60.0e9, 61.0e9, 62.0e9};
  ImagingSettings imaging;
  std::uint64_t seed = 42;

  RunConfig();
};

/// Throws ConfigError naming the first unknown or mistyped key.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const RunConfig& config);

/// Reads a JSON config file; an empty (or whitespace-only) file is the default config.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace dma::cli
