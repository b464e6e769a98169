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

#include "dma/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "dma/errors.hpp"
#include "dma/holography.hpp"

namespace dma::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Object reader that remembers which keys were consumed, so anything left over
// is reported as unknown.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError("config section '" + path_ + "' must be a JSON object");
  }

  template <typename T>
  void read(const char* key, T& target) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) return;
    try {
      target = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError("config key '" + qualified(key) + "' has the wrong type");
    }
  }

  template <typename T>
  void read_optional(const char* key, std::optional<T>& target) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) return;
    if (it->is_null()) {
      target.reset();
      return;
    }
    try {
      target = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError("config key '" + qualified(key) + "' has the wrong type");
    }
  }

  const json* child(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  std::string qualified(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  void reject_unknown() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError("unknown config key '" + qualified(it.key()) + "'");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::size_t read_count(Section& s, const char* key, std::size_t value) {
  long long raw = static_cast<long long>(value);
  s.read(key, raw);
  if (raw < 0) throw ConfigError("config key '" + s.qualified(key) + "' must be non-negative");
  return static_cast<std::size_t>(raw);
}

}  // namespace

RunConfig::RunConfig() : codes(example_codes()) {}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  Section root(j, "");

  if (const json* m = root.child("meta_atom")) {
    Section s(*m, "meta_atom");
    auto& p = c.aperture.meta;
    s.read("f0_hz", p.f0);
    s.read("gamma_rad_per_s", p.gamma);
    s.read("coupling", p.coupling);
    s.read_optional("f0_off_hz", p.f0_off);
    s.read("coupling_off", p.coupling_off);
    s.read_optional("shunt_scale", p.shunt_scale);
    s.reject_unknown();
  }

  if (const json* f = root.child("feed")) {
    Section s(*f, "feed");
    auto& p = c.aperture.feed;
    s.read("eps_r", p.eps_r);
    s.read("tan_delta", p.tan_delta);
    s.read("f_cutoff_hz", p.f_cutoff);
    s.reject_unknown();
  }

  if (const json* a = root.child("aperture")) {
    Section s(*a, "aperture");
    auto& ap = c.aperture;
    ap.n_elements = read_count(s, "n_elements", ap.n_elements);
    s.read("spacing_m", ap.spacing);
    s.read("theta_start_deg", ap.theta.start_deg);
    s.read("theta_stop_deg", ap.theta.stop_deg);
    s.read("theta_step_deg", ap.theta.step_deg);
    s.read_optional("depletion", ap.depletion);
    s.reject_unknown();
  }
  c.aperture.feed.positions = uniform_positions(c.aperture.n_elements, c.aperture.spacing);

  if (const json* d = root.child("dispersion")) {
    Section s(*d, "dispersion");
    auto& ds = c.dispersion;
    s.read("f_start_hz", ds.f_start);
    s.read("f_stop_hz", ds.f_stop);
    ds.n_points = read_count(s, "n_points", ds.n_points);
    s.read("thickness_m", ds.thickness);
    std::string state = ds.state == AtomState::On ? "on" : "off";
    s.read("state", state);
    if (state != "on" && state != "off") throw ConfigError("config key 'dispersion.state' must be \"on\" or \"off\"");
    ds.state = state == "on" ? AtomState::On : AtomState::Off;
    s.reject_unknown();
  }

  if (const json* codes = root.child("codes")) {
    if (!codes->is_array()) throw ConfigError("config key 'codes' must be an array of 0/1 strings");
    c.codes.clear();
    for (const json& e : *codes) {
      if (!e.is_string()) throw ConfigError("config key 'codes' must be an array of 0/1 strings");
      c.codes.push_back(HologramCode::from_string(e.get<std::string>()));
    }
  }

  root.read("scan_frequencies_hz", c.scan_frequencies);

  if (const json* im = root.child("imaging")) {
    Section s(*im, "imaging");
    auto& is = c.imaging;
    s.read("frequencies_hz", is.frequencies);
    is.n_random_codes = read_count(s, "n_random_codes", is.n_random_codes);
    is.n_pixels = read_count(s, "n_pixels", is.n_pixels);
    s.read("rank_threshold", is.rank_threshold);
    s.read("single_frequency_hz", is.single_frequency);
    s.reject_unknown();
  }

  root.read("seed", c.seed);
  root.reject_unknown();

  for (const HologramCode& code : c.codes) {
    if (code.size() != c.aperture.n_elements) {
      throw ConfigError("code \"" + code.to_string() + "\" does not have " + std::to_string(c.aperture.n_elements) +
                        " elements");
    }
  }
  try {
    c.aperture.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  return c;
}

ordered_json config_to_json(const RunConfig& c) {
  auto nullable = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  const auto& m = c.aperture.meta;
  ordered_json j;
  j["meta_atom"] = {
      {"f0_hz", m.f0},
      {"gamma_rad_per_s", m.gamma},
      {"coupling", m.coupling},
      {"f0_off_hz", nullable(m.f0_off)},
      {"coupling_off", m.coupling_off},
      {"shunt_scale", nullable(m.shunt_scale)},
  };
  j["feed"] = {
      {"eps_r", c.aperture.feed.eps_r},
      {"tan_delta", c.aperture.feed.tan_delta},
      {"f_cutoff_hz", c.aperture.feed.f_cutoff},
  };
  j["aperture"] = {
      {"n_elements", c.aperture.n_elements},
      {"spacing_m", c.aperture.spacing},
      {"theta_start_deg", c.aperture.theta.start_deg},
      {"theta_stop_deg", c.aperture.theta.stop_deg},
      {"theta_step_deg", c.aperture.theta.step_deg},
      {"depletion", nullable(c.aperture.depletion)},
  };
  j["dispersion"] = {
      {"f_start_hz", c.dispersion.f_start},
      {"f_stop_hz", c.dispersion.f_stop},
      {"n_points", c.dispersion.n_points},
      {"thickness_m", c.dispersion.thickness},
      {"state", c.dispersion.state == AtomState::On ? "on" : "off"},
  };
  ordered_json codes = ordered_json::array();
  for (const HologramCode& code : c.codes) codes.push_back(code.to_string());
  j["codes"] = codes;
  j["scan_frequencies_hz"] = c.scan_frequencies;
  j["imaging"] = {
      {"frequencies_hz", c.imaging.frequencies},
      {"n_random_codes", c.imaging.n_random_codes},
      {"n_pixels", c.imaging.n_pixels},
      {"rank_threshold", c.imaging.rank_threshold},
      {"single_frequency_hz", c.imaging.single_frequency},
  };
  j["seed"] = c.seed;
  return j;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return RunConfig{};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

}  // namespace dma::cli
