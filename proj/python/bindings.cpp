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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dma/aperture.hpp"
#include "dma/cli/commands.hpp"
#include "dma/dispersion.hpp"
#include "dma/errors.hpp"
#include "dma/feedline.hpp"
#include "dma/holography.hpp"
#include "dma/imaging.hpp"
#include "dma/meta_atom.hpp"

namespace py = pybind11;
using namespace dma;

namespace {

py::dict spectrum_dict(const TwoPortResponse& r) {
  py::dict d;
  d["frequency_hz"] = r.grid.frequencies();
  d["s11"] = r.s11;
  d["s21"] = r.s21;
  return d;
}

ColumnNormalization parse_normalization(const std::string& name) {
  if (name == "amplitude") return ColumnNormalization::Amplitude;
  if (name == "energy") return ColumnNormalization::Energy;
  throw ConfigError("normalization must be 'amplitude' or 'energy'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dynamic metasurface antenna simulator core";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  (void)domain_error;

  py::enum_<AtomState>(m, "AtomState").value("OFF", AtomState::Off).value("ON", AtomState::On);

  py::class_<LorentzianParams>(m, "LorentzianParams")
      .def(py::init<>())
      .def_readwrite("f0", &LorentzianParams::f0)
      .def_readwrite("gamma", &LorentzianParams::gamma)
      .def_readwrite("coupling", &LorentzianParams::coupling)
      .def_readwrite("f0_off", &LorentzianParams::f0_off)
      .def_readwrite("coupling_off", &LorentzianParams::coupling_off)
      .def_readwrite("shunt_scale", &LorentzianParams::shunt_scale)
      .def("validate", &LorentzianParams::validate);

  py::class_<SiwParams>(m, "SiwParams")
      .def(py::init<>())
      .def_readwrite("eps_r", &SiwParams::eps_r)
      .def_readwrite("tan_delta", &SiwParams::tan_delta)
      .def_readwrite("f_cutoff", &SiwParams::f_cutoff)
      .def_readwrite("positions", &SiwParams::positions);

  py::class_<AngleGrid>(m, "AngleGrid")
      .def(py::init<>())
      .def_readwrite("start_deg", &AngleGrid::start_deg)
      .def_readwrite("stop_deg", &AngleGrid::stop_deg)
      .def_readwrite("step_deg", &AngleGrid::step_deg);

  py::class_<ApertureConfig>(m, "ApertureConfig")
      .def(py::init<>())
      .def_static("uniform", &ApertureConfig::uniform, py::arg("n_elements"), py::arg("spacing"))
      .def_readwrite("n_elements", &ApertureConfig::n_elements)
      .def_readwrite("spacing", &ApertureConfig::spacing)
      .def_readwrite("meta", &ApertureConfig::meta)
      .def_readwrite("feed", &ApertureConfig::feed)
      .def_readwrite("theta", &ApertureConfig::theta)
      .def_readwrite("depletion", &ApertureConfig::depletion)
      .def("validate", &ApertureConfig::validate);

  py::class_<HologramCode>(m, "HologramCode")
      .def(py::init(&HologramCode::from_string), py::arg("text"))
      .def_static("from_integer", &HologramCode::from_integer, py::arg("value"), py::arg("n_elements"))
      .def("to_integer", &HologramCode::to_integer)
      .def_property_readonly("bits", &HologramCode::bits)
      .def("__len__", &HologramCode::size)
      .def("__str__", &HologramCode::to_string)
      .def("__repr__", [](const HologramCode& c) { return "HologramCode('" + c.to_string() + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const HologramCode& c) { return std::hash<std::string>{}(c.to_string()); });

  py::class_<BeamMetrics>(m, "BeamMetrics")
      .def_readonly("peak_angle", &BeamMetrics::peak_angle)
      .def_readonly("peak_magnitude", &BeamMetrics::peak_magnitude)
      .def_readonly("hpbw", &BeamMetrics::hpbw)
      .def_readonly("sll", &BeamMetrics::sll)
      .def_readonly("directivity_1d", &BeamMetrics::directivity_1d);

  py::class_<RadiationPattern>(m, "RadiationPattern")
      .def_readonly("frequency", &RadiationPattern::frequency)
      .def_readonly("theta_deg", &RadiationPattern::theta_deg)
      .def_readonly("field", &RadiationPattern::field);

  py::class_<MeasurementMatrix>(m, "MeasurementMatrix")
      .def_property_readonly("entries", [](const MeasurementMatrix& h) { return h.entries; })
      .def_readonly("pixel_angles_deg", &MeasurementMatrix::pixel_angles_deg)
      .def_property_readonly("rows",
                             [](const MeasurementMatrix& h) {
                               std::vector<std::pair<HologramCode, double>> out;
                               for (const auto& r : h.rows) out.emplace_back(r.code, r.frequency);
                               return out;
                             })
      .def_property_readonly("shape", [](const MeasurementMatrix& h) {
        return std::make_pair(h.entries.rows(), h.entries.cols());
      });

  py::class_<DiversityReport>(m, "DiversityReport")
      .def_readonly("singular_values", &DiversityReport::singular_values)
      .def_readonly("effective_rank", &DiversityReport::effective_rank)
      .def_readonly("mean_row_correlation", &DiversityReport::mean_row_correlation)
      .def_readonly("condition_number", &DiversityReport::condition_number);

  // meta_atom
  m.def("polarizability", &polarizability, py::arg("params"), py::arg("omega"), py::arg("state") = AtomState::On);
  m.def(
      "shunt_s_params",
      [](const LorentzianParams& p, AtomState state, double f_start, double f_stop, std::size_t n) {
        return spectrum_dict(shunt_s_params(p, state, FrequencyGrid(f_start, f_stop, n)));
      },
      py::arg("params"), py::arg("state"), py::arg("f_start"), py::arg("f_stop"), py::arg("n_points"));

  // dispersion
  m.def(
      "analyze_dispersion",
      [](const LorentzianParams& p, AtomState state, double f_start, double f_stop, std::size_t n,
         double thickness) {
        const TwoPortResponse r = shunt_s_params(p, state, FrequencyGrid(f_start, f_stop, n));
        const DispersionIndicators ind = analyze_dispersion(r, thickness);
        py::dict d = spectrum_dict(r);
        d["phase"] = ind.phase.values;
        d["group_delay"] = ind.group_delay.values;
        d["effective_index"] = ind.effective_index.values;
        d["group_index"] = ind.group_index.values;
        d["group_velocity"] = ind.group_velocity.values;
        d["effective_permittivity"] = ind.effective_permittivity.values;
        std::vector<std::pair<double, double>> bands;
        for (const Band& b : ind.anomalous_bands) bands.emplace_back(b.f_lo, b.f_hi);
        d["anomalous_bands"] = bands;
        return d;
      },
      py::arg("params"), py::arg("state"), py::arg("f_start"), py::arg("f_stop"), py::arg("n_points"),
      py::arg("thickness"));

  // feedline
  m.def("guided_wavenumber", &guided_wavenumber, py::arg("params"), py::arg("omega"));
  m.def(
      "feed_field",
      [](const SiwParams& p, double omega, std::optional<std::vector<double>> coupling) {
        const FeedExcitation fe =
            coupling ? feed_field(p, omega, std::span<const double>(*coupling)) : feed_field(p, omega);
        return std::make_pair(fe.amplitudes, fe.residual);
      },
      py::arg("params"), py::arg("omega"), py::arg("coupling") = py::none(),
      "Returns (element amplitudes, residual wave past the last element).");

  // aperture
  m.def("code_pattern", &code_pattern, py::arg("config"), py::arg("code"), py::arg("frequency"));
  m.def("beam_metrics", &beam_metrics, py::arg("pattern"));
  m.def("pattern_correlation", &pattern_correlation, py::arg("a"), py::arg("b"));

  // holography
  m.def("example_codes", &example_codes);
  m.def(
      "synthesize_code",
      [](const ApertureConfig& c, double theta, double f) { return synthesize_code(c, SteeringTarget{theta, f}); },
      py::arg("config"), py::arg("theta_deg"), py::arg("frequency"));
  m.def(
      "field_gain",
      [](const ApertureConfig& c, const HologramCode& code, double theta, double f) {
        return field_gain(c, code, SteeringTarget{theta, f});
      },
      py::arg("config"), py::arg("code"), py::arg("theta_deg"), py::arg("frequency"));
  m.def(
      "exhaustive_best_code",
      [](const ApertureConfig& c, double theta, double f, unsigned threads) {
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = exhaustive_best_code(c, SteeringTarget{theta, f}, threads);
        }
        return std::make_pair(r.code, r.gain);
      },
      py::arg("config"), py::arg("theta_deg"), py::arg("frequency"), py::arg("threads") = 0);

  // imaging
  m.def("default_pixel_angles", &default_pixel_angles, py::arg("count"));
  m.def("ensemble_codes", &ensemble_codes, py::arg("n_random"), py::arg("seed"), py::arg("n_elements") = 16);
  m.def(
      "build_measurement_matrix",
      [](const ApertureConfig& c, const std::vector<HologramCode>& codes, const std::vector<double>& freqs,
         const std::vector<double>& pixels) { return build_measurement_matrix(c, codes, freqs, pixels); },
      py::arg("config"), py::arg("codes"), py::arg("frequencies"), py::arg("pixel_angles_deg"));
  m.def(
      "reconstruct_matched_filter",
      [](const MeasurementMatrix& h, const Eigen::VectorXcd& g, const std::string& norm) {
        MatchedFilterResult r = reconstruct_matched_filter(h, g, parse_normalization(norm));
        return std::make_pair(r.estimate, r.zero_columns);
      },
      py::arg("h"), py::arg("g"), py::arg("normalization") = "amplitude",
      "Returns (estimate, indices of all-zero columns).");
  m.def(
      "reconstruct_tikhonov",
      [](const MeasurementMatrix& h, const Eigen::VectorXcd& g, double lambda) {
        return reconstruct_tikhonov(h, g, lambda);
      },
      py::arg("h"), py::arg("g"), py::arg("lambda_"));
  m.def(
      "diversity_metrics",
      [](const MeasurementMatrix& h, double threshold) { return diversity_metrics(h, threshold); }, py::arg("h"),
      py::arg("rank_threshold") = kDefaultRankThreshold);

  // cli
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a dmasim command line; returns (exit code, stdout, stderr).");
}
