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

#include "dma/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "dma/aperture.hpp"
#include "dma/cli/config.hpp"
#include "dma/cli/io.hpp"
#include "dma/dispersion.hpp"
#include "dma/errors.hpp"
#include "dma/holography.hpp"
#include "dma/imaging.hpp"

namespace dma::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
};

struct Context {
  RunConfig config;
  fs::path out;
};

std::vector<std::string> doubles(std::initializer_list<double> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(format_double(v));
  return out;
}

CsvTable spectrum_table(const FrequencyGrid& grid, std::vector<std::string> header,
                        const std::vector<std::vector<double>>& columns) {
  CsvTable t;
  t.header = std::move(header);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{format_double(grid.frequency(i))};
    for (const auto& col : columns) row.push_back(format_double(col[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

HologramCode parse_code(const RunConfig& c, const std::string& text) {
  HologramCode code = HologramCode::from_string(text);
  if (code.size() != c.aperture.n_elements) {
    throw ConfigError("code \"" + text + "\" must have " + std::to_string(c.aperture.n_elements) + " characters");
  }
  return code;
}

std::vector<HologramCode> parse_codes(const RunConfig& c, const std::vector<std::string>& texts) {
  if (texts.empty()) return c.codes;
  std::vector<HologramCode> out;
  for (const std::string& t : texts) out.push_back(parse_code(c, t));
  return out;
}

std::size_t argmax_abs(const Eigen::VectorXcd& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v(i)) > std::abs(v(best))) best = i;
  }
  return static_cast<std::size_t>(best);
}

ordered_json diversity_to_json(const DiversityReport& r) {
  ordered_json j;
  j["effective_rank"] = r.effective_rank;
  j["condition_number"] = std::isfinite(r.condition_number) ? ordered_json(r.condition_number) : ordered_json(nullptr);
  j["mean_row_correlation"] = r.mean_row_correlation;
  j["singular_values"] = r.singular_values;
  return j;
}

// ---- dispersion --------------------------------------------------------------

struct DispersionOptions {
  std::optional<std::string> state;
};

void cmd_dispersion(const Context& ctx, const DispersionOptions& opt, std::ostream& out) {
  const auto& ds = ctx.config.dispersion;
  AtomState state = ds.state;
  if (opt.state) state = *opt.state == "on" ? AtomState::On : AtomState::Off;
  if (ds.n_points < 3) throw ConfigError("grid too coarse for derivatives (need >= 3 points)");
  if (!(ds.thickness > 0.0)) throw ConfigError("dispersion thickness must be > 0");
  const FrequencyGrid grid(ds.f_start, ds.f_stop, ds.n_points);
  const TwoPortResponse resp = shunt_s_params(ctx.config.aperture.meta, state, grid);
  const DispersionIndicators ind = analyze_dispersion(resp, ds.thickness);

  std::vector<double> s11_re, s11_im, s21_re, s21_im, s21_db;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    s11_re.push_back(resp.s11[i].real());
    s11_im.push_back(resp.s11[i].imag());
    s21_re.push_back(resp.s21[i].real());
    s21_im.push_back(resp.s21[i].imag());
    s21_db.push_back(20.0 * std::log10(std::abs(resp.s21[i])));
  }
  write_csv(ctx.out / "s_params.csv", spectrum_table(grid, {"frequency_hz", "s11_re", "s11_im", "s21_re", "s21_im",
                                                            "s21_db"},
                                                     {s11_re, s11_im, s21_re, s21_im, s21_db}));
  write_csv(ctx.out / "phase.csv", spectrum_table(grid, {"frequency_hz", "phase_rad"}, {ind.phase.values}));
  write_csv(ctx.out / "group_delay.csv",
            spectrum_table(grid, {"frequency_hz", "group_delay_s"}, {ind.group_delay.values}));
  std::vector<double> vg_over_c;
  for (double v : ind.group_velocity.values) vg_over_c.push_back(v / kSpeedOfLight);
  write_csv(ctx.out / "group_velocity.csv", spectrum_table(grid, {"frequency_hz", "group_velocity_m_per_s",
                                                                  "group_velocity_over_c"},
                                                           {ind.group_velocity.values, vg_over_c}));
  write_csv(ctx.out / "group_index.csv",
            spectrum_table(grid, {"frequency_hz", "effective_index", "group_index"},
                           {ind.effective_index.values, ind.group_index.values}));
  write_csv(ctx.out / "eps_eff.csv",
            spectrum_table(grid, {"frequency_hz", "eps_eff"}, {ind.effective_permittivity.values}));

  ordered_json bands = ordered_json::array();
  for (const Band& b : ind.anomalous_bands) bands.push_back({{"f_lo_hz", b.f_lo}, {"f_hi_hz", b.f_hi}});
  write_json(ctx.out / "anomalous_bands.json",
             {{"tolerance_per_rad_s", kAnomalousTolerance}, {"bands", bands}});

  std::size_t dip = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(resp.s21[i]) < std::abs(resp.s21[dip])) dip = i;
  }
  auto [tmin, tmax] = std::minmax_element(ind.group_delay.values.begin(), ind.group_delay.values.end());
  auto [gmin, gmax] = std::minmax_element(ind.group_index.values.begin(), ind.group_index.values.end());
  ordered_json summary;
  summary["state"] = state == AtomState::On ? "on" : "off";
  summary["n_points"] = grid.size();
  summary["thickness_m"] = ds.thickness;
  summary["dip_frequency_hz"] = grid.frequency(dip);
  summary["dip_s21_db"] = s21_db[dip];
  summary["group_delay_min_s"] = *tmin;
  summary["group_delay_max_s"] = *tmax;
  summary["group_index_min"] = *gmin;
  summary["group_index_max"] = *gmax;
  summary["anomalous_band_count"] = ind.anomalous_bands.size();
  write_json(ctx.out / "dispersion.json", summary);
  out << "anomalous bands: " << ind.anomalous_bands.size() << "\n";
}

// ---- pattern / scan / table --------------------------------------------------

struct PatternOptions {
  std::string code;
  double frequency = 60.0e9;
};

void cmd_pattern(const Context& ctx, const PatternOptions& opt, std::ostream& out) {
  const HologramCode code = parse_code(ctx.config, opt.code);
  const RadiationPattern pattern = code_pattern(ctx.config.aperture, code, opt.frequency);
  const BeamMetrics metrics = beam_metrics(pattern);
  const RadiationPattern norm = normalize_peak(pattern);

  CsvTable t;
  t.header = {"theta_deg", "re", "im", "abs", "db_rel_peak"};
  for (std::size_t i = 0; i < pattern.theta_deg.size(); ++i) {
    const double mag = std::abs(norm.field[i]);
    t.rows.push_back(doubles({pattern.theta_deg[i], pattern.field[i].real(), pattern.field[i].imag(),
                              std::abs(pattern.field[i]), 20.0 * std::log10(mag)}));
  }
  write_csv(ctx.out / "pattern.csv", t);
  ordered_json j;
  j["code"] = code.to_string();
  j["frequency_hz"] = opt.frequency;
  j["metrics"] = metrics_to_json(metrics);
  write_json(ctx.out / "metrics.json", j);
  out << "peak " << format_double(metrics.peak_angle) << " deg\n";
}

std::vector<std::string> metric_fields(const BeamMetrics& m) {
  return doubles({m.peak_angle, m.peak_magnitude, m.hpbw, m.sll, m.directivity_1d});
}

const std::vector<std::string> kMetricHeader = {"peak_angle_deg", "peak_magnitude", "hpbw_deg", "sll_db",
                                                "directivity_1d_db"};

struct ScanOptions {
  std::string code;
  std::vector<double> frequencies;
};

void cmd_scan(const Context& ctx, const ScanOptions& opt, std::ostream& out) {
  const HologramCode code = parse_code(ctx.config, opt.code);
  const std::vector<double>& freqs = opt.frequencies.empty() ? ctx.config.scan_frequencies : opt.frequencies;
  const ScanResult scan = frequency_scan(ctx.config.aperture, code, freqs);
  CsvTable t;
  t.header = {"frequency_hz"};
  t.header.insert(t.header.end(), kMetricHeader.begin(), kMetricHeader.end());
  for (const ScanRow& r : scan.rows) {
    std::vector<std::string> row{format_double(r.frequency)};
    for (auto& f : metric_fields(r.metrics)) row.push_back(f);
    t.rows.push_back(std::move(row));
  }
  write_csv(ctx.out / "scan.csv", t);
  out << "scanned " << scan.rows.size() << " frequencies\n";
}

struct TableOptions {
  std::vector<std::string> codes;
  std::vector<double> frequencies;
};

void cmd_table(const Context& ctx, const TableOptions& opt, std::ostream& out) {
  const std::vector<HologramCode> codes = parse_codes(ctx.config, opt.codes);
  const std::vector<double>& freqs = opt.frequencies.empty() ? ctx.config.scan_frequencies : opt.frequencies;
  const HybridTable table = hybrid_diversity_table(ctx.config.aperture, codes, freqs);
  CsvTable t;
  t.header = {"code", "frequency_hz"};
  t.header.insert(t.header.end(), kMetricHeader.begin(), kMetricHeader.end());
  ordered_json rows = ordered_json::array();
  for (std::size_t c = 0; c < table.codes.size(); ++c) {
    for (std::size_t f = 0; f < table.frequencies.size(); ++f) {
      std::vector<std::string> row{table.codes[c].to_string(), format_double(table.frequencies[f])};
      for (auto& field : metric_fields(table.cells[c][f])) row.push_back(field);
      t.rows.push_back(std::move(row));
    }
    rows.push_back({{"code", table.codes[c].to_string()}, {"peak_span_deg", table.row_span(c)}});
  }
  write_csv(ctx.out / "table.csv", t);
  write_json(ctx.out / "table.json", {{"peak_span_deg", table.peak_span()}, {"rows", rows}});
  out << "hybrid span " << format_double(table.peak_span()) << " deg\n";
}

// ---- design ------------------------------------------------------------------

struct DesignOptions {
  double theta = 0.0;
  double frequency = 60.0e9;
  bool oracle = false;
};

void cmd_design(const Context& ctx, const DesignOptions& opt, std::ostream& out) {
  if (!std::isfinite(opt.theta) || std::abs(opt.theta) >= 90.0) {
    throw ConfigError("--theta must satisfy |theta| < 90 deg");
  }
  const SteeringTarget target{opt.theta, opt.frequency};
  const HologramCode code = synthesize_code(ctx.config.aperture, target);
  ordered_json j;
  j["theta_deg"] = opt.theta;
  j["frequency_hz"] = opt.frequency;
  j["code"] = code.to_string();
  if (code.is_zero()) {
    j["gain"] = 0.0;
  } else {
    j["gain"] = field_gain(ctx.config.aperture, code, target);
  }
  out << code.to_string() << "\n";
  if (opt.oracle) {
    const OracleResult best = exhaustive_best_code(ctx.config.aperture, target);
    const double gain = j["gain"].get<double>();
    const double gap = gain > 0.0 ? 20.0 * std::log10(best.gain / gain) : std::numeric_limits<double>::infinity();
    j["oracle"] = {{"code", best.code.to_string()},
                   {"gain", best.gain},
                   {"gap_db", std::isfinite(gap) ? ordered_json(gap) : ordered_json(nullptr)},
                   {"within_3db", gap <= 3.0}};
    out << best.code.to_string() << " (oracle, gap " << format_double(gap) << " dB)\n";
  }
  write_json(ctx.out / "design.json", j);
}

// ---- image -------------------------------------------------------------------

struct ImageOptions {
  std::string scene_path;
  std::optional<long long> point;
  double noise = 0.0;
  std::string method = "mf";
  std::string normalization = "amplitude";
  std::vector<double> lambdas;
  std::vector<double> lambdas_rel;
};

void cmd_image(const Context& ctx, const ImageOptions& opt, std::ostream& out) {
  const RunConfig& c = ctx.config;
  if (!std::isfinite(opt.noise) || opt.noise < 0.0) throw ConfigError("--noise must be >= 0");
  Scene scene;
  if (!opt.scene_path.empty()) {
    scene = read_scene(opt.scene_path);
  } else {
    scene.pixel_angles_deg = default_pixel_angles(c.imaging.n_pixels);
    scene.reflectivity.assign(scene.pixel_angles_deg.size(), cplx{0.0, 0.0});
    const long long p = *opt.point;
    if (p < 0 || p >= static_cast<long long>(scene.reflectivity.size())) {
      throw ConfigError("--point must lie in [0, " + std::to_string(scene.reflectivity.size()) + ")");
    }
    scene.reflectivity[static_cast<std::size_t>(p)] = 1.0;
  }

  const std::vector<HologramCode> codes = ensemble_codes(c.imaging.n_random_codes, c.seed, c.aperture.n_elements);
  const MeasurementMatrix h = build_measurement_matrix(c.aperture, codes, c.imaging.frequencies,
                                                      scene.pixel_angles_deg);
  const std::uint64_t noise_seed = c.seed + 1;
  const Eigen::VectorXcd g = forward_measure(h, scene, opt.noise, noise_seed);
  const DiversityReport div = diversity_metrics(h, c.imaging.rank_threshold);
  const Eigen::Map<const Eigen::VectorXcd> truth(scene.reflectivity.data(),
                                                 static_cast<Eigen::Index>(scene.reflectivity.size()));

  std::vector<Eigen::VectorXcd> estimates;
  ordered_json recon = ordered_json::array();
  ordered_json report;
  report["method"] = opt.method;
  if (opt.method == "mf") {
    const ColumnNormalization norm =
        opt.normalization == "energy" ? ColumnNormalization::Energy : ColumnNormalization::Amplitude;
    MatchedFilterResult mf = reconstruct_matched_filter(h, g, norm);
    report["normalization"] = opt.normalization;
    ordered_json zeros = ordered_json::array();
    for (Eigen::Index z : mf.zero_columns) zeros.push_back(z);
    report["zero_columns"] = zeros;
    estimates.push_back(std::move(mf.estimate));
    recon.push_back({{"estimate_norm", estimates.back().norm()}, {"argmax_pixel", argmax_abs(estimates.back())}});
  } else {
    std::vector<double> ladder = opt.lambdas;
    std::vector<double> rel = opt.lambdas_rel;
    if (ladder.empty() && rel.empty()) rel.push_back(1e-12);
    const double s1 = div.singular_values.front();
    for (double r : rel) ladder.push_back(r * s1 * s1);
    for (double lambda : ladder) {
      estimates.push_back(reconstruct_tikhonov(h, g, lambda));
      const Eigen::VectorXcd& e = estimates.back();
      const double tn = truth.norm();
      recon.push_back({{"lambda", lambda},
                       {"estimate_norm", e.norm()},
                       {"relative_error", tn > 0.0 ? ordered_json((e - truth).norm() / tn) : ordered_json(nullptr)},
                       {"argmax_pixel", argmax_abs(e)}});
    }
  }
  report["n_measurements"] = h.measurements();
  report["n_pixels"] = h.pixels();
  report["noise_sigma"] = opt.noise;
  report["noise_seed"] = noise_seed;
  report["diversity"] = diversity_to_json(div);
  report["reconstructions"] = recon;
  write_json(ctx.out / "report.json", report);

  CsvTable est;
  est.header = {"pixel", "theta_deg", "truth_re", "truth_im"};
  for (std::size_t k = 0; k < estimates.size(); ++k) {
    est.header.push_back("est" + std::to_string(k) + "_re");
    est.header.push_back("est" + std::to_string(k) + "_im");
  }
  for (Eigen::Index p = 0; p < h.pixels(); ++p) {
    std::vector<std::string> row{std::to_string(p), format_double(scene.pixel_angles_deg[static_cast<std::size_t>(p)]),
                                 format_double(truth(p).real()), format_double(truth(p).imag())};
    for (const auto& e : estimates) {
      row.push_back(format_double(e(p).real()));
      row.push_back(format_double(e(p).imag()));
    }
    est.rows.push_back(std::move(row));
  }
  write_csv(ctx.out / "estimate.csv", est);

  CsvTable meas;
  meas.header = {"row", "code", "frequency_hz", "g_re", "g_im"};
  for (Eigen::Index m = 0; m < h.measurements(); ++m) {
    const MaskDescriptor& d = h.rows[static_cast<std::size_t>(m)];
    meas.rows.push_back({std::to_string(m), d.code.to_string(), format_double(d.frequency),
                         format_double(g(m).real()), format_double(g(m).imag())});
  }
  write_csv(ctx.out / "measurements.csv", meas);
  out << "argmax pixel " << argmax_abs(estimates.back()) << "\n";
}

// ---- metrics -----------------------------------------------------------------

void write_matrix(const fs::path& path, const MeasurementMatrix& h) {
  CsvTable t;
  t.header = {"row", "code", "frequency_hz"};
  for (Eigen::Index p = 0; p < h.pixels(); ++p) {
    t.header.push_back("p" + std::to_string(p) + "_re");
    t.header.push_back("p" + std::to_string(p) + "_im");
  }
  for (Eigen::Index m = 0; m < h.measurements(); ++m) {
    const MaskDescriptor& d = h.rows[static_cast<std::size_t>(m)];
    std::vector<std::string> row{std::to_string(m), d.code.to_string(), format_double(d.frequency)};
    for (Eigen::Index p = 0; p < h.pixels(); ++p) {
      row.push_back(format_double(h.entries(m, p).real()));
      row.push_back(format_double(h.entries(m, p).imag()));
    }
    t.rows.push_back(std::move(row));
  }
  write_csv(path, t);
}

void cmd_metrics(const Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.config;
  const std::vector<double> pixels = default_pixel_angles(c.imaging.n_pixels);
  const std::vector<HologramCode> codes = ensemble_codes(c.imaging.n_random_codes, c.seed, c.aperture.n_elements);
  const MeasurementMatrix h = build_measurement_matrix(c.aperture, codes, c.imaging.frequencies, pixels);

  // Same number of rows from codes alone at one frequency.
  const std::size_t m = static_cast<std::size_t>(h.measurements());
  std::vector<HologramCode> single_codes = codes;
  if (single_codes.size() < m) {
    SeededRandom rng(c.seed + 1);
    const auto extra = random_codes(m - single_codes.size(), rng, c.aperture.n_elements, single_codes);
    single_codes.insert(single_codes.end(), extra.begin(), extra.end());
  }
  single_codes.resize(m);
  const std::vector<double> single_f{c.imaging.single_frequency};
  const MeasurementMatrix hs = build_measurement_matrix(c.aperture, single_codes, single_f, pixels);

  const DiversityReport dh = diversity_metrics(h, c.imaging.rank_threshold);
  const DiversityReport ds = diversity_metrics(hs, c.imaging.rank_threshold);
  write_matrix(ctx.out / "measurement_matrix.csv", h);

  CsvTable sv;
  sv.header = {"k", "frequency_code", "single_frequency"};
  for (std::size_t k = 0; k < dh.singular_values.size(); ++k) {
    sv.rows.push_back({std::to_string(k), format_double(dh.singular_values[k]), format_double(ds.singular_values[k])});
  }
  write_csv(ctx.out / "singular_values.csv", sv);

  ordered_json j;
  j["rank_threshold"] = c.imaging.rank_threshold;
  j["n_measurements"] = h.measurements();
  j["n_pixels"] = h.pixels();
  j["frequency_code"] = diversity_to_json(dh);
  j["single_frequency"] = diversity_to_json(ds);
  j["single_frequency"]["frequency_hz"] = c.imaging.single_frequency;
  j["rank_gain"] = static_cast<long long>(dh.effective_rank) - static_cast<long long>(ds.effective_rank);
  write_json(ctx.out / "diversity.json", j);

  // Pairwise pattern correlation of the configured codes at the first scan frequency.
  if (!c.scan_frequencies.empty()) {
    const double f = c.scan_frequencies.front();
    std::vector<RadiationPattern> patterns;
    for (const HologramCode& code : c.codes) patterns.push_back(code_pattern(c.aperture, code, f));
    CsvTable corr;
    corr.header = {"code_a", "code_b", "frequency_hz", "correlation"};
    for (std::size_t a = 0; a < patterns.size(); ++a) {
      for (std::size_t b = a + 1; b < patterns.size(); ++b) {
        corr.rows.push_back({c.codes[a].to_string(), c.codes[b].to_string(), format_double(f),
                             format_double(pattern_correlation(patterns[a], patterns[b]))});
      }
    }
    write_csv(ctx.out / "code_correlation.csv", corr);
  }
  out << "effective rank " << dh.effective_rank << " (single frequency " << ds.effective_rank << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamic metasurface antenna simulator", "dmasim"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--config", global.config_path, "JSON run configuration (empty file = defaults)");
  app.add_option("--out", global.out_dir, "output directory (created if missing)");
  app.add_option("--seed", global.seed, "random seed, overrides the config");

  DispersionOptions disp;
  auto* c_disp = app.add_subcommand("dispersion", "S-parameters and dispersion indicators of one element");
  c_disp->add_option("--state", disp.state, "element state")->check(CLI::IsMember({"on", "off"}));

  PatternOptions pat;
  auto* c_pat = app.add_subcommand("pattern", "far-field pattern and beam metrics of one code");
  c_pat->add_option("--code", pat.code, "0/1 string, element nearest the feed first")->required();
  c_pat->add_option("--frequency", pat.frequency, "Hz");

  ScanOptions scan;
  auto* c_scan = app.add_subcommand("scan", "beam metrics of one code over frequency");
  c_scan->add_option("--code", scan.code, "0/1 string")->required();
  c_scan->add_option("--frequencies", scan.frequencies, "Hz, strictly increasing");

  TableOptions table;
  auto* c_table = app.add_subcommand("table", "hybrid code x frequency diversity table");
  c_table->add_option("--codes", table.codes, "0/1 strings (default: config codes)");
  c_table->add_option("--frequencies", table.frequencies, "Hz, strictly increasing");

  DesignOptions design;
  auto* c_design = app.add_subcommand("design", "holographic code synthesis for a steering angle");
  c_design->add_option("--theta", design.theta, "deg, |theta| < 90")->required();
  c_design->add_option("--frequency", design.frequency, "Hz");
  c_design->add_flag("--oracle", design.oracle, "also run the exhaustive search");

  ImageOptions image;
  auto* c_image = app.add_subcommand("image", "forward model and reconstruction of a 1D scene");
  auto* o_scene = c_image->add_option("--scene", image.scene_path, "CSV with theta_deg,re,im");
  auto* o_point = c_image->add_option("--point", image.point, "single unit scatterer at this pixel (0-based)");
  o_scene->excludes(o_point);
  c_image->add_option("--noise", image.noise, "per-component noise std");
  c_image->add_option("--method", image.method)->check(CLI::IsMember({"mf", "tikhonov"}));
  c_image->add_option("--normalization", image.normalization, "matched-filter column normalization")
      ->check(CLI::IsMember({"amplitude", "energy"}));
  c_image->add_option("--lambda", image.lambdas, "absolute Tikhonov lambda (repeatable)");
  c_image->add_option("--lambda-rel", image.lambdas_rel, "lambda as a multiple of s_1^2 (repeatable)");

  app.add_subcommand("metrics", "measurement-matrix diversity report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_image->parsed() && image.scene_path.empty() && !image.point) {
      throw ConfigError("image needs --scene FILE or --point P");
    }
    Context ctx;
    if (!global.config_path.empty()) ctx.config = load_config(global.config_path);
    if (global.seed) ctx.config.seed = *global.seed;
    ctx.out = global.out_dir;
    std::error_code ec;
    fs::create_directories(ctx.out, ec);
    if (ec || !fs::is_directory(ctx.out)) throw ConfigError("cannot create output directory '" + global.out_dir + "'");

    if (c_disp->parsed()) cmd_dispersion(ctx, disp, out);
    else if (c_pat->parsed()) cmd_pattern(ctx, pat, out);
    else if (c_scan->parsed()) cmd_scan(ctx, scan, out);
    else if (c_table->parsed()) cmd_table(ctx, table, out);
    else if (c_design->parsed()) cmd_design(ctx, design, out);
    else if (c_image->parsed()) cmd_image(ctx, image, out);
    else cmd_metrics(ctx, out);

    write_json(ctx.out / "resolved_config.json", config_to_json(ctx.config));
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dma::cli
