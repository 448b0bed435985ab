// Copyright 2026 The qcwalk Authors
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

#include "qcwalk/figures.hpp"

#include <fstream>
#include <stdexcept>

#include "qcwalk/spectral.hpp"

namespace qcwalk {

namespace {

constexpr struct {
  FigurePreset preset;
  std::string_view name;
} kPresetNames[] = {
    {FigurePreset::Fig1Left, "fig1-left"},   {FigurePreset::Fig1Center, "fig1-center"},
    {FigurePreset::Fig1Right, "fig1-right"}, {FigurePreset::Fig2, "fig2"},
    {FigurePreset::Fig3Left, "fig3-left"},   {FigurePreset::Fig3Right, "fig3-right"},
};

// Short-to-saturation window shared by the fixed-grid panels.
TimeGrid panel_grid() { return TimeGrid{1e-2, 10.0, 399, Spacing::Log}; }

std::string curve_file(FigurePreset preset, GraphKind kind, std::size_t n,
                       std::optional<std::size_t> extra) {
  std::string name = std::string(to_string(preset)) + "_" + std::string(to_string(kind)) + "_" +
                     std::to_string(n);
  if (extra) name += "_d" + std::to_string(*extra);
  return name + ".csv";
}

FigureCurve make_curve(FigurePreset preset, GraphKind kind, std::size_t n,
                       std::optional<std::size_t> extra, std::uint64_t seed,
                       std::optional<Node> node, std::vector<Quantity> quantities,
                       std::optional<TimeGrid> grid) {
  return {curve_file(preset, kind, n, extra), kind, n, extra, seed, node, std::move(quantities),
          grid};
}

// Random family used by the asymptotic-ratio panels: the ring plus
// random_connected graphs with node-1 degree swept in steps of two.
std::vector<std::optional<std::size_t>> random_batch(std::size_t n) {
  std::vector<std::optional<std::size_t>> degrees{std::nullopt};
  for (std::size_t d = 3; d <= n - 1; d += 2) degrees.emplace_back(d);
  if (degrees.back() != n - 1) degrees.emplace_back(n - 1);
  return degrees;
}

}  // namespace

std::string_view to_string(FigurePreset preset) {
  for (const auto& entry : kPresetNames) {
    if (entry.preset == preset) return entry.name;
  }
  return "unknown";
}

FigurePreset parse_figure_preset(std::string_view name) {
  for (const auto& entry : kPresetNames) {
    if (entry.name == name) return entry.preset;
  }
  throw std::invalid_argument("unknown figure preset '" + std::string(name) + "'");
}

std::vector<FigurePreset> all_figure_presets() {
  std::vector<FigurePreset> out;
  for (const auto& entry : kPresetNames) out.push_back(entry.preset);
  return out;
}

std::vector<FigureCurve> figure_curves(FigurePreset preset, const FigureOptions& options) {
  std::vector<FigureCurve> curves;
  const auto seed = options.seed;
  switch (preset) {
    case FigurePreset::Fig1Left:
      for (const std::size_t n : {5, 10, 20}) {
        curves.push_back(make_curve(preset, GraphKind::Complete, n, std::nullopt, seed,
                                    std::nullopt, {Quantity::Qc}, panel_grid()));
      }
      break;
    case FigurePreset::Fig1Center:
    case FigurePreset::Fig1Right: {
      const bool center = preset == FigurePreset::Fig1Center;
      for (const auto kind : {GraphKind::Complete, GraphKind::Star, GraphKind::Wheel}) {
        curves.push_back(make_curve(preset, kind, options.center_n, std::nullopt, seed,
                                    center ? std::optional<Node>(0) : std::nullopt,
                                    {center ? Quantity::Conditional : Quantity::Qc},
                                    panel_grid()));
      }
      break;
    }
    case FigurePreset::Fig2:
      curves.push_back(make_curve(preset, GraphKind::Ring, 11, std::nullopt, seed, Node{1},
                                  {Quantity::Conditional}, panel_grid()));
      for (const std::size_t d : {4, 6, 8, 10}) {
        curves.push_back(make_curve(preset, GraphKind::RandomConnected, 11, d, seed, Node{1},
                                    {Quantity::Conditional}, panel_grid()));
      }
      break;
    case FigurePreset::Fig3Left:
    case FigurePreset::Fig3Right: {
      const bool left = preset == FigurePreset::Fig3Left;
      const std::vector<std::size_t> sizes = left ? std::vector<std::size_t>{11}
                                                  : std::vector<std::size_t>{11, 5};
      for (const auto n : sizes) {
        for (const auto d : random_batch(n)) {
          const auto kind = d ? GraphKind::RandomConnected : GraphKind::Ring;
          curves.push_back(make_curve(
              preset, kind, n, d, seed, std::nullopt,
              left ? std::vector<Quantity>{Quantity::GammaS, Quantity::GammaL}
                   : std::vector<Quantity>{Quantity::Delta},
              std::nullopt));
        }
      }
      break;
    }
  }
  return curves;
}

std::vector<FigureCurve> write_figure(FigurePreset preset, const std::filesystem::path& out_dir,
                                      const FigureOptions& options) {
  std::filesystem::create_directories(out_dir);
  const auto curves = figure_curves(preset, options);
  for (const auto& curve : curves) {
    const Graph g = generate(curve.kind, curve.n, curve.extra, curve.seed);
    const auto spec = eigendecompose(laplacian(g));
    const auto times = curve.grid ? curve.grid->points() : default_grid(spec.fiedler()).points();
    const auto path = out_dir / curve.file;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_distance_csv(out, spec, times, curve.quantities, curve.node, options.workers);
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
  }

  const auto manifest_path = out_dir / (std::string(to_string(preset)) + "_manifest.csv");
  std::ofstream manifest(manifest_path);
  if (!manifest) {
    throw std::runtime_error("cannot open '" + manifest_path.string() + "' for writing");
  }
  manifest << "file,graph,n,degree_node1,seed,node,quantities\n";
  for (const auto& curve : curves) {
    manifest << curve.file << ',' << to_string(curve.kind) << ',' << curve.n << ',';
    if (curve.extra) manifest << *curve.extra;
    manifest << ',' << curve.seed << ',';
    if (curve.node) manifest << *curve.node;
    manifest << ',';
    for (std::size_t i = 0; i < curve.quantities.size(); ++i) {
      manifest << (i ? ";" : "") << to_string(curve.quantities[i]);
    }
    manifest << '\n';
  }
  if (!manifest) throw std::runtime_error("write to '" + manifest_path.string() + "' failed");
  return curves;
}

}  // namespace qcwalk
