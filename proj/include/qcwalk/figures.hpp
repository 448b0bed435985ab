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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/sweep.hpp"
#include "qcwalk/time_grid.hpp"

namespace qcwalk {

enum class FigurePreset { Fig1Left, Fig1Center, Fig1Right, Fig2, Fig3Left, Fig3Right };

std::string_view to_string(FigurePreset preset);
FigurePreset parse_figure_preset(std::string_view name);
std::vector<FigurePreset> all_figure_presets();

/// One curve of a figure: which graph, which start node (if any), what was
/// sampled on which grid.
struct FigureCurve {
  std::string file;
  GraphKind kind;
  std::size_t n;
  std::optional<std::size_t> extra;
  std::uint64_t seed;
  std::optional<Node> node;
  std::vector<Quantity> quantities;
  /// Empty means the default grid of the graph.
  std::optional<TimeGrid> grid;
};

struct FigureOptions {
  std::uint64_t seed = 0;
  /// Graph size for the complete/star/wheel comparison panels.
  std::size_t center_n = 8;
  unsigned workers = 1;
};

/// The curves a preset consists of, without evaluating anything.
std::vector<FigureCurve> figure_curves(FigurePreset preset, const FigureOptions& options);

/// Evaluates every curve of the preset into `<out_dir>/<file>` and writes
/// `<out_dir>/<preset>_manifest.csv` listing them. Returns the curves written.
std::vector<FigureCurve> write_figure(FigurePreset preset, const std::filesystem::path& out_dir,
                                      const FigureOptions& options);

}  // namespace qcwalk
