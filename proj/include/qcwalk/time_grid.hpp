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

#include <cstddef>
#include <vector>

namespace qcwalk {

enum class Spacing { Linear, Log };

/// Sampling grid for a time sweep. `steps` counts intervals, so the grid has
/// steps + 1 points with both endpoints included.
struct TimeGrid {
  double t_min = 1e-2;
  double t_max = 10.0;
  std::size_t steps = 399;
  Spacing spacing = Spacing::Log;

  /// Throws std::invalid_argument when t_min < 0, t_max <= t_min,
  /// steps == 0, or log spacing is requested with t_min == 0.
  void validate() const;
  std::vector<double> points() const;
};

/// Log grid from 1e-2 to ceil(100 / fiedler) with 400 points.
TimeGrid default_grid(double fiedler);

}  // namespace qcwalk
