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

#include "qcwalk/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace qcwalk {

void TimeGrid::validate() const {
  if (!(t_min >= 0.0)) throw std::invalid_argument("t_min must be nonnegative");
  if (!(t_max > t_min)) throw std::invalid_argument("t_max must exceed t_min");
  if (steps == 0) throw std::invalid_argument("steps must be at least 1");
  if (spacing == Spacing::Log && !(t_min > 0.0)) {
    throw std::invalid_argument("log spacing requires t_min > 0");
  }
}

std::vector<double> TimeGrid::points() const {
  validate();
  std::vector<double> out(steps + 1);
  const double denom = static_cast<double>(steps);
  if (spacing == Spacing::Linear) {
    for (std::size_t i = 0; i <= steps; ++i) {
      out[i] = t_min + (t_max - t_min) * (static_cast<double>(i) / denom);
    }
  } else {
    const double lo = std::log(t_min);
    const double hi = std::log(t_max);
    for (std::size_t i = 0; i <= steps; ++i) {
      out[i] = std::exp(lo + (hi - lo) * (static_cast<double>(i) / denom));
    }
  }
  out.front() = t_min;
  out.back() = t_max;
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!(out[i] > out[i - 1])) {
      throw std::invalid_argument("grid is too fine to be strictly increasing in double precision");
    }
  }
  return out;
}

TimeGrid default_grid(double fiedler) {
  if (!(fiedler > 0.0)) throw std::invalid_argument("default grid needs a positive Fiedler value");
  TimeGrid grid;
  grid.t_min = 1e-2;
  grid.t_max = std::ceil(100.0 / fiedler);
  grid.steps = 399;
  grid.spacing = Spacing::Log;
  return grid;
}

}  // namespace qcwalk
