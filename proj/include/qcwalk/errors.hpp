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

#include <stdexcept>
#include <string>

namespace qcwalk {

/// Raised for numerical failures: eigensolver breakdown, disconnected
/// inputs handed to the distance routines, invariants violated beyond
/// roundoff.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraphError : public ComputationError {
 public:
  DisconnectedGraphError()
      : ComputationError("graph is disconnected; the QC-distance requires a connected graph") {}
};

}  // namespace qcwalk
