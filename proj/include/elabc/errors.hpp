// Copyright 2026 The elabc Authors
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

namespace elabc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input shapes or sizes disagree with a contract.
struct DimensionError : Error {
  using Error::Error;
};

/// A stated precondition does not hold (e.g. m < k+1).
struct PreconditionError : Error {
  using Error::Error;
};

/// An iterative solver ran out of iterations on an instance that did not
/// look infeasible. Distinct from infeasibility, which is a result state.
struct NonConvergenceError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

/// The generative model could not produce a dataset (invalid parameters).
struct SimulationError : Error {
  using Error::Error;
};

/// MCMC could not find a feasible starting point within its retry budget.
struct InitError : Error {
  using Error::Error;
};

}  // namespace elabc
