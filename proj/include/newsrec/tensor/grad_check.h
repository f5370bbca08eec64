/*
 * Copyright 2026 The newsrec Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NEWSREC_TENSOR_GRAD_CHECK_H_
#define NEWSREC_TENSOR_GRAD_CHECK_H_

#include <cstdint>
#include <functional>

#include "newsrec/tensor/parameters.h"
#include "newsrec/tensor/tape.h"

namespace newsrec::tensor {

// Builds a scalar loss on the given tape from the current parameter values.
using LossBuilder = std::function<Var(Tape&)>;

struct GradCheckResult {
  double max_relative_error = 0.0;
  std::size_t checked_coordinates = 0;
};

// Compares backward() against central finite differences. Relative error
// per coordinate is |a - n| / max(1e-8, |a| + |n|). Above 10k coordinates a
// seeded 1% sample is checked. A builder whose loss differs between two
// evaluations at the same point throws std::runtime_error.
GradCheckResult GradCheck(const LossBuilder& build, ParameterSet& params, double epsilon,
                          std::uint64_t sample_seed = 0);

}  // namespace newsrec::tensor

#endif  // NEWSREC_TENSOR_GRAD_CHECK_H_
