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

#include "newsrec/tensor/grad_check.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "newsrec/core/rng.h"

namespace newsrec::tensor {
namespace {

double Evaluate(const LossBuilder& build, const ParameterSet& params) {
  Tape tape(&params);
  return tape.scalar(build(tape));
}

}  // namespace

GradCheckResult GradCheck(const LossBuilder& build, ParameterSet& params, double epsilon,
                          std::uint64_t sample_seed) {
  if (!(epsilon >= 1e-6 && epsilon <= 1e-3)) {
    throw std::invalid_argument("grad_check: epsilon must lie in [1e-6, 1e-3]");
  }
  Gradients analytic = ZeroGradients(params);
  double reference = 0.0;
  {
    Tape tape(&params);
    const Var loss = build(tape);
    reference = tape.scalar(loss);
    tape.Backward(loss, analytic);
  }
  if (Evaluate(build, params) != reference) {
    throw std::runtime_error("grad_check: loss closure is not deterministic");
  }

  std::vector<std::pair<ParamId, std::size_t>> coordinates;
  for (ParamId id = 0; id < params.size(); ++id) {
    for (std::size_t k = 0; k < params.value(id).size(); ++k) coordinates.emplace_back(id, k);
  }
  if (coordinates.size() > 10000) {
    Rng rng(sample_seed);
    const std::size_t keep = coordinates.size() / 100;
    for (std::size_t i = 0; i < keep; ++i) {
      std::swap(coordinates[i], coordinates[i + rng.UniformInt(coordinates.size() - i)]);
    }
    coordinates.resize(keep);
  }

  GradCheckResult result;
  for (const auto& [id, k] : coordinates) {
    double& slot = params.value(id)[k];
    const double saved = slot;
    slot = saved + epsilon;
    const double plus = Evaluate(build, params);
    slot = saved - epsilon;
    const double minus = Evaluate(build, params);
    slot = saved;
    const double numeric = (plus - minus) / (2.0 * epsilon);
    const double a = analytic[id][k];
    const double error = std::abs(a - numeric) / std::max(1e-8, std::abs(a) + std::abs(numeric));
    result.max_relative_error = std::max(result.max_relative_error, error);
    ++result.checked_coordinates;
  }
  return result;
}

}  // namespace newsrec::tensor
