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

#include "newsrec/tensor/adam.h"

#include <cmath>
#include <stdexcept>

namespace newsrec::tensor {

Adam::Adam(AdamConfig config, const ParameterSet& params)
    : config_(config), m_(ZeroGradients(params)), v_(ZeroGradients(params)) {}

void Adam::Step(ParameterSet& params, const Gradients& grads) {
  if (grads.size() != params.size() || m_.size() != params.size()) {
    throw std::invalid_argument("adam: parameter/gradient count mismatch");
  }
  for (ParamId id = 0; id < params.size(); ++id) {
    if (!grads[id].SameShape(params.value(id)) || !m_[id].SameShape(params.value(id))) {
      throw std::invalid_argument("adam: shape mismatch for '" + params.name(id) + "': " +
                                  params.value(id).ShapeString() + " vs " + grads[id].ShapeString());
    }
  }
  ++step_;
  const double t = static_cast<double>(step_);
  const double correction1 = 1.0 - std::pow(config_.beta1, t);
  const double correction2 = 1.0 - std::pow(config_.beta2, t);
  for (ParamId id = 0; id < params.size(); ++id) {
    auto p = params.value(id).values();
    const auto g = grads[id].values();
    auto m = m_[id].values();
    auto v = v_[id].values();
    for (std::size_t k = 0; k < p.size(); ++k) {
      m[k] = config_.beta1 * m[k] + (1.0 - config_.beta1) * g[k];
      v[k] = config_.beta2 * v[k] + (1.0 - config_.beta2) * g[k] * g[k];
      const double m_hat = m[k] / correction1;
      const double v_hat = v[k] / correction2;
      p[k] -= config_.learning_rate * m_hat / (std::sqrt(v_hat) + config_.epsilon);
    }
  }
}

}  // namespace newsrec::tensor
