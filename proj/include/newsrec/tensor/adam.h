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

#ifndef NEWSREC_TENSOR_ADAM_H_
#define NEWSREC_TENSOR_ADAM_H_

#include <cstdint>

#include "newsrec/tensor/parameters.h"

namespace newsrec::tensor {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Adam with bias correction. Moments are dense and sized at construction.
class Adam {
 public:
  Adam(AdamConfig config, const ParameterSet& params);

  // Throws std::invalid_argument if gradient shapes do not match.
  void Step(ParameterSet& params, const Gradients& grads);

  std::int64_t step() const { return step_; }
  const AdamConfig& config() const { return config_; }
  const Gradients& first_moment() const { return m_; }
  const Gradients& second_moment() const { return v_; }

 private:
  AdamConfig config_;
  Gradients m_;
  Gradients v_;
  std::int64_t step_ = 0;
};

}  // namespace newsrec::tensor

#endif  // NEWSREC_TENSOR_ADAM_H_
