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

#include "newsrec/tensor/parameters.h"

#include <cmath>
#include <stdexcept>

#include "newsrec/core/hash.h"

namespace newsrec::tensor {

ParamId ParameterSet::Add(std::string name, Tensor value) {
  if (Find(name)) {
    throw std::invalid_argument("duplicate parameter name '" + name + "'");
  }
  names_.push_back(std::move(name));
  values_.push_back(std::move(value));
  return values_.size() - 1;
}

std::size_t ParameterSet::coordinate_count() const {
  std::size_t total = 0;
  for (const Tensor& value : values_) total += value.size();
  return total;
}

std::optional<ParamId> ParameterSet::Find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::uint64_t ParameterSet::Fingerprint() const {
  Hasher hasher;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    hasher.Add(std::string_view(names_[i]));
    hasher.Add(std::span<const std::size_t>(values_[i].shape()));
    hasher.Add(values_[i].values());
  }
  return hasher.digest();
}

Gradients ZeroGradients(const ParameterSet& params) {
  Gradients grads;
  grads.reserve(params.size());
  for (ParamId id = 0; id < params.size(); ++id) grads.emplace_back(params.value(id).shape());
  return grads;
}

Tensor GlorotUniform(std::size_t rows, std::size_t cols, Rng& rng) {
  Tensor out = Tensor::Zeros(rows, cols);
  const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
  for (double& v : out.values()) v = rng.Uniform(-limit, limit);
  return out;
}

Tensor NormalInit(std::size_t rows, std::size_t cols, double stddev, Rng& rng) {
  Tensor out = Tensor::Zeros(rows, cols);
  for (double& v : out.values()) v = rng.Normal(0.0, stddev);
  return out;
}

}  // namespace newsrec::tensor
