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

#ifndef NEWSREC_TENSOR_PARAMETERS_H_
#define NEWSREC_TENSOR_PARAMETERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newsrec/core/rng.h"
#include "newsrec/tensor/tensor.h"

namespace newsrec::tensor {

using ParamId = std::size_t;

// Named trainable tensors. Ids are dense and stable for the lifetime of the
// set; gradients are aligned to them.
class ParameterSet {
 public:
  ParamId Add(std::string name, Tensor value);

  Tensor& value(ParamId id) { return values_.at(id); }
  const Tensor& value(ParamId id) const { return values_.at(id); }
  const std::string& name(ParamId id) const { return names_.at(id); }
  std::size_t size() const { return values_.size(); }
  std::size_t coordinate_count() const;
  std::optional<ParamId> Find(std::string_view name) const;

  std::uint64_t Fingerprint() const;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Tensor> values_;
};

// One tensor per parameter, same shapes, zero filled.
using Gradients = std::vector<Tensor>;
Gradients ZeroGradients(const ParameterSet& params);

// Initializers drawing from the run's generator.
Tensor GlorotUniform(std::size_t rows, std::size_t cols, Rng& rng);
Tensor NormalInit(std::size_t rows, std::size_t cols, double stddev, Rng& rng);

}  // namespace newsrec::tensor

#endif  // NEWSREC_TENSOR_PARAMETERS_H_
