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

#ifndef NEWSREC_TENSOR_CHECKPOINT_H_
#define NEWSREC_TENSOR_CHECKPOINT_H_

#include <filesystem>
#include <istream>
#include <ostream>

#include "newsrec/tensor/parameters.h"

namespace newsrec::tensor {

// Binary checkpoint: magic "NRPARAM1", parameter count, then per parameter
// name, shape and raw little-endian IEEE-754 doubles. Round trips exactly.
void WriteCheckpoint(std::ostream& out, const ParameterSet& params);
ParameterSet ReadCheckpoint(std::istream& in);

void SaveCheckpoint(const std::filesystem::path& path, const ParameterSet& params);
ParameterSet LoadCheckpoint(const std::filesystem::path& path);

}  // namespace newsrec::tensor

#endif  // NEWSREC_TENSOR_CHECKPOINT_H_
