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

#include "newsrec/tensor/checkpoint.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace newsrec::tensor {
namespace {

constexpr char kMagic[8] = {'N', 'R', 'P', 'A', 'R', 'A', 'M', '1'};
static_assert(std::endian::native == std::endian::little, "checkpoint I/O assumes a little-endian host");

void WriteU64(std::ostream& out, std::uint64_t value) { out.write(reinterpret_cast<const char*>(&value), 8); }

std::uint64_t ReadU64(std::istream& in) {
  std::uint64_t value = 0;
  if (!in.read(reinterpret_cast<char*>(&value), 8)) throw std::runtime_error("checkpoint: truncated");
  return value;
}

}  // namespace

void WriteCheckpoint(std::ostream& out, const ParameterSet& params) {
  out.write(kMagic, sizeof(kMagic));
  WriteU64(out, params.size());
  for (ParamId id = 0; id < params.size(); ++id) {
    const std::string& name = params.name(id);
    const Tensor& value = params.value(id);
    WriteU64(out, name.size());
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    WriteU64(out, value.rank());
    for (const std::size_t dim : value.shape()) WriteU64(out, dim);
    out.write(reinterpret_cast<const char*>(value.values().data()),
              static_cast<std::streamsize>(value.values().size_bytes()));
  }
}

ParameterSet ReadCheckpoint(std::istream& in) {
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw std::runtime_error("checkpoint: bad magic");
  }
  ParameterSet params;
  const std::uint64_t count = ReadU64(in);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string name(ReadU64(in), '\0');
    if (!in.read(name.data(), static_cast<std::streamsize>(name.size()))) {
      throw std::runtime_error("checkpoint: truncated");
    }
    std::vector<std::size_t> shape(ReadU64(in));
    for (auto& dim : shape) dim = ReadU64(in);
    Tensor value(shape);
    if (!in.read(reinterpret_cast<char*>(value.values().data()),
                 static_cast<std::streamsize>(value.values().size_bytes()))) {
      throw std::runtime_error("checkpoint: truncated");
    }
    params.Add(std::move(name), std::move(value));
  }
  return params;
}

void SaveCheckpoint(const std::filesystem::path& path, const ParameterSet& params) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write checkpoint " + path.string());
  WriteCheckpoint(out, params);
}

ParameterSet LoadCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  return ReadCheckpoint(in);
}

}  // namespace newsrec::tensor
