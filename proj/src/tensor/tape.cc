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

#include "newsrec/tensor/tape.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace newsrec::tensor {
namespace {

[[noreturn]] void ShapeMismatch(OpKind kind, const Tensor& a, const Tensor& b) {
  throw std::invalid_argument(std::string(OpName(kind)) + ": shape mismatch " + a.ShapeString() + " vs " +
                              b.ShapeString());
}

void RequireMatrix(OpKind kind, const Tensor& t) {
  if (t.rank() != 2) {
    throw std::invalid_argument(std::string(OpName(kind)) + ": expected a rank-2 tensor, got " + t.ShapeString());
  }
}

void AddInto(Tensor& dst, const Tensor& src) {
  auto d = dst.values();
  auto s = src.values();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += s[i];
}

// Adds `src` into `dst`, reducing over rows when `dst` is a broadcast row.
void AddReduced(Tensor& dst, const Tensor& src) {
  if (dst.SameShape(src)) {
    AddInto(dst, src);
    return;
  }
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) dst(0, c) += src(r, c);
  }
}

double Logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

const char* OpName(OpKind kind) {
  switch (kind) {
    case OpKind::kConstant: return "constant";
    case OpKind::kParameter: return "parameter";
    case OpKind::kMatMul: return "matmul";
    case OpKind::kMatMulTransposeB: return "matmul_transpose_b";
    case OpKind::kAdd: return "add";
    case OpKind::kSubtract: return "subtract";
    case OpKind::kMultiply: return "multiply";
    case OpKind::kTanh: return "tanh";
    case OpKind::kSigmoid: return "sigmoid";
    case OpKind::kConcat: return "concat";
    case OpKind::kRowLookup: return "row_lookup";
    case OpKind::kL2Normalize: return "l2_normalize";
    case OpKind::kScale: return "scale";
    case OpKind::kSoftmaxCrossEntropy: return "softmax_cross_entropy";
    case OpKind::kSum: return "sum";
  }
  return "unknown";
}

const Tensor& Tape::Value(std::size_t index) const {
  const Node& node = nodes_[index];
  return node.kind == OpKind::kParameter ? params_->value(node.param) : node.value;
}

const Tensor& Tape::value(Var v) const { return Value(v.index); }

Var Tape::Push(Node node) {
  if (check_finite_ && !node.value.AllFinite()) {
    throw std::runtime_error(std::string(OpName(node.kind)) + " produced a non-finite value");
  }
  nodes_.push_back(std::move(node));
  return Var{nodes_.size() - 1};
}

Var Tape::Constant(Tensor value) {
  RequireMatrix(OpKind::kConstant, value);
  Node node{OpKind::kConstant};
  node.value = std::move(value);
  return Push(std::move(node));
}

Var Tape::Param(ParamId id) {
  if (params_ == nullptr || id >= params_->size()) {
    throw std::invalid_argument("parameter id out of range");
  }
  RequireMatrix(OpKind::kParameter, params_->value(id));
  Node node{OpKind::kParameter};
  node.param = id;
  nodes_.push_back(std::move(node));
  return Var{nodes_.size() - 1};
}

Var Tape::MatMul(Var a, Var b) {
  const Tensor& x = Value(a.index);
  const Tensor& y = Value(b.index);
  if (x.cols() != y.rows()) ShapeMismatch(OpKind::kMatMul, x, y);
  const std::size_t m = x.rows(), k = x.cols(), n = y.cols();
  Node node{OpKind::kMatMul, a.index, b.index};
  node.value = Tensor::Zeros(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const double xv = x(i, p);
      if (xv == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) node.value(i, j) += xv * y(p, j);
    }
  }
  return Push(std::move(node));
}

Var Tape::MatMulTransposeB(Var a, Var b) {
  const Tensor& x = Value(a.index);
  const Tensor& y = Value(b.index);
  if (x.cols() != y.cols()) ShapeMismatch(OpKind::kMatMulTransposeB, x, y);
  const std::size_t m = x.rows(), k = x.cols(), n = y.rows();
  Node node{OpKind::kMatMulTransposeB, a.index, b.index};
  node.value = Tensor::Zeros(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) acc += x(i, p) * y(j, p);
      node.value(i, j) = acc;
    }
  }
  return Push(std::move(node));
}

Var Tape::Elementwise(OpKind kind, Var a, Var b) {
  const Tensor& x = Value(a.index);
  const Tensor& y = Value(b.index);
  const bool broadcast = !x.SameShape(y) && y.rank() == 2 && y.rows() == 1 && y.cols() == x.cols();
  if (!x.SameShape(y) && !broadcast) ShapeMismatch(kind, x, y);
  Node node{kind, a.index, b.index};
  node.value = Tensor(x.shape());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const double lhs = x(r, c);
      const double rhs = broadcast ? y(0, c) : y(r, c);
      double out = 0.0;
      switch (kind) {
        case OpKind::kAdd: out = lhs + rhs; break;
        case OpKind::kSubtract: out = lhs - rhs; break;
        default: out = lhs * rhs; break;
      }
      node.value(r, c) = out;
    }
  }
  return Push(std::move(node));
}

Var Tape::Add(Var a, Var b) { return Elementwise(OpKind::kAdd, a, b); }
Var Tape::Subtract(Var a, Var b) { return Elementwise(OpKind::kSubtract, a, b); }
Var Tape::Multiply(Var a, Var b) { return Elementwise(OpKind::kMultiply, a, b); }

Var Tape::Unary(OpKind kind, Var a) {
  const Tensor& x = Value(a.index);
  Node node{kind, a.index};
  node.value = Tensor(x.shape());
  auto out = node.value.values();
  auto in = x.values();
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = kind == OpKind::kTanh ? std::tanh(in[i]) : Logistic(in[i]);
  }
  return Push(std::move(node));
}

Var Tape::Tanh(Var a) { return Unary(OpKind::kTanh, a); }
Var Tape::Sigmoid(Var a) { return Unary(OpKind::kSigmoid, a); }

Var Tape::Concat(std::span<const Var> parts) {
  if (parts.empty()) throw std::invalid_argument("concat: no inputs");
  const std::size_t rows = Value(parts[0].index).rows();
  std::size_t cols = 0;
  for (const Var part : parts) {
    const Tensor& t = Value(part.index);
    if (t.rows() != rows) ShapeMismatch(OpKind::kConcat, Value(parts[0].index), t);
    cols += t.cols();
  }
  Node node{OpKind::kConcat};
  node.value = Tensor::Zeros(rows, cols);
  std::size_t offset = 0;
  for (const Var part : parts) {
    const Tensor& t = Value(part.index);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < t.cols(); ++c) node.value(r, offset + c) = t(r, c);
    }
    offset += t.cols();
    node.indices.push_back(part.index);
  }
  return Push(std::move(node));
}

Var Tape::RowLookup(Var table, std::vector<std::size_t> rows) {
  const Tensor& t = Value(table.index);
  Node node{OpKind::kRowLookup, table.index};
  node.value = Tensor::Zeros(rows.size(), t.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= t.rows()) {
      throw std::invalid_argument("row_lookup: row " + std::to_string(rows[i]) + " out of range for table " +
                                  t.ShapeString());
    }
    std::copy_n(t.row(rows[i]).begin(), t.cols(), node.value.row(i).begin());
  }
  node.indices = std::move(rows);
  return Push(std::move(node));
}

Var Tape::L2Normalize(Var a) {
  const Tensor& x = Value(a.index);
  Node node{OpKind::kL2Normalize, a.index};
  node.value = Tensor(x.shape());
  node.cache.resize(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    double sq = 0.0;
    for (const double v : x.row(r)) sq += v * v;
    const double norm = std::sqrt(sq);
    node.cache[r] = norm;
    if (norm == 0.0) continue;
    for (std::size_t c = 0; c < x.cols(); ++c) node.value(r, c) = x(r, c) / norm;
  }
  return Push(std::move(node));
}

Var Tape::Scale(Var a, double factor) {
  const Tensor& x = Value(a.index);
  Node node{OpKind::kScale, a.index};
  node.factor = factor;
  node.value = x;
  for (double& v : node.value.values()) v *= factor;
  return Push(std::move(node));
}

Var Tape::SoftmaxCrossEntropy(Var logits, std::vector<std::size_t> targets) {
  const Tensor& x = Value(logits.index);
  if (targets.size() != x.rows()) {
    throw std::invalid_argument("softmax_cross_entropy: " + std::to_string(targets.size()) + " targets for logits " +
                                x.ShapeString());
  }
  Node node{OpKind::kSoftmaxCrossEntropy, logits.index};
  node.cache.resize(x.size());
  double loss = 0.0;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    if (targets[r] >= x.cols()) {
      throw std::invalid_argument("softmax_cross_entropy: target index out of range");
    }
    const auto row = x.row(r);
    const double max = *std::max_element(row.begin(), row.end());
    double total = 0.0;
    for (const double v : row) total += std::exp(v - max);
    for (std::size_t c = 0; c < row.size(); ++c) node.cache[r * x.cols() + c] = std::exp(row[c] - max) / total;
    loss += std::log(total) - (row[targets[r]] - max);
  }
  node.value = Tensor::Scalar(loss);
  node.indices = std::move(targets);
  return Push(std::move(node));
}

Var Tape::Sum(Var a) {
  double total = 0.0;
  for (const double v : Value(a.index).values()) total += v;
  Node node{OpKind::kSum, a.index};
  node.value = Tensor::Scalar(total);
  return Push(std::move(node));
}

void Tape::Backward(Var loss, Gradients& grads) {
  if (Value(loss.index).size() != 1) {
    throw std::invalid_argument("backward: loss must be a scalar, got " + Value(loss.index).ShapeString());
  }
  if (params_ != nullptr && grads.size() != params_->size()) {
    throw std::invalid_argument("backward: gradient list does not match the parameter set");
  }
  std::vector<Tensor> adjoint(nodes_.size());
  adjoint[loss.index] = Tensor::Scalar(1.0);
  const auto grad_of = [&](std::size_t index) -> Tensor& {
    if (adjoint[index].size() == 0) adjoint[index] = Tensor(Value(index).shape());
    return adjoint[index];
  };

  for (std::size_t i = loss.index + 1; i-- > 0;) {
    if (adjoint[i].size() == 0) continue;
    const Node& node = nodes_[i];
    const Tensor& g = adjoint[i];
    switch (node.kind) {
      case OpKind::kConstant:
        break;
      case OpKind::kParameter:
        AddInto(grads[node.param], g);
        break;
      case OpKind::kMatMul: {
        const Tensor& x = Value(node.a);
        const Tensor& y = Value(node.b);
        Tensor& gx = grad_of(node.a);
        Tensor& gy = grad_of(node.b);
        for (std::size_t r = 0; r < x.rows(); ++r) {
          for (std::size_t p = 0; p < x.cols(); ++p) {
            double acc = 0.0;
            const double xv = x(r, p);
            for (std::size_t c = 0; c < y.cols(); ++c) {
              acc += g(r, c) * y(p, c);
              gy(p, c) += xv * g(r, c);
            }
            gx(r, p) += acc;
          }
        }
        break;
      }
      case OpKind::kMatMulTransposeB: {
        const Tensor& x = Value(node.a);
        const Tensor& y = Value(node.b);
        Tensor& gx = grad_of(node.a);
        Tensor& gy = grad_of(node.b);
        for (std::size_t r = 0; r < x.rows(); ++r) {
          for (std::size_t j = 0; j < y.rows(); ++j) {
            const double gv = g(r, j);
            if (gv == 0.0) continue;
            for (std::size_t p = 0; p < x.cols(); ++p) {
              gx(r, p) += gv * y(j, p);
              gy(j, p) += gv * x(r, p);
            }
          }
        }
        break;
      }
      case OpKind::kAdd:
        AddInto(grad_of(node.a), g);
        AddReduced(grad_of(node.b), g);
        break;
      case OpKind::kSubtract: {
        AddInto(grad_of(node.a), g);
        Tensor negated = g;
        for (double& v : negated.values()) v = -v;
        AddReduced(grad_of(node.b), negated);
        break;
      }
      case OpKind::kMultiply: {
        const Tensor& x = Value(node.a);
        const Tensor& y = Value(node.b);
        const bool broadcast = !x.SameShape(y);
        Tensor& gx = grad_of(node.a);
        Tensor& gy = grad_of(node.b);
        for (std::size_t r = 0; r < x.rows(); ++r) {
          for (std::size_t c = 0; c < x.cols(); ++c) {
            const double yv = broadcast ? y(0, c) : y(r, c);
            gx(r, c) += g(r, c) * yv;
            (broadcast ? gy(0, c) : gy(r, c)) += g(r, c) * x(r, c);
          }
        }
        break;
      }
      case OpKind::kTanh: {
        Tensor& gx = grad_of(node.a);
        for (std::size_t k = 0; k < g.size(); ++k) {
          const double y = node.value[k];
          gx[k] += g[k] * (1.0 - y * y);
        }
        break;
      }
      case OpKind::kSigmoid: {
        Tensor& gx = grad_of(node.a);
        for (std::size_t k = 0; k < g.size(); ++k) {
          const double y = node.value[k];
          gx[k] += g[k] * y * (1.0 - y);
        }
        break;
      }
      case OpKind::kConcat: {
        std::size_t offset = 0;
        for (const std::size_t input : node.indices) {
          Tensor& gx = grad_of(input);
          for (std::size_t r = 0; r < gx.rows(); ++r) {
            for (std::size_t c = 0; c < gx.cols(); ++c) gx(r, c) += g(r, offset + c);
          }
          offset += gx.cols();
        }
        break;
      }
      case OpKind::kRowLookup: {
        Tensor& gt = grad_of(node.a);
        for (std::size_t k = 0; k < node.indices.size(); ++k) {
          auto dst = gt.row(node.indices[k]);
          const auto src = g.row(k);
          for (std::size_t c = 0; c < dst.size(); ++c) dst[c] += src[c];
        }
        break;
      }
      case OpKind::kL2Normalize: {
        Tensor& gx = grad_of(node.a);
        for (std::size_t r = 0; r < g.rows(); ++r) {
          const double norm = node.cache[r];
          if (norm == 0.0) continue;
          double dot = 0.0;
          for (std::size_t c = 0; c < g.cols(); ++c) dot += node.value(r, c) * g(r, c);
          for (std::size_t c = 0; c < g.cols(); ++c) gx(r, c) += (g(r, c) - node.value(r, c) * dot) / norm;
        }
        break;
      }
      case OpKind::kScale: {
        Tensor& gx = grad_of(node.a);
        for (std::size_t k = 0; k < g.size(); ++k) gx[k] += g[k] * node.factor;
        break;
      }
      case OpKind::kSoftmaxCrossEntropy: {
        Tensor& gx = grad_of(node.a);
        const double upstream = g[0];
        const std::size_t cols = gx.cols();
        for (std::size_t r = 0; r < gx.rows(); ++r) {
          for (std::size_t c = 0; c < cols; ++c) {
            const double target = c == node.indices[r] ? 1.0 : 0.0;
            gx(r, c) += upstream * (node.cache[r * cols + c] - target);
          }
        }
        break;
      }
      case OpKind::kSum: {
        Tensor& gx = grad_of(node.a);
        for (double& v : gx.values()) v += g[0];
        break;
      }
    }
  }
}

}  // namespace newsrec::tensor
