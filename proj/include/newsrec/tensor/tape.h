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

#ifndef NEWSREC_TENSOR_TAPE_H_
#define NEWSREC_TENSOR_TAPE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "newsrec/tensor/parameters.h"
#include "newsrec/tensor/tensor.h"

namespace newsrec::tensor {

enum class OpKind : std::uint8_t {
  kConstant,
  kParameter,
  kMatMul,
  kMatMulTransposeB,
  kAdd,
  kSubtract,
  kMultiply,
  kTanh,
  kSigmoid,
  kConcat,
  kRowLookup,
  kL2Normalize,
  kScale,
  kSoftmaxCrossEntropy,
  kSum,
};

const char* OpName(OpKind kind);

// Handle to a node on a Tape.
struct Var {
  std::size_t index = 0;
};

// Records a computation graph for one forward pass and propagates gradients
// back through it. Nodes are appended in evaluation order, so the node list
// is already topologically sorted and backward walks it in reverse.
//
// A tape is built per training example and discarded; parameter nodes
// reference the ParameterSet's storage, which must not change while the
// tape is alive.
class Tape {
 public:
  explicit Tape(const ParameterSet* params = nullptr) : params_(params) {}

  // Throws std::runtime_error on the first non-finite forward value.
  void set_check_finite(bool on) { check_finite_ = on; }

  Var Constant(Tensor value);
  Var Param(ParamId id);

  Var MatMul(Var a, Var b);            // [m,k] x [k,n]
  Var MatMulTransposeB(Var a, Var b);  // [m,k] x [n,k]^T
  // Elementwise. `b` may also be a [1,n] row broadcast over the rows of `a`.
  Var Add(Var a, Var b);
  Var Subtract(Var a, Var b);
  Var Multiply(Var a, Var b);
  Var Tanh(Var a);
  Var Sigmoid(Var a);
  Var Concat(std::span<const Var> parts);  // along the last axis
  Var RowLookup(Var table, std::vector<std::size_t> rows);
  // Rows scaled to unit L2 norm; all-zero rows stay zero.
  Var L2Normalize(Var a);
  Var Scale(Var a, double factor);
  // Sum over rows of -log softmax(row)[target]. Returns [1,1].
  Var SoftmaxCrossEntropy(Var logits, std::vector<std::size_t> targets);
  Var Sum(Var a);

  const Tensor& value(Var v) const;
  double scalar(Var v) const { return value(v)[0]; }
  std::size_t node_count() const { return nodes_.size(); }

  // Accumulates d(loss)/d(parameter) into `grads` (sized by ZeroGradients).
  // `loss` must be [1,1].
  void Backward(Var loss, Gradients& grads);

 private:
  struct Node {
    explicit Node(OpKind k, std::size_t lhs = 0, std::size_t rhs = 0) : kind(k), a(lhs), b(rhs) {}
    OpKind kind;
    std::size_t a;
    std::size_t b;
    Tensor value;
    ParamId param = 0;
    double factor = 0.0;
    std::vector<std::size_t> indices;  // lookup rows, CE targets, concat inputs
    std::vector<double> cache;         // row norms or softmax probabilities
  };

  Var Push(Node node);
  const Tensor& Value(std::size_t index) const;
  Var Elementwise(OpKind kind, Var a, Var b);
  Var Unary(OpKind kind, Var a);

  const ParameterSet* params_;
  std::vector<Node> nodes_;
  bool check_finite_ = false;
};

}  // namespace newsrec::tensor

#endif  // NEWSREC_TENSOR_TAPE_H_
