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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "newsrec/core/rng.h"
#include "newsrec/tensor/adam.h"
#include "newsrec/tensor/checkpoint.h"
#include "newsrec/tensor/grad_check.h"
#include "newsrec/tensor/tape.h"
#include "support/op_trials.h"

namespace newsrec::tensor {
namespace {

TEST(Tape, SigmoidOfZeroIsOneHalf) {
  Tape tape;
  const Var out = tape.Sigmoid(tape.Constant(Tensor::Row({0.0})));
  EXPECT_DOUBLE_EQ(tape.scalar(out), 0.5);
}

TEST(Tape, MatMulWithZerosIsZero) {
  Tape tape;
  const Var out = tape.MatMul(tape.Constant(Tensor::Zeros(2, 3)), tape.Constant(Tensor::Matrix(3, 1, {4, -7, 2.5})));
  EXPECT_EQ(tape.value(out), Tensor::Zeros(2, 1));
}

TEST(Tape, UniformSoftmaxCrossEntropyIsLogOfCount) {
  Tape tape;
  const Tensor logits({1, 51}, std::vector<double>(51, 0.37));
  for (const std::size_t target : {0u, 17u, 50u}) {
    EXPECT_NEAR(tape.scalar(tape.SoftmaxCrossEntropy(tape.Constant(logits), {target})), std::log(51.0), 1e-12);
  }
  EXPECT_NEAR(std::log(51.0), 3.9318, 1e-4);
}

TEST(Tape, ShapeMismatchNamesKindAndShapes) {
  Tape tape;
  try {
    tape.MatMul(tape.Constant(Tensor::Zeros(2, 3)), tape.Constant(Tensor::Zeros(4, 1)));
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "matmul: shape mismatch [2x3] vs [4x1]");
  }
  EXPECT_THROW(tape.Add(tape.Constant(Tensor::Zeros(2, 3)), tape.Constant(Tensor::Zeros(2, 2))),
               std::invalid_argument);
}

TEST(Backward, SumOfParameterGivesOnes) {
  ParameterSet params;
  const auto p = params.Add("p", Tensor::Matrix(2, 3, {1, 2, 3, 4, 5, 6}));
  Tape tape(&params);
  Gradients grads = ZeroGradients(params);
  tape.Backward(tape.Sum(tape.Param(p)), grads);
  EXPECT_EQ(grads[p], Tensor({2, 3}, std::vector<double>(6, 1.0)));
}

TEST(Backward, SigmoidDerivativeAtZero) {
  ParameterSet params;
  const auto w = params.Add("w", Tensor::Scalar(0.0));
  Tape tape(&params);
  Gradients grads = ZeroGradients(params);
  tape.Backward(tape.Sigmoid(tape.MatMul(tape.Param(w), tape.Constant(Tensor::Scalar(1.0)))), grads);
  EXPECT_DOUBLE_EQ(grads[w][0], 0.25);
}

TEST(Backward, NonScalarLossIsRejected) {
  ParameterSet params;
  const auto p = params.Add("p", Tensor::Zeros(1, 2));
  Tape tape(&params);
  Gradients grads = ZeroGradients(params);
  EXPECT_THROW(tape.Backward(tape.Param(p), grads), std::invalid_argument);
}

TEST(Backward, UnreachableParametersGetZeroGradients) {
  ParameterSet params;
  const auto used = params.Add("used", Tensor::Row({1.0, 2.0}));
  const auto unused = params.Add("unused", Tensor::Row({3.0, 4.0}));
  Tape tape(&params);
  Gradients grads = ZeroGradients(params);
  tape.Param(unused);
  tape.Backward(tape.Sum(tape.Tanh(tape.Param(used))), grads);
  EXPECT_EQ(grads[unused], Tensor::Zeros(1, 2));
  EXPECT_NE(grads[used], Tensor::Zeros(1, 2));
}

// Two-layer tanh network: loss = sum(tanh(tanh(x W1 + b1) W2 + b2) * c).
ParameterSet TwoLayerNet(std::uint64_t seed, LossBuilder& build) {
  Rng rng(seed);
  ParameterSet params;
  const auto w1 = params.Add("w1", NormalInit(4, 6, 0.7, rng));
  const auto b1 = params.Add("b1", NormalInit(1, 6, 0.3, rng));
  const auto w2 = params.Add("w2", NormalInit(6, 3, 0.7, rng));
  const auto b2 = params.Add("b2", NormalInit(1, 3, 0.3, rng));
  const Tensor x = NormalInit(5, 4, 1.0, rng);
  const Tensor c = NormalInit(5, 3, 1.0, rng);
  build = [=](Tape& tape) {
    const Var hidden = tape.Tanh(tape.Add(tape.MatMul(tape.Constant(x), tape.Param(w1)), tape.Param(b1)));
    const Var out = tape.Tanh(tape.Add(tape.MatMul(hidden, tape.Param(w2)), tape.Param(b2)));
    return tape.Sum(tape.Multiply(out, tape.Constant(c)));
  };
  return params;
}

TEST(GradCheck, TwoLayerTanhNetwork) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    LossBuilder build;
    ParameterSet params = TwoLayerNet(seed, build);
    EXPECT_LT(GradCheck(build, params, 1e-4).max_relative_error, 1e-4) << "seed " << seed;
  }
}

TEST(GradCheck, QuadraticLossIsExact) {
  ParameterSet params;
  const auto p = params.Add("p", Tensor::Row({1.0, 2.0}));
  const LossBuilder build = [&](Tape& tape) { return tape.Sum(tape.Multiply(tape.Param(p), tape.Param(p))); };
  Tape tape(&params);
  Gradients grads = ZeroGradients(params);
  tape.Backward(build(tape), grads);
  EXPECT_EQ(grads[p], Tensor::Row({2.0, 4.0}));
  EXPECT_LT(GradCheck(build, params, 1e-4).max_relative_error, 1e-8);
}

TEST(GradCheck, RandomizedClosureIsRejected) {
  ParameterSet params;
  const auto p = params.Add("p", Tensor::Row({1.0}));
  Rng noise(1);
  const LossBuilder build = [&](Tape& tape) {
    return tape.Sum(tape.Scale(tape.Param(p), noise.Uniform()));
  };
  EXPECT_THROW(GradCheck(build, params, 1e-4), std::runtime_error);
}

TEST(GradCheck, EpsilonOutsideRangeIsRejected) {
  ParameterSet params;
  const auto p = params.Add("p", Tensor::Row({1.0}));
  const LossBuilder build = [&](Tape& tape) { return tape.Sum(tape.Param(p)); };
  EXPECT_THROW(GradCheck(build, params, 1e-2), std::invalid_argument);
}

TEST(GradCheck, SamplesLargeParameterSets) {
  Rng rng(2);
  ParameterSet params;
  const auto p = params.Add("p", NormalInit(200, 60, 1.0, rng));
  const LossBuilder build = [&](Tape& tape) { return tape.Sum(tape.Tanh(tape.Param(p))); };
  const auto result = GradCheck(build, params, 1e-4);
  EXPECT_EQ(result.checked_coordinates, 120u);
  EXPECT_LT(result.max_relative_error, 1e-4);
}

class OpGradient : public ::testing::TestWithParam<OpKind> {};

TEST_P(OpGradient, MatchesFiniteDifferencesOnRandomInputs) {
  EXPECT_LT(testing::WorstOpError(GetParam(), 100), 1e-4);
}

INSTANTIATE_TEST_SUITE_P(AllOps, OpGradient, ::testing::ValuesIn(testing::DifferentiableOps()),
                         [](const auto& info) { return std::string(OpName(info.param)); });

TEST(Backward, IsLinearInUpstreamGradient) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    LossBuilder build;
    ParameterSet params = TwoLayerNet(seed, build);
    const double c = 3.7;
    Gradients base = ZeroGradients(params);
    Gradients scaled = ZeroGradients(params);
    {
      Tape tape(&params);
      tape.Backward(build(tape), base);
    }
    {
      Tape tape(&params);
      tape.Backward(tape.Scale(build(tape), c), scaled);
    }
    for (ParamId id = 0; id < params.size(); ++id) {
      for (std::size_t k = 0; k < base[id].size(); ++k) {
        EXPECT_NEAR(scaled[id][k], c * base[id][k], 1e-10 * std::abs(c * base[id][k]) + 1e-300);
      }
    }
  }
}

TEST(Tape, L2NormalizeGivesUnitRowsAndKeepsZeroRows) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    Tensor x = NormalInit(4, 7, 2.0, rng);
    for (double& v : x.row(2)) v = 0.0;
    Tape tape;
    const Tensor& y = tape.value(tape.L2Normalize(tape.Constant(x)));
    for (std::size_t r = 0; r < 4; ++r) {
      double sq = 0.0;
      for (const double v : y.row(r)) sq += v * v;
      EXPECT_NEAR(std::sqrt(sq), r == 2 ? 0.0 : 1.0, 1e-6);
    }
  }
}

TEST(Tape, FiniteCheckModeReportsNonFiniteValues) {
  Tape tape;
  tape.set_check_finite(true);
  const Var big = tape.Constant(Tensor::Row({1e300}));
  EXPECT_THROW(tape.Multiply(big, big), std::runtime_error);
}

TEST(Adam, ZeroGradientLeavesParametersAndCountsStep) {
  ParameterSet params;
  const auto p = params.Add("p", Tensor::Row({0.5, -1.5}));
  Adam adam({}, params);
  adam.Step(params, ZeroGradients(params));
  EXPECT_EQ(params.value(p), Tensor::Row({0.5, -1.5}));
  EXPECT_EQ(adam.step(), 1);
}

TEST(Adam, FirstStepMovesByLearningRate) {
  for (const double g : {3.0, -0.02, 1e-3}) {
    ParameterSet params;
    const auto p = params.Add("p", Tensor::Scalar(2.0));
    AdamConfig config;
    config.learning_rate = 0.01;
    Adam adam(config, params);
    Gradients grads = ZeroGradients(params);
    grads[p][0] = g;
    adam.Step(params, grads);
    // lr * g / (|g| + eps)
    EXPECT_NEAR(params.value(p)[0], 2.0 - std::copysign(0.01, g), 0.01 * 1e-8 / std::abs(g) + 1e-15);
  }
}

TEST(Adam, ShapeMismatchIsRejected) {
  ParameterSet params;
  params.Add("p", Tensor::Row({1.0, 2.0}));
  Adam adam({}, params);
  Gradients wrong = {Tensor::Row({1.0})};
  EXPECT_THROW(adam.Step(params, wrong), std::invalid_argument);
}

TEST(Adam, IdenticalRunsGiveIdenticalTrajectories) {
  const auto run = [] {
    LossBuilder build;
    ParameterSet params = TwoLayerNet(7, build);
    Adam adam({0.05}, params);
    for (int step = 0; step < 20; ++step) {
      Tape tape(&params);
      Gradients grads = ZeroGradients(params);
      tape.Backward(build(tape), grads);
      adam.Step(params, grads);
    }
    return params;
  };
  EXPECT_EQ(run(), run());
}

TEST(Checkpoint, RoundTripIsBitExact) {
  Rng rng(12);
  ParameterSet params;
  params.Add("gru/w_z", NormalInit(3, 5, 1.0, rng));
  params.Add("scalar", Tensor::Scalar(std::nextafter(1.0, 2.0)));
  params.Add("tiny", Tensor::Row({5e-324, -0.0, 1e308}));
  std::stringstream buffer;
  WriteCheckpoint(buffer, params);
  const ParameterSet loaded = ReadCheckpoint(buffer);
  ASSERT_EQ(loaded.size(), params.size());
  EXPECT_EQ(loaded.Fingerprint(), params.Fingerprint());
  EXPECT_TRUE(std::signbit(loaded.value(2)[1]));
}

TEST(Checkpoint, TruncatedInputIsRejected) {
  ParameterSet params;
  params.Add("p", Tensor::Row({1.0, 2.0}));
  std::stringstream buffer;
  WriteCheckpoint(buffer, params);
  std::string bytes = buffer.str();
  bytes.resize(bytes.size() - 3);
  std::stringstream truncated(bytes);
  EXPECT_THROW(ReadCheckpoint(truncated), std::runtime_error);
}

}  // namespace
}  // namespace newsrec::tensor
