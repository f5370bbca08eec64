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

#ifndef NEWSREC_METRICS_T_TEST_H_
#define NEWSREC_METRICS_T_TEST_H_

#include <span>

namespace newsrec::metrics {

struct TTestResult {
  double t = 0.0;
  int df = 0;
  double p_value = 1.0;  // two-sided
  bool significant = false;
};

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double RegularizedIncompleteBeta(double a, double b, double x);

// Two-sided P(|T| >= |t|) for Student's t with df degrees of freedom.
double StudentTTwoSidedP(double t, double df);

// Paired t-test on a - b. Significant iff p < alpha / comparisons. Constant
// nonzero differences give p = 0; all-zero differences give t = 0, p = 1.
// Throws std::invalid_argument on unequal lengths or fewer than 2 pairs.
TTestResult PairedTTest(std::span<const double> a, std::span<const double> b, double alpha, int comparisons);

}  // namespace newsrec::metrics

#endif  // NEWSREC_METRICS_T_TEST_H_
