// Copyright 2026 The gptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference implementations used only by tests. They are written
// independently of the library code they check.

#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

/// Sylvester Hadamard matrix H_{2k} = [[H, H], [H, -H]] of side 2^n.
inline Eigen::MatrixXi sylvester(int n) {
  Eigen::MatrixXi h(1, 1);
  h(0, 0) = 1;
  for (int k = 0; k < n; ++k) {
    const Eigen::Index s = h.rows();
    Eigen::MatrixXi next(2 * s, 2 * s);
    next << h, h, h, -h;
    h = next;
  }
  return h;
}

/// I(X:Y) in bits from the joint table, natural logs converted at the end.
inline double mutual_information(const Eigen::VectorXd& prior, const Eigen::MatrixXd& w) {
  const Eigen::Index nx = w.rows(), ny = w.cols();
  Eigen::VectorXd py = Eigen::VectorXd::Zero(ny);
  for (Eigen::Index x = 0; x < nx; ++x) py += prior(x) * w.row(x).transpose();
  double nats = 0.0;
  for (Eigen::Index x = 0; x < nx; ++x)
    for (Eigen::Index y = 0; y < ny; ++y) {
      const double joint = prior(x) * w(x, y);
      if (joint > 0.0) nats += joint * std::log(joint / (prior(x) * py(y)));
    }
  return nats / std::log(2.0);
}

inline double h2(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log(p) + (1 - p) * std::log(1 - p)) / std::log(2.0);
}

/// Capacity of the binary symmetric channel.
inline double bsc_capacity(double flip) { return 1.0 - h2(flip); }

inline Eigen::MatrixXd bsc(double flip) {
  Eigen::MatrixXd w(2, 2);
  w << 1 - flip, flip, flip, 1 - flip;
  return w;
}

}  // namespace oracle
