// distributions.cc
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

#include "bipos/distributions.h"

#include <limits>

namespace bipos {

void CheckDistribution(std::span<const double> p, double tol) {
  if (p.empty()) throw Error("empty probability vector");
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || x > 1.0 + tol) throw Error("probability outside [0, 1]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw Error("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

std::vector<double> SmoothAdditive(std::span<const double> p, double v1) {
  const double n = static_cast<double>(p.size());
  if (p.empty()) throw Error("empty probability vector");
  if (!(v1 >= 0.0) || v1 * n >= 1.0) {
    throw Error("smoothing constant must lie in [0, 1/|E|)");
  }
  const double v2 = 1.0 - n * v1;
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = v2 * p[i] + v1;
  return out;
}

std::vector<double> Interpolate(std::span<const double> p,
                                std::span<const double> q, double lambda) {
  if (p.size() != q.size()) throw Error("interpolated vectors differ in size");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error("lambda must lie in [0, 1]");
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = lambda * p[i] + (1.0 - lambda) * q[i];
  }
  return out;
}

double Entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x < 0.0) throw Error("negative probability");
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double RelativeEntropy(std::span<const double> post, std::span<const double> prior) {
  if (post.size() != prior.size()) throw Error("distributions differ in size");
  double d = 0.0;
  for (std::size_t i = 0; i < post.size(); ++i) {
    if (post[i] <= 0.0) continue;
    if (prior[i] <= 0.0) return std::numeric_limits<double>::infinity();
    d += post[i] * std::log2(post[i] / prior[i]);
  }
  return d;
}

}  // namespace bipos
