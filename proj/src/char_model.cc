// char_model.cc
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

#include "bipos/char_model.h"

#include "bipos/distributions.h"

namespace bipos {

CharUnknownModel::CharUnknownModel()
    : probs_(kSymbols, 1.0 / kSymbols) {}

CharUnknownModel::CharUnknownModel(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.size() != kSymbols) throw Error("character model needs 96 probabilities");
  CheckDistribution(probs_);
  if (probs_.back() <= 0.0 || probs_.back() >= 1.0) {
    throw Error("end-of-word probability must lie in (0, 1)");
  }
}

CharUnknownModel CharUnknownModel::Train(const std::vector<std::string>& words) {
  std::vector<double> counts(kSymbols, 1.0);
  for (const auto& w : words) {
    bool ok = !w.empty();
    for (char c : w) ok = ok && InAlphabet(c);
    if (!ok) continue;
    for (char c : w) counts[c - kFirstChar] += 1.0;
    counts.back() += 1.0;
  }
  double total = 0.0;
  for (double c : counts) total += c;
  for (double& c : counts) c /= total;
  return CharUnknownModel(std::move(counts));
}

double CharUnknownModel::Prob(std::string_view word) const {
  if (word.empty()) throw Error("cannot spell an empty word");
  double p = probs_.back();
  for (char c : word) {
    if (!InAlphabet(c)) {
      throw Error("character code " + std::to_string(static_cast<unsigned char>(c)) +
                  " in '" + std::string(word) + "' is outside the spelling alphabet");
    }
    p *= probs_[c - kFirstChar];
  }
  return p;
}

double CharUnknownModel::NormalizedProb(std::string_view word) const {
  return Prob(word) / (1.0 - probs_.back());
}

}  // namespace bipos
