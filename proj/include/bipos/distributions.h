// distributions.h
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
//
// Frequency tables and conditional distributions over discrete events.
// All logarithms are base 2.

#ifndef BIPOS_DISTRIBUTIONS_H_
#define BIPOS_DISTRIBUTIONS_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bipos/types.h"

namespace bipos {

// Tolerance used when checking that a vector sums to one.
inline constexpr double kNormTolerance = 1e-9;

// Throws Error unless p is a probability vector.
void CheckDistribution(std::span<const double> p, double tol = kNormTolerance);

template <typename Context, typename Event>
class FreqTable {
 public:
  struct Row {
    std::map<Event, std::uint64_t> counts;
    std::uint64_t total = 0;
  };

  void Add(const Context& c, const Event& e, std::uint64_t n = 1) {
    Row& row = rows_[c];
    row.counts[e] += n;
    row.total += n;
    trials_ += n;
  }

  // Declares a context without observations.
  void AddContext(const Context& c) { rows_[c]; }

  std::uint64_t Count(const Context& c, const Event& e) const {
    auto r = rows_.find(c);
    if (r == rows_.end()) return 0;
    auto it = r->second.counts.find(e);
    return it == r->second.counts.end() ? 0 : it->second;
  }

  std::uint64_t Total(const Context& c) const {
    auto r = rows_.find(c);
    return r == rows_.end() ? 0 : r->second.total;
  }

  bool HasContext(const Context& c) const { return rows_.count(c) != 0; }
  std::uint64_t trials() const { return trials_; }
  const std::map<Context, Row>& rows() const { return rows_; }

  void Merge(const FreqTable& other) {
    for (const auto& [c, row] : other.rows_) {
      AddContext(c);
      for (const auto& [e, n] : row.counts) Add(c, e, n);
    }
  }

  bool operator==(const FreqTable& other) const {
    if (trials_ != other.trials_ || rows_.size() != other.rows_.size()) return false;
    auto a = rows_.begin();
    for (auto b = other.rows_.begin(); b != other.rows_.end(); ++a, ++b) {
      if (a->first != b->first || a->second.total != b->second.total ||
          a->second.counts != b->second.counts) {
        return false;
      }
    }
    return true;
  }

 private:
  std::map<Context, Row> rows_;
  std::uint64_t trials_ = 0;
};

template <typename Context, typename Event>
FreqTable<Context, Event> Count(std::span<const std::pair<Context, Event>> events) {
  FreqTable<Context, Event> table;
  for (const auto& [c, e] : events) table.Add(c, e);
  return table;
}

// P(event | context) over a declared event set.
template <typename Context, typename Event>
class CondDistribution {
 public:
  explicit CondDistribution(std::vector<Event> events) : events_(std::move(events)) {
    for (std::size_t i = 0; i < events_.size(); ++i) {
      if (!index_.emplace(events_[i], i).second) {
        throw Error("event set has a repeated event");
      }
    }
    if (events_.empty()) throw Error("event set is empty");
  }

  const std::vector<Event>& events() const { return events_; }
  const std::map<Context, std::vector<double>>& rows() const { return probs_; }

  void Set(const Context& c, std::vector<double> p) {
    if (p.size() != events_.size()) throw Error("distribution has the wrong size");
    CheckDistribution(p);
    probs_[c] = std::move(p);
  }

  bool HasContext(const Context& c) const { return probs_.count(c) != 0; }

  std::span<const double> Probs(const Context& c) const {
    auto it = probs_.find(c);
    if (it == probs_.end()) throw Error("context has no distribution");
    return it->second;
  }

  double Prob(const Context& c, const Event& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw Error("event is outside the event set");
    return Probs(c)[it->second];
  }

 private:
  std::vector<Event> events_;
  std::map<Event, std::size_t> index_;
  std::map<Context, std::vector<double>> probs_;
};

// Relative frequencies. Every observed event must belong to `event_set`; a
// context with zero total raises Error.
template <typename Context, typename Event>
CondDistribution<Context, Event> Mle(const FreqTable<Context, Event>& table,
                                     std::vector<Event> event_set) {
  CondDistribution<Context, Event> dist(std::move(event_set));
  std::map<Event, std::size_t> pos;
  for (std::size_t i = 0; i < dist.events().size(); ++i) pos[dist.events()[i]] = i;
  for (const auto& [c, row] : table.rows()) {
    if (row.total == 0) throw Error("cannot estimate a context with no observations");
    std::vector<double> p(dist.events().size(), 0.0);
    for (const auto& [e, n] : row.counts) {
      auto it = pos.find(e);
      if (it == pos.end()) throw Error("observed event is outside the event set");
      p[it->second] = static_cast<double>(n) / static_cast<double>(row.total);
    }
    dist.Set(c, std::move(p));
  }
  return dist;
}

// p' = v2 * p + v1 with v2 = 1 - |E| * v1. Requires 0 <= v1 < 1/|E|.
std::vector<double> SmoothAdditive(std::span<const double> p, double v1);

template <typename Context, typename Event>
CondDistribution<Context, Event> SmoothAdditive(
    const CondDistribution<Context, Event>& dist, double v1) {
  CondDistribution<Context, Event> out(dist.events());
  for (const auto& [c, p] : dist.rows()) out.Set(c, SmoothAdditive(p, v1));
  return out;
}

// lambda * p + (1 - lambda) * q.
std::vector<double> Interpolate(std::span<const double> p,
                                std::span<const double> q, double lambda);

// -sum p log2 p, with 0 log 0 = 0.
double Entropy(std::span<const double> p);

// sum post log2(post / prior). Infinite when post puts mass where prior has
// none.
double RelativeEntropy(std::span<const double> post, std::span<const double> prior);

}  // namespace bipos

#endif  // BIPOS_DISTRIBUTIONS_H_
