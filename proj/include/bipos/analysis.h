// analysis.h
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
// Perplexity diagnostics over evaluation records: which contexts, tags and
// words cost the most log probability, and how each word's probability
// splits between its factors.

#ifndef BIPOS_ANALYSIS_H_
#define BIPOS_ANALYSIS_H_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bipos/bipos_model.h"
#include "bipos/corpus.h"
#include "bipos/language_model.h"
#include "json.hpp"

namespace bipos {

using RecordFilter = std::function<bool(const EvalRecord&)>;
using RecordKey = std::function<std::string(const EvalRecord&)>;

struct ImpactRow {
  std::string key;
  std::size_t n = 0;
  double ltp = 0.0;
  double avg = 0.0;
  double fraction = 0.0;  // share of the report's LTP
};

struct ImpactReport {
  std::string partition;
  std::size_t n = 0;
  double ltp = 0.0;
  std::vector<ImpactRow> rows;  // by decreasing fraction, then key
};

enum class ImpactKey { kPrevTag, kAssignedTag, kGoldTag, kWordClass, kWord, kVariable };

std::string_view ImpactKeyName(ImpactKey key);

ImpactReport ImpactBy(std::span<const EvalRecord> records, std::string partition,
                      const RecordKey& key, const RecordFilter& filter = {});
ImpactReport Impact(std::span<const EvalRecord> records, ImpactKey key,
                    const RecordFilter& filter = {});
// Records whose previous tag is `prev_tag`, grouped by the tag assigned to
// the word itself.
ImpactReport FollowingTagImpact(std::span<const EvalRecord> records,
                                std::string_view prev_tag);

template <std::size_t K>
struct Decomposition {
  double s = 0.0;                // sum of the term products
  std::array<double, K> shares;  // exponents, summing to one
  std::array<double, K> factors; // s^share
};

// Splits S = sum_i prod_k f_ik into prod_k F_k with F_k = S^p_k, where
//   p_k = sum_i (prod_i / S) * log2 f_ik / log2 prod_i.
// Factors must lie in (0, 1] and S in (0, 1).
Decomposition<2> DecomposeTwo(std::span<const std::array<double, 2>> terms);
Decomposition<3> DecomposeThree(std::span<const std::array<double, 3>> terms);

// Fractions of log2 p assigned to each source of uncertainty.
struct ComponentShares {
  double unknown = 0.0;  // words outside the training text
  double fact = 0.0;     // the scale reserving unseen and unknown mass
  double word = 0.0;     // predicting the word given its tag
  double pos = 0.0;      // predicting the tag
};

// Nullopt for a record with probability one.
std::optional<ComponentShares> RecordComponentShares(const EvalRecord& rec);

struct ComponentReport {
  std::size_t n = 0;
  double ltp = 0.0;
  ComponentShares shares;
};

// LTP-weighted component shares over the records passing `filter`.
ComponentReport ComponentReportOf(std::span<const EvalRecord> records,
                                  const RecordFilter& filter = {});

struct ContextDetailRow {
  std::string tag;
  std::size_t n = 0;
  double ltp = 0.0;
  double avg = 0.0;
  double f_tag = 0.0;
  double f_word = 0.0;
  double f_rest = 0.0;
};

// For each named previous tag: how much of its LTP comes from predicting the
// tag and from predicting the word. Tags must belong to `tagset`.
std::vector<ContextDetailRow> ContextDetail(std::span<const EvalRecord> records,
                                            const Tagset& tagset,
                                            std::span<const std::string> tags);

struct WordGivenTagRow {
  std::string tag;
  std::size_t n = 0;
  double ltp = 0.0;  // word component of the LTP of words assigned this tag
  double avg = 0.0;
  double fraction = 0.0;        // of the total word component
  double fraction_total = 0.0;  // of the whole LTP
};

std::vector<WordGivenTagRow> WordGivenTag(std::span<const EvalRecord> records);

struct UnknownImpact {
  std::size_t n = 0;
  std::size_t s = 0;
  double ltp = 0.0;
  double ltp_unknown = 0.0;
  double fraction = 0.0;
};

UnknownImpact UnknownImpactOf(std::span<const EvalRecord> records);

// Cumulative LTP fraction against the fraction of keys, starting at (0, 0).
std::vector<std::pair<double, double>> ZipfCurve(const ImpactReport& report);

// For x = 1..max_x, the fraction of distinct words carrying `tag` that carry
// it fewer than x times.
std::vector<std::pair<int, double>> RareWordCurve(const TaggedCorpus& train,
                                                  std::string_view tag, int max_x = 20);
std::vector<std::pair<int, double>> RareWordCurve(const BiposModel& model,
                                                  std::string_view tag, int max_x = 20);

nlohmann::json ToJson(const ImpactReport& report);
nlohmann::json ToJson(const ComponentReport& report);

}  // namespace bipos

#endif  // BIPOS_ANALYSIS_H_
