// analysis.cc
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

#include "bipos/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace bipos {
namespace {

double Ratio(double part, double whole) { return whole != 0.0 ? part / whole : 0.0; }

template <std::size_t K>
Decomposition<K> Decompose(std::span<const std::array<double, K>> terms) {
  if (terms.empty()) throw Error("decomposition needs at least one term");
  Decomposition<K> d;
  std::vector<double> products;
  for (const auto& t : terms) {
    double prod = 1.0;
    for (double f : t) {
      if (!(f > 0.0 && f <= 1.0)) throw Error("decomposition factors must lie in (0, 1]");
      prod *= f;
    }
    products.push_back(prod);
    d.s += prod;
  }
  if (!(d.s > 0.0 && d.s < 1.0)) {
    throw Error("decomposition needs a sum strictly between 0 and 1");
  }
  d.shares.fill(0.0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double weight = products[i] / d.s;
    const double total = std::log2(products[i]);
    for (std::size_t k = 0; k < K; ++k) {
      // A product of one needs every factor to be one; split it evenly.
      d.shares[k] += weight * (total == 0.0 ? 1.0 / K : std::log2(terms[i][k]) / total);
    }
  }
  for (std::size_t k = 0; k < K; ++k) d.factors[k] = std::pow(d.s, d.shares[k]);
  return d;
}

std::string KeyOf(const EvalRecord& rec, ImpactKey key) {
  switch (key) {
    case ImpactKey::kPrevTag: return rec.prev_tag;
    case ImpactKey::kAssignedTag: return rec.assigned_tag;
    case ImpactKey::kGoldTag: return rec.gold_tag;
    case ImpactKey::kWordClass: return std::string(WordClassName(rec.word_class));
    case ImpactKey::kWord: return rec.surface;
    case ImpactKey::kVariable: return rec.variable_value;
  }
  return {};
}

}  // namespace

std::string_view ImpactKeyName(ImpactKey key) {
  switch (key) {
    case ImpactKey::kPrevTag: return "prev_tag";
    case ImpactKey::kAssignedTag: return "assigned_tag";
    case ImpactKey::kGoldTag: return "gold_tag";
    case ImpactKey::kWordClass: return "word_class";
    case ImpactKey::kWord: return "word";
    case ImpactKey::kVariable: return "variable";
  }
  return "";
}

ImpactReport ImpactBy(std::span<const EvalRecord> records, std::string partition,
                      const RecordKey& key, const RecordFilter& filter) {
  ImpactReport report;
  report.partition = std::move(partition);
  std::map<std::string, ImpactRow> rows;
  for (const auto& rec : records) {
    if (filter && !filter(rec)) continue;
    ImpactRow& row = rows[key(rec)];
    ++row.n;
    row.ltp += rec.log2p;
    ++report.n;
    report.ltp += rec.log2p;
  }
  for (auto& [k, row] : rows) {
    row.key = k;
    row.avg = row.ltp / static_cast<double>(row.n);
    row.fraction = Ratio(row.ltp, report.ltp);
    report.rows.push_back(row);
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ImpactRow& a, const ImpactRow& b) {
                     if (a.fraction != b.fraction) return a.fraction > b.fraction;
                     return a.key < b.key;
                   });
  return report;
}

ImpactReport Impact(std::span<const EvalRecord> records, ImpactKey key,
                    const RecordFilter& filter) {
  return ImpactBy(records, std::string(ImpactKeyName(key)),
                  [key](const EvalRecord& r) { return KeyOf(r, key); }, filter);
}

ImpactReport FollowingTagImpact(std::span<const EvalRecord> records,
                                std::string_view prev_tag) {
  const std::string prev(prev_tag);
  return ImpactBy(records, "assigned_tag after " + prev,
                  [](const EvalRecord& r) { return r.assigned_tag; },
                  [prev](const EvalRecord& r) { return r.prev_tag == prev; });
}

Decomposition<2> DecomposeTwo(std::span<const std::array<double, 2>> terms) {
  return Decompose<2>(terms);
}

Decomposition<3> DecomposeThree(std::span<const std::array<double, 3>> terms) {
  return Decompose<3>(terms);
}

std::optional<ComponentShares> RecordComponentShares(const EvalRecord& rec) {
  if (rec.probability >= 1.0) return std::nullopt;
  ComponentShares s;
  if (rec.word_class != WordClass::kSeen) {
    s.unknown = 1.0;
    return s;
  }
  if (rec.terms.empty()) {
    s.word = 1.0;
    return s;
  }
  std::vector<std::array<double, 3>> terms;
  for (const Term& t : rec.terms) {
    if (t.value() > 0.0) terms.push_back({t.scale, t.tag_factor, t.word_factor});
  }
  const Decomposition<3> d = DecomposeThree(terms);
  s.fact = d.shares[0];
  s.pos = d.shares[1];
  s.word = d.shares[2];
  return s;
}

ComponentReport ComponentReportOf(std::span<const EvalRecord> records,
                                  const RecordFilter& filter) {
  ComponentReport report;
  ComponentShares ltp;
  for (const auto& rec : records) {
    if (filter && !filter(rec)) continue;
    const auto shares = RecordComponentShares(rec);
    if (!shares) continue;
    ++report.n;
    report.ltp += rec.log2p;
    ltp.unknown += shares->unknown * rec.log2p;
    ltp.fact += shares->fact * rec.log2p;
    ltp.word += shares->word * rec.log2p;
    ltp.pos += shares->pos * rec.log2p;
  }
  report.shares.unknown = Ratio(ltp.unknown, report.ltp);
  report.shares.fact = Ratio(ltp.fact, report.ltp);
  report.shares.word = Ratio(ltp.word, report.ltp);
  report.shares.pos = Ratio(ltp.pos, report.ltp);
  return report;
}

std::vector<ContextDetailRow> ContextDetail(std::span<const EvalRecord> records,
                                            const Tagset& tagset,
                                            std::span<const std::string> tags) {
  std::vector<ContextDetailRow> rows;
  for (const auto& tag : tags) {
    if (tag != tagset.Name(kBeginTag)) tagset.Id(tag);
    ContextDetailRow row;
    row.tag = tag;
    double tag_ltp = 0.0, word_ltp = 0.0;
    for (const auto& rec : records) {
      if (rec.prev_tag != tag) continue;
      ++row.n;
      row.ltp += rec.log2p;
      if (const auto s = RecordComponentShares(rec)) {
        tag_ltp += s->pos * rec.log2p;
        word_ltp += s->word * rec.log2p;
      }
    }
    row.avg = row.n ? row.ltp / static_cast<double>(row.n) : 0.0;
    row.f_tag = Ratio(tag_ltp, row.ltp);
    row.f_word = Ratio(word_ltp, row.ltp);
    row.f_rest = row.n ? 1.0 - row.f_tag - row.f_word : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::vector<WordGivenTagRow> WordGivenTag(std::span<const EvalRecord> records) {
  std::map<std::string, WordGivenTagRow> by_tag;
  double total = 0.0, word_total = 0.0;
  for (const auto& rec : records) {
    total += rec.log2p;
    if (rec.word_class != WordClass::kSeen) continue;
    const auto s = RecordComponentShares(rec);
    WordGivenTagRow& row = by_tag[rec.assigned_tag];
    ++row.n;
    if (!s) continue;
    row.ltp += s->word * rec.log2p;
    word_total += s->word * rec.log2p;
  }
  std::vector<WordGivenTagRow> rows;
  for (auto& [tag, row] : by_tag) {
    row.tag = tag;
    row.avg = row.ltp / static_cast<double>(row.n);
    row.fraction = Ratio(row.ltp, word_total);
    row.fraction_total = Ratio(row.ltp, total);
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.fraction != b.fraction) return a.fraction > b.fraction;
    return a.tag < b.tag;
  });
  return rows;
}

UnknownImpact UnknownImpactOf(std::span<const EvalRecord> records) {
  UnknownImpact u;
  for (const auto& rec : records) {
    ++u.n;
    u.ltp += rec.log2p;
    if (rec.word_class == WordClass::kUnknown) {
      ++u.s;
      u.ltp_unknown += rec.log2p;
    }
  }
  u.fraction = Ratio(u.ltp_unknown, u.ltp);
  return u;
}

std::vector<std::pair<double, double>> ZipfCurve(const ImpactReport& report) {
  std::vector<std::pair<double, double>> curve = {{0.0, 0.0}};
  const double k = static_cast<double>(report.rows.size());
  double cum = 0.0;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    cum += report.rows[i].fraction;
    curve.emplace_back(static_cast<double>(i + 1) / k, cum);
  }
  return curve;
}

namespace {

std::vector<std::pair<int, double>> CurveFromCounts(const std::vector<std::uint64_t>& counts,
                                                    std::string_view tag, int max_x) {
  if (counts.empty()) {
    throw Error("no training words carry tag '" + std::string(tag) + "'");
  }
  std::vector<std::pair<int, double>> curve;
  for (int x = 1; x <= max_x; ++x) {
    std::size_t below = 0;
    for (auto c : counts) below += c < static_cast<std::uint64_t>(x) ? 1 : 0;
    curve.emplace_back(x, static_cast<double>(below) / static_cast<double>(counts.size()));
  }
  return curve;
}

}  // namespace

std::vector<std::pair<int, double>> RareWordCurve(const TaggedCorpus& train,
                                                  std::string_view tag, int max_x) {
  const TagId g = train.tagset().Id(tag);
  std::map<std::string, std::uint64_t> counts;
  for (const auto& tok : train.tokens()) {
    if (tok.tag == g) ++counts[tok.surface];
  }
  std::vector<std::uint64_t> values;
  for (const auto& [w, c] : counts) values.push_back(c);
  return CurveFromCounts(values, tag, max_x);
}

std::vector<std::pair<int, double>> RareWordCurve(const BiposModel& model,
                                                  std::string_view tag, int max_x) {
  const TagId g = model.tagset().Id(tag);
  std::vector<std::uint64_t> values;
  const auto& rows = model.params().emissions.rows();
  if (auto it = rows.find(g); it != rows.end()) {
    for (const auto& [w, c] : it->second.counts) values.push_back(c);
  }
  return CurveFromCounts(values, tag, max_x);
}

nlohmann::json ToJson(const ImpactReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"key", r.key}, {"n", r.n}, {"ltp", r.ltp}, {"avg", r.avg},
                    {"fraction", r.fraction}});
  }
  return {{"partition", report.partition}, {"n", report.n}, {"ltp", report.ltp},
          {"rows", rows}};
}

nlohmann::json ToJson(const ComponentReport& report) {
  return {{"n", report.n},
          {"ltp", report.ltp},
          {"unknown", report.shares.unknown},
          {"fact", report.shares.fact},
          {"word", report.shares.word},
          {"pos", report.shares.pos}};
}

}  // namespace bipos
