// evaluation.cc
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

#include "bipos/evaluation.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <unordered_set>

namespace bipos {
namespace {

constexpr double kLambdaTieTolerance = 1e-9;

std::string RegimeOf(const LanguageModel& model) {
  if (const auto* g = dynamic_cast<const GeneralizedModel*>(&model)) {
    return std::string(RegimeName(g->base().regime()));
  }
  if (const auto* b = dynamic_cast<const BiposModel*>(&model)) {
    return std::string(RegimeName(b->regime()));
  }
  return "m1";
}

SweepRow RunSweepRow(const TaggedCorpus& train, const TaggedCorpus& test,
                     const Vocabulary* fixed, std::size_t size, const TrainOptions& options) {
  const TaggedCorpus prefix = train.Slice(0, size);
  const Vocabulary vocab = fixed ? *fixed : BuildVocabulary(prefix);
  const BiposModel model = BiposModel::Train(prefix, vocab, options);
  const EvalResult e = Evaluate(model, test);
  SweepRow row;
  row.size = size;
  row.n = e.n;
  row.s = e.s;
  row.r = e.r;
  row.ltp = e.ltp;
  row.ltp_known = e.ltp_known;
  row.ltp_unseen = e.ltp_unseen;
  row.ltp_unknown = e.ltp_unknown;
  row.pp = e.pp;
  row.altp = e.altp;
  row.app = e.app;
  return row;
}

}  // namespace

Adjusted Adjust(double ltp, std::size_t s, std::size_t r, std::size_t n) {
  if (n == 0) throw Error("cannot adjust an empty evaluation");
  if (r > s) throw Error("distinct unknown words exceed unknown occurrences");
  Adjusted a;
  a.altp = ltp - static_cast<double>(s) * std::log2(static_cast<double>(std::max<std::size_t>(r, 1)));
  a.app = std::exp2(-a.altp / static_cast<double>(n));
  return a;
}

EvalResult Evaluate(const LanguageModel& model, const TaggedCorpus& test) {
  if (test.empty()) throw Error("cannot evaluate on an empty text");
  EvalResult res;
  res.model_kind = model.kind();
  res.regime = RegimeOf(model);
  res.n = test.size();
  res.records.reserve(test.size());
  auto stream = model.NewStream(test);
  std::unordered_set<std::string> unknown_types;
  double tp = 1.0;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const Token& tok = test[i];
    EvalRecord rec = stream->Next(tok, test.IsSentenceStart(i));
    if (!(rec.probability > 0.0)) {
      throw Error("model assigns zero probability to '" + tok.surface + "' at position " +
                  std::to_string(i));
    }
    rec.index = i;
    rec.gold_tag = test.tagset().Name(tok.tag);
    rec.log2p = std::log2(rec.probability);
    res.ltp += rec.log2p;
    tp *= rec.probability;
    switch (rec.word_class) {
      case WordClass::kSeen:
        res.ltp_known += rec.log2p;
        ++res.n_seen;
        break;
      case WordClass::kUnseen:
        res.ltp_unseen += rec.log2p;
        ++res.n_unseen;
        break;
      case WordClass::kUnknown:
        res.ltp_unknown += rec.log2p;
        ++res.s;
        unknown_types.insert(rec.surface);
        break;
    }
    res.records.push_back(std::move(rec));
  }
  res.r = unknown_types.size();
  const double n = static_cast<double>(res.n);
  res.lp = -res.ltp / n;
  res.pp = std::exp2(res.lp);
  const Adjusted a = Adjust(res.ltp, res.s, res.r, res.n);
  res.altp = a.altp;
  res.app = a.app;
  if (res.n <= kMaxTotalProbabilityWords) res.tp = tp;
  return res;
}

std::vector<SweepRow> SweepTrainingSize(const TaggedCorpus& train, const TaggedCorpus& test,
                                        std::span<const std::size_t> sizes,
                                        const SweepConfig& config) {
  for (std::size_t size : sizes) {
    if (size == 0 || size > train.size()) {
      throw Error("sweep size " + std::to_string(size) + " is outside 1.." +
                  std::to_string(train.size()));
    }
  }
  std::optional<Vocabulary> fixed;
  if (config.fixed_vocab) fixed = BuildVocabulary(train);
  const Vocabulary* fixed_ptr = fixed ? &*fixed : nullptr;

  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  std::vector<SweepRow> rows(sizes.size());
  for (std::size_t begin = 0; begin < sizes.size(); begin += workers) {
    const std::size_t end = std::min(sizes.size(), begin + workers);
    std::vector<std::future<SweepRow>> jobs;
    for (std::size_t i = begin; i < end; ++i) {
      jobs.push_back(std::async(std::launch::async, RunSweepRow, std::cref(train),
                                std::cref(test), fixed_ptr, sizes[i], config.train));
    }
    for (std::size_t i = begin; i < end; ++i) rows[i] = jobs[i - begin].get();
  }
  return rows;
}

SubsetStats SpecificSubset(const EvalResult& result) {
  SubsetStats s;
  for (const auto& rec : result.records) {
    if (rec.variable_value.empty() || rec.variable_value == kGeneral) continue;
    ++s.n;
    s.ltp += rec.log2p;
  }
  s.pp = s.n ? std::exp2(-s.ltp / static_cast<double>(s.n)) : 0.0;
  return s;
}

std::vector<double> DefaultLambdaGrid() {
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);
  return grid;
}

LambdaSearchResult GridSearchLambda(const GeneralizedModel& model, const TaggedCorpus& test,
                                    std::span<const double> grid) {
  std::vector<double> values(grid.begin(), grid.end());
  if (values.empty()) values = DefaultLambdaGrid();
  std::sort(values.begin(), values.end());

  LambdaSearchResult out;
  GeneralizedModel general = model;
  general.set_lambda(1.0);
  const EvalResult base = Evaluate(general, test);
  out.base_ltp = base.ltp;
  out.base_subset = SpecificSubset(base);

  bool have_best = false;
  for (double lambda : values) {
    GeneralizedModel candidate = model;
    candidate.set_lambda(lambda);
    EvalResult e = Evaluate(candidate, test);
    out.grid.emplace_back(lambda, e.ltp);
    const double margin = kLambdaTieTolerance * std::max(1.0, std::abs(out.ltp));
    if (!have_best || e.ltp > out.ltp + margin) {
      have_best = true;
      out.lambda = lambda;
      out.ltp = e.ltp;
      out.best = std::move(e);
    }
  }
  out.best_subset = SpecificSubset(out.best);
  return out;
}

nlohmann::json ToJson(const EvalResult& r, bool with_records) {
  nlohmann::json j = {{"model_kind", r.model_kind},
                      {"regime", r.regime},
                      {"n", r.n},
                      {"n_seen", r.n_seen},
                      {"n_unseen", r.n_unseen},
                      {"s", r.s},
                      {"r", r.r},
                      {"ltp", r.ltp},
                      {"lp", r.lp},
                      {"pp", r.pp},
                      {"ltp_known", r.ltp_known},
                      {"ltp_unseen", r.ltp_unseen},
                      {"ltp_unknown", r.ltp_unknown},
                      {"altp", r.altp},
                      {"app", r.app}};
  if (r.tp) j["tp"] = *r.tp;
  if (with_records) {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : r.records) {
      recs.push_back({{"index", rec.index},
                      {"word", rec.surface},
                      {"class", std::string(WordClassName(rec.word_class))},
                      {"prev_tag", rec.prev_tag},
                      {"assigned_tag", rec.assigned_tag},
                      {"gold_tag", rec.gold_tag},
                      {"variable", rec.variable_value},
                      {"p", rec.probability},
                      {"log2p", rec.log2p}});
    }
    j["records"] = std::move(recs);
  }
  return j;
}

nlohmann::json ToJson(const SweepRow& row) {
  return {{"size", row.size},       {"n", row.n},
          {"s", row.s},             {"r", row.r},
          {"ltp", row.ltp},         {"ltp_known", row.ltp_known},
          {"ltp_unseen", row.ltp_unseen}, {"ltp_unknown", row.ltp_unknown},
          {"pp", row.pp},           {"altp", row.altp},
          {"app", row.app}};
}

nlohmann::json ToJson(const LambdaSearchResult& r) {
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& [lambda, ltp] : r.grid) grid.push_back({{"lambda", lambda}, {"ltp", ltp}});
  auto subset = [](const SubsetStats& s) {
    return nlohmann::json{{"n", s.n}, {"ltp", s.ltp}, {"pp", s.pp}};
  };
  return {{"lambda", r.lambda},
          {"ltp", r.ltp},
          {"base_ltp", r.base_ltp},
          {"grid", grid},
          {"specific_subset_base", subset(r.base_subset)},
          {"specific_subset_best", subset(r.best_subset)},
          {"best", ToJson(r.best)}};
}

std::string_view WordClassName(WordClass c) {
  switch (c) {
    case WordClass::kSeen: return "seen";
    case WordClass::kUnseen: return "unseen";
    case WordClass::kUnknown: return "unknown";
  }
  return "seen";
}

}  // namespace bipos
