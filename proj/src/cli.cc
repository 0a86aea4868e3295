// cli.cc
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

#include "bipos/cli.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bipos/analysis.h"
#include "bipos/bipos_model.h"
#include "bipos/corpus.h"
#include "bipos/evaluation.h"
#include "bipos/generalized_model.h"
#include "bipos/model_io.h"
#include "bipos/simple_models.h"

namespace bipos {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string> kReports = {
    "impact-by-prev-tag", "following-tag", "unknown-impact", "components",
    "word-given-tag",     "zipf",          "rare-words"};

std::string Sha256File(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                             EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Collects the provenance written into every output file.
class RunContext {
 public:
  explicit RunContext(const RunConfig& config) : config_(config) {}

  void AddInput(const std::string& path) {
    if (!path.empty()) inputs_[path] = Sha256File(path);
  }

  json Metadata() const {
    json inputs = json::object();
    for (const auto& [p, h] : inputs_) inputs[p] = {{"sha256", h}};
    return {{"tool", "bipos"},
            {"version", kToolVersion},
            {"command", config_.command},
            {"config", config_.ToJson()},
            {"inputs", inputs},
            {"conventions",
             {{"sentence_start", "the first word of a sentence is predicted from the <s> context"},
              {"m2", "under m2 the first occurrence of a word outside the vocabulary is "
                     "scored as unknown and later occurrences as unseen"}}}};
  }

  fs::path OutPath(const std::string& name) const {
    fs::create_directories(config_.out);
    return fs::path(config_.out) / name;
  }

  void WriteJson(const std::string& name, json body) const {
    body["metadata"] = Metadata();
    WriteText(name, body.dump(1) + "\n");
  }

  void WriteCsv(const std::string& name, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) const {
    std::ostringstream os;
    os << "# bipos " << kToolVersion << ' ' << config_.command << '\n';
    os << "# config: " << config_.ToJson().dump() << '\n';
    for (const auto& [p, h] : inputs_) os << "# input: " << p << " sha256=" << h << '\n';
    auto line = [&os](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        os << (i ? "," : "") << CsvField(fields[i]);
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    WriteText(name, os.str());
  }

  void WriteText(const std::string& name, const std::string& text) const {
    const fs::path path = OutPath(name);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
  }

 private:
  const RunConfig& config_;
  std::map<std::string, std::string> inputs_;
};

TagMap RequireTagMap(const std::string& path) {
  if (path.empty()) throw Error("a tag map is required (--tagmap)");
  return TagMap::Load(path);
}

std::optional<Regime> RegimeOverride(const RunConfig& c) {
  if (c.regime.empty()) return std::nullopt;
  return ParseRegime(c.regime);
}

double ParseLambda(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size()) throw Error("cannot parse lambda '" + s + "'");
  return v;
}

TaggedCorpus TrainingText(const RunConfig& c, RunContext& ctx, ReadStats* stats) {
  if (c.corpus.empty()) throw Error("a training corpus is required (--corpus)");
  const TagMap map = RequireTagMap(c.tagmap);
  ctx.AddInput(c.corpus);
  ctx.AddInput(c.tagmap);
  TaggedCorpus corpus = ReadLobFile(c.corpus, map, stats);
  if (c.n_train == 0) return corpus;
  return SplitCorpus(corpus, c.n_train).first;
}

TaggedCorpus TestText(const RunConfig& c, RunContext& ctx) {
  if (!c.test.empty()) {
    const std::string& mpath = c.test_tagmap.empty() ? c.tagmap : c.test_tagmap;
    const TagMap map = RequireTagMap(mpath);
    ctx.AddInput(c.test);
    ctx.AddInput(mpath);
    return ReadLobFile(c.test, map);
  }
  if (c.corpus.empty() || c.n_train == 0) {
    throw Error("a test text is required (--test, or --corpus with --n-train)");
  }
  const TagMap map = RequireTagMap(c.tagmap);
  ctx.AddInput(c.corpus);
  ctx.AddInput(c.tagmap);
  TaggedCorpus rest = SplitCorpus(ReadLobFile(c.corpus, map), c.n_train).second;
  if (rest.empty()) throw Error("no tokens remain after the training portion");
  return rest;
}

const BiposModel* ClassBase(const LanguageModel& m) {
  if (const auto* g = dynamic_cast<const GeneralizedModel*>(&m)) return &g->base();
  return dynamic_cast<const BiposModel*>(&m);
}

void CheckTagsets(const LanguageModel& m, const TaggedCorpus& test) {
  const BiposModel* base = ClassBase(m);
  if (base && base->tagset().name() != test.tagset().name()) {
    throw Error("model tagset '" + base->tagset().name() + "' does not match test tagset '" +
                test.tagset().name() + "'");
  }
}

LoadedModel LoadForEval(const RunConfig& c, RunContext& ctx) {
  if (c.model.empty()) throw Error("a model file is required (--model)");
  ctx.AddInput(c.model);
  LoadedModel loaded = LoadModel(c.model, RegimeOverride(c));
  if (!c.lambda.empty()) {
    auto* g = dynamic_cast<GeneralizedModel*>(loaded.model.get());
    if (!g) throw Error("--lambda applies only to generalized models");
    g->set_lambda(ParseLambda(c.lambda));
  }
  return loaded;
}

GeneralizedOptions GeneralizedOptionsOf(const RunConfig& c) {
  GeneralizedOptions o;
  o.lambda = c.lambda.empty() ? 0.5 : ParseLambda(c.lambda);
  o.condition_tags = c.condition_tags;
  o.specific_tags = SplitList(c.specific_tags);
  return o;
}

TrainOptions TrainOptionsOf(const RunConfig& c) {
  TrainOptions o;
  o.c2 = c.c2;
  o.d1 = c.d1;
  o.regime = c.regime.empty() ? Regime::kM1 : ParseRegime(c.regime);
  return o;
}

void PrintResult(const EvalResult& r, std::ostream& out) {
  out << "words      " << r.n << "  (seen " << r.n_seen << ", unseen " << r.n_unseen
      << ", unknown " << r.s << " / " << r.r << " distinct)\n";
  out << "regime     " << r.regime << '\n';
  out << "LTP        " << Num(r.ltp) << "  (known " << Num(r.ltp_known) << ", unseen "
      << Num(r.ltp_unseen) << ", unknown " << Num(r.ltp_unknown) << ")\n";
  out << "LP         " << Num(r.lp) << '\n';
  out << "PP         " << Num(r.pp) << '\n';
  out << "ALTP       " << Num(r.altp) << '\n';
  out << "APP        " << Num(r.app) << '\n';
  if (r.tp) out << "TP         " << Num(*r.tp) << '\n';
}

std::vector<std::vector<std::string>> RecordRows(const EvalResult& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& rec : r.records) {
    rows.push_back({std::to_string(rec.index), rec.surface,
                    std::string(WordClassName(rec.word_class)), rec.prev_tag,
                    rec.assigned_tag, rec.gold_tag, rec.variable_value, Num(rec.probability),
                    Num(rec.log2p)});
  }
  return rows;
}

const std::vector<std::string> kRecordHeader = {
    "index", "word", "class", "prev_tag", "assigned_tag", "gold_tag", "variable", "p", "log2p"};

}  // namespace

json RunConfig::ToJson() const {
  return {{"command", command},         {"config", config},
          {"corpus", corpus},           {"test", test},
          {"tagmap", tagmap},           {"test_tagmap", test_tagmap},
          {"n_train", n_train},         {"model", model},
          {"kind", kind},               {"order", order},
          {"v1", v1},                   {"c2", c2},
          {"d1", d1},                   {"regime", regime},
          {"variable", variable},       {"lambda", lambda},
          {"condition_tags", condition_tags}, {"specific_tags", specific_tags},
          {"fixed_vocab", fixed_vocab}, {"vocab", vocab},
          {"sizes", sizes},             {"reports", reports},
          {"prev_tag", prev_tag},       {"rare_tag", rare_tag},
          {"seed", seed},               {"out", out},
          {"format", format},           {"threads", threads}};
}

int CmdTrain(const RunConfig& c, std::ostream& out) {
  RunContext ctx(c);
  ReadStats stats;
  const TaggedCorpus train = TrainingText(c, ctx, &stats);
  std::shared_ptr<const LanguageModel> model;
  json summary = {{"tokens", train.size()}, {"skipped_items", stats.skipped_items}};

  if (c.kind == "bipos") {
    Vocabulary vocab;
    if (c.vocab.empty()) {
      vocab = BuildVocabulary(train);
    } else {
      ctx.AddInput(c.vocab);
      vocab = ReadWordList(c.vocab);
    }
    auto base = std::make_shared<const BiposModel>(
        BiposModel::Train(train, vocab, TrainOptionsOf(c)));
    json per_tag = json::object();
    for (std::size_t g = 0; g < base->num_tags(); ++g) {
      per_tag[base->tagset().tags()[g]] = base->tag_unknown(TagId(g));
    }
    summary.update({{"vocabulary", base->vocabulary().size()},
                    {"tags", base->num_tags()},
                    {"c1", base->c1()},
                    {"c2", base->c2()},
                    {"d1", base->d1()},
                    {"d2", base->d2()},
                    {"d2_turing", base->params().d2_turing},
                    {"unseen", base->unseen_count()},
                    {"tag_unknown", per_tag}});
    out << "tokens     " << train.size() << '\n'
        << "vocabulary " << base->vocabulary().size() << "  (unseen " << base->unseen_count()
        << ")\n"
        << "tags       " << base->num_tags() << '\n'
        << "c1, c2     " << Num(base->c1()) << ", " << Num(base->c2()) << '\n'
        << "d1, d2     " << Num(base->d1()) << ", " << Num(base->d2()) << '\n';
    if (!c.variable.empty()) {
      model = std::make_shared<GeneralizedModel>(GeneralizedModel::Train(
          base, train, ParseVariableSpec(c.variable, c.seed), GeneralizedOptionsOf(c)));
      out << "variable   " << c.variable << '\n';
    } else {
      model = base;
    }
  } else if (c.kind == "uniform") {
    model = std::make_shared<UniformModel>(BuildVocabulary(train));
  } else if (c.kind == "unigram" || c.kind == "ngram") {
    model = std::make_shared<NgramModel>(
        NgramModel::Train(train, c.kind == "unigram" ? 1 : c.order, c.v1));
  } else {
    throw Error("unknown model kind '" + c.kind + "'");
  }
  summary["kind"] = model->kind();
  const fs::path path = ctx.OutPath("model.json");
  SaveModel(*model, path, ctx.Metadata());
  ctx.WriteJson("train_summary.json", {{"summary", summary}});
  out << "model      " << path.string() << '\n';
  return 0;
}

int CmdEval(const RunConfig& c, std::ostream& out) {
  RunContext ctx(c);
  const LoadedModel loaded = LoadForEval(c, ctx);
  const TaggedCorpus test = TestText(c, ctx);
  CheckTagsets(*loaded.model, test);
  const EvalResult r = Evaluate(*loaded.model, test);
  ctx.WriteJson("eval.json", {{"result", ToJson(r)}});
  ctx.WriteCsv("eval_records.csv", kRecordHeader, RecordRows(r));
  PrintResult(r, out);
  return 0;
}

int CmdAnalyze(const RunConfig& c, std::ostream& out) {
  RunContext ctx(c);
  const LoadedModel loaded = LoadForEval(c, ctx);
  const TaggedCorpus test = TestText(c, ctx);
  CheckTagsets(*loaded.model, test);
  const EvalResult r = Evaluate(*loaded.model, test);
  const BiposModel* base = ClassBase(*loaded.model);

  std::vector<std::string> wanted = c.reports == "all" ? kReports : SplitList(c.reports);
  for (const auto& w : wanted) {
    if (std::find(kReports.begin(), kReports.end(), w) == kReports.end()) {
      throw Error("unknown report '" + w + "'");
    }
  }
  const bool json_out = c.format == "json";
  if (!json_out && c.format != "csv") throw Error("format must be csv or json");
  auto has = [&](const std::string& name) {
    return std::find(wanted.begin(), wanted.end(), name) != wanted.end();
  };
  auto emit = [&](const std::string& stem, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
    if (json_out) {
      json arr = json::array();
      for (const auto& row : rows) {
        json o = json::object();
        for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = row[i];
        arr.push_back(o);
      }
      ctx.WriteJson(stem + ".json", {{"report", stem}, {"rows", arr}});
    } else {
      ctx.WriteCsv(stem + ".csv", header, rows);
    }
    out << "wrote " << stem << (json_out ? ".json" : ".csv") << '\n';
  };

  const ImpactReport by_prev = Impact(r.records, ImpactKey::kPrevTag);
  std::vector<std::string> prev_tags;
  for (const auto& row : by_prev.rows) prev_tags.push_back(row.key);

  if (has("impact-by-prev-tag")) {
    std::vector<std::vector<std::string>> rows;
    if (base) {
      const auto detail = ContextDetail(r.records, base->tagset(), prev_tags);
      for (std::size_t i = 0; i < detail.size(); ++i) {
        const auto& d = detail[i];
        rows.push_back({d.tag, std::to_string(d.n), Num(d.ltp), Num(d.avg),
                        Num(by_prev.rows[i].fraction), Num(d.f_tag), Num(d.f_word),
                        Num(d.f_rest)});
      }
    } else {
      for (const auto& row : by_prev.rows) {
        rows.push_back({row.key, std::to_string(row.n), Num(row.ltp), Num(row.avg),
                        Num(row.fraction), "", "", ""});
      }
    }
    emit("impact_prev_tag", {"tag", "n", "ltp", "avg", "f", "f_tag", "f_word", "f_rest"},
         rows);
  }
  if (has("following-tag")) {
    std::string prev = c.prev_tag;
    if (prev.empty() && !by_prev.rows.empty()) prev = by_prev.rows.front().key;
    const ImpactReport following = FollowingTagImpact(r.records, prev);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : following.rows) {
      rows.push_back({prev, row.key, std::to_string(row.n), Num(row.ltp), Num(row.avg),
                      Num(row.fraction)});
    }
    emit("following_tag", {"prev_tag", "tag", "n", "ltp", "avg", "f"}, rows);
  }
  if (has("unknown-impact")) {
    const UnknownImpact u = UnknownImpactOf(r.records);
    emit("unknown_impact", {"regime", "n", "s", "ltp", "ltp_unknown", "fraction"},
         {{r.regime, std::to_string(u.n), std::to_string(u.s), Num(u.ltp),
           Num(u.ltp_unknown), Num(u.fraction)}});
  }
  if (has("components")) {
    std::vector<std::vector<std::string>> rows;
    auto add = [&](const std::string& group, const ComponentReport& cr) {
      rows.push_back({group, std::to_string(cr.n), Num(cr.ltp), Num(cr.shares.unknown),
                      Num(cr.shares.fact), Num(cr.shares.word), Num(cr.shares.pos)});
    };
    add("all", ComponentReportOf(r.records));
    for (const auto& tag : prev_tags) {
      add("prev=" + tag,
          ComponentReportOf(r.records, [&tag](const EvalRecord& e) { return e.prev_tag == tag; }));
    }
    emit("components", {"group", "n", "ltp", "unknown", "fact", "word", "pos"}, rows);
  }
  if (has("word-given-tag")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& w : WordGivenTag(r.records)) {
      rows.push_back({w.tag, std::to_string(w.n), Num(w.ltp), Num(w.avg), Num(w.fraction),
                      Num(w.fraction_total)});
    }
    emit("word_given_tag", {"tag", "n", "ltp", "avg", "f", "f_total"}, rows);
  }
  if (has("zipf")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [x, y] : ZipfCurve(by_prev)) rows.push_back({Num(x), Num(y)});
    emit("zipf", {"key_fraction", "ltp_fraction"}, rows);
  }
  if (has("rare-words")) {
    if (!base) throw Error("the rare-words report needs a class-based model");
    std::string tag = c.rare_tag;
    if (tag.empty()) {
      std::size_t best = 0;
      for (const auto& [g, row] : base->params().emissions.rows()) {
        if (row.counts.size() > best) {
          best = row.counts.size();
          tag = base->tagset().Name(g);
        }
      }
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [x, f] : RareWordCurve(*base, tag)) {
      rows.push_back({tag, std::to_string(x), Num(f)});
    }
    emit("rare_words", {"tag", "x", "fraction"}, rows);
  }
  return 0;
}

int CmdSweep(const RunConfig& c, std::ostream& out) {
  RunContext ctx(c);
  const TaggedCorpus train = TrainingText(c, ctx, nullptr);
  const TaggedCorpus test = TestText(c, ctx);
  std::vector<std::size_t> sizes;
  for (const auto& s : SplitList(c.sizes)) sizes.push_back(std::stoul(s));
  if (sizes.empty()) {
    for (int i = 1; i <= 10; ++i) sizes.push_back(std::max<std::size_t>(1, train.size() * i / 10));
  }
  SweepConfig sc;
  sc.train = TrainOptionsOf(c);
  sc.fixed_vocab = c.fixed_vocab;
  sc.threads = c.threads;
  const auto rows = SweepTrainingSize(train, test, sizes, sc);
  std::vector<std::vector<std::string>> table;
  json arr = json::array();
  out << "size\tLTP\tLTP_unknown\tPP\tAPP\n";
  for (const auto& r : rows) {
    table.push_back({std::to_string(r.size), std::to_string(r.n), std::to_string(r.s),
                     std::to_string(r.r), Num(r.ltp), Num(r.ltp_known), Num(r.ltp_unseen),
                     Num(r.ltp_unknown), Num(r.pp), Num(r.altp), Num(r.app)});
    out << r.size << '\t' << Num(r.ltp) << '\t' << Num(r.ltp_unknown) << '\t' << Num(r.pp)
        << '\t' << Num(r.app) << '\n';
  }
  ctx.WriteCsv("sweep.csv",
               {"size", "n", "s", "r", "ltp", "ltp_known", "ltp_unseen", "ltp_unknown", "pp",
                "altp", "app"},
               table);
  return 0;
}

int CmdLambdaSearch(const RunConfig& c, std::ostream& out) {
  RunContext ctx(c);
  std::shared_ptr<GeneralizedModel> model;
  if (!c.model.empty()) {
    RunConfig no_lambda = c;
    no_lambda.lambda.clear();
    LoadedModel loaded = LoadForEval(no_lambda, ctx);
    model = std::dynamic_pointer_cast<GeneralizedModel>(loaded.model);
    if (!model) throw Error("lambda-search needs a generalized model (trained with --variable)");
  } else {
    if (c.variable.empty()) throw Error("lambda-search needs --variable or a generalized --model");
    const TaggedCorpus train = TrainingText(c, ctx, nullptr);
    auto base = std::make_shared<const BiposModel>(
        BiposModel::Train(train, BuildVocabulary(train), TrainOptionsOf(c)));
    GeneralizedOptions opts = GeneralizedOptionsOf(c);
    opts.lambda = 1.0;
    model = std::make_shared<GeneralizedModel>(GeneralizedModel::Train(
        base, train, ParseVariableSpec(c.variable, c.seed), opts));
  }
  const TaggedCorpus test = TestText(c, ctx);
  CheckTagsets(*model, test);
  const LambdaSearchResult r = GridSearchLambda(*model, test);
  std::vector<std::vector<std::string>> rows;
  for (const auto& [lambda, ltp] : r.grid) rows.push_back({Num(lambda), Num(ltp)});
  ctx.WriteCsv("lambda_grid.csv", {"lambda", "ltp"}, rows);
  ctx.WriteJson("lambda_search.json", {{"result", ToJson(r)}});
  out << "variable   " << FormatVariableSpec(model->params().variable) << '\n'
      << "lambda     " << Num(r.lambda) << '\n'
      << "LTP        " << Num(r.ltp) << "  (base " << Num(r.base_ltp) << ")\n"
      << "subset     n=" << r.best_subset.n << "  PP " << Num(r.base_subset.pp) << " -> "
      << Num(r.best_subset.pp) << '\n';
  return 0;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Part-of-speech language models and perplexity diagnostics", "bipos"};
  app.set_config("--config", "", "key=value configuration file; flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  RunConfig c;
  app.add_option("--corpus", c.corpus, "LOB-layout training corpus");
  app.add_option("--test", c.test, "LOB-layout test text (default: corpus after --n-train)");
  app.add_option("--tagmap", c.tagmap, "tag map applied to the corpus");
  app.add_option("--test-tagmap,--test_tagmap", c.test_tagmap, "tag map for --test");
  app.add_option("--n-train,--n_train", c.n_train, "training tokens taken from the corpus");
  app.add_option("--model", c.model, "model file");
  app.add_option("--kind", c.kind, "model kind: bipos, uniform, unigram or ngram");
  app.add_option("--order", c.order, "n-gram order");
  app.add_option("--v1", c.v1, "n-gram additive smoothing constant");
  app.add_option("--c2", c.c2, "tag smoothing constant");
  app.add_option("--d1", c.d1, "probability of each unseen vocabulary word");
  app.add_option("--regime", c.regime, "unknown-word regime: m1, m2, m3, m4 or new");
  app.add_option("--variable", c.variable, "context variable: singular, during, prevword, random:P");
  app.add_option("--lambda", c.lambda, "interpolation weight of the general distribution");
  app.add_flag("--condition-tags,--condition_tags", c.condition_tags,
               "also estimate the tag factor from the variable");
  app.add_option("--specific-tags,--specific_tags", c.specific_tags,
                 "comma-separated tags given specific word estimates");
  app.add_flag("--fixed-vocab,--fixed_vocab", c.fixed_vocab,
               "fix the sweep vocabulary on the whole training text");
  app.add_option("--vocab", c.vocab, "word list fixing the vocabulary");
  app.add_option("--sizes", c.sizes, "comma-separated sweep training sizes");
  app.add_option("--reports", c.reports, "comma-separated analyze reports, or all");
  app.add_option("--prev-tag,--prev_tag", c.prev_tag, "context tag for following-tag");
  app.add_option("--rare-tag,--rare_tag", c.rare_tag, "tag for rare-words");
  app.add_option("--seed", c.seed, "seed for random variables");
  app.add_option("--out", c.out, "output directory");
  app.add_option("--format", c.format, "analyze output format: csv or json");
  app.add_option("--threads", c.threads, "worker threads for sweep (0 = all cores)");

  app.add_subcommand("train", "train a model and write model.json");
  app.add_subcommand("eval", "score a test text");
  app.add_subcommand("analyze", "write perplexity diagnostics");
  app.add_subcommand("sweep", "score models trained on growing prefixes");
  app.add_subcommand("lambda-search", "choose lambda for a generalized model");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  c.command = app.get_subcommands().front()->get_name();
  if (auto* opt = app.get_config_ptr(); opt && opt->count() > 0) c.config = opt->as<std::string>();

  try {
    if (c.command == "train") return CmdTrain(c, out);
    if (c.command == "eval") return CmdEval(c, out);
    if (c.command == "analyze") return CmdAnalyze(c, out);
    if (c.command == "sweep") return CmdSweep(c, out);
    return CmdLambdaSearch(c, out);
  } catch (const std::exception& e) {
    err << "bipos " << c.command << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bipos
