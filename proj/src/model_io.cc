// model_io.cc
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

#include "bipos/model_io.h"

#include <fstream>
#include <sstream>

#include "bipos/generalized_model.h"
#include "bipos/simple_models.h"

namespace bipos {
namespace {

using nlohmann::json;

json VocabToJson(const Vocabulary& v) {
  return {{"source", v.source()}, {"token_count", v.token_count()}, {"words", v.words()}};
}

Vocabulary VocabFromJson(const json& j) {
  Vocabulary v(j.at("source").get<std::string>());
  for (const auto& w : j.at("words")) v.Add(w.get<std::string>());
  if (v.size() != j.at("words").size()) throw Error("model vocabulary repeats a word");
  v.set_token_count(j.at("token_count").get<std::size_t>());
  return v;
}

json BiposToJson(const BiposModel& m) {
  const BiposParams& p = m.params();
  json trans = json::array();
  for (const auto& [ctx, row] : p.transitions.rows()) {
    const long long c = ctx == kBeginTag ? -1 : static_cast<long long>(Index(ctx));
    for (const auto& [g, n] : row.counts) trans.push_back({c, Index(g), n});
  }
  json emit = json::array();
  for (const auto& [g, row] : p.emissions.rows()) {
    for (const auto& [w, n] : row.counts) emit.push_back({Index(g), Index(w), n});
  }
  return {{"tagset", {{"name", p.tagset.name()}, {"tags", p.tagset.tags()}}},
          {"vocabulary", VocabToJson(p.vocabulary)},
          {"c2", p.c2},
          {"d1", p.d1},
          {"d2", p.d2},
          {"d2_turing", p.d2_turing},
          {"regime", std::string(RegimeName(p.regime))},
          {"tag_unknown", p.tag_unknown},
          {"char_model", p.char_model.probs()},
          {"transitions", trans},
          {"emissions", emit}};
}

BiposModel BiposFromJson(const json& j, std::optional<Regime> regime) {
  BiposParams p;
  p.tagset = Tagset(j.at("tagset").at("name").get<std::string>(),
                    j.at("tagset").at("tags").get<std::vector<std::string>>());
  p.vocabulary = VocabFromJson(j.at("vocabulary"));
  p.c2 = j.at("c2").get<double>();
  p.d1 = j.at("d1").get<double>();
  p.d2 = j.at("d2").get<double>();
  p.d2_turing = j.at("d2_turing").get<double>();
  p.regime = regime ? *regime : ParseRegime(j.at("regime").get<std::string>());
  p.tag_unknown = j.at("tag_unknown").get<std::vector<double>>();
  p.char_model = CharUnknownModel(j.at("char_model").get<std::vector<double>>());
  for (const auto& t : j.at("transitions")) {
    const long long c = t.at(0).get<long long>();
    const TagId ctx = c < 0 ? kBeginTag : TagId(static_cast<std::uint32_t>(c));
    p.transitions.Add(ctx, TagId(t.at(1).get<std::uint32_t>()), t.at(2).get<std::uint64_t>());
  }
  for (const auto& e : j.at("emissions")) {
    p.emissions.Add(TagId(e.at(0).get<std::uint32_t>()), WordId(e.at(1).get<std::uint32_t>()),
                    e.at(2).get<std::uint64_t>());
  }
  return BiposModel(std::move(p));
}

json GeneralizedToJson(const GeneralizedModel& m) {
  const GeneralizedParams& p = m.params();
  json words = json::array();
  for (const auto& [key, row] : p.specific_words.rows()) {
    for (const auto& [w, n] : row.counts) {
      words.push_back({key.first, Index(key.second), Index(w), n});
    }
  }
  json tags = json::array();
  for (const auto& [value, row] : p.specific_tag_counts.rows()) {
    for (const auto& [g, n] : row.counts) tags.push_back({value, Index(g), n});
  }
  return {{"variable", FormatVariableSpec(p.variable)},
          {"continuation_prefixes", p.variable.continuation_prefixes},
          {"lambda", p.options.lambda},
          {"condition_tags", p.options.condition_tags},
          {"specific_tags", p.options.specific_tags},
          {"specific_words", words},
          {"specific_tag_counts", tags}};
}

GeneralizedModel GeneralizedFromJson(std::shared_ptr<const BiposModel> base, const json& j) {
  GeneralizedParams p;
  p.variable = ParseVariableSpec(j.at("variable").get<std::string>());
  p.variable.continuation_prefixes =
      j.at("continuation_prefixes").get<std::vector<std::string>>();
  p.options.lambda = j.at("lambda").get<double>();
  p.options.condition_tags = j.at("condition_tags").get<bool>();
  p.options.specific_tags = j.at("specific_tags").get<std::vector<std::string>>();
  for (const auto& e : j.at("specific_words")) {
    p.specific_words.Add({e.at(0).get<std::string>(), TagId(e.at(1).get<std::uint32_t>())},
                         WordId(e.at(2).get<std::uint32_t>()), e.at(3).get<std::uint64_t>());
  }
  for (const auto& e : j.at("specific_tag_counts")) {
    p.specific_tag_counts.Add(e.at(0).get<std::string>(), TagId(e.at(1).get<std::uint32_t>()),
                              e.at(2).get<std::uint64_t>());
  }
  return GeneralizedModel(std::move(base), std::move(p));
}

json NgramToJson(const NgramModel& m) {
  const NgramParams& p = m.params();
  json counts = json::array();
  for (const auto& [h, row] : p.counts.rows()) {
    for (const auto& [w, n] : row.counts) counts.push_back({h, Index(w), n});
  }
  return {{"order", p.order}, {"d2", p.d2}, {"v1", p.v1},
          {"vocabulary", VocabToJson(p.vocabulary)}, {"counts", counts}};
}

NgramModel NgramFromJson(const json& j) {
  NgramParams p;
  p.order = j.at("order").get<int>();
  p.d2 = j.at("d2").get<double>();
  p.v1 = j.at("v1").get<double>();
  p.vocabulary = VocabFromJson(j.at("vocabulary"));
  for (const auto& e : j.at("counts")) {
    p.counts.Add(e.at(0).get<std::vector<std::uint32_t>>(), WordId(e.at(1).get<std::uint32_t>()),
                 e.at(2).get<std::uint64_t>());
  }
  return NgramModel(std::move(p));
}

}  // namespace

json ModelToJson(const LanguageModel& model, const json& metadata) {
  json j = {{"format", std::string(kModelFormat)},
            {"version", kModelVersion},
            {"kind", model.kind()},
            {"metadata", metadata}};
  if (const auto* g = dynamic_cast<const GeneralizedModel*>(&model)) {
    j["bipos"] = BiposToJson(g->base());
    j["generalized"] = GeneralizedToJson(*g);
  } else if (const auto* b = dynamic_cast<const BiposModel*>(&model)) {
    j["bipos"] = BiposToJson(*b);
  } else if (const auto* u = dynamic_cast<const UniformModel*>(&model)) {
    j["uniform"] = {{"vocabulary", VocabToJson(u->vocabulary())}};
  } else if (const auto* n = dynamic_cast<const NgramModel*>(&model)) {
    j["ngram"] = NgramToJson(*n);
  } else {
    throw Error("cannot serialize a model of kind " + model.kind());
  }
  return j;
}

std::string SerializeModel(const LanguageModel& model, const json& metadata) {
  return ModelToJson(model, metadata).dump(1) + "\n";
}

void SaveModel(const LanguageModel& model, const std::filesystem::path& path,
               const json& metadata) {
  const std::string text = SerializeModel(model, metadata);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model " + path.string());
  out << text;
  if (!out) throw IoError("failed writing model " + path.string());
}

LoadedModel ModelFromJson(const json& j, std::optional<Regime> regime) {
  try {
    if (j.at("format").get<std::string>() != kModelFormat) {
      throw Error("not a model file");
    }
    const int version = j.at("version").get<int>();
    if (version != kModelVersion) {
      throw Error("unsupported model file version " + std::to_string(version));
    }
    LoadedModel out;
    out.metadata = j.at("metadata");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "bipos") {
      out.model = std::make_shared<BiposModel>(BiposFromJson(j.at("bipos"), regime));
    } else if (kind == "generalized") {
      auto base = std::make_shared<const BiposModel>(BiposFromJson(j.at("bipos"), regime));
      out.model = std::make_shared<GeneralizedModel>(
          GeneralizedFromJson(std::move(base), j.at("generalized")));
    } else if (kind == "uniform") {
      out.model = std::make_shared<UniformModel>(
          VocabFromJson(j.at("uniform").at("vocabulary")));
    } else if (kind == "ngram" || kind == "unigram") {
      out.model = std::make_shared<NgramModel>(NgramFromJson(j.at("ngram")));
    } else {
      throw Error("unknown model kind '" + kind + "'");
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed model file: ") + e.what());
  }
}

LoadedModel ParseModel(std::string_view text, std::optional<Regime> regime) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed model file: ") + e.what());
  }
  return ModelFromJson(j, regime);
}

LoadedModel LoadModel(const std::filesystem::path& path, std::optional<Regime> regime) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseModel(buf.str(), regime);
}

}  // namespace bipos
