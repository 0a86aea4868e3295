// bindings.cc
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>

#include "bipos/analysis.h"
#include "bipos/bipos_model.h"
#include "bipos/corpus.h"
#include "bipos/distributions.h"
#include "bipos/evaluation.h"
#include "bipos/generalized_model.h"
#include "bipos/model_io.h"
#include "bipos/simple_models.h"

namespace py = pybind11;
using namespace bipos;

namespace {

TagId ContextOf(const BiposModel& m, const std::optional<std::string>& prev) {
  return prev ? m.tagset().Id(*prev) : kBeginTag;
}

py::tuple Decomp2(const std::vector<std::array<double, 2>>& terms) {
  const auto d = DecomposeTwo(terms);
  return py::make_tuple(d.shares[0], d.shares[1], d.factors[0], d.factors[1]);
}

py::tuple Decomp3(const std::vector<std::array<double, 3>>& terms) {
  const auto d = DecomposeThree(terms);
  return py::make_tuple(d.shares, d.factors);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Part-of-speech language models with perplexity diagnostics";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<TagMap>(m, "TagMap")
      .def_static("load", [](const std::string& path) { return TagMap::Load(path); })
      .def_static("identity", &TagMap::Identity, py::arg("name"), py::arg("tags"))
      .def("merge", [](const TagMap& t, const std::string& raw) { return t.Merge(raw); })
      .def("then", &TagMap::Then)
      .def_property_readonly("source_name", &TagMap::source_name)
      .def_property_readonly("target_name", &TagMap::target_name)
      .def_property_readonly("tags", [](const TagMap& t) { return t.target().tags(); });

  py::class_<TaggedCorpus>(m, "TaggedCorpus")
      .def("__len__", &TaggedCorpus::size)
      .def_property_readonly("words", [](const TaggedCorpus& c) {
        std::vector<std::string> w;
        for (const auto& t : c.tokens()) w.push_back(t.surface);
        return w;
      })
      .def_property_readonly("tags", [](const TaggedCorpus& c) {
        std::vector<std::string> w;
        for (const auto& t : c.tokens()) w.push_back(c.tagset().Name(t.tag));
        return w;
      })
      .def_property_readonly("sentence_starts", &TaggedCorpus::sentence_starts)
      .def("slice", &TaggedCorpus::Slice);

  m.def("read_lob", [](const std::string& text, const TagMap& map) {
    return ReadLobString(text, map);
  }, py::arg("text"), py::arg("tagmap"));
  m.def("read_lob_file", [](const std::string& path, const TagMap& map) {
    return ReadLobFile(path, map);
  }, py::arg("path"), py::arg("tagmap"));
  m.def("split_corpus", &SplitCorpus, py::arg("corpus"), py::arg("n_train"));

  py::class_<Vocabulary>(m, "Vocabulary")
      .def("__len__", &Vocabulary::size)
      .def("__contains__", [](const Vocabulary& v, const std::string& w) { return v.Contains(w); })
      .def_property_readonly("words", &Vocabulary::words)
      .def_property_readonly("token_count", &Vocabulary::token_count);
  m.def("build_vocabulary", [](const TaggedCorpus& c) { return BuildVocabulary(c); });

  py::class_<LanguageModel, std::shared_ptr<LanguageModel>>(m, "LanguageModel")
      .def_property_readonly("kind", &LanguageModel::kind)
      .def("serialize", [](const LanguageModel& lm) { return SerializeModel(lm); });

  py::class_<BiposModel, LanguageModel, std::shared_ptr<BiposModel>>(m, "BiposModel")
      .def_static("train",
                  [](const TaggedCorpus& train, std::optional<Vocabulary> vocab, double c2,
                     double d1, const std::string& regime) {
                    TrainOptions o;
                    o.c2 = c2;
                    o.d1 = d1;
                    o.regime = ParseRegime(regime);
                    return std::make_shared<BiposModel>(
                        BiposModel::Train(train, vocab ? *vocab : BuildVocabulary(train), o));
                  },
                  py::arg("train"), py::arg("vocab") = std::nullopt, py::arg("c2") = 1e-4,
                  py::arg("d1") = 1e-6, py::arg("regime") = "m1")
      .def_property_readonly("tags", [](const BiposModel& b) { return b.tagset().tags(); })
      .def_property_readonly("c1", &BiposModel::c1)
      .def_property_readonly("c2", &BiposModel::c2)
      .def_property_readonly("d1", &BiposModel::d1)
      .def_property_readonly("d2", &BiposModel::d2)
      .def_property_readonly("unseen_count", &BiposModel::unseen_count)
      .def_property("regime", [](const BiposModel& b) { return std::string(RegimeName(b.regime())); },
                    [](BiposModel& b, const std::string& r) { b.set_regime(ParseRegime(r)); })
      .def("prob_word", [](const BiposModel& b, const std::string& w,
                           std::optional<std::string> prev) {
        return b.ProbWord(w, ContextOf(b, prev));
      }, py::arg("word"), py::arg("prev_tag") = std::nullopt)
      .def("assign_tag", [](const BiposModel& b, const std::string& w,
                            std::optional<std::string> prev) {
        return b.tagset().Name(b.AssignTag(w, ContextOf(b, prev)));
      }, py::arg("word"), py::arg("prev_tag") = std::nullopt)
      .def("check_normalization", [](const BiposModel& b, std::optional<std::string> prev) {
        return b.CheckNormalization(ContextOf(b, prev));
      }, py::arg("prev_tag") = std::nullopt);

  py::class_<GeneralizedModel, LanguageModel, std::shared_ptr<GeneralizedModel>>(
      m, "GeneralizedModel")
      .def_static("train",
                  [](std::shared_ptr<BiposModel> base, const TaggedCorpus& train,
                     const std::string& variable, double lambda, std::uint64_t seed) {
                    GeneralizedOptions o;
                    o.lambda = lambda;
                    return std::make_shared<GeneralizedModel>(GeneralizedModel::Train(
                        base, train, ParseVariableSpec(variable, seed), o));
                  },
                  py::arg("base"), py::arg("train"), py::arg("variable"),
                  py::arg("lambda_") = 0.5, py::arg("seed") = 1)
      .def_property("lambda_", &GeneralizedModel::lambda, &GeneralizedModel::set_lambda);

  py::class_<UniformModel, LanguageModel, std::shared_ptr<UniformModel>>(m, "UniformModel")
      .def(py::init([](const TaggedCorpus& c) {
        return std::make_shared<UniformModel>(BuildVocabulary(c));
      }));

  m.def("load_model", [](const std::string& text) { return ParseModel(text).model; });

  py::class_<EvalRecord>(m, "EvalRecord")
      .def_readonly("index", &EvalRecord::index)
      .def_readonly("word", &EvalRecord::surface)
      .def_property_readonly("word_class",
                             [](const EvalRecord& r) { return std::string(WordClassName(r.word_class)); })
      .def_readonly("prev_tag", &EvalRecord::prev_tag)
      .def_readonly("assigned_tag", &EvalRecord::assigned_tag)
      .def_readonly("gold_tag", &EvalRecord::gold_tag)
      .def_readonly("variable", &EvalRecord::variable_value)
      .def_readonly("p", &EvalRecord::probability)
      .def_readonly("log2p", &EvalRecord::log2p);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("n", &EvalResult::n)
      .def_readonly("s", &EvalResult::s)
      .def_readonly("r", &EvalResult::r)
      .def_readonly("ltp", &EvalResult::ltp)
      .def_readonly("lp", &EvalResult::lp)
      .def_readonly("pp", &EvalResult::pp)
      .def_readonly("ltp_known", &EvalResult::ltp_known)
      .def_readonly("ltp_unseen", &EvalResult::ltp_unseen)
      .def_readonly("ltp_unknown", &EvalResult::ltp_unknown)
      .def_readonly("altp", &EvalResult::altp)
      .def_readonly("app", &EvalResult::app)
      .def_readonly("tp", &EvalResult::tp)
      .def_readonly("records", &EvalResult::records);

  m.def("evaluate", &Evaluate, py::arg("model"), py::arg("test"));
  m.def("adjust", [](double ltp, std::size_t s, std::size_t r, std::size_t n) {
    const Adjusted a = Adjust(ltp, s, r, n);
    return py::make_tuple(a.altp, a.app);
  }, py::arg("ltp"), py::arg("s"), py::arg("r"), py::arg("n"));
  m.def("grid_search_lambda", [](const GeneralizedModel& g, const TaggedCorpus& test) {
    const auto r = GridSearchLambda(g, test);
    return py::make_tuple(r.lambda, r.ltp, r.base_ltp);
  });

  m.def("decompose_two", &Decomp2, py::arg("terms"));
  m.def("decompose_three", &Decomp3, py::arg("terms"));
  m.def("entropy", [](const std::vector<double>& p) { return Entropy(p); });
  m.def("relative_entropy", [](const std::vector<double>& a, const std::vector<double>& b) {
    return RelativeEntropy(a, b);
  });
  m.def("smooth_additive", [](const std::vector<double>& p, double v1) {
    return SmoothAdditive(p, v1);
  });
  m.def("interpolate", [](const std::vector<double>& p, const std::vector<double>& q,
                          double lambda) { return Interpolate(p, q, lambda); });

  m.def("impact", [](const EvalResult& r, const std::string& key) {
    ImpactKey k = ImpactKey::kPrevTag;
    if (key == "assigned_tag") k = ImpactKey::kAssignedTag;
    else if (key == "gold_tag") k = ImpactKey::kGoldTag;
    else if (key == "word_class") k = ImpactKey::kWordClass;
    else if (key == "word") k = ImpactKey::kWord;
    else if (key != "prev_tag") throw Error("unknown impact key '" + key + "'");
    std::vector<py::tuple> rows;
    for (const auto& row : Impact(r.records, k).rows) {
      rows.push_back(py::make_tuple(row.key, row.n, row.ltp, row.avg, row.fraction));
    }
    return rows;
  }, py::arg("result"), py::arg("key") = "prev_tag");
  m.def("component_report", [](const EvalResult& r) {
    const auto c = ComponentReportOf(r.records);
    py::dict d;
    d["unknown"] = c.shares.unknown;
    d["fact"] = c.shares.fact;
    d["word"] = c.shares.word;
    d["pos"] = c.shares.pos;
    return d;
  });
}
