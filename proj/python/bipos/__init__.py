# __init__.py
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Part-of-speech language models with perplexity diagnostics."""

from ._core import (
    BiposModel,
    Error,
    EvalRecord,
    EvalResult,
    GeneralizedModel,
    LanguageModel,
    TaggedCorpus,
    TagMap,
    UniformModel,
    Vocabulary,
    adjust,
    build_vocabulary,
    component_report,
    decompose_three,
    decompose_two,
    entropy,
    evaluate,
    grid_search_lambda,
    impact,
    interpolate,
    load_model,
    read_lob,
    read_lob_file,
    relative_entropy,
    smooth_additive,
    split_corpus,
)

__version__ = "0.1.0"
