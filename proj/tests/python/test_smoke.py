# test_smoke.py
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

import math
import os
from pathlib import Path

import pytest

import bipos

DATA = Path(os.environ.get("BIPOS_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def bddad(name):
    tagmap = bipos.TagMap.load(str(DATA / "fixtures/bddad/symbols.map"))
    return bipos.read_lob_file(str(DATA / "fixtures/bddad" / name), tagmap)


def micro():
    tagmap = bipos.TagMap.load(str(DATA / "fixtures/micro/micro.map"))
    return bipos.read_lob_file(str(DATA / "fixtures/micro/corpus.txt"), tagmap)


def test_uniform_bddad():
    model = bipos.UniformModel(bddad("train.txt"))
    result = bipos.evaluate(model, bddad("test.txt"))
    assert result.ltp == -10.0
    assert result.pp == 4.0
    rows = {row[0]: row[4] for row in bipos.impact(result, "word")}
    assert rows == {"d": 0.6, "a": 0.2, "b": 0.2}


def test_bipos_train_evaluate_and_round_trip():
    train, test = bipos.split_corpus(micro(), 1500)
    model = bipos.BiposModel.train(train, regime="new")
    assert model.check_normalization() < 1e-9
    result = bipos.evaluate(model, test)
    assert result.n == len(test)
    assert math.isclose(
        result.ltp, result.ltp_known + result.ltp_unseen + result.ltp_unknown, abs_tol=1e-9
    )
    shares = bipos.component_report(result)
    assert math.isclose(sum(shares.values()), 1.0, abs_tol=1e-9)
    loaded = bipos.load_model(model.serialize())
    assert loaded.serialize() == model.serialize()
    assert bipos.evaluate(loaded, test).ltp == result.ltp


def test_generalized_lambda_search():
    text = "^ a_AT dog_N runs_V\n^ the_AT cat_N runs_V\n" * 10
    corpus = bipos.read_lob(text, bipos.TagMap.identity("small", ["AT", "N", "V"]))
    base = bipos.BiposModel.train(corpus)
    model = bipos.GeneralizedModel.train(base, corpus, "singular")
    lam, ltp, base_ltp = bipos.grid_search_lambda(model, corpus)
    assert lam < 1.0
    assert ltp >= base_ltp


def test_numeric_helpers():
    altp, app = bipos.adjust(-10.0, 3, 2, 5)
    assert altp == -13.0
    assert math.isclose(app, 2 ** 2.6)
    assert math.isclose(bipos.entropy([0.5, 0.5]), 1.0)
    p_a, p_b, a, b = bipos.decompose_two([(0.5, 0.25), (0.5, 0.5)])
    assert math.isclose(p_a, 4 / 9)
    assert math.isclose(a * b, 3 / 8)
    assert bipos.smooth_additive([1.0, 0.0], 0.1) == pytest.approx([0.9, 0.1])


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        bipos.adjust(-1.0, 1, 2, 5)
    with pytest.raises(bipos.Error):
        bipos.load_model("not json")
