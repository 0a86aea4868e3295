#!/usr/bin/env python3
# make_micro_corpus.py
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
"""Writes the synthetic six-tag fixture corpus used by tests and examples.

The output is deterministic for a given seed.
"""

import argparse
import random

ARTICLES = [("the", "ATI"), ("a", "AT"), ("an", "AT"), ("this", "DT")]
PREPS = ["in", "of", "on", "during", "with", "for"]
ADJS = ["old", "new", "small", "large", "red", "quiet", "early", "late"]
VERBS = [("saw", "VBD"), ("likes", "VBZ"), ("took", "VBD"), ("gave", "VBD"),
         ("makes", "VBZ"), ("found", "VBD"), ("holds", "VBZ")]
NOUN_STEMS = ["man", "dog", "house", "river", "war", "year", "book", "city",
              "road", "child", "letter", "garden", "market", "ship", "song"]


def noun(rng):
    # Zipf-like draw over a long tail so held-out text has unknown nouns.
    k = int(rng.paretovariate(0.9))
    if k <= len(NOUN_STEMS):
        return NOUN_STEMS[k - 1], "NN"
    return f"thing{k}", ("NNS" if k % 3 == 0 else "NN")


def noun_phrase(rng, out):
    word, tag = rng.choice(ARTICLES)
    out.append((word, tag))
    while rng.random() < 0.35:
        out.append((rng.choice(ADJS), "JJ"))
    out.append(noun(rng))


def sentence(rng):
    out = []
    noun_phrase(rng, out)
    out.append(rng.choice(VERBS))
    if rng.random() < 0.8:
        noun_phrase(rng, out)
    while rng.random() < 0.4:
        out.append((rng.choice(PREPS), "IN"))
        noun_phrase(rng, out)
    out.append((".", "."))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tokens", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    total = 0
    lines = []
    while total < args.tokens:
        s = sentence(rng)
        total += len(s)
        items = " ".join(f"{w}_{t}" for w, t in s)
        lines.append(f"M{len(lines) // 50 + 1:02d} {len(lines) % 50 + 1} ^ {items}")
    with open(args.out, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
