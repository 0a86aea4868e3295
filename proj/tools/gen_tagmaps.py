#!/usr/bin/env python3
# gen_tagmaps.py
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
"""Regenerates the tag map files from data/tagmaps/tagsets.tsv."""

import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "data" / "tagmaps"
NAMES = ["lob", "tags135", "tags88", "tags42", "tags24"]


def write_map(path, source, target, pairs):
    seen = {}
    for raw, merged in pairs:
        if seen.setdefault(raw, merged) != merged:
            raise SystemExit(f"{path}: {raw} maps to both {seen[raw]} and {merged}")
    with open(path, "w") as f:
        f.write(f"# source: {source}\n# target: {target}\n")
        for raw, merged in seen.items():
            f.write(f"{raw}\t{merged}\n")


def main():
    rows = []
    for line in (ROOT / "tagsets.tsv").read_text().splitlines():
        if line and not line.startswith("#"):
            rows.append(line.split("\t"))
    for col, size in ((1, "135"), (2, "88"), (3, "42"), (4, "24")):
        write_map(ROOT / f"lob-{size}.map", NAMES[0], NAMES[col],
                  [(r[0], r[col]) for r in rows])
    write_map(ROOT / "tags88-42.map", NAMES[2], NAMES[3],
              [(r[2], r[3]) for r in rows])


if __name__ == "__main__":
    main()
