#!/usr/bin/env python3
# Copyright 2026 The dmbqc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/core/lulc_data.inc from data/lulc_constants.txt.

Usage: gen_lulc_data.py [--check] [fixture] [output]

The checksum is FNV-1a 64 over the fixture's data lines, each normalized to
single spaces and terminated by a newline. lulc.cc recomputes it from the
embedded arrays at load time.
"""

import argparse
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
N = 35

LICENSE = [
    "// Copyright 2026 The dmbqc Authors",
    "//",
    '// Licensed under the Apache License, Version 2.0 (the "License");',
    "// you may not use this file except in compliance with the License.",
    "// You may obtain a copy of the License at",
    "//",
    "//      http://www.apache.org/licenses/LICENSE-2.0",
    "//",
    "// Unless required by applicable law or agreed to in writing, software",
    '// distributed under the License is distributed on an "AS IS" BASIS,',
    "// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.",
    "// See the License for the specific language governing permissions and",
    "// limitations under the License.",
]


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def parse(path):
    fields = {}
    lines = []
    for raw in path.read_text().splitlines():
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        key, *vals = raw.split()
        fields[key] = vals
        lines.append(" ".join([key, *vals]))
    xi = [[int(v) for v in fields[f"xi{i}"]] for i in range(1, 7)]
    quad = [tuple(int(x) for x in p.split("-")) for p in fields["quad"]]
    e = [int(v) for v in fields["e"]]
    k1 = [int(v) for v in fields["k1"]]
    k2 = [int(v) for v in fields["k2"]]
    for row in xi + [e, k1, k2]:
        if len(row) != N:
            sys.exit(f"expected {N} entries per vector")
    if any(v % 2 == 0 for v in e) or any(v % 2 for v in k1 + k2):
        sys.exit("parity constraints violated")
    canonical = "".join(line + "\n" for line in lines).encode()
    return xi, quad, e, k1, k2, fnv1a64(canonical)


def render(xi, quad, e, k1, k2, checksum):
    def ints(v):
        return ", ".join(str(x) for x in v)

    out = LICENSE + ["", "// Generated by tools/gen_lulc_data.py from data/lulc_constants.txt. Do not edit.", ""]
    out.append(f"constexpr std::array<std::array<uint8_t, {N}>, 6> kSupport = {{{{")
    for row in xi:
        out.append(f"    {{{{{ints(row)}}}}},")
    out.append("}};")
    out.append(f"constexpr std::array<std::pair<uint16_t, uint16_t>, {len(quad)}> kQuadPairs = {{{{")
    for a, b in quad:
        out.append(f"    {{{a}, {b}}},")
    out.append("}};")
    for name, v in (("kAngles", e), ("kShift1", k1), ("kShift2", k2)):
        out.append(f"constexpr std::array<uint8_t, {N}> {name} = {{{ints(v)}}};")
    out.append(f"constexpr uint64_t kChecksum = 0x{checksum:016x}ULL;")
    return "\n".join(out) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="fail if the output is stale")
    ap.add_argument("fixture", nargs="?", default=ROOT / "data" / "lulc_constants.txt", type=pathlib.Path)
    ap.add_argument("output", nargs="?", default=ROOT / "src" / "core" / "lulc_data.inc", type=pathlib.Path)
    args = ap.parse_args()
    text = render(*parse(args.fixture))
    if args.check:
        if not args.output.exists() or args.output.read_text() != text:
            sys.exit(f"{args.output} is stale; rerun {pathlib.Path(__file__).name}")
        return
    args.output.write_text(text)


if __name__ == "__main__":
    main()
