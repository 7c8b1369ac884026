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

"""CLI contract checks: schemas, exit codes, CSV shapes, reproducibility."""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

try:
    import jsonschema
    from referencing import Registry, Resource
except ImportError:
    print("jsonschema is not installed; skipping")
    sys.exit(77)

CLI = sys.argv[1]
SCHEMAS = Path(sys.argv[2])

failures = []


def load_registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = load_registry()


def validator(name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    return jsonschema.Draft202012Validator(schema, registry=REGISTRY)


def run(args, env=None):
    full_env = dict(os.environ)
    full_env.pop("DMBQC_ENUM_BUDGET", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=600)


def check(cond, what):
    if not cond:
        failures.append(what)
        print(f"  failed: {what}")


def expect_json(args, schema, code=0):
    res = run(args)
    label = " ".join(args)
    check(res.returncode == code, f"{label}: exit {res.returncode}, wanted {code}")
    try:
        doc = json.loads(res.stdout)
    except json.JSONDecodeError as err:
        check(False, f"{label}: invalid JSON ({err})")
        return None
    for v in (validator("envelope"), validator(schema)):
        errors = list(v.iter_errors(doc))
        check(not errors, f"{label}: schema {schema}: {errors[0].message if errors else ''}")
    again = run(args)
    check(again.stdout == res.stdout, f"{label}: output not byte-identical across runs")
    return doc


def main():
    tmp = Path(tempfile.mkdtemp())
    for kind, extra in [("example1", []), ("lulc", []), ("family", ["--r", "0", "--t", "2", "--m", "2", "--chi", "1"]),
                        ("family", ["--r", "1", "--t", "1", "--m", "2", "--chi", "1"])]:
        res = run(["instance", kind, *extra])
        check(res.returncode == 0, f"instance {kind}: exit {res.returncode}")
        doc = json.loads(res.stdout)
        errors = list(validator("mbqc").iter_errors(doc))
        check(not errors, f"instance {kind}: {errors[0].message if errors else ''}")
        name = kind + ("_" + "".join(extra[1::2]) if extra else "")
        (tmp / f"{name}.json").write_text(res.stdout)

    # A hand-written instance: four-qubit GHZ with paired basis choices, which
    # computes the linear function 1 + i1 + i2.
    paired = {
        "state": {"n": 4, "generators": [[1, 1, 1, 1]]},
        "angles": {"D": 2, "numerators": [1, 1, 1, 1]},
        "Q": [[1, 0], [0, 1], [1, 0], [0, 1]],
        "Z": [[1, 1, 1, 1]],
    }
    (tmp / "paired.json").write_text(json.dumps(paired))

    doc = expect_json(["phase-diagram", "--rmax", "1", "--mmax", "4"], "phase-diagram")
    check(doc and len(doc["payload"]["cells"]) == 8, "phase-diagram: 8 cells")
    expect_json(["family", "eval", "--r", "1", "--t", "2", "--m", "5", "--chi", "2", "--input", "1" * 16], "family-eval")
    expect_json(["family", "table", "--r", "0", "--t", "1", "--m", "2", "--chi", "2"], "family-table")
    expect_json(["family", "table", "--r", "1", "--t", "2", "--m", "4", "--chi", "2"], "family-table", code=1)
    doc = expect_json(["family", "check", "--r", "1", "--t", "2", "--m", "5", "--chi", "2"], "family-check")
    if doc:
        p = doc["payload"]
        check(p["deterministic"] is True and p["sufficient"] is True and p["linear"] is False,
              "family check 1 2 5 2 verdicts")
    expect_json(["family", "check", "--r", "1", "--t", "2", "--m", "4", "--chi", "2"], "family-check")
    expect_json(["example1"], "example1")
    doc = expect_json(["example2"], "example2")
    check(doc and doc["payload"]["m4"]["correspondence_discrepancy"] is False, "example2: no discrepancy")
    doc = expect_json(["lulc", "verify"], "lulc-verify")
    check(doc and doc["payload"]["all_ok"] is True, "lulc verify: all ok")
    doc = expect_json(["lulc", "and", "--a", "1", "--b", "1"], "lulc-and")
    check(doc and doc["payload"]["o"][0] == 1, "lulc and 1 1: first output is 1")
    for name, want in [("example1", "Contextual"), ("lulc", "Contextual"), ("family_0221", "HVMExists"),
                       ("paired", "HVMExists")]:
        doc = expect_json(["hvm", "--instance", str(tmp / f"{name}.json")], "hvm")
        check(doc and doc["payload"]["verdict"]["kind"] == want, f"hvm {name}: {want}")
        check(doc and doc["payload"]["linear"] == (want == "HVMExists"), f"hvm {name}: linearity")
    expect_json(["hvm", "--instance", str(tmp / "family_1121.json")], "hvm", code=1)
    for name in ["example1", "family_0221", "paired"]:
        doc = expect_json(["oracle-compare", "--instance", str(tmp / f"{name}.json"), "--trials", "20"], "oracle-compare")
        check(doc and doc["payload"]["within_tolerance"] and doc["payload"]["sampling_constant"],
              f"oracle-compare {name}")
    doc = expect_json(["ax", "--r", "2", "--m", "4"], "ax")
    check(doc and doc["payload"]["sharp"] is True, "ax 2 4: sharp")

    # CSV outputs.
    res = run(["phase-diagram", "--rmax", "1", "--mmax", "4", "--csv"])
    lines = res.stdout.splitlines()
    check(lines[0] == "r,m,class,chi_max,witness_t" and len(lines) == 9, "phase-diagram CSV shape")
    check("1,4,Unknown,," in lines, "phase-diagram CSV unknown row")
    res = run(["phase-diagram", "--rmax", "0", "--mmax", "0", "--csv"])
    check(res.stdout == "r,m,class,chi_max,witness_t\n", "empty phase diagram CSV")
    res = run(["example1", "--csv"])
    lines = res.stdout.splitlines()
    check(lines[0] == "i1,i2,i3,o1" and len(lines) == 9, "example1 CSV shape")
    check("0,0,0,1" in lines and "1,1,1,1" in lines and "1,0,0,0" in lines, "example1 CSV rows")

    # Usage errors exit 2 with a diagnostic.
    for args in (["family", "eval", "--r", "1", "--t", "2", "--m", "5", "--chi", "2", "--input", "1" * 17],
                 ["no-such-command"], ["family", "check", "--r", "x"], ["lulc", "and", "--a", "2", "--b", "0"],
                 ["hvm", "--instance", str(tmp / "missing.json")], ["lulc", "verify", "--csv"]):
        res = run(args)
        check(res.returncode == 2, f"{' '.join(args)}: exit {res.returncode}, wanted 2")
        check(res.stderr.strip() != "", f"{' '.join(args)}: no diagnostic")
    bad = tmp / "bad.json"
    bad.write_text("{\"state\": 3}")
    res = run(["hvm", "--instance", str(bad)])
    check(res.returncode == 2, f"malformed instance: exit {res.returncode}")

    # Budget override through the environment.
    res = run(["ax", "--r", "3", "--m", "6"], env={"DMBQC_ENUM_BUDGET": "1000"})
    check(res.returncode == 1 and "budget" in res.stderr.lower(), f"budget override: exit {res.returncode}")

    res = run(["--version"])
    check(res.returncode == 0 and res.stdout.strip().endswith("0.1.0"), "--version")

    if failures:
        print(f"{len(failures)} CLI contract check(s) failed")
        return 1
    print("CLI contract checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
