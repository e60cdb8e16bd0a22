#!/usr/bin/env python3
"""Runs the CLI over a spread of invocations and validates every report,
plus the shipped data files, against the JSON schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

ROOT = pathlib.Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "schemas"
DATA = ROOT / "tests" / "data"

INVOCATIONS = [
    (0, "unipotent --type B --rank 3"),
    (0, "unipotent --type 2D --rank 4"),
    (0, "series --type A --rank 4 --d 2"),
    (0, "series --type C --rank 3 --d 4"),
    (0, "blocks --type B --rank 2 --q 2 --ell 3"),
    (0, "fusion --type B --rank 2 --q 2 --dmax 4"),
    (0, "fusion --type 2A --rank 5 --q 4"),
    (0, "fusion --type A --rank 1 --q 3"),
    (0, "dseries-check --type 2A --rank 5 --D 1,6"),
    (0, "dseries-check --type D --rank 4 --D {{2,4}}"),
    (0, "defect-bounds --type C --rank 5"),
    (0, "defect-bounds --type D --rank 2"),
    (0, "zsygmondy --q 2 --d 6"),
    (0, "zsygmondy --q 3 --d 4"),
    (0, "pi1 --datum catalog:pgl2_split"),
    (0, "pi1 --datum catalog:su3_unramified --p 3"),
    (0, "components --datum catalog:norm_one_ramified --p 2"),
    (0, "bijection --datum catalog:norm_one_ramified --p 2"),
    (0, "bijection --datum catalog:wild_sign_torus_rank2 --p 2"),
    (0, "cornqs --datum catalog:pgl2_split --p 2"),
    (0, "cornqs --datum catalog:sl3_split --p 3"),
    (0, "pi1 --datum {data}/pgl3_split.json --p 3"),
    (0, "bijection --datum {data}/norm_one_file.json --p 2"),
    (0, "fusion --type G2 --q 4 --data {data}/g2_table.json"),
    (0, "dseries-check --type G2 --D 1,2 --data {data}/g2_table.json"),
    (2, "fusion --type B --rank 2 --q 6"),
    (2, "unipotent --type E8"),
    (2, "zsygmondy --q 1 --d 3"),
    (2, "bijection --datum catalog:norm_one_ramified --p 4"),
    (2, "bijection --datum catalog:absent --p 2"),
    (2, "bijection --datum {data}/bad_datum.json --p 2"),
    (2, "pi1 --datum {data}/missing.json"),
    (2, "series --type D --rank 1 --d 2"),
    (2, "grid --config {grid_bad}"),
    (0, "grid --config {grid_ok}"),
]

GRID_OK = """threads = 2
fusion.families = A 2D
fusion.ranks = 2 3
fusion.q = 2
dseries.families = B
dseries.ranks = 2
dseries.sets = 2,4
defect.families = D
defect.ranks = 2
zsygmondy.q = 2
zsygmondy.d = 6 7
bijection.data = norm_one_ramified sl2_split
bijection.p = 2
cornqs.data = pgl2_split
cornqs.p = 2 3
components.data = all
components.p = 5
"""

GRID_BAD = "threads = 1\nfusion.families = A\nfusion.ranks = 1..x\nfusion.q = 2\n"


def load(name):
    return json.loads((SCHEMAS / name).read_text())


def main():
    binary = sys.argv[1]
    report = jsonschema.Draft202012Validator(load("report_v1.schema.json"))
    datum = jsonschema.Draft202012Validator(load("datum_v1.schema.json"))
    table = jsonschema.Draft202012Validator(load("exceptional_v1.schema.json"))
    for v in (report, datum, table):
        v.check_schema(v.schema)

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        grid_ok = pathlib.Path(tmp) / "ok.grid"
        grid_bad = pathlib.Path(tmp) / "bad.grid"
        grid_ok.write_text(GRID_OK)
        grid_bad.write_text(GRID_BAD)
        for expected, args in INVOCATIONS:
            args = args.format(data=DATA, grid_ok=grid_ok, grid_bad=grid_bad)
            run = subprocess.run([binary, *args.split()], capture_output=True, text=True)
            problems = []
            if run.returncode != expected:
                problems.append(f"exit {run.returncode}, expected {expected}")
            try:
                doc = json.loads(run.stdout)
                problems += [e.message for e in report.iter_errors(doc)]
                if expected == 2 and "error" not in doc:
                    problems.append("no error object")
            except json.JSONDecodeError as e:
                problems.append(f"stdout is not JSON: {e}")
            failures += bool(problems)
            print(("FAIL " if problems else "ok   ") + args)
            for p in problems:
                print("     " + p)

    for path in sorted(DATA.glob("*.json")):
        doc = json.loads(path.read_text())
        validator = table if doc.get("schema") == "exceptional_v1" else datum
        errors = [e.message for e in validator.iter_errors(doc)]
        failures += bool(errors)
        print(("FAIL " if errors else "ok   ") + path.name)
        for e in errors:
            print("     " + e)

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
