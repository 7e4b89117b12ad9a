#!/usr/bin/env python3
"""Run the CLI with --json and validate each document against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("group", ["info", "[G(3,1,2)]_2"]),
    ("group", ["info", "[G(2,2,4)]^a_1"]),
    ("group", ["info", "[W(A2)]^a_1"]),
    ("families", ["reflections", "[G(6,1,1)]_1", "-R", "2"]),
    ("families", ["reflections", "[G(6,2,2)]_2"]),
    ("families", ["reflections", "[G(6,6,2)]^a_3"]),
    ("sweep", ["check", "[G(3,1,2)]_2"]),
    ("sweep", ["check", "[G(4,1,2)]_2", "--budget", "2000", "--seed", "7"]),
    ("counterexample", ["counterexample", "[G(4,4,3)]_1"]),
    ("counterexample", ["counterexample", "[G(2,1,3)]^a_5"]),
    ("catalog", ["catalog"]),
    ("table", ["table", "--no-extensions"]),
]


def main() -> int:
    crg, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.stem.removesuffix(".schema"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    )
    failures = 0
    for kind, args in CASES:
        proc = subprocess.run([crg, *args, "--json"], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        validator = jsonschema.Draft202012Validator(schemas[kind], registry=registry)
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
        for e in errors[:5]:
            print(f"FAIL {' '.join(args)}: {list(e.path)}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {kind:15s} {' '.join(args)}")
    # The schemas must reject a corrupted document.
    doc = json.loads(subprocess.run([crg, "check", "[G(3,1,2)]_2", "--json"], capture_output=True, text=True).stdout)
    doc["violations"][0]["outcome"] = "MAYBE"
    doc["examined"] = -1
    bad = jsonschema.Draft202012Validator(schemas["sweep"], registry=registry)
    if bad.is_valid(doc):
        print("FAIL corrupted sweep document accepted")
        failures += 1
    else:
        print("ok   corrupted sweep document rejected")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
