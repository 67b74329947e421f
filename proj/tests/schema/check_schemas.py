"""Validates the fixture configs and freshly generated reports against schemas/."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def load(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def main():
    binary, root = sys.argv[1], Path(sys.argv[2])
    schemas = {name: load(root / "schemas" / f"{name}.schema.json") for name in ("config", "report", "search")}
    for schema in schemas.values():
        jsonschema.Draft202012Validator.check_schema(schema)

    config = root / "fixtures" / "paper-example.json"
    spec = root / "fixtures" / "search-strict-vs-icoh2.json"
    jsonschema.validate(load(config), schemas["config"])
    jsonschema.validate(load(spec), schemas["search"])

    runs = [["check-axioms", config], ["validate", config], ["pipeline", config], ["search", spec]]
    with tempfile.TemporaryDirectory() as tmp:
        found = Path(tmp) / "found.json"
        found.write_text('{"n": 1, "family": "extensional-deltas", "required": ["i-coh"], "forbidden": ["n-coh"]}')
        runs.append(["search", found])
        bare = Path(tmp) / "bare.json"
        bare.write_text('{"universe": ["a", "b"], "delta": "E1", "clustering": [["a"], ["a", "b"]]}')
        jsonschema.validate(load(bare), schemas["config"])
        runs += [["check-axioms", bare], ["validate", bare], ["pipeline", bare]]
        for command, path in runs:
            out = subprocess.run([binary, command, str(path)], check=True, capture_output=True, text=True).stdout
            jsonschema.validate(json.loads(out), schemas["report"])
            print(f"{command} {path.name}: ok")


if __name__ == "__main__":
    main()
