"""Validates divgraph JSON output against docs/report.schema.json.

Also checks that repeated runs with a fixed seed are byte-identical.
"""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    cases = [
        ("spectrum", ["spectrum", "--n", "30", "--lambda", "-2,-1,0,1"]),
        ("spectrum", ["spectrum", "--type", "2,2,1", "--seed", "11"]),
        ("spectrum", ["spectrum", "--type", "1,1,1,1,1,1,1,1,1", "--lambda", "0"]),
        ("charpoly", ["charpoly", "--n", "360"]),
        ("info", ["info", "--n", "36"]),
        ("info", ["info", "--type", "1,1,1"]),
        ("table", ["table", "--lambda", "-1,0", "--omega-max", "5"]),
    ]
    failures = 0
    for kind, args in cases:
        first = subprocess.run([tool, *args], capture_output=True, text=True, check=True).stdout
        second = subprocess.run([tool, *args], capture_output=True, text=True, check=True).stdout
        sub = dict(schema)
        sub["$ref"] = f"#/$defs/{kind}"
        try:
            jsonschema.validate(json.loads(first), sub)
            ok = first == second
        except jsonschema.ValidationError as e:
            print(f"{' '.join(args)}: {e.message}")
            ok = False
        print(f"{'ok  ' if ok else 'FAIL'} {' '.join(args)}")
        failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
