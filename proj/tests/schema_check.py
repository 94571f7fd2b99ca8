"""Run the CLI in --json mode and validate each output against docs/schema.json."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    "count3 4452 8030 9945 3857942 --json --oracle",
    "count3 6 10 15 1 --json",
    "count3 2 4 6 7 --json",
    "count2 3 5 30 --json --oracle",
    "floorsum 40 50 7 --json --oracle",
    "reduce 2 4 6 7 --json",
    "reduce 4452 8030 9945 3857942 --json",
    "legendre 3 7 --json --oracle",
    "frobenius 3 5 --json --oracle",
    "sylvester 3 5 --json --oracle",
    "verify gauss --limit 12 --json",
    "verify lemma4 --limit 3 --json",
    "trace floorsum 40 50 7 --json",
    "trace count3 742 803 663 128598 --json",
    "bench --limit 5 --json",
]


def main(cli, schema_path):
    with open(schema_path) as f:
        validator = jsonschema.Draft202012Validator(json.load(f))
    bad = 0
    for case in CASES:
        out = subprocess.run([cli] + case.split(), capture_output=True, text=True, check=True).stdout
        errors = list(validator.iter_errors(json.loads(out)))
        print(("ok  " if not errors else "BAD ") + case)
        for e in errors[:3]:
            print("    " + e.message[:300])
        bad += bool(errors)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
