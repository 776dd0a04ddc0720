"""Validate every JSON shape the CLI emits against docs/report.schema.json."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["verify", "product", "--q", "2"],
    ["verify", "product", "--q", "9", "--k", "3"],
    ["verify", "kodaira"],
    ["verify", "kodaira", "--q", "9", "--k", "3"],
    ["verify", "jflow", "--q", "2", "--s", "3"],
    ["verify", "all"],
    ["window", "product_c", "--q", "5"],
    ["window", "product_s", "--q", "2", "--c", "1/2"],
    ["window", "x2_c", "--q", "3", "--r", "2", "--G", "2", "--eps", "0"],
    ["report", "product", "--q", "2", "--s", "201/100", "--c", "1/2"],
    ["report", "product", "--q", "5", "--s", "boundary"],
    ["report", "kodaira"],
    ["report", "kodaira", "--q", "9", "--k", "3", "--t", "9/2", "--eps", "1/100"],
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    bad = 0
    for args in RUNS:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        if proc.returncode == 2:
            print("usage error:", " ".join(args), proc.stderr)
            bad += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            print("ok:", " ".join(args))
        except (ValueError, jsonschema.ValidationError) as err:
            print("invalid:", " ".join(args), err)
            bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
