"""Run the arrange binary in JSON mode and validate every document against the schema."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["charpoly", "--family", "eq1:a=2,3", "--n", "2"],
    ["charpoly", "--family", "shi", "--n", "3"],
    ["count", "--graph", "G:a=2,3;k=22", "--n", "3"],
    ["count", "--graph", "bar(C:k=4) + K:k=2", "--all"],
    ["table1", "--pairs", "2,3;2,4", "--primes", "23,29"],
    ["verify", "thm4.1", "--a", "2", "--n", "2"],
    ["verify", "eq2", "--a", "2", "--n", "2"],
    ["verify", "thm2.2", "--a", "2", "--n", "3"],
    ["verify", "thm3.4", "--a", "1,3", "--parts", "10,12", "--nmax", "5"],
    ["verify", "cor3.5", "--a", "2", "--b", "1", "--partitions", "6,8;14", "--nmax", "3"],
    ["probe", "conj5.1", "--a", "1", "--pendant", "K2", "--parts", "6,8", "--nmax", "4"],
    ["probe", "conj5.2", "--a", "1", "--b", "1", "--nmax", "3"],
    ["oracle", "--trials", "3"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        validator = jsonschema.Draft202012Validator(json.load(f))
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode not in (0, 4):
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {label}: {e.json_path}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
