"""Validate machine reports from the fqnres binary against the shipped schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(binary, *args, stdin=""):
    return subprocess.run([binary, *args], input=stdin, capture_output=True, text=True)


def main():
    binary, schema_path, fixtures = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        kb = str(tmp / "kb.db")
        versions = tmp / "versions.classes"
        versions.write_text("T p.Old\nT p.Both\n")
        newer = tmp / "newer.classes"
        newer.write_text("T p.New\nT p.Both\nM p.Both.go(int)void\nM p.Both.go(long)void\n")
        ingest = run(binary, "ingest", "--kb", kb,
                     "--classes", str(fixtures / "jdk8.classes"), "--dep", "jdk:java8:8",
                     "--classes", str(fixtures / "patterns.classes"), "--dep", "org.example:patterns:1.2",
                     "--classes", str(versions), "--dep", "g:lib:1.0",
                     "--classes", str(newer), "--dep", "g:lib:2.0",
                     "--pom", str(fixtures / "app.pom.xml"),
                     "--ground-truth", str(fixtures / "ground_truth.txt"))
        if ingest.returncode != 0:
            print(ingest.stderr)
            return 1

        walkthrough = (fixtures / "walkthrough.java").read_text()
        cases = {
            "walkthrough": (walkthrough, [], 0),
            "declared": (walkthrough, ["--declared", "org.example:patterns:1.2"], 0),
            "unresolved": ("Pattern p = null; Widget w = null;", [], 1),
            "assumed builtin": ("Integer i = null; Matcher m = null;", [], 0),
            "relaxed versions": ("Old o = null; New n = null;", [], 0),
            "ambiguous overloads": ("Both b = null; b.go(x());", [], None),
            "fields": ("Pattern p = null; int f = Pattern.CASE_INSENSITIVE;", [], 0),
        }
        failures = 0
        for name, (source, extra, expected_code) in cases.items():
            r = run(binary, "resolve", "--kb", kb, "--output", "machine", *extra, stdin=source)
            if r.returncode not in (0, 1) or (expected_code is not None and r.returncode != expected_code):
                print(f"FAIL {name}: exit {r.returncode}\n{r.stderr}")
                failures += 1
                continue
            try:
                report = json.loads(r.stdout)
                validator.validate(report)
            except (ValueError, jsonschema.ValidationError) as e:
                print(f"FAIL {name}: {e}")
                failures += 1
                continue
            print(f"ok   {name}")
        return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
