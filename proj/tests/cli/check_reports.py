"""Runs the tmkit binary over a fixed command set and validates every --json
report against schemas/report.schema.json, the exit codes and determinism."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

tool, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(pathlib.Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)
failures = 0


def run(workdir, args, expect, name):
    global failures
    report = workdir / f"{name}.json"
    proc = subprocess.run([tool, "--json", str(report), *args], cwd=workdir, capture_output=True, text=True)
    ok = proc.returncode == expect
    problems = []
    if not ok:
        problems.append(f"exit {proc.returncode}, expected {expect}: {proc.stderr.strip()}")
    if report.exists():
        data = json.loads(report.read_text())
        problems += [e.message for e in validator.iter_errors(data)]
        if data.get("exit_code") != proc.returncode:
            problems.append("exit_code field differs from the process exit code")
    else:
        problems.append("no report written")
    print(("ok   " if not problems else "FAIL ") + name + "".join("\n     " + p for p in problems))
    failures += bool(problems)
    return report


with tempfile.TemporaryDirectory() as tmp:
    w = pathlib.Path(tmp)
    run(w, ["gen", "grid", "3", "3", "-o", "g.tm"], 0, "gen-grid")
    run(w, ["gen", "grid", "5", "5", "-o", "g5.tm"], 0, "gen-grid5")
    run(w, ["gen", "grid", "9", "9", "-o", "g9.tm"], 0, "gen-grid9")
    run(w, ["gen", "wall", "3", "2", "--roots", "2", "-o", "wall.tm"], 0, "gen-wall")
    run(w, ["gen", "complete", "3", "-o", "k3.tm"], 0, "gen-k3")
    run(w, ["gen", "complete", "4", "-o", "k4.tm"], 0, "gen-k4")
    run(w, ["gen", "complete", "5", "-o", "k5.tm"], 0, "gen-k5")
    run(w, ["gen", "cycle", "4", "-o", "c4.tm"], 0, "gen-c4")
    run(w, ["gen", "petersen", "-o", "p.tm"], 0, "gen-petersen")
    run(w, ["--seed", "7", "gen", "ktree", "9", "2", "3", "4", "-o", "kt.tm"], 0, "gen-ktree")
    run(w, ["tw", "-g", "g5.tm", "-o", "g5.td", "--window", "2", "--ceiling-treewidth-vertices", "30"], 0, "tw-window")
    run(w, ["nice", "-g", "p.tm", "-o", "p.ntd"], 0, "nice")
    run(w, ["tmc", "-g", "p.tm", "-h", "k4.tm", "--engine", "brute", "-o", "w.json"], 0, "tmc-yes")
    run(w, ["tmc", "-g", "g.tm", "-h", "k5.tm", "--engine", "dp"], 1, "tmc-no")
    run(w, ["folio", "-g", "wall.tm", "--delta", "2", "--engine", "dp"], 0, "folio")
    run(w, ["impsep", "-g", "g.tm", "-X", "0", "-Y", "8", "-k", "3"], 0, "impsep")
    run(w, ["impsep", "-g", "g.tm", "-X", "0", "-Y", "8", "-k", "1", "--count-only"], 1, "impsep-none")
    run(w, ["tmdel", "-g", "g.tm", "-h", "k4.tm", "-k", "1"], 0, "tmdel-yes")
    run(w, ["tmdel", "-g", "g.tm", "-h", "k3.tm", "-k", "0", "--engine", "dp"], 1, "tmdel-no")
    run(w, ["irrelevant", "-g", "g9.tm", "-X", "0,8", "-Y", "72,80", "-r", "1", "--check",
            "--ceiling-disjoint-paths-vertices", "100"], 0, "irrelevant")
    run(w, ["irrelevant", "--wall", "4", "4", "--shrink", "2", "-k", "0", "--delta", "1"], 0, "irrelevant-wall")
    run(w, ["verify", "-g", "g5.tm", "--td", "g5.td"], 0, "verify-td")
    run(w, ["verify", "-g", "p.tm", "--td", "p.ntd"], 0, "verify-nice")
    run(w, ["verify", "-g", "p.tm", "-h", "k4.tm", "--witness", "w.json"], 0, "verify-witness")
    run(w, ["verify", "-g", "g.tm", "-h", "k4.tm", "--witness", "w.json"], 1, "verify-witness-bad")
    run(w, ["verify", "-g", "g9.tm", "--embedding"], 0, "verify-embedding")
    run(w, ["verify", "-g", "g.tm", "-X", "0", "-Y", "8", "--separator", "5,7"], 0, "verify-separator")
    run(w, ["verify", "-g", "g.tm", "-h", "k3.tm", "-k", "1", "--solution", "4"], 1, "verify-solution")
    run(w, ["tw", "-g", "g9.tm"], 2, "ceiling")
    run(w, ["tmc", "-g", "missing.tm", "-h", "k3.tm"], 2, "missing-file")

    for seed in ("3", "11"):
        a = run(w, ["--seed", seed, "gen", "random", "8", "1", "3", "--roots", "2", "-o", "a.tm"], 0, f"seed-{seed}-a")
        b = run(w, ["--seed", seed, "gen", "random", "8", "1", "3", "--roots", "2", "-o", "b.tm"], 0, f"seed-{seed}-b")
        same = a.read_bytes() == b.read_bytes() and (w / "a.tm").read_bytes() == (w / "b.tm").read_bytes()
        print(("ok   " if same else "FAIL ") + f"seed-{seed} byte-identical")
        failures += not same

    ceiling = json.loads((w / "ceiling.json").read_text())
    named = ceiling["error"]["ceiling"] == "treewidth_vertices"
    print(("ok   " if named else "FAIL ") + "ceiling report names treewidth_vertices")
    failures += not named

sys.exit(1 if failures else 0)
