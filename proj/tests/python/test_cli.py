#!/usr/bin/env python3
"""CLI contract checks: exit codes, JSON schema, CSV shape.

Usage: test_cli.py <path-to-rieszdisk-binary>
"""
import csv
import json
import math
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1] if len(sys.argv) > 1 else "rieszdisk"
FAILED = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILED.append(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
                      f"stderr: {proc.stderr.strip()}")
    return proc


def check(name, cond):
    if not cond:
        FAILED.append(name)


def main():
    tmp = tempfile.mkdtemp(prefix="rieszdisk_cli_")

    # capacity
    p = run("capacity", "--d", "3", "--lambda", "0.5", "--R", "1")
    j = json.loads(p.stdout)
    check("capacity value", abs(j["capacity"] - 2 / math.pi) < 1e-12)
    check("capacity echoes lambda and s",
          j["params"]["lambda"] == 0.5 and j["params"]["s"] == 1.0)
    p = run("capacity", "--d", "4", "--s", "2")
    j = json.loads(p.stdout)
    check("capacity d=4", abs(j["capacity"] - 0.5) < 1e-12)
    run("capacity", "--d", "3", "--lambda", "1.2", expect=2)

    # solve: zero field
    zero_path = os.path.join(tmp, "zero.json")
    run("solve", "--d", "3", "--lambda", "0.5", "--field", "zero",
        "--grid-n", "32", "--out", zero_path)
    j = json.load(open(zero_path))
    check("solve schema", set(j.keys()) ==
          {"params", "support", "F_Q", "C_Q", "density", "verification"})
    check("solve F_Q", abs(j["F_Q"] - math.pi / 2) < 1e-10)
    check("solve verification passed", j["verification"]["passed"] is True)
    check("grid size", len(j["density"]["r"]) == 32)

    # solve: monomial with interior support radius (q = 3 pi -> R* = 1/2)
    p = run("solve", "--d", "3", "--lambda", "0.5", "--field",
            "monomial:q=9.42477796076938,alpha=2", "--grid-n", "32")
    j = json.loads(p.stdout)
    check("monomial R*", abs(j["support"]["b"] - 0.5) < 1e-9)

    # solve: point charge below critical height -> exit 4, negative density
    low_path = os.path.join(tmp, "low.json")
    p = run("solve", "--d", "3", "--lambda", "0.5", "--field", "point:q=1,h=0.3",
            "--grid-n", "32", "--out", low_path, expect=4)
    j = json.load(open(low_path))
    check("low charge min density", j["density"]["min_density"] < 0)
    check("artifact still written", j["verification"]["passed"] is False)

    # invalid field spec
    run("solve", "--d", "3", "--lambda", "0.5", "--field", "point:q=0,h=1", expect=2)

    # critical-radius
    p = run("critical-radius", "--d", "3", "--lambda", "0.5", "--field",
            "monomial:q=1.1780972450961724,alpha=2")  # q = 3 pi / 8 -> R* = 1
    j = json.loads(p.stdout)
    check("critical radius R*=1", abs(j["R_star"] - 1.0) < 1e-9)

    # critical-height
    p = run("critical-height", "--d", "3", "--lambda", "0.5", "--q", "1")
    j = json.loads(p.stdout)
    check("h_plus bracket", 0.5 < j["h_plus"] < 1.0)
    check("threshold is max", j["threshold"] == max(j["h_plus"], j["h_minus"]))
    run("critical-height", "--d", "3", "--lambda", "0.5", "--q", "0", expect=2)
    # newtonian path (d = 8) agrees with the generic threshold
    p = run("critical-height", "--d", "8", "--lambda", "0.5", "--q", "1")
    j = json.loads(p.stdout)
    check("newtonian threshold", abs(j["h_plus"] - 0.97961140165261921) < 1e-8)

    # ring: disk limit
    ring_path = os.path.join(tmp, "ring.json")
    run("ring", "--d", "3", "--lambda", "0.5", "--field", "zero", "--a", "0.001",
        "--b", "1", "--out", ring_path)
    j = json.load(open(ring_path))
    check("ring F_Q disk limit", abs(j["F_Q"] - math.pi / 2) < 1e-3)
    check("ring residual", j["residual_norm"] < 1e-8)
    run("ring", "--d", "3", "--lambda", "0.5", "--field", "zero", "--a", "0.5",
        "--b", "0.4", expect=2)
    # point-charge ring: solution reported (negative density flagged via exit 4)
    p = run("ring", "--d", "3", "--lambda", "0.5", "--field", "point:q=1,h=0.4",
            "--a", "0.2", "--b", "1", expect=4)
    j = json.loads(p.stdout)
    check("ring residual small", j["residual_norm"] < 1e-8)
    check("ring potential constant",
          j["verification"]["max_potential_deviation_on_support"] < 5e-4)

    # verify on stored artifact
    run("verify", "--input", zero_path)
    run("verify", "--input", os.path.join(tmp, "missing.json"), expect=2)

    # plot-data
    csv_path = os.path.join(tmp, "zero.csv")
    run("plot-data", "--input", zero_path, "--out", csv_path)
    with open(csv_path, newline="") as fh:
        rows = list(csv.reader(fh))
    check("csv header", rows[0] == ["r", "f"])
    check("csv rows == grid_n", len(rows) - 1 == 32)
    pot_path = os.path.join(tmp, "zerop.csv")
    run("plot-data", "--input", zero_path, "--potential", "--out", pot_path)
    with open(pot_path, newline="") as fh:
        rows = list(csv.reader(fh))
    check("potential header", rows[0] == ["r", "weighted_potential"])
    check("potential constant", all(abs(float(r[1]) - math.pi / 2) < 1e-5
                                    for r in rows[1:]))
    run("plot-data", "--input", os.path.join(tmp, "missing.json"), expect=2)

    # determinism: identical runs give identical output
    a = run("solve", "--d", "4", "--lambda", "0.75", "--field", "point:q=0.5,h=2",
            "--grid-n", "24").stdout
    b = run("solve", "--d", "4", "--lambda", "0.75", "--field", "point:q=0.5,h=2",
            "--grid-n", "24").stdout
    check("deterministic output", a == b)

    if FAILED:
        print("CLI checks FAILED:")
        for f in FAILED:
            print(" -", f)
        sys.exit(1)
    print("all CLI checks passed")


if __name__ == "__main__":
    main()
