#!/usr/bin/env python3
"""End-to-end checks of the bolalg command line.

Each case runs once in text mode and once with --json. The JSON report is
validated against the schema, its exit_code must match the process, and the
serial kernels must give the same bytes as the parallel ones. With
--transcript every command line, exit code and output is appended to one file
so two runs can be compared byte for byte.
"""

import argparse
import json
import os
import shutil
import subprocess
import sys
import tempfile

import jsonschema

ADJ = ["--adjoint"]

# (name, argv, expected exit code, substrings the text output must contain)
CASES = [
    ("verify-b2-1", ["verify", "data/b2_lambda1.alg"], 0, ["B01: pass", "B3: pass"]),
    ("verify-b2-m1", ["verify", "data/b2_lambdam1.alg"], 0, ["B3: pass"]),
    ("verify-b2-0", ["verify", "data/b2_lambda0.alg"], 0, ["B3: pass"]),
    ("verify-b2-5/3", ["verify", "data/b2_lambda5_3.alg"], 0, ["B3: pass"]),
    ("verify-broken", ["verify", "data/broken.alg"], 1, ["B1: FAIL at (0,1,2)"]),
    ("verify-maltsev4", ["verify", "data/maltsev4.alg"], 0, ["maltsev-identity: pass"]),
    ("verify-so3", ["verify", "data/so3.alg"], 0, ["maltsev-identity: pass"]),
    ("verify-not-maltsev", ["verify", "data/not_maltsev3.alg"], 1, ["maltsev-identity: FAIL"]),
    ("maltsev-to-bol", ["maltsev-to-bol", "data/m0.alg", "-o", "out/m0_bol.alg"], 0, ['"kind": "bol"']),
    ("maltsev-to-bol-reject", ["maltsev-to-bol", "data/not_maltsev3.alg"], 1, ["rejected"]),
    ("verify-written", ["verify", "out/m0_bol.alg"], 0, ["B3: pass"]),
    ("adjoint", ["adjoint", "data/b2_lambda1.alg", "-o", "out/adj1.rep"], 0, ['"kind": "representation"']),
    ("adjoint-reject", ["adjoint", "data/broken.alg"], 1, ["rejected"]),
    ("induce-rep", ["induce-rep", "data/m0.alg", "--rho", "data/m0_module.rep", "-o", "out/m0.rep"], 0, []),
    ("induce-rep-shape", ["induce-rep", "data/not_maltsev3.alg", "--rho", "data/m0_module.rep"], 2, []),
    ("verify-rep-adjoint", ["verify-rep", "data/b2_lambda1.alg"] + ADJ, 0, ["R1: pass", "R33: pass"]),
    ("verify-rep-file", ["verify-rep", "data/b2_lambda1.alg", "--rep", "out/adj1.rep"], 0, ["R33: pass"]),
    ("verify-rep-m0", ["verify-rep", "data/b2_lambdam1.alg", "--rep", "out/m0.rep"], 0, ["R33: pass"]),
    ("verify-rep-perturbed", ["verify-rep", "data/b2_lambda1.alg", "--rep",
                              "data/perturbed_adjoint_b2_lambda1.rep"], 1, ["FAIL at"]),
    ("verify-rep-zero", ["verify-rep", "data/zero2.alg", "--rep", "data/zero_module.rep"], 0, []),
    ("verify-rep-broken-base", ["verify-rep", "data/broken.alg"] + ADJ, 1, ["rejected"]),
    ("delta-check", ["delta-check", "data/b2_lambda5_3.alg"] + ADJ, 0, ["Delta: pass"]),
    ("delta-check-m0", ["delta-check", "data/b2_lambdam1.alg", "--rep", "data/m0_induced.rep"], 0, []),
    ("pseudoderivations", ["pseudoderivations", "data/b2_lambda1.alg"] + ADJ, 0, ["dim: 3"]),
    ("cohomology-1", ["cohomology", "data/b2_lambda1.alg"] + ADJ, 0, ["dim_Z: 5", "dim_B: 3", "dim_H: 2"]),
    ("cohomology-m1", ["cohomology", "data/b2_lambdam1.alg"] + ADJ, 0, ["dim_Z: 5", "dim_B: 2", "dim_H: 3"]),
    ("cohomology-0", ["cohomology", "data/b2_lambda0.alg"] + ADJ, 0, ["dim_Z: 5", "dim_B: 2", "dim_H: 3"]),
    ("cohomology-m0", ["cohomology", "data/b2_lambdam1.alg", "--rep", "data/m0_induced.rep"], 0,
     ["dim_Z: 3", "dim_B: 1", "dim_H: 2"]),
    ("cohomology-perturbed", ["cohomology", "data/b2_lambda1.alg", "--rep",
                              "data/perturbed_adjoint_b2_lambda1.rep"], 1, ["rejected"]),
    ("is-cocycle-yes", ["is-cocycle", "data/b2_lambda1.alg", "data/nu_mul_omega_tri.coc"] + ADJ, 0, []),
    ("is-cocycle-no", ["is-cocycle", "data/b2_lambda1.alg", "data/omega_e1e2e1.coc"] + ADJ, 1, ["FAIL at"]),
    ("is-coboundary-chi", ["is-coboundary", "data/b2_lambda1.alg", "data/chi_e1_coboundary.coc"] + ADJ, 0,
     ["coboundary: yes"]),
    ("is-coboundary-no", ["is-coboundary", "data/b2_lambda1.alg", "data/nu_e1e2_e1.coc"] + ADJ, 1,
     ["coboundary: no"]),
    ("deform-check-self", ["deform-check", "data/b2_lambda1.alg", "data/nu_mul_omega_tri.coc"], 0,
     ["generates: yes", "routes agree: yes"]),
    ("deform-check-e1e2e2", ["deform-check", "data/b2_lambda1.alg", "data/omega_e1e2e2.coc"], 0, []),
    ("deform-check-no", ["deform-check", "data/b2_lambda1.alg", "data/omega_e1e2e1.coc"], 1,
     ["generates: no"]),
    ("deform-formal", ["deform-formal", "data/b2_lambda1.alg", "data/nu_mul_omega_tri.coc"], 0,
     ["order3-binary: pass"]),
    ("deform-equiv-same", ["deform-equiv", "data/b2_lambda1.alg", "data/nu_mul_omega_tri.coc",
                           "data/nu_mul_omega_tri.coc"], 0, ["equivalent: yes"]),
    ("deform-equiv-no", ["deform-equiv", "data/b2_lambda1.alg", "data/zero22.coc", "data/nu_e1e2_e1.coc"], 1,
     ["equivalent: no"]),
    ("extend-build", ["extend-build", "data/b2_lambdam1.alg", "data/zero22.coc", "--rep", "out/m0.rep",
                      "-o", "out/m0_zero.ext"], 0, []),
    ("extend-build-non-cocycle", ["extend-build", "data/b2_lambda1.alg", "data/omega_e1e2e1.coc"] + ADJ, 1,
     ["rejected"]),
    ("extend-analyze", ["extend-analyze", "out/m0_zero.ext", "-o", "out/m0_back.rep"], 0,
     ["induced representation"]),
    ("extend-analyze-data", ["extend-analyze", "data/b2_lambda1_adjoint_h0.ext"], 0, ["nu(0,1)"]),
    ("extend-equiv-same", ["extend-equiv", "data/b2_lambda1_adjoint_zero.ext",
                           "data/b2_lambda1_adjoint_zero.ext"], 0, ["status: equivalent"]),
    ("extend-equiv-class", ["extend-equiv", "data/b2_lambda1_adjoint_zero.ext",
                            "data/b2_lambda1_adjoint_h0.ext"], 1, ["status: not-cohomologous"]),
    ("extend-equiv-companion", ["extend-equiv", "data/b2_lambda1_adjoint_zero.ext",
                                "data/b2_lambda1_adjoint_chi.ext"], 1, ["status: cohomologous-uncertified"]),
    ("extend-equiv-base-mismatch", ["extend-equiv", "data/b2_lambda1_adjoint_zero.ext", "out/m0_zero.ext"], 2,
     []),
    # input and usage errors
    ("missing-file", ["verify", "data/no_such.alg"], 2, []),
    ("rep-and-adjoint", ["cohomology", "data/b2_lambda1.alg", "--adjoint", "--rep", "out/adj1.rep"], 2, []),
    ("no-rep", ["cohomology", "data/b2_lambda1.alg"], 2, []),
    ("wrong-kind", ["cohomology", "data/m0.alg"] + ADJ, 2, []),
    ("cochain-shape", ["is-cocycle", "data/b2_lambda1.alg", "data/zero22.coc", "--rep",
                       "data/zero_module.rep"], 2, []),
    ("unknown-subcommand", ["frobnicate", "data/b2_lambda1.alg"], 2, []),
    ("unknown-flag", ["verify", "--frob", "data/b2_lambda1.alg"], 2, []),
    ("no-subcommand", [], 2, []),
]

BAD_FILES = {
    "diagonal.alg": ('{"kind": "bol", "dimension": 2, "binary": [{"args": [1, 1], "value": {"0": "1"}}]}',
                     "diagonal binary entry"),
    "zero_den.alg": ('{"kind": "bol", "dimension": 2, "binary": [{"args": [0, 1], "value": {"0": "1/0"}}]}',
                     "zero denominator"),
    "float.alg": ('{"kind": "bol", "dimension": 2, "binary": [{"args": [0, 1], "value": {"0": 0.5}}]}',
                  "strings"),
    "reversed.alg": ('{"kind": "bol", "dimension": 2, "binary": [{"args": [1, 0], "value": {"0": "1"}}]}',
                     "i < j"),
    "dup.alg": ('{"kind": "bol", "dimension": 2, "binary": [{"args": [0, 1], "value": {}},'
                ' {"args": [0, 1], "value": {}}]}', "duplicate"),
    "range.alg": ('{"kind": "bol", "dimension": 2, "ternary": [{"args": [0, 1, 5], "value": {}}]}',
                  "out of range"),
    "syntax.alg": ('{"kind": "bol", ', "malformed JSON"),
}


def run(cli, argv, cwd):
    p = subprocess.run([cli] + argv, cwd=cwd, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--data", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--transcript")
    args = ap.parse_args()

    with open(args.schema) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    cli = os.path.abspath(args.cli)

    failures = []
    transcript = []
    with tempfile.TemporaryDirectory() as work:
        shutil.copytree(args.data, os.path.join(work, "data"))
        os.mkdir(os.path.join(work, "out"))
        for name, text in BAD_FILES.items():
            with open(os.path.join(work, "data", name), "w") as fh:
                fh.write(text[0])
        cases = list(CASES) + [("bad-" + n, ["verify", "data/" + n], 2, []) for n in BAD_FILES]

        for name, argv, expect, needles in cases:
            code, out, err = run(cli, argv, work)
            transcript.append(f"$ bolalg {' '.join(argv)}\nexit {code}\n{out}{err}")
            if code != expect:
                failures.append(f"{name}: exit {code}, expected {expect}\n{out}{err}")
            for s in needles:
                if s not in out:
                    failures.append(f"{name}: output lacks {s!r}")
            if expect == 2 and name != "no-subcommand" and not err:
                failures.append(f"{name}: no diagnostic on stderr")
            bad = BAD_FILES.get(argv[-1][5:]) if argv and argv[-1].startswith("data/") else None
            if bad and bad[1] not in err:
                failures.append(f"{name}: diagnostic lacks {bad[1]!r}: {err}")
            if not argv or argv[0] not in [c[1][0] for c in CASES if c[1]] or name.startswith("unknown"):
                continue

            jargv = argv + ["--json"]
            jcode, jout, jerr = run(cli, jargv, work)
            transcript.append(f"$ bolalg {' '.join(jargv)}\nexit {jcode}\n{jout}{jerr}")
            if jcode != code:
                failures.append(f"{name}: --json exit {jcode} differs from {code}")
            if not jout and jcode == 2:
                continue
            try:
                report = json.loads(jout)
            except json.JSONDecodeError as e:
                failures.append(f"{name}: --json output is not JSON: {e}")
                continue
            for e in validator.iter_errors(report):
                failures.append(f"{name}: schema: {e.message} at {list(e.absolute_path)}")
            if report.get("exit_code") != jcode:
                failures.append(f"{name}: exit_code field {report.get('exit_code')} != {jcode}")
            if "report" in report and jcode in (0, 1) and report["report"]["pass"] != (jcode == 0):
                failures.append(f"{name}: report pass flag disagrees with exit code")

            scode, sout, _ = run(cli, jargv + ["--serial"], work)
            if (scode, sout) != (jcode, jout):
                failures.append(f"{name}: serial and parallel reports differ")

        # objects written with -o are canonical: rendering them again changes nothing
        for written, how in (("out/m0_bol.alg", ["maltsev-to-bol", "data/m0.alg"]),
                             ("out/adj1.rep", ["adjoint", "data/b2_lambda1.alg"])):
            with open(os.path.join(work, written)) as fh:
                text = fh.read()
            _, out, _ = run(cli, how, work)
            if out != text:
                failures.append(f"{written}: -o output differs from stdout rendering")
        with open(os.path.join(work, "out/m0.rep")) as a, open(os.path.join(work, "out/m0_back.rep")) as b:
            if a.read() != b.read():
                failures.append("extend-analyze did not recover the representation used by extend-build")
        for f in sorted(os.listdir(os.path.join(work, "out"))):
            with open(os.path.join(work, "out", f)) as fh:
                transcript.append(f"--- out/{f}\n{fh.read()}")

    if args.transcript:
        with open(args.transcript, "w") as fh:
            fh.write("".join(transcript))
    for f in failures:
        print("FAIL " + f)
    print(f"{len(CASES) + len(BAD_FILES)} cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
