"""
A tour of the command-line interface
====================================

Everything the library does is reachable from the dilogtba console
script: solving, classification, bounds, duality, recognition, search,
identity verification, q-series expansion, and c_eff estimation.  Text
output is human-oriented; --json produces byte-deterministic documents
that validate against the schema shipped in the package data.

This script drives the CLI in-process (no subprocesses) and shows a
few representative invocations with their output.
"""

import contextlib
import io

from dilogtba.cli import parse_and_dispatch


def run(*args):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = parse_and_dispatch(list(args))
    body = out.getvalue().rstrip("\n")
    print(f"$ dilogtba {' '.join(args)}")
    for line in body.splitlines():
        print(f"  {line}")
    print(f"  [exit {code}]")
    print()


# Solve a rank-2 system and recognize its c.
run("solve", "-A", "2", "1", "1")

# The same system as JSON (deterministic, schema-validated output).
run("solve", "-A", "2", "1", "1", "--json")

# A rank-1 system, entered as a single entry; "inf" freezes x at 0.
run("solve", "-A", "1/4")

# Exact classification and bounds, no solving involved.
run("classify", "-A", "1", "1/4", "1/16")
run("bounds", "-A", "2", "1", "1")

# Duality: the dual matrix, both c values, and their sum.
run("dual", "-A", "2", "1", "1")

# Recognize a number against the charge spectra.
run("recognize", "4/7")
run("recognize", "0.7142857142857143")

# Verify the identity catalog (exit code 1 would flag any failure).
run("verify-identities", "--precision", "1e-12")

# Expand a fermionic form and estimate its effective central charge.
run("expand", "chi_2_5", "--order", "3")
run("ceff-estimate", "chi_2_5")
