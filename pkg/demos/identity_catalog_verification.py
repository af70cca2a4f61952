"""
Verifying the catalog of two-term dilogarithm identities
========================================================

Each sporadic system comes with an exact identity of the form

    p * L(arg1) + q * L(arg2) = target,

where the arguments are real algebraic numbers given by closed-form
expressions (nested square roots, named polynomial roots) and the
target is rational.  The catalog ships in a small text format; this
script parses it, verifies every entry at binary64 and at elevated
precision, and cross-checks entries against the fixed-point systems
they belong to.
"""

from dilogtba import cross_check_tba, load_catalog, serialize_catalog, verify

# Load and survey.  Entries pair a rational combination of L values
# with a rational target; names describe the algebraic flavor of the
# arguments.
entries = load_catalog()
print(f"catalog holds {len(entries)} identities")
print()
print(f"{'name':<24} {'target':>8} {'residual (b64)':>15} {'residual (mp)':>15}")
for entry in entries:
    r64 = verify(entry)
    rmp = verify(entry, precision=1e-20)
    print(f"{entry.name:<24} {str(entry.target):>8} {r64:>15.2e} {rmp:>15.2e}")

# One entry in detail: its terms are (coefficient, expression) pairs,
# with expressions in a tiny arithmetic grammar including sqrt and
# named constants.
entry = next(e for e in entries if e.matrix is not None)
print()
print(f"entry {entry.name!r} in detail")
for coeff, expr in entry.terms:
    print(f"  {coeff} * L({expr})")
print(f"  = {entry.target}")

# Cross-check against the attached system: the identity's arguments
# must coincide with the solved (x, y), and its target with c[A].
res = cross_check_tba(entry)
print()
print(f"cross-check against matrix {entry.matrix}")
print(f"  coordinate distance = {res.coordinate_distance:.2e}")
print(f"  c residual          = {res.c_residual:.2e}")

# The catalog format round-trips exactly: parsing the serialization
# reproduces the entries byte for byte.
text = serialize_catalog(entries)
assert serialize_catalog(load_catalog()) == text
print()
print(f"serialized catalog: {len(text.splitlines())} lines, round-trip exact")
