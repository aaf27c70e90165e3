"""Residues in Q(zeta_12) and the generating series of M_1,n / S_n."""

from configserre.moduli import DON_POINTS, quotient_series, verify_don

rep = verify_don(12)
for name, r in sorted(rep.residues.items()):
    print(f"Res at {name:>10} = {r}")
print("simple poles:", rep.simple_poles)
print("(-1)^n (n-1)!/12:", {n: got for n, (got, want) in rep.euler.items()})

q = quotient_series(12)
print("Euler series:", q.euler[1:])
for name, ok in q.checks.items():
    print("ok  " if ok else "FAIL", name)
