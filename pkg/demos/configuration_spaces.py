"""Walk from Stirling numbers to the equivariant configuration series."""

from configserre import arnold, gl2
from configserre.configspace import SerreInput, config_serre, phi_polynomials, render_phi
from configserre.partitions import partitions_of, stirling_matrices
from configserre.symfun import p_to_schur

# Stirling numbers of both kinds are inverse matrices
mats = stirling_matrices(6)
for row in mats.first:
    print(" ".join(f"{x:5}" for x in row))
print("s.S = I:", mats.product() == [[int(i == j) for j in range(6)] for i in range(6)])

# the NBC basis of H*(F(C,4)) has |s(4,k)| elements in degree 4-k
for k in range(4, 0, -1):
    print(f"H^{4 - k}(F(C,4)): {len(arnold.os_basis(4, k))} monomials")

# S_4 acting on the top degree: traces by cycle type
chi = arnold.character_of(4, 1)
print({mu: chi(mu) for mu in partitions_of(4)})

# unit coefficients, E(n) = 3: the series is (1 + p_1)^3
series = config_serre(SerreInput.unit(3, 4), 4)
print(p_to_schur(series))

# over the free lambda-ring the Schur coefficients are universal polynomials
phis = phi_polynomials(3)
for lam, v in phis.items():
    print(lam, render_phi(v))

# with E = 1 - H + L (an elliptic curve in the Hodge ring)
series = config_serre(SerreInput.unit(gl2.E_class(), 3), 3)
for n, coeffs in p_to_schur(series).items():
    for lam, c in coeffs.items():
        if n:
            print(lam, gl2.render_hpoly(gl2.h_basis(c)))
