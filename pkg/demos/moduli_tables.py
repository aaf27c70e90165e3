"""From the level-N torsor quotient down to level one."""

from configserre import gl2, reference
from configserre.moduli import level_n_table, m1n_row, m1n_table
from configserre.motive import level1

table = level_n_table(4)
for n, row in table.items():
    for lam, hp in row.items():
        print(n, lam, gl2.render_hpoly(hp), "->", level1(hp))

for row in m1n_table(6):
    print(f"M_1,{row.n}: {row.nonequivariant}   chi = {row.euler}")

# the first cusp form shows up at n = 11
row = m1n_row(11)
print(row.nonequivariant)
print("chi =", row.euler)

# the printed n = 5 level-N row against two identities any correct row satisfies
level_one = {r.n: r.equivariant for r in reference.published_m1n()}
printed = reference.audit_level_n_row(5, reference.published_level_n()[5], level_one[5])
computed = reference.audit_level_n_row(5, level_n_table(5)[5], level_one[5])
print("printed row consistent:", printed.consistent)
print("computed row consistent:", computed.consistent)
for m in printed.level_one_mismatches:
    print(f"  {m.where}: level-one table {m.printed}, image of the printed row {m.computed}")
