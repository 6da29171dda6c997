"""
Order types and the canonical array
===================================

Rank tuples pick one representative per order type.  Grouping F_kp by
order type gives the canonical array T; substituting the members of E gives
T^k_E, which lists E^k one order type per row.
"""

from lattice_exit import canonical_array, enumerate_OT, instantiate, rank_tuple

print(rank_tuple((3, 8, 5, 3, 8)))

for k in range(2, 5):
    print(f"k={k}: {len(enumerate_OT(k, k))} order types")

T = canonical_array(2, 3)
for row in T.rows:
    print(" ".join("".join(map(str, f)) for f in row))

X = instantiate(T, [4, 7, 11])
for row in X:
    print(row)

# a row of the k=3, p=4 array
T3 = canonical_array(3, 4)
print([row for row in T3.rows if row[0] == (1, 2, 0)][0])
