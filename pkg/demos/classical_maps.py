"""Classical maps against their TRIP decision trees on random rational points."""

from tripmaps import ClassicalMapId, guting_matrix_identity, verify_equivalence

for map_id in ClassicalMapId:
    r = verify_equivalence(map_id, 500, seed=1)
    print(f"{map_id.value:18s} samples={r.samples} mismatches={len(r.mismatches)}")

ok = all(guting_matrix_identity(a, b) for a in range(1, 8) for b in range(7))
print("Guting matrix identity for a<=7, b<=6:", ok)
