"""Two different 15-point sets with identical difference statistics.

The canonical planar pair F1, F2 is genuinely different as sets, yet every
difference vector occurs equally often in both.  Any measurement that only
sees pair differences (diffraction among them) cannot tell them apart.
"""

from homometry import are_homometric, canonical_pair, difference_multiset, transform

f1, f2 = canonical_pair()

print("F1:", " ".join(str(p) for p in f1))
print("F2:", " ".join(str(p) for p in f2))
print()
print("as sets        :", "equal" if set(f1.points) == set(f2.points) else "different")
print("homometric     :", are_homometric(f1, f2))

m1 = difference_multiset(f1)
m2 = difference_multiset(f2)
print("difference maps:", "identical" if m1 == m2 else "different")
print("total pairs    :", m1.total(), "(15^2)")
print("zero vector    :", m1[(0, 0)], "(once per point)")

print()
print("a few shared multiplicities:")
for z in [(1, 0), (0, 1), (1, 1), (2, 3), (4, 5)]:
    print(f"  difference {z}: {m1[z]} in F1, {m2[z]} in F2")

print()
print("translation and inversion preserve homometry:")
moved = transform(f2, (10, -3), invert=True)
print("  F1 vs (10,-3) - F2:", are_homometric(f1, moved))
