"""Tree and trip sequences of (2^(-1/3), 4^(-1/3)) under the triangle map."""

from tripmaps import NumberField, parse_polynomial, tree_sequence, trip_sequence

k = NumberField.from_polynomial(parse_polynomial("x^3-2"), 1, 2)
a = k.gen()
point = (1 / a, 1 / (a * a))

print("point  ", tuple(float(x) for x in point))
print("tree   ", tree_sequence(point, "(e,e,e)", 12).bits)
seq = trip_sequence(point, "(e,e,e)", 8)
print("trip   ", seq.digits)
for digit, image in zip(seq.digits, seq.orbit):
    print(f"  k={digit}: ({image[0]}, {image[1]})")
