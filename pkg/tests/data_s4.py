"""Frozen reference values for the extended table of marks of S4.

Rows and mark columns share the order in LABELS.  TABLE[k][i] is the
value of the i-th mark on the basis class k; M[k] is its number of
simple objects.  Checked cell by cell against the mark formula, the
ring homomorphism property and the sign behaviour of primed classes.
"""

LABELS = [
    "1",
    "C2b",
    "C2a",
    "C3",
    "C4",
    "S3",
    "V1",
    "V2",
    "D8",
    "A4",
    "S4",
    "V1'",
    "V2'",
    "D8'",
    "A4'",
    "S4'",
]

M = {
    "1": 1,
    "C2b": 2,
    "C2a": 2,
    "C3": 3,
    "C4": 4,
    "S3": 3,
    "V1": 4,
    "V2": 4,
    "D8": 5,
    "A4": 4,
    "S4": 5,
    "V1'": 1,
    "V2'": 1,
    "D8'": 2,
    "A4'": 3,
    "S4'": 3,
}

TABLE = {
    "1": [24, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C2b": [12, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C2a": [12, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C3": [8, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C4": [6, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "S3": [4, 0, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "V1": [6, 2, 2, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0],
    "V2": [6, 6, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 6, 0, 0, 0],
    "D8": [3, 3, 1, 0, 1, 0, 1, 3, 1, 0, 0, 1, 3, 1, 0, 0],
    "A4": [2, 2, 0, 2, 0, 0, 0, 2, 0, 2, 0, 0, 2, 0, 2, 0],
    "S4": [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    "V1'": [6, 2, 2, 0, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 0, 0],
    "V2'": [6, 6, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, -6, 0, 0, 0],
    "D8'": [3, 3, 1, 0, 1, 0, 1, 3, 1, 0, 0, -1, -3, -1, 0, 0],
    "A4'": [2, 2, 0, 2, 0, 0, 0, 2, 0, 2, 0, 0, -2, 0, -2, 0],
    "S4'": [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1],
}
