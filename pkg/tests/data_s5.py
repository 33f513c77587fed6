"""Frozen reference values for the extended table of marks of S5.

Same layout as data_s4: TABLE[k][i] is the i-th mark on basis class k
in the LABELS order, M[k] the number of simple objects.
"""

LABELS = [
    "1",
    "C2b",
    "C2a",
    "C3",
    "C4",
    "C5",
    "S3",
    "H6",
    "C6",
    "H10",
    "V1",
    "V2",
    "H20",
    "D8",
    "A4",
    "S3xS2",
    "S4",
    "A5",
    "S5",
    "V1'",
    "V2'",
    "D8'",
    "A4'",
    "S3xS2'",
    "S4'",
    "A5'",
    "S5'",
]

M = {
    "1": 1,
    "C2b": 2,
    "C2a": 2,
    "C3": 3,
    "C4": 4,
    "C5": 5,
    "S3": 3,
    "H6": 3,
    "C6": 6,
    "H10": 4,
    "V1": 4,
    "V2": 4,
    "H20": 5,
    "D8": 5,
    "A4": 4,
    "S3xS2": 6,
    "S4": 5,
    "A5": 5,
    "S5": 7,
    "V1'": 1,
    "V2'": 1,
    "D8'": 2,
    "A4'": 3,
    "S3xS2'": 3,
    "S4'": 3,
    "A5'": 4,
    "S5'": 5,
}

TABLE = {
    "1": [120, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C2b": [60, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C2a": [60, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C3": [40, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C4": [30, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C5": [24, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "S3": [20, 0, 6, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "H6": [20, 4, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "C6": [20, 0, 2, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "H10": [12, 4, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "V1": [30, 2, 6, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0],
    "V2": [30, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0],
    "H20": [6, 2, 0, 0, 2, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    "D8": [15, 3, 3, 0, 1, 0, 0, 0, 0, 0, 1, 3, 0, 1, 0, 0, 0, 0, 0, 1, 3, 1, 0, 0, 0, 0, 0],
    "A4": [10, 2, 0, 4, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0],
    "S3xS2": [10, 2, 4, 1, 0, 0, 1, 1, 1, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0],
    "S4": [5, 1, 3, 2, 1, 0, 2, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0],
    "A5": [2, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0, 2, 0, 0, 2, 0, 0, 2, 0, 2, 0, 0, 2, 0],
    "S5": [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    "V1'": [30, 2, 6, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0],
    "V2'": [30, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, -6, 0, 0, 0, 0, 0, 0],
    "D8'": [15, 3, 3, 0, 1, 0, 0, 0, 0, 0, 1, 3, 0, 1, 0, 0, 0, 0, 0, -1, -3, -1, 0, 0, 0, 0, 0],
    "A4'": [10, 2, 0, 4, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, -2, 0, -2, 0, 0, 0, 0],
    "S3xS2'": [10, 2, 4, 1, 0, 0, 1, 1, 1, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, -2, 0, 0, 0, -1, 0, 0, 0],
    "S4'": [5, 1, 3, 2, 1, 0, 2, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, -1, -1, -1, -1, 0, -1, 0, 0],
    "A5'": [2, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0, 2, 0, 0, 2, 0, 0, -2, 0, -2, 0, 0, -2, 0],
    "S5'": [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1],
}
