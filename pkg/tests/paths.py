"""The named facet loops on the 3x3 torus triangulations."""

BASE = (1, 2, 4)
P = [(1, 2, 4), (2, 4, 5), (4, 5, 7), (5, 7, 8), (1, 7, 8), (1, 2, 8), (1, 2, 4)]
Q = [(1, 2, 4), (2, 4, 5), (2, 3, 5), (3, 5, 6), (1, 3, 6), (1, 4, 6), (1, 2, 4)]
Q_PRIME = [(1, 2, 4), (2, 4, 5), (2, 5, 6), (2, 3, 6), (1, 3, 6), (1, 4, 6), (1, 2, 4)]
