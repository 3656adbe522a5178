"""
Permutations of {0,1,2,3}, represented by index into a fixed table of all 24.

The table lists permutations in lexicographic order of their image tuples.
The ordering is load-bearing: isomorphism signatures encode each gluing
permutation as its index in this table.
"""
from itertools import permutations

# Lexicographic ordering of all permutations, as image tuples.
S4 = tuple(permutations(range(4)))

S4_INDEX = {p: i for i, p in enumerate(S4)}

IDENTITY = 0


def _sign(p):
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


SIGN = tuple(_sign(p) for p in S4)

# MUL[a][b] is the index of the composition "apply b, then a".
MUL = tuple(
    tuple(S4_INDEX[tuple(pa[pb[x]] for x in range(4))] for pb in S4)
    for pa in S4
)

INV = tuple(
    S4_INDEX[tuple(S4[a].index(x) for x in range(4))] for a in range(24)
)


def from_images(images):
    """Index of the permutation sending i to images[i]."""
    return S4_INDEX[tuple(images)]


def transposition(a, b):
    """Index of the permutation swapping a and b."""
    images = list(range(4))
    images[a], images[b] = images[b], images[a]
    return S4_INDEX[tuple(images)]


def apply(p, x):
    """Image of x under permutation index p."""
    return S4[p][x]


def mul(a, b):
    """Composition: apply b first, then a."""
    return MUL[a][b]


def inv(a):
    return INV[a]


# Edges of a tetrahedron, numbered 0..5 by their vertex pairs.
EDGE_VERTS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

EDGE_NUM = {}
for _i, (_u, _v) in enumerate(EDGE_VERTS):
    EDGE_NUM[(_u, _v)] = _i
    EDGE_NUM[(_v, _u)] = _i

# Vertices of face f are all vertices other than f.
FACE_VERTS = tuple(tuple(v for v in range(4) if v != f) for f in range(4))

# The two vertices not on edge e, in ascending order.
EDGE_COVERTS = tuple(
    tuple(v for v in range(4) if v not in EDGE_VERTS[e]) for e in range(6)
)
