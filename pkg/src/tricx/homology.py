"""
First homology of a triangulation, via exact integer Smith normal form.

The chain complex is the one induced by the cell structure of the
triangulation itself (vertex, edge and face classes, tetrahedra).  For
triangulations carrying ideal vertices, callers are expected to go through
first_homology(), which truncates before building the complex so that the
answer describes the compact manifold with boundary.
"""
from math import gcd

from . import perm4


class HomologyGroup:
    """A finitely generated abelian group in invariant factor form."""

    __slots__ = ("rank", "torsion")

    def __init__(self, rank, torsion):
        self.rank = rank
        self.torsion = tuple(torsion)

    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def is_free_of_rank(self, g):
        return self.rank == g and not self.torsion

    def __eq__(self, other):
        return (isinstance(other, HomologyGroup)
                and self.rank == other.rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def __repr__(self):
        parts = ["Z"] * self.rank + ["Z/{}".format(d) for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_invariant_factors(rows):
    """
    Invariant factors of an integer matrix (list of lists, consumed).

    Returns the list of nonzero diagonal entries of the Smith normal form,
    normalised so that each divides the next.  Pivots are chosen by minimal
    absolute value to keep intermediate entries small.
    """
    mat = [list(r) for r in rows]
    n_rows = len(mat)
    n_cols = len(mat[0]) if mat else 0
    factors = []
    top = 0
    while True:
        # Locate a minimal-magnitude nonzero pivot in the working block.
        pivot = None
        best = None
        for i in range(top, n_rows):
            row = mat[i]
            for j in range(top, n_cols):
                v = row[j]
                if v:
                    a = v if v > 0 else -v
                    if best is None or a < best:
                        best = a
                        pivot = (i, j)
                        if a == 1:
                            break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        mat[top], mat[pi] = mat[pi], mat[top]
        if pj != top:
            for row in mat:
                row[top], row[pj] = row[pj], row[top]

        while True:
            p = mat[top][top]
            # Clear the pivot column.
            dirty = False
            for i in range(top + 1, n_rows):
                v = mat[i][top]
                if v:
                    q = v // p
                    if q:
                        prow = mat[top]
                        irow = mat[i]
                        for j in range(top, n_cols):
                            irow[j] -= q * prow[j]
                    if mat[i][top]:
                        # Remainder left: swap up the smaller entry.
                        mat[top], mat[i] = mat[i], mat[top]
                        dirty = True
                        break
            if dirty:
                continue
            # Clear the pivot row.
            for j in range(top + 1, n_cols):
                v = mat[top][j]
                if v:
                    q = v // p
                    if q:
                        for i in range(top, n_rows):
                            mat[i][j] -= q * mat[i][top]
                    if mat[top][j]:
                        for i in range(n_rows):
                            mat[i][top], mat[i][j] = mat[i][j], mat[i][top]
                        dirty = True
                        break
            if dirty:
                continue
            break
        factors.append(abs(mat[top][top]))
        top += 1
        if top >= n_rows or top >= n_cols:
            break

    # Enforce the divisibility chain.
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            if b % a:
                g = gcd(a, b)
                factors[i], factors[i + 1] = g, a * b // g
                changed = True
    return factors


def _boundary_maps(tri):
    """The boundary maps d1 (edges -> vertices) and d2 (faces -> edges)."""
    n_v = len(tri.vertices)
    n_e = len(tri.edges)
    n_f = len(tri.faces)

    d1 = [[0] * n_e for _ in range(n_v)]
    for e in tri.edges:
        t, en = e.germs[0]
        u, v = perm4.EDGE_VERTS[en]
        d1[tri.vertex_class(t, v)][e.index] += 1
        d1[tri.vertex_class(t, u)][e.index] -= 1

    d2 = [[0] * n_f for _ in range(n_e)]
    for face in tri.faces:
        t, f = face.germs[0]
        v0, v1, v2 = perm4.FACE_VERTS[f]
        for coeff, (a, b) in ((1, (v1, v2)), (-1, (v0, v2)), (1, (v0, v1))):
            en = perm4.EDGE_NUM[(a, b)]
            sign = tri.edge_sign(t, en)
            d2[tri.edge_class(t, en)][face.index] += coeff * sign
    return d1, d2


def homology_of_complex(tri):
    """
    H1 of the triangulation's own cell complex.

    Only meaningful as manifold homology when the triangulation has no
    ideal vertices; first_homology() handles the truncation.
    """
    d1, d2 = _boundary_maps(tri)
    n_e = len(tri.edges)
    rank_d1 = len(smith_invariant_factors(d1))
    factors_d2 = smith_invariant_factors(d2)
    rank = n_e - rank_d1 - len(factors_d2)
    torsion = [d for d in factors_d2 if d > 1]
    return HomologyGroup(rank, torsion)
