"""
Crushing a normal sphere or disc: the size-reducing engine behind
handlebody recognition.

Every tetrahedron containing a quadrilateral disc is destroyed; the rest
survive untouched.  Face gluings that used to pass through a destroyed
tetrahedron are rerouted through it: inside a destroyed tetrahedron whose
quadrilateral separates the vertex pairs {a,b} and {c,d}, the flattening
identifies the faces opposite c and d (via the transposition swapping c
and d) and likewise the faces opposite a and b.
"""
from . import perm4
from .errors import NotSphereOrDisc, TrivialSurface
from .normal import analyze_surface, quad_coord
from .triangulation import Triangulation


class CrushResult:
    __slots__ = ("result", "size_before", "size_after")

    def __init__(self, result, size_before, size_after):
        self.result = result
        self.size_before = size_before
        self.size_after = size_after

    def __repr__(self):
        return "CrushResult({} -> {})".format(self.size_before,
                                              self.size_after)


def crush_surface(tri, vector):
    """
    Crush a connected normal sphere or properly embedded disc carrying at
    least one quadrilateral.  Returns a CrushResult whose triangulation
    has strictly fewer tetrahedra (and may be empty or disconnected).
    """
    report = analyze_surface(tri, vector)
    if not report.has_quad:
        raise TrivialSurface(
            "crushing a vertex-linking surface would change nothing")
    if not (report.connected and (report.is_sphere() or report.is_disc())):
        raise NotSphereOrDisc(
            "crushing needs a connected normal sphere or disc, got {}"
            .format(report.kind))

    quad_type = {}
    for t in range(tri.size):
        for k in range(3):
            if vector[quad_coord(t, k)]:
                quad_type[t] = k
                break

    survivors = [t for t in range(tri.size) if t not in quad_type]
    new_index = {t: i for i, t in enumerate(survivors)}

    def partner_face(t, f):
        k = quad_type[t]
        one = {0, k + 1}
        side = one if f in one else {1, 2, 3} - {k + 1}
        return next(x for x in side if x != f)

    def route(start_face, entry):
        t2, g = entry
        acc = g
        cur = (t2, perm4.apply(g, start_face))
        visited = set()
        while cur[0] in quad_type:
            if cur in visited:
                raise NotSphereOrDisc(
                    "crushing produced a closed flattened chain; the "
                    "surface was not a valid crushing target")
            visited.add(cur)
            q, f = cur
            pf = partner_face(q, f)
            acc = perm4.mul(perm4.transposition(f, pf), acc)
            nxt = tri.gluings[q][pf]
            if nxt is None:
                return None
            t3, g3 = nxt
            acc = perm4.mul(g3, acc)
            cur = (t3, perm4.apply(g3, pf))
        return (cur[0], acc)

    rows = []
    for t in survivors:
        row = []
        for f, entry in enumerate(tri.gluings[t]):
            if entry is None:
                row.append(None)
                continue
            if entry[0] not in quad_type:
                row.append((new_index[entry[0]], entry[1]))
                continue
            routed = route(f, entry)
            if routed is None:
                row.append(None)
            else:
                t3, acc = routed
                row.append((new_index[t3], acc))
        rows.append(row)
    result = Triangulation(tuple(tuple(r) for r in rows))
    assert result.size < tri.size
    return CrushResult(result, tri.size, result.size)
