"""
Normal surfaces in standard (triangle + quadrilateral) coordinates.

A surface in an n-tetrahedron triangulation is a vector of 7n non-negative
integers: per tetrahedron, four triangle counts (one per vertex) followed
by three quadrilateral counts (one per separating pair).  Quadrilateral
type k separates vertices {0, k+1} from the other two.

Vertex normal surfaces are enumerated by an incremental double
description sweep over the matching equations, pruning rays that break
the quadrilateral constraints after every step; arithmetic is exact
throughout.  Surface analysis builds the surface's cell complex piece by
piece, so Euler characteristic, connectedness, orientability and boundary
curves all come from first principles.
"""
from math import gcd

from . import perm4
from .errors import (
    IdealVertexPresent,
    IncompatibleVector,
    QuadConstraintViolation,
)

# Quadrilateral type separating a given pair of vertices.
_QUAD_OF_PAIR = {}
for _k, (_a, _b) in enumerate(((0, 1), (0, 2), (0, 3))):
    _pair = frozenset((_a, _b))
    _QUAD_OF_PAIR[_pair] = _k
    _QUAD_OF_PAIR[frozenset(range(4)) - _pair] = _k

QUAD_PAIRS = (frozenset((0, 1)), frozenset((0, 2)), frozenset((0, 3)))


def quad_type_separating(a, b):
    return _QUAD_OF_PAIR[frozenset((a, b))]


def tri_coord(t, v):
    return 7 * t + v


def quad_coord(t, k):
    return 7 * t + 4 + k


class MatchingSystem:
    """The matching equations of a triangulation, with quad bookkeeping."""

    __slots__ = ("tri", "dimension", "equations")

    def __init__(self, tri, dimension, equations):
        self.tri = tri
        self.dimension = dimension
        self.equations = equations

    def residual(self, vector):
        return [sum(c * x for c, x in zip(eq, vector))
                for eq in self.equations]


def matching_system(tri):
    """Triangle-quadrilateral matching equations, three per internal face."""
    if tri.has_ideal_vertices():
        raise IdealVertexPresent(
            "normal coordinates need a triangulation with real boundary "
            "only")
    dimension = 7 * tri.size
    equations = []
    for face in tri.faces:
        if face.is_boundary:
            continue
        t, f = face.germs[0]
        t2, g = tri.gluings[t][f]
        f2 = perm4.apply(g, f)
        for v in perm4.FACE_VERTS[f]:
            eq = [0] * dimension
            eq[tri_coord(t, v)] += 1
            eq[quad_coord(t, quad_type_separating(v, f))] += 1
            v2 = perm4.apply(g, v)
            eq[tri_coord(t2, v2)] -= 1
            eq[quad_coord(t2, quad_type_separating(v2, f2))] -= 1
            equations.append(eq)
    return MatchingSystem(tri, dimension, equations)


def satisfies_quad_constraints(tri_size, vector):
    for t in range(tri_size):
        nonzero = sum(1 for k in range(3) if vector[quad_coord(t, k)])
        if nonzero > 1:
            return False
    return True


def _primitive(vector):
    g = 0
    for x in vector:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in vector)
    return tuple(vector)


def enumerate_vertex_surfaces(tri):
    """
    All vertex normal surfaces: the admissible extreme rays of the
    matching cone, as minimal integer vectors, sorted lexicographically.

    Incremental double description with quad-constraint pruning at every
    step; adjacency of ray pairs is decided combinatorially on zero sets,
    with the usual dimension-count screen.
    """
    system = matching_system(tri)
    dim = system.dimension
    n = tri.size

    rays = []
    for i in range(dim):
        vec = [0] * dim
        vec[i] = 1
        zero = ((1 << dim) - 1) ^ (1 << i)
        rays.append((tuple(vec), zero))

    # Sparse form: each matching equation touches only four coordinates.
    sparse = [tuple((j, c) for j, c in enumerate(eq) if c)
              for eq in system.equations]
    processed = 0
    while sparse:
        # Process equations cheapest-first to keep the cone small.
        best = None
        best_cost = None
        best_dots = None
        for idx, eq in enumerate(sparse):
            dots = []
            pos = neg = 0
            for vec, _ in rays:
                d = 0
                for j, c in eq:
                    d += c * vec[j]
                dots.append(d)
                if d > 0:
                    pos += 1
                elif d < 0:
                    neg += 1
            cost = pos * neg
            if best_cost is None or cost < best_cost:
                best, best_cost, best_dots = idx, cost, dots
                if cost == 0:
                    break
        sparse.pop(best)
        dots = best_dots

        pos, neg, keep = [], [], []
        for (vec, zero), d in zip(rays, dots):
            if d > 0:
                pos.append((vec, zero, d))
            elif d < 0:
                neg.append((vec, zero, d))
            else:
                keep.append((vec, zero))
        new_rays = list(keep)
        all_zeros = [z for _, z in rays]
        min_meet = dim - 2 - processed
        for vec_p, zero_p, dp in pos:
            for vec_n, zero_n, dn in neg:
                meet = zero_p & zero_n
                if meet.bit_count() < min_meet:
                    continue
                adjacent = True
                for z in all_zeros:
                    if (z & meet) == meet and z != zero_p and z != zero_n:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [dp * xn - dn * xp
                         for xp, xn in zip(vec_p, vec_n)]
                combo = _primitive(combo)
                if not satisfies_quad_constraints(n, combo):
                    continue
                zero = 0
                for i, x in enumerate(combo):
                    if not x:
                        zero |= 1 << i
                new_rays.append((combo, zero))
        # Deduplicate (identical rays can arise from distinct pairs).
        seen = set()
        rays = []
        for vec, zero in new_rays:
            if vec not in seen:
                seen.add(vec)
                rays.append((vec, zero))
        processed += 1

    # Safety net: pruning admissibility mid-sweep can in principle let a
    # non-extreme combination slip through the combinatorial adjacency
    # test, so certify extremality of every output algebraically.
    out = [vec for vec, _ in rays
           if _is_extreme_support(system.equations, vec)]
    return sorted(out)


def _is_extreme_support(equations, vec):
    """A non-negative solution is extreme iff the matching equations
    restricted to its support have a one-dimensional kernel."""
    support = [j for j, x in enumerate(vec) if x]
    if len(support) == 1:
        return True
    from fractions import Fraction
    rows = []
    for eq in equations:
        row = [Fraction(eq[j]) for j in support]
        if any(row):
            rows.append(row)
    nc = len(support)
    rank = 0
    for c in range(nc):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return nc - rank == 1


def haken_sum(u, v):
    """Coordinate-wise sum, defined only when the quadrilateral
    constraints still hold."""
    if len(u) != len(v):
        raise IncompatibleVector("vectors live in different coordinate "
                                 "spaces")
    total = tuple(a + b for a, b in zip(u, v))
    if not satisfies_quad_constraints(len(total) // 7, total):
        raise QuadConstraintViolation(
            "summands carry different quadrilateral types in one "
            "tetrahedron")
    return total


def double(v):
    return haken_sum(v, v)


class SurfaceReport:
    """What a normal coordinate vector looks like as a surface."""

    __slots__ = ("euler", "connected", "orientable", "boundary_curves",
                 "kind", "vertex_linking", "has_quad", "components")

    def __init__(self, euler, connected, orientable, boundary_curves,
                 kind, vertex_linking, has_quad, components):
        self.euler = euler
        self.connected = connected
        self.orientable = orientable
        self.boundary_curves = boundary_curves
        self.kind = kind
        self.vertex_linking = vertex_linking
        self.has_quad = has_quad
        self.components = components

    def is_sphere(self):
        return self.kind == "Sphere"

    def is_disc(self):
        return self.kind == "Disc"

    def __repr__(self):
        return ("SurfaceReport(kind={}, euler={}, connected={}, "
                "orientable={}, boundary={})".format(
                    self.kind, self.euler, self.connected,
                    self.orientable, self.boundary_curves))


def _check_admissible(tri, vector):
    if len(vector) != 7 * tri.size:
        raise IncompatibleVector("vector has wrong dimension")
    if any(x < 0 for x in vector):
        raise IncompatibleVector("negative coordinates")
    system = matching_system(tri)
    if any(r != 0 for r in system.residual(vector)):
        raise IncompatibleVector("matching equations violated")
    if not satisfies_quad_constraints(tri.size, vector):
        raise IncompatibleVector("quadrilateral constraints violated")


def _edge_crossings(tri, vector, t, u, v):
    """Pieces crossing edge (u, v) of tetrahedron t, ordered from u."""
    out = []
    for i in range(vector[tri_coord(t, u)]):
        out.append(("tri", u, i + 1))
    k = None
    for kk in range(3):
        if vector[quad_coord(t, kk)]:
            pair = QUAD_PAIRS[kk]
            if (u in pair) != (v in pair):
                k = kk
            break
    if k is not None:
        q = vector[quad_coord(t, k)]
        if u in QUAD_PAIRS[k]:
            order = range(1, q + 1)
        else:
            order = range(q, 0, -1)
        for j in order:
            out.append(("quad", k, j))
    for i in range(vector[tri_coord(t, v)], 0, -1):
        out.append(("tri", v, i))
    return out


def _corner_id(tri, vector, t, u, v, piece):
    """
    Ids of the surface point where a piece crosses edge (u, v): a global
    one (edge class, position along the class) and a germ-level one
    (tetrahedron, edge number, position from the lower vertex label).
    """
    en = perm4.EDGE_NUM[(u, v)]
    crossings = _edge_crossings(tri, vector, t, u, v)
    pos = crossings.index(piece) + 1
    cls = tri.edge_class(t, en)
    lo = perm4.EDGE_VERTS[en][0]
    germ_from_lo = pos if u == lo else len(crossings) + 1 - pos
    if tri.edge_sign(t, en) == 1:
        class_pos = germ_from_lo
    else:
        class_pos = len(crossings) + 1 - germ_from_lo
    return (cls, class_pos), (t, en, germ_from_lo, len(crossings))


def _transport_germ_corner(g, t2, germ_corner):
    """Carry a germ-level crossing id across a face gluing into t2."""
    _, en, from_lo, count = germ_corner
    u, v = perm4.EDGE_VERTS[en]
    u2, v2 = perm4.apply(g, u), perm4.apply(g, v)
    en2 = perm4.EDGE_NUM[(u2, v2)]
    if u2 < v2:
        pos2 = from_lo
    else:
        pos2 = count + 1 - from_lo
    return (t2, en2, pos2, count)


def analyze_surface(tri, vector):
    """
    Build the surface's cell complex and report its topology.

    The complex has one 2-cell per elementary disc, one 1-cell per arc
    class in the faces, and one 0-cell per point where the surface
    crosses an edge of the triangulation.
    """
    _check_admissible(tri, vector)
    n = tri.size
    has_quad = any(vector[quad_coord(t, k)]
                   for t in range(n) for k in range(3))

    pieces = []
    for t in range(n):
        for v in range(4):
            for i in range(vector[tri_coord(t, v)]):
                pieces.append((t, "tri", v, i + 1))
        for k in range(3):
            for j in range(vector[quad_coord(t, k)]):
                pieces.append((t, "quad", k, j + 1))
    if not pieces:
        return SurfaceReport(0, False, True, 0, "Empty", False, False, 0)
    piece_index = {p: i for i, p in enumerate(pieces)}

    # Arc slots: (t, f, corner v, position) -> (piece, corner ids in the
    # piece's own traversal direction, germ-level endpoint ids likewise).
    arc_owner = {}

    def corner(t, u, v, piece_key):
        return _corner_id(tri, vector, t, u, v, piece_key)

    for p in pieces:
        t = p[0]
        if p[1] == "tri":
            _, _, v, i = p
            others = [w for w in range(4) if w != v]
            key = ("tri", v, i)
            cs = {w: corner(t, v, w, key) for w in others}
            # Boundary cycle: corners at others[0] -> others[1] -> others[2].
            for a, b in ((others[0], others[1]), (others[1], others[2]),
                         (others[2], others[0])):
                f = next(x for x in others if x not in (a, b))
                arc_owner[(t, f, v, i)] = (piece_index[p],
                                           cs[a][0], cs[b][0],
                                           cs[a][1], cs[b][1])
        else:
            _, _, k, j = p
            a0, a1 = sorted(QUAD_PAIRS[k])
            b0, b1 = sorted(frozenset(range(4)) - QUAD_PAIRS[k])
            key = ("quad", k, j)
            cyc = [(a0, b0), (a0, b1), (a1, b1), (a1, b0)]
            cs = [corner(t, u, v, key) for u, v in cyc]
            q = vector[quad_coord(t, k)]
            for idx in range(4):
                (u1, v1) = cyc[idx]
                (u2, v2) = cyc[(idx + 1) % 4]
                f = next(x for x in range(4)
                         if x not in {u1, v1} | {u2, v2})
                # Arc in face f cuts the corner of f separated from the
                # other two: position from that corner's vertex.
                fverts = set(perm4.FACE_VERTS[f])
                alone = next(x for x in fverts
                             if (x in QUAD_PAIRS[k])
                             != (len(fverts & QUAD_PAIRS[k]) == 2))
                tri_count = vector[tri_coord(t, alone)]
                if alone in QUAD_PAIRS[k]:
                    pos = tri_count + j
                else:
                    pos = tri_count + q + 1 - j
                nxt = (idx + 1) % 4
                arc_owner[(t, f, alone, pos)] = (piece_index[p],
                                                 cs[idx][0], cs[nxt][0],
                                                 cs[idx][1], cs[nxt][1])

    # Pair arcs across internal faces.  Each pair also records whether the
    # two pieces traverse the shared arc in the same direction, compared
    # at germ level transported through the face gluing.
    internal_pairs = []
    free_arcs = []
    seen = set()
    for (t, f, v, pos), data in sorted(arc_owner.items()):
        if (t, f, v, pos) in seen:
            continue
        entry = tri.gluings[t][f]
        if entry is None:
            free_arcs.append(data)
            continue
        t2, g = entry
        other = (t2, perm4.apply(g, f), perm4.apply(g, v), pos)
        seen.add(other)
        data2 = arc_owner[other]
        moved = tuple(_transport_germ_corner(g, t2, gc)
                      for gc in (data[3], data[4]))
        if moved == (data2[3], data2[4]):
            same_direction = True
        elif moved == (data2[4], data2[3]):
            same_direction = False
        else:
            raise AssertionError("arc endpoints disagree across a face")
        internal_pairs.append((data, data2, same_direction))

    f_s = len(pieces)
    e_s = len(internal_pairs) + len(free_arcs)
    v_s = 0
    for e in tri.edges:
        t, en = e.germs[0]
        u, v = perm4.EDGE_VERTS[en]
        v_s += len(_edge_crossings(tri, vector, t, u, v))
    euler = v_s - e_s + f_s

    # Connectivity over pieces.
    parent = list(range(f_s))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for data, data2, _ in internal_pairs:
        ra, rb = find(data[0]), find(data2[0])
        if ra != rb:
            parent[rb] = ra
    components = len({find(i) for i in range(f_s)})
    connected = components == 1

    # Orientability: spins over pieces; arcs glue coherently when the two
    # pieces traverse the shared arc in opposite directions.
    spin = {}
    orientable = True
    adj = {}
    for data, data2, same in internal_pairs:
        pa, pb = data[0], data2[0]
        rel = -1 if same else 1
        adj.setdefault(pa, []).append((pb, rel))
        adj.setdefault(pb, []).append((pa, rel))
    for start in range(f_s):
        if start in spin:
            continue
        spin[start] = 1
        stack = [start]
        while stack:
            x = stack.pop()
            for y, rel in adj.get(x, ()):
                want = spin[x] * rel
                if y in spin:
                    if spin[y] != want:
                        orientable = False
                else:
                    spin[y] = want
                    stack.append(y)

    # Boundary curves: free arcs chained at their endpoints.
    curve_parent = {}

    def cfind(x):
        root = x
        while curve_parent[root] != root:
            root = curve_parent[root]
        while curve_parent[x] != root:
            curve_parent[x], x = root, curve_parent[x]
        return root

    for data in free_arcs:
        c1, c2 = data[1], data[2]
        for c in (c1, c2):
            if c not in curve_parent:
                curve_parent[c] = c
        ra, rb = cfind(c1), cfind(c2)
        if ra != rb:
            curve_parent[rb] = ra
    boundary_curves = len({cfind(c) for c in curve_parent})

    vertex_linking = not has_quad

    if not connected:
        kind = "Other"
    elif boundary_curves == 0:
        if orientable:
            kind = {2: "Sphere", 0: "Torus"}.get(euler, "Other")
        else:
            kind = "ProjectivePlane" if euler == 1 else "Other"
    else:
        if orientable:
            if euler == 1 and boundary_curves == 1:
                kind = "Disc"
            elif euler == 0 and boundary_curves == 2:
                kind = "Annulus"
            else:
                kind = "Other"
        else:
            kind = "Mobius" if (euler == 0 and boundary_curves == 1) \
                else "Other"

    return SurfaceReport(euler, connected, orientable, boundary_curves,
                         kind, vertex_linking, has_quad, components)


def find_nontrivial_sphere_or_disc(tri):
    """
    A vertex normal sphere or properly embedded disc containing at least
    one quadrilateral, or None when no such vertex surface exists.
    """
    if not tri.is_connected():
        raise ValueError("needs a connected triangulation")
    for vec in enumerate_vertex_surfaces(tri):
        if not any(vec[quad_coord(t, k)]
                   for t in range(tri.size) for k in range(3)):
            continue
        report = analyze_surface(tri, vec)
        if report.connected and (report.is_sphere() or report.is_disc()):
            return vec
    return None


def serialize_surfaces(sig, vectors):
    """One surface per line, whitespace-separated, prefixed by the
    triangulation's signature."""
    lines = []
    for vec in vectors:
        lines.append(sig + " " + " ".join(str(x) for x in vec))
    return "\n".join(lines)
