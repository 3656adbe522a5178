"""
Truncation of ideal vertices.

Every tetrahedron is chopped at one-third depth: four corner tetrahedra
(kept only at material corners; removing the ideal ones is what creates
the new boundary) around a truncated-tetrahedron core.  Chopped faces are
subdivided canonically per face class -- three corner triangles plus a
fan of the central hexagon -- and transported through the gluing, so the
pieces of adjacent tetrahedra match without any new vertices on the faces.

Each core is triangulated by pulling from one of its twelve cross-section
vertices.  Pulling from p needs both hexagons through p to be fanned from
p itself, which couples the per-face fan apexes to the per-tetrahedron
choice of p; a small backtracking search picks a consistent assignment.
Any tetrahedron the search cannot satisfy falls back to coning its core
from a fresh interior vertex, which is bigger but always valid.
"""
from . import perm4
from .errors import NoIdealVertices
from .triangulation import Triangulation

_CSP_NODE_CAP = 200000


def _hexagon_cycle(face_verts):
    a, b, c = face_verts
    return (("e", a, b), ("e", b, a), ("e", b, c),
            ("e", c, b), ("e", c, a), ("e", a, c))


def _transport(token, perm):
    if token[0] == "e":
        return ("e", perm4.apply(perm, token[1]), perm4.apply(perm, token[2]))
    if token[0] == "v":
        return ("v", perm4.apply(perm, token[1]))
    raise ValueError("token {} cannot cross a face".format(token))


def _face_support(token):
    if token[0] == "e":
        return {token[1], token[2]}
    if token[0] == "v":
        return {token[1]}
    return None


class _Assignment:
    """Fan apexes per face class plus pull vertices per tetrahedron."""

    def __init__(self, tri):
        self.tri = tri
        self.apex = {}        # face class index -> apex token on rep germ
        self.pull = {}        # tet -> ("e", x, y) or None for the fallback

    def demand_tokens(self, tet, x, y):
        """The (face class, transported apex token) demands of pulling
        tet's core from the point on edge {x, y} nearer x."""
        demands = []
        token = ("e", x, y)
        for f in range(4):
            if f == x or f == y:
                continue
            # Face f contains the edge {x, y}.
            cls = self.tri.face_class(tet, f)
            face = self.tri.faces[cls]
            rep_t, rep_f = face.germs[0]
            if (rep_t, rep_f) == (tet, f):
                demands.append((cls, token))
            else:
                g = self.tri.gluings[tet][f][1]
                demands.append((cls, _transport(token, g)))
        return demands


def _solve_assignment(tri):
    """Choose fan apexes and pull vertices; None pull means fallback."""
    assign = _Assignment(tri)
    pull_options = []
    for tet in range(tri.size):
        opts = []
        for x in range(4):
            for y in range(4):
                if y != x:
                    opts.append((x, y))
        pull_options.append(opts)

    nodes = [0]

    def backtrack(tet):
        if tet == tri.size:
            return True
        nodes[0] += 1
        if nodes[0] > _CSP_NODE_CAP:
            return False
        for x, y in pull_options[tet]:
            demands = assign.demand_tokens(tet, x, y)
            staged = []
            ok = True
            for cls, token in demands:
                if cls in assign.apex:
                    if assign.apex[cls] != token:
                        ok = False
                        break
                else:
                    staged.append(cls)
                    assign.apex[cls] = token
            if ok:
                assign.pull[tet] = ("e", x, y)
                if backtrack(tet + 1):
                    return True
                del assign.pull[tet]
            for cls in staged:
                del assign.apex[cls]
        # Fall back to an interior cone for this tetrahedron.
        assign.pull[tet] = None
        if backtrack(tet + 1):
            return True
        del assign.pull[tet]
        return False

    if not backtrack(0):
        # Node cap exhausted: retreat to the always-valid interior cones.
        assign.apex.clear()
        assign.pull = {t: None for t in range(tri.size)}
    # Default apexes for classes nobody constrained.
    for face in tri.faces:
        if face.index not in assign.apex:
            rep_t, rep_f = face.germs[0]
            cycle = _hexagon_cycle(perm4.FACE_VERTS[rep_f])
            assign.apex[face.index] = cycle[0]
    return assign


def _fan_triangles(cycle, apex_token):
    k = cycle.index(apex_token)
    tris = []
    for i in range(1, 5):
        tris.append((cycle[k],
                     cycle[(k + i) % 6],
                     cycle[(k + i + 1) % 6]))
    return tris


def _core_subtets(tri, assign, tet):
    """Token 4-tuples for the core of one chopped tetrahedron."""
    pull = assign.pull[tet]
    hexes = {}
    for f in range(4):
        cls = tri.face_class(tet, f)
        face = tri.faces[cls]
        rep_t, rep_f = face.germs[0]
        apex = assign.apex[cls]
        if (rep_t, rep_f) != (tet, f):
            apex = _transport(apex, tri.gluings[rep_t][rep_f][1])
        hexes[f] = _fan_triangles(_hexagon_cycle(perm4.FACE_VERTS[f]), apex)

    def cross(u):
        return tuple(("e", u, s) for s in range(4) if s != u)

    subtets = []
    if pull is None:
        c = ("c",)
        for u in range(4):
            subtets.append((c,) + cross(u))
        for f in range(4):
            for t3 in hexes[f]:
                subtets.append((c,) + t3)
        return subtets

    x, y = pull[1], pull[2]
    p = ("e", x, y)
    for u in range(4):
        if u == x:
            continue
        subtets.append((p,) + cross(u))
    for f in (x, y):
        # Hexagons NOT containing p: the faces opposite x and opposite y.
        for t3 in hexes[f]:
            subtets.append((p,) + t3)
    return subtets


def truncate_ideal(tri):
    """
    Replace every ideal vertex by a real boundary component of the same
    genus, leaving the compact manifold unchanged.
    """
    if not tri.has_ideal_vertices():
        raise NoIdealVertices("triangulation has no ideal vertices")

    assign = _solve_assignment(tri)

    subtets = []          # (source tet, token 4-tuple)
    for tet in range(tri.size):
        for st in _core_subtets(tri, assign, tet):
            subtets.append((tet, st))
        for x in range(4):
            vclass = tri.vertices[tri.vertex_class(tet, x)]
            if vclass.is_ideal:
                continue
            corner = (("v", x),) + tuple(
                ("e", x, u) for u in range(4) if u != x)
            subtets.append((tet, corner))

    # Bucket sub-faces: within a tetrahedron by their token triple, across
    # a glued face by the triple transported to the face class rep germ.
    buckets = {}
    for idx, (tet, tokens) in enumerate(subtets):
        for omit in range(4):
            triple = tuple(tokens[i] for i in range(4) if i != omit)
            supports = [_face_support(t) for t in triple]
            if any(s is None for s in supports):
                key = ("tet", tet, frozenset(triple))
            else:
                union = set().union(*supports)
                if len(union) == 3:
                    f = next(v for v in range(4) if v not in union)
                    entry = tri.gluings[tet][f]
                    if entry is None:
                        key = ("bdry", tet, f, frozenset(triple))
                    else:
                        cls = tri.face_class(tet, f)
                        face = tri.faces[cls]
                        if face.germs[0] == (tet, f):
                            rep_triple = triple
                        else:
                            g = entry[1]
                            rep_triple = tuple(_transport(t, g)
                                               for t in triple)
                        key = ("face", cls, frozenset(rep_triple))
                else:
                    key = ("tet", tet, frozenset(triple))
            buckets.setdefault(key, []).append((idx, omit, triple))

    rows = [[None] * 4 for _ in subtets]
    for key, members in buckets.items():
        if len(members) == 1:
            continue
        assert len(members) == 2, \
            "sub-face matched {} times: {}".format(len(members), key)
        (ia, oa, ta), (ib, ob, tb) = members
        # Correspondence between the two token triples.
        if key[0] == "face":
            tet_a = subtets[ia][0]
            # The slot a's triple lies on is determined by vertex support.
            slot_f = next(f for f in range(4)
                          if tri.gluings[tet_a][f] is not None
                          and tri.face_class(tet_a, f) == key[1]
                          and _match_side(tri, tet_a, f, ta))
            g = tri.gluings[tet_a][slot_f][1]
            corr = {_transport(t, g): t for t in ta}
            pairs = [(corr[t], t) for t in tb]
        else:
            pairs = [(t, t) for t in ta]
        images = [0] * 4
        pos_b = {t: i for i, t in enumerate(subtets[ib][1])}
        for t_a, t_b in pairs:
            images[subtets[ia][1].index(t_a)] = pos_b[t_b]
        images[oa] = ob
        p = perm4.from_images(images)
        rows[ia][oa] = (ib, p)
        rows[ib][ob] = (ia, perm4.inv(p))

    return Triangulation(tuple(tuple(r) for r in rows))


def _match_side(tri, tet, f, triple):
    union = set()
    for t in triple:
        union |= _face_support(t)
    return union == set(perm4.FACE_VERTS[f])
