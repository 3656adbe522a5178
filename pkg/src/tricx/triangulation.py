"""
Generalised triangulations of 3-manifolds: gluing tables plus the derived
skeleton (vertex, edge and face classes, vertex links, boundary surfaces).

A triangulation is a finite set of tetrahedra whose triangular faces are
affinely identified in pairs.  Faces of the same tetrahedron may be glued
to each other, so these objects need not be simplicial complexes.  The one
validity rule enforced throughout is that no tetrahedron edge may be
identified with itself in reverse.

Triangulations are immutable once built; every operation that "modifies" a
triangulation returns a new one.
"""
import itertools

from . import perm4
from .errors import (
    NonInvolutiveGluing,
    SelfGluedFace,
    EdgeReversedOntoItself,
    InvalidVertexLink,
)

_uid_counter = itertools.count()

SPHERE = "Sphere"
DISC = "Disc"
TORUS = "Torus"
HIGHER_GENUS = "HigherGenus"
NON_ORIENTABLE = "NonOrientable"


class VertexClass:
    """An equivalence class of tetrahedron vertices."""

    __slots__ = ("index", "germs", "link_kind", "link_genus", "is_boundary",
                 "is_ideal")

    def __init__(self, index, germs, link_kind, link_genus, is_boundary):
        self.index = index
        self.germs = germs            # tuple of (tet, vertex)
        self.link_kind = link_kind    # SPHERE / DISC / TORUS / ...
        self.link_genus = link_genus  # orientable genus, or crosscap count
        self.is_boundary = is_boundary
        self.is_ideal = (not is_boundary) and link_kind != SPHERE

    def __repr__(self):
        return "VertexClass({}, {})".format(self.index, self.link_kind)


class EdgeClass:
    """An equivalence class of tetrahedron edges."""

    __slots__ = ("index", "germs", "signs", "is_boundary", "degree",
                 "distinct_tets")

    def __init__(self, index, germs, signs, is_boundary):
        self.index = index
        self.germs = germs    # tuple of (tet, edge_number), lexicographic
        self.signs = signs    # +1/-1 per germ, relative to germs[0]
        self.is_boundary = is_boundary
        self.degree = len(germs)
        self.distinct_tets = len({t for t, _ in germs})

    def __repr__(self):
        return "EdgeClass({}, degree={})".format(self.index, self.degree)


class FaceClass:
    """An equivalence class of tetrahedron faces (one or two face slots)."""

    __slots__ = ("index", "germs", "is_boundary")

    def __init__(self, index, germs):
        self.index = index
        self.germs = germs    # ((tet, face),) or ((tet, face), (tet, face))
        self.is_boundary = len(germs) == 1

    def __repr__(self):
        return "FaceClass({}, boundary={})".format(self.index,
                                                   self.is_boundary)


class BoundaryComponent:
    """A connected component of the boundary surface."""

    __slots__ = ("index", "face_slots", "euler", "orientable", "genus")

    def __init__(self, index, face_slots, euler, orientable):
        self.index = index
        self.face_slots = face_slots
        self.euler = euler
        self.orientable = orientable
        if orientable:
            self.genus = (2 - euler) // 2
        else:
            self.genus = 2 - euler

    def __repr__(self):
        return "BoundaryComponent({}, genus={})".format(self.index,
                                                        self.genus)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _classes_by_first_germ(n_items, uf, key_of):
    """Group items 0..n-1 by union-find root, ordered by smallest key."""
    groups = {}
    for i in range(n_items):
        groups.setdefault(uf.find(i), []).append(i)
    cls = []
    for members in groups.values():
        members.sort(key=key_of)
        cls.append(members)
    cls.sort(key=lambda members: key_of(members[0]))
    return cls


class Triangulation:
    """
    An immutable generalised triangulation.

    The gluing table is a tuple with one entry per tetrahedron; each entry
    is a 4-tuple indexed by face number (the face opposite that vertex),
    holding either None for a boundary face or a pair (adjacent tetrahedron,
    permutation index).  The permutation maps vertex labels of this
    tetrahedron to vertex labels of the adjacent one, and in particular
    maps the face number to the adjacent face number.
    """

    __slots__ = ("gluings", "size", "uid", "vertices", "edges", "faces",
                 "boundary_components", "_edge_class_of", "_edge_sign_of",
                 "_vertex_class_of", "_face_class_of", "_orientable",
                 "_tet_components")

    def __init__(self, gluings):
        gluings = tuple(tuple(row) for row in gluings)
        self.size = len(gluings)
        self.gluings = gluings
        self.uid = next(_uid_counter)
        self._check_table()
        self._build_faces()
        self._build_edges()
        self._build_vertices()
        self._build_boundary()
        self._build_orientation()

    # --- validation and skeleton ------------------------------------------

    def _check_table(self):
        n = self.size
        for t, row in enumerate(self.gluings):
            if len(row) != 4:
                raise ValueError("tetrahedron {} needs 4 face entries"
                                 .format(t))
            for f, entry in enumerate(row):
                if entry is None:
                    continue
                t2, p = entry
                if not (0 <= t2 < n) or not (0 <= p < 24):
                    raise ValueError("face ({},{}) glued out of range"
                                     .format(t, f))
                f2 = perm4.apply(p, f)
                if t2 == t and f2 == f:
                    raise SelfGluedFace(
                        "face ({},{}) is glued to itself".format(t, f))
                back = self.gluings[t2][f2]
                if back is None or back[0] != t or back[1] != perm4.inv(p):
                    raise NonInvolutiveGluing(
                        "gluing of face ({},{}) is not involutive"
                        .format(t, f))

    def _build_faces(self):
        classes = []
        class_of = {}
        for t in range(self.size):
            for f in range(4):
                if (t, f) in class_of:
                    continue
                entry = self.gluings[t][f]
                idx = len(classes)
                if entry is None:
                    germs = ((t, f),)
                else:
                    t2, p = entry
                    germs = ((t, f), (t2, perm4.apply(p, f)))
                for germ in germs:
                    class_of[germ] = idx
                classes.append(FaceClass(idx, germs))
        self.faces = tuple(classes)
        self._face_class_of = class_of

    def _build_edges(self):
        # Work with directed germs: index 12*t + 2*e + d, where d says
        # whether the germ runs with or against the ascending vertex order.
        n = self.size
        uf = _UnionFind(12 * n)
        undirected = _UnionFind(6 * n)
        for t in range(n):
            for f, entry in enumerate(self.gluings[t]):
                if entry is None:
                    continue
                t2, p = entry
                verts = perm4.FACE_VERTS[f]
                for i in range(3):
                    u, v = verts[i], verts[(i + 1) % 3]
                    e1 = perm4.EDGE_NUM[(u, v)]
                    d1 = 0 if u < v else 1
                    u2, v2 = perm4.apply(p, u), perm4.apply(p, v)
                    e2 = perm4.EDGE_NUM[(u2, v2)]
                    d2 = 0 if u2 < v2 else 1
                    uf.union(12 * t + 2 * e1 + d1, 12 * t2 + 2 * e2 + d2)
                    uf.union(12 * t + 2 * e1 + (1 - d1),
                             12 * t2 + 2 * e2 + (1 - d2))
                    undirected.union(6 * t + e1, 6 * t2 + e2)

        # An edge identified with itself in reverse shows up as a directed
        # germ sharing its orbit with its own reversal.
        for t in range(n):
            for e in range(6):
                if uf.find(12 * t + 2 * e) == uf.find(12 * t + 2 * e + 1):
                    raise EdgeReversedOntoItself(
                        "edge {} of tetrahedron {} is identified with "
                        "itself in reverse".format(e, t))

        groups = _classes_by_first_germ(
            6 * n, undirected, lambda i: (i // 6, i % 6))

        classes = []
        class_of = {}
        sign_of = {}
        for idx, members in enumerate(groups):
            rep = members[0]
            rep_root = uf.find(2 * rep)
            germs = []
            signs = []
            boundary = False
            for m in members:
                t, e = divmod(m, 6)
                germs.append((t, e))
                if uf.find(2 * m) == rep_root:
                    signs.append(1)
                else:
                    assert uf.find(2 * m + 1) == rep_root
                    signs.append(-1)
                fa, fb = perm4.EDGE_COVERTS[e]
                if self.gluings[t][fa] is None or \
                        self.gluings[t][fb] is None:
                    boundary = True
                class_of[(t, e)] = idx
                sign_of[(t, e)] = signs[-1]
            classes.append(EdgeClass(idx, tuple(germs), tuple(signs),
                                     boundary))
        self.edges = tuple(classes)
        self._edge_class_of = class_of
        self._edge_sign_of = sign_of

    def _build_vertices(self):
        n = self.size
        uf = _UnionFind(4 * n)
        # Orbits of directed edge ends (t, v, w): the link vertices.
        end_uf = _UnionFind(16 * n)   # index 16*t + 4*v + w
        for t in range(n):
            for f, entry in enumerate(self.gluings[t]):
                if entry is None:
                    continue
                t2, p = entry
                for v in perm4.FACE_VERTS[f]:
                    uf.union(4 * t + v, 4 * t2 + perm4.apply(p, v))
                    for w in perm4.FACE_VERTS[f]:
                        if w == v:
                            continue
                        end_uf.union(
                            16 * t + 4 * v + w,
                            16 * t2 + 4 * perm4.apply(p, v)
                            + perm4.apply(p, w))

        groups = _classes_by_first_germ(
            4 * n, uf, lambda i: (i // 4, i % 4))

        classes = []
        class_of = {}
        for idx, members in enumerate(groups):
            germs = tuple((m // 4, m % 4) for m in members)
            for g in germs:
                class_of[g] = idx
            kind, genus, boundary = self._classify_link(germs, end_uf)
            classes.append(VertexClass(idx, germs, kind, genus, boundary))
        self.vertices = tuple(classes)
        self._vertex_class_of = class_of

    def _classify_link(self, germs, end_uf):
        """Classify the link surface of one vertex class."""
        # Faces, edges and vertices of the link.
        f_l = len(germs)
        link_vert_roots = set()
        side_slots = []       # (t, v, f) with the face glued
        boundary_sides = []   # (t, v, f) with the face unglued
        for t, v in germs:
            for w in range(4):
                if w != v:
                    link_vert_roots.add(end_uf.find(16 * t + 4 * v + w))
            for f in range(4):
                if f == v:
                    continue
                if self.gluings[t][f] is None:
                    boundary_sides.append((t, v, f))
                else:
                    side_slots.append((t, v, f))
        v_l = len(link_vert_roots)
        e_l = len(side_slots) // 2 + len(boundary_sides)
        euler = v_l - e_l + f_l

        # Boundary circles: each boundary side joins two link vertices.
        incident = {}
        for t, v, f in boundary_sides:
            a, b = [w for w in perm4.FACE_VERTS[f] if w != v]
            for w in (a, b):
                key = end_uf.find(16 * t + 4 * v + w)
                incident.setdefault(key, 0)
                incident[key] += 1
        for count in incident.values():
            if count != 2:
                raise InvalidVertexLink(
                    "vertex link has a non-manifold boundary point")

        orientable = self._link_orientable(germs)

        if not boundary_sides:
            if orientable:
                if euler == 2:
                    return SPHERE, 0, False
                if euler == 0:
                    return TORUS, 1, False
                return HIGHER_GENUS, (2 - euler) // 2, False
            return NON_ORIENTABLE, 2 - euler, False

        # Bounded link: only a disc is acceptable.
        circles = self._count_boundary_circles(boundary_sides, end_uf)
        if orientable and euler == 1 and circles == 1:
            return DISC, 0, True
        raise InvalidVertexLink(
            "vertex link is bounded but is not a disc")

    def _count_boundary_circles(self, boundary_sides, end_uf):
        keys = {}
        uf_keys = []
        pairs = []
        for t, v, f in boundary_sides:
            a, b = [w for w in perm4.FACE_VERTS[f] if w != v]
            ids = []
            for w in (a, b):
                key = end_uf.find(16 * t + 4 * v + w)
                if key not in keys:
                    keys[key] = len(uf_keys)
                    uf_keys.append(key)
                ids.append(keys[key])
            pairs.append(ids)
        uf = _UnionFind(len(uf_keys))
        for a, b in pairs:
            uf.union(a, b)
        return len({uf.find(i) for i in range(len(uf_keys))})

    def _link_orientable(self, germs):
        """Coherent orientation test for the link triangles of one vertex."""
        # Reference orientation of the corner triangle at (t, v): the cyclic
        # order of the other three vertex labels, ascending.
        spin = {}
        for start in germs:
            if start in spin:
                continue
            spin[start] = 1
            stack = [start]
            while stack:
                t, v = stack.pop()
                s = spin[(t, v)]
                others = [w for w in range(4) if w != v]
                cyc = {(others[0], others[1]), (others[1], others[2]),
                       (others[2], others[0])}
                for f in range(4):
                    if f == v or self.gluings[t][f] is None:
                        continue
                    t2, p = self.gluings[t][f]
                    v2 = perm4.apply(p, v)
                    a, b = [w for w in perm4.FACE_VERTS[f] if w != v]
                    # This side of the corner triangle runs a -> b.
                    if (a, b) not in cyc:
                        a, b = b, a
                    a2, b2 = perm4.apply(p, a), perm4.apply(p, b)
                    others2 = [w for w in range(4) if w != v2]
                    cyc2 = {(others2[0], others2[1]),
                            (others2[1], others2[2]),
                            (others2[2], others2[0])}
                    # Coherent orientations induce opposite directions on
                    # the shared side.
                    s2 = -s if (a2, b2) in cyc2 else s
                    germ2 = (t2, v2)
                    if germ2 in spin:
                        if spin[germ2] != s2:
                            return False
                    else:
                        spin[germ2] = s2
                        stack.append(germ2)
        return True

    def _build_boundary(self):
        slots = [(t, f) for t in range(self.size) for f in range(4)
                 if self.gluings[t][f] is None]
        slot_index = {s: i for i, s in enumerate(slots)}
        uf = _UnionFind(len(slots))

        # The two ends of each boundary edge's embedding path give the two
        # boundary face slots meeting that edge.
        edge_sides = {}
        for e in self.edges:
            if not e.is_boundary:
                continue
            embs = self.edge_embeddings(e.index)
            t0, p0 = embs[0]
            tk, pk = embs[-1]
            side_a = (t0, perm4.apply(p0, 3))
            side_b = (tk, perm4.apply(pk, 2))
            edge_sides[e.index] = (
                (side_a, (perm4.apply(p0, 0), perm4.apply(p0, 1))),
                (side_b, (perm4.apply(pk, 0), perm4.apply(pk, 1))))
            uf.union(slot_index[side_a], slot_index[side_b])

        groups = {}
        for i, s in enumerate(slots):
            groups.setdefault(uf.find(i), []).append(s)
        comps = []
        ordered = sorted(groups.values(), key=lambda g: min(g))
        for idx, face_slots in enumerate(ordered):
            face_slots = tuple(sorted(face_slots))
            slot_set = set(face_slots)
            e_b = sum(1 for e, sides in edge_sides.items()
                      if sides[0][0] in slot_set)
            v_b = len({self._vertex_class_of[(t, v)]
                       for (t, f) in face_slots
                       for v in perm4.FACE_VERTS[f]})
            euler = v_b - e_b + len(face_slots)
            orientable = self._boundary_orientable(slot_set, edge_sides)
            comps.append(BoundaryComponent(idx, face_slots, euler,
                                           orientable))
        self.boundary_components = tuple(comps)

    def _boundary_orientable(self, slot_set, edge_sides):
        adjacency = {}
        for sides in edge_sides.values():
            (slot_a, dir_a), (slot_b, dir_b) = sides
            if slot_a not in slot_set:
                continue
            adjacency.setdefault(slot_a, []).append((slot_b, dir_a, dir_b))
            adjacency.setdefault(slot_b, []).append((slot_a, dir_b, dir_a))
        spin = {}
        for start in slot_set:
            if start in spin:
                continue
            spin[start] = 1
            stack = [start]
            while stack:
                slot = stack.pop()
                s = spin[slot]
                t, f = slot
                verts = perm4.FACE_VERTS[f]
                cyc = {(verts[0], verts[1]), (verts[1], verts[2]),
                       (verts[2], verts[0])}
                for other, my_dir, their_dir in adjacency.get(slot, ()):
                    mine = 1 if my_dir in cyc else -1
                    t2, f2 = other
                    verts2 = perm4.FACE_VERTS[f2]
                    cyc2 = {(verts2[0], verts2[1]), (verts2[1], verts2[2]),
                            (verts2[2], verts2[0])}
                    theirs = 1 if their_dir in cyc2 else -1
                    # Coherent iff the induced directions disagree.
                    s2 = -s * mine * theirs
                    if other in spin:
                        if spin[other] != s2:
                            return False
                    else:
                        spin[other] = s2
                        stack.append(other)
        return True

    def _build_orientation(self):
        n = self.size
        spin = [0] * n
        orientable = True
        for start in range(n):
            if spin[start]:
                continue
            spin[start] = 1
            stack = [start]
            while stack:
                t = stack.pop()
                for f, entry in enumerate(self.gluings[t]):
                    if entry is None:
                        continue
                    t2, p = entry
                    s2 = -perm4.SIGN[p] * spin[t]
                    if spin[t2]:
                        if spin[t2] != s2:
                            orientable = False
                    else:
                        spin[t2] = s2
                        stack.append(t2)
        self._orientable = orientable

        uf = _UnionFind(max(n, 1))
        for t in range(n):
            for entry in self.gluings[t]:
                if entry is not None:
                    uf.union(t, entry[0])
        self._tet_components = uf

    # --- simple queries ------------------------------------------------------

    def gluing(self, t, f):
        return self.gluings[t][f]

    def is_closed(self):
        return not self.boundary_components

    def is_orientable(self):
        return self._orientable

    def is_connected(self):
        if self.size <= 1:
            return True
        root = self._tet_components.find(0)
        return all(self._tet_components.find(t) == root
                   for t in range(self.size))

    def is_one_vertex(self):
        return len(self.vertices) == 1

    def is_manifold(self):
        """True when every vertex link is a sphere or a disc."""
        return all(v.link_kind in (SPHERE, DISC) for v in self.vertices)

    def has_ideal_vertices(self):
        return any(v.is_ideal for v in self.vertices)

    def euler_characteristic(self):
        return (len(self.vertices) - len(self.edges) + len(self.faces)
                - self.size)

    def edge_class(self, t, e):
        return self._edge_class_of[(t, e)]

    def edge_sign(self, t, e):
        return self._edge_sign_of[(t, e)]

    def vertex_class(self, t, v):
        return self._vertex_class_of[(t, v)]

    def face_class(self, t, f):
        return self._face_class_of[(t, f)]

    def tet_component_roots(self):
        return {self._tet_components.find(t) for t in range(self.size)}

    # --- edge embeddings -------------------------------------------------------

    def edge_embeddings(self, edge_index):
        """
        The embeddings of an edge, arranged around the edge.

        Returns a list of (tet, perm) pairs.  The permutation sends 0 and 1
        to the ends of the edge (with a direction that is consistent along
        the list), and the walk crosses the face opposite perm[2] to move
        from one embedding to the next.  For an internal edge the list is a
        closed cycle; for a boundary edge it is a path whose first entry has
        an unglued face opposite perm[3] and whose last entry has an unglued
        face opposite perm[2].
        """
        cls = self.edges[edge_index]
        t0, e0 = cls.germs[0]
        u, v = perm4.EDGE_VERTS[e0]
        x, y = perm4.EDGE_COVERTS[e0]
        p0 = perm4.from_images(self._images_for(u, v, x, y))
        swap23 = perm4.transposition(2, 3)

        embs = [(t0, p0)]
        t, p = t0, p0
        closed = False
        while True:
            face = perm4.apply(p, 2)
            entry = self.gluings[t][face]
            if entry is None:
                break
            t2, g = entry
            p2 = perm4.mul(perm4.mul(g, p), swap23)
            edge2 = perm4.EDGE_NUM[(perm4.apply(p2, 0), perm4.apply(p2, 1))]
            if (t2, edge2) == (t0, e0):
                closed = True
                break
            embs.append((t2, p2))
            t, p = t2, p2

        if not closed:
            # Walk backwards from the start to find the boundary end.
            back = []
            t, p = t0, p0
            while True:
                face = perm4.apply(p, 3)
                entry = self.gluings[t][face]
                if entry is None:
                    break
                t2, g = entry
                p2 = perm4.mul(perm4.mul(g, p), swap23)
                back.append((t2, p2))
                t, p = t2, p2
            embs = back[::-1] + embs
        return embs

    @staticmethod
    def _images_for(u, v, x, y):
        images = [0] * 4
        images[0], images[1], images[2], images[3] = u, v, x, y
        # images maps slot -> vertex; perm4.from_images wants exactly that.
        return images

    # --- summaries -----------------------------------------------------------

    def __repr__(self):
        return "Triangulation(size={}, V={}, E={}, F={}, closed={})".format(
            self.size, len(self.vertices), len(self.edges), len(self.faces),
            self.is_closed())


def build_from_gluings(tet_count, gluings):
    """
    Build a triangulation from a raw gluing table.

    The table holds one row per tetrahedron and one entry per face; each
    entry is either None (boundary face) or a pair (target tetrahedron,
    permutation).  Permutations may be given as image 4-tuples or as
    indices into perm4.S4.
    """
    if tet_count != len(gluings):
        raise ValueError("gluing table has {} rows, expected {}"
                         .format(len(gluings), tet_count))
    table = []
    for row in gluings:
        new_row = []
        for entry in row:
            if entry is None:
                new_row.append(None)
            else:
                t2, p = entry
                if not isinstance(p, int):
                    p = perm4.from_images(tuple(p))
                new_row.append((t2, p))
        table.append(tuple(new_row))
    return Triangulation(table)


def split_components(tri):
    """Split a triangulation into its connected components."""
    if tri.size == 0:
        return []
    roots = {}
    for t in range(tri.size):
        root = tri._tet_components.find(t)
        roots.setdefault(root, []).append(t)
    comps = []
    for members in sorted(roots.values(), key=min):
        index_of = {t: i for i, t in enumerate(members)}
        rows = []
        for t in members:
            row = []
            for entry in tri.gluings[t]:
                if entry is None:
                    row.append(None)
                else:
                    row.append((index_of[entry[0]], entry[1]))
            rows.append(tuple(row))
        comps.append(Triangulation(tuple(rows)))
    return comps
