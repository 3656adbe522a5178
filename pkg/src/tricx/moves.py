"""
Elementary moves on triangulations: 2-3, 3-2 and 0-2 moves, each reporting
exactly how the edges were renumbered.

Every move returns a brand-new triangulation together with an EdgeTracking
record.  Surviving tetrahedra keep their relative order and new tetrahedra
are appended at the end, which pins the renumbering down deterministically.
Move sites carry the identity of the triangulation they were enumerated
from, so applying a site to any other triangulation fails loudly.
"""
from . import perm4
from .errors import InvalidSite
from .triangulation import Triangulation


def _gen_of(tri):
    return tri.uid


class MoveSite:
    """A candidate move location, valid only for its source triangulation."""

    __slots__ = ("kind", "target", "source")

    TWO_THREE = "2-3"
    THREE_TWO = "3-2"
    ZERO_TWO = "0-2"

    def __init__(self, kind, target, source):
        self.kind = kind
        self.target = target    # face index / edge index / (tet, pair)
        self.source = source    # generation stamp of the source

    def __repr__(self):
        return "MoveSite({}, {})".format(self.kind, self.target)


class EdgeTracking:
    """How one move renumbered the edges."""

    __slots__ = ("persisted", "created", "destroyed")

    def __init__(self, persisted, created, destroyed):
        self.persisted = persisted    # old edge index -> new edge index
        self.created = tuple(created)
        self.destroyed = tuple(destroyed)

    def __repr__(self):
        return "EdgeTracking(persisted={}, created={}, destroyed={})".format(
            self.persisted, self.created, self.destroyed)


def list_moves(tri):
    """All candidate move sites on the given triangulation."""
    gen = _gen_of(tri)
    sites = []
    for face in tri.faces:
        if face.is_boundary:
            continue
        (t1, _), (t2, _) = face.germs
        if t1 != t2:
            sites.append(MoveSite(MoveSite.TWO_THREE, face.index, gen))
    for edge in tri.edges:
        if edge.is_boundary:
            continue
        if edge.degree == 3 and edge.distinct_tets == 3:
            sites.append(MoveSite(MoveSite.THREE_TWO, edge.index, gen))
    for t in range(tri.size):
        for pair in range(3):
            sites.append(MoveSite(MoveSite.ZERO_TWO, (t, pair), gen))
    return sites


def two_three_sites(tri):
    return [s for s in list_moves(tri) if s.kind == MoveSite.TWO_THREE]


def three_two_sites(tri):
    return [s for s in list_moves(tri) if s.kind == MoveSite.THREE_TWO]


def _check_site(tri, site, kind):
    if site.kind != kind:
        raise InvalidSite("expected a {} site, got {}".format(kind,
                                                              site.kind))
    if site.source != _gen_of(tri):
        raise InvalidSite("site was enumerated from a different "
                          "triangulation")


def _rebuild(tri, removed, new_count, forward, internal):
    """
    Replace the tetrahedra in `removed` by `new_count` fresh ones.

    forward maps each outward-facing face slot (tet, face) of a removed
    tetrahedron to (final new tet index, label permutation old -> new).
    internal lists gluings among the new tetrahedra as
    (tet_a, face_a, tet_b, perm a -> b) with final indices.

    Returns (gluing table, old tet -> new tet map for survivors).
    """
    removed = set(removed)
    survivors = [t for t in range(tri.size) if t not in removed]
    new_index = {t: i for i, t in enumerate(survivors)}
    base = len(survivors)

    rows = []
    for t in survivors:
        row = []
        for f, entry in enumerate(tri.gluings[t]):
            if entry is None:
                row.append(None)
                continue
            t2, p = entry
            if t2 in removed:
                nt, phi = forward[(t2, perm4.apply(p, f))]
                row.append((nt, perm4.mul(phi, p)))
            else:
                row.append((new_index[t2], p))
        rows.append(row)
    for _ in range(new_count):
        rows.append([None] * 4)

    for (ot, of), (nt, phi) in forward.items():
        nf = perm4.apply(phi, of)
        entry = tri.gluings[ot][of]
        if entry is None:
            continue
        t2, p = entry
        phi_inv = perm4.inv(phi)
        if t2 in removed:
            nt2, phi2 = forward[(t2, perm4.apply(p, of))]
            rows[nt][nf] = (nt2, perm4.mul(phi2, perm4.mul(p, phi_inv)))
        else:
            rows[nt][nf] = (new_index[t2], perm4.mul(p, phi_inv))

    for a, fa, b, pab in internal:
        rows[a][fa] = (b, pab)
        rows[b][perm4.apply(pab, fa)] = (a, perm4.inv(pab))

    assert all(base <= nt < base + new_count for nt, _ in forward.values())
    return tuple(tuple(r) for r in rows), new_index


def _track_edges(old, new, removed, new_index, forward, expect_destroyed):
    """Match old edge classes to new ones through survivors or forwarding."""
    removed = set(removed)
    persisted = {}
    destroyed = []
    claimed = set()
    for ec in old.edges:
        images = set()
        for t, en in ec.germs:
            if t in removed:
                continue
            images.add(new.edge_class(new_index[t], en))
        if not images:
            for t, en in ec.germs:
                u, v = perm4.EDGE_VERTS[en]
                for f in perm4.EDGE_COVERTS[en]:
                    if (t, f) in forward:
                        nt, phi = forward[(t, f)]
                        en2 = perm4.EDGE_NUM[(perm4.apply(phi, u),
                                              perm4.apply(phi, v))]
                        images.add(new.edge_class(nt, en2))
                        break
                if images:
                    break
        if not images:
            destroyed.append(ec.index)
            continue
        # A split edge keeps the identity of its first germ.
        keep = None
        for t, en in ec.germs:
            if t in removed:
                continue
            keep = new.edge_class(new_index[t], en)
            break
        if keep is None:
            keep = min(images)
        persisted[ec.index] = keep
        assert keep not in claimed, "edge classes merged unexpectedly"
        claimed.add(keep)
    created = [i for i in range(len(new.edges)) if i not in claimed]
    assert len(destroyed) == expect_destroyed
    return EdgeTracking(persisted, created, destroyed)


def apply_23(tri, site):
    """
    2-3 move about an internal face meeting two distinct tetrahedra.

    Returns (new triangulation, edge tracking).  The tracking always has
    one created edge (the new degree-3 edge) and destroys nothing.
    """
    _check_site(tri, site, MoveSite.TWO_THREE)
    face = tri.faces[site.target]
    if face.is_boundary:
        raise InvalidSite("2-3 move needs an internal face")
    (t1, f1), (t2, f2) = face.germs
    if t1 == t2:
        raise InvalidSite("2-3 move needs a face meeting two distinct "
                          "tetrahedra")
    g = tri.gluings[t1][f1][1]

    xs = perm4.FACE_VERTS[f1]           # face vertices in t1
    base = tri.size - 2                 # first new tetrahedron index
    # New tetrahedron i spans [apex1, apex2, xs[i], xs[i+1]],
    # labelled 0,1,2,3 in that order.
    forward = {}
    for i in range(3):
        xi, xj, xk = xs[i], xs[(i + 1) % 3], xs[(i + 2) % 3]
        # t1's face opposite xi is owned by new tet i+1 as its face 1.
        phi1 = [0] * 4
        phi1[f1], phi1[xj], phi1[xk], phi1[xi] = 0, 2, 3, 1
        forward[(t1, xi)] = (base + (i + 1) % 3, perm4.from_images(phi1))
        # t2's face opposite g(xi) becomes new tet i+1's face 0.
        phi2 = [0] * 4
        phi2[perm4.apply(g, f1)] = 1
        phi2[perm4.apply(g, xj)] = 2
        phi2[perm4.apply(g, xk)] = 3
        phi2[perm4.apply(g, xi)] = 0
        forward[(t2, perm4.apply(g, xi))] = (base + (i + 1) % 3,
                                             perm4.from_images(phi2))

    swap23 = perm4.transposition(2, 3)
    internal = [(base + i, 2, base + (i + 1) % 3, swap23) for i in range(3)]

    rows, new_index = _rebuild(tri, (t1, t2), 3, forward, internal)
    new_tri = Triangulation(rows)
    tracking = _track_edges(tri, new_tri, (t1, t2), new_index, forward, 0)
    assert len(tracking.created) == 1
    return new_tri, tracking


def created_edge_of_23(tri, new_tri, tracking):
    """The new degree-3 edge produced by a 2-3 move."""
    return tracking.created[0]


def apply_32(tri, site):
    """
    3-2 move about an internal degree-3 edge meeting three distinct
    tetrahedra (both defects zero).

    Returns (new triangulation, edge tracking); exactly the pivot edge is
    destroyed.
    """
    _check_site(tri, site, MoveSite.THREE_TWO)
    edge = tri.edges[site.target]
    if edge.is_boundary or edge.degree != 3 or edge.distinct_tets != 3:
        raise InvalidSite("3-2 move needs an internal degree-3 edge "
                          "meeting three distinct tetrahedra")
    embs = tri.edge_embeddings(edge.index)
    tets = [t for t, _ in embs]
    perms = [p for _, p in embs]

    base = tri.size - 3
    # New tets: 0 is the cone from the edge's tail over the equator
    # triangle, 1 the cone from its head; equator vertex i carries label
    # i+1 in both.  Equator vertex i is P_i[2] locally in tets[i].
    forward = {}
    for i in range(3):
        p = perms[i]
        a = perm4.apply(p, 0)
        b = perm4.apply(p, 1)
        vi = perm4.apply(p, 2)
        vj = perm4.apply(p, 3)
        # Face opposite the tail (contains head + both equator vertices).
        phi_b = [0] * 4
        phi_b[b], phi_b[vi], phi_b[vj] = 0, 1 + i, 1 + (i + 1) % 3
        phi_b[a] = 1 + (i + 2) % 3
        forward[(tets[i], a)] = (base + 1, perm4.from_images(phi_b))
        # Face opposite the head.
        phi_a = [0] * 4
        phi_a[a], phi_a[vi], phi_a[vj] = 0, 1 + i, 1 + (i + 1) % 3
        phi_a[b] = 1 + (i + 2) % 3
        forward[(tets[i], b)] = (base + 0, perm4.from_images(phi_a))

    internal = [(base, 0, base + 1, perm4.IDENTITY)]
    rows, new_index = _rebuild(tri, tets, 2, forward, internal)
    new_tri = Triangulation(rows)
    tracking = _track_edges(tri, new_tri, tets, new_index, forward, 1)
    assert tracking.destroyed == (edge.index,)
    assert not tracking.created
    return new_tri, tracking


_OPPOSITE_PAIRS = ((0, 5), (1, 4), (2, 3))


def apply_02(tri, site, mirror=False):
    """
    0-2 move: expand one tetrahedron's opposite edge pair by splicing a
    two-tetrahedron pillow across the two faces containing one edge of the
    pair.

    The default insertion cuts along the lower-numbered edge of the pair;
    mirror=True cuts along the other one.  Either way the move introduces
    two new edges, one parallel to each edge of the pair, and destroys
    nothing.
    """
    _check_site(tri, site, MoveSite.ZERO_TWO)
    tet, pair = site.target
    if not (0 <= tet < tri.size) or not (0 <= pair < 3):
        raise InvalidSite("no such tetrahedron or edge pair")
    e_low, e_high = _OPPOSITE_PAIRS[pair]
    e = e_high if mirror else e_low
    a, b = perm4.EDGE_VERTS[e]
    c, d = perm4.EDGE_COVERTS[e]

    entry_c = tri.gluings[tet][c]   # face opposite c contains a, b, d
    entry_d = tri.gluings[tet][d]   # face opposite d contains a, b, c
    if entry_c is None or entry_d is None:
        raise InvalidSite("0-2 move needs both faces around the edge to "
                          "be internal")
    if tri.face_class(tet, c) == tri.face_class(tet, d):
        raise InvalidSite("the two faces around the edge form a single "
                          "face; this degenerate site is not supported")

    t2, g_c = entry_c
    t3, g_d = entry_d
    n = tri.size
    p_new, q_new = n, n + 1

    # Pillow labels: 0,1 on the equator (images of a,b), poles 2 and 3.
    m_c = [0] * 4
    m_c[a], m_c[b], m_c[d], m_c[c] = 0, 1, 2, 3
    m_c = perm4.from_images(m_c)
    m_d = [0] * 4
    m_d[a], m_d[b], m_d[c], m_d[d] = 0, 1, 3, 2
    m_d = perm4.from_images(m_d)

    rows = [list(r) for r in tri.gluings]
    rows.append([None] * 4)   # P
    rows.append([None] * 4)   # Q

    def join(ta, fa, tb, p):
        rows[ta][fa] = (tb, p)
        rows[tb][perm4.apply(p, fa)] = (ta, perm4.inv(p))

    join(p_new, 0, q_new, perm4.IDENTITY)
    join(p_new, 1, q_new, perm4.IDENTITY)
    join(tet, c, p_new, m_c)
    join(t2, perm4.apply(g_c, c), q_new,
         perm4.mul(m_c, perm4.inv(g_c)))
    join(tet, d, p_new, m_d)
    join(t3, perm4.apply(g_d, d), q_new,
         perm4.mul(m_d, perm4.inv(g_d)))

    new_tri = Triangulation(tuple(tuple(r) for r in rows))

    # Every old edge keeps the class of its first germ; splitting the cut
    # edge plus the fresh pillow core accounts for the two created edges.
    persisted = {}
    claimed = set()
    for ec in tri.edges:
        keep = new_tri.edge_class(*ec.germs[0])
        persisted[ec.index] = keep
        assert keep not in claimed
        claimed.add(keep)
    created = [i for i in range(len(new_tri.edges)) if i not in claimed]
    tracking = EdgeTracking(persisted, created, ())
    assert len(tracking.created) == 2
    return new_tri, tracking
