"""
Pachner-style simplification used by the recognition pipeline.

Only the moves this toolkit implements are used: greedy 3-2 moves to shed
tetrahedra, close-book folds of adjacent boundary triangles to shed
boundary faces (which only boundary moves can do), and bounded 2-3
excursions to escape local minima.  Folds are applied under a
conservative legality test and are double-checked against a bundle of
invariants (validity, homology, boundary shape), so a fold can never
silently change the manifold.
"""
from . import perm4
from .homology import homology_of_complex
from .triangulation import Triangulation
from . import moves as moves_mod
from . import isosig


def _boundary_shape(tri):
    return sorted((b.genus, b.orientable)
                  for b in tri.boundary_components)


def _ideal_shape(tri):
    return sorted((v.link_kind, v.link_genus)
                  for v in tri.vertices if v.is_ideal)


def _fold_data(tri, edge_index):
    """The two boundary face slots alongside a boundary edge."""
    embs = tri.edge_embeddings(edge_index)
    t0, p0 = embs[0]
    tk, pk = embs[-1]
    slot_a = (t0, perm4.apply(p0, 3))
    slot_b = (tk, perm4.apply(pk, 2))
    ea = (perm4.apply(p0, 0), perm4.apply(p0, 1))
    eb = (perm4.apply(pk, 0), perm4.apply(pk, 1))
    return slot_a, ea, slot_b, eb


def close_book(tri, edge_index, check_invariants=True):
    """
    Fold the two boundary triangles either side of a boundary edge onto
    each other, pushing that part of the boundary into the interior.

    Returns the new triangulation, or None when the fold is not legal.
    """
    edge = tri.edges[edge_index]
    if not edge.is_boundary:
        return None
    slot_a, ea, slot_b, eb = _fold_data(tri, edge_index)
    if slot_a == slot_b:
        return None
    (ta, fa), (tb, fb) = slot_a, slot_b
    other_a = next(v for v in perm4.FACE_VERTS[fa] if v not in ea)
    other_b = next(v for v in perm4.FACE_VERTS[fb] if v not in eb)

    # The two triangles must meet exactly along the folding edge, and the
    # four side edges being identified must be pairwise distinct.
    if tri.vertex_class(ta, other_a) == tri.vertex_class(tb, other_b):
        return None
    sides = [
        tri.edge_class(ta, perm4.EDGE_NUM[(ea[0], other_a)]),
        tri.edge_class(tb, perm4.EDGE_NUM[(eb[0], other_b)]),
        tri.edge_class(ta, perm4.EDGE_NUM[(ea[1], other_a)]),
        tri.edge_class(tb, perm4.EDGE_NUM[(eb[1], other_b)]),
    ]
    if len(set(sides)) != 4 or edge_index in sides:
        return None

    images = [0] * 4
    images[ea[0]], images[ea[1]] = eb[0], eb[1]
    images[other_a] = other_b
    images[fa] = fb
    p = perm4.from_images(images)
    rows = [list(r) for r in tri.gluings]
    rows[ta][fa] = (tb, p)
    rows[tb][fb] = (ta, perm4.inv(p))
    try:
        folded = Triangulation(tuple(tuple(r) for r in rows))
    except Exception:
        return None
    if check_invariants:
        if not folded.is_manifold():
            return None
        if _boundary_shape(folded) != _boundary_shape(tri):
            return None
        if homology_of_complex(folded) != homology_of_complex(tri):
            return None
    return folded


def two_zero(tri, edge_index, check_invariants=True):
    """
    Flatten the two-tetrahedron pillow around an internal degree-2 edge.

    This is internal simplification plumbing (it is not part of the public
    move set): the two tetrahedra are removed and their outer faces are
    glued together through the flattened pillow.  Returns the new
    triangulation, or None when the configuration is not one this routine
    can safely flatten.
    """
    edge = tri.edges[edge_index]
    if edge.is_boundary or edge.degree != 2 or edge.distinct_tets != 2:
        return None
    (t1, p), (t2, q) = tri.edge_embeddings(edge_index)

    # The flattening identifies the outer faces of the pillow in pairs,
    # with the covertices swapping sides.
    m = [0] * 4
    for i, j in ((0, 0), (1, 1), (2, 3), (3, 2)):
        m[perm4.apply(p, i)] = perm4.apply(q, j)
    m = perm4.from_images(m)
    pillow = {t1, t2}
    merged = {}
    for end in (0, 1):
        fa = (t1, perm4.apply(p, end))
        fb = (t2, perm4.apply(q, end))
        merged[fa] = (fb, m)
        merged[fb] = (fa, perm4.inv(m))

    def route(slot, acc):
        seen = set()
        while True:
            if slot in seen:
                return "cycle"
            seen.add(slot)
            other, hop = merged[slot]
            acc = perm4.mul(hop, acc)
            entry = tri.gluings[other[0]][other[1]]
            if entry is None:
                return None
            t_next, g = entry
            acc = perm4.mul(g, acc)
            nxt = (t_next, perm4.apply(g, other[1]))
            if t_next not in pillow or nxt not in merged:
                return (nxt, acc)
            slot = nxt

    survivors = [t for t in range(tri.size) if t not in pillow]
    new_index = {t: i for i, t in enumerate(survivors)}
    rows = []
    for t in survivors:
        row = []
        for f, entry in enumerate(tri.gluings[t]):
            if entry is None:
                row.append(None)
                continue
            t_adj, g = entry
            slot = (t_adj, perm4.apply(g, f))
            if t_adj in pillow:
                if slot not in merged:
                    # Glued to one of the pillow's inner faces: impossible
                    # for a genuine degree-2 pillow.
                    return None
                routed = route(slot, g)
                if routed == "cycle":
                    return None
                if routed is None:
                    row.append(None)
                else:
                    (t_new, _), acc = routed
                    if t_new in pillow:
                        return None
                    row.append((new_index[t_new], acc))
            else:
                row.append((new_index[t_adj], g))
        rows.append(row)
    if not rows:
        # Flattening the whole triangulation away is never a valid 2-0
        # move; this is the degenerate pillow-closed-on-itself case.
        return None
    try:
        flattened = Triangulation(tuple(tuple(r) for r in rows))
    except Exception:
        return None
    if not flattened.is_connected():
        return None
    if check_invariants:
        if _boundary_shape(flattened) != _boundary_shape(tri):
            return None
        if _ideal_shape(flattened) != _ideal_shape(tri):
            return None
        if homology_of_complex(flattened) != homology_of_complex(tri):
            return None
    return flattened


def two_one(tri, edge_index):
    """
    Remove an internal degree-1 edge by a 2-3 move followed by a 2-0
    flattening of the edge's image.  Returns None when unavailable.
    """
    edge = tri.edges[edge_index]
    if edge.is_boundary or edge.degree != 1:
        return None
    t, p = tri.edge_embeddings(edge_index)[0]
    for end in (0, 1):
        face_index = perm4.apply(p, end)
        cls = tri.face_class(t, face_index)
        face = tri.faces[cls]
        if face.is_boundary:
            continue
        (t1, _), (t2, _) = face.germs
        if t1 == t2:
            continue
        site = moves_mod.MoveSite(moves_mod.MoveSite.TWO_THREE, cls,
                                  tri.uid)
        up, tracking = moves_mod.apply_23(tri, site)
        out = two_zero(up, tracking.persisted[edge_index])
        if out is not None:
            return out
    return None


def layer_on_boundary_edge(tri, edge_index):
    """
    Glue a fresh tetrahedron across the two boundary triangles alongside
    a boundary edge, flipping the boundary diagonal.  The manifold is
    unchanged; the size grows by one.
    """
    edge = tri.edges[edge_index]
    if not edge.is_boundary:
        return None
    slot_a, ea, slot_b, eb = _fold_data(tri, edge_index)
    if slot_a == slot_b:
        return None
    (ta, fa), (tb, fb) = slot_a, slot_b
    other_a = next(v for v in perm4.FACE_VERTS[fa] if v not in ea)
    other_b = next(v for v in perm4.FACE_VERTS[fb] if v not in eb)
    layer = tri.size
    images_a = [0] * 4
    images_a[ea[0]], images_a[ea[1]] = 0, 1
    images_a[other_a], images_a[fa] = 2, 3
    images_b = [0] * 4
    images_b[eb[0]], images_b[eb[1]] = 0, 1
    images_b[other_b], images_b[fb] = 3, 2
    pa = perm4.from_images(images_a)
    pb = perm4.from_images(images_b)
    rows = [list(r) for r in tri.gluings] + [[None] * 4]
    rows[ta][fa] = (layer, pa)
    rows[layer][3] = (ta, perm4.inv(pa))
    rows[tb][fb] = (layer, pb)
    rows[layer][2] = (tb, perm4.inv(pb))
    try:
        return Triangulation(tuple(tuple(r) for r in rows))
    except Exception:
        return None


def _first_32(tri):
    for edge in tri.edges:
        if (not edge.is_boundary and edge.degree == 3
                and edge.distinct_tets == 3):
            site = moves_mod.MoveSite(moves_mod.MoveSite.THREE_TWO,
                                      edge.index, tri.uid)
            new_tri, _ = moves_mod.apply_32(tri, site)
            return new_tri
    return None


def _first_20(tri):
    for edge in tri.edges:
        if (not edge.is_boundary and edge.degree == 2
                and edge.distinct_tets == 2):
            out = two_zero(tri, edge.index)
            if out is not None:
                return out
    return None


def _first_21(tri):
    for edge in tri.edges:
        if not edge.is_boundary and edge.degree == 1:
            out = two_one(tri, edge.index)
            if out is not None:
                return out
    return None


def monotonic(tri):
    """Apply size-reducing moves and close-book folds until none is
    available: 3-2 moves, 2-0 flattenings, 2-1 composites, folds."""
    while True:
        smaller = _first_32(tri) or _first_20(tri) or _first_21(tri)
        if smaller is not None:
            tri = smaller
            continue
        folded = None
        for edge in tri.edges:
            if edge.is_boundary:
                folded = close_book(tri, edge.index)
                if folded is not None:
                    break
        if folded is None:
            return tri
        tri = folded


def _expansions(tri, allow_layer):
    for site in moves_mod.two_three_sites(tri):
        up, _ = moves_mod.apply_23(tri, site)
        yield up
    if allow_layer:
        for edge in tri.edges:
            if edge.is_boundary:
                layered = layer_on_boundary_edge(tri, edge.index)
                if layered is not None:
                    yield layered


def simplify(tri, height=3, max_nodes=400, deadline=None):
    """
    Shrink a triangulation with size-reducing moves, folds, and bounded
    upward excursions (2-3 moves and boundary layerings).  Returns a
    triangulation of the same manifold, never larger than the monotonic
    simplification of the input.
    """
    import heapq
    from time import monotonic as clock

    tri = monotonic(tri)
    improved = True
    while improved:
        improved = False
        seen = {isosig.encode(tri)}
        counter = 0
        heap = [(tri.size, 0, tri)]
        nodes = 0
        cap = tri.size + height
        allow_layer = bool(tri.boundary_components)
        while heap and nodes < max_nodes and not improved:
            if deadline is not None and clock() > deadline:
                return tri
            _, _, current = heapq.heappop(heap)
            if current.size >= cap:
                continue
            for up in _expansions(current, allow_layer):
                candidate = monotonic(up)
                nodes += 1
                if candidate.size < tri.size:
                    tri = candidate
                    improved = True
                    break
                sig = isosig.encode(candidate)
                if sig not in seen and candidate.size < cap:
                    seen.add(sig)
                    counter += 1
                    heapq.heappush(heap, (candidate.size, counter,
                                          candidate))
                if nodes >= max_nodes or (
                        deadline is not None and clock() > deadline):
                    break
    return tri
