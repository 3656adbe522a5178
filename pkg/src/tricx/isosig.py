"""
Isomorphism signatures: canonical strings naming combinatorial isomorphism
classes of triangulations.

The format is the printable base-64 scheme used by mainstream 3-manifold
software, so any signature produced elsewhere in that scheme decodes here
and re-encodes to the identical string.  A signature consists of the
tetrahedron count, a packed sequence of facet actions (boundary / join new
/ join seen), the destination tetrahedron of every join-to-seen, and the
gluing permutation index of every join-to-seen.  The canonical signature
is the smallest candidate string over every choice of starting tetrahedron
and starting vertex labelling, compared by ordinary string ordering.
"""
from . import perm4
from .errors import (
    MalformedSignature,
    InvalidGluingData,
    EmptyTriangulation,
    DisconnectedTriangulation,
    TricxError,
)
from .triangulation import Triangulation

SCHARS = "abcdefghijklmnopqrstuvwxyz" \
         "ABCDEFGHIJKLMNOPQRSTUVWXYZ" \
         "0123456789+-"
_SVAL = {c: i for i, c in enumerate(SCHARS)}
_SORD = tuple(ord(c) for c in SCHARS)


def _size_chars(size):
    chars = []
    if size < 63:
        chars.append(size)
    else:
        n_chars = 0
        tmp = size
        while tmp > 0:
            tmp >>= 6
            n_chars += 1
        chars.append(63)
        chars.append(n_chars)
        tmp = size
        for _ in range(n_chars):
            chars.append(tmp & 63)
            tmp >>= 6
    return chars


def _candidate(tri, start, start_perm, best, want_iso):
    """
    One canonical-form candidate, compared lazily against best.

    Returns (char_codes, relabelling) where char_codes is None as soon as
    the candidate proves worse than best.  The relabelling maps each old
    tetrahedron to (new index, vertex permutation) and is only computed
    when want_iso is set.
    """
    n = tri.size
    gluings = tri.gluings
    mul = perm4.mul
    inv = perm4.inv
    s4 = perm4.S4

    image = [-1] * n
    vertex_map = [0] * n
    preimage = [-1] * n
    image[start] = 0
    vertex_map[start] = inv(start_perm)
    preimage[0] = start

    size_part = _size_chars(n)
    chars = list(size_part)
    # Position in `chars` where facet-action chars begin.
    dest_chars = []
    gluing_chars = []
    actions = []

    next_unused = 1
    simp_img = 0
    while simp_img < n and preimage[simp_img] >= 0:
        src = preimage[simp_img]
        vm = vertex_map[src]
        vm_inv = inv(vm)
        vm_images = s4[vm]
        row = gluings[src]
        for facet_img in range(4):
            facet_src = s4[vm_inv][facet_img]
            entry = row[facet_src]
            if entry is None:
                actions.append(0)
                continue
            adj, g = entry
            if image[adj] >= 0:
                other_img = s4[vertex_map[adj]][s4[g][facet_src]]
                if image[adj] < simp_img or (
                        image[adj] == simp_img and other_img < facet_img):
                    continue
                actions.append(2)
                dest_chars.append(image[adj])
                gluing_chars.append(mul(mul(vertex_map[adj], g), vm_inv))
            else:
                image[adj] = next_unused
                preimage[next_unused] = adj
                next_unused += 1
                vertex_map[adj] = mul(vm, inv(g))
                actions.append(1)
        simp_img += 1

    # Pack actions three to a character.
    for i in range(0, len(actions), 3):
        code = actions[i]
        if i + 1 < len(actions):
            code |= actions[i + 1] << 2
        if i + 2 < len(actions):
            code |= actions[i + 2] << 4
        chars.append(code)
    size_field = len(size_part) if n < 63 else len(size_part) - 2
    for d in dest_chars:
        tmp = d
        for _ in range(size_field):
            chars.append(tmp & 63)
            tmp >>= 6
    chars.extend(gluing_chars)

    if best is not None:
        for mine, theirs in zip(chars, best):
            if _SORD[mine] > _SORD[theirs]:
                return None, None
            if _SORD[mine] < _SORD[theirs]:
                break

    iso = None
    if want_iso:
        iso = [(image[t], vertex_map[t]) for t in range(n)]
    return chars, iso


def encode(tri, with_isomorphism=False):
    """
    The canonical isomorphism signature of a connected triangulation.

    With with_isomorphism=True, also returns the relabelling that carries
    the input onto the canonical form: a list holding, for each input
    tetrahedron, a pair (canonical index, vertex permutation).
    """
    if tri.size == 0:
        raise EmptyTriangulation("cannot sign an empty triangulation")
    if not tri.is_connected():
        raise DisconnectedTriangulation(
            "signatures are only defined for connected triangulations")

    best = None
    best_iso = None
    for start in range(tri.size):
        for p in range(24):
            chars, iso = _candidate(tri, start, p, best,
                                    with_isomorphism)
            if chars is None:
                continue
            if best is None or [_SORD[c] for c in chars] < \
                    [_SORD[c] for c in best]:
                best = chars
                best_iso = iso
    sig = "".join(SCHARS[c] for c in best)
    if with_isomorphism:
        return sig, best_iso
    return sig


class _Reader:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def done(self):
        return self.pos >= len(self.text)

    def next(self):
        if self.pos >= len(self.text):
            raise MalformedSignature("signature ended prematurely")
        c = self.text[self.pos]
        self.pos += 1
        try:
            return _SVAL[c]
        except KeyError:
            raise MalformedSignature(
                "invalid character {!r} in signature".format(c)) from None


def _decode_component(reader, rows):
    first = reader.next()
    if first < 63:
        n = first
        size_field = 1
    else:
        size_field = reader.next()
        n = 0
        for i in range(size_field):
            n |= reader.next() << (6 * i)
    if n == 0:
        raise MalformedSignature("zero-size component")

    actions = []
    accounted = 0
    while accounted < 4 * n:
        code = reader.next()
        for k in range(3):
            if accounted >= 4 * n:
                if (code >> (2 * k)) & 3:
                    raise MalformedSignature("stray facet-action bits")
                continue
            action = (code >> (2 * k)) & 3
            if action == 3:
                raise MalformedSignature("facet action 3 is undefined")
            actions.append(action)
            accounted += 1 if action == 0 else 2
    if accounted != 4 * n:
        raise MalformedSignature("facet actions overrun the facet count")

    n_joins = sum(1 for a in actions if a == 2)
    dests = []
    for _ in range(n_joins):
        d = 0
        for i in range(size_field):
            d |= reader.next() << (6 * i)
        dests.append(d)
    perms = []
    for _ in range(n_joins):
        p = reader.next()
        if p >= 24:
            raise InvalidGluingData("permutation index {} out of range"
                                    .format(p))
        perms.append(p)

    base = len(rows)
    for _ in range(n):
        rows.append([None] * 4)
    next_unused = 1
    action_pos = 0
    join_pos = 0
    for i in range(n):
        for f in range(4):
            if rows[base + i][f] is not None:
                continue
            action = actions[action_pos]
            action_pos += 1
            if action == 0:
                continue
            if action == 1:
                if next_unused >= n:
                    raise InvalidGluingData(
                        "join-to-new overruns the tetrahedron count")
                rows[base + i][f] = (base + next_unused, perm4.IDENTITY)
                rows[base + next_unused][f] = (base + i, perm4.IDENTITY)
                next_unused += 1
                continue
            d = dests[join_pos]
            p = perms[join_pos]
            join_pos += 1
            if d >= next_unused:
                raise InvalidGluingData(
                    "join destination {} not yet created".format(d))
            f2 = perm4.apply(p, f)
            if d == i and f2 == f:
                raise InvalidGluingData("face glued to itself")
            if rows[base + d][f2] is not None:
                raise InvalidGluingData("face glued twice")
            rows[base + i][f] = (base + d, p)
            rows[base + d][f2] = (base + i, perm4.inv(p))
    if action_pos != len(actions) or join_pos != n_joins:
        raise MalformedSignature("unused gluing data in component")
    if next_unused != n:
        raise InvalidGluingData("component is not connected")


def decode(text):
    """
    Decode an isomorphism signature into a triangulation.

    Concatenated components are accepted (the format allows them), though
    every signature this toolkit emits has a single connected component.
    """
    text = text.strip()
    if not text:
        raise MalformedSignature("empty signature")
    reader = _Reader(text)
    rows = []
    while not reader.done():
        _decode_component(reader, rows)
    try:
        return Triangulation(tuple(tuple(r) for r in rows))
    except TricxError as exc:
        raise InvalidGluingData(
            "signature decodes to an invalid triangulation: {}"
            .format(exc)) from exc
