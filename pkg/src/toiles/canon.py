"""Canonical encodings, isomorphism testing, and the orientation double cover.

The canonical code is a length-prefixed BFS spanning-tree encoding of the
decorated rotation system, minimized over every boundary start dart and both
traversal senses (a disk homeomorphism may reverse orientation), exposed as
a lowercase hex string.

The double cover glues a mirrored copy of the disk to the original along the
boundary: real darts lift once, inner darts twice, and the deck involution
fixes exactly the lifted boundary.
"""

from collections import deque
from dataclasses import dataclass

from .core import (
    BLACK, WHITE, CROSS, MONO_SOLID, MONO_BOLD, MONO_DOTTED,
    SOLID, BOLD, DOTTED,
    Dessin, Violation, build, is_mono,
)

_EDGE_NUM = {SOLID: 0, BOLD: 1, DOTTED: 2}
_VERTEX_NUM = {BLACK: 0, WHITE: 1, CROSS: 2,
               MONO_SOLID: 3, MONO_BOLD: 4, MONO_DOTTED: 5}


def _encode_from(d: Dessin, start: int, forward: bool) -> bytes:
    step = d.nxt if forward else d.prv
    idx = {start: 0}
    order = [start]
    for k in order:
        for m in (step[k], d.twn[k]):
            if m not in idx:
                idx[m] = len(order)
                order.append(m)
    out = bytearray()
    out += len(order).to_bytes(3, "big")
    for k in order:
        out += idx[step[k]].to_bytes(3, "big")
        out += idx[d.twn[k]].to_bytes(3, "big")
        out.append(
            _EDGE_NUM[d.color[k]]
            | _VERTEX_NUM[d.vcolor[d.dart_vertex[k]]] << 2
            | (1 << 5 if d.outgoing[k] else 0)
            | (1 << 6 if d.real[k] else 0)
        )
    for tag in sorted(d.marks):
        v = d.marks[tag]
        rep = min(idx[k] for k in d.vstars[v])
        out += b"\xff" + tag.encode("utf-8") + b"\x00" + rep.to_bytes(3, "big")
    return bytes(out)


def canonical_code(d: Dessin) -> str:
    """Relabeling-invariant code; equal iff dessins are isomorphic."""
    best = min(
        min(_encode_from(d, b, True) for b in d.boundary),
        min(_encode_from(d, d.twn[b], False) for b in d.boundary),
    )
    return best.hex()


def are_isomorphic(a: Dessin, b: Dessin) -> bool:
    return canonical_code(a) == canonical_code(b)


@dataclass
class CoverMap:
    """Closed decorated map on the sphere, with its deck involution and the
    section back to the disk dessin it covers."""

    nxt: tuple
    twn: tuple
    dart_vertex: tuple
    color: tuple
    outgoing: tuple
    real: tuple
    vcolor: tuple
    deck: tuple
    deck_vertex: tuple
    section: tuple
    vsection: tuple

    @property
    def dart_count(self):
        return len(self.nxt)

    @property
    def vertex_count(self):
        return len(self.vcolor)

    @property
    def edge_count(self):
        return len(self.nxt) // 2

    def prv_table(self):
        prv = [0] * len(self.nxt)
        for k, m in enumerate(self.nxt):
            prv[m] = k
        return prv

    def stars(self):
        out = [[] for _ in self.vcolor]
        seen = [False] * len(self.nxt)
        for k in range(len(self.nxt)):
            if seen[k]:
                continue
            m = k
            while not seen[m]:
                seen[m] = True
                out[self.dart_vertex[m]].append(m)
                m = self.nxt[m]
        return out

    def faces(self):
        prv = self.prv_table()
        seen = [False] * len(self.nxt)
        orbits = []
        for k in range(len(self.nxt)):
            if seen[k]:
                continue
            orbit = []
            m = k
            while not seen[m]:
                seen[m] = True
                orbit.append(m)
                m = prv[self.twn[m]]
            orbits.append(tuple(orbit))
        return orbits

    def degree(self, v):
        return sum(1 for k in range(len(self.nxt)) if self.dart_vertex[k] == v)


def double_cover(d: Dessin) -> CoverMap:
    """Orientation double cover: a closed map on the sphere.

    Real darts lift once, inner darts twice (a plus copy keeping the
    rotation sense and a minus copy reversing it).  At a real vertex with
    rotation (back, fwd, i1..im) the lifted rotation interleaves the two
    fans: (fwd, i1+..im+, back, im-..i1-).
    """
    n = d.dart_count
    minus = list(range(n))
    section = list(range(n))
    for k in range(n):
        if not d.real[k]:
            minus[k] = len(section)
            section.append(k)
    total = len(section)

    vminus = list(range(d.vertex_count))
    vsection = list(range(d.vertex_count))
    for v in range(d.vertex_count):
        if not d.on_boundary(v):
            vminus[v] = len(vsection)
            vsection.append(v)

    dart_vertex = [0] * total
    color = [None] * total
    outgoing = [False] * total
    real = [False] * total
    for k in range(n):
        dart_vertex[k] = d.dart_vertex[k]
        color[k] = d.color[k]
        outgoing[k] = d.outgoing[k]
        real[k] = d.real[k]
        if minus[k] != k:
            m = minus[k]
            dart_vertex[m] = vminus[d.dart_vertex[k]]
            color[m] = d.color[k]
            outgoing[m] = d.outgoing[k]

    nxt = [0] * total
    twn = [0] * total
    for k in range(n):
        twn[k] = d.twn[k]
        if minus[k] != k:
            twn[minus[k]] = minus[d.twn[k]]

    bset = set(d.boundary)
    bprev = {}
    for i, b in enumerate(d.boundary):
        nxt_b = d.boundary[(i + 1) % len(d.boundary)]
        bprev[nxt_b] = b

    for v in range(d.vertex_count):
        star = d.vstars[v]
        if d.on_boundary(v):
            fwd = next(k for k in star if k in bset)
            back = d.twn[bprev[fwd]]
            fan = []
            k = d.nxt[fwd]
            while k != back:
                fan.append(k)
                k = d.nxt[k]
            seq = [fwd] + fan + [back] + [minus[x] for x in reversed(fan)]
            for i, k in enumerate(seq):
                nxt[k] = seq[(i + 1) % len(seq)]
        else:
            for k in star:
                nxt[k] = d.nxt[k]
                nxt[minus[k]] = minus[d.prv[k]]

    deck = list(range(total))
    for k in range(n):
        if minus[k] != k:
            deck[k] = minus[k]
            deck[minus[k]] = k
    deck_vertex = list(range(len(vsection)))
    for v in range(d.vertex_count):
        if vminus[v] != v:
            deck_vertex[v] = vminus[v]
            deck_vertex[vminus[v]] = v

    vcolor = [d.vcolor[vsection[v]] for v in range(len(vsection))]

    return CoverMap(
        nxt=tuple(nxt), twn=tuple(twn), dart_vertex=tuple(dart_vertex),
        color=tuple(color), outgoing=tuple(outgoing), real=tuple(real),
        vcolor=tuple(vcolor), deck=tuple(deck),
        deck_vertex=tuple(deck_vertex),
        section=tuple(section), vsection=tuple(vsection),
    )


_RECEIVES = {BLACK: SOLID, WHITE: BOLD, CROSS: DOTTED}
_EMITS = {BLACK: BOLD, WHITE: DOTTED, CROSS: SOLID}


def validate_cover(c: CoverMap):
    """Closed-map validation: conditions 2-8 minus the boundary clause,
    admissibility, and sphere Euler characteristic."""
    report = []
    n = c.dart_count
    for k in range(n):
        if c.twn[k] == k or c.twn[c.twn[k]] != k:
            report.append(Violation("TwinNotInvolution", k, "bad twin"))

    stars = c.stars()
    for v, star in enumerate(stars):
        col = c.vcolor[v]
        if is_mono(col):
            if len(star) < 3:
                report.append(Violation("condition_3", v, "low degree"))
            want = {MONO_SOLID: SOLID, MONO_BOLD: BOLD,
                    MONO_DOTTED: DOTTED}[col]
            if any(c.color[k] != want for k in star):
                report.append(Violation("condition_5", v, "mixed colors"))
        else:
            if len(star) < 2:
                report.append(Violation("condition_2", v, "low degree"))
            for k in star:
                ok = (c.color[k] == _RECEIVES[col] and not c.outgoing[k]) or \
                     (c.color[k] == _EMITS[col] and c.outgoing[k])
                if not ok:
                    cond = {CROSS: "condition_6", BLACK: "condition_7",
                            WHITE: "condition_8"}[col]
                    report.append(Violation(cond, v, "wrong edge"))

    faces = c.faces()
    for orbit in faces:
        if len({c.outgoing[k] for k in orbit}) > 1:
            report.append(Violation("condition_4", orbit[0], "incoherent face"))

    mono = [v for v in range(c.vertex_count) if is_mono(c.vcolor[v])]
    arcs = {v: [] for v in mono}
    for k in range(n):
        if c.outgoing[k]:
            u, w = c.dart_vertex[k], c.dart_vertex[c.twn[k]]
            if is_mono(c.vcolor[u]) and is_mono(c.vcolor[w]):
                arcs[u].append(w)
    state = {v: 0 for v in mono}

    def cyclic(v):
        state[v] = 1
        for w in arcs[v]:
            if state[w] == 1 or (state[w] == 0 and cyclic(w)):
                return True
        state[v] = 2
        return False

    if any(state[v] == 0 and cyclic(v) for v in mono):
        report.append(Violation("admissibility", None, "directed monochrome cycle"))

    euler = c.vertex_count - c.edge_count + len(faces)
    if euler != 2:
        report.append(Violation("euler", None, f"V-E+F = {euler}, expected 2"))
    return report


def cover_vertex_index(c: CoverMap, v) -> int:
    """Index upstairs: half the number of incident darts."""
    deg = c.degree(v)
    if deg % 2:
        raise ValueError(f"cover vertex {v} has odd degree {deg}")
    return deg // 2


def quotient(c: CoverMap) -> Dessin:
    """Disk dessin underneath a cover with a boundary-reflection involution.

    The fixed edges of a reflection form a circle separating the sphere into
    two hemispheres exchanged by the involution; 2-coloring the faces (an
    inner edge keeps the color, a fixed edge flips it) recovers them.  One
    hemisphere plus the fixed circle descends to the disk dessin.
    """
    n = c.dart_count
    stars = c.stars()
    fixed = [c.deck[k] == k for k in range(n)]
    if not any(fixed):
        raise ValueError("involution has no fixed darts")

    faces = c.faces()
    face_of = [0] * n
    for i, f in enumerate(faces):
        for k in f:
            face_of[k] = i
    side = [None] * len(faces)
    side[0] = 0
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for k in faces[f]:
            g = face_of[c.twn[k]]
            want = side[f] ^ (1 if fixed[k] else 0)
            if side[g] is None:
                side[g] = want
                queue.append(g)
            elif side[g] != want:
                raise ValueError("involution is not a boundary reflection")
    for k in range(n):
        if not fixed[k] and side[face_of[c.deck[k]]] == side[face_of[k]]:
            raise ValueError("involution is not a boundary reflection")

    kept = [k for k in range(n) if fixed[k] or side[face_of[k]] == 0]
    kept_set = set(kept)
    for k in kept:
        if c.twn[k] not in kept_set:
            raise ValueError("involution is not a boundary reflection")
    f0 = next(k for k in range(n) if fixed[k])

    # downstairs rotation: at a fixed vertex re-chain (back, fwd, fan);
    # elsewhere the chosen copy's rotation survives as is
    nxt_down = {}
    for v in range(c.vertex_count):
        star = [k for k in stars[v] if k in kept_set]
        if not star:
            continue
        fixed_here = [k for k in star if fixed[k]]
        if fixed_here:
            if len(fixed_here) != 2:
                raise ValueError("fixed vertex without exactly 2 fixed darts")
            rot = [fixed_here[0]]
            k = c.nxt[rot[0]]
            while k != rot[0]:
                if k in kept_set:
                    rot.append(k)
                k = c.nxt[k]
            # rot = [f1, fan..., f2] in cover order; downstairs cycle is
            # (f2, f1, fan...)
            split = rot.index(fixed_here[1])
            f1, fan, f2 = rot[0], rot[1:split], rot[split]
            if split != len(rot) - 1:
                # chosen fan lies after f2: roles swap
                f1, fan, f2 = f2, rot[split + 1:], f1
            cycle = [f2, f1] + fan
            for i, k in enumerate(cycle):
                nxt_down[k] = cycle[(i + 1) % len(cycle)]
        else:
            if len(star) != len(stars[v]):
                raise ValueError("involution is not a boundary reflection")
            for k in star:
                nxt_down[k] = c.nxt[k]

    # boundary: walk the fixed darts via next(twin(b))
    walk = [f0]
    while True:
        b = nxt_down[c.twn[walk[-1]]]
        if b == f0:
            break
        walk.append(b)

    # the walk might be the reversed boundary (twins); both satisfy the
    # boundary identity for the rotation we just built, so emit as found
    darts = [
        {"id": k, "vertex": c.dart_vertex[k], "next": nxt_down[k],
         "twin": c.twn[k], "color": c.color[k],
         "outgoing": c.outgoing[k], "real": fixed[k]}
        for k in kept
    ]
    vset = sorted({c.dart_vertex[k] for k in kept})
    vertices = [{"id": v, "color": c.vcolor[v]} for v in vset]
    return build(darts, vertices, walk)
