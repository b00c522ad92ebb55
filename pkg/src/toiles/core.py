"""Combinatorial-map model of dessins on the disk.

A dessin is stored as a decorated rotation system: darts (half-edges) with a
counterclockwise successor at each vertex, a twin involution pairing the two
halves of every edge, an edge color, a direction flag, and a marked boundary
walk.  The disk boundary is walked counterclockwise, so every interior region
lies on the left of the walk.
"""

from __future__ import annotations

from dataclasses import dataclass

SOLID = "solid"
BOLD = "bold"
DOTTED = "dotted"
EDGE_COLORS = (SOLID, BOLD, DOTTED)

BLACK = "black"
WHITE = "white"
CROSS = "cross"
MONO_SOLID = "mono_solid"
MONO_BOLD = "mono_bold"
MONO_DOTTED = "mono_dotted"
ESSENTIAL_COLORS = (BLACK, WHITE, CROSS)
MONO_COLORS = (MONO_SOLID, MONO_BOLD, MONO_DOTTED)
VERTEX_COLORS = ESSENTIAL_COLORS + MONO_COLORS

MONO_OF_EDGE = {SOLID: MONO_SOLID, BOLD: MONO_BOLD, DOTTED: MONO_DOTTED}
EDGE_OF_MONO = {m: c for c, m in MONO_OF_EDGE.items()}

# Directed edge colors around the j-cycle: a vertex of each essential color
# receives edges of one color and emits edges of the next one.
RECEIVES = {BLACK: SOLID, WHITE: BOLD, CROSS: DOTTED}
EMITS = {BLACK: BOLD, WHITE: DOTTED, CROSS: SOLID}


def is_essential(vcolor):
    return vcolor in ESSENTIAL_COLORS


def is_mono(vcolor):
    return vcolor in MONO_COLORS


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: object = None
    message: str = ""

    def as_obj(self):
        return {"kind": self.kind, "subject": self.subject, "message": self.message}


class BuildError(Exception):
    """Structural failure; carries every violated constraint."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(f"{v.kind}: {v.message}" for v in self.violations))

    @property
    def kinds(self):
        return {v.kind for v in self.violations}


class DegreeInconsistent(Exception):
    pass


@dataclass(frozen=True)
class VertexIndexReport:
    vertex: object
    index: int
    singular: bool
    nodal: bool
    isolation: str | None = None


@dataclass(frozen=True)
class Region:
    darts: tuple
    positive: bool
    essential_count: int

    @property
    def gonality(self):
        return self.essential_count


class Dessin:
    """Immutable-by-convention dessin value.

    Construct through :func:`build`; all fields use dense integer indices.
    ``dlabel``/``vlabel`` map indices back to the caller's identifiers.
    """

    def __init__(self, nxt, twn, dart_vertex, color, outgoing, real,
                 vcolor, boundary, marks, dlabel, vlabel):
        self.nxt = nxt
        self.twn = twn
        self.dart_vertex = dart_vertex
        self.color = color
        self.outgoing = outgoing
        self.real = real
        self.vcolor = vcolor
        self.boundary = boundary
        self.marks = dict(marks)
        self.dlabel = dlabel
        self.vlabel = vlabel
        prv = [0] * len(nxt)
        for d, e in enumerate(nxt):
            prv[e] = d
        self.prv = tuple(prv)
        stars = [[] for _ in vcolor]
        seen = [False] * len(nxt)
        for d in range(len(nxt)):
            if seen[d]:
                continue
            e = d
            while not seen[e]:
                seen[e] = True
                stars[dart_vertex[e]].append(e)
                e = nxt[e]
        self.vstars = tuple(tuple(s) for s in stars)
        self._faces = None
        self._phantom = None
        self._face_of = None

    # -- basic accessors -------------------------------------------------

    @property
    def dart_count(self):
        return len(self.nxt)

    @property
    def vertex_count(self):
        return len(self.vcolor)

    @property
    def edge_count(self):
        return len(self.nxt) // 2

    def star(self, v):
        """Darts at v in counterclockwise rotation order."""
        return self.vstars[v]

    def degree(self, v):
        return len(self.vstars[v])

    def on_boundary(self, v):
        return any(self.real[d] for d in self.vstars[v])

    def real_darts_at(self, v):
        return tuple(d for d in self.vstars[v] if self.real[d])

    def inner_darts_at(self, v):
        return tuple(d for d in self.vstars[v] if not self.real[d])

    def head(self, d):
        """Vertex the dart points to."""
        return self.dart_vertex[self.twn[d]]

    def boundary_fan(self, v):
        """Interior fan at a real vertex, ordered from the forward boundary
        dart around to the reversed backward dart (both included)."""
        fwd = next(d for d in self.vstars[v]
                   if self.real[d] and d in self._boundary_set())
        fan = [fwd]
        d = self.nxt[fwd]
        while d != fwd:
            fan.append(d)
            d = self.nxt[d]
        # rotation is (back, fwd, i1..ik); starting from fwd gives
        # (fwd, i1..ik, back) which is the interior fan order.
        return tuple(fan)

    def _boundary_set(self):
        if not hasattr(self, "_bset"):
            self._bset = frozenset(self.boundary)
        return self._bset

    # -- faces -----------------------------------------------------------

    def face_next(self, d):
        """Next dart of the face on the left of d."""
        return self.prv[self.twn[d]]

    def _compute_faces(self):
        if self._faces is not None:
            return
        seen = [False] * self.dart_count
        faces = []
        for d in range(self.dart_count):
            if seen[d]:
                continue
            orbit = []
            e = d
            while not seen[e]:
                seen[e] = True
                orbit.append(e)
                e = self.face_next(e)
            faces.append(tuple(orbit))
        phantom = None
        if self.boundary:
            probe = self.twn[self.boundary[0]]
            for i, f in enumerate(faces):
                if probe in f:
                    phantom = i
                    break
        self._faces = tuple(faces)
        self._phantom = phantom
        face_of = [0] * self.dart_count
        for i, f in enumerate(faces):
            for e in f:
                face_of[e] = i
        self._face_of = tuple(face_of)

    def faces(self):
        """All face orbits, including the phantom outer orbit."""
        self._compute_faces()
        return self._faces

    def phantom_face(self):
        self._compute_faces()
        return self._phantom

    def face_of(self, d):
        self._compute_faces()
        return self._face_of[d]

    def region_orbits(self):
        """Face orbits that are actual regions (phantom excluded)."""
        self._compute_faces()
        return tuple(f for i, f in enumerate(self._faces) if i != self._phantom)

    # -- serialization ---------------------------------------------------

    def to_obj(self):
        """Plain-dict form (dense integer ids)."""
        return {
            "format_version": "1",
            "surface": "disk",
            "vertices": [
                {"id": v, "color": self.vcolor[v]} for v in range(self.vertex_count)
            ],
            "darts": [
                {
                    "id": d,
                    "vertex": self.dart_vertex[d],
                    "next": self.nxt[d],
                    "twin": self.twn[d],
                    "color": self.color[d],
                    "outgoing": self.outgoing[d],
                    "real": self.real[d],
                }
                for d in range(self.dart_count)
            ],
            "boundary": list(self.boundary),
            "marks": {tag: v for tag, v in sorted(self.marks.items())},
        }


def build(darts, vertices, boundary, marks=None):
    """Assemble and structurally validate a dessin.

    ``darts``: iterable of dicts with keys id, vertex, next, twin, color,
    outgoing, real.  ``vertices``: iterable of dicts with keys id, color.
    ``boundary``: dart ids walking the disk boundary counterclockwise.
    Raises :class:`BuildError` listing every violated constraint.
    """
    darts = list(darts)
    vertices = list(vertices)
    boundary = list(boundary)
    marks = dict(marks or {})
    violations = []

    vids = [v["id"] for v in vertices]
    dids = [d["id"] for d in darts]
    if len(set(vids)) != len(vids):
        violations.append(Violation("DanglingReference", None, "duplicate vertex ids"))
    if len(set(dids)) != len(dids):
        violations.append(Violation("DanglingReference", None, "duplicate dart ids"))
    if violations:
        raise BuildError(violations)

    vindex = {v: i for i, v in enumerate(vids)}
    dindex = {d: i for i, d in enumerate(dids)}

    vcolor = []
    for v in vertices:
        if v["color"] not in VERTEX_COLORS:
            violations.append(Violation("DanglingReference", v["id"],
                                        f"unknown vertex color {v['color']!r}"))
        vcolor.append(v["color"])

    n = len(darts)
    nxt = [0] * n
    twn = [0] * n
    dart_vertex = [0] * n
    color = [None] * n
    outgoing = [False] * n
    real = [False] * n
    for i, d in enumerate(darts):
        for key, table in (("vertex", vindex), ("next", dindex), ("twin", dindex)):
            if d[key] not in table:
                violations.append(Violation("DanglingReference", d["id"],
                                            f"dart {key} -> {d[key]!r} unresolved"))
        if d.get("color") not in EDGE_COLORS:
            violations.append(Violation("DanglingReference", d["id"],
                                        f"unknown edge color {d.get('color')!r}"))
        color[i] = d.get("color")
        outgoing[i] = bool(d.get("outgoing"))
        real[i] = bool(d.get("real"))
    if violations:
        raise BuildError(violations)
    for i, d in enumerate(darts):
        nxt[i] = dindex[d["next"]]
        twn[i] = dindex[d["twin"]]
        dart_vertex[i] = vindex[d["vertex"]]

    lbl = lambda i: dids[i]

    # twin involution: fixed-point free, color-sharing, direction-splitting
    for i in range(n):
        if twn[i] == i:
            violations.append(Violation("TwinNotInvolution", lbl(i), "twin fixed point"))
        elif twn[twn[i]] != i:
            violations.append(Violation("TwinNotInvolution", lbl(i), "twin not an involution"))
        else:
            j = twn[i]
            if color[i] != color[j]:
                violations.append(Violation("TwinNotInvolution", lbl(i), "twin colors differ"))
            if outgoing[i] == outgoing[j]:
                violations.append(Violation("TwinNotInvolution", lbl(i),
                                            "edge needs exactly one outgoing dart"))
            if real[i] != real[j]:
                violations.append(Violation("TwinNotInvolution", lbl(i), "twin reality differs"))

    # next is a permutation whose orbits stay at one vertex
    images = set(nxt)
    if len(images) != n:
        violations.append(Violation("DanglingReference", None, "next is not a permutation"))
    else:
        for i in range(n):
            if dart_vertex[nxt[i]] != dart_vertex[i]:
                violations.append(Violation("DanglingReference", lbl(i),
                                            "next leaves the vertex star"))
    dartless = set(range(len(vcolor))) - set(dart_vertex)
    for v in sorted(dartless):
        violations.append(Violation("DanglingReference", vids[v], "vertex has no darts"))

    # boundary walk
    if not boundary:
        violations.append(Violation("BoundaryNotCycle", None, "boundary is empty"))
    else:
        bad_ref = [b for b in boundary if b not in dindex]
        if bad_ref:
            violations.append(Violation("BoundaryNotCycle", bad_ref[0],
                                        "boundary references unknown dart"))
        else:
            bwalk = [dindex[b] for b in boundary]
            bset = set(bwalk)
            if len(bset) != len(bwalk):
                violations.append(Violation("BoundaryNotCycle", None,
                                            "boundary repeats a dart"))
            reals = {i for i in range(n) if real[i]}
            covered = bset | {twn[b] for b in bset}
            if covered != reals or not all(real[b] for b in bwalk):
                violations.append(Violation("BoundaryNotCycle", None,
                                            "real darts and boundary walk disagree"))
            for k, b in enumerate(bwalk):
                c = bwalk[(k + 1) % len(bwalk)]
                if dart_vertex[c] != dart_vertex[twn[b]]:
                    violations.append(Violation("BoundaryNotCycle", lbl(b),
                                                "boundary darts not consecutive"))
                elif nxt[twn[b]] != c:
                    violations.append(Violation("BoundaryNotCycle", lbl(b),
                                                "boundary walk is not the outer face"))
            for v in range(len(vcolor)):
                rd = [d for d in range(n) if dart_vertex[d] == v and real[d]]
                if rd and len(rd) != 2:
                    violations.append(Violation("BoundaryNotCycle", vids[v],
                                                "real vertex needs exactly 2 real darts"))

    # constant-j (isotrivial) shapes carry no essential vertices; reject early
    if not any(is_essential(c) for c in vcolor):
        violations.append(Violation("Isotrivial", None,
                                    "no essential vertices"))

    for tag, v in marks.items():
        if v not in vindex:
            violations.append(Violation("DanglingReference", tag,
                                        f"mark targets unknown vertex {v!r}"))

    if violations:
        raise BuildError(violations)

    return Dessin(
        nxt=tuple(nxt), twn=tuple(twn), dart_vertex=tuple(dart_vertex),
        color=tuple(color), outgoing=tuple(outgoing), real=tuple(real),
        vcolor=tuple(vcolor),
        boundary=tuple(dindex[b] for b in boundary),
        marks={tag: vindex[v] for tag, v in marks.items()},
        dlabel=tuple(dids), vlabel=tuple(vids),
    )


def from_obj(obj):
    """Inverse of :meth:`Dessin.to_obj` (accepts any DessinFile-shaped dict)."""
    return build(obj["darts"], obj["vertices"], obj["boundary"],
                 obj.get("marks") or {})


# -- the eight structural conditions --------------------------------------

def validate_trichotomic(d: Dessin):
    """Report violations of the eight incidence/orientation conditions."""
    report = []
    if not d.boundary:
        report.append(Violation("condition_1", None, "boundary not contained in graph"))

    for v in range(d.vertex_count):
        c = d.vcolor[v]
        deg = d.degree(v)
        if is_essential(c) and deg < 2:
            report.append(Violation("condition_2", d.vlabel[v],
                                    f"essential vertex of degree {deg}"))
        if is_mono(c):
            if deg < 3:
                report.append(Violation("condition_3", d.vlabel[v],
                                        f"monochrome vertex of degree {deg}"))
            want = EDGE_OF_MONO[c]
            for k in d.star(v):
                if d.color[k] != want:
                    report.append(Violation("condition_5", d.vlabel[v],
                                            f"edge color {d.color[k]} at {c} vertex"))
        rules = {CROSS: "condition_6", BLACK: "condition_7", WHITE: "condition_8"}
        if c in rules:
            for k in d.star(v):
                ok = (d.color[k] == RECEIVES[c] and not d.outgoing[k]) or \
                     (d.color[k] == EMITS[c] and d.outgoing[k])
                if not ok:
                    direction = "outgoing" if d.outgoing[k] else "incoming"
                    report.append(Violation(rules[c], d.vlabel[v],
                                            f"{direction} {d.color[k]} edge at {c} vertex"))

    # condition 4: each region's walk is coherently directed
    for orbit in d.region_orbits():
        along = {d.outgoing[k] for k in orbit}
        if len(along) > 1:
            report.append(Violation("condition_4", d.dlabel[orbit[0]],
                                    "region walk mixes edge directions"))
    return report


def validate_dessin(d: Dessin):
    """Report admissibility, connectivity, genus, and region-pattern violations."""
    report = []

    # admissibility: no directed cycles through monochrome vertices
    mono = [v for v in range(d.vertex_count) if is_mono(d.vcolor[v])]
    arcs = {v: [] for v in mono}
    for k in range(d.dart_count):
        if d.outgoing[k]:
            u, w = d.dart_vertex[k], d.head(k)
            if is_mono(d.vcolor[u]) and is_mono(d.vcolor[w]):
                arcs[u].append(w)
    state = {v: 0 for v in mono}

    def cyclic(v):
        state[v] = 1
        for w in arcs[v]:
            if state[w] == 1 or (state[w] == 0 and cyclic(w)):
                return True
        state[v] = 2
        return False

    for v in mono:
        if state[v] == 0 and cyclic(v):
            report.append(Violation("admissibility", d.vlabel[v],
                                    "directed monochrome cycle"))
            break

    # connectivity across next/twin
    if d.dart_count:
        seen = [False] * d.dart_count
        stack = [0]
        seen[0] = True
        while stack:
            k = stack.pop()
            for m in (d.nxt[k], d.twn[k]):
                if not seen[m]:
                    seen[m] = True
                    stack.append(m)
        if not all(seen):
            report.append(Violation("connected", None, "graph is disconnected"))
            return report

    # genus: V - E + F = 2 counting the phantom outer face
    faces = d.faces()
    euler = d.vertex_count - d.edge_count + len(faces)
    if euler != 2:
        report.append(Violation("euler", None,
                                f"V-E+F = {euler}, expected 2 (disk embedding)"))
        return report

    # region color pattern
    for orbit in d.region_orbits():
        ok, count = _region_pattern(d, orbit)
        if not ok:
            report.append(Violation("region_pattern", d.dlabel[orbit[0]],
                                    "region walk breaks the solid-bold-dotted cycle"))
        elif count == 0:
            report.append(Violation("region_pattern", d.dlabel[orbit[0]],
                                    "region has no essential vertices"))
        elif count % 3:
            report.append(Violation("region_pattern", d.dlabel[orbit[0]],
                                    f"region has {count} essential vertices"))
    return report


_NEXT_COLOR = {SOLID: BOLD, BOLD: DOTTED, DOTTED: SOLID}
_CORNER_VERTEX = {SOLID: BLACK, BOLD: WHITE, DOTTED: CROSS}


def _region_pattern(d: Dessin, orbit):
    """Check one region's corner pattern; returns (ok, essential corner count)."""
    directions = {d.outgoing[k] for k in orbit}
    if len(directions) != 1:
        return False, 0
    positive = directions.pop()
    count = 0
    for k in orbit:
        m = d.face_next(k)
        v = d.dart_vertex[m]  # corner vertex between darts k and m
        c_in, c_out = d.color[k], d.color[m]
        vc = d.vcolor[v]
        if is_mono(vc):
            if c_in != c_out:
                return False, count
            continue
        count += 1
        if positive:
            if _NEXT_COLOR[c_in] != c_out or _CORNER_VERTEX[c_in] != vc:
                return False, count
        else:
            if _NEXT_COLOR[c_out] != c_in or _CORNER_VERTEX[c_out] != vc:
                return False, count
    return True, count


def regions(d: Dessin):
    """Region records: darts, direction sign, essential corner count."""
    out = []
    for orbit in d.region_orbits():
        ok, count = _region_pattern(d, orbit)
        positive = d.outgoing[orbit[0]]
        out.append(Region(darts=orbit, positive=positive, essential_count=count))
    return out


# -- indices and degree ----------------------------------------------------

def vertex_index(d: Dessin, v) -> VertexIndexReport:
    """Index, singularity, and nodal classification of one vertex."""
    c = d.vcolor[v]
    inner = len(d.inner_darts_at(v))
    if d.on_boundary(v):
        index = inner + 1
    else:
        deg = d.degree(v)
        if deg % 2:
            raise ValueError(f"inner vertex {d.vlabel[v]} has odd degree {deg}")
        index = deg // 2
    singular = (
        (c == BLACK and index % 3 != 0)
        or (c == WHITE and index % 2 != 0)
        or (c == CROSS and index >= 2)
    )
    nodal = c == CROSS and index == 2
    isolation = None
    if nodal and d.on_boundary(v):
        rc = {d.color[k] for k in d.real_darts_at(v)}
        if rc == {SOLID}:
            isolation = "isolated"
        elif rc == {DOTTED}:
            isolation = "non_isolated"
    return VertexIndexReport(vertex=v, index=index, singular=singular,
                             nodal=nodal, isolation=isolation)


def color_weight_sums(d: Dessin):
    """Per essential color: sum of indices, inner vertices counted twice."""
    sums = {BLACK: 0, WHITE: 0, CROSS: 0}
    for v in range(d.vertex_count):
        c = d.vcolor[v]
        if c in sums:
            w = 1 if d.on_boundary(v) else 2
            sums[c] += w * vertex_index(d, v).index
    return sums


def dessin_degree(d: Dessin) -> int:
    """Degree 3n of the minimal trigonal curve carrying this dessin."""
    sums = color_weight_sums(d)
    values = set(sums.values())
    if len(values) != 1:
        raise DegreeInconsistent(f"color sums disagree: {sums}")
    total = values.pop()
    if total == 0 or total % 6:
        raise DegreeInconsistent(f"weighted sum {total} is not a positive multiple of 6")
    return total // 2


# -- classification flags ---------------------------------------------------

def hyperbolic_component_count(d: Dessin) -> int:
    """Boundary components that are entirely dotted (whole-circle)."""
    if d.boundary and all(d.color[b] == DOTTED for b in d.boundary):
        return 1
    return 0


def classify_dessin(d: Dessin):
    """Reduced/generic/nodal/toile flags per the structural definitions."""
    reduced = True
    generic = True
    nodal = True
    for v in range(d.vertex_count):
        rep = vertex_index(d, v)
        c = d.vcolor[v]
        if c == BLACK and rep.index > 3:
            reduced = False
        if c == WHITE and rep.index > 2:
            reduced = False
        if is_mono(c) and (not d.on_boundary(v) or rep.index != 2):
            reduced = False
        if c in (BLACK, WHITE) and rep.singular:
            generic = False
        if c == CROSS and rep.index != 1:
            generic = False
        if rep.singular and not rep.nodal:
            nodal = False
    generic = generic and reduced
    hyp = hyperbolic_component_count(d)
    toile = nodal and hyp == 0
    return {
        "reduced": reduced,
        "generic": generic,
        "nodal": nodal,
        "toile": toile,
        "hyperbolic_components": hyp,
    }
