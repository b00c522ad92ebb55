"""Hand-built dessins used across the test suite.

Index bookkeeping for each fixture is worked out in the comments; the
degree-3 claims follow from the per-color sums (real vertices count once,
inner vertices twice) all equalling 6.
"""

from helpers import disk


def hyperbolic_cubic():
    """Degree-3 dessin whose boundary is entirely dotted.

    Boundary (ccw): w1 m1 w2 m2 w3 m3, every arc dotted; each arc is
    directed out of the white (whites emit dotted edges), so the three
    monochrome vertices are local maxima with an inner dart out to a cross.
    Inside: one black hub of index 3 and three crosses of index 1.

    Sums: whites 2+2+2=6, black 2*3=6, crosses 2*(1+1+1)=6.
    """
    return disk(
        vertex_colors={
            "w1": "white", "m1": "mono_dotted",
            "w2": "white", "m2": "mono_dotted",
            "w3": "white", "m3": "mono_dotted",
            "b": "black", "x1": "cross", "x2": "cross", "x3": "cross",
        },
        boundary=[
            ("w1", "dotted"), ("m1", "dotted"),
            ("w2", "dotted"), ("m2", "dotted"),
            ("w3", "dotted"), ("m3", "dotted"),
        ],
        inner=[
            ("b", "w1", "bold"),
            ("m1", "x1", "dotted"),
            ("x1", "b", "solid"),
            ("b", "w2", "bold"),
            ("m2", "x2", "dotted"),
            ("x2", "b", "solid"),
            ("b", "w3", "bold"),
            ("m3", "x3", "dotted"),
            ("x3", "b", "solid"),
        ],
    )


def isolated_node_cubic():
    """Degree-3 dessin with one isolated real node.

    xn sits between two solid arcs (both real darts solid, outgoing) and
    carries one inner dotted dart in from w3: index 2, nodal, isolated.
    Boundary (ccw): b1 -s- xn -s- b2 -b- w2 -b- mb1 -b- w3 -b- mb2 -b- w4 -b-.

    Sums: blacks 3+3, whites 2+2+2, crosses 2 real + 2*(1+1) inner = 6.
    """
    return disk(
        vertex_colors={
            "b1": "black", "xn": "cross", "b2": "black",
            "w2": "white", "mb1": "mono_bold", "w3": "white",
            "mb2": "mono_bold", "w4": "white",
            "y1": "cross", "y2": "cross",
        },
        boundary=[
            ("b1", "solid"), ("xn", "solid"), ("b2", "bold"),
            ("w2", "bold"), ("mb1", "bold"), ("w3", "bold"),
            ("mb2", "bold"), ("w4", "bold"),
        ],
        inner=[
            ("b1", "mb2", "bold"),
            ("y1", "b1", "solid"),
            ("w4", "y1", "dotted"),
            ("y2", "b2", "solid"),
            ("b2", "mb1", "bold"),
            ("w2", "y2", "dotted"),
            ("w3", "xn", "dotted"),
        ],
    )


def non_isolated_node_cubic():
    """Degree-3 dessin with one non-isolated real node.

    xn sits between two dotted arcs (both real darts dotted, incoming) and
    carries one inner solid dart out to b1: index 2, nodal, non-isolated.
    Boundary (ccw): b1 -s- x1 -d- w1 -d- xn -d- w2 -d- x2 -s- b2 -b- w3 -b-.
    """
    return disk(
        vertex_colors={
            "b1": "black", "x1": "cross", "w1": "white", "xn": "cross",
            "w2": "white", "x2": "cross", "b2": "black", "w3": "white",
            "y": "cross",
        },
        boundary=[
            ("b1", "solid"), ("x1", "dotted"), ("w1", "dotted"),
            ("xn", "dotted"), ("w2", "dotted"), ("x2", "solid"),
            ("b2", "bold"), ("w3", "bold"),
        ],
        inner=[
            ("b1", "w1", "bold"),
            ("xn", "b1", "solid"),
            ("y", "b2", "solid"),
            ("b2", "w2", "bold"),
            ("w3", "y", "dotted"),
        ],
    )


def micro_inner_white():
    """Small valid dessin whose weighted color sums are 4, not a multiple
    of 6 (its black has index 4, hence is singular, so no trigonal curve
    carries it).  Contains an inner white of degree 4 and index 2.
    """
    return disk(
        vertex_colors={
            "b": "black", "mb": "mono_bold",
            "w": "white", "x1": "cross", "x2": "cross",
        },
        boundary=[("b", "bold"), ("mb", "bold")],
        inner=[
            ("x1", "b", "solid"),
            ("b", "w", "bold"),
            ("x2", "b", "solid"),
            ("mb", "w", "bold"),
            ("w", "x1", "dotted"),
            ("w", "x2", "dotted"),
        ],
        rotations={"w": [1, 4, 3, 5]},
    )


def mono_cycle_cubic():
    """Boundary of three solid monochrome vertices forming a directed
    cycle (inadmissible), around an otherwise coherent interior: a black
    hub of index 3 fed by three cross/white chains.  Every trichotomic
    condition holds and the color sums are all 6; only admissibility fails.
    """
    colors = {"B": "black"}
    boundary = []
    inner = []
    for i in (1, 2, 3):
        colors[f"M{i}"] = "mono_solid"
        colors[f"x{i}"] = "cross"
        colors[f"w{i}"] = "white"
        boundary.append((f"M{i}", "solid"))
        inner += [
            (f"x{i}", f"M{i}", "solid"),
            (f"M{i}", "B", "solid"),
            ("B", f"w{i}", "bold"),
            (f"w{i}", f"x{i}", "dotted"),
        ]
    return disk(vertex_colors=colors, boundary=boundary, inner=inner,
                boundary_dirs={0: "+", 1: "+", 2: "+"})


def inner_node_micro():
    """Degree-3 dessin with an inner nodal cross.

    Boundary is a bold digon b/mb; inside, xn has two dotted darts in
    (from w1 and w2) and two solid darts out (both to b): degree 4,
    index 2, nodal, no isolation side.  The three whites have index 1
    (singular), so the dessin is valid but not nodal as a whole.

    Sums: black 6 (real index 6), whites 2*(1+1+1), crosses 2*(2+1).
    """
    return disk(
        vertex_colors={
            "b": "black", "mb": "mono_bold", "w1": "white", "w2": "white",
            "w3": "white", "x3": "cross", "xn": "cross",
        },
        boundary=[("b", "bold"), ("mb", "bold")],
        inner=[
            ("mb", "w3", "bold"),
            ("w3", "x3", "dotted"),
            ("x3", "b", "solid"),
            ("b", "w1", "bold"),
            ("w1", "xn", "dotted"),
            ("xn", "b", "solid"),
            ("b", "w2", "bold"),
            ("w2", "xn", "dotted"),
            ("xn", "b", "solid"),
        ],
        # ccw at the node: in from w1, out along the far solid, in from w2,
        # out along the near solid (the lens closes over the top)
        rotations={"xn": [4, 8, 7, 5]},
    )


def degree_two_strip():
    """Valid dessin whose weighted sums are all 2: a single white/mono
    digon with an inner chain through a cross and a black hub."""
    return disk(
        vertex_colors={"w1": "white", "m": "mono_dotted",
                       "x": "cross", "b2": "black"},
        boundary=[("w1", "dotted"), ("m", "dotted")],
        inner=[("m", "x", "dotted"), ("x", "b2", "solid"),
               ("b2", "w1", "bold")],
    )


def zigzag_cubic():
    """Degree-3 dessin with one zigzag and no hyperbolic boundary.

    Boundary (ccw): b1 -s- x1 -d- wz -d- x2 -s- b2 -b- w2 -b- mb -b- w3 -b-.
    The arc pattern solid, dotted, dotted, solid around wz is a zigzag.

    Sums: blacks 3+3=6 (two inner darts each), whites 2+2+2=6,
    crosses 1+1 real + 2*(1+1) inner = 6.
    """
    return disk(
        vertex_colors={
            "b1": "black", "x1": "cross", "wz": "white", "x2": "cross",
            "b2": "black", "w2": "white", "mb": "mono_bold", "w3": "white",
            "y1": "cross", "y2": "cross",
        },
        boundary=[
            ("b1", "solid"), ("x1", "dotted"), ("wz", "dotted"),
            ("x2", "solid"), ("b2", "bold"), ("w2", "bold"),
            ("mb", "bold"), ("w3", "bold"),
        ],
        inner=[
            ("b1", "wz", "bold"),
            ("w2", "y1", "dotted"),
            ("y1", "b2", "solid"),
            ("b2", "mb", "bold"),
            ("w3", "y2", "dotted"),
            ("y2", "b1", "solid"),
        ],
    )
