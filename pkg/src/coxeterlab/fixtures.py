"""Built-in diagram fixtures: the seven one-parameter families S1..S7, the
three families U/V/W, the six corollary configurations A..F with their
dotted-leaf data, the two case diagrams with inline determinant identities,
the case-B product family, and the nine join-discriminant label tuples.

Each fixture is encoded once from the figures; the expected closed-form
determinants live here so the acceptance suite can compare coefficient-exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .diagram import CoxeterDiagram, build
from .rhopoly import RhoPoly
from .scalars import sqrt2, sqrt5, sqrt10


def _r(name: str) -> RhoPoly:
    return RhoPoly.var(name)


# -- S1..S7 ---------------------------------------------------------------------


def s_diagram(i: int) -> CoxeterDiagram:
    if i not in range(1, 8):
        raise ValueError("S index must be 1..7")
    tri = (
        [("u1", "u2", 3), ("u1", "u3", 3), ("u2", "u3", 4)]
        if i <= 4
        else [("u1", "u2", 3), ("u1", "u3", 4), ("u2", "u3", 3)]
    )
    tail = [("u1", "u4", 3), ("u4", "u5", ("rho", "r"))]
    extra = {
        1: [("u5", "u6", 3), ("u5", "u7", 3)],
        2: [("u5", "u6", 3), ("u4", "u7", 3)],
        3: [("u4", "u6", 3), ("u4", "u7", 3)],
        4: [("u4", "u6", 3), ("u5", "u6", 3)],
        5: [("u5", "u6", 3), ("u5", "u7", 3)],
        6: [("u5", "u6", 3), ("u4", "u7", 3)],
        7: [("u4", "u6", 3), ("u5", "u6", 3)],
    }[i]
    vs = ["u1", "u2", "u3", "u4", "u5", "u6"] + (["u7"] if i not in (4, 7) else [])
    return build(vs, tri + tail + extra)


def s_expected(i: int) -> RhoPoly:
    r = _r("r")
    s2 = sqrt2()
    table = {
        1: (s2 * 4 * r**2 - s2 * 2 - 1) / 16,
        2: (s2 * 16 * r**2 - s2 * 9 - 6) / 64,
        3: (s2 * 2 * r**2 - s2 - 1) / 8,
        4: (s2 * 8 * r**2 + s2 * 4 * r - s2 * 4 - 3) / 32,
        5: (s2 * 8 * r**2 - s2 * 4 - 3) / 32,
        6: (s2 * 16 * r**2 - s2 * 9 - 9) / 64,
        7: (s2 * 16 * r**2 + s2 * 8 * r - s2 * 8 - 9) / 64,
    }
    return table[i]


# -- U, V, W ----------------------------------------------------------------------


def uvw_diagram(name: str) -> CoxeterDiagram:
    label = {"u": 3, "v": 4, "w": 5}[name]
    vs = ["u1", "u2", "u3", "u6", "u7", "u8", "u9"]
    edges = [
        ("u9", "u6", ("rho", "r")),
        ("u6", "u3", 3),
        ("u9", "u7", label),
        ("u7", "u8", 3),
        ("u8", "u6", 3),
        ("u3", "u1", 3),
        ("u1", "u2", 3),
        ("u2", "u3", 4),
    ]
    return build(vs, edges)


def uvw_expected(name: str) -> RhoPoly:
    r = _r("r")
    s2 = sqrt2()
    if name == "u":
        return (s2 * 12 * r**2 + s2 * 4 * r - s2 * 5 - 6) / 64
    if name == "v":
        return (s2 * 12 * r**2 + 8 * r - s2 * 2 - 3) / 64
    if name == "w":
        s5, s10 = sqrt5(), sqrt10()
        return (
            s2 * 24 * r**2 + s2 * (s5 + 1) * 4 * r + s10 * 3 + s5 * 3 - s2 * 7 - 9
        ) / 128
    raise ValueError(name)


# -- the corollary configurations A..F ---------------------------------------------


@dataclass(frozen=True)
class LeafCase:
    name: str
    diagram: CoxeterDiagram
    core: tuple  # the subset whose determinant difference is taken
    w: str
    v: str
    expected_delta: RhoPoly


def _corollary_edges(name: str):
    if name in ("a", "b"):
        e = [
            ("a6", "a3", ("rho", "r2")),
            ("a4", "a7", ("rho", "r3")),
            ("a6", "a2", 3),
            ("a7", "a5", 3),
            ("a1", "a2", 3),
            ("a1", "a5", 3),
            ("a6", "a7", 4 if name == "b" else 3),
            ("a5", "a2", ("rho", "r1")),
        ]
        return ["a1", "a2", "a3", "a4", "a5", "a6", "a7"], e
    if name == "c":
        e = [
            ("c2", "c1", 4),
            ("c4", "c5", 3),
            ("c1", "c3", 3),
            ("c2", "c6", 3),
            ("c3", "c4", 3),
            ("c6", "c5", 3),
            ("c4", "c7", ("rho", "r2")),
            ("c8", "c5", ("rho", "r3")),
            ("c6", "c3", ("rho", "r1")),
        ]
        return [f"c{i}" for i in range(1, 9)], e
    if name in ("d", "e"):
        e = [
            ("d1", "d2", 3),
            ("d1", "d3", 4),
            ("d2", "d3", 3),
            ("d2", "d5", 3),
            ("d3", "d4", 3),
            ("d1", "d6", 3),
            ("d7", "d4", ("rho", "r1")),
            ("d5", "d8", ("rho", "r2")),
            ("d5", "d7", 4 if name == "e" else 3),
        ]
        return [f"d{i}" for i in range(1, 9)], e
    if name == "f":
        e = [
            ("f1", "f2", 3),
            ("f1", "f3", 3),
            ("f2", "f3", 4),
            ("f1", "f5", 3),
            ("f1", "f4", 3),
            ("f4", "f6", 3),
            ("f4", "f7", ("rho", "r1")),
            ("f8", "f5", ("rho", "r2")),
            ("f5", "f7", 3),
        ]
        return [f"f{i}" for i in range(1, 9)], e
    raise ValueError(name)


def corollary_case(name: str) -> LeafCase:
    name = name.lower()
    vs, edges = _corollary_edges(name)
    diagram = build(vs, edges)
    r1, r2 = _r("r1"), _r("r2")
    s2 = sqrt2()
    p = name[0]
    if name in ("a", "b"):
        core = ("a1", "a2", "a3", "a5", "a6")
        w, v = "a7", "a4"
        if name == "a":
            delta = (3 * r2**2 + 4 * r1**2 - 2 * r1 - 5) / 16
        else:
            delta = (3 * r2**2 + 8 * r1**2 - (s2 - 1) * 4 * r1 - 6 - s2) / 16
    elif name == "c":
        core = ("c1", "c2", "c3", "c4", "c6", "c7")
        w, v = "c5", "c8"
        delta = (4 * r2**2 + 8 * r1**2 - (2 - s2) * 4 * r1 - s2 * 2 - 3) / 64
    elif name == "d":
        core = ("d1", "d2", "d3", "d4", "d6", "d7")
        w, v = "d5", "d8"
        delta = (2 * r1**2 - (3 + s2 * 2) * r1 + s2 * 2 + 2) / 32
    elif name == "e":
        core = ("d1", "d2", "d3", "d4", "d6", "d7")
        w, v = "d5", "d8"
        delta = (4 * r1**2 - (4 + s2 * 3) * 2 * r1 + s2 * 8 + 9) / 64
    elif name == "f":
        core = ("f1", "f2", "f3", "f4", "f6", "f7")
        w, v = "f5", "f8"
        delta = (8 * r1**2 - 8 * r1 + s2 * 3 - 4) / 64
    else:
        raise ValueError(name)
    return LeafCase(name, diagram, core, w, v, delta)


CASE_NAMES = ("a", "b", "c", "d", "e", "f")


# -- the two case diagrams with inline determinant identities ------------------------


def case_d_diagram() -> CoxeterDiagram:
    vs = [f"u{i}" for i in range(1, 10)]
    edges = [
        ("u1", "u2", 3),
        ("u1", "u3", 3),
        ("u2", "u3", 4),
        ("u7", "u4", ("rho", "r1")),
        ("u5", "u8", ("rho", "r2")),
        ("u6", "u9", ("rho", "r3")),
        ("u2", "u4", 3),
        ("u1", "u7", 3),
        ("u1", "u5", 3),
        ("u3", "u6", 3),
        ("u4", "u9", 3),
        ("u7", "u8", 3),
        ("u8", "u9", 3),
    ]
    return build(vs, edges)


def case_e_diagram(last_label: int) -> CoxeterDiagram:
    if last_label not in (3, 4):
        raise ValueError("the u8 u9 edge label is 3 or 4")
    vs = [f"u{i}" for i in range(1, 10)]
    edges = [
        ("u1", "u2", 3),
        ("u2", "u3", 4),
        ("u3", "u1", 3),
        ("u1", "u4", 3),
        ("u5", "u2", 3),
        ("u1", "u6", 3),
        ("u1", "u7", 3),
        ("u7", "u4", ("rho", "r1")),
        ("u8", "u5", ("rho", "r2")),
        ("u6", "u9", ("rho", "r3")),
        ("u4", "u8", 3),
        ("u7", "u9", 3),
        ("u9", "u8", last_label),
    ]
    return build(vs, edges)


def case_inline_identities():
    """(name, subdiagram, expected determinant) for the three inline checks."""
    s2 = sqrt2()
    r2, r3 = _r("r2"), _r("r3")
    d_sub = case_d_diagram().restrict(["u1", "u2", "u3", "u5", "u7", "u8", "u9"])
    d_expected = ((s2 * 2 + 1) * 4 * r2**2 - 4 * r2 - (s2 * 4 + 5)) / 32
    e3_sub = case_e_diagram(3).restrict(["u1", "u2", "u3", "u6", "u7", "u8", "u9"])
    e3_expected = ((1 + s2 * 2) * 4 * r3**2 - 4 * r3 - s2 * 4 - 5) / 32
    e4_sub = case_e_diagram(4).restrict(["u1", "u2", "u3", "u6", "u7", "u8", "u9"])
    e4_expected = ((1 + s2 * 2) * 4 * r3**2 - 4 * r3 - s2 * 2 - 3) / 32
    return [
        ("case_d_sub", d_sub, d_expected),
        ("case_e_sub_3", e3_sub, e3_expected),
        ("case_e_sub_4", e4_sub, e4_expected),
    ]


# -- case B product family ------------------------------------------------------------


def case_b_family() -> list[tuple[str, CoxeterDiagram]]:
    """The six 9-vertex case-B configurations: u7u9 in {3,4,5}, u5u9 absent or 3."""
    out = []
    for l97 in (3, 4, 5):
        for l59 in (0, 3):
            vs = [f"u{i}" for i in range(1, 10)]
            edges = [
                ("u1", "u2", 3),
                ("u2", "u3", 4),
                ("u3", "u1", 3),
                ("u1", "u4", 4),
                ("u5", "u2", 3),
                ("u3", "u6", 3),
                ("u4", "u7", ("rho", "r1")),
                ("u5", "u8", ("rho", "r2")),
                ("u6", "u9", ("rho", "r3")),
                ("u7", "u8", 3),
                ("u9", "u7", l97),
                ("u6", "u8", 3),
            ]
            if l59:
                edges.append(("u5", "u9", l59))
            out.append((f"case_b_{l97}_{l59}", build(vs, edges)))
    return out


def case_b_components() -> list[tuple[str, ...]]:
    return [("u1", "u2", "u3"), ("u4", "u7"), ("u5", "u8"), ("u6", "u9")]


# -- diagram (1): triangle + chain + dotted return edge ---------------------------------


def form1_diagram(k, l, m, kp, lp, mp, var: str = "r") -> CoxeterDiagram:
    """Six vertices: (k,l,m) triangle on u1u2u3, u3-u4 labeled m', u4-u5
    labeled k', u5-u6 labeled l', and the dotted edge u4-u6."""
    vs = [f"u{i}" for i in range(1, 7)]
    edges = []
    for a, b, lab in (
        ("u1", "u2", m),
        ("u2", "u3", l),
        ("u3", "u1", k),
        ("u3", "u4", mp),
        ("u4", "u5", kp),
        ("u5", "u6", lp),
    ):
        if lab != 2:
            edges.append((a, b, lab))
    edges.append(("u4", "u6", ("rho", var)))
    return build(vs, edges)


# (k, l, m, k', l', m') read off the nine listed superhyperbolic instances
FORM1_TUPLES = (
    (4, 4, 3, 3, 2, 3),
    (3, 4, 4, 3, 2, 3),
    (3, 3, 5, 3, 2, 3),
    (4, 4, 3, 2, 3, 3),
    (3, 4, 4, 2, 3, 3),
    (3, 3, 5, 2, 3, 3),
    (3, 5, 3, 4, 2, 3),
    (3, 5, 3, 3, 3, 3),
    (3, 5, 3, 2, 4, 3),
)


# -- fixture export -----------------------------------------------------------------


def all_fixtures() -> list[tuple[str, CoxeterDiagram]]:
    out = []
    for i in range(1, 8):
        out.append((f"s{i}", s_diagram(i)))
    for name in ("u", "v", "w"):
        out.append((name, uvw_diagram(name)))
    for name in CASE_NAMES:
        out.append((f"corollary_{name}", corollary_case(name).diagram))
    out.append(("case_d", case_d_diagram()))
    out.append(("case_e_3", case_e_diagram(3)))
    out.append(("case_e_4", case_e_diagram(4)))
    for name, sub, _ in case_inline_identities():
        out.append((name, sub))
    out.extend(case_b_family())
    for idx, tup in enumerate(FORM1_TUPLES, start=1):
        out.append((f"form1_{idx}", form1_diagram(*tup)))
    return out


def write_fixture_files(directory: str) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    written = []
    for name, diagram in all_fixtures():
        path = os.path.join(directory, f"{name}.cox")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(diagram.to_text())
        written.append(path)
    return written
