"""Coxeter diagram data model, subdiagrams, and the text/JSON formats.

Edge conventions: a finite label m >= 3 encodes weight cos(pi/m); m = 2
means no edge at all (the Gram entry is 0); a bold edge has weight 1; a
dotted edge has weight rho > 1, either a fixed rational or a named symbolic
variable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .rationals import QQ, as_rational, rat_str

FINITE = "label"
BOLD = "bold"
DOTTED_NUM = "dotted_num"
DOTTED_SYM = "dotted_sym"


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeLabel:
    kind: str
    m: Optional[int] = None
    value: object = None  # rational, for dotted numeric
    var: Optional[str] = None

    @staticmethod
    def finite(m: int) -> "EdgeLabel":
        if not isinstance(m, int) or m < 3:
            raise DiagramError(
                f"finite edge label must be an integer >= 3 (m=2 means no edge), got {m!r}"
            )
        return EdgeLabel(FINITE, m=m)

    @staticmethod
    def bold() -> "EdgeLabel":
        return EdgeLabel(BOLD)

    @staticmethod
    def dotted(value) -> "EdgeLabel":
        value = as_rational(value)
        if not value > 1:
            raise DiagramError(f"dotted edge value must be > 1, got {rat_str(value)}")
        return EdgeLabel(DOTTED_NUM, value=value)

    @staticmethod
    def dotted_var(name: str) -> "EdgeLabel":
        if not name or not name.replace("_", "").isalnum():
            raise DiagramError(f"bad dotted variable name {name!r}")
        return EdgeLabel(DOTTED_SYM, var=name)

    @property
    def is_dotted(self) -> bool:
        return self.kind in (DOTTED_NUM, DOTTED_SYM)


class CoxeterDiagram:
    """Vertices in a fixed order plus labeled edges on unordered pairs."""

    __slots__ = ("vertices", "_index", "edges")

    def __init__(self, vertices: Iterable[str], edges: dict):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise DiagramError("duplicate vertex names")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        normalized: dict[tuple[str, str], EdgeLabel] = {}
        for pair, label in edges.items():
            a, b = pair
            if a not in self._index or b not in self._index:
                raise DiagramError(f"edge references unknown vertex in {pair!r}")
            if a == b:
                raise DiagramError(f"self-loop at {a!r}")
            key = self._key(a, b)
            if key in normalized:
                raise DiagramError(f"duplicate edge {key}")
            if not isinstance(label, EdgeLabel):
                raise DiagramError(f"bad edge label {label!r}")
            normalized[key] = label
        self.edges = normalized

    def _key(self, a: str, b: str) -> tuple[str, str]:
        return (a, b) if self._index[a] < self._index[b] else (b, a)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def edge(self, a: str, b: str) -> Optional[EdgeLabel]:
        return self.edges.get(self._key(a, b))

    def index(self, v: str) -> int:
        return self._index[v]

    def finite_labels(self) -> list[int]:
        return [e.m for e in self.edges.values() if e.kind == FINITE]

    def dotted_vars(self) -> tuple[str, ...]:
        names = {e.var for e in self.edges.values() if e.kind == DOTTED_SYM}
        return tuple(sorted(names))

    def has_dotted(self) -> bool:
        return any(e.is_dotted for e in self.edges.values())

    def has_bold(self) -> bool:
        return any(e.kind == BOLD for e in self.edges.values())

    def neighbors(self, v: str) -> list[str]:
        out = []
        for (a, b) in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def restrict(self, subset: Iterable[str]) -> "CoxeterDiagram":
        chosen = set(subset)
        unknown = chosen - set(self.vertices)
        if unknown:
            raise DiagramError(f"unknown vertices {sorted(unknown)}")
        verts = [v for v in self.vertices if v in chosen]
        edges = {
            pair: lab
            for pair, lab in self.edges.items()
            if pair[0] in chosen and pair[1] in chosen
        }
        return CoxeterDiagram(verts, edges)

    def relabel(self, mapping: dict) -> "CoxeterDiagram":
        verts = [mapping.get(v, v) for v in self.vertices]
        edges = {
            (mapping.get(a, a), mapping.get(b, b)): lab
            for (a, b), lab in self.edges.items()
        }
        return CoxeterDiagram(verts, edges)

    def __eq__(self, other):
        if not isinstance(other, CoxeterDiagram):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __repr__(self):
        return f"CoxeterDiagram({self.order} vertices, {len(self.edges)} edges)"

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)]
        for (a, b) in sorted(self.edges, key=lambda p: (self._index[p[0]], self._index[p[1]])):
            lab = self.edges[(a, b)]
            if lab.kind == FINITE:
                lines.append(f"edge {a} {b} label={lab.m}")
            elif lab.kind == BOLD:
                lines.append(f"edge {a} {b} bold")
            elif lab.kind == DOTTED_NUM:
                v = lab.value
                lines.append(f"edge {a} {b} dotted value={v.numerator}/{v.denominator}")
            else:
                lines.append(f"edge {a} {b} dotted var={lab.var}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        edges = []
        for (a, b) in sorted(self.edges, key=lambda p: (self._index[p[0]], self._index[p[1]])):
            lab = self.edges[(a, b)]
            entry = {"a": a, "b": b}
            if lab.kind == FINITE:
                entry["kind"] = "label"
                entry["label"] = lab.m
            elif lab.kind == BOLD:
                entry["kind"] = "bold"
            elif lab.kind == DOTTED_NUM:
                entry["kind"] = "dotted"
                entry["value"] = rat_str(lab.value)
            else:
                entry["kind"] = "dotted"
                entry["var"] = lab.var
            edges.append(entry)
        return {"vertices": list(self.vertices), "edges": edges}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(data: dict) -> "CoxeterDiagram":
        edges = {}
        for entry in data.get("edges", []):
            pair = (entry["a"], entry["b"])
            kind = entry.get("kind")
            if kind == "label":
                edges[pair] = EdgeLabel.finite(int(entry["label"]))
            elif kind == "bold":
                edges[pair] = EdgeLabel.bold()
            elif kind == "dotted":
                if "var" in entry:
                    edges[pair] = EdgeLabel.dotted_var(entry["var"])
                else:
                    edges[pair] = EdgeLabel.dotted(as_rational(entry["value"]))
            else:
                raise DiagramError(f"unknown edge kind {kind!r}")
        return CoxeterDiagram(data["vertices"], edges)


@dataclass(frozen=True)
class Subdiagram:
    parent: CoxeterDiagram
    selected: frozenset

    def as_diagram(self) -> CoxeterDiagram:
        return self.parent.restrict(self.selected)

    @property
    def order(self) -> int:
        return len(self.selected)


def induced(parent: CoxeterDiagram, subset: Iterable[str]) -> Subdiagram:
    chosen = frozenset(subset)
    unknown = chosen - set(parent.vertices)
    if unknown:
        raise DiagramError(f"unknown vertices {sorted(unknown)}")
    return Subdiagram(parent, chosen)


def connected_components(D: CoxeterDiagram) -> list[tuple[str, ...]]:
    seen: set[str] = set()
    comps = []
    adj: dict[str, set[str]] = {v: set() for v in D.vertices}
    for (a, b) in D.edges:
        adj[a].add(b)
        adj[b].add(a)
    for v in D.vertices:
        if v in seen:
            continue
        stack, comp = [v], set()
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        comps.append(tuple(sorted(comp, key=D.index)))
    return comps


def is_connected(D: CoxeterDiagram) -> bool:
    return len(connected_components(D)) <= 1


# -- text format ------------------------------------------------------------


class ParseError(DiagramError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse(text: str) -> CoxeterDiagram:
    """Parse the line-oriented diagram format.

    Grammar::

        vertices: <name> <name> ...
        edge <a> <b> label=<m>
        edge <a> <b> bold
        edge <a> <b> dotted value=<p>/<q>
        edge <a> <b> dotted var=<name>

    '#' starts a comment; blank lines are skipped.
    """
    vertices: list[str] = []
    edges: dict[tuple[str, str], EdgeLabel] = {}
    seen_pairs: set[frozenset] = set()
    have_vertices = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if have_vertices:
                raise ParseError("duplicate vertices line", lineno)
            names = line[len("vertices:") :].split()
            if not names:
                raise ParseError("empty vertex list", lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate vertex name", lineno)
            vertices = names
            have_vertices = True
            continue
        if not line.startswith("edge "):
            raise ParseError(f"unrecognized directive {line.split()[0]!r}", lineno)
        if not have_vertices:
            raise ParseError("edge before vertices line", lineno)
        parts = line.split()
        if len(parts) < 4:
            raise ParseError("edge needs two vertices and a label", lineno)
        _, a, b, *rest = parts
        for name in (a, b):
            if name not in vertices:
                raise ParseError(f"unknown vertex {name!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop at {a!r}", lineno)
        pair = frozenset((a, b))
        if pair in seen_pairs:
            raise ParseError(f"duplicate edge {a} {b}", lineno)
        seen_pairs.add(pair)
        try:
            label = _parse_label(rest)
        except DiagramError as exc:
            raise ParseError(str(exc), lineno) from exc
        edges[(a, b)] = label
    if not have_vertices:
        raise ParseError("missing vertices line", 1)
    return CoxeterDiagram(vertices, edges)


def _parse_label(tokens: list[str]) -> EdgeLabel:
    if tokens[0].startswith("label="):
        if len(tokens) != 1:
            raise DiagramError("extra tokens after label")
        try:
            m = int(tokens[0][len("label=") :])
        except ValueError as exc:
            raise DiagramError(f"bad label {tokens[0]!r}") from exc
        if m == 2:
            raise DiagramError("label=2 means no edge; omit the edge instead")
        return EdgeLabel.finite(m)
    if tokens[0] == "bold":
        if len(tokens) != 1:
            raise DiagramError("extra tokens after bold")
        return EdgeLabel.bold()
    if tokens[0] == "dotted":
        if len(tokens) != 2:
            raise DiagramError("dotted edge needs value=p/q or var=name")
        spec = tokens[1]
        if spec.startswith("value="):
            try:
                value = as_rational(spec[len("value=") :])
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise DiagramError(f"bad dotted value {spec!r}") from exc
            return EdgeLabel.dotted(value)
        if spec.startswith("var="):
            return EdgeLabel.dotted_var(spec[len("var=") :])
        raise DiagramError(f"bad dotted spec {spec!r}")
    raise DiagramError(f"unknown edge kind {tokens[0]!r}")


def parse_file(path) -> CoxeterDiagram:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


# -- small builder used by fixtures and tests --------------------------------


def build(vertices: Iterable[str], edge_specs: Iterable[tuple]) -> CoxeterDiagram:
    """Edges as (a, b, spec): spec is an int label, 'bold', ('rho', name),
    or a rational dotted value."""
    edges = {}
    for a, b, spec in edge_specs:
        if isinstance(spec, int):
            edges[(a, b)] = EdgeLabel.finite(spec)
        elif spec == "bold":
            edges[(a, b)] = EdgeLabel.bold()
        elif isinstance(spec, tuple) and spec[0] == "rho":
            edges[(a, b)] = EdgeLabel.dotted_var(spec[1])
        else:
            edges[(a, b)] = EdgeLabel.dotted(as_rational(spec))
    return CoxeterDiagram(vertices, edges)
