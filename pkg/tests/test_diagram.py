"""Diagram model, parser, and serialization."""

from __future__ import annotations

import pytest

from coxeterlab.diagram import (
    CoxeterDiagram,
    DiagramError,
    EdgeLabel,
    ParseError,
    build,
    connected_components,
    induced,
    parse,
)
from coxeterlab.rationals import QQ


def test_parse_simple_edge():
    D = parse("vertices: a b\nedge a b label=7\n")
    assert D.order == 2
    assert D.edge("a", "b").m == 7


def test_parse_dotted_var():
    D = parse("vertices: a b\nedge a b dotted var=r\n")
    assert D.edge("a", "b").var == "r"
    assert D.dotted_vars() == ("r",)


def test_parse_label_two_rejected():
    with pytest.raises(ParseError, match="no edge"):
        parse("vertices: a b\nedge a b label=2\n")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse("vertices: a b c\nedge a b label=3\nedge a b label=4\n")
    with pytest.raises(ParseError, match="unknown vertex"):
        parse("vertices: a b\nedge a z label=3\n")
    with pytest.raises(ParseError, match="must be > 1"):
        parse("vertices: a b\nedge a b dotted value=1/2\n")
    with pytest.raises(ParseError, match="self-loop"):
        parse("vertices: a b\nedge a a label=3\n")


def test_comments_and_blank_lines():
    D = parse("# header\nvertices: a b  # trailing\n\nedge a b bold\n")
    assert D.edge("a", "b").kind == "bold"


def test_roundtrip_text_and_json():
    D = build(
        ["a", "b", "c", "d"],
        [("a", "b", 5), ("b", "c", "bold"), ("c", "d", ("rho", "r")), ("a", "d", QQ(7, 4))],
    )
    assert parse(D.to_text()) == D
    assert CoxeterDiagram.from_json_dict(D.to_json_dict()) == D


def test_edge_label_validation():
    with pytest.raises(DiagramError):
        EdgeLabel.finite(2)
    with pytest.raises(DiagramError):
        EdgeLabel.dotted(QQ(1))
    with pytest.raises(DiagramError):
        EdgeLabel.dotted_var("")


def test_induced_idempotent_and_monotone():
    D = build(
        ["a", "b", "c", "d"], [("a", "b", 3), ("b", "c", 4), ("c", "d", 5)]
    )
    sub = induced(D, ["a", "b", "c"]).as_diagram()
    assert induced(sub, ["a", "b"]).as_diagram() == induced(D, ["a", "b"]).as_diagram()
    assert induced(D, D.vertices).as_diagram() == D
    with pytest.raises(DiagramError):
        induced(D, ["zz"])


def test_connected_components():
    two = build(["a", "b", "c", "d"], [("a", "b", 3), ("c", "d", 4)])
    assert len(connected_components(two)) == 2
    tri = build(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
    assert len(connected_components(tri)) == 1
    assert connected_components(build([], [])) == []
