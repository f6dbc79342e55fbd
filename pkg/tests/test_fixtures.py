"""Fixture library: files round-trip through the text format."""

from __future__ import annotations

import os

from coxeterlab.diagram import parse_file
from coxeterlab.fixtures import all_fixtures, form1_diagram, write_fixture_files
from coxeterlab.taxonomy import is_lanner

REPO_FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures", "paper")


def test_fixture_files_roundtrip(tmp_path):
    write_fixture_files(str(tmp_path))
    for name, diagram in all_fixtures():
        parsed = parse_file(tmp_path / f"{name}.cox")
        assert parsed == diagram, name


def test_shipped_fixture_files_match_builtins():
    assert os.path.isdir(REPO_FIXTURES), "fixtures/paper is part of the repo"
    for name, diagram in all_fixtures():
        path = os.path.join(REPO_FIXTURES, f"{name}.cox")
        assert os.path.exists(path), name
        assert parse_file(path) == diagram, name


def test_form1_restriction_is_an_order_two_lanner():
    D = form1_diagram(2, 3, 7, 3, 3, 3)
    pair = D.restrict(["u4", "u6"])
    assert is_lanner(pair)


def test_fixture_name_inventory():
    names = {name for name, _ in all_fixtures()}
    assert {"s1", "s7", "u", "v", "w", "corollary_a", "corollary_f"} <= names
    assert {"case_d", "case_e_3", "case_e_4", "case_d_sub"} <= names
    assert {f"form1_{i}" for i in range(1, 10)} <= names
    assert len([n for n in names if n.startswith("case_b_")]) == 6
