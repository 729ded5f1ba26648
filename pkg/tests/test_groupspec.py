from __future__ import annotations

import math

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from inertia_cert.groupspec import (
    GroupSpecError,
    inertia_spec,
    parse_group_spec,
    parse_inertia_spec,
    print_group_spec,
)


def test_family_groups():
    assert parse_group_spec("A5").group.order() == 60
    spec = parse_group_spec("A6xS5")
    assert spec.group.degree == 11 and spec.group.order() == 360 * 120
    assert spec.tag == "Alt(6) x Sym(5)"
    assert parse_group_spec("C6").group.order() == 6


def test_explicit_group():
    # each ;-separated item is one generator; both orders frozen from oracles.closure
    spec = parse_group_spec("deg=6;gens=(1 2 3)(4 5 6);(1 4)(2 5)(3 6)")
    assert spec.group.order() == len(oracles.closure(spec.group.generators, 6)) == 6
    assert spec.tag == "explicit"
    spec = parse_group_spec("deg=6;gens=(1 2 3);(4 5 6);(1 4)(2 5)(3 6)")
    assert spec.group.order() == 18


@pytest.mark.parametrize("text", ["", "B5", "A0", "A5x", "deg=3;gens=(1 4)", "deg=0;gens=()",
                                  "deg=3;gens=", "A40xA40"])
def test_bad_specs(text):
    with pytest.raises(GroupSpecError):
        parse_group_spec(text)


def test_inertia_spec():
    I = parse_inertia_spec("gens=(1 2)(3 4);(1 3)(2 4)", 5)
    assert I.order() == 4
    assert parse_inertia_spec(inertia_spec(I), 5) == I
    with pytest.raises(GroupSpecError):
        parse_inertia_spec("(1 2)", 5)


families = st.lists(st.tuples(st.sampled_from("ASC"), st.integers(1, 6)), min_size=1, max_size=3)


@given(families)
def test_round_trip(fs):
    text = "x".join(f"{f}{d}" for f, d in fs)
    spec = parse_group_spec(text)
    again = parse_group_spec(print_group_spec(spec))
    assert again.text == spec.text and again.group == spec.group
    want = 1
    for f, d in fs:
        want *= {"A": max(1, math.factorial(d) // 2), "S": math.factorial(d), "C": d}[f]
    assert spec.group.order() == want
