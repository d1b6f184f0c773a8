import pickle

import pytest

from boundedhindman import (
    ColorName,
    DomainError,
    constant_coloring,
    delta2_coloring,
    eval_color,
    four_coloring,
    parity_coloring,
    pm_class,
    residue_class,
    three_coloring,
    vsg,
)
from boundedhindman.colorings import THREE_COLOR_TABLE

from conftest import FUNCTIONS, MIND_CHANGERS, REF_A, REF_F


@pytest.mark.parametrize("n, expected", [(1, 0), (10, 1), (2, 1)])
def test_delta2_examples(n, expected):
    assert delta2_coloring(REF_A)(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 0), (2, 2), (279, 1)])
def test_four_coloring_examples(n, expected):
    assert four_coloring(REF_F)(n) == expected


@pytest.mark.parametrize("n, expected", [(7, ColorName.R), (3, ColorName.B), (17199, ColorName.G)])
def test_three_coloring_examples(n, expected):
    assert three_coloring(REF_F)(n) == expected


def test_eval_color_examples():
    assert eval_color(parity_coloring(), 6) == 0
    assert eval_color(four_coloring(REF_F), 279) == 1
    assert eval_color(delta2_coloring(REF_A), 2) == 1


@pytest.mark.parametrize(
    "c", [parity_coloring(), constant_coloring(), delta2_coloring(REF_A), four_coloring(REF_F), three_coloring(REF_F)]
)
def test_zero_rejected_and_range(c):
    with pytest.raises(DomainError):
        c(0)
    for n in range(1, 500):
        v = c(n)
        assert 0 <= v < c.color_count
        assert c(n) == v


def test_colorings_are_values():
    assert three_coloring(REF_F) == three_coloring(REF_F)
    c = four_coloring(REF_F)
    assert pickle.loads(pickle.dumps(c)) == c
    assert "four" in c.descriptor


def test_four_coloring_closed_form():
    c = four_coloring(REF_F)
    for n in range(1, 3**7):
        parity = vsg(REF_F, n, 3) % 2
        assert c(n) == (parity if residue_class(n, 3).digit == 1 else 2 + parity)


def test_three_color_table_each_color_two_classes():
    for color in ColorName:
        classes = {cls for cls, pair in THREE_COLOR_TABLE.items() if color in pair}
        assert len(classes) == 2


@pytest.mark.parametrize("name", ["ref", "wide"])
def test_three_coloring_class_restriction_by_scan(name):
    c = three_coloring(FUNCTIONS[name])
    seen = {color: set() for color in ColorName}
    for n in range(1, 7**4 + 1):
        seen[ColorName(c(n))].add(pm_class(residue_class(n, 7).digit))
    for color, classes in seen.items():
        allowed = {cls for cls, pair in THREE_COLOR_TABLE.items() if color in pair}
        assert classes <= allowed
        if name == "wide":
            # both VSG parities occur in every class below 7^4 for this f
            assert classes == allowed


def test_three_coloring_gap_base_variant():
    c3 = three_coloring(REF_F, gap_base=3)
    # 279 has a very short gap in base 3; 279 = 5*49 + 4*7 + 6, first heptary digit 6 (class 1)
    assert c3(279) == ColorName.G
    assert three_coloring(REF_F)(279) == ColorName.R


@pytest.mark.parametrize("name", sorted(MIND_CHANGERS) + ["ref"])
def test_stabilized_disagreement(name):
    a = MIND_CHANGERS.get(name, REF_A)
    c = delta2_coloring(a)
    for k in range(a.horizon + 1):
        sigma = max(a.stabilization(k), 1)
        for s in range(sigma, 3**8):
            k_s, i_s = residue_class(s, 3)
            if k_s == k:
                assert c(s) == (a.limit(k) if i_s == 1 else 1 - a.limit(k))
