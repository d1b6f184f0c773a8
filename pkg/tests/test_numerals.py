import pytest
from hypothesis import given, strategies as st

from boundedhindman import DomainError, Gap, decompose, pm_class, residue_class
from boundedhindman.numerals import Decomposition, ResidueClass, in_residue_class


def digits_oracle(n, base):
    """Standard expansion by repeated string conversion, independent of decompose."""
    out = []
    pos = 0
    while n:
        if n % base:
            out.append((pos, n % base))
        n //= base
        pos += 1
    return out


@pytest.mark.parametrize(
    "n, base, terms, lam, mu, first, gaps",
    [
        (1, 3, [(0, 1)], 0, 0, 1, []),
        (11, 3, [(0, 2), (2, 1)], 0, 2, 2, [(0, 2)]),
        (17199, 7, [(2, 1), (3, 1), (5, 1)], 2, 5, 1, [(2, 3), (3, 5)]),
    ],
)
def test_decompose_examples(n, base, terms, lam, mu, first, gaps):
    d = decompose(n, base)
    assert list(d.terms) == terms
    assert (d.lam, d.mu, d.first_digit) == (lam, mu, first)
    assert list(d.gaps) == gaps


def test_17199_by_hand():
    assert 7**2 + 7**3 + 7**5 == 17199


@pytest.mark.parametrize("n, base, expected", [(3, 3, (1, 1)), (12, 3, (1, 1)), (63, 7, (1, 2))])
def test_residue_class_examples(n, base, expected):
    assert residue_class(n, base) == expected


@pytest.mark.parametrize("i, expected", [(6, 1), (5, 2), (3, 3), (1, 1), (2, 2), (4, 3)])
def test_pm_class(i, expected):
    assert pm_class(i) == expected


@pytest.mark.parametrize("bad", [0, 7, -1])
def test_pm_class_rejects(bad):
    with pytest.raises(DomainError):
        pm_class(bad)


@pytest.mark.parametrize("bad", [0, -5, 2.0, True])
def test_decompose_rejects_non_positive(bad):
    with pytest.raises(DomainError):
        decompose(bad, 3)


def test_decompose_rejects_bad_base():
    with pytest.raises(DomainError):
        decompose(5, 1)
    with pytest.raises(DomainError):
        residue_class(0, 3)


def test_decomposition_validates_terms():
    with pytest.raises(DomainError):
        Decomposition(3, ((0, 3),), 3)
    with pytest.raises(DomainError):
        Decomposition(3, ((1, 1), (0, 1)), 4)
    with pytest.raises(DomainError):
        Decomposition(3, ((0, 1),), 2)


@pytest.mark.parametrize("base, bound", [(3, 3**7), (7, 7**4)])
def test_roundtrip_and_uniqueness(base, bound):
    for n in range(1, bound + 1):
        d = decompose(n, base)
        assert d.evaluate() == n
        assert list(d.terms) == digits_oracle(n, base)
        assert residue_class(n, base) == (d.lam, d.first_digit)
        assert ResidueClass(d.lam, d.first_digit).contains(n, base)


@given(st.integers(1, 10**30), st.sampled_from([2, 3, 5, 7, 10]))
def test_decompose_property(n, base):
    d = decompose(n, base)
    assert d.evaluate() == n
    assert all(1 <= dig < base for _, dig in d.terms)
    assert all(a < b for a, b in zip(d.positions, d.positions[1:]))
    assert all(isinstance(g, Gap) and g.lo < g.hi for g in d.gaps)
    k, i = residue_class(n, base)
    assert n % base ** (k + 1) == i * base**k


def test_in_residue_class():
    assert in_residue_class(12, 1, 1, 3)
    assert not in_residue_class(12, 0, 1, 3)


def test_base7_digit_lemmas_generalized():
    # same lowest position and digits not summing to the base: digits add mod 7
    B = 7**3
    for n in range(1, B):
        dn = decompose(n, 7)
        for m in range(1, B):
            dm = decompose(m, 7)
            if dn.lam == dm.lam and dn.first_digit + dm.first_digit != 7:
                ds = decompose(n + m, 7)
                assert ds.lam == dn.lam
                assert ds.first_digit == (dn.first_digit + dm.first_digit) % 7
