import ast
import pathlib
import random
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

import localduality.oracle as oracle_mod
from localduality.oracle import (
    MonomialIdeal, mono_codim, mono_dimension, mono_intersect,
    mono_primary_decomposition, mono_quotient, mono_top_part,
)


def test_decomposition_examples():
    comps = mono_primary_decomposition(MonomialIdeal([(2, 0), (1, 1), (0, 2)]))
    assert set(comps) == {MonomialIdeal([(2, 0), (0, 1)]), MonomialIdeal([(1, 0), (0, 2)])}
    comps = mono_primary_decomposition(MonomialIdeal([(2, 0), (1, 1)]))
    assert set(comps) == {MonomialIdeal([(1, 0)]), MonomialIdeal([(2, 0), (0, 1)])}
    assert mono_primary_decomposition(MonomialIdeal([(1, 0)])) == [MonomialIdeal([(1, 0)])]
    with pytest.raises(ValueError):
        mono_primary_decomposition(MonomialIdeal([(0, 0)]))


def test_top_part_examples():
    assert mono_top_part(MonomialIdeal([(2, 0), (1, 1)]), 1) == MonomialIdeal([(1, 0)])
    J = MonomialIdeal([(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])
    assert mono_top_part(J, 2) == J
    A = MonomialIdeal([(3, 0), (1, 2), (0, 3)])
    assert mono_top_part(A, 2) == A
    with pytest.raises(ValueError):
        mono_top_part(A, 1)


def test_small_operations():
    assert mono_dimension(MonomialIdeal([(2, 0), (1, 1)])) == 1
    assert mono_intersect(MonomialIdeal([(1, 0)]), MonomialIdeal([(0, 1)])) == MonomialIdeal([(1, 1)])
    assert mono_quotient(MonomialIdeal([(2,)]), MonomialIdeal([(1,)])) == MonomialIdeal([(1,)])
    assert mono_dimension(MonomialIdeal([(0, 0)])) == -1


def test_generators_are_minimal():
    I = MonomialIdeal([(2, 1), (1, 1), (3, 0), (1, 1)])
    assert I.gens == ((1, 1), (3, 0))


def test_oracle_does_not_use_groebner():
    tree = ast.parse(pathlib.Path(oracle_mod.__file__).read_text())
    names = [n.module or "" for n in ast.walk(tree) if isinstance(n, ast.ImportFrom)]
    names += [a.name for n in ast.walk(tree) if isinstance(n, ast.Import) for a in n.names]
    assert not any("groebner" in n or "duality" in n for n in names)


mono = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 3)).filter(any)


@settings(max_examples=60, deadline=None)
@given(st.lists(mono, min_size=1, max_size=5))
def test_decomposition_intersects_back(gens):
    I = MonomialIdeal(gens)
    comps = mono_primary_decomposition(I)
    assert reduce(mono_intersect, comps) == I
    for c in comps:
        assert all(sum(1 for e in g if e) == 1 for g in c.gens)
    # irredundant
    for i, c in enumerate(comps):
        rest = [d for j, d in enumerate(comps) if j != i]
        if rest:
            assert reduce(mono_intersect, rest) != I
    top = mono_top_part(I, mono_codim(I))
    assert I.issubset(top)
