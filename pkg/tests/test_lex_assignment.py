import numpy as np
from hypothesis import given

from bapsens.core import INF
from bapsens.lex_assignment import lexicographic_assignment
from bapsens.oracle import brute_lex_assignment, enumerate_assignments
from conftest import weight_arrays
from worked import EX1, EX2, LEX1, LEX2, e


def _desc(w, A):
    return tuple(sorted((w[x] for x in A.edges), reverse=True))


def test_examples():
    r = lexicographic_assignment(EX1)
    assert r.assignment == LEX1 and r.sorted_weights == (1, 0, 0)
    # the three zero-weight edges tie at the last step
    assert not r.certified
    r = lexicographic_assignment(EX2)
    assert r.assignment == LEX2 and r.sorted_weights == (63, 60, 26)


def test_single_cell():
    assert lexicographic_assignment([[5]]).sorted_weights == (5,)


def test_forced_anchor():
    r = lexicographic_assignment(EX2, forced=e(1, 3))
    assert r.assignment == LEX2


def test_ties_uncertified():
    assert not lexicographic_assignment(np.full((2, 2), 3.0)).certified


def test_random_4x4_against_brute():
    rng = np.random.default_rng(7)
    for _ in range(100):
        w = rng.permutation(16).reshape(4, 4).astype(float)
        A = lexicographic_assignment(w).assignment
        assert A == brute_lex_assignment(w)


@given(weight_arrays(max_n=5, missing=True))
def test_matches_brute_distinct(w):
    assert lexicographic_assignment(w).assignment == brute_lex_assignment(w)


@given(weight_arrays(max_n=5, distinct=False, missing=True))
def test_certified_vector_is_minimal(w):
    got = lexicographic_assignment(w)
    best = min(_desc(w, A) for A in enumerate_assignments(w))
    assert got.sorted_weights >= best
    if got.certified:
        assert got.sorted_weights == best


def test_tie_can_cost_minimality():
    w = np.array([[0, 1], [1, 1]], dtype=float)
    got = lexicographic_assignment(w)
    assert not got.certified and got.sorted_weights == (1, 1)


@given(weight_arrays(max_n=4, missing=True))
def test_forced_is_minimal_among_assignments_through_anchor(w):
    from bapsens.solver import solve_bap

    s = solve_bap(w)
    for anchor in s.candidates:
        got = lexicographic_assignment(w, forced=anchor)
        assert anchor in got.assignment
        pool = [A for A in enumerate_assignments(w)
                if anchor in A and max(w[x] for x in A.edges) == w[anchor]]
        if got.certified:
            assert got.sorted_weights == min(_desc(w, A) for A in pool)
