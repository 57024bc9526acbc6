import random

import pytest

from christol.linalg import SpanTracker, nullspace_basis, rank


def test_tracker_membership_and_coordinates():
    t = SpanTracker(5, 3)
    assert t.coordinates((0, 0, 0)) == ()
    t.append((1, 2, 0))
    t.append((0, 1, 1))
    assert t.coordinates((1, 2, 0)) == (1, 0)
    assert t.coordinates((0, 1, 1)) == (0, 1)
    assert t.coordinates((1, 3, 1)) == (1, 1)
    assert t.coordinates((2, 0, 1)) == (2, 1)  # 2*(1,2,0) = (2,4,0); +(0,1,1)
    assert t.coordinates((0, 0, 1)) is None


def test_tracker_rejects_dependent_append_and_bad_width():
    t = SpanTracker(3, 2)
    t.append((1, 1))
    with pytest.raises(ValueError):
        t.append((2, 2))
    with pytest.raises(ValueError):
        t.coordinates((1, 1, 1))


def test_tracker_coordinates_reproduce_vector():
    rng = random.Random(2718)
    for p in (2, 3, 7):
        width = 8
        t = SpanTracker(p, width)
        members = []
        while t.size < 4:
            v = tuple(rng.randrange(p) for _ in range(width))
            if t.coordinates(v) is None:
                t.append(v)
                members.append(v)
        for _ in range(200):
            weights = [rng.randrange(p) for _ in members]
            combo = tuple(
                sum(w * m[j] for w, m in zip(weights, members)) % p
                for j in range(width)
            )
            coords = t.coordinates(combo)
            assert coords is not None
            rebuilt = tuple(
                sum(c * m[j] for c, m in zip(coords, members)) % p
                for j in range(width)
            )
            assert rebuilt == combo


def test_rank():
    assert rank([], 2, 4) == 0
    assert rank([(0, 0, 0, 0)], 2, 4) == 0
    assert rank([(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)], 2, 4) == 2
    assert rank([(1, 2, 3), (2, 4, 6)], 7, 3) == 1
    assert rank([(1, 2, 3), (2, 4, 5)], 7, 3) == 2


def test_nullspace_shapes():
    # x + y = 0 over F_3: kernel spanned by (2, 1) after normalization
    basis = nullspace_basis([[1, 1]], 3, 2)
    assert basis == [(2, 1)]
    # full-rank square matrix: trivial kernel
    assert nullspace_basis([[1, 0], [0, 1]], 5, 2) == []
    # zero matrix: the whole space, one vector per column
    assert nullspace_basis([[0, 0]], 2, 2) == [(1, 0), (0, 1)]
    # no rows at all behaves like the zero matrix
    assert nullspace_basis([], 2, 3) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_nullspace_vectors_annihilate():
    rng = random.Random(31337)
    for p in (2, 3, 5):
        for _ in range(100):
            nrows = rng.randrange(1, 6)
            ncols = rng.randrange(1, 6)
            rows = [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)]
            basis = nullspace_basis(rows, p, ncols)
            for v in basis:
                for row in rows:
                    assert sum(a * b for a, b in zip(row, v)) % p == 0
            # rank-nullity
            assert len(basis) == ncols - rank(rows, p, ncols)


def test_nullspace_is_deterministic():
    rows = [[1, 2, 0, 1], [0, 1, 1, 1]]
    assert nullspace_basis(rows, 3, 4) == nullspace_basis(list(rows), 3, 4)
    # free-column markers: each basis vector has a 1 in its own free
    # column and zeros in the other free columns
    basis = nullspace_basis(rows, 3, 4)
    frees = []
    for v in basis:
        ones = [j for j, x in enumerate(v) if x == 1]
        assert ones
        frees.append(ones[-1])
    assert frees == sorted(frees)
