"""Shared fixtures: the worked 4x4 matrices, plus independent oracles used
to freeze derived expectations (brute-force enumeration, exact rank,
subsequence checks)."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from asmprism.asm import Asm, validate_asm


@pytest.fixture
def asmdiag() -> Asm:
    """The running diagram example: Ess = {(1,3), (2,1), (3,2)}."""
    return validate_asm([
        [0, 0, 0, 1],
        [0, 1, 0, 0],
        [1, -1, 1, 0],
        [0, 1, 0, 0],
    ])


@pytest.fixture
def noneqi() -> Asm:
    """The ideal example: Ess = {(1,2), (2,3)}, Perm = {3412, 4123}."""
    return validate_asm([
        [0, 0, 1, 0],
        [1, 0, -1, 1],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
    ])


@pytest.fixture
def deg_example() -> Asm:
    """The ASM with deg(A) = 4 < |D(A)| = 5."""
    return validate_asm([
        [0, 0, 1, 0],
        [0, 1, -1, 1],
        [1, -1, 1, 0],
        [0, 1, 0, 0],
    ])


@pytest.fixture
def triangle_example() -> Asm:
    """The monotone-triangle example: rows (3), (1,4), (1,3,4), (1,2,3,4)."""
    return validate_asm([
        [0, 0, 1, 0],
        [1, 0, -1, 1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
    ])


# ---------------------------------------------------------------- oracles


def brute_force_asms(n: int) -> list[Asm]:
    """Enumerate ASM(n) by filtering all {-1,0,1} matrices.  Usable for
    n <= 3; the independent oracle for the monotone-triangle enumerator."""
    out = []
    for flat in itertools.product((-1, 0, 1), repeat=n * n):
        rows = [flat[i * n:(i + 1) * n] for i in range(n)]
        try:
            out.append(validate_asm(rows))
        except Exception:
            continue
    return out


def brute_force_join(a: Asm, b: Asm, universe: list[Asm]) -> Asm:
    """Least upper bound by scanning the whole lattice."""
    from asmprism.asm import asm_leq

    uppers = [c for c in universe if asm_leq(a, c) and asm_leq(b, c)]
    least = [u for u in uppers if all(asm_leq(u, v) for v in uppers)]
    assert len(least) == 1
    return least[0]


def brute_force_pipe_dreams(w, n: int) -> frozenset[frozenset[tuple[int, int]]]:
    """All subsets of the staircase with |P| = l(w) whose reading word is a
    reduced expression for w."""
    from asmprism.perm import word_product

    staircase = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n]
    ell = w.length()
    out = set()
    for cells in itertools.combinations(staircase, ell):
        word = tuple(i + j - 1 for (i, j) in sorted(cells, key=lambda c: (c[0], -c[1])))
        if word_product(word) == w:
            out.add(frozenset(cells))
    return frozenset(out)


def contains_reduced_word(letters: tuple[int, ...], w) -> bool:
    """Does the word contain some reduced word of w as a subsequence?"""
    from asmprism.perm import reduced_words

    def is_subseq(needle, haystack):
        it = iter(haystack)
        return all(x in it for x in needle)

    return any(is_subseq(rw, letters) for rw in reduced_words(w))


def essential_by_corner_sums(a: Asm) -> frozenset[tuple[int, int]]:
    """The rank characterization of the essential set."""
    from asmprism.asm import corner_sum

    r = corner_sum(a)
    n = a.n
    out = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if not (r.value(i, j) == r.value(i - 1, j) == r.value(i, j - 1)):
                continue
            if i == n or j == n:
                continue
            if r.value(i, j) + 1 == r.value(i + 1, j) == r.value(i, j + 1):
                out.add((i, j))
    return frozenset(out)


def matrix_rank(rows: list[list[int]]) -> int:
    """Exact rank over the rationals by Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    col = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
