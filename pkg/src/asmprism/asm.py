"""Alternating sign matrices, corner sums, and the lattice order.

Conventions used throughout the package:

* Matrix coordinates are 1-based; cell (i, j) is row i from the top,
  column j from the left.
* The corner sum of A is r(i, j) = sum of the top-left i-by-j block.
  Row and column 0 are implicitly zero and never stored.
* The order is A <= B iff r_A(i, j) >= r_B(i, j) everywhere, so the
  identity matrix is the lattice minimum and joins take entrywise
  minima of corner sums.
* Two ASMs are equal when their canonical representatives agree, where
  the canonical form strips trailing blocks of the form [A|0; 0|1].
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

Cell = tuple[int, int]


class AsmValidationError(ValueError):
    """Input matrix fails one of the ASM (or partial ASM) axioms."""


class MatrixParseError(ValueError):
    """Text input is not a well-formed integer matrix."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _as_rows(m: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m)


def _check_alternating(entries: tuple[tuple[int, ...], ...]) -> None:
    """A1 plus the partial-ASM axiom: each row/column's nonzero entries
    alternate in sign starting with +1."""
    n = len(entries)
    for i in range(n):
        expected = 1
        for x in entries[i]:
            if x == 0:
                continue
            if x != expected:
                raise AsmValidationError(f"sign alternation fails in row {i + 1}")
            expected = -expected
    for j in range(n):
        expected = 1
        for i in range(n):
            x = entries[i][j]
            if x == 0:
                continue
            if x != expected:
                raise AsmValidationError(f"sign alternation fails in column {j + 1}")
            expected = -expected


def _check_entries(entries: tuple[tuple[int, ...], ...]) -> None:
    n = len(entries)
    if n == 0:
        raise AsmValidationError("empty matrix")
    for i, row in enumerate(entries):
        if len(row) != n:
            raise AsmValidationError(f"matrix is not square: row {i + 1} has {len(row)} entries, expected {n}")
        for j, x in enumerate(row):
            if x not in (-1, 0, 1):
                raise AsmValidationError(f"entry {x} at row {i + 1}, column {j + 1} is outside {{-1,0,1}}")


@dataclass(frozen=True, eq=False)
class Asm:
    """An alternating sign matrix.  Construct via :func:`validate_asm`."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def canonical(self) -> Asm:
        """Strip trailing [A|0; 0|1] blocks; representative of the iota class."""
        rows = [list(r) for r in self.entries]
        n = len(rows)
        while n > 1:
            last_row_ok = rows[n - 1][n - 1] == 1 and all(rows[n - 1][j] == 0 for j in range(n - 1))
            last_col_ok = all(rows[i][n - 1] == 0 for i in range(n - 1))
            if not (last_row_ok and last_col_ok):
                break
            rows = [r[: n - 1] for r in rows[: n - 1]]
            n -= 1
        return Asm(tuple(tuple(r) for r in rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Asm):
            return NotImplemented
        return self.canonical().entries == other.canonical().entries

    def __hash__(self) -> int:
        return hash(self.canonical().entries)

    def __repr__(self) -> str:
        return f"Asm({self.entries!r})"


@dataclass(frozen=True)
class PartialAsm:
    """A partial alternating sign matrix (row/column sums may be 0)."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class CornerSum:
    """Corner sum matrix of an honest ASM; r(i,0) = r(0,j) = 0 implicitly."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def value(self, i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        return self.rows[i - 1][j - 1]


@dataclass(frozen=True)
class MonotoneTriangle:
    """Row i lists, in increasing order, the columns of the 1s in row i of
    the partial column sum matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for i, row in enumerate(self.rows, start=1):
            if len(row) != i:
                raise ValueError(f"row {i} must have {i} entries, got {len(row)}")
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                raise ValueError(f"row {i} is not strictly increasing: {row}")

    @property
    def n(self) -> int:
        return len(self.rows)


def validate_asm(m: Sequence[Sequence[int]]) -> Asm:
    """Check the ASM axioms and wrap the matrix.

    Raises :class:`AsmValidationError` naming the offending row or column
    when an axiom fails.
    """
    entries = _as_rows(m)
    _check_entries(entries)
    n = len(entries)
    for i in range(n):
        if sum(entries[i]) != 1:
            raise AsmValidationError(f"row {i + 1} sums to {sum(entries[i])}, expected 1")
    for j in range(n):
        s = sum(entries[i][j] for i in range(n))
        if s != 1:
            raise AsmValidationError(f"column {j + 1} sums to {s}, expected 1")
    _check_alternating(entries)
    return Asm(entries)


def validate_partial_asm(m: Sequence[Sequence[int]]) -> PartialAsm:
    """Check the partial-ASM axioms: alternation, sums in {0,1}, and that
    the first nonzero entry of every row and column is 1."""
    entries = _as_rows(m)
    _check_entries(entries)
    n = len(entries)
    for i in range(n):
        if sum(entries[i]) not in (0, 1):
            raise AsmValidationError(f"row {i + 1} sums to {sum(entries[i])}, expected 0 or 1")
    for j in range(n):
        s = sum(entries[i][j] for i in range(n))
        if s not in (0, 1):
            raise AsmValidationError(f"column {j + 1} sums to {s}, expected 0 or 1")
    _check_alternating(entries)
    return PartialAsm(entries)


def identity_asm(n: int) -> Asm:
    return Asm(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def _corner_rows(entries: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    n = len(entries)
    rows = []
    prev = [0] * n
    for i in range(n):
        acc = 0
        row = []
        for j in range(n):
            acc += entries[i][j]
            row.append(prev[j] + acc)
        prev = row
        rows.append(tuple(row))
    return tuple(rows)


def _entries_from_corner_rows(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(rows)

    def r(i: int, j: int) -> int:
        return rows[i - 1][j - 1] if i >= 1 and j >= 1 else 0

    return tuple(
        tuple(r(i, j) - r(i, j - 1) - r(i - 1, j) + r(i - 1, j - 1) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def corner_sum(a: Asm) -> CornerSum:
    return CornerSum(_corner_rows(a.entries))


def corner_sum_from_rows(rows: Sequence[Sequence[int]]) -> CornerSum:
    """Validate the Robbins-Rumsey characterization (R1, R2) and wrap."""
    rs = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(rs)
    if any(len(row) != n for row in rs):
        raise ValueError("corner sum matrix must be square")

    def r(i: int, j: int) -> int:
        return rs[i - 1][j - 1] if i >= 1 and j >= 1 else 0

    for i in range(1, n + 1):
        if r(i, n) != i or r(n, i) != i:
            raise ValueError(f"R1 fails at index {i}: boundary corner sums must equal the index")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if r(i, j) - r(i - 1, j) not in (0, 1) or r(i, j) - r(i, j - 1) not in (0, 1):
                raise ValueError(f"R2 fails at ({i},{j}): consecutive difference outside {{0,1}}")
    return CornerSum(rs)


def asm_from_corner_sum(r: CornerSum) -> Asm:
    """Inverse of :func:`corner_sum` via inclusion-exclusion of r."""
    corner_sum_from_rows(r.rows)
    return validate_asm(_entries_from_corner_rows(r.rows))


def partial_corner_rows(p: PartialAsm) -> tuple[tuple[int, ...], ...]:
    return _corner_rows(p.entries)


def embed(a: Asm) -> Asm:
    """The inclusion iota: append a trailing row and column with a 1 at (n+1, n+1)."""
    n = a.n
    rows = [row + (0,) for row in a.entries]
    rows.append(tuple(0 for _ in range(n)) + (1,))
    return Asm(tuple(rows))


def _embed_to(a: Asm, n: int) -> Asm:
    while a.n < n:
        a = embed(a)
    return a


def asm_leq(a: Asm, b: Asm) -> bool:
    """True iff a <= b in ASM order, i.e. r_a >= r_b entrywise.

    Inputs of different sizes are compared after embedding to a common
    size, which is an order embedding.
    """
    n = max(a.n, b.n)
    ra = _corner_rows(_embed_to(a, n).entries)
    rb = _corner_rows(_embed_to(b, n).entries)
    return all(ra[i][j] >= rb[i][j] for i in range(n) for j in range(n))


def asm_join(a: Asm, b: Asm) -> Asm:
    """Least upper bound: entrywise minimum of corner sums."""
    n = max(a.n, b.n)
    ra = _corner_rows(_embed_to(a, n).entries)
    rb = _corner_rows(_embed_to(b, n).entries)
    rows = tuple(tuple(min(x, y) for x, y in zip(ra[i], rb[i])) for i in range(n))
    return asm_from_corner_sum(CornerSum(rows))


def asm_meet(a: Asm, b: Asm) -> Asm:
    """Greatest lower bound: entrywise maximum of corner sums."""
    n = max(a.n, b.n)
    ra = _corner_rows(_embed_to(a, n).entries)
    rb = _corner_rows(_embed_to(b, n).entries)
    rows = tuple(tuple(max(x, y) for x, y in zip(ra[i], rb[i])) for i in range(n))
    return asm_from_corner_sum(CornerSum(rows))


def join_all(asms: Iterable[Asm], n: int | None = None) -> Asm:
    """Join of a finite family; the empty join is the identity (lattice minimum)."""
    items = list(asms)
    if not items:
        return identity_asm(n if n else 1)
    out = items[0] if n is None else _embed_to(items[0], n)
    for a in items[1:]:
        out = asm_join(out, a)
    return out


def inversions(a: Asm) -> frozenset[Cell]:
    """The Rothe diagram D(A): cells where both the column sum above and the
    row sum to the left vanish (the factored inversion criterion)."""
    n = a.n
    cells = set()
    colsum = [[0] * n for _ in range(n + 1)]
    rowsum = [[0] * (n + 1) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            colsum[i + 1][j] = colsum[i][j] + a.entries[i][j]
            rowsum[i][j + 1] = rowsum[i][j] + a.entries[i][j]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (1 - colsum[i][j - 1]) * (1 - rowsum[i - 1][j]) == 1:
                cells.add((i, j))
    return frozenset(cells)


rothe_diagram = inversions


def essential_set(a: Asm) -> frozenset[Cell]:
    """Southeast-most corners of the connected components of D(A)."""
    d = inversions(a)
    return frozenset((i, j) for (i, j) in d if (i + 1, j) not in d and (i, j + 1) not in d)


def monotone_triangle(a: Asm) -> MonotoneTriangle:
    n = a.n
    rows = []
    col = [0] * n
    for i in range(n):
        for j in range(n):
            col[j] += a.entries[i][j]
        rows.append(tuple(j + 1 for j in range(n) if col[j] == 1))
    return MonotoneTriangle(tuple(rows))


def asm_from_monotone_triangle(mt: MonotoneTriangle) -> Asm:
    n = mt.n
    entries = []
    prev = [0] * n
    for i in range(n):
        cur = [0] * n
        for j in mt.rows[i]:
            cur[j - 1] = 1
        entries.append(tuple(cur[j] - prev[j] for j in range(n)))
        prev = cur
    return validate_asm(entries)


def lambda_row(a: Asm, ell: int) -> tuple[int, ...]:
    """The partition recorded by row ell of the monotone triangle:
    (m(ell, ell) - ell, m(ell, ell-1) - (ell-1), ..., m(ell, 1) - 1)."""
    if not 1 <= ell <= a.n:
        raise ValueError(f"row index {ell} out of range for n={a.n}")
    row = monotone_triangle(a).rows[ell - 1]
    parts = tuple(row[k - 1] - k for k in range(ell, 0, -1))
    return tuple(p for p in parts if p > 0)


def enumerate_monotone_triangles(n: int) -> Iterator[MonotoneTriangle]:
    """All monotone triangles with bottom row (1, ..., n), in lexicographic
    order of the flattened rows.  Consecutive rows interleave:
    m(i+1, j) <= m(i, j) <= m(i+1, j+1)."""
    if n < 1:
        raise ValueError("n must be positive")

    def extensions(prev: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        i = len(prev)
        # next row q of length i+1 with q[j] <= prev[j] <= q[j+1]
        def rec(pos: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
            if pos == i + 1:
                yield tuple(acc)
                return
            lo = 1 if pos == 0 else max(prev[pos - 1], acc[-1] + 1)
            hi = prev[pos] if pos < i else n
            for v in range(lo, hi + 1):
                acc.append(v)
                yield from rec(pos + 1, acc)
                acc.pop()

        yield from rec(0, [])

    def build(rows: list[tuple[int, ...]]) -> Iterator[MonotoneTriangle]:
        if len(rows) == n:
            yield MonotoneTriangle(tuple(rows))
            return
        for nxt in extensions(rows[-1]):
            rows.append(nxt)
            yield from build(rows)
            rows.pop()

    for top in range(1, n + 1):
        yield from build([(top,)])


def enumerate_asms(n: int) -> Iterator[Asm]:
    """Every element of ASM(n) exactly once, via monotone triangles."""
    for mt in enumerate_monotone_triangles(n):
        yield asm_from_monotone_triangle(mt)


def asm_count_formula(n: int) -> int:
    """prod_{j=0}^{n-1} (3j+1)! / (n+j)!"""
    from math import factorial

    num = 1
    den = 1
    for j in range(n):
        num *= factorial(3 * j + 1)
        den *= factorial(n + j)
    assert num % den == 0
    return num // den


def canonical_completion(p: PartialAsm) -> Asm:
    """Complete a partial ASM to an honest one: append a column with a 1
    for each zero-sum row (top to bottom), then a row with a 1 for each
    zero-sum column (left to right)."""
    rows = [list(r) for r in p.entries]
    n = p.n
    for i in range(n):
        if sum(rows[i]) == 0:
            for k in range(n):
                rows[k].append(1 if k == i else 0)
    width = len(rows[0])
    for j in range(n):
        if sum(rows[i][j] for i in range(n)) == 0:
            rows.append([1 if k == j else 0 for k in range(width)])
    size = len(rows)
    assert size == width, "completion must be square"
    return validate_asm(rows)


def partial_bigrassmannian(i: int, j: int, r: int, n: int) -> PartialAsm:
    """The partial permutation in PA(n) whose completion is the block
    biGrassmannian for (i, j, r).  Conditions B1 and B2 are required; B3 is
    not (entries that would land outside the n-by-n grid are dropped)."""
    if i < 1 or j < 1:
        raise ValueError("need 1 <= i, j")
    if not 0 <= r < min(i, j):
        raise ValueError(f"need 0 <= r < min(i, j), got r={r}")
    entries = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        if k <= r:
            w = k
        elif k <= i:
            w = j + k - r
        elif k <= i + j - r:
            w = k - i + r
        else:
            w = k
        if w <= n:
            entries[k - 1][w - 1] = 1
    return validate_partial_asm(entries)


def partial_asm_join(ps: Sequence[PartialAsm], n: int) -> PartialAsm:
    """Join in PA(n): entrywise minimum of corner sums.  Empty join is the
    identity, the minimum of the order."""
    if not ps:
        return PartialAsm(identity_asm(n).entries)
    mats = [partial_corner_rows(p) for p in ps]
    rows = tuple(
        tuple(min(m[i][j] for m in mats) for j in range(n)) for i in range(n)
    )
    return validate_partial_asm(_entries_from_corner_rows(rows))


def asm_from_rank_conditions(r: Sequence[Sequence[int | None]]) -> PartialAsm:
    """The partial ASM A_r whose rank conditions cut out the same locus as
    the northwest rank function r.

    ``None`` means an unbounded entry.  A condition with r_ij >= min(i, j)
    is vacuous (the corresponding biGrassmannian is the identity) and is
    skipped; the remaining partial biGrassmannians are joined.
    """
    n = len(r)
    if any(len(row) != n for row in r):
        raise ValueError("rank matrix must be square")
    parts = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rij = r[i - 1][j - 1]
            if rij is None:
                continue
            if rij < 0:
                raise ValueError(f"negative rank bound at ({i},{j})")
            if rij >= min(i, j):
                continue
            parts.append(partial_bigrassmannian(i, j, rij, n))
    return partial_asm_join(parts, n)


def render_asm(entries_owner: Asm | PartialAsm) -> str:
    """Text format: n lines of n space-separated integers."""
    return "\n".join(" ".join(str(x) for x in row) for row in entries_owner.entries)


def render_corner_sum(r: CornerSum) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in r.rows)


def parse_matrix_text(text: str) -> list[list[int]]:
    """Parse the ASM text format, reporting the line and token column of the
    first offending token."""
    rows: list[list[int]] = []
    lines = text.splitlines()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            if rows:
                break
            continue
        row = []
        for colno, tok in enumerate(line.split(), start=1):
            try:
                row.append(int(tok))
            except ValueError:
                raise MatrixParseError(lineno, colno, f"not an integer: {tok!r}") from None
        rows.append(row)
    if not rows:
        raise MatrixParseError(1, 1, "empty matrix")
    n = len(rows[0])
    for idx, row in enumerate(rows):
        if len(row) != n:
            raise MatrixParseError(idx + 1, len(row) + 1, f"expected {n} entries per row, got {len(row)}")
    if len(rows) != n:
        raise MatrixParseError(len(rows), 1, f"expected {n} rows for a square matrix, got {len(rows)}")
    return rows
