"""Integer skew-symmetric forms, symplectic basis reduction, and GF(2) rank.

The intersection form of a closed orientable surface is skew and
unimodular; reducing it to the standard block-diagonal form J (blocks
[[0,1],[-1,0]]) fixes meridian/longitude coordinates for every homology
class this package publishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


class NotUnimodularError(ArithmeticError):
    """Skew form whose determinant is not +-1 (signals a surface-construction bug)."""


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free Gaussian elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    assert det.denominator == 1
    return int(det)


@dataclass(frozen=True)
class SkewForm:
    """A skew-symmetric integer bilinear form of even dimension."""

    dim: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SkewForm":
        dim = len(rows)
        if dim % 2:
            raise ValueError("skew form must have even dimension")
        ent = tuple(tuple(int(x) for x in row) for row in rows)
        for i in range(dim):
            if len(ent[i]) != dim:
                raise ValueError("form matrix must be square")
            if ent[i][i]:
                raise ValueError("skew form must have zero diagonal")
            for j in range(dim):
                if ent[i][j] != -ent[j][i]:
                    raise ValueError("form matrix must be skew-symmetric")
        return cls(dim, ent)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(u[i] * self.entries[i][j] * v[j] for i in range(self.dim) for j in range(self.dim))

    def determinant(self) -> int:
        return det_int(self.entries)

    def is_unimodular(self) -> bool:
        return abs(self.determinant()) == 1


def standard_form(genus: int) -> SkewForm:
    """The block-diagonal form J with `genus` hyperbolic blocks."""
    dim = 2 * genus
    rows = [[0] * dim for _ in range(dim)]
    for k in range(genus):
        rows[2 * k][2 * k + 1] = 1
        rows[2 * k + 1][2 * k] = -1
    return SkewForm.from_rows(rows)


@dataclass(frozen=True)
class SymplecticBasis:
    """A unimodular change of basis bringing a skew form to standard J.

    `change` has the new basis vectors as columns: change^T . form . change = J.
    `inverse` is its integer inverse; old-basis coordinates x become
    symplectic coordinates inverse . x.
    """

    dim: int
    change: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[int, ...], ...]
    pairs: tuple[tuple[int, int], ...]

    @property
    def genus(self) -> int:
        return self.dim // 2

    def to_symplectic(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Express an old-basis coordinate vector in the symplectic basis."""
        return tuple(sum(self.inverse[i][j] * coords[j] for j in range(self.dim)) for i in range(self.dim))


def _transform(entries: Matrix, change: Matrix, inverse: Matrix, op: str, i: int, j: int, q: int = 0) -> None:
    """Apply a congruence generator to the form and track change/inverse.

    op "swap": exchange basis vectors i, j; "neg": negate vector i;
    "add": basis vector j += q * basis vector i.
    """
    n = len(entries)
    if op == "swap":
        for row in entries:
            row[i], row[j] = row[j], row[i]
        entries[i], entries[j] = entries[j], entries[i]
        for row in change:
            row[i], row[j] = row[j], row[i]
        inverse[i], inverse[j] = inverse[j], inverse[i]
    elif op == "neg":
        for row in entries:
            row[i] = -row[i]
        for c in range(n):
            entries[i][c] = -entries[i][c]
        for row in change:
            row[i] = -row[i]
        inverse[i] = [-x for x in inverse[i]]
    elif op == "add":
        for row in entries:
            row[j] += q * row[i]
        for c in range(n):
            entries[j][c] += q * entries[i][c]
        for row in change:
            row[j] += q * row[i]
        inverse[i] = [a - q * b for a, b in zip(inverse[i], inverse[j])]
    else:  # pragma: no cover
        raise AssertionError(op)


def symplectic_reduce(form: SkewForm) -> SymplecticBasis:
    """Reduce a unimodular skew form to standard J by a unimodular basis change.

    Deterministic gcd pivoting: the pivot is the smallest nonzero entry in
    absolute value, ties broken by lowest (row, column) index.
    """
    n = form.dim
    if abs(form.determinant()) != 1:
        raise NotUnimodularError("skew form is not unimodular")
    q_work: Matrix = [list(row) for row in form.entries]
    change: Matrix = [[int(i == j) for j in range(n)] for i in range(n)]
    inverse: Matrix = [[int(i == j) for j in range(n)] for i in range(n)]

    for base in range(0, n, 2):
        # Move the minimal-absolute-value pivot of the trailing block to (base, base+1).
        best = None
        for i in range(base, n):
            for j in range(base, n):
                v = q_work[i][j]
                if v and (best is None or abs(v) < abs(q_work[best[0]][best[1]])):
                    best = (i, j)
        assert best is not None, "unimodular form cannot have a zero trailing block"
        bi, bj = best
        if bi != base:
            _transform(q_work, change, inverse, "swap", base, bi)
            if bj == base:
                bj = bi
        if bj != base + 1:
            _transform(q_work, change, inverse, "swap", base + 1, bj)
        if q_work[base][base + 1] < 0:
            _transform(q_work, change, inverse, "neg", base + 1, base + 1)

        # Euclidean clearing of the pivot row; skewness mirrors it to the column.
        while True:
            p = q_work[base][base + 1]
            k = next((k for k in range(base + 2, n) if q_work[base][k] % p), None)
            if k is None:
                break
            q = q_work[base][k] // p
            _transform(q_work, change, inverse, "add", base + 1, k, -q)
            _transform(q_work, change, inverse, "swap", base + 1, k)
            if q_work[base][base + 1] < 0:
                _transform(q_work, change, inverse, "neg", base + 1, base + 1)
        p = q_work[base][base + 1]
        if abs(p) != 1:
            raise NotUnimodularError("pivot gcd exceeds 1; form is not unimodular")
        for k in range(base + 2, n):
            if q_work[base][k]:
                _transform(q_work, change, inverse, "add", base + 1, k, -q_work[base][k] // p)
        for k in range(base + 2, n):
            if q_work[base + 1][k]:
                # base column pairs only with base+1 now; q_work[base+1][base] = -1.
                _transform(q_work, change, inverse, "add", base, k, q_work[base + 1][k])

    pairs = tuple((2 * k, 2 * k + 1) for k in range(n // 2))
    basis = SymplecticBasis(
        dim=n,
        change=tuple(tuple(row) for row in change),
        inverse=tuple(tuple(row) for row in inverse),
        pairs=pairs,
    )
    assert _check_standard(form, basis), "symplectic reduction postcondition failed"
    return basis


def _check_standard(form: SkewForm, basis: SymplecticBasis) -> bool:
    n = form.dim
    std = standard_form(n // 2).entries
    c = basis.change
    for i in range(n):
        for j in range(n):
            val = sum(c[r][i] * form.entries[r][s] * c[s][j] for r in range(n) for s in range(n))
            if val != std[i][j]:
                return False
    return True


def mod2_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over GF(2) of a collection of integer vectors."""
    basis: list[int] = []
    for vec in vectors:
        x = 0
        for k, v in enumerate(vec):
            if v & 1:
                x |= 1 << k
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
            basis.sort(reverse=True)
    return len(basis)


def random_unimodular(dim: int, rng, steps: int = 20) -> Matrix:
    """Random unimodular integer matrix built from shears and swaps (test helper)."""
    m = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        i, j = rng.sample(range(dim), 2)
        q = rng.randint(-3, 3)
        for row in m:
            row[j] += q * row[i]
        if rng.random() < 0.3:
            for row in m:
                row[i], row[j] = row[j], row[i]
    return m
