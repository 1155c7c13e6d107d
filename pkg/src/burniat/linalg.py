"""Exact linear algebra over Z and GF(2).

Everything here works on plain Python ints (arbitrary precision), so there is
no floating point anywhere.  Matrices are lists of row tuples/lists.
"""
from __future__ import annotations


# ---------------------------------------------------------------------------
# Integer row Hermite normal form
# ---------------------------------------------------------------------------

def hnf_with_transform(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite normal form with transformation matrix.

    Returns (H, U) with U unimodular and U @ rows == H.  H has nonnegative
    pivots, zeros below each pivot and reduced entries above it; zero rows
    are collected at the bottom.
    """
    a = [list(r) for r in rows]
    m = len(a)
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def rowsub(i: int, j: int, q: int) -> None:
        # a[i] -= q*a[j], same on u
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def rowswap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    pivot_row = 0
    pivots: list[tuple[int, int]] = []
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, m) if a[r][col] != 0), None)
        if pr is None:
            continue
        rowswap(pivot_row, pr)
        # euclidean elimination below the pivot
        for r in range(pivot_row + 1, m):
            while a[r][col] != 0:
                q = a[pivot_row][col] // a[r][col]
                rowsub(pivot_row, r, q)
                rowswap(pivot_row, r)
        if a[pivot_row][col] < 0:
            a[pivot_row] = [-x for x in a[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        # reduce entries above the pivot
        p = a[pivot_row][col]
        for r in range(pivot_row):
            q = a[r][col] // p
            if q:
                rowsub(r, pivot_row, q)
        pivots.append((pivot_row, col))
        pivot_row += 1
    return a, u


def hnf(rows: list[list[int]], ncols: int) -> list[list[int]]:
    return hnf_with_transform(rows, ncols)[0]


def lattice_rank(rows: list[list[int]], ncols: int) -> int:
    h = hnf(rows, ncols)
    return sum(1 for r in h if any(r))


def lattice_index(rows: list[list[int]], ncols: int) -> int | None:
    """Index in Z^ncols of the sublattice spanned by the rows.

    None when the span has deficient rank (infinite index).
    """
    h = [r for r in hnf(rows, ncols) if any(r)]
    if len(h) < ncols:
        return None
    det = 1
    col = 0
    for r in h:
        while col < ncols and r[col] == 0:
            # a skipped column means the profile is not full triangular
            return None
        det *= r[col]
        col += 1
    return abs(det)


def left_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of {x : x @ rows == 0} as rows of integers."""
    h, u = hnf_with_transform(rows, ncols)
    return [u[i] for i in range(len(h)) if not any(h[i])]


def solve_integer(rows: list[list[int]], target: list[int], ncols: int) -> list[int] | None:
    """One integer solution x of x @ rows == target, or None.

    Back-substitution against the HNF profile of the row span.
    """
    h, u = hnf_with_transform(rows, ncols)
    nz = [i for i in range(len(h)) if any(h[i])]
    t = list(target)
    coeffs = [0] * len(h)
    for i in nz:
        col = next(c for c in range(ncols) if h[i][c] != 0)
        if t[col] % h[i][col] != 0:
            return None
        q = t[col] // h[i][col]
        coeffs[i] = q
        t = [x - q * y for x, y in zip(t, h[i])]
    if any(t):
        return None
    m = len(h)
    return [sum(coeffs[i] * u[i][j] for i in range(m)) for j in range(m)]


# ---------------------------------------------------------------------------
# GF(2) vectors (tuples of 0/1)
# ---------------------------------------------------------------------------

def bits_add(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple((a + b) & 1 for a, b in zip(x, y))

def bits_dot(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(x, y)) & 1

def bits_scale(c: int, x: tuple[int, ...]) -> tuple[int, ...]:
    return x if c & 1 else tuple(0 for _ in x)


def gf2_echelon(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Reduced row echelon basis of the span (deterministic)."""
    basis: list[list[int]] = []
    for row in rows:
        r = list(row)
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x)
            if r[lead]:
                r = [(x + y) & 1 for x, y in zip(r, b)]
        if any(r):
            lead = next(i for i, x in enumerate(r) if x)
            for b in basis:
                if b[lead]:
                    b[:] = [(x + y) & 1 for x, y in zip(b, r)]
            basis.append(r)
    basis.sort(key=lambda b: next(i for i, x in enumerate(b) if x))
    return [tuple(b) for b in basis]


def gf2_nullspace(rows: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Echelon basis of {v in GF(2)^n : rows @ v == 0}."""
    ech = gf2_echelon(rows)
    leads = [next(i for i, x in enumerate(r) if x) for r in ech]
    free = [i for i in range(n) if i not in leads]
    out = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, lead in zip(ech, leads):
            if r[f]:
                v[lead] = 1
        out.append(tuple(v))
    return out


def gf2_solve(rows: list[tuple[int, ...]], target: tuple[int, ...]) -> tuple[int, ...] | None:
    """x with sum_i x_i * rows_i == target, or None.  len(x) == len(rows)."""
    n = len(target)
    aug = [list(r) + [0] * len(rows) for r in rows]
    for i, a in enumerate(aug):
        a[n + i] = 1
    # full RREF on the first n columns, carrying the bookkeeping block along
    basis: list[list[int]] = []
    for a in aug:
        r = a[:]
        for b in basis:
            lead = next(i for i, x in enumerate(b[:n]) if x)
            if r[lead]:
                r = [(x + y) & 1 for x, y in zip(r, b)]
        if any(r[:n]):
            lead = next(i for i, x in enumerate(r[:n]) if x)
            for b in basis:
                if b[lead]:
                    b[:] = [(x + y) & 1 for x, y in zip(b, r)]
            basis.append(r)
    t = list(target) + [0] * len(rows)
    for b in basis:
        lead = next(i for i, x in enumerate(b[:n]) if x)
        if t[lead]:
            t = [(x + y) & 1 for x, y in zip(t, b)]
    if any(t[:n]):
        return None
    return tuple(t[n:])
