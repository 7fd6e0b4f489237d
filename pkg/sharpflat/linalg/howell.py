# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Howell normal form over the chain ring Z/p^n.

Z/p^n is not a domain, so reduced echelon form does not decide row-span
membership. The Howell form does: after the annihilator rows p^(n-k)*row are
added for every non-unit pivot p^k, greedy reduction against the pivots is
a complete membership test, and the form is unique.

Matrices are numpy object arrays (rows x cols) of canonical residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from sharpflat.arith.scalars import INF, int_valuation
from sharpflat.core import log


def as_matrix(rows, cols: int, modulus: int) -> np.ndarray:
    """Object array of shape (len(rows), cols), entries reduced mod p^n."""
    rows = [list(r) for r in rows]
    out = np.zeros((len(rows), cols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != cols:
            raise ValueError(f"row {i} has length {len(row)}, expected {cols}")
        out[i, :] = [int(c) % modulus for c in row]
    return out


def matvec(A: np.ndarray, x: Sequence[int], modulus: int) -> np.ndarray:
    if A.shape[0] == 0:
        return np.zeros(0, dtype=object)
    return A.dot(np.array([int(c) for c in x], dtype=object)) % modulus


@dataclass(frozen=True)
class HowellForm:
    """Rows of the Howell form with their (column, pivot exponent) pairs."""

    rows: Tuple[Tuple[int, ...], ...]
    pivots: Tuple[Tuple[int, int], ...]
    p: int
    n: int
    cols: int

    @property
    def modulus(self) -> int:
        return self.p ** self.n

    @property
    def length(self) -> int:
        """log_p of the module order."""
        return sum(self.n - k for _, k in self.pivots)

    def is_zero(self) -> bool:
        return not self.rows

    def is_everything(self) -> bool:
        """Span equals (Z/p^n)^cols."""
        return self.length == self.n * self.cols

    def matrix(self) -> np.ndarray:
        return as_matrix(self.rows, self.cols, self.modulus)

    def reduce(self, vec: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """
        Greedy reduction of vec against the pivots.

        Returns:
            (residue, coefficients) with vec = residue + coefficients @ rows.
            The residue is zero iff vec lies in the span.
        """
        q = self.modulus
        r = np.array([int(c) % q for c in vec], dtype=object)
        coeffs = [0] * len(self.rows)
        for i, (col, k) in enumerate(self.pivots):
            entry = r[col]
            if entry == 0:
                continue
            pk = self.p ** k
            if entry % pk:
                continue
            t = entry // pk
            coeffs[i] = t
            r = (r - t * np.array(self.rows[i], dtype=object)) % q
        return tuple(int(c) for c in r), tuple(coeffs)

    def contains(self, vec: Sequence[int]) -> bool:
        residue, _ = self.reduce(vec)
        return not any(residue)

    def contains_form(self, other: "HowellForm") -> bool:
        return all(self.contains(row) for row in other.rows)


def _pivot_exponent(entry: int, p: int, n: int) -> int:
    v = int_valuation(entry, p, n)
    return n if v is INF else v


def howell_form(rows, cols: int, p: int, n: int) -> HowellForm:
    """
    Howell form of the row span of `rows` over Z/p^n.

    Column by column: pick the row of least valuation, scale its pivot to
    p^k, clear the column below, append p^(n-k)*pivot_row when k > 0, and
    finally reduce the entries above each pivot into [0, p^k).
    """
    q = p ** n
    work: List[np.ndarray] = [row for row in as_matrix(rows, cols, q) if any(row)]
    pivots: List[Tuple[int, int]] = []
    r = 0
    for col in range(cols):
        best, best_k = None, n
        for i in range(r, len(work)):
            k = _pivot_exponent(work[i][col], p, n)
            if k < best_k:
                best, best_k = i, k
        if best is None:
            continue
        work[r], work[best] = work[best], work[r]
        pk = p ** best_k
        unit = work[r][col] // pk
        work[r] = (work[r] * pow(int(unit), -1, q)) % q
        for i in range(r + 1, len(work)):
            entry = work[i][col]
            if entry:
                work[i] = (work[i] - (entry // pk) * work[r]) % q
        if best_k > 0:
            extra = (work[r] * p ** (n - best_k)) % q
            if any(extra):
                work.append(extra)
        pivots.append((col, best_k))
        r += 1
        work = work[:r] + [row for row in work[r:] if any(row)]

    work = work[:r]
    for j, (col, k) in enumerate(pivots):
        pk = p ** k
        for i in range(j):
            entry = work[i][col]
            if entry >= pk:
                work[i] = (work[i] - (entry // pk) * work[j]) % q

    return HowellForm(
        rows=tuple(tuple(int(c) for c in row) for row in work),
        pivots=tuple(pivots),
        p=p,
        n=n,
        cols=cols,
    )


def _augmented(A: np.ndarray, p: int, n: int) -> Tuple[HowellForm, int]:
    """Howell form of [A^T | I]; row i pairs A e_i with e_i."""
    rows_a, cols_a = A.shape
    q = p ** n
    aug = []
    for i in range(cols_a):
        unit = [0] * cols_a
        unit[i] = 1
        aug.append([int(A[j, i]) % q for j in range(rows_a)] + unit)
    return howell_form(aug, rows_a + cols_a, p, n), rows_a


def kernel(A: np.ndarray, p: int, n: int) -> HowellForm:
    """
    Howell form of {x : A x = 0 mod p^n}.

    Rows of the augmented form whose first block vanishes span exactly the
    kernel (Howell property), so no separate nullspace pass is needed.
    """
    aug, split = _augmented(A, p, n)
    gens = [row[split:] for row in aug.rows if not any(row[:split])]
    out = howell_form(gens, A.shape[1], p, n)
    log.debug(f"kernel: {A.shape[0]}x{A.shape[1]} over Z/{p}^{n}, length {out.length}")
    return out


def image(A: np.ndarray, p: int, n: int) -> HowellForm:
    """Howell form of the column span of A."""
    return howell_form([list(A[:, j]) for j in range(A.shape[1])], A.shape[0], p, n)


Solve = Callable[[Sequence[int]], Optional[Tuple[int, ...]]]


def solver(A: np.ndarray, p: int, n: int) -> Solve:
    """Reduce A once; the returned function solves A x = b for any b."""
    aug, split = _augmented(A, p, n)
    cols = A.shape[1]
    q = p ** n

    def _solve(b: Sequence[int]) -> Optional[Tuple[int, ...]]:
        residue, _ = aug.reduce([int(c) for c in b] + [0] * cols)
        if any(residue[:split]):
            return None
        return tuple((-c) % q for c in residue[split:])

    return _solve


def solve(A: np.ndarray, b: Sequence[int], p: int, n: int) -> Optional[Tuple[int, ...]]:
    """One solution x of A x = b mod p^n, or None."""
    return solver(A, p, n)(b)
