# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Functionals Lambda_{m,n}^2 -> Lambda_{m,n}: surjectivity, kernels, and
orthogonal complements under a perfect pairing.

Vectors of Lambda_{m,n}^2 are flattened to 2p^m residues: the X-basis
coefficients of the first slot, then of the second.
"""

from __future__ import annotations

from typing import List, Sequence

import numpy as np

from sharpflat.coleman.qsystem import Row
from sharpflat.core import log
from sharpflat.core.errors import ContractViolation
from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.linalg import howell
from sharpflat.sprung.factorize import mult_matrix, split_pair


def _at_level(functional: Row, m: int) -> Row:
    a, b = functional
    if a.m < m:
        raise ContractViolation("BAD_LEVEL", f"functional lives at level {a.m}, below {m}")
    return a.project(m), b.project(m)


def functional_matrix(functional: Row) -> np.ndarray:
    """p^m x 2p^m matrix of (z_1, z_2) -> r_1 z_1 + r_2 z_2."""
    a, b = functional
    return np.hstack([mult_matrix(a), mult_matrix(b)])


def surjectivity_check(functional: Row) -> bool:
    """Onto iff the image is nonzero modulo the maximal ideal (p, X)."""
    a, b = functional
    return a.constant_term().is_unit() or b.constant_term().is_unit()


def kernel_of(functional: Row, m: int = None) -> howell.HowellForm:
    m = functional[0].m if m is None else m
    a, b = _at_level(functional, m)
    return howell.kernel(functional_matrix((a, b)), a.p, a.n)


def kernel_rank_one_check(functional: Row, m: int) -> bool:
    """
    The level-m functional is onto and its kernel is free of rank one.

    Onto means the image Howell form is everything; the kernel is then a
    direct summand of Lambda_{m,n}^2 of full Z/p^n-length n p^m, and it must
    show exactly p^m unit pivots.
    """
    a, b = _at_level(functional, m)
    p, n = a.p, a.n
    size = p ** m
    img = howell.image(functional_matrix((a, b)), p, n)
    if not img.is_everything():
        log.debug(f"kernel_rank_one: image length {img.length} < {n * size}")
        return False
    ker = howell.kernel(functional_matrix((a, b)), p, n)
    return len(ker.pivots) == size and all(k == 0 for _, k in ker.pivots)


def is_perfect(pairing: np.ndarray, p: int, n: int) -> bool:
    rows, cols = pairing.shape
    return rows == cols and howell.image(pairing, p, n).is_everything()


def orthogonal_complement(
    pairing: np.ndarray, generators: Sequence[Sequence[int]], p: int, n: int, side: str = "left"
) -> howell.HowellForm:
    """
    Annihilator of the span of `generators` under <x, y> = x^T G y.

    side="left" places the generators in the first slot and returns
    {y : <g, y> = 0}; side="right" returns {x : <x, g> = 0}. Over Z/p^n the
    double complement (left then right) gives back the span itself.

    Raises:
        ContractViolation: the pairing is not perfect
    """
    if not is_perfect(pairing, p, n):
        raise ContractViolation("PAIRING_NOT_PERFECT", "pairing matrix is not invertible mod p")
    if side not in ("left", "right"):
        raise ContractViolation("BAD_SIDE", f"unknown side {side!r}")
    q = p ** n
    dim = pairing.shape[0]
    gens = [list(g) for g in generators if any(int(c) % q for c in g)]
    if not gens:
        return howell.howell_form([[int(i == j) for j in range(dim)] for i in range(dim)], dim, p, n)
    P = howell.as_matrix(gens, dim, q)
    G = pairing if side == "left" else pairing.T
    return howell.kernel((P @ G) % q, p, n)


def trace_pairing(p: int, n: int, m: int) -> np.ndarray:
    """
    <(x_1, x_2), (y_1, y_2)> = sum over g of x_{i,g} y_{i,g} in the group-element
    basis, written in the X-basis. Multiplication by gamma preserves it,
    so complements of Lambda-submodules are Lambda-submodules.
    """
    size = p ** m
    q = p ** n
    T = np.zeros((size, size), dtype=object)
    for k in range(size):
        col = IwasawaElem(tuple(int(i == k) for i in range(size)), p, n, m).gamma_coeffs()
        T[:, k] = col
    block = (T.T @ T) % q
    zero = np.zeros((size, size), dtype=object)
    return np.block([[block, zero], [zero, block]])


def signed_condition(pairing: np.ndarray, functional: Row, m: int) -> howell.HowellForm:
    """The local condition cut out by a functional: the complement of its kernel."""
    a, _ = _at_level(functional, m)
    ker = kernel_of(functional, m)
    return orthogonal_complement(pairing, ker.rows, a.p, a.n)


def _times_x(row: Sequence[int], template: IwasawaElem) -> List[int]:
    X = IwasawaElem.X(template.p, template.n, template.m)
    a, b = split_pair(row, template)
    return list((a * X).coeffs) + list((b * X).coeffs)


def is_free_of_rank_one(form: howell.HowellForm, m: int) -> bool:
    """
    A Z/p^n-span inside Lambda_{m,n}^2 is a free Lambda_{m,n}-module of rank
    one iff it is X-stable, has length n p^m, and its reduction modulo the
    maximal ideal is one-dimensional.
    """
    p, n = form.p, form.n
    size = p ** m
    if form.cols != 2 * size or form.length != n * size:
        return False
    template = IwasawaElem.zero(p, n, m)
    shifted = [_times_x(row, template) for row in form.rows]
    if not all(form.contains(v) for v in shifted):
        return False
    maximal = [[p * c for c in row] for row in form.rows] + shifted
    reduced = howell.howell_form(maximal, form.cols, p, n)
    return form.length - reduced.length == 1
