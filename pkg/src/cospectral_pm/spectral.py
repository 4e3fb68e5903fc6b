"""Exact characteristic polynomials of adjacency matrices.

Cospectrality is decided by comparing integer coefficient sequences, never by
floating-point eigenvalues.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class CharPoly:
    """``det(xI - A)`` as integer coefficients, leading coefficient first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __mul__(self, other: CharPoly) -> CharPoly:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CharPoly(tuple(out))

    def to_json(self) -> list[str]:
        # decimal strings: coefficients exceed 64 bits for n around 40
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str | int]) -> CharPoly:
        return cls(tuple(int(c) for c in data))

    def digest(self) -> str:
        return hashlib.sha256(",".join(self.to_json()).encode()).hexdigest()

    def __str__(self) -> str:
        n = self.degree
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = n - i
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            mag = abs(c)
            body = mono if (mag == 1 and mono) else f"{mag}{mono}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def char_poly(g: Graph) -> CharPoly:
    """Characteristic polynomial of the adjacency matrix of ``g``.

    Faddeev-LeVerrier over exact integers: ``M_1 = I``,
    ``c_{n-k} = -tr(A M_k) / k``, ``M_{k+1} = A M_k + c_{n-k} I``. Each
    division is exact because every coefficient is an integer; this is
    asserted. ``A M`` is formed by summing neighbor rows, so a step costs
    ``O(n * |E|)`` big-integer additions.
    """
    n = g.n
    coeffs = [1] + [0] * n
    if n == 0:
        return CharPoly((1,))
    nbrs = [np.fromiter(sorted(g.neighbors(v)), dtype=np.intp) for v in range(n)]
    zero_row = np.zeros(n, dtype=object)
    M = np.zeros((n, n), dtype=object)
    np.fill_diagonal(M, 1)
    diag = np.arange(n)
    for k in range(1, n + 1):
        AM = np.empty((n, n), dtype=object)
        for i in range(n):
            AM[i] = M[nbrs[i]].sum(axis=0) if len(nbrs[i]) else zero_row
        tr = sum(AM[diag, diag].tolist())
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError(f"inexact division at step {k}; input is not an integer matrix")
        coeffs[k] = c
        if k < n:
            AM[diag, diag] += c
            M = AM
    return CharPoly(tuple(int(c) for c in coeffs))


def cospectral(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and char_poly(g1) == char_poly(g2)


def spectrum_symmetric(p: CharPoly) -> bool:
    """True iff ``p(-x) = (-1)^n p(x)``: the spectrum is symmetric about zero.

    For adjacency polynomials this holds exactly when the graph is bipartite.
    """
    return all(c == 0 for c in p.coeffs[1::2])


def edge_count_from_spectrum(p: CharPoly) -> int:
    if p.degree < 2:
        raise ValueError("need a polynomial of degree at least 2")
    if p.coeffs[0] != 1:
        raise ValueError("polynomial is not monic")
    return -p.coeffs[2]
