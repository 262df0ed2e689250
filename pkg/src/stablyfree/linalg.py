"""Exact sparse Gaussian elimination over F_p.

Vectors are dicts mapping row index to a nonzero residue.  Pivoting is
deterministic (smallest available row index first) so kernel and quotient
bases come out in a reproducible order.
"""

from __future__ import annotations

Vector = dict[int, int]


def vec_sub_scaled(target: Vector, source: Vector, factor: int, p: int):
    """target -= factor * source, in place, dropping zeros."""
    for idx, val in source.items():
        new = (target.get(idx, 0) - factor * val) % p
        if new:
            target[idx] = new
        else:
            target.pop(idx, None)


def vec_scale(v: Vector, factor: int, p: int) -> Vector:
    return {i: (c * factor) % p for i, c in v.items()}


class Eliminator:
    """Incremental echelonization of column vectors over F_p."""

    def __init__(self, p: int):
        self.p = p
        self.pivots: dict[int, Vector] = {}  # pivot row -> normalized vector

    def reduce(self, v: Vector) -> Vector:
        """Reduce v against the current pivots; returns the residual."""
        v = dict(v)
        while v:
            r = min(v)
            pivot = self.pivots.get(r)
            if pivot is None:
                return v
            vec_sub_scaled(v, pivot, v[r], self.p)
        return v

    def insert(self, v: Vector) -> bool:
        """Reduce and, if nonzero, add as a new pivot.  True if rank grew."""
        res = self.reduce(v)
        if not res:
            return False
        r = min(res)
        inv = pow(res[r], self.p - 2, self.p)
        self.pivots[r] = vec_scale(res, inv, self.p)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_and_kernel(columns: list[Vector], p: int) -> tuple[int, list[Vector]]:
    """Rank of the matrix with the given columns, and a kernel basis.

    Kernel vectors are dicts over column indices, echelon-shaped with
    respect to the insertion order of the columns.
    """
    elim = Eliminator(p)
    # track the combination of original columns realizing each residual
    combos: dict[int, Vector] = {}  # pivot row -> combination
    kernel: list[Vector] = []
    for idx, col in enumerate(columns):
        v = dict(col)
        combo: Vector = {idx: 1}
        while v:
            r = min(v)
            pivot = elim.pivots.get(r)
            if pivot is None:
                inv = pow(v[r], p - 2, p)
                elim.pivots[r] = vec_scale(v, inv, p)
                combos[r] = vec_scale(combo, inv, p)
                break
            factor = v[r]
            vec_sub_scaled(v, pivot, factor, p)
            vec_sub_scaled(combo, combos[r], factor, p)
        else:
            kernel.append(combo)
    return elim.rank, kernel


def quotient_basis(kernel: list[Vector], image: list[Vector], p: int) -> list[Vector]:
    """Representatives of a basis of span(kernel) / span(image).

    Each returned vector is a kernel vector reduced modulo the image and
    then echelonized against the ones already chosen, so representatives
    are canonical for the given input order.
    """
    image_elim = Eliminator(p)
    for v in image:
        image_elim.insert(v)
    chosen = Eliminator(p)
    reps: list[Vector] = []
    for v in kernel:
        reduced = image_elim.reduce(v)
        residual = chosen.reduce(reduced)
        if residual:
            r = min(residual)
            inv = pow(residual[r], p - 2, p)
            normalized = vec_scale(residual, inv, p)
            chosen.pivots[r] = normalized
            reps.append(normalized)
    return reps
