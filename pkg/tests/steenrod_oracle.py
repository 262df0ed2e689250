"""Independent brute-force reduced power operations, used as an oracle.

Works with explicit root variables throughout: expands Chern classes into
full exponent-vector polynomials, substitutes t -> t + t^p literally, and
rewrites back into Chern classes by solving a linear system against the
expansions of all candidate monomials.  No code shared with the package.
"""

from __future__ import annotations

from itertools import combinations

RootPoly = dict[tuple[int, ...], int]  # exponent vector over n roots -> coeff


def elementary_root_poly(j: int, n: int) -> RootPoly:
    out: RootPoly = {}
    for subset in combinations(range(n), j):
        vec = [0] * n
        for i in subset:
            vec[i] = 1
        out[tuple(vec)] = 1
    return out


def root_mul(a: RootPoly, b: RootPoly, p: int) -> RootPoly:
    out: RootPoly = {}
    for va, ca in a.items():
        for vb, cb in b.items():
            v = tuple(x + y for x, y in zip(va, vb))
            out[v] = (out.get(v, 0) + ca * cb) % p
    return {v: c for v, c in out.items() if c}


def root_add(a: RootPoly, b: RootPoly, p: int) -> RootPoly:
    out = dict(a)
    for v, c in b.items():
        out[v] = (out.get(v, 0) + c) % p
    return {v: c for v, c in out.items() if c}


def expand_chern_monomial(exps: dict[int, int], n: int, p: int) -> RootPoly:
    """prod_j e_j^{exps[j]} as a root polynomial."""
    out: RootPoly = {(0,) * n: 1}
    for j, e in sorted(exps.items()):
        ej = elementary_root_poly(j, n)
        for _ in range(e):
            out = root_mul(out, ej, p)
    return out


def substitute_total(poly: RootPoly, n: int, p: int) -> RootPoly:
    """Apply t_i -> t_i + t_i^p to every variable, fully expanded."""
    out: RootPoly = {}
    for vec, coeff in poly.items():
        terms: RootPoly = {(0,) * n: coeff}
        for i, e in enumerate(vec):
            var_image: RootPoly = {}
            base = [0] * n
            base[i] = 1
            single: RootPoly = {tuple(base): 1}
            basep = [0] * n
            basep[i] = p
            singlep: RootPoly = {tuple(basep): 1}
            powed: RootPoly = {(0,) * n: 1}
            for _ in range(e):
                powed = root_mul(powed, root_add(single, singlep, p), p)
            terms = root_mul(terms, powed, p)
        out = root_add(out, terms, p)
    return out


def weight_part(poly: RootPoly, w: int) -> RootPoly:
    return {v: c for v, c in poly.items() if sum(v) == w}


def chern_monomials_of_weight(w: int, max_index: int) -> list[dict[int, int]]:
    """All exponent dicts {j: d_j} with sum j*d_j = w and j <= max_index."""
    out: list[dict[int, int]] = []

    def rec(j: int, left: int, acc: dict[int, int]):
        if left == 0:
            out.append(dict(acc))
            return
        if j > min(left, max_index):
            return
        rec(j + 1, left, acc)
        max_d = left // j
        for d in range(1, max_d + 1):
            acc[j] = d
            rec(j + 1, left - j * d, acc)
            del acc[j]

    rec(1, w, {})
    out.sort(key=lambda d: sorted(d.items()))
    return out


def solve_mod_p(matrix: list[list[int]], rhs: list[int], p: int) -> list[int]:
    """Solve A x = rhs over F_p; requires a consistent system with
    unique solution on the pivot columns (free columns get zero)."""
    rows = [row[:] + [b % p] for row, b in zip(matrix, rhs)]
    n_cols = len(matrix[0]) if matrix else 0
    pivot_of_col = {}
    r = 0
    for col in range(n_cols):
        pivot = None
        for rr in range(r, len(rows)):
            if rows[rr][col] % p:
                pivot = rr
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for rr in range(len(rows)):
            if rr != r and rows[rr][col] % p:
                f = rows[rr][col]
                rows[rr] = [(a - f * b) % p for a, b in zip(rows[rr], rows[r])]
        pivot_of_col[col] = r
        r += 1
    for rr in range(r, len(rows)):
        if rows[rr][-1] % p:
            raise ValueError("inconsistent system")
    x = [0] * n_cols
    for col, rr in pivot_of_col.items():
        x[col] = rows[rr][-1] % p
    return x


def brute_force_reduced_power(i: int, exps: dict[int, int], p: int,
                              n: int | None = None) -> dict[tuple[tuple[int, int], ...], int]:
    """P^i of the Chern monomial prod e_j^{exps[j]}, rewritten in Chern
    classes by solving against all candidate monomial expansions.

    Returns {sorted ((j, d), ...) tuples: coefficient}.  n defaults to the
    target weight (the smallest faithful root count).
    """
    w = sum(j * d for j, d in exps.items())
    target = w + i * (p - 1)
    if n is None:
        n = target
    expanded = expand_chern_monomial(exps, n, p)
    image = weight_part(substitute_total(expanded, n, p), target)

    candidates = chern_monomials_of_weight(target, n)
    all_vectors = sorted(set().union(
        *[expand_chern_monomial(c, n, p).keys() for c in candidates],
        image.keys()))
    vec_index = {v: k for k, v in enumerate(all_vectors)}
    matrix = [[0] * len(candidates) for _ in all_vectors]
    for col, cand in enumerate(candidates):
        for v, coeff in expand_chern_monomial(cand, n, p).items():
            matrix[vec_index[v]][col] = coeff
    rhs = [0] * len(all_vectors)
    for v, coeff in image.items():
        rhs[vec_index[v]] = coeff
    solution = solve_mod_p(matrix, rhs, p)
    out = {}
    for cand, coeff in zip(candidates, solution):
        if coeff % p:
            out[tuple(sorted(cand.items()))] = coeff % p
    return out
