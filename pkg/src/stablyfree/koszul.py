"""Koszul-complex homology over polynomial Chow rings.

For a module that is the quotient of F_p[c_1, ..., c_n] by a set of
killed generators, the homology of M tensor the exterior algebra on
symbols dc_i computes Tor over the polynomial ring.  These Tor groups
form the starting page of the spectral sequence converging to the
cohomology of the corresponding homogeneous space; the odd-degree linear
part read off at homological index one is the datum the section
obstructions consume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .algebra import (AlgebraPresentation, GeneratorSpec, Monomial,
                      even_gen, iter_monomials, odd_gen)
from .linalg import Vector, quotient_basis, rank_and_kernel
from .modp import Prime
from .models import GroupModel

ChainBasisElement = tuple[Monomial, tuple[int, ...]]  # module part, dc indices


@dataclass(frozen=True)
class KoszulComplex:
    """Chain data for Tor^{F_p[base]}(F_p, module).

    The base-field factor is collapsed to F_p in bidegree (0, 0): the
    obstruction arguments live entirely in that reduced summand.
    """

    modulus: Prime
    base: tuple[GeneratorSpec, ...]
    module: AlgebraPresentation

    @property
    def base_indices(self) -> tuple[int, ...]:
        return tuple(g.bidegree.weight for g in self.base)

    def chain_basis(self, m: int, weight: int) -> list[ChainBasisElement]:
        """Basis of the homological-index-m chains of the given weight:
        module monomials tensor m-fold wedges of dc symbols."""
        out: list[ChainBasisElement] = []
        for subset in combinations(self.base_indices, m):
            rest = weight - sum(subset)
            if rest < 0:
                continue
            for mono in iter_monomials(self.module, rest):
                out.append((mono, subset))
        out.sort(key=lambda b: (b[1], self.module.sort_key(b[0])))
        return out

    def differential_columns(self, m: int, weight: int,
                             codomain_index: dict[ChainBasisElement, int],
                             domain: list[ChainBasisElement]) -> list[Vector]:
        """Columns of d: C_m -> C_{m-1} in the given weight."""
        p = self.modulus.value
        killed = self.module.killed_generators
        cols: list[Vector] = []
        for mono, subset in domain:
            col: Vector = {}
            for s, idx in enumerate(subset):
                name = f"c{idx}"
                if name in killed:
                    continue
                merged = dict(mono.even)
                merged[name] = merged.get(name, 0) + 1
                new_mono = Monomial(tuple(sorted(
                    merged.items(), key=lambda t: self.module.position(t[0]))), ())
                target = (new_mono, subset[:s] + subset[s + 1:])
                sign = 1 if s % 2 == 0 else -1
                row = codomain_index[target]
                col[row] = (col.get(row, 0) + sign) % p
            cols.append({r: c for r, c in col.items() if c})
        return cols


def build_koszul(base: list[GeneratorSpec], module: AlgebraPresentation) -> KoszulComplex:
    """Assemble the complex, checking the module is a quotient of F_p[base].

    Base generators follow the Chern-class convention: cJ of weight J,
    so that the wedge symbol dcJ carries internal bidegree (2J, J).
    """
    if tuple(module.generators) != tuple(base):
        raise ValueError("module generators must match the Koszul base")
    for g in base:
        if g.parity != "even":
            raise ValueError("Koszul base generators must be even")
        if g.name != f"c{g.bidegree.weight}":
            raise ValueError(f"base generator {g.name!r} must be named by its "
                             f"weight (c{g.bidegree.weight})")
    return KoszulComplex(module.modulus, tuple(base), module)


@dataclass(frozen=True, slots=True)
class TorEntry:
    dimension: int
    basis: tuple[str, ...]


@dataclass
class TorTable:
    """Bigraded Tor dimensions with named coset-representative bases.

    Keys are (homological index i, internal degree q, weight j); here all
    internal classes sit on the Chow diagonal, so q = 2j throughout.
    """

    modulus: int
    degree_bound: int
    entries: dict[tuple[int, int, int], TorEntry] = field(default_factory=dict)
    chain_dims: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def rows(self) -> list[tuple[tuple[int, int, int], TorEntry]]:
        return sorted(self.entries.items(),
                      key=lambda kv: (kv[0][2], kv[0][1], kv[0][0]))

    def dimension(self, i: int, q: int, j: int) -> int:
        entry = self.entries.get((i, q, j))
        return entry.dimension if entry else 0

    def total_dimension(self) -> int:
        return sum(e.dimension for e in self.entries.values())

    def euler_consistent(self) -> bool:
        """Alternating homology sums must match alternating chain sums in
        every multidegree."""
        keys = {(q, j) for (_, q, j) in self.entries} | \
               {(q, j) for (_, q, j) in self.chain_dims}
        for q, j in keys:
            hom = sum((-1) ** i * e.dimension
                      for (i, qq, jj), e in self.entries.items() if (qq, jj) == (q, j))
            chain = sum((-1) ** i * d
                        for (i, qq, jj), d in self.chain_dims.items() if (qq, jj) == (q, j))
            if hom != chain:
                return False
        return True

    def index_one_classes(self) -> list[tuple[int, str]]:
        """(weight, representative) pairs at homological index one."""
        out = []
        for (i, _, j), entry in self.rows():
            if i == 1:
                out.extend((j, name) for name in entry.basis)
        return out

    def render_text(self) -> str:
        lines = [f"Tor table mod {self.modulus} (internal degree <= {self.degree_bound})",
                 "  i   q   j  dim  basis"]
        for (i, q, j), entry in self.rows():
            basis = ", ".join(entry.basis)
            lines.append(f"{i:3d} {q:3d} {j:3d} {entry.dimension:4d}  {basis}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "degree_bound": self.degree_bound,
            "entries": [
                {"i": i, "q": q, "j": j,
                 "dimension": e.dimension, "basis": list(e.basis)}
                for (i, q, j), e in self.rows()
            ],
        }


def _render_chain_vector(vec: Vector, basis: list[ChainBasisElement]) -> str:
    parts = []
    for row in sorted(vec):
        coeff = vec[row]
        mono, subset = basis[row]
        factors = [f"{n}^{e}" if e > 1 else n for n, e in mono.even]
        if subset:
            factors.append("^".join(f"dc{i}" for i in subset))
        body = "*".join(factors) if factors else "1"
        parts.append(body if coeff == 1 else f"{coeff}*{body}")
    return " + ".join(parts)


def koszul_homology(cx: KoszulComplex, degree_bound: int) -> TorTable:
    """Homology of the complex in every multidegree up to the bound.

    Matrices are eliminated exactly over F_p with deterministic pivoting;
    d^2 = 0 is asserted on every multidegree processed.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    p = cx.modulus.value
    table = TorTable(p, degree_bound)
    max_index = len(cx.base)
    for weight in range(degree_bound // 2 + 1):
        bases = {m: cx.chain_basis(m, weight) for m in range(max_index + 2)}
        indexes = {m: {b: i for i, b in enumerate(basis)}
                   for m, basis in bases.items()}
        cols = {}
        for m in range(1, max_index + 2):
            cols[m] = cx.differential_columns(m, weight, indexes[m - 1], bases[m])
        # d^2 = 0 in this multidegree
        for m in range(2, max_index + 2):
            for col, (mono, subset) in zip(cols[m], bases[m]):
                composite: Vector = {}
                for row, coeff in col.items():
                    for row2, coeff2 in cols[m - 1][row].items():
                        composite[row2] = (composite.get(row2, 0) + coeff * coeff2) % p
                if any(v % p for v in composite.values()):
                    raise AssertionError(
                        f"d^2 != 0 at index {m}, weight {weight}, on {mono, subset}")
        for m in range(max_index + 1):
            n_chains = len(bases[m])
            if n_chains:
                table.chain_dims[(m, 2 * weight, weight)] = n_chains
            if n_chains == 0:
                continue
            if m == 0:
                kernel: list[Vector] = [{i: 1} for i in range(n_chains)]
            else:
                _, kernel = rank_and_kernel(cols[m], p)
            image_vectors = [col for col in cols[m + 1] if col]
            reps = quotient_basis(kernel, image_vectors, p)
            if not reps:
                continue
            names = tuple(_render_chain_vector(v, bases[m]) for v in reps)
            table.entries[(m, 2 * weight, weight)] = TorEntry(len(reps), names)
    return table


def homogeneous_space_complex(family: str, n: int, r: int, p: Prime) -> KoszulComplex:
    """The complex computing Tor for the quotient of the family-n group by
    the rank-r subgroup of the same family: base generators from CH*(BG)/p,
    module the image of CH*(BH)/p (the generators above rank r killed)."""
    model = GroupModel(family, n)
    model.check_prime(p)
    if r < 0 or r > n:
        raise ValueError(f"subgroup rank r={r} out of range for n={n}")
    indices = model.generator_indices()
    killed = frozenset(f"c{i}" for i in indices[r:])
    base = [even_gen(f"c{i}", i) for i in indices]
    module = AlgebraPresentation(p, tuple(base), killed)
    return build_koszul(base, module)


@lru_cache(maxsize=None)
def _tor_table_cached(family: str, n: int, r: int, p_value: int,
                      degree_bound: int) -> TorTable:
    cx = homogeneous_space_complex(family, n, r, Prime(p_value))
    table = koszul_homology(cx, degree_bound)
    if not table.euler_consistent():
        raise AssertionError("Euler characteristic check failed")
    return table


def _default_params(family: str, n: int, r: int | None) -> int:
    if r is None:
        r = 0 if family == "GL" else n - 1
    return r


def homogeneous_space_tor(family: str, n: int, r: int | None = None,
                          p: Prime | None = None,
                          degree_bound: int | None = None) -> TorTable:
    """Full Tor table for the homogeneous space, up to the internal degree
    bound (default: twice the top generator index)."""
    if p is None:
        raise ValueError("a coefficient prime is required")
    r = _default_params(family, n, r)
    indices = GroupModel(family, n).generator_indices()
    if degree_bound is None:
        degree_bound = 2 * max(indices, default=0)
    return _tor_table_cached(family, n, r, p.value, degree_bound)


def homogeneous_space_odd_basis(family: str, n: int, r: int | None = None,
                                p: Prime | None = None) -> list[GeneratorSpec]:
    """Odd-degree linear cohomology basis of the homogeneous space.

    GL: the quotient GL_n / GL_r, any 0 <= r <= n.  Sp / SO: the quotient
    by the subgroup of rank r (default corank one, r = n - 1); SO needs
    p > 2.  The basis is read off the homological-index-one part of the
    Koszul homology and comes back as odd generators a_j with their
    bidegrees.
    """
    table = homogeneous_space_tor(family, n, r, p)
    out = []
    for weight, rep in table.index_one_classes():
        # at homological index one and weight w the only odd class is a_w;
        # the clean quotients here always reduce the representative to dc_w
        if rep != f"dc{weight}":
            raise AssertionError(
                f"unexpected index-one representative {rep!r} at weight {weight}")
        out.append(odd_gen(f"a{weight}", weight))
    return out
