"""Mod-p reduced power operations P^i.

Two engines.  On polynomial algebras of Chern classes the action is
forced by the axioms: each generator is an elementary symmetric
polynomial in weight-one roots, a root t maps to t + t^p, and the total
operation is multiplicative, so images of monomials are truncated
products of cached generator images.  On the primitive odd generators of
a group model the action is the closed-form binomial rule.  A
verification harness checks the two engines against the defining axioms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import (AlgebraPresentation, Element, Monomial, UNIT_MONOMIAL,
                      bidegree_of, polynomial_algebra)
from .modp import Prime, binom_mod_p
from .models import GroupModel
from .symmetric import reduced_power_on_elementary


@dataclass(frozen=True, slots=True)
class SteenrodContext:
    """A coefficient prime together with the group model acted on."""

    modulus: Prime
    model: GroupModel

    def __post_init__(self):
        self.model.check_prime(self.modulus)

    def algebra(self) -> AlgebraPresentation:
        return self.model.group_algebra(self.modulus)


def apply_P_primitive(i: int, j: int, ctx: SteenrodContext) -> Element:
    """P^i on the primitive odd generator a_j of the model.

    The image is C(j-1, i) * a_{j + i(p-1)}; indices that are not
    generators of the model (out of range, or of the wrong parity for
    Sp/SO) carry no class, so the image is zero there.
    """
    if i < 0:
        raise ValueError("operation index must be nonnegative")
    indices = ctx.model.generator_indices()
    if j not in indices:
        raise ValueError(f"a{j} is not an odd generator of {ctx.model.describe()}")
    alg = ctx.algebra()
    p = ctx.modulus
    target = j + i * (p.value - 1)
    if target not in indices:
        return alg.zero()
    coeff = binom_mod_p(j - 1, i, p)
    if not coeff:
        return alg.zero()
    return alg.gen(f"a{target}") * coeff.residue


def _parse_chern_index(name: str) -> int:
    if not name.startswith("c"):
        raise ValueError(f"{name!r} is not a Chern-class generator")
    return int(name[1:])


def _mono_weight(mono: Monomial) -> int:
    return sum(_parse_chern_index(n) * e for n, e in mono.even)


def _generator_total(p: Prime, j: int, cap: int) -> dict[Monomial, int]:
    """Truncated total operation on c_j: sum of P^a(c_j) for weights <= cap."""
    out: dict[Monomial, int] = {}
    a = 0
    while j + a * (p.value - 1) <= cap and a <= j:
        for exps, coeff in reduced_power_on_elementary(p.value, a, j).items():
            c = coeff % p.value
            if not c:
                continue
            even = tuple((f"c{k + 1}", e) for k, e in enumerate(exps) if e)
            mono = Monomial(even, ())
            out[mono] = (out.get(mono, 0) + c) % p.value
        a += 1
    return {m: c for m, c in out.items() if c}


def _mul_truncated(a: dict[Monomial, int], b: dict[Monomial, int],
                   cap: int, p: int) -> dict[Monomial, int]:
    """Product of even-monomial dicts, dropping weights above cap."""
    out: dict[Monomial, int] = {}
    for m1, c1 in a.items():
        w1 = _mono_weight(m1)
        for m2, c2 in b.items():
            if w1 + _mono_weight(m2) > cap:
                continue
            merged: dict[str, int] = dict(m1.even)
            for name, exp in m2.even:
                merged[name] = merged.get(name, 0) + exp
            mono = Monomial(tuple(sorted(merged.items(),
                                         key=lambda t: _parse_chern_index(t[0]))), ())
            out[mono] = (out.get(mono, 0) + c1 * c2) % p
    return {m: c for m, c in out.items() if c}


# cache: (p, monomial) -> (cap computed up to, total-operation term dict)
_TOTAL_CACHE: dict[tuple[int, Monomial], tuple[int, dict[Monomial, int]]] = {}


def _total_power_of_monomial(p: Prime, mono: Monomial, cap: int) -> dict[Monomial, int]:
    """Total operation on an even monomial, truncated at weight cap."""
    key = (p.value, mono)
    cached = _TOTAL_CACHE.get(key)
    if cached is not None and cached[0] >= cap:
        return {m: c for m, c in cached[1].items() if _mono_weight(m) <= cap}
    total: dict[Monomial, int] = {UNIT_MONOMIAL: 1}
    for name, exp in mono.even:
        j = _parse_chern_index(name)
        gen_total = _generator_total(p, j, cap)
        for _ in range(exp):
            total = _mul_truncated(total, gen_total, cap, p.value)
    _TOTAL_CACHE[key] = (cap, total)
    return total


def apply_P_polynomial(i: int, x: Element, p: Prime,
                       roots: int | None = None) -> Element:
    """P^i on a polynomial in Chern classes c_1, c_2, ...

    The result is the weight-(w + i(p-1)) part of the total operation,
    computed per homogeneous component, and stable: it does not depend on
    the number of roots as long as that number is at least the target
    weight.  An explicit smaller `roots` is rejected as unfaithful.
    """
    if i < 0:
        raise ValueError("operation index must be nonnegative")
    if x.algebra.modulus != p:
        raise ValueError("modulus mismatch")
    for mono in x.terms:
        if mono.odd:
            raise ValueError("element involves odd generators; use the primitive action")

    shift = i * (p.value - 1)
    by_weight: dict[int, dict[Monomial, int]] = {}
    for mono, coeff in x.terms.items():
        by_weight.setdefault(_mono_weight(mono), {})[mono] = coeff

    max_target = max((w + shift for w in by_weight), default=0)
    if roots is not None and by_weight and roots < max_target:
        raise ValueError(f"{roots} roots are too few for faithful rewriting; "
                         f"need at least {max_target}")

    ambient = polynomial_algebra(p, max(max_target, 1))
    result: dict[Monomial, int] = {}
    for w, terms in by_weight.items():
        target = w + shift
        for mono, coeff in terms.items():
            total = _total_power_of_monomial(p, mono, target)
            for m, c in total.items():
                if _mono_weight(m) == target:
                    result[m] = (result.get(m, 0) + coeff * c) % p.value
    return ambient.from_terms(result)


def decomposable_quotient(x: Element) -> Element:
    """Image in the quotient by products of positive-degree classes:
    only single-generator, exponent-one monomials survive."""
    keep = {m: c for m, c in x.terms.items()
            if not m.odd and len(m.even) == 1 and m.even[0][1] == 1}
    return x.algebra.from_terms(keep)


# ---------------------------------------------------------------------------
# axiom verification harness
# ---------------------------------------------------------------------------

AXIOMS = ("unit", "pth_power", "instability", "cartan", "adem")


@dataclass(slots=True)
class AxiomCheck:
    description: str
    lhs: str
    rhs: str
    passed: bool


@dataclass(slots=True)
class AxiomReport:
    axiom: str
    p: int
    degree_bound: int
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def record(self, description: str, lhs: Element, rhs: Element):
        self.checks.append(AxiomCheck(description, lhs.render(), rhs.render(),
                                      lhs == rhs))

    def summary(self) -> str:
        status = "ok" if self.passed else "FAILED"
        return (f"axiom={self.axiom} p={self.p} bound={self.degree_bound} "
                f"identities={len(self.checks)} failures={len(self.failures())} {status}")

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "p": self.p,
            "degree_bound": self.degree_bound,
            "identities_checked": len(self.checks),
            "failures": [
                {"identity": c.description, "lhs": c.lhs, "rhs": c.rhs}
                for c in self.failures()
            ],
            "passed": self.passed,
        }


def _embed(x: Element, ambient: AlgebraPresentation) -> Element:
    return ambient.from_terms(dict(x.terms))


def _sum_in_ambient(parts: list[Element], p: Prime) -> Element:
    size = 1
    for part in parts:
        for mono in part.terms:
            for name, _ in mono.even:
                size = max(size, _parse_chern_index(name))
    ambient = polynomial_algebra(p, size)
    out = ambient.zero()
    for part in parts:
        out = out + _embed(part, ambient)
    return out


def _test_classes(p: Prime, degree_bound: int, n_generators: int,
                  seed: int) -> list[tuple[str, Element]]:
    """Deterministic pool: every generator, plus a few random products and
    random homogeneous sums per weight."""
    rng = random.Random(seed)
    alg = polynomial_algebra(p, n_generators)
    pool: list[tuple[str, Element]] = []
    for j in range(1, n_generators + 1):
        if j <= degree_bound:
            pool.append((f"c{j}", alg.gen(f"c{j}")))
    max_w = min(degree_bound, 8)
    for w in range(2, max_w + 1):
        for _ in range(2):
            mono: dict[str, int] = {}
            left = w
            while left > 0:
                j = rng.randint(1, min(left, n_generators))
                name = f"c{j}"
                mono[name] = mono.get(name, 0) + 1
                left -= j
            coeff = rng.randint(1, p.value - 1)
            x = alg.monomial_element(mono, coeff=coeff)
            pool.append((x.render(), x))
        parts = [x for _, x in pool
                 if not x.is_zero() and bidegree_of(x).weight == w]
        if len(parts) >= 2:
            s = parts[0] + parts[1]
            if not s.is_zero():
                pool.append((s.render(), s))
    return pool


def verify_axiom(axiom: str, p: Prime, degree_bound: int,
                 n_generators: int = 5, seed: int = 7) -> AxiomReport:
    """Exhaustively check one defining property on a deterministic pool of
    test classes, keeping every evaluation within the weight bound."""
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}; expected one of {AXIOMS}")
    report = AxiomReport(axiom, p.value, degree_bound)
    pool = _test_classes(p, degree_bound, n_generators, seed)
    pv = p.value

    if axiom == "unit":
        for name, x in pool:
            report.record(f"P^0({name}) = {name}", apply_P_polynomial(0, x, p), x)

    elif axiom == "pth_power":
        for name, x in pool:
            w = bidegree_of(x).weight
            if w * pv <= degree_bound:
                report.record(f"P^{w}({name}) = ({name})^{pv}",
                              apply_P_polynomial(w, x, p), x ** pv)

    elif axiom == "instability":
        for name, x in pool:
            w = bidegree_of(x).weight
            n = w + 1
            while w + n * (pv - 1) <= degree_bound:
                report.record(f"P^{n}({name}) = 0 (weight {w} < {n})",
                              apply_P_polynomial(n, x, p), x.algebra.zero())
                n += 1

    elif axiom == "cartan":
        rng = random.Random(seed + 1)
        pairs = []
        for _ in range(12):
            name_x, x = rng.choice(pool)
            name_y, y = rng.choice(pool)
            pairs.append((name_x, x, name_y, y))
        for name_x, x, name_y, y in pairs:
            xy = x * y
            if xy.is_zero():
                continue
            w = bidegree_of(xy).weight
            n = 0
            while w + n * (pv - 1) <= degree_bound:
                lhs = apply_P_polynomial(n, xy, p)
                ambient = polynomial_algebra(p, max(w + n * (pv - 1), 1))
                parts = []
                for j in range(n + 1):
                    px = _embed(apply_P_polynomial(j, x, p), ambient)
                    py = _embed(apply_P_polynomial(n - j, y, p), ambient)
                    parts.append(px * py)
                rhs = _sum_in_ambient(parts, p)
                report.record(f"P^{n}(({name_x})*({name_y})) = sum of products",
                              lhs, rhs)
                n += 1

    elif axiom == "adem":
        for name, x in pool:
            w = bidegree_of(x).weight
            for b in range(1, degree_bound + 1):
                for a in range(0, pv * b):
                    if w + (a + b) * (pv - 1) > degree_bound:
                        continue
                    lhs = apply_P_polynomial(a, apply_P_polynomial(b, x, p), p)
                    parts = []
                    for t in range(a // pv + 1):
                        c = binom_mod_p((pv - 1) * (b - t) - 1, a - pv * t, p)
                        sign = -1 if (a + t) % 2 else 1
                        coeff = (sign * c.residue) % pv
                        if not coeff:
                            continue
                        inner = apply_P_polynomial(t, x, p)
                        parts.append(apply_P_polynomial(a + b - t, inner, p) * coeff)
                    rhs = _sum_in_ambient(parts, p) if parts else lhs.algebra.zero()
                    report.record(f"P^{a}P^{b}({name}) = Adem sum", lhs, rhs)
    return report
