"""Exact prime-field combinatorics: Lucas binomials, the exponents n(p, q)
and the combined divisibility moduli N_q built from them."""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (inputs here are tiny)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(bound: int) -> list[int]:
    """All primes p <= bound, ascending."""
    return [n for n in range(2, bound + 1) if is_prime(n)]


@dataclass(frozen=True, slots=True)
class Prime:
    """A verified prime, used as the coefficient-field characteristic."""

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or not is_prime(self.value):
            raise ValueError(f"{self.value!r} is not prime")

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, slots=True)
class Fp:
    """A fully reduced residue modulo a prime."""

    residue: int
    modulus: Prime

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.modulus.value)

    @property
    def p(self) -> int:
        return self.modulus.value

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.modulus)
        return NotImplemented

    def __add__(self, other) -> "Fp":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other) -> "Fp":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.residue - other.residue, self.modulus)

    def __rsub__(self, other) -> "Fp":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(other.residue - self.residue, self.modulus)

    def __mul__(self, other) -> "Fp":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.residue * other.residue, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Fp":
        return Fp(-self.residue, self.modulus)

    def inverse(self) -> "Fp":
        if self.residue == 0:
            raise ZeroDivisionError("0 has no inverse")
        return Fp(pow(self.residue, self.p - 2, self.p), self.modulus)

    def __bool__(self) -> bool:
        return self.residue != 0

    def __int__(self) -> int:
        return self.residue

    def __index__(self) -> int:
        return self.residue

    def __str__(self) -> str:
        return str(self.residue)


def binom_mod_p(n: int, k: int, p: Prime) -> Fp:
    """C(n, k) mod p, computed digit by digit in base p (Lucas).

    Returns 0 whenever k > n; C(n, 0) = 1 for every n >= 0.
    """
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    pv = p.value
    acc = 1
    while k > 0 or n > 0:
        nd, kd = n % pv, k % pv
        if kd > nd:
            return Fp(0, p)
        num = den = 1
        for t in range(kd):
            num = num * (nd - t) % pv
            den = den * (t + 1) % pv
        acc = acc * num * pow(den, pv - 2, pv) % pv
        n //= pv
        k //= pv
    return Fp(acc, p)


def exponent_n(p: Prime, q: int) -> int:
    """Largest h >= 0 with p^h (p-1) <= q-1, or -1 when no such h exists.

    The -1 floor makes the q = 1 value consistent with the identity map
    admitting a section (the combined modulus for q = 1 must be 1).
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    pv = p.value
    if pv - 1 > q - 1:
        return -1
    h = 0
    while pv ** (h + 1) * (pv - 1) <= q - 1:
        h += 1
    return h


def raynaud_number(q: int, excluded_char: int = 0) -> int:
    """Product over primes p <= q with p != excluded_char of p^(1 + n(p, q)).

    excluded_char = 0 excludes nothing: the product runs over all primes,
    giving the modulus valid in every characteristic at once.  Primes
    p > q have exponent -1 and contribute a factor of 1, so the product
    is finite.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if excluded_char != 0 and not is_prime(excluded_char):
        raise ValueError("excluded_char must be 0 or a prime")
    out = 1
    for pv in primes_upto(q):
        if pv == excluded_char:
            continue
        out *= pv ** (1 + exponent_n(Prime(pv), q))
    return out
