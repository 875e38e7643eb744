"""Isomorphism classes of finitely generated abelian groups and coefficient choices.

A group class is either a f.g. abelian group (free rank + elementary divisor
chain) or, when computed over a field, a vector-space dimension tagged with the
field.  Equality of classes decides isomorphism, by the classification theorem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ..errors import UberdhError


@dataclass(frozen=True)
class GroupClass:
    rank: int
    torsion: tuple[int, ...] = ()
    field_tag: str | None = None  # None means Z; otherwise "Q", "F2", "F<p>"

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        if self.field_tag is not None and self.torsion:
            raise ValueError("field vector spaces carry no torsion")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"divisor chain violated: {self.torsion}")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("elementary divisors must exceed 1")

    @property
    def is_zero(self):
        return self.rank == 0 and not self.torsion

    def __str__(self):
        if self.is_zero:
            return "0"
        base = {"Q": "Q", None: "Z"}.get(self.field_tag, self.field_tag)
        parts = []
        if self.rank == 1:
            parts.append(base)
        elif self.rank > 1:
            parts.append(f"{base}^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts)


def _chain_from_primary(primary):
    """Rebuild an elementary divisor chain from a list of prime powers."""
    by_prime = {}
    for q, e in primary:
        by_prime.setdefault(q, []).append(e)
    for exps in by_prime.values():
        exps.sort(reverse=True)
    length = max((len(v) for v in by_prime.values()), default=0)
    chain = []
    for slot in range(length):
        d = 1
        for q, exps in by_prime.items():
            if slot < len(exps):
                d *= q ** exps[slot]
        chain.append(d)
    chain.reverse()
    return tuple(chain)


def _primary_decomposition(d):
    out = []
    n, p = d, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def direct_sum(classes):
    """Canonical class of a direct sum of group classes (same coefficient tag)."""
    classes = list(classes)
    tags = {c.field_tag for c in classes}
    if len(tags) > 1:
        raise UberdhError(f"mixed coefficient tags in direct sum: {tags}")
    tag = tags.pop() if tags else None
    rank = sum(c.rank for c in classes)
    primary = []
    for c in classes:
        for d in c.torsion:
            primary += _primary_decomposition(d)
    return GroupClass(rank, _chain_from_primary(primary), tag)


ZERO_Z = GroupClass(0)


@dataclass(frozen=True)
class Coeffs:
    """Coefficient ring: Z, Q or a prime field F_p."""

    kind: str  # "Z", "Q" or "Fp"
    p: int | None = None

    @property
    def tag(self) -> str | None:
        if self.kind == "Z":
            return None
        if self.kind == "Q":
            return "Q"
        return f"F{self.p}"

    @property
    def is_field(self):
        return self.kind != "Z"

    def __str__(self):
        return {"Z": "z", "Q": "q"}.get(self.kind, f"fp:{self.p}")


Z = Coeffs("Z")
Q = Coeffs("Q")
F2 = Coeffs("Fp", 2)


def _is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def parse_coeffs(text: str) -> Coeffs:
    text = text.strip().lower()
    if text == "z":
        return Z
    if text == "q":
        return Q
    if text == "f2":
        return F2
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise UberdhError(f"not a prime: {text[3:]!r}") from None
        if not _is_prime(p) or p >= 2**31:
            raise UberdhError(f"not a supported prime: {p}")
        return Coeffs("Fp", p)
    raise UberdhError(f"unknown coefficient choice {text!r}")
