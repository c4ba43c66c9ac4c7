"""Ramification and genus of Kummer extensions ``F(z)``, ``z**n = u``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

from ..field import support


def kummer_ramification(n: int, v: int) -> Tuple[int, int]:
    """``(r, e)`` with ``r = gcd(n, v)`` and ramification index ``e = n / r``."""
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    r = math.gcd(n, v)
    return r, n // r


@dataclass(frozen=True)
class KummerEntry:
    valuation: int
    place_degree: int
    r: int
    e: int


@dataclass(frozen=True)
class KummerData:
    degree: int
    entries: Tuple[KummerEntry, ...]
    base_genus: int = 0

    def __post_init__(self):
        if self.degree < 1 or self.base_genus < 0:
            raise ValueError("need extension degree >= 1 and base genus >= 0")
        for entry in self.entries:
            if (entry.r, entry.e) != kummer_ramification(self.degree, entry.valuation):
                raise ValueError(f"inconsistent ramification entry {entry}")

    @classmethod
    def from_valuations(
        cls, degree: int, places: Iterable[Tuple[int, int]], base_genus: int = 0
    ) -> "KummerData":
        """Build from ``(nu_P(u), deg P)`` pairs."""
        entries = []
        for v, deg_p in places:
            r, e = kummer_ramification(degree, v)
            entries.append(KummerEntry(v, deg_p, r, e))
        return cls(degree, tuple(entries), base_genus)

    @classmethod
    def from_function(cls, u, degree: int) -> "KummerData":
        """Kummer data of ``Q(x)(u**(1/degree))`` (genus 0 base), from the support of ``u``."""
        places = support(u)
        g = degree
        for v in places.values():
            g = math.gcd(g, v)
        if g != 1:
            raise ValueError(f"u is a {g}-th power over C; the extension is not Kummer of degree {degree}")
        return cls.from_valuations(degree, [(v, P.degree) for P, v in places.items()])


def kummer_genus(data: KummerData) -> int:
    """``g' = 1 + n(g - 1) + (1/2) sum_P (n - r_P) deg P``."""
    n = data.degree
    s = sum((n - e.r) * e.place_degree for e in data.entries)
    if s % 2:
        raise ValueError("inconsistent ramification data: odd ramification sum")
    return 1 + n * (data.base_genus - 1) + s // 2
