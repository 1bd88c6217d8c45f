"""Seeded random phase points with bounded rational entries.

All randomness in the verification suites flows through one
random.Random(seed), so identical (config, seed) pairs reproduce byte
for byte.  Numerators and denominators stay small (well under the 100
bound) to keep exact arithmetic fast."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Poly
from .mumford import MumfordTriple, _coord_layout, triple_from_values
from .toda import KMPoint, TodaPoint


def rng_from_seed(seed: int) -> random.Random:
    return random.Random(seed)


def rational(rng: random.Random, lo: int = -9, hi: int = 9,
             max_den: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if value != 0 or not nonzero:
            return value


def positive_rational(rng: random.Random, hi: int = 9, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(1, hi), rng.randint(1, max_den))


def toda_point(rng: random.Random, n: int) -> TodaPoint:
    a = [positive_rational(rng) for _ in range(n - 1)]
    prod = Fraction(1)
    for x in a:
        prod *= x
    a.append(1 / prod)
    b = [rational(rng) for _ in range(n)]
    return TodaPoint(tuple(a), tuple(b))


def km_point(rng: random.Random, n: int) -> KMPoint:
    a = [positive_rational(rng) for _ in range(n - 1)]
    prod = Fraction(1)
    for x in a:
        prod *= x
    a.append(1 / prod)
    return KMPoint(tuple(a))


def mumford_triple(rng: random.Random, flavor: str, g: int) -> MumfordTriple:
    u_slots, v_slots, w_slots = _coord_layout(flavor, g)
    count = len(u_slots) + len(v_slots) + len(w_slots)
    return triple_from_values(flavor, g, [rational(rng) for _ in range(count)])


def poly(rng: random.Random, degree: int, monic: bool = False) -> Poly:
    coeffs = [rational(rng) for _ in range(degree + 1)]
    if monic and degree >= 0:
        coeffs[degree] = Fraction(1)
    return Poly(coeffs)
