"""Upper bounds on the size of equi-difference conflict-avoiding codes.

The main bound charges every codeword 2w-2 differences and refunds the
shortfall of exceptional codewords, whose difference sets plus zero are
additive subgroups of some order p dividing L with w <= p < 2w-1. Two
exceptional codewords can coexist only when their orders are coprime
(otherwise the subgroups intersect beyond zero), which caps the total
refund by a maximum over pairwise-coprime divisor subsets; omega_star is
a closed filter rule for that maximum and coprime_excess_exact the
brute-force audit of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, gcd

from .errors import UnsupportedWeight
from .numtheory import factorize, is_prime


def omega(L: int, w: int) -> tuple[int, ...]:
    """Divisors of L in [w, 2w-1), ascending."""
    if L < 2 or w < 2:
        raise ValueError("need L >= 2 and w >= 2")
    return tuple(d for d in range(w, 2 * w - 1) if L % d == 0)


def omega_star(L: int, w: int) -> tuple[int, ...]:
    """Members of omega that are prime or minimal among their non-coprime peers."""
    om = omega(L, w)
    out = tuple(
        p
        for p in om
        if is_prime(p) or all(p <= q for q in om if q != p and gcd(p, q) != 1)
    )
    for a, b in combinations(out, 2):
        assert gcd(a, b) == 1, f"omega_star not pairwise coprime at ({L},{w})"
    return out


@dataclass(frozen=True)
class BoundReport:
    L: int
    w: int
    omega: tuple[int, ...]
    omega_star: tuple[int, ...]
    excess: int
    raw_numerator: int
    denominator: int
    floor_value: int

    def __post_init__(self):
        assert self.floor_value == self.raw_numerator // self.denominator

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.raw_numerator, self.denominator)

    def to_json(self) -> dict:
        return {
            "L": self.L,
            "w": self.w,
            "omega": list(self.omega),
            "omega_star": list(self.omega_star),
            "excess": self.excess,
            "raw": f"{self.raw_numerator}/{self.denominator}",
            "floor": self.floor_value,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BoundReport":
        num, den = obj["raw"].split("/")
        return cls(
            L=int(obj["L"]),
            w=int(obj["w"]),
            omega=tuple(obj["omega"]),
            omega_star=tuple(obj["omega_star"]),
            excess=int(obj["excess"]),
            raw_numerator=int(num),
            denominator=int(den),
            floor_value=int(obj["floor"]),
        )


def new_bound(L: int, w: int) -> BoundReport:
    """M^e(L,w) <= (L - 1 + excess) / (2w - 2), reported unreduced with floor."""
    om = omega(L, w)
    oms = omega_star(L, w)
    excess = sum(2 * w - 1 - p for p in oms)
    num = L - 1 + excess
    den = 2 * w - 2
    return BoundReport(L, w, om, oms, excess, num, den, num // den)


def corollary1_bound(L: int, w: int) -> int:
    if w == 3:
        return (L + 2) // 4
    if w == 4:
        return (L + 4) // 6
    if w == 5:
        return (L + 8) // 8
    if w == 6:
        return (L + 8) // 10
    raise UnsupportedWeight(f"closed form only for w in 3..6, got {w}")


def prime_divisor_bound(L: int, w: int) -> tuple[Fraction, int]:
    """(L-1)/(2w-2) + (number of distinct prime divisors of L)/2, with floor."""
    if L < 2 or w < 2:
        raise ValueError("need L >= 2 and w >= 2")
    value = Fraction(L - 1, 2 * w - 2) + Fraction(factorize(L).distinct_prime_count, 2)
    return value, value.numerator // value.denominator


def _subset_pool(L: int, w: int) -> list[int]:
    # x qualifies when x | L and the subgroup <L/x> wastes few enough differences
    return [
        x
        for x in range(2, 2 * w - 1)
        if L % x == 0 and 2 * x * ceil(w / x) - x <= 2 * w - 2
    ]


def subset_excess_bound(L: int, w: int) -> tuple[Fraction, int, tuple[int, ...]]:
    """floor((L-1+F)/(2w-2)) where F maximizes the subgroup refund term.

    F is taken over pairwise-coprime subsets of the candidate pool; the
    pool has fewer than 2w-2 members so enumeration is exact. Returns the
    raw rational, its floor and a maximizing subset.
    """
    if L < w or w < 2:
        raise ValueError("need L >= w >= 2")
    pool = _subset_pool(L, w)
    best, best_set = 0, ()
    for r in range(1, len(pool) + 1):
        for sub in combinations(pool, r):
            if all(gcd(a, b) == 1 for a, b in combinations(sub, 2)):
                val = sum(x - 1 - 2 * x * ceil(w / x) + 2 * w for x in sub)
                if val > best:
                    best, best_set = val, sub
    value = Fraction(L - 1 + best, 2 * w - 2)
    return value, value.numerator // value.denominator, best_set


def coprime_excess_exact(L: int, w: int) -> int:
    """Max of sum(2w-1-p) over pairwise-coprime subsets of omega(L,w).

    Independent audit of the omega_star filter; the two can disagree (the
    filter may drop a member over a conflict with an element that is
    itself dropped), so callers comparing them must treat this one as the
    ground truth refund.
    """
    om = omega(L, w)
    best = 0
    for r in range(1, len(om) + 1):
        for sub in combinations(om, r):
            if all(gcd(a, b) == 1 for a, b in combinations(sub, 2)):
                best = max(best, sum(2 * w - 1 - p for p in sub))
    return best
