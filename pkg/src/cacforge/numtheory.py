"""Elementary number theory: primality, factorization, orders, subgroups.

Everything here is exact and deterministic. Magnitudes are desk scale
(64-bit); Miller-Rabin with the fixed witness set below is deterministic
well past that range.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotASubgroupOf, NotAUnit, NotPrime

# deterministic for all n < 3.3 * 10^24, far beyond 64-bit
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization n = prod(p^e), primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1 or not is_prime(p):
                raise ValueError("malformed factorization")
            prev = p
            prod *= p ** e
        if prod != self.n:
            raise ValueError("factors do not multiply back to n")

    @property
    def distinct_prime_count(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def factorize(n: int) -> Factorization:
    """Trial division; adequate at the magnitudes this package targets."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    m = n
    out = []
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            out.append((p, e))
    # remaining factors are of the form 6k +- 1
    d = 5
    while d * d <= m:
        if is_prime(m):
            break
        for q in (d, d + 2):
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            if e:
                out.append((q, e))
        d += 6
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    out = [1]
    for p, e in factorize(n).factors:
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def totient(n: int) -> int:
    t = n
    for p, _ in factorize(n).factors:
        t -= t // p
    return t


def multiplicative_order(a: int, L: int) -> int:
    """Least k >= 1 with a^k = 1 mod L."""
    if L < 2:
        raise ValueError("modulus must be >= 2")
    a %= L
    if gcd(a, L) != 1:
        raise NotAUnit(f"{a} is not a unit mod {L}")
    k = totient(L)
    # strip each prime from the exponent while the power stays 1
    for p, _ in factorize(k).factors:
        while k % p == 0 and pow(a, k // p, L) == 1:
            k //= p
    return k


def primitive_root(p: int) -> int:
    """Smallest primitive root of the prime p (1 for p = 2)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        return 1
    qs = factorize(p - 1).primes
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


@dataclass(frozen=True)
class CyclicSubgroup:
    """The subgroup of Z_L^x generated by a single unit."""

    modulus: int
    generator: int
    elements: frozenset[int]
    order: int

    def __post_init__(self):
        if len(self.elements) != self.order or 1 not in self.elements:
            raise ValueError("inconsistent subgroup")


def cyclic_subgroup(a: int, L: int) -> CyclicSubgroup:
    if L < 2:
        raise ValueError("modulus must be >= 2")
    a %= L
    if gcd(a, L) != 1:
        raise NotAUnit(f"{a} is not a unit mod {L}")
    elems = [1]
    x = a
    while x != 1:
        elems.append(x)
        x = x * a % L
    return CyclicSubgroup(L, a, frozenset(elems), len(elems))


def unit_group(L: int) -> frozenset[int]:
    return frozenset(a for a in range(1, L) if gcd(a, L) == 1)


def cosets(H: CyclicSubgroup, G_elements: frozenset[int]) -> list[frozenset[int]]:
    """Partition G into multiplicative cosets of H, ordered by smallest member.

    G must be closed under multiplication mod L and contain H; anything
    else raises NotASubgroupOf.
    """
    L = H.modulus
    if not H.elements <= G_elements:
        raise NotASubgroupOf("H is not contained in G")
    remaining = set(G_elements)
    out = []
    while remaining:
        x = min(remaining)
        coset = frozenset(x * h % L for h in H.elements)
        if not coset <= remaining or len(coset) != H.order:
            raise NotASubgroupOf("G is not a disjoint union of H-cosets")
        remaining -= coset
        out.append(coset)
    return out


def is_sdr(reps, coset_partition) -> bool:
    """True iff reps hit each coset exactly once (counting multiplicity)."""
    if len(reps) != len(coset_partition):
        return False
    counts = [0] * len(coset_partition)
    for r in reps:
        for i, c in enumerate(coset_partition):
            if r in c:
                counts[i] += 1
                break
        else:
            return False
    return all(c == 1 for c in counts)
