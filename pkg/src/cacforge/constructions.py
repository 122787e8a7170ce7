"""Constructions of optimal equi-difference conflict-avoiding codes.

Three families, each returning a fully verified Certificate:

  * prime length p = 2(w-1)ms + 1 with a subgroup SDR condition
    (construct_theorem1; construct_lemma1 is the s = 1 case),
  * recursive products of two certified prime-length codes
    (construct_theorem2),
  * two-prime lengths L = pq with w <= p <= 2w-2 and q = 2(w-1)f + 1,
    assembled from cyclic subgroup witnesses (construct_two_prime).

Every stated precondition is machine checked; a failed condition raises
a typed error carrying the offending object instead of emitting an
unverified code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import new_bound
from .codes import Certificate, CertFlags, Code, is_tight, verify_cac
from .errors import (
    ConditionNotSatisfied,
    InputNotOptimal,
    InputNotTight,
    LengthsNotCoprimePrimes,
    NotACac,
    NotPrime,
    NotPrimitive,
    ParamMismatch,
    SdrConditionFailed,
)
from .numtheory import (
    cosets,
    cyclic_subgroup,
    divisors,
    is_prime,
    is_sdr,
    multiplicative_order,
    primitive_root,
    unit_group,
    CyclicSubgroup,
)


@dataclass(frozen=True)
class Theorem1Params:
    p: int
    w: int
    m: int
    s: int
    alpha: int | None = None


@dataclass(frozen=True)
class ConditionWitness:
    """A cyclic subgroup H whose cosets admit the required SDR.

    kind 1: -1 in H, |H| = |Z_L^x| / (w-1), representatives 1..w-1.
    kind 2: -1 not in H, |H| = |Z_L^x| / (2(w-1)), representatives
    1, L-1, 2, L-2, ..., w-1, L-(w-1).
    """

    kind: int
    H: CyclicSubgroup
    reps: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "generator": self.H.generator, "order": self.H.order}


def _resolve_alpha(p: int, alpha: int | None) -> int:
    if alpha is None:
        return primitive_root(p)
    if multiplicative_order(alpha, p) != p - 1:
        raise NotPrimitive(f"{alpha} does not generate Z_{p}^x")
    return alpha


def _sdr_offender(reps, partition):
    counts = [0] * len(partition)
    for r in reps:
        for i, c in enumerate(partition):
            if r in c:
                counts[i] += 1
                break
    for i, n in enumerate(counts):
        if n != 1:
            return partition[i]
    return None


def _certificate(code: Code, params: dict) -> Certificate:
    report = verify_cac(code)
    if not report.ok:
        raise NotACac(
            f"construction bug: difference {report.witness} shared by "
            f"codewords {report.pair}",
            report,
        )
    br = new_bound(code.length, code.weight)
    flags = CertFlags(
        verified_cac=True,
        tight=is_tight(code),
        optimal_by_bound=len(code) == br.floor_value,
    )
    return Certificate(code, br, flags, params)


def construct_lemma1(p: int, w: int, alpha: int | None = None) -> Certificate:
    """Prime p = 2(w-1)m + 1; codewords generated by the powers of alpha^(w-1).

    Requires 1..w-1 to be an SDR of the cosets of <alpha^(w-1)> in Z_p^x.
    """
    if w < 2:
        raise ParamMismatch(f"need w >= 2, got {w}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if (p - 1) % (2 * w - 2):
        raise ParamMismatch(f"p = {p} is not of the form 2(w-1)m + 1 for w = {w}")
    m = (p - 1) // (2 * w - 2)
    alpha = _resolve_alpha(p, alpha)
    g = pow(alpha, w - 1, p)
    N = cyclic_subgroup(g, p)  # order 2m
    part = cosets(N, unit_group(p))
    reps = tuple(range(1, w))
    if not is_sdr(reps, part):
        raise SdrConditionFailed(
            f"1..{w - 1} is not an SDR of the cosets of <{g}> in Z_{p}^x",
            coset=_sdr_offender(reps, part),
        )
    gens = [pow(g, j, p) for j in range(m)]
    code = Code.from_generators(p, w, gens)
    return _certificate(
        code, {"method": "lemma1", "p": p, "w": w, "m": m, "alpha": alpha}
    )


def construct_theorem1(params: Theorem1Params) -> Certificate:
    """Prime p = 2(w-1)ms + 1; sm codewords generated by alpha^(i + s(w-1)j).

    H = <alpha^s> has order 2m(w-1) and N1 = <alpha^(s(w-1))> has order 2m
    automatically; the only substantive condition is that 1..w-1 is an SDR
    of N1's cosets inside H.
    """
    p, w, m, s = params.p, params.w, params.m, params.s
    if w < 2 or m < 1 or s < 1:
        raise ParamMismatch(f"need w >= 2, m >= 1, s >= 1, got {(w, m, s)}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p != 2 * (w - 1) * m * s + 1:
        raise ParamMismatch(f"p = {p} but 2(w-1)ms + 1 = {2 * (w - 1) * m * s + 1}")
    alpha = _resolve_alpha(p, params.alpha)
    H = cyclic_subgroup(pow(alpha, s, p), p)
    N1 = cyclic_subgroup(pow(alpha, s * (w - 1), p), p)
    assert H.order == 2 * m * (w - 1) and N1.order == 2 * m
    part = cosets(N1, H.elements)
    reps = tuple(range(1, w))
    if not is_sdr(reps, part):
        raise SdrConditionFailed(
            f"1..{w - 1} is not an SDR of the cosets of N1 in H for p = {p}",
            coset=_sdr_offender(reps, part),
        )
    step = s * (w - 1)
    gens = [pow(alpha, i + step * j, p) for i in range(s) for j in range(m)]
    code = Code.from_generators(p, w, gens)
    return _certificate(
        code,
        {"method": "theorem1", "p": p, "w": w, "m": m, "s": s, "alpha": alpha},
    )


def find_theorem1_params(p: int, w: int) -> list[tuple[int, int, int]]:
    """All (m, s, alpha) with ms = (p-1)/(2w-2) passing the SDR condition.

    alpha is always the smallest primitive root; s runs over divisors
    ascending. Empty list when p is not prime, 2w-2 does not divide p-1,
    or no factorization qualifies.
    """
    if w < 2 or not is_prime(p) or (p - 1) % (2 * w - 2):
        return []
    total = (p - 1) // (2 * w - 2)
    alpha = primitive_root(p)
    out = []
    for s in divisors(total):
        m = total // s
        try:
            construct_theorem1(Theorem1Params(p, w, m, s, alpha))
        except SdrConditionFailed:
            continue
        out.append((m, s, alpha))
    return out


def construct_theorem2(cert1: Certificate, cert2: Certificate) -> Certificate:
    """Compose optimal tight prime-length codes into one of length p1*p2.

    Codewords: g + i*p1 for every generator g of the first code and
    0 <= i < p2, plus b*p1 for every generator b of the second code.
    """
    code1, code2 = cert1.code, cert2.code
    w = code1.weight
    if code2.weight != w:
        raise ParamMismatch(f"weights differ: {w} vs {code2.weight}")
    p1, p2 = code1.length, code2.length
    if not (is_prime(p1) and is_prime(p2)) or p1 == p2 or min(p1, p2) <= w - 1:
        raise LengthsNotCoprimePrimes(
            f"lengths must be distinct primes greater than w-1, got {p1}, {p2}"
        )
    for code, p in ((code1, p1), (code2, p2)):
        if not verify_cac(code).ok or not is_tight(code):
            raise InputNotTight(f"input of length {p} is not a tight CAC")
        if len(code) != (p - 1) // (2 * w - 2) or len(code) != new_bound(p, w).floor_value:
            raise InputNotOptimal(
                f"input of length {p} has {len(code)} codewords, "
                f"optimal is {new_bound(p, w).floor_value}"
            )
    L = p1 * p2
    gens = [(g + i * p1) % L for g in code1.generators for i in range(p2)]
    gens += [b * p1 for b in code2.generators]
    code = Code.from_generators(L, w, gens)
    cert = _certificate(code, {"method": "theorem2", "p1": p1, "p2": p2, "w": w})
    assert cert.flags.tight and cert.flags.optimal_by_bound
    return cert


def check_condition(L: int, w: int, kind: int) -> ConditionWitness | None:
    """Search Z_L^x for a cyclic subgroup satisfying condition `kind`.

    Deterministic: candidate generators ascending, first witness wins.
    Returns None when no cyclic witness exists. Only cyclic subgroups are
    searched; a qualifying non-cyclic subgroup would not yield the
    generator enumeration the constructions need.
    """
    if kind not in (1, 2):
        raise ValueError(f"kind must be 1 or 2, got {kind}")
    if w < 2 or L < 2:
        raise ValueError(f"need L >= 2 and w >= 2, got ({L},{w})")
    units = unit_group(L)
    phi = len(units)
    slots = (w - 1) if kind == 1 else 2 * (w - 1)
    if phi % slots:
        return None
    target = phi // slots
    if kind == 1:
        reps = tuple(range(1, w))
    else:
        reps = tuple(v for j in range(1, w) for v in (j, L - j))
    for a in sorted(units):
        if multiplicative_order(a, L) != target:
            continue
        H = cyclic_subgroup(a, L)
        if ((L - 1) in H.elements) != (kind == 1):
            continue
        if is_sdr(reps, cosets(H, units)):
            return ConditionWitness(kind, H, reps)
    return None


def construct_two_prime(p: int, q: int, w: int) -> Certificate:
    """Optimal tight (pq, w)-code with pf + 1 codewords, q = 2(w-1)f + 1.

    Three parts: generators enumerating a condition witness subgroup of
    Z_pq^x, generators p*b for b enumerating a witness subgroup of Z_q^x,
    and the single exceptional codeword generated by q itself.
    """
    if w < 3:
        raise ParamMismatch(f"need w >= 3, got {w}")
    if not is_prime(p) or not w <= p <= 2 * w - 2:
        raise ParamMismatch(f"p must be a prime in [{w}, {2 * w - 2}], got {p}")
    if not is_prime(q) or (q - 1) % (2 * w - 2) or (q - 1) // (2 * w - 2) < 1:
        raise ParamMismatch(f"q must be a prime of the form 2(w-1)f + 1, got {q}")
    f = (q - 1) // (2 * w - 2)
    L = p * q

    wit_L = check_condition(L, w, 1) or check_condition(L, w, 2)
    if wit_L is None:
        raise ConditionNotSatisfied(
            f"Z_{L}^x admits no qualifying cyclic subgroup", modulus=L
        )
    wit_q = check_condition(q, w, 1) or check_condition(q, w, 2)
    if wit_q is None:
        raise ConditionNotSatisfied(
            f"Z_{q}^x admits no qualifying cyclic subgroup", modulus=q
        )

    # condition 1 halves the enumeration: alpha^s = -1 mirrors the family
    a = wit_L.H.generator
    count_L = wit_L.H.order // 2 if wit_L.kind == 1 else wit_L.H.order
    gens = [pow(a, i, L) for i in range(count_L)]
    b = wit_q.H.generator
    count_q = wit_q.H.order // 2 if wit_q.kind == 1 else wit_q.H.order
    gens += [p * pow(b, j, q) for j in range(count_q)]
    gens.append(q)

    code = Code.from_generators(L, w, gens)
    cert = _certificate(
        code,
        {
            "method": "two_prime",
            "p": p,
            "q": q,
            "w": w,
            "f": f,
            "condition_L": wit_L.to_json(),
            "condition_q": wit_q.to_json(),
        },
    )
    assert len(code) == p * f + 1 == cert.bound.floor_value
    assert cert.flags.tight and cert.flags.optimal_by_bound
    return cert
