"""Slotted collision channel without feedback.

Each user owns a codeword, turned into a periodic binary protocol
sequence with ones at the codeword support. A transmission in a slot
succeeds iff no other active user transmits in the same slot. Disjoint
difference sets make any two sequences collide in at most one slot per
period regardless of relative delay, so each of up to w active users
keeps at least one clean slot per period.

Sequences are stored as L-bit integers; slot t is bit t.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .codes import Code, EquiDiffCodeword, code_from_json, support, verify_cac
from .errors import BudgetExceeded, DuplicateAssignment, NotACac

EXHAUSTIVE_BUDGET = 5_000_000


@dataclass(frozen=True)
class ProtocolSequence:
    length: int
    mask: int
    weight: int

    def __str__(self) -> str:
        return "".join("1" if self.mask >> t & 1 else "0" for t in range(self.length))

    def as_bits(self) -> tuple[int, ...]:
        return tuple(self.mask >> t & 1 for t in range(self.length))


def to_protocol_sequence(cw: EquiDiffCodeword) -> ProtocolSequence:
    mask = 0
    for t in support(cw):
        mask |= 1 << t
    return ProtocolSequence(cw.length, mask, cw.weight)


def _rot(mask: int, d: int, L: int, full: int) -> int:
    # new[t] = old[(t + d) mod L]
    d %= L
    if d == 0:
        return mask
    return ((mask >> d) | (mask << (L - d))) & full


def cross_correlation(a: ProtocolSequence, b: ProtocolSequence, tau: int) -> int:
    """Number of slots t with a[t] = 1 and b[(t + tau) mod L] = 1."""
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} vs {b.length}")
    full = (1 << a.length) - 1
    return (a.mask & _rot(b.mask, tau, a.length, full)).bit_count()


@dataclass(frozen=True)
class Scenario:
    code: Code
    active: tuple[tuple[int, int], ...] = ()
    seed: int = 0
    trials: int = 0


@dataclass(frozen=True)
class SimReport:
    per_user: dict[int, int]
    violations: tuple[dict, ...]
    runs: int
    seed: int

    def to_json(self) -> dict:
        return {
            "per_user": {str(k): v for k, v in sorted(self.per_user.items())},
            "violations": list(self.violations),
            "runs": self.runs,
            "seed": self.seed,
        }


def scenario_from_json(obj: dict) -> Scenario:
    return Scenario(
        code=code_from_json(obj["code"]),
        active=tuple((int(e["idx"]), int(e["delay"])) for e in obj.get("active", [])),
        seed=int(obj.get("seed", 0)),
        trials=int(obj.get("trials", 0)),
    )


def _run_once(on_air: list[int], full: int) -> list[int]:
    # success slots of user i: own ones minus every other user's ones
    k = len(on_air)
    pre = [0] * (k + 1)
    suf = [0] * (k + 1)
    for i in range(k):
        pre[i + 1] = pre[i] | on_air[i]
    for i in range(k - 1, -1, -1):
        suf[i] = suf[i + 1] | on_air[i]
    return [(on_air[i] & ~(pre[i] | suf[i + 1]) & full).bit_count() for i in range(k)]


def simulate(sc: Scenario) -> SimReport:
    """Run the scenario's explicit active set, or seeded random trials.

    Explicit mode: one period with the given (codeword index, delay)
    pairs. Sampling mode (empty active, trials > 0): per trial, an rng
    derived from (seed, trial) picks 1..min(w, |code|) distinct users and
    uniform delays. per_user aggregates success-slot counts by codeword
    index; a violation records any run that left some user at zero.
    """
    code = sc.code
    report = verify_cac(code)
    if not report.ok:
        raise NotACac(
            f"difference {report.witness} shared by codewords {report.pair}", report
        )
    L = code.length
    full = (1 << L) - 1
    masks = [to_protocol_sequence(cw).mask for cw in code.codewords]

    if sc.active:
        idxs = [i for i, _ in sc.active]
        if len(set(idxs)) != len(idxs):
            raise DuplicateAssignment(f"codeword indices repeat in {idxs}")
        for i in idxs:
            if not 0 <= i < len(code):
                raise ValueError(f"codeword index {i} out of range")
        on_air = [_rot(masks[i], -d, L, full) for i, d in sc.active]
        counts = _run_once(on_air, full)
        per_user = {i: c for (i, _), c in zip(sc.active, counts)}
        violations = []
        if 0 in counts:
            violations.append({"active": [[i, d % L] for i, d in sc.active]})
        return SimReport(per_user, tuple(violations), 1, sc.seed)

    n = len(code)
    per_user = {i: 0 for i in range(n)}
    violations = []
    for t in range(sc.trials):
        rng = random.Random(f"{sc.seed}:{t}")
        k = rng.randint(1, min(code.weight, n))
        chosen = rng.sample(range(n), k)
        active = [(i, rng.randrange(L)) for i in chosen]
        on_air = [_rot(masks[i], -d, L, full) for i, d in active]
        counts = _run_once(on_air, full)
        for (i, _), c in zip(active, counts):
            per_user[i] += c
        if 0 in counts:
            violations.append({"trial": t, "active": [[i, d] for i, d in active]})
    return SimReport(per_user, tuple(violations), sc.trials, sc.seed)


def verify_irrepressibility_exhaustive(
    code: Code, k: int, budget: int = EXHAUSTIVE_BUDGET
) -> bool:
    """True iff every k-subset of users with every delay tuple leaves
    every active user at least one success slot per period.

    The first user's delay is pinned to 0 (cyclic symmetry), so the
    enumeration size is C(|code|, k) * L^(k-1); anything above budget
    raises BudgetExceeded. No CAC precondition: the point is to observe
    guarantee failures on corrupted codes too.
    """
    if not 1 <= k <= code.weight:
        raise ValueError(f"k must be in 1..w = {code.weight}, got {k}")
    n = len(code)
    L = code.length
    total = comb(n, k) * L ** (k - 1)
    if total > budget:
        raise BudgetExceeded(f"{total} combinations exceed budget {budget}")
    full = (1 << L) - 1
    masks = [to_protocol_sequence(cw).mask for cw in code.codewords]
    rot = [[_rot(m, -d, L, full) for d in range(L)] for m in masks]

    if k == 1:
        return all(m != 0 for m in masks)

    if k == 3:
        # hot path: hoist the pairwise terms of users a and b
        for a, b, c in combinations(range(n), 3):
            ma = masks[a]
            rb_all = rot[b]
            rc_all = rot[c]
            for rb in rb_all:
                a_clear_b = ma & ~rb
                b_clear_a = rb & ~ma
                ab = ma | rb
                for rc in rc_all:
                    if not a_clear_b & ~rc:
                        return False
                    if not b_clear_a & ~rc:
                        return False
                    if not rc & ~ab:
                        return False
        return True

    for combo in combinations(range(n), k):
        first = masks[combo[0]]
        tables = [rot[c] for c in combo[1:]]
        for delays in product(range(L), repeat=k - 1):
            on_air = [first] + [tables[i][d] for i, d in enumerate(delays)]
            if 0 in _run_once(on_air, full):
                return False
    return True
