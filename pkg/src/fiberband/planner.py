"""Sidon-sequence planning of four-wave-mixing-free WDM channel grids.

A channel grid with centers placed by a Sidon sequence keeps every
degenerate and non-degenerate mixing product of two channels away from
every other channel pair's products, which decouples the per-channel
energy flow. This module verifies the combinatorial condition, builds
sequences (exhaustively for small spans, via the finite-field
exponent-set construction for arbitrary prime powers), certifies grids
by direct interval arithmetic, and computes how densely such grids can
pack spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .bands import BandSet, OverlappingIntervals, make_bandset, minkowski_sum
from .gf import FieldGF, NotPrimePower, prime_power


class NotIncreasing(ValueError):
    pass


class BudgetExceeded(ValueError):
    pass


BRUTE_FORCE_BUDGET = 150  # largest span the exhaustive search accepts


@dataclass(frozen=True)
class SidonSequence:
    """Strictly increasing positive values with distinct pairwise sums."""

    values: tuple

    def __post_init__(self):
        vals = tuple(self.values)
        if not vals or any(b <= a for a, b in zip(vals, vals[1:])):
            raise NotIncreasing(f"{vals} is not strictly increasing and nonempty")
        if vals[0] <= 0:
            raise NotIncreasing(f"{vals} contains nonpositive values")
        object.__setattr__(self, "values", vals)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def _as_values(m) -> tuple:
    return tuple(m.values if isinstance(m, SidonSequence) else m)


def _check_increasing(vals: tuple) -> None:
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise NotIncreasing(f"{vals} is not strictly increasing")


def is_sidon(m) -> bool:
    """All pairwise sums m_i + m_j, i <= j, are distinct (integers)."""
    vals = _as_values(m)
    _check_increasing(vals)
    if any(int(v) != v or v < 1 for v in vals):
        raise ValueError("integer Sidon check needs positive integers")
    sums = set()
    for i, a in enumerate(vals):
        for b in vals[i:]:
            if a + b in sums:
                return False
            sums.add(a + b)
    return True


def is_r_sidon(m, min_gap: float = 1.0) -> bool:
    """All pairwise sums (i <= j) differ from each other by >= min_gap."""
    vals = _as_values(m)
    _check_increasing(vals)
    sums = sorted(vals[i] + vals[j] for i in range(len(vals)) for j in range(i, len(vals)))
    return all(b - a >= min_gap for a, b in zip(sums, sums[1:]))


def bose_sequence(n: int, modulus=None, theta=None) -> SidonSequence:
    """Length-n Sidon sequence from the exponent set of GF(n^2).

    n must be a prime power. The sequence is {m : theta^m - theta in
    GF(n)}, sorted; it always starts at 1 and stays below n^2.
    """
    field = FieldGF.for_size(n, modulus=modulus, theta=theta)
    return SidonSequence(tuple(field.exponent_set()))


def next_prime_power(n: int) -> int:
    q = max(n, 2)
    while True:
        try:
            prime_power(q)
            return q
        except NotPrimePower:
            q += 1


def sidon_for_channels(n: int) -> SidonSequence:
    """Length-n Sidon sequence for any n >= 1: next prime power, truncated."""
    if n < 1:
        raise ValueError("need at least one channel")
    if n == 1:
        return SidonSequence((1,))
    full = bose_sequence(next_prime_power(n))
    return SidonSequence(full.values[:n])


def _search_length(k: int, target: int, minspan: tuple = ()) -> tuple | None:
    """Lexicographically first Sidon subset of {1..k} of size `target`.

    Any Sidon set translates to one whose minimum is 1, so the search
    roots at 1 without losing maximal sets. `diffs` is a bitmask of the
    pairwise differences used so far; a candidate is admissible iff all
    its differences to the current set are new and mutually distinct.

    `minspan[m]`, when present, is the exact minimal span of an
    m-element Sidon set; a candidate c with m elements still owed
    (itself included) is viable only if minspan[m] fits in [c, k].
    Without it the counting floor m*(m-1)/2 applies: that many distinct
    positive differences must not exceed the span.
    """
    if target == 1:
        return (1,)

    def span_floor(m: int) -> int:
        if m < len(minspan):
            return minspan[m]
        return m * (m - 1) // 2

    # candidate ceiling per node depth, hoisted out of the search
    ceiling = [k - span_floor(target - d) for d in range(target)]

    def dfs(seq: list[int], diffs: int, last: int) -> tuple | None:
        depth = len(seq)
        if depth == target:
            return tuple(seq)
        for c in range(last + 1, ceiling[depth] + 1):
            new = 0
            for a in seq:
                bit = 1 << (c - a)
                if (diffs | new) & bit:
                    new = -1
                    break
                new |= bit
            if new >= 0:
                hit = dfs(seq + [c], diffs | new, c)
                if hit:
                    return hit
        return None

    return dfs([1], 0, 1)


@lru_cache(maxsize=None)
def max_sidon_table(k_max: int) -> tuple:
    """(N(k), witness) for every k in 1..k_max, by incremental search.

    N(k) grows by at most 1 per k (drop one element of an optimal set),
    so each k only has to decide whether a set one longer than the
    previous optimum fits in {1..k}.
    """
    if k_max > BRUTE_FORCE_BUDGET:
        raise BudgetExceeded(f"k_max {k_max} exceeds budget {BRUTE_FORCE_BUDGET}")
    table = []
    best, witness = 1, (1,)
    minspan = [0, 0]  # minspan[m]: exact minimal span of an m-element set
    for k in range(1, k_max + 1):
        longer = _search_length(k, best + 1, tuple(minspan))
        if longer:
            best, witness = best + 1, longer
            minspan.append(k - 1)
        table.append((best, witness))
    return tuple(table)


def brute_force_max_sidon(k: int) -> tuple[int, tuple]:
    """Exhaustive maximum Sidon-sequence length N(k) within {1..k}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return max_sidon_table(k)[-1]


def densest_sidon(n: int) -> SidonSequence:
    """Shortest-span Sidon sequence of length n, by exhaustive search.

    Starts from the counting floor span: n elements produce n*(n-1)/2
    distinct positive differences, all at most span, so the top element
    is at least n*(n-1)/2 + 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k = n * (n - 1) // 2 + 1
    while k <= BRUTE_FORCE_BUDGET:
        hit = _search_length(k, n)
        if hit:
            return SidonSequence(hit)
        k += 1
    raise BudgetExceeded(f"no length-{n} sequence within span {BRUTE_FORCE_BUDGET}")


def erdos_bound(k: int) -> float:
    """Counting upper bound on N(k) at window length a = ceil(k^(3/4))."""
    a = 1
    while a**4 < k**3:  # integer ceil of k^(3/4), immune to float rounding
        a += 1
    c = 1.0 + k / a
    return 0.5 * c + math.sqrt(0.25 * c * c + (a + 2) * (a - 1) * (k + a) / a**2)


def check_erdos_bound(k: int, n_k: int | None = None) -> bool:
    """True iff the exhaustive N(k) respects the counting bound."""
    if n_k is None:
        n_k, _ = brute_force_max_sidon(k)
    return n_k <= erdos_bound(k)


def _strictly_overlap(a: tuple[float, float], b: tuple[float, float]) -> bool:
    # shared endpoints carry no bandwidth, hence no energy coupling
    return max(a[0], b[0]) < min(a[1], b[1])


def is_energy_decoupled(channels) -> tuple[bool, tuple | None]:
    """Certify that no two distinct channel pairs have colliding sum bands.

    `channels` is a BandSet or a list of (lo, hi) intervals. The check
    enumerates unordered channel pairs {n1, n2} (repetition allowed) and
    tests whether the interval sums W_n1 + W_n2 and W_n + W_n3 of two
    distinct pairs share positive measure. Returns (True, None) or
    (False, ((n1, n2), (n, n3))) with 1-based channel numbers in the
    caller's channel order.
    """
    if isinstance(channels, BandSet):
        intervals = list(channels.intervals)
    else:
        intervals = [(float(lo), float(hi)) for lo, hi in channels]
        for idx, (lo, hi) in enumerate(intervals):
            if not lo < hi:
                raise ValueError(f"channel {idx + 1} has nonpositive width")
        for i in range(len(intervals)):
            for j in range(i + 1, len(intervals)):
                if _strictly_overlap(intervals[i], intervals[j]):
                    raise OverlappingIntervals(
                        f"channels {i + 1} and {j + 1} overlap"
                    )
    n = len(intervals)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    sums = {
        (i, j): (intervals[i][0] + intervals[j][0], intervals[i][1] + intervals[j][1])
        for i, j in pairs
    }
    for idx, p in enumerate(pairs):
        for q in pairs[idx + 1 :]:
            if _strictly_overlap(sums[p], sums[q]):
                return False, ((p[0] + 1, p[1] + 1), (q[0] + 1, q[1] + 1))
    return True, None


@dataclass(frozen=True)
class ChannelPlan:
    """Channel grid [(2m-2)W, (2m-1)W] per sequence element m."""

    seq: SidonSequence
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError("channel width must be positive")
        if self.seq.values[0] < 1:
            raise ValueError("sequence elements must be >= 1")

    @property
    def n(self) -> int:
        return len(self.seq)

    def intervals(self) -> list[tuple[float, float]]:
        w = self.width
        return [((2 * m - 2) * w, (2 * m - 1) * w) for m in self.seq]

    def centers(self) -> list[float]:
        return [(2 * m - 1.5) * self.width for m in self.seq]

    def bandset(self) -> BandSet:
        return make_bandset(self.intervals())


def plan_channels(seq, width: float) -> ChannelPlan:
    """Place channels on the grid induced by a sequence; see ChannelPlan."""
    if not isinstance(seq, SidonSequence):
        seq = SidonSequence(tuple(seq))
    return ChannelPlan(seq, width)


def spectral_filling_efficiency(plan, slot_budget: int | None = None) -> float:
    """Occupied bandwidth over spanned bandwidth.

    For a ChannelPlan the span is taken from frequency 0 to the top of
    the highest channel, (2*max(m) - 1)*W, so a plan starting above
    m = 1 is charged for the unused bottom. With `slot_budget` = k the
    span instead covers the whole grid of admissible slots 1..k,
    i.e. (2k - 1)*W: the efficiency of a plan that was free to use any
    element of {1..k}. A raw BandSet is measured between its own
    extremes and takes no budget.
    """
    if isinstance(plan, ChannelPlan):
        top = max(plan.seq.values)
        if slot_budget is not None:
            if slot_budget < top:
                raise ValueError("slot budget below the plan's top slot")
            top = slot_budget
        return plan.n / (2 * top - 1)
    if slot_budget is not None:
        raise ValueError("slot budget only applies to slot-gridded plans")
    return plan.measure / (plan.hi - plan.lo)


def decoupling_witness_bands(channels, witness) -> tuple[BandSet, BandSet]:
    """Sum bands of a violating quadruple, for reporting."""
    if isinstance(channels, BandSet):
        ivs = list(channels.intervals)
    else:
        ivs = [(float(lo), float(hi)) for lo, hi in channels]
    (n1, n2), (n, n3) = witness
    a = minkowski_sum(BandSet((ivs[n1 - 1],)), BandSet((ivs[n2 - 1],)))
    b = minkowski_sum(BandSet((ivs[n - 1],)), BandSet((ivs[n3 - 1],)))
    return a, b
