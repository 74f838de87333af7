"""Upper and lower bounds for TC_s of an arrangement complement.

The lower bound comes from basic pairs (B, C): a nonvanishing product of
kernel classes of length (s-1)r + |C|.  The largest |C| equals the size of
the largest balanced set minus r, and is r-1 exactly when the arrangement is
large, in which case the bound meets the dimensional upper bound sr-1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .matroid import Arrangement, Flat, LinearOrder


class NotBalanced(ValueError):
    pass


class NoBase(ValueError):
    pass


@dataclass(frozen=True)
class Pair:
    B: frozenset
    C: frozenset
    order: LinearOrder | None = None

    def __post_init__(self):
        object.__setattr__(self, "B", frozenset(self.B))
        object.__setattr__(self, "C", frozenset(self.C))
        if self.B & self.C:
            raise ValueError(f"B and C overlap in {sorted(self.B & self.C)}")

    @property
    def union(self) -> frozenset:
        return self.B | self.C

    def to_dict(self, arr: Arrangement | None = None) -> dict:
        d = {"B": sorted(self.B), "C": sorted(self.C)}
        if arr is not None:
            d["B_labels"] = [arr.labels[i] for i in sorted(self.B)]
            d["C_labels"] = [arr.labels[i] for i in sorted(self.C)]
        if self.order is not None:
            d["order"] = list(self.order.seq)
        return d


@dataclass
class BasicSearch:
    """Outcome of the max |C| search; ``complete`` is False when the budget ran out."""
    size: int
    pair: Pair | None
    complete: bool = True
    calls: int = 0
    method: str = ""


@dataclass
class TCReport:
    s: int
    upper: int
    lower: int
    exact: bool
    large: bool
    witness_pair: Pair | None = None
    witness_flat: Flat | None = None
    generic_closed_form: int | None = None
    lower_bound_only: bool = False
    notes: list = field(default_factory=list)

    def to_dict(self, arr: Arrangement | None = None) -> dict:
        d = {
            "schema": 1,
            "s": self.s,
            "upper": self.upper,
            "lower": self.lower,
            "exact": self.exact,
            "large": self.large,
            "witness_pair": self.witness_pair.to_dict(arr) if self.witness_pair else None,
            "witness_flat": None,
            "generic_closed_form": self.generic_closed_form,
            "lower_bound_only": self.lower_bound_only,
            "notes": list(self.notes),
        }
        if self.witness_flat is not None:
            d["witness_flat"] = {"elements": list(self.witness_flat.indices),
                                 "rank": self.witness_flat.rank}
            if arr is not None:
                d["witness_flat"]["labels"] = [arr.labels[i] for i in self.witness_flat.indices]
        if arr is not None:
            d = {"schema": 1, "arrangement": arr.name, "n": arr.n, "r": arr.r, **d}
        return d


def upper_bound(r: int, s: int) -> int:
    if r < 1 or s < 2:
        raise ValueError(f"need r >= 1 and s >= 2, got r={r}, s={s}")
    return s * r - 1


def is_balanced(a: Arrangement, S) -> tuple:
    """(True, None) if S has full rank and every closed S' in S has |S'| < 2 rk S'.

    Otherwise (False, witness), where the witness is a violating closed subset,
    or None when S does not have full rank.
    """
    S = frozenset(S)
    if a.rank(S) != a.r:
        return False, None
    for f in a.closed_subsets_within(S):
        if len(f.elements) >= 2 * f.rank:
            return False, f
    return True, None


def is_basic(a: Arrangement, pair: Pair, order: LinearOrder | None = None) -> bool:
    order = order or pair.order or LinearOrder.identity(a.n)
    if len(pair.B) != a.r or a.rank(pair.B) != a.r:
        return False
    q = pair.union
    return a.is_nbc(pair.B, order, within=q) and a.is_nbc(pair.C, order, within=q)


def _split_base(a: Arrangement, S: frozenset):
    # a base B of S whose complement in S is independent
    g = a.greedy_base(S)
    if a.is_independent(S - g):
        return g
    for cand in combinations(sorted(S), a.r):
        cand = frozenset(cand)
        if a.rank(cand) == a.r and a.is_independent(S - cand):
            return cand
    return None


def basic_order(a: Arrangement, S, B=None) -> tuple:
    """Order S so that (B, S - B) is a basic pair, for a balanced S.

    Alternates blocks: first r-|C|+1 elements of B outside the span of C,
    then two elements of the remaining C outside the span of the remaining B,
    then two of the remaining B outside the span of the remaining C, and so on.
    Returns ``(pair, order)`` with S placed first in the order.
    """
    S = frozenset(S)
    if a.rank(S) < a.r:
        raise NoBase(f"rank {a.rank(S)} < {a.r}")
    ok, wit = is_balanced(a, S)
    if not ok:
        raise NotBalanced(f"closed subset {sorted(wit.elements)} has size >= 2 * rank {wit.rank}")
    if B is None:
        B = _split_base(a, S)
        if B is None:  # impossible for balanced sets
            raise NoBase("no base with independent complement")
    B = frozenset(B)
    if not B <= S or len(B) != a.r or a.rank(B) != a.r:
        raise NoBase(f"{sorted(B)} is not a base inside S")
    C = S - B
    if not a.is_independent(C):
        raise NoBase(f"complement {sorted(C)} of the chosen base is dependent")

    def outside(pool, span):
        cl = a.closure(span).elements if span else frozenset()
        return [x for x in sorted(pool) if x not in cl]

    c = len(C)
    if c == 0:
        seq = sorted(B)
    else:
        first = outside(B, C)[: a.r - c + 1]
        if len(first) < a.r - c + 1:
            raise NotBalanced("not enough base elements outside the span of C")
        seq = list(first)
        rem_b, rem_c = set(B) - set(first), set(C)
        turn_c = True
        while rem_b or rem_c:
            pool, other = (rem_c, rem_b) if turn_c else (rem_b, rem_c)
            need = min(2, len(pool))
            block = outside(pool, other)[:need]
            if len(block) < need:
                raise NotBalanced("alternating construction stalled")
            seq.extend(block)
            pool.difference_update(block)
            turn_c = not turn_c
    order = LinearOrder.with_prefix(seq, a.n)
    pair = Pair(B, C, order)
    if not is_basic(a, pair, order):
        raise AssertionError(f"constructed order {seq} does not make {sorted(B)}, {sorted(C)} basic")
    return pair, order


def is_well_balanced_pair(a: Arrangement, B, C) -> bool:
    """B a base, C independent of size r-1, and no element of B in the span of C."""
    B, C = frozenset(B), frozenset(C)
    if B & C:
        return False
    if len(B) != a.r or a.rank(B) != a.r:
        return False
    if len(C) != a.r - 1 or a.rank(C) != len(C):
        return False
    span = a.closure(C).elements if C else frozenset()
    return not (span & B)


def lattice_well_balanced(a: Arrangement) -> tuple:
    """Search rank-(r-1) flats X with rank(A - A_X) = r; early exit on the first."""
    if a.r == 0:
        return False, None
    for x in a.iter_flats(a.r - 1):
        if a.rank(a.ground - x.elements) == a.r:
            return True, x
    return False, None


def find_well_balanced_pair(a: Arrangement, budget: int = 100_000) -> Pair | None:
    ok, x = lattice_well_balanced(a)
    if ok:
        C = a.greedy_base(x.elements)
        B = a.greedy_base(a.ground - x.elements)
        return Pair(B, C)
    # direct search; equivalent to the lattice test, kept as an independent route
    for k, C in enumerate(combinations(range(a.n), max(a.r - 1, 0))):
        if k >= budget:
            break
        if a.rank(C) != len(C):
            continue
        rest = a.ground - (a.closure(C).elements if C else frozenset())
        if a.rank(rest) == a.r:
            return Pair(a.greedy_base(rest), C)
    return None


def corollary_check(a: Arrangement) -> tuple:
    """(max |A_X| < n/2, max |A_X|) over all rank-(r-1) flats X."""
    if a.r == 0:
        return False, 0
    biggest = max(len(f.elements) for f in a.flats_by_rank(a.r - 1))
    return 2 * biggest < a.n, biggest


def _grow_balanced(a: Arrangement, budget: int) -> frozenset:
    S = set(a.greedy_base(a.ground))
    calls = 0
    for e in range(a.n):
        if e in S or calls >= budget:
            continue
        calls += 1
        if is_balanced(a, S | {e})[0]:
            S.add(e)
    return frozenset(S)


def max_basic_C(a: Arrangement, budget: int = 10**6) -> BasicSearch:
    """Largest |C| over basic pairs (B, C), with a witness pair carrying its order."""
    if a.r == 0:
        return BasicSearch(0, None, True, 0, "empty")
    wb = find_well_balanced_pair(a)
    if wb is not None:
        pair, _ = basic_order(a, wb.union, wb.B)
        return BasicSearch(a.r - 1, pair, True, 0, "well-balanced pair")
    # balanced sets are closed under taking full-rank subsets, and a violating
    # closed subset D of S stays closed in every subset of S containing D
    witnesses = []
    calls = 0
    for size in range(min(a.n, 2 * a.r - 1), a.r - 1, -1):
        for S in combinations(range(a.n), size):
            mask = 0
            for i in S:
                mask |= 1 << i
            if any(w & ~mask == 0 for w in witnesses):
                continue
            if a.rank(S) < a.r:
                continue
            if calls >= budget:
                S = _grow_balanced(a, budget)
                pair, _ = basic_order(a, S)
                return BasicSearch(len(S) - a.r, pair, False, calls, "budget exhausted; greedy growth")
            calls += 1
            ok, wit = is_balanced(a, S)
            if ok:
                pair, _ = basic_order(a, S)
                return BasicSearch(size - a.r, pair, True, calls, "balanced-set search")
            w = 0
            for i in wit.elements:
                w |= 1 << i
            witnesses.append(w)
    raise AssertionError("no balanced set found, but every base is balanced")


def tc_report(a: Arrangement, s: int, budget: int = 10**6) -> TCReport:
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    if a.n == 0:
        return TCReport(s, 0, 0, True, False,
                        notes=["empty arrangement: the complement is contractible, TC_s = 0"])
    upper = upper_bound(a.r, s)
    search = max_basic_C(a, budget)
    lower = (s - 1) * a.r + search.size
    large = search.size == a.r - 1
    notes = [f"lower bound (s-1)r + |C| with |C| = {search.size} ({search.method})"]
    flat = None
    if search.method == "well-balanced pair":
        _, flat = lattice_well_balanced(a)
        notes.append("well-balanced pair: C is required to be independent")
    if not search.complete:
        notes.append("search budget exhausted: lower bound only")
    report = TCReport(s, upper, lower, lower == upper, large, search.pair, flat,
                      lower_bound_only=not search.complete, notes=notes)
    if a.is_uniform():
        report.generic_closed_form = min(s * a.r - 1, (s - 1) * a.n)
        note = "generic arrangement: closed form min(sr-1, (s-1)n) reported, not derived here"
        if report.generic_closed_form != lower:
            note += f"; differs from the pair bound {lower}"
        report.notes.append(note)
    return report
