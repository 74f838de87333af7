"""Central hyperplane arrangements and their linear matroids.

An :class:`Arrangement` holds one row of exact scalars per hyperplane (the
coefficients of its defining linear form).  All matroid queries go through
exact elimination; rational arrangements use the integer kernels in
:mod:`tcarr.kernels`, cyclotomic ones a generic field elimination.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

from .kernels import IntegerRowKernel
from .scalars import QQ, CyclotomicNumber, Field


class ArrangementError(ValueError):
    pass


class EmptyMatrix(ArrangementError):
    pass


class ZeroRow(ArrangementError):
    def __init__(self, row: int):
        super().__init__(f"row {row} is zero")
        self.row = row


class ProportionalRows(ArrangementError):
    def __init__(self, i: int, j: int):
        super().__init__(f"rows {i} and {j} define the same hyperplane")
        self.pair = (i, j)


@dataclass(frozen=True)
class Flat:
    elements: frozenset
    rank: int

    @property
    def indices(self) -> tuple:
        return tuple(sorted(self.elements))

    def __len__(self):
        return len(self.elements)


class LinearOrder:
    """A total order on ``0..n-1``; ``seq[0]`` is the smallest element."""

    __slots__ = ("seq", "pos")

    def __init__(self, seq: Sequence[int]):
        seq = tuple(int(i) for i in seq)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError(f"not a permutation of 0..{len(seq) - 1}: {seq}")
        self.seq = seq
        pos = [0] * len(seq)
        for k, i in enumerate(seq):
            pos[i] = k
        self.pos = tuple(pos)

    @classmethod
    def identity(cls, n: int) -> "LinearOrder":
        return cls(range(n))

    @classmethod
    def with_prefix(cls, prefix: Sequence[int], n: int) -> "LinearOrder":
        """Order putting ``prefix`` first (in the given order), then the rest ascending."""
        head = list(prefix)
        rest = [i for i in range(n) if i not in set(head)]
        return cls(head + rest)

    @classmethod
    def parse(cls, text: str, n: int) -> "LinearOrder":
        if not text:
            return cls.identity(n)
        order = cls([int(t) for t in text.split(",") if t.strip()])
        if len(order) != n:
            raise ValueError(f"order has {len(order)} entries, expected {n}")
        return order

    def __len__(self):
        return len(self.seq)

    def sort(self, items: Iterable[int]) -> list:
        return sorted(items, key=self.pos.__getitem__)

    def min(self, items: Iterable[int]) -> int:
        return min(items, key=self.pos.__getitem__)

    def key(self, mono: Iterable[int]) -> tuple:
        """Deg-lex sort key of a monomial (its support) relative to this order."""
        p = sorted(self.pos[i] for i in mono)
        return (len(p), tuple(p))

    def __eq__(self, other):
        return isinstance(other, LinearOrder) and other.seq == self.seq

    def __hash__(self):
        return hash(self.seq)

    def __repr__(self):
        return f"LinearOrder({list(self.seq)})"


class _FieldRowKernel:
    """Gaussian elimination over an exact field (used for cyclotomic rows)."""

    def __init__(self, rows):
        self.rows = [tuple(r) for r in rows]

    def _echelon(self, idx):
        basis = []  # (pivot column, row normalised to 1 at the pivot)
        for i in idx:
            v = self._reduce(basis, self.rows[i])
            c = next((j for j, x in enumerate(v) if x), None)
            if c is not None:
                inv = 1 / v[c]
                basis.append((c, [x * inv for x in v]))
        return basis

    @staticmethod
    def _reduce(basis, v):
        v = list(v)
        for c, b in basis:
            a = v[c]
            if a:
                v = [x - a * y for x, y in zip(v, b)]
        return v

    def rank(self, idx):
        return len(self._echelon(idx))

    def closure(self, idx):
        idx = list(idx)
        basis = self._echelon(idx)
        inside = set(idx)
        if not basis:
            return 0, sorted(inside)
        members = [i for i in range(len(self.rows))
                   if i in inside or not any(self._reduce(basis, self.rows[i]))]
        return len(basis), members


def _primitive_integer_row(row) -> tuple:
    den = lcm(*(Fraction(x).denominator for x in row))
    ints = [int(Fraction(x) * den) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def _is_rational(x) -> bool:
    return not isinstance(x, CyclotomicNumber) or x.is_rational()


def _canonical_direction(row):
    lead = next(x for x in row if x)
    return tuple(x / lead for x in row)


def matrix_rank(rows, field: Field = QQ) -> int:
    rows = [tuple(field.coerce(x) for x in r) for r in rows]
    return _FieldRowKernel(rows).rank(range(len(rows)))


def essential_columns(rows, field: Field = QQ) -> list:
    """Leftmost columns whose restriction keeps the full row-space rank."""
    if not rows:
        return []
    d = len(rows[0])
    cols = [tuple(r[j] for r in rows) for j in range(d)]
    ker = _FieldRowKernel(cols)
    chosen = []
    for j in range(d):
        if ker.rank(chosen + [j]) > len(chosen):
            chosen.append(j)
    return chosen


class Arrangement:
    """Central essential arrangement of ``n`` distinct hyperplanes in rank ``r``.

    Instances are immutable; matroid data is cached on first use.
    """

    def __init__(self, normals, labels=None, field: Field = QQ, name: str = "", *, backend=None):
        rows = [tuple(field.coerce(x) for x in row) for row in normals]
        self.name = name
        self.field = field
        self.normals = tuple(rows)
        self.n = len(rows)
        self.labels = tuple(labels) if labels is not None else tuple(f"H{i}" for i in range(self.n))
        if len(self.labels) != self.n:
            raise ArrangementError(f"{len(self.labels)} labels for {self.n} rows")
        if self.n and len({len(r) for r in rows}) != 1:
            raise ArrangementError("rows have different lengths")
        self.dim = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if not any(row):
                raise ZeroRow(i)
        seen = {}
        for i, row in enumerate(rows):
            key = _canonical_direction(row)
            if key in seen:
                raise ProportionalRows(seen[key], i)
            seen[key] = i
        if all(_is_rational(x) for row in rows for x in row):
            ints = [_primitive_integer_row([QQ.coerce(x) for x in row]) for row in rows]
            self._kernel = IntegerRowKernel(ints, backend=backend)
        else:
            self._kernel = _FieldRowKernel(rows)
        self.r = self._kernel.rank(range(self.n)) if self.n else 0
        if self.r != self.dim:
            raise ArrangementError(
                f"arrangement is not essential: rank {self.r} in dimension {self.dim}")
        self.ground = frozenset(range(self.n))
        self._lock = threading.RLock()
        self._rank_cache = {}
        self._closure_cache = {}
        self._circuits = None
        self._flats = {}

    @classmethod
    def empty(cls, name: str = "empty") -> "Arrangement":
        """The arrangement with no hyperplanes (complement is a point)."""
        return cls([], [], QQ, name)

    @property
    def kernel_backend(self) -> str:
        return getattr(self._kernel, "backend", "field")

    def __eq__(self, other):
        return (isinstance(other, Arrangement) and self.field == other.field
                and self.labels == other.labels and self.normals == other.normals)

    def __hash__(self):
        return hash((self.field, self.labels, self.normals))

    def __repr__(self):
        return f"Arrangement({self.name!r}, n={self.n}, r={self.r}, {self.field!r})"

    # rank and closure

    def rank(self, s: Iterable[int]) -> int:
        s = frozenset(s)
        try:
            return self._rank_cache[s]
        except KeyError:
            pass
        value = self._kernel.rank(sorted(s)) if s else 0
        with self._lock:
            self._rank_cache[s] = value
        return value

    def is_independent(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return self.rank(s) == len(s)

    def closure(self, s: Iterable[int]) -> Flat:
        s = frozenset(s)
        try:
            return self._closure_cache[s]
        except KeyError:
            pass
        rk, members = self._kernel.closure(sorted(s))
        flat = Flat(frozenset(members), rk)
        with self._lock:
            self._closure_cache[s] = flat
            self._rank_cache.setdefault(s, rk)
        return flat

    def greedy_base(self, s: Iterable[int]) -> frozenset:
        """Lexicographically first (ascending index) maximal independent subset of ``s``."""
        base = []
        for i in sorted(s):
            if self.rank(base + [i]) > len(base):
                base.append(i)
        return frozenset(base)

    # circuits and nbc sets

    def circuits(self) -> list:
        """All minimal dependent sets, sorted lexicographically."""
        if self._circuits is not None:
            return self._circuits
        found = []

        def grow(indep: list):
            top = indep[-1] if indep else -1
            cl = self.closure(indep).elements if indep else frozenset()
            for e in range(top + 1, self.n):
                if e in cl:
                    cand = indep + [e]
                    if all(self.rank(cand[:k] + cand[k + 1:]) == len(indep) for k in range(len(indep))):
                        found.append(frozenset(cand))
                else:
                    grow(indep + [e])

        grow([])
        result = sorted(found, key=lambda c: tuple(sorted(c)))
        with self._lock:
            self._circuits = result
        return result

    def broken_circuits(self, order: LinearOrder) -> list:
        out = {c - {order.min(c)} for c in self.circuits()}
        return sorted(out, key=lambda c: tuple(sorted(c)))

    def is_nbc(self, s: Iterable[int], order: LinearOrder, within: Iterable[int] | None = None) -> bool:
        """True iff ``s`` contains no broken circuit (of the restriction to ``within``).

        Uses the equivalent test: ``s`` is independent and each element is the
        order-minimum of the closure of itself and all larger elements of ``s``.
        """
        s = order.sort(s)
        if not self.is_independent(s):
            return False
        ground = self.ground if within is None else frozenset(within)
        for k in range(len(s)):
            cl = self.closure(s[k:]).elements & ground
            if order.min(cl) != s[k]:
                return False
        return True

    def nbc_sets(self, p: int, order: LinearOrder) -> list:
        """All nbc sets of size ``p``, as tuples sorted by ``order``."""
        if p < 0 or p > self.r:
            return []
        out = []

        # build from the order-largest element downwards so each prefix is a valid tail
        def grow(tail: list):
            if len(tail) == p:
                out.append(tuple(tail))
                return
            top = order.pos[tail[0]] if tail else self.n
            for k in range(top):
                e = order.seq[k]
                cand = [e] + tail
                if self.rank(cand) < len(cand):
                    continue
                if order.min(self.closure(cand).elements) == e:
                    grow(cand)

        grow([])
        return sorted(out, key=order.key)

    # flats

    def _covers(self, flat: frozenset, universe=None) -> Iterator[frozenset]:
        covered = set(flat)
        for h in (range(self.n) if universe is None else sorted(universe)):
            if h in covered:
                continue
            g = self.closure(flat | {h}).elements
            if universe is not None:
                g = g & universe
            covered |= g
            yield g

    def flats_by_rank(self, k: int) -> list:
        """All flats of rank ``k``, lexicographic on sorted index lists."""
        if not 0 <= k <= self.r:
            return []
        if k in self._flats:
            return self._flats[k]
        if k == 0:
            level = [Flat(frozenset(), 0)]
        else:
            seen = set()
            for f in self.flats_by_rank(k - 1):
                for g in self._covers(f.elements):
                    seen.add(g)
            level = [Flat(g, k) for g in sorted(seen, key=lambda g: tuple(sorted(g)))]
        with self._lock:
            self._flats[k] = level
        return level

    def iter_flats(self, k: int) -> Iterator[Flat]:
        """Lazily stream the rank-``k`` flats, each once, in a fixed depth-first order."""
        if not 0 <= k <= self.r:
            return
        if k in self._flats:
            yield from self._flats[k]
            return
        seen = [set() for _ in range(k + 1)]

        def walk(f: frozenset, rk: int):
            if f in seen[rk]:
                return
            seen[rk].add(f)
            if rk == k:
                yield Flat(f, k)
                return
            for g in self._covers(f):
                yield from walk(g, rk + 1)

        yield from walk(frozenset(), 0)

    def closed_subsets_within(self, s: Iterable[int]) -> list:
        """Nonempty flats of the restriction to ``s``, ordered by rank then index list."""
        s = frozenset(s)
        out = []
        level = {frozenset()}
        for k in range(1, self.rank(s) + 1):
            nxt = set()
            for f in level:
                nxt.update(self._covers(f, s))
            out.extend(Flat(g, k) for g in sorted(nxt, key=lambda g: tuple(sorted(g))))
            level = nxt
        return out

    def subarrangement(self, flat: Flat | Iterable[int]) -> frozenset:
        """A_X: the hyperplanes containing X, given as the flat's element set."""
        return flat.elements if isinstance(flat, Flat) else self.closure(flat).elements

    def is_uniform(self) -> bool:
        """True when every set of at most ``r`` hyperplanes is independent."""
        if self.r == 0:
            return True
        return all(len(f) == self.r - 1 for f in self.iter_flats(self.r - 1))


def load_arrangement(matrix, labels=None, field: Field = QQ, name: str = "") -> Arrangement:
    """Validate a hyperplane matrix and essentialize it by leftmost column selection."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        raise EmptyMatrix("matrix has no rows or no columns")
    if len({len(r) for r in rows}) != 1:
        raise ArrangementError("rows have different lengths")
    rows = [[field.coerce(x) for x in r] for r in rows]
    for i, row in enumerate(rows):
        if not any(row):
            raise ZeroRow(i)
    cols = essential_columns(rows, field)
    if len(cols) < len(rows[0]):
        rows = [[r[j] for j in cols] for r in rows]
    return Arrangement(rows, labels, field, name)
