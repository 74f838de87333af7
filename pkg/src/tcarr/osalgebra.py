"""Orlik-Solomon algebra of an arrangement in its nbc basis.

Monomials are strictly increasing tuples of hyperplane indices; signs are
always taken relative to that ascending-index form.  Elements are sparse
maps from nbc monomials to rational (usually integer) coefficients.
"""
from __future__ import annotations

import os
import threading
from bisect import bisect_left

from .matroid import Arrangement, LinearOrder


class MixedContext(ValueError):
    pass


def merge(a: tuple, b: tuple):
    """Product of two ascending monomials in the exterior algebra.

    Returns ``(sign, monomial)``, with ``sign == 0`` when they share an index.
    """
    if not a:
        return 1, b
    if not b:
        return 1, a
    if not set(a).isdisjoint(b):
        return 0, ()
    inversions = sum(bisect_left(b, x) for x in a)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


def boundary(mono: tuple) -> dict:
    """d(e_{i1}...e_{ik}) = sum_t (-1)^(t-1) e_{i1}..^e_{it}..e_{ik}."""
    return {mono[:t] + mono[t + 1:]: (-1) ** t for t in range(len(mono))}


class OSAlgebra:
    """The Orlik-Solomon algebra of ``arr`` with nbc basis relative to ``order``."""

    def __init__(self, arr: Arrangement, order: LinearOrder | None = None, check: bool | None = None):
        self.arr = arr
        self.order = order if order is not None else LinearOrder.identity(arr.n)
        if len(self.order) != arr.n:
            raise ValueError(f"order has {len(self.order)} elements, arrangement has {arr.n}")
        # TCARR_CHECK=1 verifies the nbc/deg-lex output property on every straightening
        self.check = bool(int(os.environ.get("TCARR_CHECK", "0"))) if check is None else check
        self._lock = threading.Lock()
        self._memo = {}
        self._products = {}
        self._rewrites = None

    def __repr__(self):
        return f"OSAlgebra({self.arr.name!r}, order={list(self.order.seq)})"

    def _rules(self):
        # (broken circuit, circuit, removed minimum), deg-lex largest broken circuit first
        if self._rewrites is None:
            rules = []
            for c in self.arr.circuits():
                c0 = self.order.min(c)
                rules.append((c - {c0}, tuple(sorted(c)), c0))
            rules.sort(key=lambda t: self.order.key(t[0]), reverse=True)
            self._rewrites = rules
        return self._rewrites

    # constructors

    def element(self, terms=None) -> "OSElement":
        return OSElement(self, terms or {})

    def zero(self) -> "OSElement":
        return OSElement(self, {})

    def one(self) -> "OSElement":
        return OSElement(self, {(): 1})

    def gen(self, i: int) -> "OSElement":
        return OSElement(self, {(i,): 1})

    def monomial(self, indices) -> "OSElement":
        """e_S for an arbitrary index sequence (sign of sorting included), straightened."""
        seq = list(indices)
        if len(set(seq)) < len(seq):
            return self.zero()
        inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
        sign = -1 if inv % 2 else 1
        return OSElement(self, {m: sign * c for m, c in self.straighten(tuple(sorted(seq))).items()})

    # basis

    def nbc_basis(self, p: int) -> list:
        """nbc monomials of degree ``p``, in deg-lex order relative to the algebra's order."""
        return [tuple(sorted(s)) for s in self.arr.nbc_sets(p, self.order)]

    def dimension(self, p: int) -> int:
        return len(self.arr.nbc_sets(p, self.order)) if p >= 0 else 0

    def is_nbc(self, mono) -> bool:
        return self.arr.is_nbc(mono, self.order)

    # straightening

    def straighten(self, mono: tuple) -> dict:
        """Expansion of the ascending monomial ``mono`` in the nbc basis."""
        mono = tuple(mono)
        try:
            return self._memo[mono]
        except KeyError:
            pass
        result = self._straighten(mono)
        if self.check:
            top = self.order.key(mono)
            for m in result:
                assert self.is_nbc(m), (mono, m)
                assert self.order.key(m) <= top, (mono, m)
        with self._lock:
            self._memo[mono] = result
        return result

    def _straighten(self, mono: tuple) -> dict:
        if not self.arr.is_independent(mono):
            return {}
        support = set(mono)
        for bc, circuit, c0 in self._rules():
            if bc <= support:
                break
        else:
            return {mono: 1}
        # the circuit relation d(e_C) = 0 solved for e_{C - c0} = e_bc
        t0 = circuit.index(c0)
        bc_mono = circuit[:t0] + circuit[t0 + 1:]
        rest = tuple(i for i in mono if i not in bc)
        s0, _ = merge(bc_mono, rest)
        out = {}
        for t, i in enumerate(circuit):
            if t == t0:
                continue
            coeff = s0 * (-1) ** (t + t0 + 1)
            s1, m = merge(circuit[:t] + circuit[t + 1:], rest)
            if not s1:
                continue
            for k, v in self.straighten(m).items():
                out[k] = out.get(k, 0) + coeff * s1 * v
        return {k: v for k, v in out.items() if v}

    def mono_product(self, a: tuple, b: tuple) -> dict:
        """Straightened product of two nbc monomials."""
        key = (a, b)
        try:
            return self._products[key]
        except KeyError:
            pass
        sign, m = merge(a, b)
        res = {} if not sign else {k: sign * v for k, v in self.straighten(m).items()}
        with self._lock:
            self._products[key] = res
        return res

    def multiply(self, x: "OSElement", y: "OSElement") -> "OSElement":
        if x.algebra is not self or y.algebra is not self:
            raise MixedContext("elements belong to different algebras")
        out = {}
        for ma, ca in x.terms.items():
            for mb, cb in y.terms.items():
                for m, v in self.mono_product(ma, mb).items():
                    out[m] = out.get(m, 0) + ca * cb * v
        return OSElement(self, {k: v for k, v in out.items() if v})


class OSElement:
    """Immutable element of an :class:`OSAlgebra`."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: OSAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = {tuple(k): v for k, v in terms.items() if v}

    def _same(self, other):
        if not isinstance(other, OSElement):
            return False
        if other.algebra is not self.algebra:
            raise MixedContext("elements belong to different algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return OSElement(self.algebra, out)

    def __neg__(self):
        return OSElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, OSElement):
            return self.algebra.multiply(self, other)
        return OSElement(self.algebra, {k: v * other for k, v in self.terms.items()})

    def __rmul__(self, other):
        return OSElement(self.algebra, {k: other * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, OSElement):
            return self.algebra is other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, mono) -> int:
        return self.terms.get(tuple(mono), 0)

    def degrees(self) -> set:
        return {len(m) for m in self.terms}

    def homogeneous(self, p: int) -> "OSElement":
        return OSElement(self.algebra, {m: v for m, v in self.terms.items() if len(m) == p})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, v in sorted(self.terms.items(), key=lambda t: self.algebra.order.key(t[0])):
            name = "*".join(f"e{i}" for i in m) or "1"
            parts.append(f"{v:+} {name}" if v not in (1, -1) else f"{'+' if v > 0 else '-'} {name}")
        return " ".join(parts).lstrip("+ ")
