"""The s-fold tensor power of an Orlik-Solomon algebra.

Keys are s-tuples of nbc monomials.  Multiplication is slotwise with the
Koszul sign ``(-1)^(sum_{i>j} deg a_i * deg b_j)``, which makes the diagonal
map :func:`d_star` a ring homomorphism.
"""
from __future__ import annotations

from itertools import product

from .osalgebra import MixedContext, OSAlgebra, OSElement


class SlotOutOfRange(ValueError):
    pass


class OverlappingPair(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class TensorElement:
    """Immutable element of the ``s``-fold tensor power of ``algebra``."""

    __slots__ = ("algebra", "s", "terms")

    def __init__(self, algebra: OSAlgebra, s: int, terms: dict):
        if s < 1:
            raise ValueError(f"tensor power needs s >= 1, got {s}")
        self.algebra = algebra
        self.s = s
        self.terms = {k: v for k, v in terms.items() if v}

    def _check(self, other):
        if other.algebra is not self.algebra or other.s != self.s:
            raise MixedContext("tensor elements from different contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TensorElement(self.algebra, self.s, out)

    def __neg__(self):
        return TensorElement(self.algebra, self.s, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        return TensorElement(self.algebra, self.s, {k: v * other for k, v in self.terms.items()})

    def __rmul__(self, other):
        return TensorElement(self.algebra, self.s, {k: other * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebra is other.algebra and self.s == other.s and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, key) -> int:
        return self.terms.get(tuple(tuple(m) for m in key), 0)

    def total_degrees(self) -> set:
        return {sum(len(m) for m in k) for k in self.terms}

    def multidegrees(self) -> set:
        return {tuple(len(m) for m in k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items()):
            slots = " (x) ".join("*".join(f"e{i}" for i in m) or "1" for m in k)
            parts.append(f"{v:+} [{slots}]")
        return " ".join(parts)


def unit(algebra: OSAlgebra, s: int) -> TensorElement:
    return TensorElement(algebra, s, {((),) * s: 1})


def pure(algebra: OSAlgebra, slots) -> TensorElement:
    """Pure tensor of ascending monomials, each slot straightened into the nbc basis."""
    slots = [tuple(m) for m in slots]
    expansions = [algebra.straighten(m).items() for m in slots]
    out = {}
    for combo in product(*expansions):
        coeff = 1
        for _, c in combo:
            coeff *= c
        key = tuple(m for m, _ in combo)
        out[key] = out.get(key, 0) + coeff
    return TensorElement(algebra, len(slots), out)


def kernel_generator(algebra: OSAlgebra, i: int, j: int, s: int) -> TensorElement:
    """e_i (x) 1 ... 1 - 1 (x) ... e_i (in slot j) ... (x) 1, slots numbered 1..s."""
    if not 2 <= j <= s:
        raise SlotOutOfRange(f"slot {j} outside 2..{s}")
    if not 0 <= i < algebra.arr.n:
        raise IndexError(f"hyperplane {i} outside 0..{algebra.arr.n - 1}")
    first = ((i,),) + ((),) * (s - 1)
    other = tuple((i,) if k == j - 1 else () for k in range(s))
    return TensorElement(algebra, s, {first: 1, other: -1})


def _koszul_sign(a: tuple, b: tuple) -> int:
    parity = 0
    seen = 0
    for ai, bi in zip(a, b):
        parity += len(ai) * seen
        seen += len(bi)
    return -1 if parity % 2 else 1


def tensor_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    x._check(y)
    alg = x.algebra
    out = {}
    for ka, ca in x.terms.items():
        for kb, cb in y.terms.items():
            coeff = ca * cb * _koszul_sign(ka, kb)
            slots = []
            for ma, mb in zip(ka, kb):
                prod = alg.mono_product(ma, mb)
                if not prod:
                    break
                slots.append(prod.items())
            else:
                for combo in product(*slots):
                    c = coeff
                    for _, v in combo:
                        c *= v
                    key = tuple(m for m, _ in combo)
                    out[key] = out.get(key, 0) + c
    return TensorElement(alg, x.s, {k: v for k, v in out.items() if v})


def d_star(x: TensorElement) -> OSElement:
    """Image under the diagonal: a_1 (x) ... (x) a_s -> a_1 a_2 ... a_s."""
    alg = x.algebra
    out = {}
    for key, coeff in x.terms.items():
        acc = {(): coeff}
        for m in key:
            nxt = {}
            for a, ca in acc.items():
                for b, cb in alg.mono_product(a, m).items():
                    nxt[b] = nxt.get(b, 0) + ca * cb
            acc = nxt
            if not acc:
                break
        for m, v in acc.items():
            out[m] = out.get(m, 0) + v
    return OSElement(alg, out)


def pi_Q(algebra: OSAlgebra, B, C, s: int, max_factors: int = 24) -> TensorElement:
    """prod_{i in B} prod_{j=2..s} e_i^(j) * prod_{i in C} e_i^(2).

    Factors are multiplied left to right: B ascending with j ascending inside
    each i, then C ascending.  More than ``max_factors`` binomial factors
    raises :class:`BudgetExceeded`.
    """
    B, C = sorted(set(B)), sorted(set(C))
    if set(B) & set(C):
        raise OverlappingPair(f"B and C share {sorted(set(B) & set(C))}")
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    factors = [(i, j) for i in B for j in range(2, s + 1)] + [(i, 2) for i in C]
    if len(factors) > max_factors:
        raise BudgetExceeded(f"{len(factors)} factors exceed the budget of {max_factors}")
    acc = unit(algebra, s)
    for i, j in factors:
        acc = tensor_multiply(acc, kernel_generator(algebra, i, j, s))
        if not acc:
            break
    return acc


def mu_key(B, C, s: int) -> tuple:
    """Key of e_C (x) e_B (x) ... (x) e_B."""
    b, c = tuple(sorted(B)), tuple(sorted(C))
    return (c,) + (b,) * (s - 1)


def is_nonzero(x: TensorElement) -> bool:
    return bool(x.terms)
