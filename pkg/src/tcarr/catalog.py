"""Built-in arrangements and the JSON arrangement file format.

Builtin ids look like ``braid:4``, ``weyl:E6``, ``full_monomial:3:4`` (m, r),
``special_monomial:2:4`` (m, r), ``generic:4:3`` (n, r) and ``circle``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path

from .bounds import Pair
from .matroid import Arrangement, ArrangementError, load_arrangement
from .scalars import QQ, Field


class BadParameters(ValueError):
    pass


class UnsupportedFamily(ValueError):
    pass


class ParseError(ValueError):
    pass


class SchemaError(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


FAMILIES = ("circle", "braid", "full_monomial", "special_monomial", "weyl", "generic")
WEYL_TYPES = ("A", "B", "C", "D", "F4", "E6", "E7", "E8")


@dataclass(frozen=True)
class CatalogId:
    family: str
    params: tuple = ()

    def __str__(self):
        return ":".join([self.family, *map(str, self.params)])

    @classmethod
    def parse(cls, text: str) -> "CatalogId":
        if text.startswith("builtin:"):
            text = text[len("builtin:"):]
        family, *rest = text.split(":")
        if family not in FAMILIES:
            raise BadParameters(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
        if family == "weyl":
            if len(rest) != 1:
                raise BadParameters("weyl needs one type, e.g. weyl:E6 or weyl:B4")
            return cls(family, (rest[0].upper(),))
        try:
            params = tuple(int(p) for p in rest)
        except ValueError as exc:
            raise BadParameters(f"non-integer parameter in {text!r}") from exc
        return cls(family, params)


def _form_label(i, j, k, m):
    if k == 0:
        return f"x{i + 1}-x{j + 1}"
    if m == 2:
        return f"x{i + 1}+x{j + 1}"
    z = "z" if k == 1 else f"z^{k}"
    return f"x{i + 1}-{z}*x{j + 1}"


def _monomial_rows(m, r, coordinate):
    field = QQ if m <= 2 else Field(m)
    rows, labels, index = [], [], {}
    if coordinate:
        for i in range(r):
            row = [0] * r
            row[i] = 1
            index[("x", i)] = len(rows)
            rows.append(row)
            labels.append(f"x{i + 1}")
    for i, j in combinations(range(r), 2):
        for k in range(m):
            row = [field.coerce(0)] * r
            row[i] = field.coerce(1)
            row[j] = -field.zeta(k) if m > 2 else field.coerce(-((-1) ** k))
            index[(i, j, k)] = len(rows)
            rows.append(row)
            labels.append(_form_label(i, j, k, m))
    return rows, labels, field, index


def _braid(ell):
    # coordinates y_i = x_i - x_ell, so x_i - x_j = y_i - y_j and x_i - x_ell = y_i
    rows, labels = [], []
    for i, j in combinations(range(ell), 2):
        row = [0] * (ell - 1)
        row[i] = 1
        if j < ell - 1:
            row[j] = -1
        rows.append(row)
        labels.append(f"x{i + 1}-x{j + 1}")
    return rows, labels


def _e8_positive_roots():
    # e_i - e_j, e_i + e_j, and half-integer roots (doubled) with even minus count
    roots = []
    for i, j in combinations(range(8), 2):
        for sign in (-1, 1):
            v = [0] * 8
            v[i], v[j] = 1, sign
            roots.append(tuple(v))
    for signs in product((1, -1), repeat=7):
        if signs.count(-1) % 2 == 0:
            roots.append(signs + (1,))
    return roots


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _weyl_rows(kind: str):
    if kind[0] in "ABCD" and kind[1:].isdigit():
        k = int(kind[1:])
        if kind[0] == "A":
            if k < 1:
                raise BadParameters("A_k needs k >= 1")
            rows, labels = _braid(k + 1)
            return rows, labels
        if k < 2 or (kind[0] == "D" and k < 3):
            raise BadParameters(f"{kind} is outside the supported range")
        rows, labels = [], []
        if kind[0] in "BC":
            for i in range(k):
                row = [0] * k
                row[i] = 1
                rows.append(row)
                labels.append(f"x{i + 1}")
        for i, j in combinations(range(k), 2):
            for sign, op in ((-1, "-"), (1, "+")):
                row = [0] * k
                row[i], row[j] = 1, sign
                rows.append(row)
                labels.append(f"x{i + 1}{op}x{j + 1}")
        return rows, labels
    if kind == "F4":
        rows, labels = [], []
        for i in range(4):
            row = [0] * 4
            row[i] = 1
            rows.append(row)
            labels.append(f"x{i + 1}")
        for i, j in combinations(range(4), 2):
            for sign, op in ((-1, "-"), (1, "+")):
                row = [0] * 4
                row[i], row[j] = 1, sign
                rows.append(row)
                labels.append(f"x{i + 1}{op}x{j + 1}")
        for signs in product((1, -1), repeat=3):
            rows.append([1, *signs])
            labels.append("(x1" + "".join(("+" if s > 0 else "-") + f"x{t + 2}" for t, s in enumerate(signs)) + ")/2")
        return rows, labels
    if kind in ("E6", "E7", "E8"):
        roots = _e8_positive_roots()
        # E7: roots orthogonal to e7+e8; E6: additionally orthogonal to e6-e7
        constraints = {"E8": [], "E7": [(0, 0, 0, 0, 0, 0, 1, 1)],
                       "E6": [(0, 0, 0, 0, 0, 0, 1, 1), (0, 0, 0, 0, 0, 1, -1, 0)]}[kind]
        keep = [v for v in roots if all(_dot(v, c) == 0 for c in constraints)]
        labels = ["a(" + ",".join(map(str, v)) + ")" for v in keep]
        return [list(v) for v in keep], labels
    raise BadParameters(f"unsupported Weyl type {kind!r}; expected one of {', '.join(WEYL_TYPES)}")


def build(cid: CatalogId | str) -> Arrangement:
    if isinstance(cid, str):
        cid = CatalogId.parse(cid)
    fam, p = cid.family, cid.params
    try:
        if fam == "circle":
            return Arrangement([[1]], ["x1"], QQ, "circle")
        if fam == "braid":
            (ell,) = p
            if ell < 2:
                raise BadParameters("braid needs l >= 2")
            rows, labels = _braid(ell)
            return Arrangement(rows, labels, QQ, str(cid))
        if fam in ("full_monomial", "special_monomial"):
            m, r = p
            if m < 1 or r < 2 or (fam == "special_monomial" and m < 2):
                raise BadParameters(f"{cid}: need m >= {1 if fam == 'full_monomial' else 2}, r >= 2")
            rows, labels, field, _ = _monomial_rows(m, r, fam == "full_monomial")
            return Arrangement(rows, labels, field, str(cid))
        if fam == "weyl":
            rows, labels = _weyl_rows(p[0])
            return load_arrangement(rows, labels, QQ, str(cid))
        if fam == "generic":
            n, r = p
            if r < 1 or n < r:
                raise BadParameters("generic needs n >= r >= 1")
            rows = [[t ** e for e in range(r)] for t in range(1, n + 1)]
            return Arrangement(rows, [f"t={t}" for t in range(1, n + 1)], QQ, str(cid))
    except ValueError as exc:
        if isinstance(exc, (BadParameters, ArrangementError)):
            raise
        raise BadParameters(f"bad parameters for {cid}: {exc}") from exc
    raise BadParameters(f"unknown family {fam!r}")


def explicit_pair(cid: CatalogId | str) -> Pair:
    """Explicit well-balanced pair of the monomial families, as index sets."""
    if isinstance(cid, str):
        cid = CatalogId.parse(cid)
    if cid.family not in ("full_monomial", "special_monomial"):
        raise UnsupportedFamily(f"no explicit pair for {cid.family}")
    m, r = cid.params
    _, _, _, index = _monomial_rows(m, r, cid.family == "full_monomial")
    C = [index[(0, j, 0)] for j in range(1, r)]
    if cid.family == "full_monomial":
        B = [index[("x", i)] for i in range(r)]
    else:
        if r < 3:
            raise BadParameters("the special monomial pair needs r >= 3")
        # x1 - zeta x_j and x2 - zeta x3
        B = [index[(0, j, 1)] for j in range(1, r)] + [index[(1, 2, 1)]]
    return Pair(B, C)


paper_pair = explicit_pair  # name used by the documented interface


# file format


def to_json(a: Arrangement) -> str:
    """Canonical JSON text: fixed key order, one row per line."""
    head = {
        "name": a.name,
        "field": a.field.to_json(),
        "labels": list(a.labels),
    }
    rows = [json.dumps([a.field.dump_scalar(x) for x in row], separators=(", ", ": ")) for row in a.normals]
    text = json.dumps(head, indent=2)[:-2]
    text += ',\n  "rows": [\n' + ",\n".join("    " + r for r in rows) + "\n  ]\n}\n"
    return text


def from_json(text: str, source: str = "<string>") -> Arrangement:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise SchemaError(f"{source}: top level must be an object")
    rows = obj.get("rows")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise SchemaError(f"{source}: field 'rows' must be a nonempty list of lists")
    width = len(rows[0])
    for k, r in enumerate(rows):
        if len(r) != width:
            raise SchemaError(f"{source}: rows[{k}] has length {len(r)}, expected {width}")
    try:
        field = Field.from_json(obj.get("field", {"type": "rational"}))
    except (ValueError, AttributeError) as exc:
        raise SchemaError(f"{source}: field 'field': {exc}") from exc
    labels = obj.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != len(rows)
                               or not all(isinstance(x, str) for x in labels)):
        raise SchemaError(f"{source}: field 'labels' must list one string per row")
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise SchemaError(f"{source}: field 'name' must be a string")
    parsed = []
    for k, r in enumerate(rows):
        out = []
        for t, x in enumerate(r):
            if isinstance(x, dict) and field.is_rational:
                raise FieldMismatch(f"{source}: rows[{k}][{t}] is cyclotomic but the field is rational")
            try:
                out.append(field.parse_scalar(x))
            except (ValueError, ZeroDivisionError) as exc:
                raise SchemaError(f"{source}: rows[{k}][{t}]: {exc}") from exc
        parsed.append(out)
    return load_arrangement(parsed, labels, field, name)


def load_file(path) -> Arrangement:
    path = Path(path)
    return from_json(path.read_text(), str(path))


def save_file(a: Arrangement, path) -> None:
    Path(path).write_text(to_json(a))


def resolve(source: str) -> Arrangement:
    """A ``builtin:...`` id or a path to a JSON arrangement file."""
    if source.startswith("builtin:"):
        return build(source)
    return load_file(source)

