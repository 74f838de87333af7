"""Pure-Python fraction-free elimination on integer row sets.

Reference implementation of the compiled kernel in ``_kernels.pyx``; both
expose ``rank_rows`` and ``closure_rows`` with identical results.
"""


def _echelon(mat, idx):
    m = [list(mat[i]) for i in idx]
    d = len(mat[0]) if len(mat) else 0
    pivots = []
    prev = 1
    k = 0
    for c in range(d):
        if k == len(m):
            break
        p = k
        while p < len(m) and m[p][c] == 0:
            p += 1
        if p == len(m):
            continue
        m[k], m[p] = m[p], m[k]
        prow = m[k]
        piv = prow[c]
        for i in range(k + 1, len(m)):
            row = m[i]
            a = row[c]
            if a:
                for j in range(c + 1, d):
                    row[j] = (piv * row[j] - a * prow[j]) // prev
            else:
                for j in range(c + 1, d):
                    row[j] = (piv * row[j]) // prev
            row[c] = 0
        pivots.append((c, prow))
        prev = piv
        k += 1
    return pivots


def _in_span(pivots, v, d):
    v = list(v)
    prev = 1
    for c, prow in pivots:
        piv = prow[c]
        a = v[c]
        for j in range(d):
            v[j] = (piv * v[j] - a * prow[j]) // prev
        prev = piv
    return not any(v)


def rank_rows(mat, idx):
    return len(_echelon(mat, list(idx)))


def closure_rows(mat, idx):
    idx = list(idx)
    pivots = _echelon(mat, idx)
    d = len(mat[0]) if len(mat) else 0
    inside = set(idx)
    members = [i for i in range(len(mat)) if i in inside or _in_span(pivots, mat[i], d)]
    return len(pivots), members
