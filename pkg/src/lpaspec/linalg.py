"""Exact linear algebra: span membership over keyed sparse vectors, and small dense solves."""
from __future__ import annotations

from .fields import Field, PrimeField
from .kernels import modp_echelon


class _FieldEchelon:
    """Generic incremental echelon basis; used for the rationals."""

    def __init__(self, field: Field):
        self.field = field
        self._pivots = {}

    @property
    def rank(self):
        return len(self._pivots)

    def _reduce(self, cols, vals):
        F = self.field
        row = {}
        for c, v in zip(cols, vals):
            nv = F.add(row.get(c, F.zero), v)
            if nv != 0:
                row[c] = nv
            else:
                row.pop(c, None)
        while row:
            lead = min(row)
            piv = self._pivots.get(lead)
            if piv is None:
                return row, lead
            f = row[lead]
            for c, v in piv.items():
                nv = F.sub(row.get(c, F.zero), F.mul(f, v))
                if nv != 0:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row, None

    def add_row(self, cols, vals):
        row, lead = self._reduce(cols, vals)
        if lead is None:
            return False
        inv = self.field.inv(row[lead])
        self._pivots[lead] = {c: self.field.mul(v, inv) for c, v in row.items()}
        return True

    def contains(self, cols, vals):
        row, _ = self._reduce(cols, vals)
        return not row


class SpanTracker:
    """Span of vectors given as ``{key: scalar}`` dicts with hashable keys.

    Keys are numbered on first sight; GF(p) work goes to the selected kernel.
    """

    def __init__(self, field: Field, backend: str | None = None):
        self.field = field
        self._index = {}
        if isinstance(field, PrimeField):
            self._ech = modp_echelon(field.p, backend)
        else:
            self._ech = _FieldEchelon(field)

    @property
    def rank(self):
        return self._ech.rank

    def _encode(self, vec: dict, grow: bool):
        cols, vals = [], []
        for k, v in vec.items():
            i = self._index.get(k)
            if i is None:
                if not grow:
                    return None
                i = self._index[k] = len(self._index)
            cols.append(i)
            vals.append(v)
        return cols, vals

    def add(self, vec: dict) -> bool:
        return self._ech.add_row(*self._encode(vec, True))

    def contains(self, vec: dict) -> bool:
        enc = self._encode({k: v for k, v in vec.items() if v != 0}, False)
        if enc is None:
            return False  # a key never seen cannot be produced by the span
        return self._ech.contains(*enc)


def rank(field: Field, vectors) -> int:
    t = SpanTracker(field)
    for v in vectors:
        t.add(v)
    return t.rank


def solve_linear(field: Field, matrix, rhs):
    """One solution of ``matrix @ x = rhs`` by Gauss-Jordan elimination, or None."""
    F = field
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [[F.normalize(a) for a in row] + [F.normalize(b)] for row, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = F.inv(aug[r][c])
        aug[r] = [F.mul(a, inv) for a in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(all(a == 0 for a in row[:-1]) and row[-1] != 0 for row in aug):
        return None
    x = [F.zero] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    return x
