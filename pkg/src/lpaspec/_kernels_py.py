"""Pure-Python reference implementation of the compiled kernels in ``_kernels.pyx``.

Both modules expose the same names with the same semantics; ``lpaspec.kernels``
picks one at import time.
"""


class ModpEchelon:
    """Incremental row echelon basis over GF(p) for sparse integer-indexed rows.

    Every stored row has leading (smallest) column equal to its pivot and a
    leading coefficient of 1.
    """

    def __init__(self, p):
        self.p = p
        self._pivots = {}

    @property
    def rank(self):
        return len(self._pivots)

    def _reduce(self, cols, vals):
        p = self.p
        row = {}
        for c, v in zip(cols, vals):
            v %= p
            if v:
                row[c] = (row.get(c, 0) + v) % p
                if not row[c]:
                    del row[c]
        pivots = self._pivots
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                return row, lead
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row, None

    def add_row(self, cols, vals):
        """Insert a row; returns True when it enlarged the span."""
        row, lead = self._reduce(cols, vals)
        if lead is None:
            return False
        inv = pow(row[lead], -1, self.p)
        self._pivots[lead] = {c: (v * inv) % self.p for c, v in row.items()}
        return True

    def contains(self, cols, vals):
        row, _ = self._reduce(cols, vals)
        return not row


def modp_rank(rows, p):
    """Rank of a list of sparse rows ``[(cols, vals), ...]`` over GF(p)."""
    ech = ModpEchelon(p)
    for cols, vals in rows:
        ech.add_row(cols, vals)
    return ech.rank
