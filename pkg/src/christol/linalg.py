"""Dense linear algebra over F_p, sized for desk-scale problems.

Vectors are plain sequences of residues.  Nothing here is clever;
dimensions stay in the dozens, so readability wins over throughput.
"""


def _inv(a: int, p: int) -> int:
    return pow(a, p - 2, p)


class SpanTracker:
    """Grows a list of 'member' vectors and answers membership queries
    against their span, with coordinates over the original members.

    Internally keeps the members' row space in reduced echelon form,
    together with change-of-basis rows, so that coordinates() is a single
    elimination pass.
    """

    def __init__(self, p: int, width: int):
        self.p = p
        self.width = width
        self.size = 0  # number of members added
        self._rows = []  # echelon rows, pivot entry 1, pivot column clear elsewhere
        self._pivots = []  # pivot column per echelon row
        self._combos = []  # echelon row k = sum_j combos[k][j] * member_j

    def _reduce(self, vec):
        """vec = sum_k cs[k] * rows[k] + residual, with residual clear at
        every pivot column."""
        v = [x % self.p for x in vec]
        cs = []
        for row, piv in zip(self._rows, self._pivots):
            c = v[piv]
            cs.append(c)
            if c:
                for j in range(self.width):
                    if row[j]:
                        v[j] = (v[j] - c * row[j]) % self.p
        return cs, v

    def coordinates(self, vec):
        """Coordinates of vec over the members, or None if independent."""
        if len(vec) != self.width:
            raise ValueError(f"expected width {self.width}, got {len(vec)}")
        cs, residual = self._reduce(vec)
        if any(residual):
            return None
        out = [0] * self.size
        for c, combo in zip(cs, self._combos):
            if c:
                for j, w in enumerate(combo):
                    if w:
                        out[j] = (out[j] + c * w) % self.p
        return tuple(out)

    def append(self, vec) -> int:
        """Add an independent vector as the next member; returns its index."""
        cs, residual = self._reduce(vec)
        if not any(residual):
            raise ValueError("vector already lies in the span")
        for combo in self._combos:
            combo.append(0)
        piv = next(j for j, x in enumerate(residual) if x)
        lead_inv = _inv(residual[piv], self.p)
        row = [(x * lead_inv) % self.p for x in residual]
        combo = [0] * (self.size + 1)
        combo[self.size] = 1
        for c, cb in zip(cs, self._combos):
            if c:
                for j, w in enumerate(cb):
                    combo[j] = (combo[j] - c * w) % self.p
        combo = [(w * lead_inv) % self.p for w in combo]
        # keep existing rows clear at the new pivot column
        for k in range(len(self._rows)):
            fac = self._rows[k][piv]
            if fac:
                self._rows[k] = [
                    (a - fac * b) % self.p for a, b in zip(self._rows[k], row)
                ]
                self._combos[k] = [
                    (a - fac * b) % self.p for a, b in zip(self._combos[k], combo)
                ]
        self._rows.append(row)
        self._pivots.append(piv)
        self._combos.append(combo)
        self.size += 1
        return self.size - 1


def rank(vectors, p: int, width: int) -> int:
    """Rank of the given vectors over F_p."""
    tracker = SpanTracker(p, width)
    for v in vectors:
        if tracker.coordinates(v) is None:
            tracker.append(v)
    return tracker.size


def nullspace_basis(rows, p: int, ncols: int):
    """Deterministic basis of the right kernel of the matrix given by rows.

    Reduced row echelon form with pivots chosen left to right; one basis
    vector per free column, in column order.
    """
    mat = [[x % p for x in row] for row in rows]
    pivot_of_col = {}
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = _inv(mat[r][c], p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                fac = mat[i][c]
                mat[i] = [(a - fac * b) % p for a, b in zip(mat[i], mat[r])]
        pivot_of_col[c] = r
        r += 1
    basis = []
    for free in range(ncols):
        if free in pivot_of_col:
            continue
        v = [0] * ncols
        v[free] = 1
        for c, row_idx in pivot_of_col.items():
            v[c] = (-mat[row_idx][free]) % p
        basis.append(tuple(v))
    return basis
