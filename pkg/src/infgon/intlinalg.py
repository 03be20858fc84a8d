"""Exact integer matrices, Smith normal form, and cokernel data.

Everything here runs on plain Python integers, so there is no overflow to
report and no precision to lose.  The Smith reduction keeps full row and
column transforms (U * A * V = D with |det U| = |det V| = 1) because the
group presentations downstream need the column transform to express
generator classes in the reduced basis.

Pivoting rule: at each step the entry of smallest nonzero absolute value in
the remaining block is chosen, ties broken by lowest (row, col).  Together
with the fixed reduction order this makes the output a pure function of the
input, which the rendering and CLI layers rely on.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    """An immutable rectangular matrix of exact integers.

    Dimensions are stored explicitly so that matrices with zero rows or
    columns round-trip cleanly.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows:
            raise ValueError(
                f"expected {self.rows} rows, got {len(self.entries)}"
            )
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(
                    f"ragged matrix: expected {self.cols} columns, got {len(row)}"
                )
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise ValueError(f"matrix entries must be exact integers, got {x!r}")

    @classmethod
    def from_rows(cls, rows: list[list[int]], cols: int | None = None) -> "IntMatrix":
        if not rows:
            if cols is None:
                raise ValueError("cannot infer column count of an empty matrix")
            return cls(0, cols, ())
        width = len(rows[0])
        if cols is not None and cols != width:
            raise ValueError(f"declared {cols} columns but rows have {width}")
        return cls(len(rows), width, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls(k, k, tuple(
            tuple(1 if i == j else 0 for j in range(k)) for i in range(k)
        ))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}"
            )
        ocols = other.cols
        oent = other.entries
        out = []
        for row in self.entries:
            acc = [0] * ocols
            for k, x in enumerate(row):
                if x:
                    orow = oent[k]
                    for j in range(ocols):
                        acc[j] += x * orow[j]
            out.append(tuple(acc))
        return IntMatrix(self.rows, ocols, tuple(out))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)
        ))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        k = self.rows
        if k == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for col in range(k - 1):
            if a[col][col] == 0:
                for i in range(col + 1, k):
                    if a[i][col] != 0:
                        a[col], a[i] = a[i], a[col]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(col + 1, k):
                for j in range(col + 1, k):
                    # division is exact in the Bareiss scheme
                    a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) // prev
                a[i][col] = 0
            prev = a[col][col]
        return sign * a[k - 1][k - 1]

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class SnfResult:
    """Smith decomposition U * A * V = D of the input matrix A."""

    matrix: IntMatrix
    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        return tuple(
            self.d.entries[i][i] for i in range(min(self.d.rows, self.d.cols))
        )

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal() if x != 0)

    def invariant_factors(self) -> tuple[int, ...]:
        """The diagonal entries exceeding 1, i.e. the torsion part."""
        return tuple(x for x in self.diagonal() if x > 1)

    def verify(self) -> None:
        """Re-check every contract from first principles; raise on failure."""
        d = self.d
        if (d.rows, d.cols) != (self.matrix.rows, self.matrix.cols):
            raise AssertionError("D has wrong shape")
        for i in range(d.rows):
            for j in range(d.cols):
                if i != j and d.entries[i][j] != 0:
                    raise AssertionError(f"D is not diagonal at ({i}, {j})")
        diag = self.diagonal()
        for i, x in enumerate(diag):
            if x < 0:
                raise AssertionError(f"negative diagonal entry d[{i}] = {x}")
            if i + 1 < len(diag):
                nxt = diag[i + 1]
                if x == 0 and nxt != 0:
                    raise AssertionError("zero diagonal entry before a nonzero one")
                if x != 0 and nxt % x != 0:
                    raise AssertionError(f"divisibility broken: {x} does not divide {nxt}")
        if abs(self.u.determinant()) != 1:
            raise AssertionError("U is not unimodular")
        if abs(self.v.determinant()) != 1:
            raise AssertionError("V is not unimodular")
        if self.u.mul(self.matrix).mul(self.v).entries != d.entries:
            raise AssertionError("U * A * V != D")


def smith_normal_form(a: IntMatrix) -> SnfResult:
    """Smith normal form with transforms, entirely over exact integers.

    Elementary row operations are mirrored into U, column operations into V,
    so U * A * V = D holds at every step by construction.  Each pivot ends
    up positive and divides all entries of the remaining block, which gives
    the divisibility chain directly.
    """
    nrows, ncols = a.rows, a.cols
    d = [list(row) for row in a.entries]
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src: int, dst: int, c: int) -> None:
        # row[dst] += c * row[src]
        drow, srow = d[dst], d[src]
        for j in range(ncols):
            drow[j] += c * srow[j]
        drow, srow = u[dst], u[src]
        for j in range(nrows):
            drow[j] += c * srow[j]

    def add_col(src: int, dst: int, c: int) -> None:
        for row in d:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i: int) -> None:
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    limit = min(nrows, ncols)
    for k in range(limit):
        # smallest nonzero |entry| in the remaining block, ties by (row, col)
        best = None
        where = None
        for i in range(k, nrows):
            drow = d[i]
            for j in range(k, ncols):
                x = drow[j]
                if x:
                    x = -x if x < 0 else x
                    if best is None or x < best:
                        best = x
                        where = (i, j)
                        if x == 1:
                            break
            if best == 1:
                break
        if where is None:
            break  # remaining block is zero; trailing diagonal stays zero
        if where[0] != k:
            swap_rows(k, where[0])
        if where[1] != k:
            swap_cols(k, where[1])
        if d[k][k] < 0:
            negate_row(k)

        while True:
            # clear column k; a nonzero remainder becomes a smaller pivot
            restart = False
            for i in range(k + 1, nrows):
                x = d[i][k]
                if x:
                    q = x // d[k][k]
                    if q:
                        add_row(k, i, -q)
                    if d[i][k]:
                        swap_rows(k, i)  # remainder is in (0, pivot)
                        restart = True
                        break
            if restart:
                continue
            # clear row k; column k stays clear because only columns > k move
            for j in range(k + 1, ncols):
                x = d[k][j]
                if x:
                    q = x // d[k][k]
                    if q:
                        add_col(k, j, -q)
                    if d[k][j]:
                        swap_cols(k, j)
                        restart = True
                        break
            if restart:
                continue
            # force the pivot to divide the rest of the block
            pivot = d[k][k]
            carrier = None
            for i in range(k + 1, nrows):
                drow = d[i]
                for j in range(k + 1, ncols):
                    if drow[j] % pivot:
                        carrier = i
                        break
                if carrier is not None:
                    break
            if carrier is None:
                break
            add_row(carrier, k, 1)  # d[carrier][k] == 0, pivot unchanged

    result = SnfResult(
        matrix=a,
        u=IntMatrix.from_rows(u, cols=nrows),
        d=IntMatrix.from_rows(d, cols=ncols),
        v=IntMatrix.from_rows(v, cols=ncols),
    )
    result.verify()
    return result


@dataclass(frozen=True)
class Cokernel:
    """The quotient of Z^g by the row span of a relation matrix.

    Coordinates produced by `project` list the torsion components first (one
    per invariant factor, reduced to [0, d)) and then the free components.
    Rows of the defining matrix project to zero exactly.
    """

    generators: int
    invariant_factors: tuple[int, ...]
    free_rank: int
    _v: IntMatrix
    _torsion_positions: tuple[int, ...]
    _rank: int

    def project(self, vector: list[int] | tuple[int, ...]) -> tuple[int, ...]:
        if len(vector) != self.generators:
            raise ValueError(
                f"vector has length {len(vector)}, expected {self.generators}"
            )
        ev = self._v.entries
        g = self.generators

        def coordinate(i: int) -> int:
            return sum(ev[j][i] * vector[j] for j in range(g))

        coords = [
            coordinate(pos) % self.invariant_factors[idx]
            for idx, pos in enumerate(self._torsion_positions)
        ]
        coords.extend(coordinate(i) for i in range(self._rank, g))
        return tuple(coords)


def cokernel(a: IntMatrix) -> Cokernel:
    """Cokernel of the row span of `a` inside Z^cols, via Smith reduction."""
    snf = smith_normal_form(a)
    diag = snf.diagonal()
    rank = snf.rank
    torsion_positions = tuple(i for i, x in enumerate(diag) if x > 1)
    return Cokernel(
        generators=a.cols,
        invariant_factors=tuple(diag[i] for i in torsion_positions),
        free_rank=a.cols - rank,
        _v=snf.v,
        _torsion_positions=torsion_positions,
        _rank=rank,
    )
