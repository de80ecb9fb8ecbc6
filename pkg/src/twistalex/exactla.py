"""Exact integer linear algebra and Laurent-matrix tools.

Smith normal form with unimodular transforms, cokernel invariants,
surjections onto cyclic groups, and fraction-free computations (rank,
determinants, maximal-minor gcd) for presentation matrices over
Z[s, s^-1].
"""

from __future__ import annotations

import dataclasses
import itertools
import math

from . import laurent
from .errors import MinorLimitError
from .laurent import LaurentPoly

DEFAULT_MAX_MINORS = 100_000


@dataclasses.dataclass(frozen=True, init=False)
class IntMatrix:
    """Immutable integer matrix, row-major, arbitrary-precision entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         [self.at(i, j) for j in range(self.cols) for i in range(self.rows)])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         [a - b for a, b in zip(self.entries, other.entries)])

    def _same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix(self.rows, self.cols, [other * a for a in self.entries])
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __neg__(self) -> "IntMatrix":
        return self * -1

    def __pow__(self, n: int) -> "IntMatrix":
        if not self.is_square:
            raise ValueError("powers need a square matrix")
        if n < 0:
            raise ValueError("negative matrix powers not supported")
        result = IntMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def trace(self) -> int:
        if not self.is_square:
            raise ValueError("trace needs a square matrix")
        return sum(self.at(i, i) for i in range(self.rows))

    def det(self) -> int:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant needs a square matrix")
        return laurent._det_int(self.to_rows())

    def inverse_unimodular(self) -> "IntMatrix":
        """Inverse of a matrix with determinant +-1, via the adjugate."""
        d = self.det()
        if d not in (1, -1):
            raise ValueError(f"matrix has determinant {d}, not a unit")
        n = self.rows
        if n == 0:
            return self
        rows = self.to_rows()
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [r[:i] + r[i + 1 :] for k, r in enumerate(rows) if k != j]
                adj[i][j] = (-1) ** (i + j) * laurent._det_int(minor)
        return IntMatrix.from_rows([[d * x for x in r] for r in adj])

    def __str__(self) -> str:
        return "[" + ", ".join(str(list(self.row(i))) for i in range(self.rows)) + "]"


# -- Smith normal form ---------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D = diag(d) padded with zeros.

    The diagonal is nonnegative, nonzero entries divide their successors,
    and zeros come last.
    """

    d: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix
    original_shape: tuple[int, int]

    def diagonal_matrix(self) -> IntMatrix:
        rows, cols = self.original_shape
        m = [[0] * cols for _ in range(rows)]
        for k, dk in enumerate(self.d):
            m[k][k] = dk
        return IntMatrix.from_rows(m) if rows else IntMatrix(0, cols, ())


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms; deterministic for a fixed input.

    Pivots are chosen as the nonzero entry of minimal absolute value in the
    working submatrix (ties: lowest row, then lowest column), which keeps
    intermediate entries small and the output reproducible.
    """
    rows, cols = a.rows, a.cols
    m = a.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def row_addmul(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        m[i] = [x - q * y for x, y in zip(m[i], m[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_addmul(i: int, j: int, q: int) -> None:
        # col_i -= q * col_j
        for r in m:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def find_pivot(k: int) -> tuple[int, int] | None:
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                x = m[i][j]
                if x and (best is None or abs(x) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        return best

    for k in range(min(rows, cols)):
        while True:
            piv = find_pivot(k)
            if piv is None:
                break
            i, j = piv
            if i != k:
                m[k], m[i] = m[i], m[k]
                u[k], u[i] = u[i], u[k]
            if j != k:
                for r in m:
                    r[k], r[j] = r[j], r[k]
                for r in v:
                    r[k], r[j] = r[j], r[k]
            pivot = m[k][k]
            clean = True
            for i in range(k + 1, rows):
                if m[i][k]:
                    row_addmul(i, k, m[i][k] // pivot)
                    if m[i][k]:
                        clean = False
            for j in range(k + 1, cols):
                if m[k][j]:
                    col_addmul(j, k, m[k][j] // pivot)
                    if m[k][j]:
                        clean = False
            if not clean:
                continue
            # Ensure the pivot divides every remaining entry before moving on.
            fixed = True
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if m[i][j] % pivot:
                        row_addmul(k, i, -1)
                        fixed = False
                        break
                if not fixed:
                    break
            if fixed:
                break
        if find_pivot(k) is None:
            break

    for k in range(min(rows, cols)):
        if m[k][k] < 0:
            m[k] = [-x for x in m[k]]
            u[k] = [-x for x in u[k]]

    d = tuple(m[k][k] for k in range(min(rows, cols)))
    u_m = IntMatrix(rows, rows, [x for r in u for x in r])
    v_m = IntMatrix(cols, cols, [x for r in v for x in r])
    return SmithDecomposition(d=d, u=u_m, v=v_m, original_shape=(rows, cols))


@dataclasses.dataclass(frozen=True)
class CokernelInvariants:
    """Torsion coefficients (> 1, each dividing the next) and free rank of
    coker(A: Z^cols -> Z^rows)."""

    torsion: tuple[int, ...]
    free_rank: int

    @property
    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        return math.prod(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and not self.free_rank

    def group_text(self) -> str:
        if self.is_trivial:
            return "0"
        parts = [f"Z/{t}" for t in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts)


def cokernel_invariants(a: IntMatrix) -> CokernelInvariants:
    """Invariant factors != 1 and free rank of the cokernel of A."""
    snf = smith_normal_form(a)
    nonzero = [x for x in snf.d if x]
    torsion = tuple(x for x in nonzero if x > 1)
    return CokernelInvariants(torsion=torsion, free_rank=a.rows - len(nonzero))


def surjection_onto_cyclic(a: IntMatrix, r: int) -> tuple[int, ...] | None:
    """A character on the row generators of coker(A) surjecting onto Z_r.

    Built from the left Smith transform: generator i has coordinates
    U[:, i] with respect to the diagonalized relations, and coordinate j
    there has order d_j (0 meaning infinite).  Returns None iff no
    surjection exists.
    """
    if r < 2:
        raise ValueError("cyclic target must have order >= 2")
    snf = smith_normal_form(a)
    diag = list(snf.d) + [0] * (a.rows - len(snf.d))
    weights = []
    for dj in diag:
        mj = math.gcd(dj, r)  # gcd(0, r) == r: free generators carry full weight
        weights.append((r // mj) % r)
    if math.gcd(r, *weights) != 1:
        return None
    chi = []
    for i in range(a.rows):
        chi.append(sum(w * snf.u.at(j, i) for j, w in enumerate(weights)) % r)
    return tuple(chi)


def char_poly(h: IntMatrix) -> LaurentPoly:
    """det(sI - H) for an integer matrix, exactly (Faddeev-LeVerrier)."""
    if not h.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = h.rows
    cs = [1]
    mk = IntMatrix.identity(n)
    for k in range(1, n + 1):
        am = h * mk
        ck = -am.trace() // k
        cs.append(ck)
        mk = am + IntMatrix.identity(n) * ck
    # cs[k] is the coefficient of s^(n-k)
    return LaurentPoly(0, list(reversed(cs)))


# -- matrices over Z[s, s^-1] --------------------------------------------------


@dataclasses.dataclass(frozen=True, init=False)
class LambdaMatrix:
    """Immutable matrix with LaurentPoly entries, row-major."""

    rows: int
    cols: int
    entries: tuple[LaurentPoly, ...]

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows) -> "LambdaMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_int_matrix(cls, a: IntMatrix) -> "LambdaMatrix":
        return cls(a.rows, a.cols, [LaurentPoly.const(x) for x in a.entries])

    def at(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def submatrix_cols(self, cols) -> "LambdaMatrix":
        cols = list(cols)
        ents = [self.at(i, j) for i in range(self.rows) for j in cols]
        return LambdaMatrix(self.rows, len(cols), ents)

    def det(self) -> LaurentPoly:
        """Exact determinant by fraction-free elimination over Z[s, s^-1]."""
        if not self.is_square:
            raise ValueError("determinant needs a square matrix")
        return _det_lambda(self.to_rows())

    def __mul__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = laurent.ZERO
                for k in range(self.cols):
                    acc = acc + self.at(i, k) * other.at(k, j)
                out.append(acc)
        return LambdaMatrix(self.rows, other.cols, out)


def si_minus(h: IntMatrix) -> LambdaMatrix:
    """The presentation pencil sI - H as a LambdaMatrix."""
    if not h.is_square:
        raise ValueError("sI - H needs a square matrix")
    n = h.rows
    ents = []
    for i in range(n):
        for j in range(n):
            p = LaurentPoly.const(-h.at(i, j))
            if i == j:
                p = p + laurent.S
            ents.append(p)
    return LambdaMatrix(n, n, ents)


def _det_lambda(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return laurent.ONE
    sign = 1
    prev = laurent.ONE
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return laurent.ZERO
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = laurent.divexact(a[i][j] * piv - a[i][k] * a[k][j], prev)
            a[i][k] = laurent.ZERO
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def rank_over_fractions(p: LambdaMatrix) -> int:
    """Rank of P over the field of fractions of Z[s, s^-1]."""
    a = p.to_rows()
    rows, cols = p.rows, p.cols
    rank = 0
    prev = laurent.ONE
    while rank < rows and rank < cols:
        # find a pivot anywhere in the remaining submatrix
        piv_pos = None
        for i in range(rank, rows):
            for j in range(rank, cols):
                if not a[i][j].is_zero:
                    piv_pos = (i, j)
                    break
            if piv_pos:
                break
        if piv_pos is None:
            break
        i, j = piv_pos
        if i != rank:
            a[rank], a[i] = a[i], a[rank]
        if j != rank:
            for r in a:
                r[rank], r[j] = r[j], r[rank]
        piv = a[rank][rank]
        for i2 in range(rank + 1, rows):
            for j2 in range(rank + 1, cols):
                a[i2][j2] = laurent.divexact(a[i2][j2] * piv - a[i2][rank] * a[rank][j2], prev)
            a[i2][rank] = laurent.ZERO
        prev = piv
        rank += 1
    return rank


@dataclasses.dataclass(frozen=True)
class ElementaryIdeal:
    """gcd of the maximal minors (canonical form) plus the raw generator set."""

    delta: LaurentPoly
    minors: tuple[LaurentPoly, ...]


def maximal_minor_gcd(p: LambdaMatrix, max_minors: int = DEFAULT_MAX_MINORS) -> ElementaryIdeal:
    """Gcd of all n x n minors of an n x m matrix with n <= m.

    Follows the convention that a matrix with more generators than
    relations (n > m) has zero ideal and zero gcd.  Enumeration is capped
    at ``max_minors`` column choices; beyond that a MinorLimitError is
    raised (a desk-scale guard, overridable via TWIST_MAX_MINORS in the CLI).
    """
    n, m = p.rows, p.cols
    if n > m:
        return ElementaryIdeal(delta=laurent.ZERO, minors=())
    count = math.comb(m, n)
    if count > max_minors:
        raise MinorLimitError(
            f"would enumerate {count} minors, above the cap of {max_minors}")
    minors = []
    g = laurent.ZERO
    for cols in itertools.combinations(range(m), n):
        d = p.submatrix_cols(cols).det()
        minors.append(d)
        g = laurent.gcd(g, d)
    delta = laurent.canonicalize(g)
    return ElementaryIdeal(delta=delta, minors=tuple(minors))


def adjugate(p: LambdaMatrix) -> LambdaMatrix:
    """Adjugate of a square Laurent matrix: adj(P) * P = det(P) * I."""
    if not p.is_square:
        raise ValueError("adjugate needs a square matrix")
    n = p.rows
    rows = p.to_rows()
    out = [[laurent.ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:i] + r[i + 1 :] for k, r in enumerate(rows) if k != j]
            c = _det_lambda(minor)
            out[i][j] = -c if (i + j) % 2 else c
    return LambdaMatrix.from_rows(out)
