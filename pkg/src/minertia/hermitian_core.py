"""Hermitian matrices over the Gaussian rationals and their exact inertia.

The central routine is :func:`inertia`: a symmetric congruence elimination
that diagonalizes X by exact rational congruences P*XP and reads the
signature off the resulting diagonal.  Sylvester's law of inertia makes the
sign counts independent of the congruences chosen, so no eigenvalues are
ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InconsistencyError, NotHermitianError, SingularTransformError
from .exactnum import GaussianRational, RationalPolynomial


@dataclass(frozen=True)
class Inertia:
    """Eigenvalue sign counts (n_plus, n_minus, n_zero) of a Hermitian matrix."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def q(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def m(self) -> int:
        """Minimal inertia min(n_plus, n_minus); 0 iff the matrix is semidefinite."""
        return min(self.n_plus, self.n_minus)

    def negated(self) -> "Inertia":
        return Inertia(self.n_minus, self.n_plus, self.n_zero)

    def to_json(self) -> dict:
        return {
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "n_zero": self.n_zero,
            "m": self.m,
            "rank": self.rank,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Inertia":
        return cls(int(obj["n_plus"]), int(obj["n_minus"]), int(obj["n_zero"]))


def _as_gaussian(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    if isinstance(value, tuple) and len(value) == 2:
        return GaussianRational(Fraction(value[0]), Fraction(value[1]))
    raise TypeError(f"cannot interpret {value!r} as a matrix entry")


class HermitianMatrix:
    """Immutable q x q matrix with exact Gaussian-rational entries.

    Conjugate symmetry (entries[i][j] == conj(entries[j][i])) is validated
    once, on construction; every operation below preserves it.
    """

    __slots__ = ("q", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [tuple(_as_gaussian(e) for e in row) for row in entries]
        q = len(rows)
        if q == 0 or any(len(row) != q for row in rows):
            raise NotHermitianError("entries must form a nonempty square grid")
        for i in range(q):
            for j in range(i, q):
                if rows[i][j] != rows[j][i].conj():
                    raise NotHermitianError(
                        f"conjugate symmetry fails at ({i},{j}): "
                        f"{rows[i][j]} vs conj({rows[j][i]})"
                    )
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("HermitianMatrix is immutable")

    @classmethod
    def zero(cls, q: int) -> "HermitianMatrix":
        return cls([[0] * q for _ in range(q)])

    @classmethod
    def identity(cls, q: int) -> "HermitianMatrix":
        return cls([[1 if i == j else 0 for j in range(q)] for i in range(q)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "HermitianMatrix":
        vals = [Fraction(v) for v in values]
        q = len(vals)
        return cls([[vals[i] if i == j else 0 for j in range(q)] for i in range(q)])

    @classmethod
    def scalar(cls, q: int, s) -> "HermitianMatrix":
        return cls.diagonal([Fraction(s)] * q)

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_scalar(self) -> bool:
        d = self.entries[0][0]
        for i in range(self.q):
            for j in range(self.q):
                if i == j:
                    if self.entries[i][j] != d:
                        return False
                elif not self.entries[i][j].is_zero():
                    return False
        return True

    def trace(self) -> Fraction:
        t = Fraction(0)
        for i in range(self.q):
            t += self.entries[i][i].re
        return t

    def add(self, other: "HermitianMatrix") -> "HermitianMatrix":
        self._check_size(other)
        return HermitianMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.q)]
                for i in range(self.q)
            ]
        )

    def sub(self, other: "HermitianMatrix") -> "HermitianMatrix":
        self._check_size(other)
        return HermitianMatrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.q)]
                for i in range(self.q)
            ]
        )

    def scale(self, factor) -> "HermitianMatrix":
        """Scale by a real rational; complex factors would break Hermitian symmetry."""
        f = Fraction(factor)
        return HermitianMatrix(
            [[e * f for e in row] for row in self.entries]
        )

    def neg(self) -> "HermitianMatrix":
        return self.scale(-1)

    def shift(self, s) -> "HermitianMatrix":
        """X - s*I for a real rational s."""
        s = Fraction(s)
        return HermitianMatrix(
            [
                [
                    self.entries[i][j] - s if i == j else self.entries[i][j]
                    for j in range(self.q)
                ]
                for i in range(self.q)
            ]
        )

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"HermitianMatrix(q={self.q})"

    def _check_size(self, other: "HermitianMatrix"):
        if self.q != other.q:
            raise ValueError(f"size mismatch: {self.q} vs {other.q}")

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HermitianMatrix":
        if not isinstance(obj, dict) or "q" not in obj or "entries" not in obj:
            raise ValueError("matrix JSON needs keys 'q' and 'entries'")
        q = int(obj["q"])
        entries = obj["entries"]
        if len(entries) != q or any(len(row) != q for row in entries):
            raise ValueError(f"entries must be a full {q}x{q} grid")
        return cls([[GaussianRational.from_json(e) for e in row] for row in entries])

    def to_complex_rows(self) -> list:
        """Float image, row-major nested lists of python complex."""
        return [[complex(e) for e in row] for row in self.entries]


def _pivot_key(x: Fraction):
    # bit-size heuristic for coefficient-growth control
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


def inertia(X: HermitianMatrix) -> Inertia:
    """Exact signature of X by symmetric congruence elimination.

    Pivot on a nonzero diagonal entry (smallest bit-size first) and take the
    Schur complement; if the active diagonal is all zero but some
    off-diagonal h_ij is not, a congruence sending e_i to e_i + c*e_j with
    c in {1, i} makes the (i,i) entry nonzero.  All steps are congruences,
    so the diagonal sign counts equal the eigenvalue sign counts.
    """
    q = X.q
    m = [list(row) for row in X.entries]
    active = list(range(q))
    n_plus = n_minus = n_zero = 0
    while active:
        pivot = None
        best = None
        for p in active:
            d = m[p][p]
            if not d.re and not d.im:
                continue
            if d.im:
                raise InconsistencyError(f"non-real diagonal at {p}: {d}")
            key = _pivot_key(d.re)
            if best is None or key < best:
                best, pivot = key, p
        if pivot is None:
            target = None
            for ii, i in enumerate(active):
                for j in active[ii + 1 :]:
                    if not m[i][j].is_zero():
                        target = (i, j)
                        break
                if target:
                    break
            if target is None:
                n_zero += len(active)
                break
            i, j = target
            c = GaussianRational(1) if m[i][j].re else GaussianRational(0, 1)
            cc = c.conj()
            for l in active:
                m[i][l] = m[i][l] + cc * m[j][l]
            for k in active:
                m[k][i] = m[k][i] + c * m[k][j]
            continue
        d = m[pivot][pivot].re
        if d > 0:
            n_plus += 1
        else:
            n_minus += 1
        active.remove(pivot)
        prow = m[pivot]
        for k in active:
            f = m[k][pivot] / d
            if f.is_zero():
                continue
            mk = m[k]
            for l in active:
                mk[l] = mk[l] - f * prow[l]
    return Inertia(n_plus, n_minus, n_zero)


def minimal_inertia(X: HermitianMatrix) -> int:
    """min(n_plus, n_minus): zero exactly for semidefinite matrices."""
    return inertia(X).m


def rank(X: HermitianMatrix) -> int:
    return inertia(X).rank


def _mat_mul(a, b, n):
    out = [[GaussianRational(0)] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            f = ai[k]
            if f.is_zero():
                continue
            bk = b[k]
            for j in range(n):
                if not bk[j].is_zero():
                    oi[j] = oi[j] + f * bk[j]
    return out


def _is_invertible(p, n) -> bool:
    # plain elimination over the Gaussian rationals, any nonzero pivot
    m = [list(row) for row in p]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not m[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return False
        m[col], m[piv] = m[piv], m[col]
        d = m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / d
            if f.is_zero():
                continue
            for cdx in range(col, n):
                m[r][cdx] = m[r][cdx] - f * m[col][cdx]
    return True


def congruence_transform(X: HermitianMatrix, P: Sequence[Sequence]) -> HermitianMatrix:
    """P* X P for an invertible Gaussian-rational matrix P."""
    q = X.q
    rows = [[_as_gaussian(e) for e in row] for row in P]
    if len(rows) != q or any(len(r) != q for r in rows):
        raise ValueError(f"transform must be {q}x{q}")
    if not _is_invertible(rows, q):
        raise SingularTransformError("transform matrix is singular")
    p_star = [[rows[j][i].conj() for j in range(q)] for i in range(q)]
    xp = _mat_mul([list(r) for r in X.entries], rows, q)
    result = _mat_mul(p_star, xp, q)
    return HermitianMatrix(result)


def char_poly(X: HermitianMatrix) -> RationalPolynomial:
    """Characteristic polynomial det(xI - X), exact rational coefficients.

    Uses the trace recursion (Faddeev-LeVerrier); every coefficient of a
    Hermitian matrix must come out real, which is asserted.
    """
    q = X.q
    a = [list(row) for row in X.entries]
    coeffs = [Fraction(0)] * q + [Fraction(1)]  # ascending, x^q leading
    mk = [row[:] for row in a]
    for k in range(1, q + 1):
        tr = GaussianRational(0)
        for i in range(q):
            tr = tr + mk[i][i]
        if tr.im:
            raise InconsistencyError("complex trace in characteristic polynomial")
        ck = -tr.re / k
        coeffs[q - k] = ck
        if k == q:
            break
        for i in range(q):
            mk[i][i] = mk[i][i] + ck
        mk = _mat_mul(a, mk, q)
    return RationalPolynomial(coeffs)
