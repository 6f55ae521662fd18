"""Classification of Hermitian matrices within the rank-2 determinantal locus.

The real points of the projectivized rank <= 2 locus split into two pieces:
the semidefinite part (label D0) and the closure of the signature-(1,1)
part (label D1); they meet exactly along the rank-1 matrices.  The cone
construction adds a scalar shift: X lies in the cone when X - s*I has rank
<= 2 for some (necessarily unique, for q >= 5) rational eigenvalue s of
multiplicity >= q - 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    HypothesisNotMetError,
    InconsistencyError,
    NotProjectivePointError,
    UnsupportedSizeError,
)
from .exactnum import RationalPolynomial, format_rational, poly_gcd_tower
from .hermitian_core import HermitianMatrix, char_poly, inertia


class StratumLabel(enum.Enum):
    D0_ONLY = "D0_only"
    D1_ONLY = "D1_only"
    D0_AND_D1 = "D0_and_D1"
    NOT_IN_D2 = "NotInD2"

    @property
    def in_d2(self) -> bool:
        return self is not StratumLabel.NOT_IN_D2


class ConeLabel(enum.Enum):
    C1 = "C1"
    C0 = "C0"
    VERTEX = "Vertex"
    BOTH_BOUNDARY = "BothBoundary"
    NOT_IN_C2 = "NotInC2"


@dataclass(frozen=True)
class ConeClassification:
    label: ConeLabel
    apex_shift: Optional[Fraction]

    def to_json(self) -> dict:
        return {
            "cone": self.label.value,
            "apex_shift": None
            if self.apex_shift is None
            else format_rational(self.apex_shift),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ConeClassification":
        from .exactnum import parse_rational

        return cls(
            ConeLabel(obj["cone"]),
            None if obj["apex_shift"] is None else parse_rational(obj["apex_shift"]),
        )


def d2_real_dimension(q: int) -> int:
    """Real dimension of the rank <= 2 stratum, 4q - 5 (documented constant)."""
    return 4 * q - 5


def cone_dimension(q: int) -> int:
    """Complex dimension of the cone over the rank <= 2 locus, 4q - 4.

    Documented constant only; the cone's degree equals the degree of the
    rank <= 2 locus itself, and neither is verified projectively here.
    """
    return 4 * q - 4


def classify_d2(X: HermitianMatrix) -> StratumLabel:
    """Stratum label of a nonzero matrix, from its exact inertia.

    rank > 2 is outside the locus; rank 1 is the intersection of both
    components; rank 2 splits by minimal inertia (semidefinite vs (1,1)).
    """
    if X.is_zero():
        raise NotProjectivePointError("zero matrix is not a projective point")
    inr = inertia(X)
    if inr.rank > 2:
        return StratumLabel.NOT_IN_D2
    if inr.rank <= 1:
        return StratumLabel.D0_AND_D1
    if inr.m == 0:
        return StratumLabel.D0_ONLY
    return StratumLabel.D1_ONLY


def eigenvalue_of_high_multiplicity(X: HermitianMatrix) -> Optional[Fraction]:
    """The unique rational eigenvalue of multiplicity >= q - 2, if any.

    For q >= 5 two such eigenvalues would need 2(q - 2) <= q, impossible,
    so uniqueness is automatic and the gcd tower of the characteristic
    polynomial is a pure power (x - s)^e with s rational.
    """
    q = X.q
    if q < 5:
        raise UnsupportedSizeError(
            f"high-multiplicity detection requires q >= 5, got {q}"
        )
    p = char_poly(X)
    g = poly_gcd_tower(p, q - 3)
    if g.degree == 0:
        return None
    e = g.degree
    s = -g.coeffs[e - 1] / e
    if g != RationalPolynomial([-s, 1]) ** e:
        raise InconsistencyError("gcd tower is not a power of a linear factor")
    shifted = X.shift(s)
    if inertia(shifted).rank > 2:
        raise InconsistencyError(
            "high-multiplicity eigenvalue fails the rank <= 2 cross-check"
        )
    return s


def classify_cone(X: HermitianMatrix) -> ConeClassification:
    """Cone membership of a nonzero matrix for q >= 5.

    Scalar matrices are the vertex.  Otherwise X belongs to the cone iff
    X - s*I has rank <= 2 for the high-multiplicity eigenvalue s; the label
    then follows the signature of the shifted matrix.
    """
    if X.is_zero():
        raise NotProjectivePointError("zero matrix is not a projective point")
    if X.q < 5:
        raise UnsupportedSizeError(
            f"cone classification requires q >= 5, got {X.q}"
        )
    if X.is_scalar():
        return ConeClassification(ConeLabel.VERTEX, X.entries[0][0].re)
    s = eigenvalue_of_high_multiplicity(X)
    if s is None:
        return ConeClassification(ConeLabel.NOT_IN_C2, None)
    inr = inertia(X.shift(s))
    if inr.rank <= 1:
        return ConeClassification(ConeLabel.BOTH_BOUNDARY, s)
    if inr.m == 0:
        return ConeClassification(ConeLabel.C0, s)
    return ConeClassification(ConeLabel.C1, s)


def dim_limit_min_inertia_ge2(q: int) -> int:
    """Upper bound q^2 - (4q - 3) for the dimension of a real subspace in
    which every nonzero matrix has at least 2 positive and 2 negative
    eigenvalues; valid for q = 2^k + 1 with k >= 2."""
    if q < 5 or (q - 1) & (q - 2) != 0:
        raise HypothesisNotMetError(
            f"q must be 2^k + 1 with k >= 2 (q >= 5); got q={q}"
        )
    return q * q - (4 * q - 3)
