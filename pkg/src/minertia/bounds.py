"""Lower bounds for the Hodge number h^{1,1} of irregular surfaces of
general type, surface-invariant identities, and a catalog of known
surfaces used for regression checks.

Each bound function returns None when its hypotheses are not met; the
aggregator collects every bound with an applicability flag and reports the
maximum of the applicable ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import HypothesisNotMetError


@dataclass(frozen=True)
class PencilData:
    """A fibration over a genus-b curve; fiber_component_counts lists the
    number of irreducible components l(F) for each scored fiber."""

    b: int
    fiber_component_counts: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.b < 1:
            raise ValueError(f"base genus must be >= 1, got {self.b}")
        object.__setattr__(
            self, "fiber_component_counts", tuple(int(l) for l in self.fiber_component_counts)
        )
        if any(l < 1 for l in self.fiber_component_counts):
            raise ValueError("every fiber component count must be >= 1")


@dataclass(frozen=True)
class Assumptions:
    q: int
    p_g: Optional[int] = None
    no_irregular_pencils_genus_ge2: bool = False
    pencil: Optional[PencilData] = None
    minimal_surface: bool = False

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"irregularity must be >= 1, got {self.q}")
        if self.p_g is not None and self.p_g < 0:
            raise ValueError("geometric genus must be nonnegative")
        if (
            self.pencil is not None
            and self.pencil.b >= 2
            and self.no_irregular_pencils_genus_ge2
        ):
            raise ValueError(
                "inconsistent assumptions: a genus >= 2 pencil is given while "
                "no_irregular_pencils_genus_ge2 is set"
            )

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "p_g": self.p_g,
            "no_irregular_pencils_genus_ge2": self.no_irregular_pencils_genus_ge2,
            "pencil": None
            if self.pencil is None
            else {
                "b": self.pencil.b,
                "fiber_component_counts": list(self.pencil.fiber_component_counts),
            },
            "minimal_surface": self.minimal_surface,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Assumptions":
        pencil = obj.get("pencil")
        return cls(
            q=int(obj["q"]),
            p_g=None if obj.get("p_g") is None else int(obj["p_g"]),
            no_irregular_pencils_genus_ge2=bool(
                obj.get("no_irregular_pencils_genus_ge2", False)
            ),
            pencil=None
            if pencil is None
            else PencilData(
                b=int(pencil["b"]),
                fiber_component_counts=tuple(pencil["fiber_component_counts"]),
            ),
            minimal_surface=bool(obj.get("minimal_surface", False)),
        )


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: Optional[int]
    applicable: bool
    note: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "applicable": self.applicable,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BoundEntry":
        return cls(
            str(obj["name"]),
            None if obj["value"] is None else int(obj["value"]),
            bool(obj["applicable"]),
            str(obj["note"]),
        )


@dataclass(frozen=True)
class BoundReport:
    q: int
    assumptions: Assumptions
    bounds: Tuple[BoundEntry, ...]
    best: int
    best_names: Tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "assumptions": self.assumptions.to_json(),
            "bounds": [b.to_json() for b in self.bounds],
            "best": self.best,
            "best_names": list(self.best_names),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BoundReport":
        return cls(
            int(obj["q"]),
            Assumptions.from_json(obj["assumptions"]),
            tuple(BoundEntry.from_json(b) for b in obj["bounds"]),
            int(obj["best"]),
            tuple(str(n) for n in obj["best_names"]),
        )


def bmy_bound(p_g: int, q: int) -> int:
    """p_g + q + 1, from the Bogomolov-Miyaoka-Yau inequality c2 >= 3*chi."""
    if p_g < 0 or q < 0:
        raise ValueError("p_g and q must be nonnegative")
    return p_g + q + 1


def general_bound(q: int) -> int:
    """3q - 2, unconditional for surfaces of general type."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return 3 * q - 2


def odd_q_bound(q: int, no_pencils: bool) -> Optional[int]:
    """3q - 1 for odd q, under the no-irregular-pencils hypothesis."""
    if q < 1:
        raise ValueError("q must be >= 1")
    if q % 2 == 1 and no_pencils:
        return 3 * q - 1
    return None


def pencil_bound(q: int, pencil: PencilData) -> int:
    """2b(q - b) + 2 + sum(l(F) - 1) for a pencil over a genus-b curve."""
    if not 1 <= pencil.b <= q:
        raise ValueError(f"base genus must lie in [1, q]={q}, got {pencil.b}")
    return (
        2 * pencil.b * (q - pencil.b)
        + 2
        + sum(l - 1 for l in pencil.fiber_component_counts)
    )


def power_of_two_q_bound(q: int, no_pencils: bool) -> Optional[int]:
    """4q - 3 when q - 1 is a power of two, under no-irregular-pencils."""
    if q < 3:
        raise ValueError("q must be >= 3")
    n = q - 1
    if no_pencils and (1 << (n.bit_length() - 1)) == n:
        return 4 * q - 3
    return None


def epsilon_bound(q: int, no_pencils: bool) -> Optional[int]:
    """4q - 3 - 4*eps for q = 2^k + 1 + eps with 0 < eps < 2^k.

    Inapplicable when q - 1 is itself a power of two (eps would be 0) or
    when the no-pencil hypothesis is absent.
    """
    if q < 4:
        return None
    if not no_pencils:
        return None
    k = (q - 2).bit_length() - 1
    eps = q - (1 << k) - 1
    if eps <= 0 or eps >= (1 << k):
        return None
    return 4 * q - 3 - 4 * eps


_PREVIOUSLY_KNOWN_POW2 = {3, 5}


def best_bound(a: Assumptions) -> BoundReport:
    """Evaluate every bound whose hypotheses are met and take the maximum."""
    entries: List[BoundEntry] = []
    no_pencils = a.no_irregular_pencils_genus_ge2

    v = bmy_bound(a.p_g, a.q) if a.p_g is not None else None
    entries.append(
        BoundEntry("bmy", v, v is not None, "p_g + q + 1; needs p_g")
    )

    v = general_bound(a.q)
    entries.append(
        BoundEntry("general_type", v, True, "3q - 2, unconditional for general type")
    )

    v = odd_q_bound(a.q, no_pencils)
    entries.append(
        BoundEntry(
            "odd_q",
            v,
            v is not None,
            "3q - 1 for odd q without irregular pencils of genus >= 2",
        )
    )

    v = power_of_two_q_bound(a.q, no_pencils) if a.q >= 3 else None
    note = "4q - 3 when q - 1 is a power of two, without irregular pencils"
    if v is not None and a.q in _PREVIOUSLY_KNOWN_POW2:
        note += " (case known previously)"
    entries.append(BoundEntry("power_of_two_q", v, v is not None, note))

    v = epsilon_bound(a.q, no_pencils)
    entries.append(
        BoundEntry(
            "epsilon_offset",
            v,
            v is not None,
            "4q - 3 - 4*eps for q = 2^k + 1 + eps, 0 < eps < 2^k, without pencils",
        )
    )

    if a.pencil is not None:
        v = pencil_bound(a.q, a.pencil)
        entries.append(
            BoundEntry("pencil", v, True, "2b(q - b) + 2 + sum(l(F) - 1)")
        )

    applicable = [e for e in entries if e.applicable]
    best = max(e.value for e in applicable)
    best_names = tuple(e.name for e in applicable if e.value == best)
    return BoundReport(a.q, a, tuple(entries), best, best_names)


@dataclass(frozen=True)
class SurfaceIdentities:
    chi: int
    c2: int
    K2: int

    def to_json(self) -> dict:
        return {"chi": self.chi, "c2": self.c2, "K2": self.K2}


def surface_identities(q: int, p_g: int, h11: int) -> SurfaceIdentities:
    """chi = 1 - q + p_g, c2 = 2 - 4q + 2*p_g + h11, K2 = 12*chi - c2
    (Noether's formula)."""
    if q < 0 or p_g < 0 or h11 < 0:
        raise ValueError("all invariants must be nonnegative")
    chi = 1 - q + p_g
    c2 = 2 - 4 * q + 2 * p_g + h11
    return SurfaceIdentities(chi, c2, 12 * chi - c2)


@dataclass(frozen=True)
class K2GapRecord:
    q: int
    chi: int
    K2_upper: int
    eight_chi: int
    strict: bool

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "chi": self.chi,
            "K2_upper": self.K2_upper,
            "eight_chi": self.eight_chi,
            "strict": self.strict,
        }


def k2_less_than_8chi(q: int) -> K2GapRecord:
    """For p_g = 2q - 3 and q = 2^k + 1 with k >= 3: the h11 >= 4q - 3
    bound forces K^2 <= 8q - 17 < 8*chi = 8q - 16."""
    n = q - 1
    if q < 9 or (1 << (n.bit_length() - 1)) != n:
        raise HypothesisNotMetError(
            f"requires q = 2^k + 1 with k >= 3 (q >= 9); got q={q}"
        )
    p_g = 2 * q - 3
    chi = 1 - q + p_g
    h11_min = 4 * q - 3
    c2_min = 2 - 4 * q + 2 * p_g + h11_min
    k2_upper = 12 * chi - c2_min
    eight_chi = 8 * chi
    return K2GapRecord(q, chi, k2_upper, eight_chi, k2_upper < eight_chi)


@dataclass(frozen=True)
class SurfaceRecord:
    name: str
    q: int
    p_g: Optional[int]
    h11: int
    no_irregular_pencils: bool
    note: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "q": self.q,
            "p_g": self.p_g,
            "h11": self.h11,
            "no_irregular_pencils": self.no_irregular_pencils,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SurfaceRecord":
        return cls(
            str(obj["name"]),
            int(obj["q"]),
            None if obj["p_g"] is None else int(obj["p_g"]),
            int(obj["h11"]),
            bool(obj["no_irregular_pencils"]),
            str(obj["note"]),
        )


def _product_family(q: int) -> SurfaceRecord:
    return SurfaceRecord(
        name=f"product of a genus-2 and a genus-{q - 2} curve",
        q=q,
        p_g=2 * (q - 2),
        h11=4 * q - 6,
        no_irregular_pencils=False,
        note="family member; both projections are irregular pencils",
    )


_CATALOG: Tuple[SurfaceRecord, ...] = (
    SurfaceRecord(
        "symmetric square of a genus-3 curve",
        q=3,
        p_g=3,
        h11=10,
        no_irregular_pencils=True,
        note="smallest known h11 for q=3; the sharp lower bound 9 is unrealized",
    ),
    SurfaceRecord(
        "Schoen surface",
        q=4,
        p_g=5,
        h11=12,
        no_irregular_pencils=True,
        note="smallest known h11 for q=4; literature lower bound 11 not derived here",
    ),
    SurfaceRecord(
        "symmetric square of a genus-4 curve",
        q=4,
        p_g=6,
        h11=17,
        no_irregular_pencils=True,
        note="next known value after the Schoen surface",
    ),
    SurfaceRecord(
        "Fano surface of lines on a smooth cubic threefold",
        q=5,
        p_g=10,
        h11=25,
        no_irregular_pencils=True,
        note="smallest known h11 for q=5",
    ),
    SurfaceRecord(
        "symmetric square of a genus-5 curve",
        q=5,
        p_g=10,
        h11=26,
        no_irregular_pencils=True,
        note="",
    ),
) + tuple(_product_family(q) for q in range(4, 9))


def catalog() -> List[SurfaceRecord]:
    """Known-surface table; the product family p_g = 2(q-2), h11 = 4q - 6
    is instantiated for q = 4..8."""
    return list(_CATALOG)


def catalog_best_bound(record: SurfaceRecord) -> int:
    """The aggregated bound applicable to a catalog record's assumptions."""
    return best_bound(
        Assumptions(
            q=record.q,
            p_g=record.p_g,
            no_irregular_pencils_genus_ge2=record.no_irregular_pencils,
            pencil=None if record.no_irregular_pencils else PencilData(b=2),
        )
    ).best
