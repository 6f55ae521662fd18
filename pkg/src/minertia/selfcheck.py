"""Built-in consistency suite behind the `check` CLI subcommand.

A trimmed-down version of the test suite: oracle equivalences, invariant
sampling, and regression constants.  Any failure indicates an arithmetic
fault in the build, so the CLI maps it to the internal-inconsistency exit
code rather than an input error.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Tuple

from . import bounds, degree
from .hermitian_core import HermitianMatrix, congruence_transform, inertia, minimal_inertia
from .oracles import descartes_inertia
from .search import _random_hermitian, _stream
from .strata import ConeLabel, StratumLabel, classify_cone, classify_d2

_SEED = 20240917


def _checks() -> List[Tuple[str, Callable[[], None]]]:
    return [
        ("inertia matches the sign-variation oracle", _check_oracle),
        ("congruence invariance of inertia", _check_congruence),
        ("sign-count identities and scale invariance", _check_identities),
        ("semidefiniteness iff minimal inertia zero", _check_semidefinite),
        ("degree closed forms agree and start 3, 20, 175", _check_degree),
        ("degree parity law on q in [3, 20000]", _check_parity),
        ("cone combinations keep minimal inertia <= 1", _check_cone_property),
        ("nonzero PSD matrices have positive trace", _check_trace),
        ("stratum labels on canonical diagonals", _check_strata_labels),
        ("bound regressions for q = 3..7", _check_bounds),
        ("K^2 < 8 chi chain for power-of-two q", _check_k2_chain),
        ("catalog surfaces beat their applicable bounds", _check_catalog),
    ]


def run_all(verbose_print: Callable[[str], None]) -> bool:
    ok = True
    for name, fn in _checks():
        try:
            fn()
            verbose_print(f"ok   {name}")
        except Exception as exc:
            ok = False
            verbose_print(f"FAIL {name}: {exc}")
    return ok


def _require(cond: bool, msg: str):
    if not cond:
        raise AssertionError(msg)


def _check_oracle():
    rng = _stream(_SEED, 90)
    for q in range(2, 6):
        for _ in range(40):
            x = _random_hermitian(q, rng)
            _require(inertia(x) == descartes_inertia(x), f"oracle mismatch at q={q}")


def _check_congruence():
    rng = _stream(_SEED, 91)
    from .errors import SingularTransformError

    done = 0
    while done < 25:
        q = 3 + done % 3
        x = _random_hermitian(q, rng)
        p = _random_hermitian(q, rng).entries  # any rational matrix works
        try:
            y = congruence_transform(x, p)
        except SingularTransformError:
            continue
        _require(inertia(y) == inertia(x), "congruence changed the inertia")
        done += 1


def _check_identities():
    rng = _stream(_SEED, 92)
    for _ in range(60):
        q = 2 + int(rng.integers(0, 4))
        x = _random_hermitian(q, rng)
        inr = inertia(x)
        _require(inr.q == q, "sign counts must sum to q")
        _require(inr.rank >= 2 * inr.m, "rank >= 2m fails")
        _require(inertia(x.neg()) == inr.negated(), "negation must swap signs")
        lam = Fraction(int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        if rng.integers(0, 2):
            lam = -lam
        _require(
            minimal_inertia(x.scale(lam)) == inr.m, "minimal inertia must be scale-invariant"
        )


def _check_semidefinite():
    rng = _stream(_SEED, 93)
    for _ in range(40):
        q = 2 + int(rng.integers(0, 3))
        x = _random_hermitian(q, rng)
        inr = inertia(x)
        semidefinite = inr.n_plus == 0 or inr.n_minus == 0
        _require((inr.m == 0) == semidefinite, "m = 0 must match semidefiniteness")


def _check_degree():
    _require(degree.degree_product_form(3) == 3, "degree(3) != 3")
    _require(degree.degree_product_form(4) == 20, "degree(4) != 20")
    _require(degree.degree_product_form(5) == 175, "degree(5) != 175")
    for q in range(3, 31):
        _require(
            degree.degree_product_form(q) == degree.degree_binomial_form(q),
            f"closed forms disagree at q={q}",
        )


def _check_parity():
    _require(degree.verify_parity_law(3, 20000) == 0, "parity law violated")


def _check_cone_property():
    rng = _stream(_SEED, 94)
    for _ in range(100):
        q = 5
        a = Fraction(int(rng.integers(0, 7)))
        b = -Fraction(int(rng.integers(0, 7)))
        y = HermitianMatrix.diagonal([a, b] + [0] * (q - 2))
        p = _random_hermitian(q, rng).entries
        try:
            y = congruence_transform(y, p)
        except Exception:
            pass  # keep the diagonal version if p was singular
        t = Fraction(int(rng.integers(-5, 6)))
        s = Fraction(int(rng.integers(-5, 6)))
        combo = y.scale(t).add(HermitianMatrix.identity(q).scale(s))
        if combo.is_zero():
            continue
        _require(minimal_inertia(combo) <= 1, "cone element with m > 1")


def _check_trace():
    rng = _stream(_SEED, 95)
    from .exactnum import GaussianRational

    for _ in range(100):
        q = 4 + int(rng.integers(0, 2))
        r = 1 + int(rng.integers(0, 2))
        a = [
            [
                GaussianRational(
                    Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 5))),
                    Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 5))),
                )
                for _ in range(q)
            ]
            for _ in range(r)
        ]
        entries = [
            [
                sum(
                    (a[k][i].conj() * a[k][j] for k in range(r)),
                    GaussianRational(0),
                )
                for j in range(q)
            ]
            for i in range(q)
        ]
        x = HermitianMatrix(entries)
        if x.is_zero():
            continue
        _require(minimal_inertia(x) == 0, "A*A must be PSD")
        _require(x.trace() > 0, "nonzero PSD trace must be positive")


def _check_strata_labels():
    cases = [
        ([1, -1, 0, 0, 0], StratumLabel.D1_ONLY),
        ([1, 1, 0, 0, 0], StratumLabel.D0_ONLY),
        ([1, 0, 0, 0, 0], StratumLabel.D0_AND_D1),
        ([1, 1, 1, 0, 0], StratumLabel.NOT_IN_D2),
    ]
    for diag, want in cases:
        got = classify_d2(HermitianMatrix.diagonal(diag))
        _require(got is want, f"diag {diag}: {got} != {want}")
    cone_cases = [
        ([2, 1, 1, 1, 0], ConeLabel.C1),
        ([3, 2, 1, 1, 1], ConeLabel.C0),
        ([2, 1, 1, 1, 1], ConeLabel.BOTH_BOUNDARY),
        ([1, 1, 1, 1, 1], ConeLabel.VERTEX),
        ([1, 2, 3, 4, 5], ConeLabel.NOT_IN_C2),
    ]
    for diag, want in cone_cases:
        got = classify_cone(HermitianMatrix.diagonal(diag)).label
        _require(got is want, f"cone diag {diag}: {got} != {want}")


def _check_bounds():
    want = {3: 9, 4: 10, 5: 17, 6: 17, 7: 20}
    for q, expected in want.items():
        report = bounds.best_bound(
            bounds.Assumptions(q=q, no_irregular_pencils_genus_ge2=True)
        )
        _require(report.best == expected, f"best bound at q={q}: {report.best} != {expected}")


def _check_k2_chain():
    for k in range(3, 12):
        q = (1 << k) + 1
        rec = bounds.k2_less_than_8chi(q)
        _require(rec.strict, f"no strict gap at q={q}")
        _require(rec.K2_upper == 8 * q - 17, "K2 upper must be 8q - 17")
        _require(rec.eight_chi == 8 * q - 16, "8 chi must be 8q - 16")


def _check_catalog():
    for rec in bounds.catalog():
        _require(
            rec.h11 >= bounds.catalog_best_bound(rec),
            f"catalog entry {rec.name} beats its bound",
        )
