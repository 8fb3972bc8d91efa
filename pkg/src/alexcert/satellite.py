"""Satellite Alexander polynomials and the sign obstruction they give."""

from __future__ import annotations

import dataclasses

from .alexander import braid_poly
from .braid import PositiveBraidWord, closure_components
from .laurent import ONE, HalfLaurent, Parity, conway_parity, substitute_power, summarize


@dataclasses.dataclass(frozen=True)
class SatellitePattern:
    winding: int
    pattern_poly: HalfLaurent

    def __post_init__(self):
        if conway_parity(self.pattern_poly) is Parity.VIOLATION:
            raise ValueError(f"pattern polynomial {self.pattern_poly} is not Conway-symmetric")


def satellite_poly(pat: SatellitePattern, companion: HalfLaurent) -> HalfLaurent:
    """Delta_K(t^w) * Delta_P(U)(t)."""
    return substitute_power(companion, pat.winding) * pat.pattern_poly


def is_knot_poly(p: HalfLaurent) -> bool:
    return conway_parity(p) is Parity.SYMMETRIC_INTEGRAL and sum(p.terms.values()) == 1


@dataclasses.dataclass(frozen=True)
class Verdict:
    winding_ok: bool
    sign_ok: bool
    fires: bool
    zero_pattern: bool = False

    @property
    def label(self) -> str:
        return "NOT_IN_P" if self.fires else "NO_OBSTRUCTION"


def obstruction(pat: SatellitePattern) -> Verdict:
    winding_ok = abs(pat.winding) != 1
    s = summarize(pat.pattern_poly)
    # A zero pattern polynomial has no leading coefficient; the product test is
    # vacuous there and the verdict says so.
    sign_ok = s.is_zero or s.alpha * s.beta >= 0
    return Verdict(winding_ok, sign_ok, winding_ok and sign_ok, zero_pattern=s.is_zero)


def cable_pattern(n: int) -> SatellitePattern:
    if n < 2:
        raise ValueError(f"(n,1)-cable pattern needs n >= 2, got {n}")
    return SatellitePattern(n, ONE)


@dataclasses.dataclass(frozen=True)
class KrishnaReport:
    n: int
    companion: PositiveBraidWord
    companion_poly: HalfLaurent
    cable_poly: HalfLaurent
    beta: int
    verdict: Verdict

    @property
    def ok(self) -> bool:
        return self.beta == 0 and self.verdict.fires


def krishna_check(n: int, companion_word: PositiveBraidWord) -> KrishnaReport:
    if closure_components(companion_word) != 1:
        raise ValueError(f"companion {companion_word} does not close to a knot")
    pat = cable_pattern(n)
    dk = braid_poly(companion_word)
    cable = satellite_poly(pat, dk)
    return KrishnaReport(n, companion_word, dk, cable, summarize(cable).beta, obstruction(pat))
