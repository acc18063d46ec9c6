"""Identity check outcomes and their exact text rendering."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .octonion import Octonion
from .scalars import QuadExt

EQUAL = "equal"
MISMATCH = "mismatch"
SKIPPED_DEGENERATE = "skipped_degenerate"
SKIPPED_POLE = "skipped_pole"
VERDICTS = (EQUAL, MISMATCH, SKIPPED_DEGENERATE, SKIPPED_POLE)


def reduce_value(value: Any) -> Any:
    """Canonicalize an exact value for comparison.

    QuadExt values with no sqrt(D) part collapse to Fractions and integral
    Fractions collapse to ints, coefficientwise for octonions.  Anything
    that cannot collapse is returned unchanged, so a stray irrational part
    shows up as a mismatch instead of being silently dropped.
    """
    if isinstance(value, Octonion):
        return Octonion(reduce_value(c) for c in value.coeffs)
    if isinstance(value, QuadExt):
        if value.irr != 0:
            return value
        value = value.rat
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def render(value: Any) -> str:
    """Exact, whitespace-free rendering: ``n/d`` rationals, ``[..]`` octonions."""
    if value is None:
        return "-"
    if isinstance(value, Octonion):
        return "[" + ",".join(render(c) for c in value.coeffs) + "]"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, QuadExt):
        return f"{render(value.rat)}{'+' if value.irr >= 0 else '-'}{render(abs(value.irr))}*sqrt({value.disc})"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(render(c) for c in value) + "]"
    return str(value)


def _same(lhs: Any, rhs: Any) -> bool:
    if type(lhs) is not type(rhs):
        return False
    if isinstance(lhs, Octonion):
        return all(_same(x, y) for x, y in zip(lhs.coeffs, rhs.coeffs))
    return lhs == rhs


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: Any
    n: int
    lhs: Any
    rhs: Any
    verdict: str

    @classmethod
    def compare(cls, identity: str, params, n: int, lhs, rhs) -> IdentityReport:
        """Reduce both sides and record ``equal`` iff they are identical."""
        lhs, rhs = reduce_value(lhs), reduce_value(rhs)
        verdict = EQUAL if _same(lhs, rhs) else MISMATCH
        return cls(identity, params, n, lhs, rhs, verdict)

    @classmethod
    def skipped(cls, identity: str, params, n: int, verdict: str) -> IdentityReport:
        return cls(identity, params, n, None, None, verdict)

    @property
    def ok(self) -> bool:
        return self.verdict == EQUAL

    def to_line(self) -> str:
        p = self.params
        return (
            f"identity={self.identity} a={p.a} b={p.b} p={p.p} q={p.q} n={self.n} "
            f"verdict={self.verdict} lhs={render(self.lhs)} rhs={render(self.rhs)}"
        )
