"""Certificates that ``lhs(q) < rhs(q)`` for every integer ``q >= q_min``.

Both sides are quotients of integer polynomials with denominators positive on
the range.  Clearing denominators leaves one polynomial ``N`` whose sign is
the sign of ``rhs - lhs``.  If ``N(q0 + t)`` has nonnegative coefficients and
a positive constant term then ``N > 0`` on ``[q0, inf)``; the integers in
``[q_min, q0]`` are then checked one by one by exact evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from ..errors import NotEventuallyPositive
from .poly import IntPolynomial, RationalExpr

SEARCH_LIMIT = 1000

PROVED, REFUTED, INCONCLUSIVE = "proved", "refuted", "inconclusive"


@dataclass(frozen=True)
class PositivityCertificate:
    name: str
    statement: str
    lhs: RationalExpr = field(repr=False)
    rhs: RationalExpr = field(repr=False)
    q_min: int
    strict: bool
    numerator: tuple[int, ...] = field(repr=False)
    q0: int | None
    shifted: tuple[int, ...] = field(repr=False)
    scanned_points: tuple[int, ...]
    status: str
    counterexample: int | None
    verdict: bool
    side_conditions: tuple["PositivityCertificate", ...] = field(default=(), repr=False)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "expression": f"{self.lhs.canonical()} {'<' if self.strict else '<='} {self.rhs.canonical()}",
            "q_min": self.q_min,
            "shift_base": self.q0,
            "shifted_coefficients": list(self.shifted),
            "scanned_points": list(self.scanned_points),
            "status": self.status,
            "counterexample": self.counterexample,
            "verdict": self.verdict,
            "side_conditions": [s.to_json() for s in self.side_conditions],
        }

    def transcript(self) -> list[str]:
        op = "<" if self.strict else "<="
        lines = [f"{self.name}: {self.lhs} {op} {self.rhs}, all integers q >= {self.q_min}"]
        for side in self.side_conditions:
            lines.append(f"  side condition: {side.rhs} > 0 [{side.status}]")
        if not self.numerator:
            lines.append("  the two sides are identical")
        elif self.q0 is not None:
            lines.append(
                f"  cleared difference has degree {len(self.numerator) - 1}; "
                f"at q = {self.q0} + t all {len(self.shifted)} coefficients are >= 0"
                + (" and the constant term is > 0" if self.strict else "")
            )
        if self.scanned_points:
            lo, hi = self.scanned_points[0], self.scanned_points[-1]
            lines.append(f"  exact evaluation at q = {lo}..{hi}")
        if self.status == REFUTED:
            q = self.counterexample
            lines.append(f"  FAILS at q = {q}: lhs = {self.lhs.evaluate(q)}, rhs = {self.rhs.evaluate(q)}")
        elif self.status == INCONCLUSIVE:
            lines.append(f"  INCONCLUSIVE: no shift base up to q = {self.q_min + SEARCH_LIMIT}")
        else:
            lines.append("  PROVED")
        return lines


def statement_text(name: str, lhs: RationalExpr, rhs: RationalExpr, q_min: int, strict: bool) -> str:
    op = "<" if strict else "<="
    return f"{name}: {lhs} {op} {rhs} for all integers q >= {q_min}"


def cleared_difference(lhs: RationalExpr, rhs: RationalExpr) -> IntPolynomial:
    """Numerator of ``rhs - lhs`` over the positive denominator ``lhs.den * rhs.den``."""
    return rhs.num * lhs.den - lhs.num * rhs.den


def _shift_ok(shifted: IntPolynomial, strict: bool) -> bool:
    cs = shifted.coeffs
    if not cs:
        return not strict
    return all(c >= 0 for c in cs) and (cs[0] > 0 or not strict)


def _holds(lhs: RationalExpr, rhs: RationalExpr, q: int, strict: bool) -> bool:
    a, b = lhs.evaluate(q), rhs.evaluate(q)
    return a < b if strict else a <= b


def verify_positive_for_all_q(lhs: RationalExpr, rhs: RationalExpr, q_min: int, *,
                              strict: bool = True, name: str = "inequality") -> PositivityCertificate:
    """Certify ``lhs < rhs`` (or ``<=``) for all integers ``q >= q_min``.

    Raises ``NotEventuallyPositive`` when ``rhs - lhs`` has a negative leading
    coefficient, and ``ValueError`` when a denominator cannot be certified
    positive.  A shift base beyond ``q_min + SEARCH_LIMIT`` gives an
    inconclusive certificate unless a scanned point already refutes.
    """
    sides = []
    for den in (lhs.den, rhs.den):
        if den.degree <= 0:
            if den.leading <= 0:
                raise ValueError(f"denominator {den} is not positive")
            continue
        side = verify_positive_for_all_q(RationalExpr(0, label="0"), RationalExpr(den, label=f"({den})"),
                                         q_min, name="denominator")
        if not side.verdict:
            raise ValueError(f"denominator {den} is not positive for q >= {q_min}")
        sides.append(side)

    N = cleared_difference(lhs, rhs)
    if N.leading < 0:
        raise NotEventuallyPositive(f"{rhs} - ({lhs}) has negative leading coefficient")

    q0 = None
    shifted = IntPolynomial()
    limit = q_min + SEARCH_LIMIT
    if _shift_ok(N.shift(q_min), strict):
        q0 = q_min
    elif _shift_ok(N.shift(limit), strict):
        # the property is monotone in q0, so bisect for the least one
        lo, hi = q_min, limit
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _shift_ok(N.shift(mid), strict):
                hi = mid
            else:
                lo = mid
        q0 = hi
    if q0 is not None:
        shifted = N.shift(q0)
        scanned = tuple(range(q_min, q0 + 1))
    elif N.is_zero():
        scanned = (q_min,)
    else:
        scanned = tuple(range(q_min, limit + 1))

    counterexample = next((q for q in scanned if not _holds(lhs, rhs, q, strict)), None)
    if counterexample is not None:
        status = REFUTED
    elif q0 is not None:
        status = PROVED
    else:
        status = INCONCLUSIVE
    return PositivityCertificate(
        name=name,
        statement=statement_text(name, lhs, rhs, q_min, strict),
        lhs=lhs,
        rhs=rhs,
        q_min=q_min,
        strict=strict,
        numerator=N.coeffs,
        q0=q0,
        shifted=shifted.coeffs,
        scanned_points=scanned,
        status=status,
        counterexample=counterexample,
        verdict=status == PROVED,
        side_conditions=tuple(sides),
    )


def binomial_shift(coeffs: tuple[int, ...], q0: int) -> tuple[int, ...]:
    """``sum_i a_i (q0 + t)**i`` expanded with binomial coefficients."""
    n = len(coeffs)
    out = []
    for j in range(n):
        out.append(sum(coeffs[i] * comb(i, j) * q0 ** (i - j) for i in range(j, n)))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def recheck_certificate(cert: PositivityCertificate) -> bool:
    """Independently re-verify every field of a certificate."""
    if cert.statement != statement_text(cert.name, cert.lhs, cert.rhs, cert.q_min, cert.strict):
        return False
    N = cleared_difference(cert.lhs, cert.rhs)
    if N.coeffs != tuple(cert.numerator):
        return False

    dens = [d for d in (cert.lhs.den, cert.rhs.den) if d.degree > 0]
    if len(dens) != len(cert.side_conditions):
        return False
    for den, side in zip(dens, cert.side_conditions):
        if side.rhs.num != den or not side.lhs.num.is_zero() or side.lhs.den != 1 or side.rhs.den != 1:
            return False
        if side.q_min != cert.q_min or not side.strict or not side.verdict or not recheck_certificate(side):
            return False
    if any(d.degree <= 0 and d.leading <= 0 for d in (cert.lhs.den, cert.rhs.den)):
        return False

    if cert.q0 is not None:
        if cert.q0 < cert.q_min:
            return False
        expanded = binomial_shift(N.coeffs, cert.q0)
        if expanded != tuple(cert.shifted) or not _shift_ok(IntPolynomial(expanded), cert.strict):
            return False
        if cert.q0 > cert.q_min and _shift_ok(IntPolynomial(binomial_shift(N.coeffs, cert.q0 - 1)), cert.strict):
            return False
        if tuple(cert.scanned_points) != tuple(range(cert.q_min, cert.q0 + 1)):
            return False
    else:
        if cert.shifted:
            return False
        expected = (cert.q_min,) if N.is_zero() else tuple(range(cert.q_min, cert.q_min + SEARCH_LIMIT + 1))
        if tuple(cert.scanned_points) != expected:
            return False

    failures = [q for q in cert.scanned_points if not _holds(cert.lhs, cert.rhs, q, cert.strict)]
    if cert.status == PROVED:
        ok = cert.q0 is not None and not failures and cert.counterexample is None
    elif cert.status == REFUTED:
        ok = bool(failures) and cert.counterexample == failures[0]
    elif cert.status == INCONCLUSIVE:
        ok = cert.q0 is None and not N.is_zero() and not failures and cert.counterexample is None
    else:
        ok = False
    return ok and cert.verdict == (cert.status == PROVED)
