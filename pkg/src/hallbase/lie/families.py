"""Frozen data and inequality checks for the exceptional families.

For each family the data are: the exponent ``c``, the least ``q`` handled
symbolically, an upper bound ``A(q)`` on the order of a solvable Hall
subgroup, lower bounds on the sizes of the relevant conjugacy classes, the
largest semisimple centralizer order used to derive the semisimple class
bound, and the order of the inner-diagonal group.

Group orders are the standard ones (Carter, *Simple Groups of Lie Type*).
The ``E6`` orders are those of the inner-diagonal groups, not divided by
``gcd(3, q - eps)``.  The ``3D4`` centralizer bound is the order of
``A1(q) x A1(q^3)``, the largest semisimple centralizer in ``3D4(q)``
(Deriziotis-Michler) and is flagged as external data in reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import UnknownFamily
from .poly import IntPolynomial, RationalExpr, cyclotomic_like as f, q_power
from .positivity import PositivityCertificate, verify_positive_for_all_q

Q = IntPolynomial.q()
ONE = RationalExpr(1, label="1")


def _prod(*polys: IntPolynomial) -> IntPolynomial:
    out = IntPolynomial.const(1)
    for p in polys:
        out = out * p
    return out


@dataclass(frozen=True)
class ClassBound:
    """``|x^G| >= bound`` (``>`` when strict) for the classes named in ``covers``."""

    covers: str
    bound: RationalExpr
    strict: bool = True


@dataclass(frozen=True)
class FamilyCase:
    family: str
    c: int
    q_min: int
    hall_bound: tuple[IntPolynomial, ...]  # A(q) is the max of these branches
    class_size_lb: tuple[ClassBound, ...]  # first entry: semisimple elements
    bound_class: int  # index into class_size_lb of the bound used as B(q)
    maxcent: IntPolynomial
    order_poly: IntPolynomial
    stated_exponent: int
    displayed: tuple[RationalExpr, ...]
    extra_consistency: tuple[tuple[str, RationalExpr, RationalExpr, bool], ...] = ()
    special_notes: tuple[str, ...] = ()
    external_data: tuple[str, ...] = ()

    @property
    def degree_gap(self) -> int:
        return self.order_poly.degree - self.maxcent.degree

    @property
    def B(self) -> RationalExpr:
        return self.class_size_lb[self.bound_class].bound

    def assembled_majorants(self) -> list[RationalExpr]:
        """``A(q)**c / B(q)**(c-1)``, one expression per Hall-bound branch."""
        out = []
        for i, A in enumerate(self.hall_bound):
            expr = RationalExpr(A) ** self.c / self.B ** (self.c - 1)
            tag = f" [branch {i + 1}: A = {A}]" if len(self.hall_bound) > 1 else ""
            out.append(expr.named(f"A^{self.c}/B^{self.c - 1}{tag}"))
        return out


def _e8() -> FamilyCase:
    hall = (Q + 1) ** 8 * 2**14
    return FamilyCase(
        family="E8",
        c=2,
        q_min=2,
        hall_bound=(hall,),
        class_size_lb=(ClassBound("semisimple elements and field automorphisms",
                                  RationalExpr(q_power(112), label="q^112")),),
        bound_class=0,
        maxcent=q_power(64) * _prod(f(18), f(14), f(12), f(10), f(8), f(6), f(2) ** 2),
        order_poly=q_power(120) * _prod(*(f(d) for d in (2, 8, 12, 14, 18, 20, 24, 30))),
        stated_exponent=112,
        displayed=(((RationalExpr(hall) ** 2) / q_power(112)).named("((q+1)^8*2^14)^2/q^112"),),
    )


def _e7() -> FamilyCase:
    hall = (Q + 1) ** 7 * 2**10
    printed = (RationalExpr((Q + 1) ** 7 * 2**20) ** 2 * 2 / q_power(64)).named("((q+1)^7*2^20)^2*2/q^64")
    return FamilyCase(
        family="E7",
        c=2,
        q_min=2,
        hall_bound=(hall,),
        class_size_lb=(ClassBound("semisimple elements and field automorphisms",
                                  RationalExpr(q_power(64), 2, label="q^64/2")),),
        bound_class=0,
        maxcent=q_power(31) * _prod(f(2) ** 2, f(4), f(6) ** 2, f(8), f(10)),
        order_poly=q_power(63) * _prod(*(f(d) for d in (2, 6, 8, 10, 12, 14, 18))),
        stated_exponent=64,
        displayed=(printed,),
        special_notes=(
            "The printed majorant carries 2^20 where the Hall bound for E7 is (q+1)^7*2^10; "
            "both the printed expression and the assembled 2^10 variant are certified.",
        ),
    )


def _f4_order() -> IntPolynomial:
    return q_power(24) * _prod(f(2), f(6), f(8), f(12))


def _e6(eps: int) -> FamilyCase:
    sign = "+" if eps > 0 else "-"
    hall = (Q + 1) ** 6 * 2**7
    order = q_power(36) * _prod(f(2), f(5, eps), f(6), f(8), f(9, eps), f(12))
    graph_lb = (RationalExpr(q_power(12) * f(5) * f(9), 3)).named("q^12(q^5-1)(q^9-1)/3")
    displayed = (
        RationalExpr((Q + 1) ** 24 * 2**28 * 3**3, q_power(36) * f(5) ** 3 * f(9) ** 3)
    ).named("(q+1)^24*2^28*3^3/(q^36(q^5-1)^3(q^9-1)^3)")
    # |E6^eps(q)| / |F4(q)| for the simple group is at least the inner-diagonal order over 3|F4(q)|
    graph_class = RationalExpr(order, 3 * _f4_order()).named(f"|E6{sign}(q)|/(3|F4(q)|)")
    return FamilyCase(
        family=f"E6{sign}",
        c=4,
        q_min=2,
        hall_bound=(hall,),
        class_size_lb=(
            ClassBound("semisimple elements, field and graph-field automorphisms",
                       RationalExpr(q_power(30), 3, label="q^30/3")),
            ClassBound("graph automorphisms", graph_lb, strict=False),
        ),
        bound_class=1,
        maxcent=q_power(20) * _prod(f(1, eps), f(2), f(4), f(6), f(8), f(5, eps)),
        order_poly=order,
        stated_exponent=30,
        displayed=(displayed,),
        extra_consistency=(("graph-automorphism class size", graph_lb, graph_class, False),),
    )


def _f4() -> FamilyCase:
    hall = (Q + 1) ** 4 * 2**7 * 3**2
    return FamilyCase(
        family="F4",
        c=4,
        q_min=3,
        hall_bound=(hall,),
        class_size_lb=(ClassBound("semisimple elements and elements outside the inner-diagonal group",
                                  RationalExpr(q_power(16), label="q^16")),),
        bound_class=0,
        maxcent=q_power(16) * _prod(f(2), f(4), f(6), f(8)),
        order_poly=_f4_order(),
        stated_exponent=16,
        displayed=((RationalExpr((Q + 1) ** 16 * 2**28 * 3**8) / q_power(48)).named("(q+1)^16*2^28*3^8/q^48"),),
        special_notes=(
            "q = 2 is outside this certificate: the majorant exceeds 1 there.",
        ),
    )


def _g2() -> FamilyCase:
    hall = (Q + 1) ** 2 * 12
    return FamilyCase(
        family="G2",
        c=4,
        q_min=3,
        hall_bound=(hall,),
        class_size_lb=(ClassBound("semisimple elements and elements outside the inner-diagonal group",
                                  RationalExpr(q_power(4) * f(3), label="q^4(q^3-1)"), strict=False),),
        bound_class=0,
        maxcent=q_power(2) * f(2) * f(3, -1),
        order_poly=q_power(6) * f(2) * f(6),
        stated_exponent=7,
        displayed=(RationalExpr((Q + 1) ** 8 * 12**4, q_power(12) * f(3) ** 3).named("(q+1)^8*12^4/(q^12(q^3-1)^3)"),),
        special_notes=(
            "q = 2 is outside this certificate: the majorant exceeds 1 there.",
        ),
    )


def _3d4() -> FamilyCase:
    branches = ((Q**2 + Q + 1) ** 2, (Q + 1) ** 2 * 48)
    return FamilyCase(
        family="3D4",
        c=4,
        q_min=2,
        hall_bound=branches,
        class_size_lb=(ClassBound("semisimple elements and elements outside the inner-diagonal group",
                                  RationalExpr(q_power(16), label="q^16")),),
        bound_class=0,
        maxcent=q_power(4) * f(2) * f(6),
        order_poly=q_power(12) * (q_power(8) + q_power(4) + 1) * f(6) * f(2),
        stated_exponent=16,
        displayed=(),
        special_notes=(
            "A(q) = max{(q^2+q+1)^2, 48(q+1)^2} is not a polynomial; each branch is certified "
            "separately (48(q+1)^2 dominates at q = 2: 432 against 49).",
        ),
        external_data=(
            "largest semisimple centralizer q^4(q^2-1)(q^6-1) = |A1(q) x A1(q^3)| taken from the "
            "literature, not derived here",
        ),
    )


_BUILDERS = {
    "E8": _e8,
    "E7": _e7,
    "E6+": lambda: _e6(1),
    "E6-": lambda: _e6(-1),
    "F4": _f4,
    "G2": _g2,
    "3D4": _3d4,
}

FAMILIES = tuple(_BUILDERS)

_ALIASES = {"E6": ("E6+", "E6-"), "3D4": ("3D4",), "D4": ("3D4",)}


def resolve_families(names) -> list[str]:
    """Expand user-supplied names (``E6`` means both signs); order follows ``FAMILIES``."""
    wanted: set[str] = set()
    for name in names:
        key = name.strip().upper().replace("^", "").replace("EPS", "")
        key = key.replace("E6PLUS", "E6+").replace("E6MINUS", "E6-")
        if key in _BUILDERS:
            wanted.add(key)
        elif key in _ALIASES:
            wanted.update(_ALIASES[key])
        else:
            raise UnknownFamily(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)} or E6")
    return [f for f in FAMILIES if f in wanted]


def family_case(family: str) -> FamilyCase:
    try:
        return _BUILDERS[family]()
    except KeyError:
        raise UnknownFamily(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}") from None


@dataclass(frozen=True)
class FamilyReport:
    case: FamilyCase = field(repr=False)
    q_min: int
    certificates: tuple[PositivityCertificate, ...]

    @property
    def family(self) -> str:
        return self.case.family

    @property
    def verdict(self) -> bool:
        return all(c.verdict for c in self.certificates)

    @property
    def counterexamples(self) -> list[tuple[str, int]]:
        return [(c.name, c.counterexample) for c in self.certificates if c.counterexample is not None]

    def to_json(self) -> dict:
        case = self.case
        return {
            "family": case.family,
            "c": case.c,
            "q_min": self.q_min,
            "hall_bound": [str(a) for a in case.hall_bound],
            "class_size_lower_bounds": [
                {"covers": b.covers, "bound": str(b.bound), "strict": b.strict} for b in case.class_size_lb
            ],
            "degree_gap": case.degree_gap,
            "stated_exponent": case.stated_exponent,
            "special_notes": list(case.special_notes),
            "external_data": list(case.external_data),
            "verdict": self.verdict,
            "certificates": [c.to_json() for c in self.certificates],
        }

    def transcript(self) -> str:
        case = self.case
        lines = [f"== {case.family}: c = {case.c}, q >= {self.q_min} =="]
        branches = [str(a) for a in case.hall_bound]
        if len(branches) == 1:
            lines.append(f"   A(q) = {branches[0]}")
        else:
            lines.append("   A(q) = max{" + ", ".join(branches) + "}")
        lines.append(f"   B(q) = {case.B}")
        lines.append(f"   deg |G| - deg max|C(x)| = {case.order_poly.degree} - {case.maxcent.degree} = "
                     f"{case.degree_gap} (class-size exponent {case.stated_exponent})")
        for cert in self.certificates:
            lines.extend("   " + line for line in cert.transcript())
        for note in case.special_notes:
            lines.append(f"   note: {note}")
        for note in case.external_data:
            lines.append(f"   external data: {note}")
        lines.append(f"   verdict: {'OK' if self.verdict else 'FAILED'}")
        return "\n".join(lines)


def verify_case(case: FamilyCase, q_min: int | None = None) -> FamilyReport:
    """Certify the printed majorants, the assembled bound and the data consistency."""
    qm = case.q_min if q_min is None else q_min
    certs = []
    for expr in case.displayed:
        certs.append(verify_positive_for_all_q(expr, ONE, qm, name=f"{case.family} printed majorant < 1"))
    for expr in case.assembled_majorants():
        certs.append(verify_positive_for_all_q(expr, ONE, qm, name=f"{case.family} assembled majorant < 1"))
    for i, other in enumerate(case.class_size_lb):
        if i != case.bound_class:
            certs.append(verify_positive_for_all_q(
                case.B, other.bound, qm, strict=False,
                name=f"{case.family} B(q) is the least class bound ({other.covers})"))
    semisimple = case.class_size_lb[0]
    quotient = RationalExpr(case.order_poly, case.maxcent, label="|G|/max|C(x)|")
    certs.append(verify_positive_for_all_q(
        semisimple.bound, quotient, qm, strict=semisimple.strict,
        name=f"{case.family} semisimple class bound follows from the centralizer bound"))
    for label, lower, value, strict in case.extra_consistency:
        certs.append(verify_positive_for_all_q(lower, value, qm, strict=strict, name=f"{case.family} {label}"))
    return FamilyReport(case, qm, tuple(certs))


def verify_family(family: str, q_min: int | None = None) -> FamilyReport:
    return verify_case(family_case(family), q_min)


@dataclass(frozen=True)
class ExceptionalSummary:
    reports: tuple[FamilyReport, ...]

    @property
    def verdict(self) -> bool:
        return all(r.verdict for r in self.reports)

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "families": [r.to_json() for r in self.reports]}

    def transcript(self) -> str:
        body = "\n\n".join(r.transcript() for r in self.reports)
        return body + f"\n\noverall: {'all certificates hold' if self.verdict else 'FAILED'}\n"


def verify_all(families=None, q_min: int | None = None) -> ExceptionalSummary:
    names = FAMILIES if families is None else resolve_families(families)
    return ExceptionalSummary(tuple(verify_family(f, q_min) for f in names))


def tamper_hall_bound(case: FamilyCase, delta: int) -> FamilyCase:
    """Copy of ``case`` whose first Hall-bound branch has ``delta`` added to its constant term."""
    first = case.hall_bound[0] + delta
    return replace(case, hall_bound=(first,) + case.hall_bound[1:])
