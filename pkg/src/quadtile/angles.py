"""Exact angle algebra for the a2bc quadrilateral tile.

Tile angles are affine rational expressions in the basis {pi, pi/f}, where f
is the (even, >= 6) number of tiles.  Vertex angle-sum systems are solved
exactly over the rationals, with f kept symbolic; some systems pin f to a
concrete value, which is reported on the solution.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "AngleExpr",
    "VertexSignature",
    "AngleSolution",
    "ANGLE_NAMES",
    "quad_sum_residual",
    "vertex_sum_residual",
    "solve_angle_system",
]

ANGLE_NAMES = ("alpha", "beta", "gamma", "delta")

_GREEK = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ"}
_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _frac(x: int | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class AngleExpr:
    """An angle c0*pi + c1*pi/f with rational coefficients."""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c0", _frac(self.c0))
        object.__setattr__(self, "c1", _frac(self.c1))

    @staticmethod
    def pi(coeff: int | Fraction = 1) -> "AngleExpr":
        return AngleExpr(_frac(coeff), Fraction(0))

    @staticmethod
    def pi_over_f(coeff: int | Fraction = 1) -> "AngleExpr":
        return AngleExpr(Fraction(0), _frac(coeff))

    def __add__(self, other: "AngleExpr") -> "AngleExpr":
        return AngleExpr(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other: "AngleExpr") -> "AngleExpr":
        return AngleExpr(self.c0 - other.c0, self.c1 - other.c1)

    def __neg__(self) -> "AngleExpr":
        return AngleExpr(-self.c0, -self.c1)

    def __mul__(self, k: int | Fraction) -> "AngleExpr":
        k = _frac(k)
        return AngleExpr(self.c0 * k, self.c1 * k)

    __rmul__ = __mul__

    def coefficient_of_pi(self, f: int | Fraction) -> Fraction:
        """Exact value divided by pi, at a concrete f."""
        return self.c0 + self.c1 / _frac(f)

    def eval(self, f: int | Fraction) -> float:
        """Numeric value in radians at a concrete f."""
        return float(self.coefficient_of_pi(f)) * math.pi

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def __str__(self) -> str:
        terms = []
        if self.c0:
            terms.append(_pi_term(self.c0, "π"))
        if self.c1:
            terms.append(_pi_term(self.c1, "π/f"))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def _pi_term(coeff: Fraction, unit: str) -> str:
    sign = "-" if coeff < 0 else ""
    coeff = abs(coeff)
    num, den = coeff.numerator, coeff.denominator
    head = "" if num == 1 else str(num)
    if unit == "π/f":
        body = f"{head}π/f" if den == 1 else f"{head}π/({den}f)"
    else:
        body = f"{head}π" if den == 1 else f"{head}π/{den}"
    return sign + body


@dataclass(frozen=True, order=True)
class VertexSignature:
    """Exponent vector alpha^a beta^b gamma^c delta^d of a vertex."""

    a: int
    b: int
    c: int
    d: int

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c + self.d

    @property
    def exponents(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        parts = []
        for name, e in zip(ANGLE_NAMES, self.exponents):
            if e == 1:
                parts.append(_GREEK[name])
            elif e > 1:
                parts.append(_GREEK[name] + str(e).translate(_SUPERSCRIPTS))
        return "".join(parts) or "1"

    @staticmethod
    def parse(text: str) -> "VertexSignature":
        """Parse 'αβ²', 'ab2', 'a1b2', 'alpha beta^2'-style signature text."""
        s = text.strip().lower()
        for name, g in _GREEK.items():
            s = s.replace(g, name[0])
        s = s.replace("alpha", "a").replace("beta", "b")
        s = s.replace("gamma", "g").replace("delta", "d")
        s = s.translate(_SUPERSCRIPTS_INV)
        s = re.sub(r"[\s^*]", "", s)
        if not re.fullmatch(r"([abgd]\d*)+", s):
            raise ValueError(f"cannot parse vertex signature: {text!r}")
        exps = {"a": 0, "b": 0, "g": 0, "d": 0}
        for letter, digits in re.findall(r"([abgd])(\d*)", s):
            exps[letter] += int(digits) if digits else 1
        return VertexSignature(exps["a"], exps["b"], exps["g"], exps["d"])


_SUPERSCRIPTS_INV = {ord(sup): str(i) for i, sup in enumerate(
    "⁰¹²³⁴⁵⁶⁷⁸⁹")}


def quad_sum_residual(
    angles: Sequence[AngleExpr], f: int | Fraction
) -> Fraction:
    """alpha+beta+gamma+delta - (2 + 4/f) pi, as an exact multiple of pi."""
    total = AngleExpr()
    for ang in angles:
        total = total + ang
    target = AngleExpr(Fraction(2), Fraction(4))
    return (total - target).coefficient_of_pi(f)


def vertex_sum_residual(
    sig: VertexSignature, angles: Sequence[AngleExpr], f: int | Fraction
) -> Fraction:
    """a*alpha + b*beta + c*gamma + d*delta - 2 pi, as a multiple of pi."""
    total = AngleExpr()
    for e, ang in zip(sig.exponents, angles):
        total = total + e * ang
    return (total - AngleExpr.pi(2)).coefficient_of_pi(f)


@dataclass(frozen=True)
class AngleSolution:
    """Solution of a vertex angle-sum system.

    kind is 'unique', 'parametric', or 'infeasible'.  For unique solutions,
    ``assignment`` maps each angle name to an AngleExpr (possibly involving
    the symbolic 1/f).  Parametric solutions additionally list ``free`` angle
    names and express the pivot angles in ``relations`` as a constant
    AngleExpr plus rational multiples of the free angles.  ``pinned_f``
    reports the value of f when the system forces one.
    """

    kind: str
    assignment: Mapping[str, AngleExpr] | None = None
    free: tuple[str, ...] = ()
    relations: Mapping[str, tuple[AngleExpr, Mapping[str, Fraction]]] | None = None
    pinned_f: Fraction | None = None

    def angles(self) -> tuple[AngleExpr, AngleExpr, AngleExpr, AngleExpr]:
        if self.kind != "unique" or self.assignment is None:
            raise ValueError("angles() requires a unique solution")
        return tuple(self.assignment[n] for n in ANGLE_NAMES)  # type: ignore[return-value]


def solve_angle_system(
    signatures: Iterable[VertexSignature],
    include_quad_sum: bool = True,
    f: int | None = None,
) -> AngleSolution:
    """Exactly solve the linear system of vertex angle sums.

    Unknowns are (alpha, beta, gamma, delta, x) with x = pi/f, all in units
    of pi: each signature contributes a*alpha+b*beta+c*gamma+d*delta = 2pi,
    and the quadrilateral sum contributes alpha+beta+gamma+delta = 2pi + 4x.
    Passing a concrete ``f`` adds the equation x = pi/f.
    """
    sigs = sorted(set(signatures))
    if not sigs:
        raise ValueError("signature set must be nonempty")
    rows: list[list[Fraction]] = []
    for s in sigs:
        rows.append([Fraction(e) for e in s.exponents] + [Fraction(0), Fraction(2)])
    if include_quad_sum:
        rows.append([Fraction(1)] * 4 + [Fraction(-4), Fraction(2)])
    if f is not None:
        rows.append([Fraction(0)] * 4 + [Fraction(1), Fraction(1, f)])
    return _solve_rows(rows)


# Pivot preference: delta, gamma, beta, alpha, then x — so free variables
# surface in the canonical order alpha, beta, gamma, delta, and f stays
# symbolic whenever the system permits.
_PIVOT_ORDER = (3, 2, 1, 0, 4)
_VAR_NAMES = ANGLE_NAMES + ("x",)


def _solve_rows(rows: list[list[Fraction]]) -> AngleSolution:
    rows = [row[:] for row in rows]
    pivots: dict[int, list[Fraction]] = {}
    for col in _PIVOT_ORDER:
        pivot_row = None
        for row in rows:
            if row[col] != 0:
                pivot_row = row
                break
        if pivot_row is None:
            continue
        rows.remove(pivot_row)
        inv = 1 / pivot_row[col]
        pivot_row = [v * inv for v in pivot_row]
        for other in list(pivots.values()) + rows:
            if other[col] != 0:
                factor = other[col]
                for i in range(6):
                    other[i] -= factor * pivot_row[i]
        pivots[col] = pivot_row
    for row in rows:
        if any(row[i] != 0 for i in range(5)):
            raise AssertionError("elimination left an unreduced row")
        if row[5] != 0:
            return AngleSolution(kind="infeasible")

    free_cols = [i for i in range(5) if i not in pivots]
    free_angles = tuple(_VAR_NAMES[i] for i in free_cols if i != 4)

    pinned_f: Fraction | None = None
    if 4 in pivots:
        xrow = pivots[4]
        if all(xrow[i] == 0 for i in range(4)):
            if xrow[5] == 0:
                return AngleSolution(kind="infeasible")
            pinned_f = 1 / xrow[5]

    def expr_of(col: int) -> tuple[AngleExpr, dict[str, Fraction]]:
        """Express variable `col` as const + coeff*free-angles (+ x term)."""
        if col not in pivots:
            if col == 4:
                return AngleExpr.pi_over_f(1), {}
            return AngleExpr(), {_VAR_NAMES[col]: Fraction(1)}
        row = pivots[col]
        const = AngleExpr.pi(row[5])
        coeffs: dict[str, Fraction] = {}
        for j in range(5):
            if j == col or row[j] == 0:
                continue
            sub_const, sub_coeffs = expr_of(j)
            const = const - row[j] * sub_const
            for name, k in sub_coeffs.items():
                coeffs[name] = coeffs.get(name, Fraction(0)) - row[j] * k
        coeffs = {n: k for n, k in coeffs.items() if k != 0}
        return const, coeffs

    relations = {}
    assignment = {}
    for i, name in enumerate(ANGLE_NAMES):
        const, coeffs = expr_of(i)
        if pinned_f is not None:
            const = AngleExpr.pi(const.coefficient_of_pi(pinned_f))
        relations[name] = (const, coeffs)
        if not coeffs:
            assignment[name] = const

    if not free_angles:
        return AngleSolution(
            kind="unique",
            assignment=assignment,
            relations=relations,
            pinned_f=pinned_f,
        )
    return AngleSolution(
        kind="parametric",
        assignment=None,
        free=free_angles,
        relations=relations,
        pinned_f=pinned_f,
    )
