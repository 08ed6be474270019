"""Vertex catalog, parity/balance predicates, counting identities, and the
anglewise-vertex-combination (AVC) feasibility search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .angles import (
    ANGLE_NAMES,
    AngleExpr,
    AngleSolution,
    VertexSignature,
    solve_angle_system,
)

__all__ = [
    "parity_admissible",
    "angles_feasible",
    "degree_vertex_catalog",
    "catalog_sort_key",
    "DegreeVector",
    "CountingReport",
    "counting_identities",
    "avc_feasibility",
    "AVCCandidate",
    "search_avcs",
    "KNOWN_UNREALIZABLE",
]


def parity_admissible(sig: VertexSignature) -> bool:
    """Whether the signature can occur at a vertex (degree >= 3 and the
    allowed exponent-parity shapes)."""
    a, b, c, d = sig.exponents
    if sig.degree < 3:
        return False
    if a > 0:
        if b % 2 or c % 2 or d % 2:
            return False
        if c > 0 and b == 0 and d == 0:
            return False  # alpha^a gamma^c is never a vertex
        if b > 0 and c > 0 and d > 0:
            return False  # no vertex contains all four angles
        return True
    if b % 2 == 0 and c % 2 == 0 and d % 2 == 0:
        return True
    return b % 2 == 1 and c % 2 == 1 and d % 2 == 1 and b > 0 and c > 0 and d > 0


def angles_feasible(signatures: Iterable[VertexSignature], f: int) -> bool:
    """Whether the vertex angle-sum system admits angle values in (0, 2pi)
    with at most one reflex angle (and beta != delta unless gamma = pi)."""
    sol = solve_angle_system(signatures, include_quad_sum=True, f=f)
    node = _node_of(sol, f)
    return node is not None and _node_witness(node) is not None


def catalog_sort_key(sig: VertexSignature) -> tuple:
    """Deterministic catalog order: by degree, then descending exponents."""
    return (sig.degree, -sig.a, -sig.b, -sig.c, -sig.d)


def degree_vertex_catalog(k: int) -> list[VertexSignature]:
    """All admissible vertex signatures of degree k, for k in {3, 4, 5}."""
    if k not in (3, 4, 5):
        raise ValueError(f"degree must be 3, 4 or 5, got {k}")
    return _signatures_of_degree(k)


def _signatures_of_degree(k: int) -> list[VertexSignature]:
    out = []
    for a in range(k + 1):
        for b in range(k - a + 1):
            for c in range(k - a - b + 1):
                sig = VertexSignature(a, b, c, k - a - b - c)
                if parity_admissible(sig):
                    out.append(sig)
    return sorted(out, key=catalog_sort_key)


@dataclass(frozen=True)
class DegreeVector:
    """Counts of degree-h vertices, h >= 3, for a tiling with f tiles."""

    f: int
    v: Mapping[int, int]

    @property
    def vertex_count(self) -> int:
        return sum(self.v.values())


@dataclass
class CountingReport:
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.checks if not ok]

    def add(self, name: str, ok: bool) -> None:
        self.checks.append((name, ok))


def counting_identities(dv: DegreeVector) -> CountingReport:
    """Check the Euler-derived counting identities for a degree vector."""
    report = CountingReport()
    f = dv.f
    v3 = dv.v.get(3, 0)
    high = {h: n for h, n in dv.v.items() if h >= 4}
    report.add("all degree counts nonnegative",
               all(n >= 0 for n in dv.v.values()) and all(h >= 3 for h in dv.v))
    report.add("f even", f % 2 == 0)
    report.add("v3 = 8 + sum (h-4) v_h",
               v3 == 8 + sum((h - 4) * n for h, n in high.items()))
    report.add("f = 6 + sum (h-3) v_h",
               f == 6 + sum((h - 3) * n for h, n in high.items()))
    e = 2 * f
    v = dv.vertex_count
    report.add("sum h v_h = 2e", sum(h * n for h, n in dv.v.items()) == 2 * e)
    report.add("v - e + f = 2", v - e + f == 2)
    return report


def avc_feasibility(
    signatures: Iterable[VertexSignature], f: int,
    require_all_used: bool = True,
) -> list[dict[VertexSignature, int]]:
    """All multiplicity vectors with #alpha = #beta = #gamma = #delta = f and
    sum n_v = f + 2 (the Euler vertex count, which subsumes the degree-count
    identities).  By default every listed signature must be used (n_v >= 1,
    the "AVC identically equal" reading); pass require_all_used=False for
    nonnegative vectors."""
    sigs = sorted(set(signatures), key=catalog_sort_key)
    results: list[dict[VertexSignature, int]] = []
    n = len(sigs)
    lo = 1 if require_all_used else 0

    # suffix bounds for pruning: the largest per-angle exponent and the
    # degree range among signatures i..n-1
    sufmax = [(0, 0, 0, 0)] * (n + 1)
    sufdeg = [(0, 0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        a, b, c, d = sigs[i].exponents
        pa, pb, pc, pd = sufmax[i + 1]
        sufmax[i] = (max(a, pa), max(b, pb), max(c, pc), max(d, pd))
        dmin, dmax = sufdeg[i + 1]
        deg = sigs[i].degree
        sufdeg[i] = (deg if dmin == 0 else min(deg, dmin), max(deg, dmax))

    def rec(i: int, counts: dict[VertexSignature, int],
            ra: int, rb: int, rc: int, rd: int, rv: int) -> None:
        if i == n:
            if ra == rb == rc == rd == rv == 0:
                results.append(dict(counts))
            return
        # each remaining vertex uses one remaining signature, so the leftover
        # angle slots are bounded by the suffix exponent and degree ranges
        ma, mb, mc, md = sufmax[i]
        if ra > rv * ma or rb > rv * mb or rc > rv * mc or rd > rv * md:
            return
        dmin, dmax = sufdeg[i]
        total = ra + rb + rc + rd
        if total > rv * dmax or total < rv * dmin:
            return
        sig = sigs[i]
        a, b, c, d = sig.exponents
        bounds = [rv - lo * (n - 1 - i)]  # room for the later signatures
        for e, r in ((a, ra), (b, rb), (c, rc), (d, rd)):
            if e:
                bounds.append(r // e)
        hi = min(bounds)
        for m in range(lo, hi + 1):
            counts[sig] = m
            rec(i + 1, counts, ra - m * a, rb - m * b, rc - m * c,
                rd - m * d, rv - m)
        counts.pop(sig, None)

    rec(0, {}, f, f, f, f, f + 2)
    results.sort(key=lambda mult: sorted(
        (catalog_sort_key(s), m) for s, m in mult.items()))
    return results


@dataclass(frozen=True)
class AVCCandidate:
    """A candidate AVC: signatures with multiplicities, the solved angles,
    and a flag for combinations known to admit no tiling."""

    f: int
    signatures: tuple[VertexSignature, ...]
    multiplicities: tuple[int, ...]
    angles: tuple[AngleExpr, AngleExpr, AngleExpr, AngleExpr] | None
    known_unrealizable: bool = False

    def __str__(self) -> str:
        body = ", ".join(
            f"{s}×{m}" for s, m in zip(self.signatures, self.multiplicities))
        flag = "  [no tiling exists]" if self.known_unrealizable else ""
        return "{" + body + "}" + flag


#: Support sets proved untileable despite being angle- and count-feasible.
KNOWN_UNREALIZABLE: tuple[frozenset[VertexSignature], ...] = (
    frozenset({VertexSignature(1, 2, 0, 0), VertexSignature(0, 0, 2, 2)}),
)


def _is_known_unrealizable(support: frozenset[VertexSignature]) -> bool:
    return any(bad <= support for bad in KNOWN_UNREALIZABLE)


def search_avcs(
    f: int,
    max_degree: int | None = None,
    max_low_subset: int = 6,
    max_high_subset: int = 2,
) -> list[AVCCandidate]:
    """Enumerate angle- and count-feasible AVCs at a concrete f.

    Subsets of the degree-3/4/5 catalog (at most ``max_low_subset``) are
    combined with up to ``max_high_subset`` admissible signatures of degree
    6..max_degree.  A candidate must admit angle values with all four angles
    in (0, 2pi), at most one angle >= pi, beta != delta unless gamma = pi,
    and an all-positive multiplicity vector.  Results are a superset of the
    AVCs of actual tilings; known-untileable combinations are flagged.
    """
    if f < 6 or f % 2:
        raise ValueError(f"f must be even and >= 6, got {f}")
    if max_degree is None:
        max_degree = max(f // 2, 6)
    if max_degree < 3:
        raise ValueError("max_degree must be >= 3")

    low = [s for k in (3, 4, 5) if k <= max_degree
           for s in degree_vertex_catalog(k)]
    high = [s for k in range(6, max_degree + 1)
            for s in _signatures_of_degree(k)
            if max(s.exponents) <= f]

    found: dict[tuple, AVCCandidate] = {}

    # extension results depend only on the node's solution set, not on which
    # subset produced it, so cache on the canonical relations
    ext_cache: dict[tuple, object] = {}

    # canonical key per live node (the entry keeps the node alive, so the
    # id key stays valid)
    key_cache: dict[int, tuple] = {}

    def _key(node) -> tuple:
        entry = key_cache.get(id(node))
        if entry is None or entry[0] is not node:
            entry = (node, _node_key(node))
            key_cache[id(node)] = entry
        return entry[1]

    def _extend(base, extra):
        """Node for base+extra if feasible with a positive witness, else
        None; computed by incremental substitution into the base relations
        and cached on (base node, extra)."""
        key = (_key(base), tuple(sorted(s.exponents for s in extra)))
        if key not in ext_cache:
            node = base
            for s in extra:
                status = _node_status(node, s)
                if status == "infeasible":
                    node = None
                    break
                if status == "pins":
                    node = _node_pin(node, s)
            if node is not None and _node_witness(node) is None:
                node = None
            ext_cache[key] = node
        return ext_cache[key]

    def consider(subset: list[VertexSignature], node) -> None:
        support = frozenset(subset)
        sigs = tuple(sorted(subset, key=catalog_sort_key))
        key = tuple(s.exponents for s in sigs)
        if key in found:
            return
        mults = avc_feasibility(subset, f)
        if not mults:
            return
        free, rel = node
        exprs = None
        if not free:
            exprs = tuple(AngleExpr.pi(rel[n][0]) for n in ANGLE_NAMES)
        counts = mults[0]
        found[key] = AVCCandidate(
            f=f,
            signatures=sigs,
            multiplicities=tuple(counts[s] for s in sigs),
            angles=exprs,
            known_unrealizable=_is_known_unrealizable(support),
        )

    # compatible high signatures (with their statuses) depend only on the
    # node's solution set, so share them across subsets with equal solutions
    comp_cache: dict[tuple, tuple] = {}

    def _compatible_high(base):
        key = _key(base)
        if key not in comp_cache:
            compatible = []
            statuses = {}
            for s in high:
                status = _node_status(base, s)
                if status == "redundant" or (
                        status == "pins"
                        and _extend(base, [s]) is not None):
                    compatible.append(s)
                    statuses[s] = status
            comp_cache[key] = (compatible, statuses)
        return comp_cache[key]

    def extend_high(subset: list[VertexSignature], base) -> None:
        consider(subset, base)
        if max_high_subset == 0:
            return
        # classify each high signature against the solved base relations:
        # redundant ones keep the solution set, rank-raising ones re-solve
        compatible, statuses = _compatible_high(base)
        for r in range(1, max_high_subset + 1):
            for combo in itertools.combinations(compatible, r):
                if all(statuses[s] == "redundant" for s in combo):
                    consider(subset + list(combo), base)
                    continue
                node = _extend(base, list(combo))
                if node is not None:
                    consider(subset + list(combo), node)

    def rec_low(start: int, subset: list[VertexSignature], node) -> None:
        if subset:
            extend_high(subset, node)
        if len(subset) == max_low_subset:
            return
        for i in range(start, len(low)):
            s = low[i]
            status = "pins" if node is None else _node_status(node, s)
            if status == "infeasible":
                continue
            if status == "redundant":
                child = node
            elif node is not None:
                child = _extend(node, [s])
                if child is None:
                    continue
            else:
                child = _node_of(
                    solve_angle_system([s], include_quad_sum=True, f=f), f)
                if child is None or _node_witness(child) is None:
                    continue
            subset.append(s)
            rec_low(i + 1, subset, child)
            subset.pop()

    rec_low(0, [], None)
    return sorted(found.values(),
                  key=lambda c: (len(c.signatures),
                                 tuple(s.exponents for s in c.signatures)))


# Inside the search a solved vertex-angle system at concrete f is carried as
# a lightweight "node" (free, rel): free is the tuple of free angle names and
# rel maps every angle name to (const, coeffs) with const a plain Fraction
# (a multiple of pi) and coeffs rational multiples of the free angles.


def _node_of(sol: AngleSolution, f) -> tuple | None:
    """Node view of a solver result at concrete f; None if infeasible."""
    if sol.kind == "infeasible" or sol.relations is None:
        return None
    rel = {n: (sol.relations[n][0].coefficient_of_pi(f),
               dict(sol.relations[n][1])) for n in ANGLE_NAMES}
    return (tuple(sol.free), rel)


def _node_key(node) -> tuple:
    """Canonical hashable form of a node's relations."""
    _, rel = node
    return tuple((n, rel[n][0], tuple(sorted(rel[n][1].items())))
                 for n in ANGLE_NAMES)


def _node_equation(node, sig: VertexSignature) -> tuple[Fraction, dict]:
    """sig's angle-sum equation const + sum(coeffs * free) = 2 under the
    node's relations."""
    _, rel = node
    const = Fraction(0)
    coeffs: dict[str, Fraction] = {}
    for e, name in zip(sig.exponents, ANGLE_NAMES):
        if not e:
            continue
        c0, cf = rel[name]
        const += e * c0
        for n, k in cf.items():
            coeffs[n] = coeffs.get(n, 0) + e * k
    return const, coeffs


def _node_status(node, sig: VertexSignature) -> str:
    """Effect of adding sig's angle-sum equation to a solved system:
    'redundant' (solution set unchanged), 'infeasible', or 'pins' (the rank
    increases, so a free angle gets substituted away)."""
    const, coeffs = _node_equation(node, sig)
    if any(coeffs.values()):
        return "pins"
    return "redundant" if const == 2 else "infeasible"


def _node_pin(node, sig: VertexSignature) -> tuple:
    """Node for node plus sig's angle-sum equation, computed by substituting
    the newly pinned free angle into the base relations.  Only valid when
    ``_node_status(node, sig) == 'pins'``."""
    free, rel = node
    const, coeffs = _node_equation(node, sig)
    pivot = next(n for n in free if coeffs.get(n))
    cp = coeffs[pivot]
    # pivot = sub_const + sum(sub_coeffs[n] * n) over the remaining free angles
    sub_const = (2 - const) / cp
    sub_coeffs = {n: -k / cp for n, k in coeffs.items() if n != pivot and k}
    new_rel = {}
    for name in ANGLE_NAMES:
        c0, cf = rel[name]
        k = cf.get(pivot)
        if not k:
            new_rel[name] = (c0, cf)
            continue
        new_cf = {n: v for n, v in cf.items() if n != pivot}
        for n, v in sub_coeffs.items():
            new_cf[n] = new_cf.get(n, 0) + k * v
        new_rel[name] = (c0 + k * sub_const,
                         {n: v for n, v in new_cf.items() if v})
    return (tuple(n for n in free if n != pivot), new_rel)


def _node_witness(node) -> dict[str, Fraction] | None:
    """A witness assignment (multiples of pi) with all angles in (0, 2),
    at most one >= 1, and beta != delta unless gamma = 1; None if impossible."""
    free, rel = node

    def value(name: str, assign: dict[str, Fraction]) -> Fraction:
        const, coeffs = rel[name]
        v = const
        for n, k in coeffs.items():
            v += k * assign[n]
        return v

    if not free:
        vals = {n: rel[n][0] for n in ANGLE_NAMES}
        return vals if _angles_ok(vals) else None

    # Sample the free angles on a coarse rational grid; the constraint region
    # is an open polytope, so a modest grid finds a witness when one exists.
    # Scan in float first (all quantities are rationals with moderate
    # denominators, so a 1e-9 margin cannot misclassify) and confirm the
    # winning grid point exactly.
    consts = {n: float(rel[n][0]) for n in ANGLE_NAMES}
    coefs = {n: [(fn, float(k)) for fn, k in rel[n][1].items()]
             for n in ANGLE_NAMES}
    for ks in itertools.product(range(1, 16), repeat=len(free)):
        approx = dict(zip(free, (k / 8 for k in ks)))
        vals_f = {n: consts[n] + sum(k * approx[fn] for fn, k in coefs[n])
                  for n in ANGLE_NAMES}
        if not _angles_ok_float(vals_f):
            continue
        assign = dict(zip(free, (Fraction(k, 8) for k in ks)))
        vals = {n: value(n, assign) for n in ANGLE_NAMES}
        if _angles_ok(vals):
            return vals
    return None


def _angles_ok_float(vals: Mapping[str, float], eps: float = 1e-9) -> bool:
    if any(v <= eps or v >= 2 - eps for v in vals.values()):
        return False
    if sum(1 for v in vals.values() if v >= 1 - eps) > 1:
        return False
    if abs(vals["beta"] - vals["delta"]) < eps and abs(vals["gamma"] - 1) > eps:
        return False
    return True


def _angles_ok(vals: Mapping[str, Fraction]) -> bool:
    if any(v <= 0 or v >= 2 for v in vals.values()):
        return False
    if sum(1 for v in vals.values() if v >= 1) > 1:
        return False
    if vals["beta"] == vals["delta"] and vals["gamma"] != 1:
        return False
    return True
