"""Labeled quadrilateral combinatorial maps on the sphere.

A map consists of f quadrilateral tiles, each with corners A, B, C, D
(carrying angles alpha, beta, gamma, delta) and edge slots AB, BC, CD, DA
(carrying edge labels a, b, c, a), a fixed-point-free gluing involution on
the 4f slots, and a per-tile orientation bit: 0 means the corners A,B,C,D
read counterclockwise on the sphere, 1 marks a mirror copy.  Vertices are
derived dart orbits.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .angles import VertexSignature
from .combinatorics import (
    CountingReport,
    DegreeVector,
    counting_identities,
    parity_admissible,
)

__all__ = [
    "SLOT_NAMES",
    "EDGE_LABELS",
    "CORNER_NAMES",
    "TilingError",
    "LabelMismatchError",
    "InvolutionError",
    "DisconnectedError",
    "EulerError",
    "OrientationError",
    "TilingMap",
    "VertexCycle",
    "build",
    "extract_avc",
    "verify",
    "VerifyReport",
    "balance_pair_counts",
]

SLOT_NAMES = ("AB", "BC", "CD", "DA")
EDGE_LABELS = ("a", "b", "c", "a")
CORNER_NAMES = ("A", "B", "C", "D")
CORNER_ANGLES = ("alpha", "beta", "gamma", "delta")


class TilingError(ValueError):
    """Base class for malformed tiling maps."""


class LabelMismatchError(TilingError):
    """Glued slots carry different edge labels."""


class InvolutionError(TilingError):
    """The glue table is not a fixed-point-free involution on all slots."""


class DisconnectedError(TilingError):
    """The tile adjacency graph is not connected."""


class EulerError(TilingError):
    """The Euler characteristic v - e + f differs from 2."""


class OrientationError(TilingError):
    """No consistent global orientation exists.

    With per-tile orientation bits every glue table yields an oriented
    surface by construction, so this error is unreachable from build(); it
    exists so callers can treat the full taxonomy uniformly.
    """


@dataclass(frozen=True)
class VertexCycle:
    """A vertex as a cyclic sequence of (tile, corner) incidences."""

    incidences: tuple[tuple[int, str], ...]

    @property
    def degree(self) -> int:
        return len(self.incidences)

    @property
    def signature(self) -> VertexSignature:
        counts = Counter(corner for _, corner in self.incidences)
        return VertexSignature(
            counts["A"], counts["B"], counts["C"], counts["D"])


@dataclass(frozen=True)
class TilingMap:
    """Immutable validated tiling map."""

    f: int
    glue: tuple[int, ...]
    orient: tuple[int, ...]
    vertices: tuple[VertexCycle, ...] = field(compare=False)

    # -- slot helpers -----------------------------------------------------

    @staticmethod
    def slot(tile: int, pos: int | str) -> int:
        if isinstance(pos, str):
            pos = SLOT_NAMES.index(pos)
        return 4 * tile + pos

    @staticmethod
    def tile_of(slot: int) -> int:
        return slot // 4

    @staticmethod
    def pos_of(slot: int) -> int:
        return slot % 4

    def edge_label(self, slot: int) -> str:
        return EDGE_LABELS[slot % 4]

    # -- dart structure ---------------------------------------------------

    def face_next(self, slot: int) -> int:
        """Next boundary dart of the same tile in global ccw order."""
        t, p = divmod(slot, 4)
        step = -1 if self.orient[t] else 1
        return 4 * t + (p + step) % 4

    def dart_start_corner(self, slot: int) -> int:
        """Corner index (0=A..3=D) at which this slot's ccw dart starts."""
        t, p = divmod(slot, 4)
        return (p + 1) % 4 if self.orient[t] else p

    def sigma(self, slot: int) -> int:
        """Next dart counterclockwise around the vertex at the dart start."""
        return self.face_next(self.glue[slot])

    # -- queries ----------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return 2 * self.f

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        """Each glued pair once, (smaller slot, larger slot), sorted."""
        return sorted(
            (s, self.glue[s]) for s in range(4 * self.f) if s < self.glue[s])

    def vertex_of_slot(self) -> dict[int, int]:
        """Map each slot (dart) to the index of the vertex it starts at."""
        out = {}
        for vi, cyc in enumerate(self.vertices):
            for slot in self._orbits[vi]:
                out[slot] = vi
        return out

    def degree_vector(self) -> DegreeVector:
        counts = Counter(v.degree for v in self.vertices)
        return DegreeVector(f=self.f, v=dict(counts))

    # filled in by build(); kept off the equality contract
    _orbits: tuple[tuple[int, ...], ...] = field(
        default=(), compare=False, repr=False)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> str:
        entries = []
        for s, t in self.edges():
            entries.append([
                self.tile_of(s), SLOT_NAMES[self.pos_of(s)],
                self.tile_of(t), SLOT_NAMES[self.pos_of(t)],
            ])
        return json.dumps(
            {"f": self.f, "glue": entries, "orient": list(self.orient)},
            separators=(", ", ": "))

    @staticmethod
    def from_json(text: str) -> "TilingMap":
        data = json.loads(text)
        f = data["f"]
        pairs = []
        for t1, s1, t2, s2 in data["glue"]:
            pairs.append(((t1, s1), (t2, s2)))
        return build(f, pairs, orient=data.get("orient"))

    # -- canonical form ---------------------------------------------------

    def canonical_form(self) -> tuple:
        """Minimal lexicographic relabeling over seed tiles and mirroring."""
        best = None
        for seed in range(self.f):
            for flip in (0, 1):
                form = self._relabel_from(seed, flip)
                if best is None or form < best:
                    best = form
        assert best is not None
        return best

    def _relabel_from(self, seed: int, flip: int) -> tuple:
        # canonical slot p of a tile corresponds to original slot mirror(p)
        # when flip is set (mirror: AB<->DA, BC<->CD)
        def orig_pos(p: int) -> int:
            return (3 - p) if flip else p

        new_of: dict[int, int] = {seed: 0}
        order = [seed]
        i = 0
        while i < len(order):
            t = order[i]
            i += 1
            for p in range(4):
                partner = self.glue[4 * t + orig_pos(p)]
                t2 = partner // 4
                if t2 not in new_of:
                    new_of[t2] = len(order)
                    order.append(t2)
        glue_desc = []
        orient_desc = []
        for t in order:
            for p in range(4):
                partner = self.glue[4 * t + orig_pos(p)]
                t2, p2 = divmod(partner, 4)
                canon_p2 = (3 - p2) if flip else p2
                glue_desc.append((new_of[t2], canon_p2))
            orient_desc.append(self.orient[t] ^ flip)
        return (self.f, tuple(glue_desc), tuple(orient_desc))

    def is_isomorphic(self, other: "TilingMap") -> bool:
        return self.canonical_form() == other.canonical_form()


SlotSpec = tuple[int, int | str]


def build(
    f: int,
    glue_table: Iterable[tuple[SlotSpec, SlotSpec]],
    orient: Sequence[int] | None = None,
) -> TilingMap:
    """Build and validate a TilingMap from 2f slot pairs."""
    if f < 1:
        raise TilingError(f"tile count must be positive, got {f}")
    if f % 2:
        raise EulerError(
            f"f must be even (f = 2 e_b forces it), got {f}")
    orient_bits = tuple(int(bool(x)) for x in (orient or [0] * f))
    if len(orient_bits) != f:
        raise TilingError("orientation bits must cover every tile")

    glue = [-1] * (4 * f)
    for (spec1, spec2) in glue_table:
        s1 = TilingMap.slot(*spec1)
        s2 = TilingMap.slot(*spec2)
        for s in (s1, s2):
            if not 0 <= s < 4 * f:
                raise TilingError(f"slot out of range: {s}")
        if s1 == s2:
            raise InvolutionError(f"slot glued to itself: {_slot_name(s1)}")
        if glue[s1] != -1 or glue[s2] != -1:
            raise InvolutionError(
                f"slot glued twice: {_slot_name(s1 if glue[s1] != -1 else s2)}")
        if EDGE_LABELS[s1 % 4] != EDGE_LABELS[s2 % 4]:
            raise LabelMismatchError(
                f"edge label mismatch: {_slot_name(s1)} ({EDGE_LABELS[s1 % 4]})"
                f" glued to {_slot_name(s2)} ({EDGE_LABELS[s2 % 4]})")
        glue[s1], glue[s2] = s2, s1
    missing = [s for s in range(4 * f) if glue[s] == -1]
    if missing:
        raise InvolutionError(
            f"unglued slots: {[_slot_name(s) for s in missing[:8]]}")

    # connectivity over tile adjacency
    seen = {0}
    stack = [0]
    while stack:
        t = stack.pop()
        for p in range(4):
            t2 = glue[4 * t + p] // 4
            if t2 not in seen:
                seen.add(t2)
                stack.append(t2)
    if len(seen) != f:
        raise DisconnectedError(
            f"map is disconnected: reached {len(seen)} of {f} tiles")

    m = TilingMap(f=f, glue=tuple(glue), orient=orient_bits,
                  vertices=(), _orbits=())
    orbits = _sigma_orbits(m)
    vertices = tuple(
        VertexCycle(tuple(
            (s // 4, CORNER_NAMES[m.dart_start_corner(s)]) for s in orbit))
        for orbit in orbits)
    m = TilingMap(f=f, glue=tuple(glue), orient=orient_bits,
                  vertices=vertices, _orbits=orbits)

    v = len(vertices)
    if v - 2 * f + f != 2:
        raise EulerError(
            f"Euler characteristic v - e + f = {v - 2 * f + f}, expected 2")
    return m


def _slot_name(slot: int) -> str:
    return f"tile {slot // 4} slot {SLOT_NAMES[slot % 4]}"


def _sigma_orbits(m: TilingMap) -> tuple[tuple[int, ...], ...]:
    seen = [False] * (4 * m.f)
    orbits = []
    for s0 in range(4 * m.f):
        if seen[s0]:
            continue
        orbit = []
        s = s0
        while not seen[s]:
            seen[s] = True
            orbit.append(s)
            s = m.sigma(s)
        orbits.append(tuple(orbit))
    return tuple(orbits)


def extract_avc(m: TilingMap) -> Counter[VertexSignature]:
    """Vertex signatures with multiplicities."""
    return Counter(v.signature for v in m.vertices)


def balance_pair_counts(m: TilingMap) -> tuple[int, int, int, int, int, int]:
    """Flanking-angle pair counts over edge endpoints.

    Returns (n_gg_c, n_gd_c, n_dd_c, n_bb_b, n_bg_b, n_gg_b): for each c-edge
    endpoint the two flanking corners are gamma or delta; for each b-edge
    endpoint they are beta or gamma.
    """
    c_counts = Counter()
    b_counts = Counter()
    for s, t in m.edges():
        pos = s % 4
        if pos not in (1, 2):
            continue
        for dart in (s, t):
            c1 = CORNER_NAMES[m.dart_start_corner(dart)]
            c2 = CORNER_NAMES[m.dart_start_corner(m.sigma(dart))]
            pair = frozenset((c1, c2)) if c1 != c2 else frozenset((c1,))
            (c_counts if pos == 2 else b_counts)[pair] += 1
    gg = frozenset("C")
    return (
        c_counts[gg], c_counts[frozenset("CD")], c_counts[frozenset("D")],
        b_counts[frozenset("B")], b_counts[frozenset("BC")], b_counts[gg],
    )


@dataclass
class VerifyReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list[str]:
        return [f"{name}: {detail}" for name, ok, detail in self.checks
                if not ok]

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    def __str__(self) -> str:
        lines = []
        for name, ok, detail in self.checks:
            mark = "PASS" if ok else "FAIL"
            suffix = f" ({detail})" if detail and not ok else ""
            lines.append(f"[{mark}] {name}{suffix}")
        return "\n".join(lines)


def verify(
    m: TilingMap,
    expected: Mapping[VertexSignature, int] | Iterable[VertexSignature],
    f: int | None = None,
) -> VerifyReport:
    """Full verification: structure, AVC match, parity, counting, balance."""
    report = VerifyReport()
    if f is not None:
        report.add("tile count", m.f == f, f"map has f={m.f}, expected {f}")

    report.add("glue involution",
               all(m.glue[m.glue[s]] == s and m.glue[s] != s
                   for s in range(4 * m.f)))
    report.add("edge labels", all(
        EDGE_LABELS[s % 4] == EDGE_LABELS[m.glue[s] % 4]
        for s in range(4 * m.f)))
    report.add("edge counts e_a = f, e_b = e_c = f/2", _edge_counts_ok(m))

    avc = extract_avc(m)
    if isinstance(expected, Mapping):
        exp_counter = Counter(dict(expected))
        ok = avc == exp_counter
        detail = f"got {_avc_str(avc)}, expected {_avc_str(exp_counter)}"
    else:
        exp_set = set(expected)
        ok = set(avc) == exp_set
        detail = (f"got vertex types {sorted(map(str, avc))}, "
                  f"expected {sorted(map(str, exp_set))}")
    report.add("AVC matches expected", ok, detail)

    bad = [v for v in avc if not parity_admissible(v)]
    report.add("all vertices parity-admissible", not bad,
               f"violations: {[str(v) for v in bad]}")

    counting = counting_identities(m.degree_vector())
    report.add("counting identities", counting.passed,
               "; ".join(counting.failures))

    n_gg_c, _, n_dd_c, n_bb_b, _, n_gg_b = balance_pair_counts(m)
    report.add("balance: gamma-gamma = delta-delta c-endpoints",
               n_gg_c == n_dd_c, f"{n_gg_c} != {n_dd_c}")
    report.add("balance: beta-beta = gamma-gamma b-endpoints",
               n_bb_b == n_gg_b, f"{n_bb_b} != {n_gg_b}")

    sig_total = [0, 0, 0, 0]
    for v, mult in avc.items():
        for i, e in enumerate(v.exponents):
            sig_total[i] += mult * e
    report.add("#alpha = #beta = #gamma = #delta = f",
               all(x == m.f for x in sig_total), f"totals {sig_total}")
    return report


def _edge_counts_ok(m: TilingMap) -> bool:
    counts = Counter(EDGE_LABELS[s % 4] for s, _ in m.edges())
    return (counts["a"] == m.f and counts["b"] == m.f // 2
            and counts["c"] == m.f // 2)


def _avc_str(avc: Mapping[VertexSignature, int]) -> str:
    from .combinatorics import catalog_sort_key
    items = sorted(avc.items(), key=lambda kv: catalog_sort_key(kv[0]))
    return " ".join(f"{sig}×{n}" for sig, n in items)
