"""Constructors: earth map families, subdivisions, flips, derived families."""

import random

import pytest

from quadtile.angles import VertexSignature
from quadtile.constructors import (
    DomainError,
    FlipInvalidError,
    decompose_time_zones,
    earth_map,
    family_alphadelta,
    family_beta2delta,
    flip_segment,
    pq_earth_map,
    quad_subdivide,
)
from quadtile.tilingmap import extract_avc, verify


def sig(text: str) -> VertexSignature:
    return VertexSignature.parse(text)


class TestEarthMap:
    @pytest.mark.parametrize("f", [6, 8, 10, 12, 50])
    def test_verify(self, f):
        # [PAPER] AVC == {bgd x f, alpha^{f/2} x 2}
        m = earth_map(f)
        expected = {sig("bgd"): f, VertexSignature(f // 2, 0, 0, 0): 2}
        report = verify(m, expected, f=f)
        assert report.passed, report.failures

    def test_f6_is_cube_combinatorially(self):
        # [PAPER] f=6 tiling: all vertices degree 3, v=8
        m = earth_map(6)
        assert m.vertex_count == 8
        assert all(v.degree == 3 for v in m.vertices)

    def test_domain(self):
        # [TRIVIAL]
        for bad in (4, 7, 0):
            with pytest.raises(DomainError):
                earth_map(bad)


class TestPQEarthMap:
    @pytest.mark.parametrize("f,polar", [(16, "d4"), (24, "d6"), (32, "d8")])
    def test_verify(self, f, polar):
        # [PAPER] AVC == {ab2 x f/2, a2d2 x f/4, g4 x f/4, delta^{f/4} x 2}
        m = pq_earth_map(f)
        expected = {sig("ab2"): f // 2, sig("a2d2"): f // 4,
                    sig("g4"): f // 4, sig(polar): 2}
        report = verify(m, expected, f=f)
        assert report.passed, report.failures

    def test_zones(self):
        # [PAPER] composed of f/8 eight-tile zones
        zones = decompose_time_zones(pq_earth_map(24))
        assert len(zones) == 3
        assert all(len(z.tiles) == 8 for z in zones)
        assert not any(z.flipped for z in zones)

    def test_domain(self):
        # [TRIVIAL]
        for bad in (8, 12, 20):
            with pytest.raises(DomainError):
                pq_earth_map(bad)


class TestSubdivisions:
    def test_cube(self):
        # [PAPER] {a3:8, b2d2:12, g4:6}
        report = verify(quad_subdivide("cube"),
                        {sig("a3"): 8, sig("b2d2"): 12, sig("g4"): 6}, f=24)
        assert report.passed, report.failures

    def test_octahedron(self):
        # [PAPER] isomorphic to the cube subdivision
        report = verify(quad_subdivide("octahedron"),
                        {sig("a3"): 8, sig("b2d2"): 12, sig("g4"): 6}, f=24)
        assert report.passed, report.failures

    def test_prism(self):
        # [PAPER] AVC == {a3, ab2, a2d2, b2d2, g4}
        m = quad_subdivide("triangular_prism")
        report = verify(
            m, [sig("a3"), sig("ab2"), sig("a2d2"), sig("b2d2"), sig("g4")],
            f=24)
        assert report.passed, report.failures

    def test_unknown_base(self):
        # [TRIVIAL]
        with pytest.raises(DomainError):
            quad_subdivide("dodecahedron")


class TestFlip:
    def test_whole_zone_flip_avc(self):
        # [PAPER] one flipped zone of the f=24 pq map gives
        # {ab2, a2d2, g4, ad4}
        m = flip_segment(pq_earth_map(24), 0, 1)
        assert set(extract_avc(m)) == {
            sig("ab2"), sig("a2d2"), sig("g4"), sig("ad4")}

    def test_involution(self):
        # [DERIVED] flipping the same segment twice returns the original map
        base = pq_earth_map(24)
        m = flip_segment(base, 1, 1)
        assert not m.is_isomorphic(base)
        again = flip_segment(m, 1, 1)
        assert again.is_isomorphic(base)

    def test_involution_random(self):
        # [DERIVED] 10 random admissible segments, flip twice = identity
        rng = random.Random(7)
        cases = []
        for f in (24, 40):
            k = f // 8
            cases += [(f, s, c, False)
                      for s in range(k) for c in range(1, k)]
            cases += [(f, s, c, True)
                      for s in range(2 * k) for c in range(1, 2 * k, 2)]
        for f, start, count, half in rng.sample(cases, 20):
            base = pq_earth_map(f)
            try:
                m = flip_segment(base, start, count, half_zones=half)
            except FlipInvalidError:
                continue  # inadmissible segment: nothing to check
            again = flip_segment(m, start, count, half_zones=half)
            assert again.is_isomorphic(base), (f, start, count, half)

    def test_earth_map_not_flippable(self):
        # [DERIVED] two-tile zones leave no admissible reflection axis
        with pytest.raises(FlipInvalidError):
            flip_segment(earth_map(10), 0, 2)

    def test_not_decomposable(self):
        # [TRIVIAL] the cube subdivision has no time-zone structure
        with pytest.raises(DomainError):
            decompose_time_zones(quad_subdivide("cube"))


class TestFamilies:
    @pytest.mark.parametrize("f", [24, 40])
    def test_alphadelta(self, f):
        # [PAPER] AVC == {ab2, a2d2, g4, alpha delta^{(f+8)/8}}
        m = family_alphadelta(f)
        expected = {
            sig("ab2"): f // 2,
            sig("a2d2"): (f - 8) // 4,
            sig("g4"): f // 4,
            VertexSignature(1, 0, 0, (f + 8) // 8): 4,
        }
        report = verify(m, expected, f=f)
        assert report.passed, report.failures

    @pytest.mark.parametrize("f", [24, 40])
    def test_beta2delta(self, f):
        # [PAPER] AVC == {ab2, a2d2, g4, beta^2 delta^{(f-8)/8},
        # alpha delta^{(f+8)/8}}
        m = family_beta2delta(f)
        expected = {
            sig("ab2"): (f - 4) // 2,
            sig("a2d2"): f // 4,
            VertexSignature(0, 2, 0, (f - 8) // 8): 2,
            sig("g4"): f // 4,
            VertexSignature(1, 0, 0, (f + 8) // 8): 2,
        }
        report = verify(m, expected, f=f)
        assert report.passed, report.failures

    def test_domain(self):
        # [DERIVED] the derived families need f = 8 mod 16 (beta^2 delta^d
        # fails the parity rule at f = 32, for instance)
        for bad in (16, 32, 48):
            with pytest.raises(DomainError):
                family_alphadelta(bad)
            with pytest.raises(DomainError):
                family_beta2delta(bad)

    def test_families_distinct(self):
        # [DERIVED] the three f=24 earth-map-like tilings are pairwise
        # non-isomorphic
        maps = [pq_earth_map(24), family_alphadelta(24), family_beta2delta(24)]
        for i in range(3):
            for j in range(i + 1, 3):
                assert not maps[i].is_isomorphic(maps[j])
