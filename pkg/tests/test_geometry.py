"""Numeric spherical geometry: closed forms, solver, lune, realization."""

import math
import random
import warnings

import numpy as np
import pytest

from quadtile.constructors import (
    earth_map,
    family_alphadelta,
    pq_earth_map,
    quad_subdivide,
)
from quadtile.geometry import (
    ClosureError,
    DegeneracyError,
    DegeneracyWarning,
    GeometryError,
    SphericalQuad,
    area,
    closed_form_cube_subdivision,
    closed_form_family,
    convexity_bounds,
    degeneracy_loci,
    export_obj,
    export_svg,
    holonomy_residual,
    lune_quad,
    realize,
    solve_edges,
    trig_residuals,
)

S5 = math.sqrt(5.0)


class TestClosedForms:
    def test_f24_edges(self):
        # [PAPER] cos a = sqrt5/3, cos b = (sqrt5+1)/(2 sqrt3),
        # cos c = (sqrt5-1)/(2 sqrt3)
        q = closed_form_family(24)
        assert math.cos(q.a) == pytest.approx(S5 / 3, abs=1e-12)
        assert math.cos(q.b) == pytest.approx((S5 + 1) / (2 * math.sqrt(3)),
                                              abs=1e-12)
        assert math.cos(q.c) == pytest.approx((S5 - 1) / (2 * math.sqrt(3)),
                                              abs=1e-12)

    def test_f24_residuals(self):
        # [PAPER] closed form satisfies holonomy and the trig identities
        q = closed_form_family(24)
        assert holonomy_residual(q) < 1e-9
        assert max(abs(r) for r in trig_residuals(q)) < 1e-9

    def test_f16_edge(self):
        # [PAPER] at f=16, cos a = (sqrt5-1)/2
        q = closed_form_family(16)
        assert math.cos(q.a) == pytest.approx((S5 - 1) / 2, abs=1e-12)

    def test_family_angles(self):
        # [PAPER] (pi - 8pi/f, pi/2 + 4pi/f, pi/2, 8pi/f)
        q = closed_form_family(24)
        assert q.alpha == pytest.approx(math.pi * 2 / 3, abs=1e-15)
        assert q.beta == pytest.approx(math.pi * 2 / 3, abs=1e-15)
        assert q.gamma == pytest.approx(math.pi / 2, abs=1e-15)
        assert q.delta == pytest.approx(math.pi / 3, abs=1e-15)

    def test_family_matches_cube_at_24(self):
        # [PAPER] the f=24 family quad is the cube subdivision at delta=pi/3
        q1 = closed_form_family(24)
        q2 = closed_form_cube_subdivision(math.pi / 3)
        for name in ("a", "b", "c", "alpha", "beta", "gamma", "delta"):
            assert getattr(q1, name) == pytest.approx(
                getattr(q2, name), abs=1e-12)

    def test_cube_angles(self):
        # [PAPER] alpha = 2pi/3, beta = pi - delta, gamma = pi/2
        d = 1.1
        q = closed_form_cube_subdivision(d)
        assert q.alpha == pytest.approx(2 * math.pi / 3, abs=1e-15)
        assert q.beta == pytest.approx(math.pi - d, abs=1e-15)
        assert q.gamma == pytest.approx(math.pi / 2, abs=1e-15)
        assert holonomy_residual(q) < 1e-9

    def test_family_b_equals_c_at_10(self):
        # [PAPER] f=10 collapses to b=c
        with pytest.raises(DegeneracyError):
            closed_form_family(10)

    def test_cube_delta_half_pi(self):
        # [PAPER] delta = pi/2 is the b=c exclusion
        with pytest.raises(DegeneracyError, match="b = c"):
            closed_form_cube_subdivision(math.pi / 2)

    def test_cube_domain(self):
        # [PAPER] delta must lie in (pi/4, 3pi/4)
        for bad in (0.2, math.pi * 0.8):
            with pytest.raises(GeometryError):
                closed_form_cube_subdivision(bad)


class TestSolveEdges:
    def test_family_angles_recovered(self):
        # [DERIVED] solving the f=24 family angles recovers the closed form
        ref = closed_form_family(24)
        roots = solve_edges(ref.alpha, ref.beta, ref.gamma, ref.delta)
        assert any(
            abs(q.a - ref.a) < 1e-9 and abs(q.b - ref.b) < 1e-9
            and abs(q.c - ref.c) < 1e-9 for q in roots)

    def test_all_roots_close_holonomy(self):
        # [DERIVED] every returned root satisfies holonomy
        q0 = closed_form_cube_subdivision(1.2)
        for q in solve_edges(q0.alpha, q0.beta, q0.gamma, q0.delta):
            assert holonomy_residual(q) < 1e-9

    def test_beta_equals_delta_rejected(self):
        # [PAPER] no tilings for beta = delta (unless gamma = pi)
        with pytest.raises(DegeneracyError):
            solve_edges(1.0, 1.3, 1.0, 1.3)


class TestDegeneracyLoci:
    def test_loci(self):
        loci = degeneracy_loci()
        # [PAPER] a=c collides at f ~ 13.89229433053042 (6 significant
        # figures) and b=c at exactly f=10
        assert loci["family a=c"] == pytest.approx(13.89229433053042,
                                                   rel=1e-6)
        assert loci["family b=c"] == pytest.approx(10.0, abs=1e-9)
        # [PAPER] printed a=b root 6.666661841292876 is a low-precision
        # rendering of the exact root f = 20/3; compare at 1e-6 relative
        assert loci["family a=b"] == pytest.approx(6.666661841292876,
                                                   rel=1e-6)
        # [PAPER] cube-subdivision exclusions delta/pi (10 significant
        # figures)
        assert loci["cube a=b"] == pytest.approx(0.4322221997677038,
                                                 rel=1e-10)
        assert loci["cube a=c"] == pytest.approx(0.5677778002322962,
                                                 rel=1e-10)


class TestLune:
    def test_interior_area(self):
        # [PAPER] the inscribed quadrilateral fills the lune: area = alpha
        q = lune_quad(0.9, 1.1, 0.4)
        assert area(q) == pytest.approx(1.1, abs=1e-9)

    def test_exterior_area(self):
        # [PAPER] exterior variant also has area alpha
        q = lune_quad(0.9, 1.1, 0.4, exterior=True)
        assert area(q) == pytest.approx(1.1, abs=1e-9)

    def test_random_samples(self):
        # [DERIVED] 100 random samples per mode, |area - alpha| < 1e-9
        rng = random.Random(13)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegeneracyWarning)
            for _ in range(100):
                alpha = rng.uniform(0.2, math.pi - 0.2)
                theta = rng.uniform(0.05, alpha - 0.05)
                a = rng.uniform(0.2, math.pi - 0.2)
                q = lune_quad(a, alpha, theta)
                assert abs(area(q) - alpha) < 1e-9
            for _ in range(100):
                alpha = rng.uniform(0.2, math.pi - 0.2)
                a = rng.uniform(0.2, math.pi / 2 - 0.05)
                theta = rng.uniform(0.05, math.pi - alpha - 0.05)
                q = lune_quad(a, alpha, theta, exterior=True)
                assert abs(area(q) - alpha) < 1e-9

    def test_degeneracy_warning(self):
        # [DERIVED] coincident edges warn rather than fail
        q0 = lune_quad(0.9, 1.1, 0.4)
        with pytest.warns(DegeneracyWarning):
            lune_quad(q0.a, q0.alpha, q0.alpha / 2)


class TestRealize:
    @pytest.mark.parametrize("f", [16, 24])
    def test_pq_family(self, f):
        # [DERIVED] family quad realizes its pq earth map tiling
        real = realize(pq_earth_map(f), closed_form_family(f))
        assert real.max_mismatch < 1e-6
        assert real.area_sum == pytest.approx(4 * math.pi, abs=1e-6)

    @pytest.mark.parametrize("base", ["cube", "triangular_prism"])
    def test_subdivisions(self, base):
        # [DERIVED] cube-subdivision quad at delta=pi/3 realizes both f=24
        # subdivision tilings
        q = closed_form_cube_subdivision(math.pi / 3)
        real = realize(quad_subdivide(base), q)
        assert real.max_mismatch < 1e-6
        assert real.area_sum == pytest.approx(4 * math.pi, abs=1e-6)

    def test_flip_family(self):
        # [DERIVED] the flip-modified tiling shares the same quad
        real = realize(family_alphadelta(24), closed_form_family(24))
        assert real.max_mismatch < 1e-6

    def test_unit_vectors(self):
        # [TRIVIAL] all realized vertices on the unit sphere
        real = realize(pq_earth_map(16), closed_form_family(16))
        for p in real.coords:
            assert np.linalg.norm(p) == pytest.approx(1.0, abs=1e-12)

    def test_perturbed_quad_fails(self):
        # [TRIVIAL] a wrong quad cannot close up
        q = closed_form_family(24)
        bad = SphericalQuad(q.a + 0.05, q.b, q.c,
                            q.alpha, q.beta, q.gamma, q.delta)
        with pytest.raises((ClosureError, GeometryError)):
            realize(pq_earth_map(24), bad)

    def test_wrong_family_quad_fails(self):
        # [DERIVED] the f=16 quad cannot realize the f=24 map
        with pytest.raises((ClosureError, GeometryError)):
            realize(pq_earth_map(24), closed_form_family(16))


class TestExport:
    def test_obj(self):
        # [TRIVIAL] OBJ has one v line per vertex and one f line per tile
        real = realize(pq_earth_map(16), closed_form_family(16))
        text = export_obj(real)
        lines = text.splitlines()
        assert sum(ln.startswith("v ") for ln in lines) == 18
        assert sum(ln.startswith("f ") for ln in lines) == 16

    def test_svg(self):
        # [TRIVIAL] SVG contains the three edge classes
        real = realize(pq_earth_map(16), closed_form_family(16))
        text = export_svg(real)
        for cls in ("edge-a", "edge-b", "edge-c"):
            assert cls in text

    def test_deterministic(self):
        # [TRIVIAL] byte-identical output
        real = realize(pq_earth_map(16), closed_form_family(16))
        assert export_svg(real) == export_svg(real)
        assert export_obj(real) == export_obj(real)


class TestConvexity:
    def test_family_quad_convex(self):
        # [DERIVED] the f=24 family quad has no reflex angles
        rep = convexity_bounds(closed_form_family(24), 24)
        assert rep is not None
