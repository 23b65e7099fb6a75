import math

import numpy as np
import pytest

from numrad.linalg import imag_part, operator_norm, real_part
from numrad.numrange import (
    convex_hull,
    crawford_hermitian,
    crawford_number,
    distance_to_hull,
    is_origin_centered_disk,
    numerical_radius,
    range_boundary,
    support_sample,
    theta_grid,
)
from oracles import brute_radius, crawford_support, gaussian, sampled_range, shift, unitary

R2 = 1 / math.sqrt(2)
DIAG = np.diag([20.0, 30.0 + 30.0j])


def random_matrices(rng, count, dims=range(2, 7)):
    dims = list(dims)
    return [gaussian(rng, dims[k % len(dims)]) for k in range(count)]


class TestSupportSample:
    def test_hermitian(self):
        s = support_sample(np.diag([1.0, 2.0]), 0.0)
        assert (s.lambda_max, s.part_norm) == pytest.approx((2.0, 2.0), abs=1e-15)
        assert s.boundary_point == pytest.approx(2.0, abs=1e-15)

    @pytest.mark.parametrize("theta", [0.0, 0.3, 1.7, 4.0])
    def test_shift3_constant_profile(self, theta):
        assert support_sample(shift(3), theta).part_norm == pytest.approx(R2, abs=1e-14)

    def test_diagonal_rotation(self):
        s = support_sample(DIAG, -math.pi / 4)
        assert s.lambda_max == pytest.approx(30 * math.sqrt(2), rel=1e-14)
        assert 0.0 <= s.theta < 2 * math.pi

    def test_invariants(self, rng):
        for A in random_matrices(rng, 30):
            w = numerical_radius(A).w
            for t in rng.uniform(0, 2 * np.pi, 5):
                s = support_sample(A, t)
                z = s.boundary_point
                assert s.lambda_max <= s.part_norm + 1e-12
                # the supporting line through z has normal e^{-it}
                assert (np.exp(1j * t) * z).real == pytest.approx(s.lambda_max, abs=1e-10)
                assert abs(z) <= w + 1e-9


class TestRadius:
    def test_examples(self):
        assert numerical_radius(shift(2)).w == pytest.approx(0.5, abs=1e-12)
        assert numerical_radius(shift(3)).w == pytest.approx(R2, abs=1e-12)
        assert numerical_radius(DIAG).w == pytest.approx(30 * math.sqrt(2), rel=1e-13)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_jordan_shift_oracle(self, n):
        w = numerical_radius(shift(n)).w
        assert abs(w - brute_radius(shift(n))) <= 1e-8
        assert abs(w - math.cos(math.pi / (n + 1))) <= 1e-12

    def test_brute_force_oracle(self, rng):
        for A in random_matrices(rng, 20):
            ref = brute_radius(A)
            w = numerical_radius(A).w
            # the grid oracle sits below w by at most w (1 - cos(pi / 1e5))
            assert ref - 1e-12 <= w <= ref / math.cos(math.pi / 1e5) + 1e-12

    def test_attaining_vector(self, rng):
        for A in random_matrices(rng, 30, range(1, 9)):
            r = numerical_radius(A)
            x = r.attaining_vector
            assert abs(np.linalg.norm(x) - 1.0) <= 1e-12
            assert abs(abs(np.vdot(x, A @ x)) - r.w) <= 1e-8 * max(1.0, r.w)
            assert 0.0 <= r.theta_star < 2 * math.pi

    def test_sandwich(self, rng):
        for A in random_matrices(rng, 100, range(1, 9)):
            w, norm = numerical_radius(A).w, operator_norm(A)
            assert norm / 2 - 1e-9 <= w <= norm + 1e-9

    def test_rotation_and_adjoint_invariance(self, rng):
        for A in random_matrices(rng, 30):
            w = numerical_radius(A).w
            phi = rng.uniform(0, 2 * np.pi)
            assert abs(numerical_radius(np.exp(1j * phi) * A).w - w) <= 1e-9
            assert abs(numerical_radius(A.conj().T).w - w) <= 1e-9

    def test_normal_matrices(self, rng):
        for k in range(40):
            n = 1 + k % 8
            d = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            U = unitary(rng, n)
            assert abs(numerical_radius((U * d) @ U.conj().T).w - np.abs(d).max()) <= 1e-8

    def test_tie_goes_to_smallest_angle(self):
        r = numerical_radius(np.diag([1.0, -1.0]))
        assert r.w == pytest.approx(1.0, abs=1e-15)
        assert r.theta_star == pytest.approx(0.0, abs=1e-9)

    def test_zero_and_scalar(self):
        assert numerical_radius(np.zeros((3, 3))).w == 0.0
        assert numerical_radius([[2 - 1j]]).w == pytest.approx(math.sqrt(5), rel=1e-15)

    def test_coarse_grid_still_refines(self, rng):
        A = gaussian(rng, 4)
        assert abs(numerical_radius(A, grid=16).w - numerical_radius(A).w) <= 1e-9

    def test_cartesian_identity(self, rng):
        for A in random_matrices(rng, 20):
            t = rng.uniform(0, 2 * np.pi)
            R, I = real_part(np.exp(1j * t) * A), imag_part(np.exp(1j * t) * A)
            target = (A.conj().T @ A + A @ A.conj().T) / 2
            assert np.max(np.abs(R @ R + I @ I - target)) <= 1e-10 * max(1.0, np.abs(target).max())


class TestBoundary:
    def test_profile_grid(self, rng):
        prof = range_boundary(gaussian(rng, 3), 40)
        assert prof.grid_size == 40 and len(prof.samples) == 40
        assert np.allclose(np.diff(prof.thetas), 2 * np.pi / 40, rtol=0, atol=1e-14)
        assert np.array_equal(prof.thetas, theta_grid(40))

    def test_odd_grid(self, rng):
        A = gaussian(rng, 3)
        even, odd = range_boundary(A, 40), range_boundary(A, 41)
        assert np.max(odd.lambda_max) <= numerical_radius(A).w + 1e-12
        assert np.max(even.lambda_max) <= numerical_radius(A).w + 1e-12

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            range_boundary(np.eye(2), 15)

    def test_normal_segment(self):
        pts = range_boundary(np.diag([1.0, 1.0j]), 360).boundary_points
        # on the chord x + y = 1 between 1 and i
        assert np.max(np.abs(pts.real + pts.imag - 1.0)) <= 1e-8
        assert np.all((pts.real >= -1e-8) & (pts.imag >= -1e-8))

    def test_shift3_circle(self):
        pts = range_boundary(shift(3), 360).boundary_points
        assert np.all(np.abs(np.abs(pts) - R2) <= 1e-6)

    def test_hermitian_segment(self):
        pts = range_boundary(np.diag([1.0, 2.0]), 360).boundary_points
        assert np.max(np.abs(pts.imag)) <= 1e-15
        assert np.all((pts.real >= 1 - 1e-15) & (pts.real <= 2 + 1e-15))

    def test_inside_radius_disk(self, rng):
        for A in random_matrices(rng, 20):
            w = numerical_radius(A).w
            prof = range_boundary(A)
            assert np.max(np.abs(prof.boundary_points)) <= w + 1e-8
            assert np.all(prof.lambda_max <= prof.part_norms + 1e-12)


class TestHull:
    def test_single_point_and_duplicates(self):
        assert convex_hull(np.array([1 + 1j, 1 + 1j])).tolist() == [[1.0, 1.0]]
        assert distance_to_hull(0.0, convex_hull(np.array([3 + 4j]))) == pytest.approx(5.0)

    def test_collinear_collapses(self):
        hull = convex_hull(np.array([0, 1 + 1j, 2 + 2j, 0.5 + 0.5j]))
        assert hull.tolist() == [[0.0, 0.0], [2.0, 2.0]]
        assert distance_to_hull(2.0, hull) == pytest.approx(math.sqrt(2.0))
        assert distance_to_hull(1 + 1j, hull) == 0.0

    def test_square(self):
        hull = convex_hull(np.array([0, 1, 1 + 1j, 1j, 0.5 + 0.5j]))
        assert len(hull) == 4
        assert distance_to_hull(0.5 + 0.5j, hull) == 0.0
        assert distance_to_hull(1.0, hull) == 0.0  # vertex counts as inside
        assert distance_to_hull(0.5 - 1j, hull) == pytest.approx(1.0)
        assert distance_to_hull(2 + 2j, hull) == pytest.approx(math.sqrt(2))
        assert distance_to_hull(0.5 - 1e-12j, hull, eps=1e-10) == 0.0

    def test_empty(self):
        with pytest.raises(ValueError):
            distance_to_hull(0.0, np.empty((0, 2)))


class TestCrawford:
    @pytest.mark.parametrize("d, c", [([20, 30], 20.0), ([0, 30], 0.0), ([-1, 2], 0.0), ([-3, -2], 2.0)])
    def test_hermitian(self, d, c):
        assert crawford_hermitian(np.diag(d)) == c

    def test_examples(self):
        r = crawford_number(np.diag([1.0, 1.0j]))
        assert r.c == pytest.approx(R2, abs=1e-12) and not r.origin_inside
        r = crawford_number(shift(3))
        assert r.c == 0.0 and r.origin_inside
        assert crawford_number(np.diag([2.0, 3.0])).c == 2.0

    def test_hermitian_consistency(self, rng):
        for k in range(20):
            n = 2 + k % 5
            H = gaussian(rng, n)
            H = (H + H.conj().T) / 2 + rng.uniform(-3, 3) * np.eye(n)
            assert abs(crawford_number(H).c - crawford_hermitian(H)) <= 1e-7

    def test_support_and_sampling_oracles(self, rng):
        step = 2 * np.pi / 720
        for k in range(20):
            n = 2 + k % 5
            A = gaussian(rng, n) + rng.uniform(0.0, 4.0) * np.exp(2j * np.pi * rng.uniform()) * np.eye(n)
            w = numerical_radius(A).w
            c = crawford_number(A)
            ref = crawford_support(A)
            # the hull is inscribed in W(A): c can only overshoot, by O(w step^2)
            assert ref - 1e-12 <= c.c <= ref + w * step**2
            assert c.origin_inside == (c.c == 0.0)
            assert np.min(np.abs(sampled_range(A, rng))) >= c.c - w * step**2

    def test_trace_zero_contains_origin(self, rng):
        for n in range(2, 7):
            A = gaussian(rng, n)
            A -= np.trace(A) / n * np.eye(n)
            assert crawford_number(A).origin_inside

    def test_adjoint_invariance(self, rng):
        for k in range(10):
            A = gaussian(rng, 3) + 3 * np.eye(3)
            assert abs(crawford_number(A).c - crawford_number(A.conj().T).c) <= 1e-9


class TestDisk:
    def test_examples(self):
        assert is_origin_centered_disk(shift(3), 1e-8) == pytest.approx((True, R2), abs=1e-12)
        assert tuple(is_origin_centered_disk(np.diag([1.0, 2.0]), 1e-8)) == (False, pytest.approx(2.0))
        assert tuple(is_origin_centered_disk(shift(2), 1e-8)) == (True, pytest.approx(0.5, abs=1e-12))

    def test_rotated_scaled_shift(self, rng):
        for n in range(2, 7):
            U = unitary(rng, n)
            A = 1.7j * U @ shift(n) @ U.conj().T
            disk = is_origin_centered_disk(A)
            assert disk.is_disk
            assert disk.radius == pytest.approx(1.7 * math.cos(math.pi / (n + 1)), abs=1e-6)

    def test_generic_is_not_disk(self, rng):
        for A in random_matrices(rng, 10):
            assert not is_origin_centered_disk(A).is_disk

    def test_rejects_bad_tol(self):
        with pytest.raises(ValueError):
            is_origin_centered_disk(shift(2), 0.0)
