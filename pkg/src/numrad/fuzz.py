"""Random-ensemble sweep over every invariant the library asserts.

Each matrix A of an ensemble gets:

* the full lower-bound chain from :func:`numrad.bounds.bounds_report`;
* the commutator report for a Gaussian partner B, which covers soundness
  of every upper bound for w(AB +/- BA) and their mutual ordering. Every
  ``th2_every``-th sample also draws Gaussian X, Y and checks
  w(AXB +/- BYA) against its bound;
* kind-specific checks: w equals the spectral radius for normal input.
  For shifts (unitarily rotated, scaled J_n) W(A) is an origin-centred disk
  of radius w, the half-norm equality holds exactly when n = 2 and the
  Kittaneh equality exactly when n <= 3.

Verdicts are independent per matrix, so ``jobs > 1`` farms them out to
worker processes. Results are always reported in (kind, dim, index) order.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import config
from .bounds import bounds_report, cartesian_data
from .commutator import commutator_report
from .diagnostics import check_half_norm_equality, check_kittaneh_equality, circular_disk_report
from .ensembles import EnsembleSpec, companion, sample
from .linalg import ConvergenceError, InvariantViolation
from .matrixfile import dumps_matrix


@dataclass(frozen=True)
class Failure:
    kind: str
    dim: int
    index: int
    check: str
    detail: str
    command: str  # subcommand that reproduces the failure
    matrices: tuple  # ((role, array), ...)

    def artifact(self):
        """Text block with the failing matrices in matrix-file format."""
        lines = [f"FAIL {self.kind} dim={self.dim} index={self.index} check={self.check!r}: {self.detail}"]
        files = []
        for role, M in self.matrices:
            name = f"{self.kind}-{self.dim}-{self.index}-{role}.json"
            files.append((role, name))
            lines.append(f"--- {name}")
            lines.append(dumps_matrix(M))
        args = [name for role, name in files if role in ("A", "B")]
        args += [f"--{role.lower()} {name}" for role, name in files if role in ("X", "Y")]
        lines.append(f"replay: numrad {self.command} {' '.join(args)}")
        return "\n".join(lines)


@dataclass
class FuzzResult:
    matrices: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self):
        return not self.failures


def _check_one(job):
    kind, n, index, seed, grid, tol, th2_every = job
    A = sample(kind, n, index, seed)
    B = companion(kind, n, index, seed, "B")
    X = Y = None
    if th2_every and index % th2_every == 0:
        X, Y = companion(kind, n, index, seed, "X"), companion(kind, n, index, seed, "Y")
    failures = []
    checks = 0

    def fail(check, detail, command, mats):
        failures.append(Failure(kind, n, index, check, detail, command, tuple(mats)))

    try:
        d = cartesian_data(A, with_radius=True, grid=grid)
        rep = bounds_report(A, data=d)
        checks += len(rep.chain())
        for name in rep.violations:
            fail(f"bounds: {name}", "inequality violated", "bounds", [("A", A)])

        com = commutator_report(A, B, X, Y, grid=grid, data=d)
        checks += len(com.chain())
        mats = [("A", A), ("B", B)] + ([("X", X), ("Y", Y)] if X is not None else [])
        for name in com.violations:
            fail(f"commutator: {name}", "inequality violated", "commutator", mats)

        if kind == "normal-random":
            checks += 1
            rho = float(np.max(np.abs(np.linalg.eigvals(A))))
            if abs(d.w - rho) > tol * max(1.0, rho):
                fail("normal: w = spectral radius", f"w={d.w!r} rho={rho!r}", "radius", [("A", A)])

        if kind == "shift":
            checks += 3
            half = check_half_norm_equality(A, tol, grid=grid)
            kit = check_kittaneh_equality(A, tol, grid=grid)
            if half.case_half_norm != (n == 2) or not half.consistent:
                fail("shift: half-norm equality case", repr(half), "diagnose", [("A", A)])
            if kit.case_kittaneh != (n <= 3) or not kit.consistent:
                fail("shift: kittaneh equality case", repr(kit), "diagnose", [("A", A)])
            disk = circular_disk_report(A, tol, grid=grid)
            if not (disk.disk and abs(disk.radius - d.w) <= config.DISK_TOL):
                fail("shift: W(A) is a disk of radius w", repr(disk), "diagnose", [("A", A)])
    except (InvariantViolation, ConvergenceError) as exc:
        fail(type(exc).__name__, str(exc), "bounds", [("A", A), ("B", B)])
    return checks, failures


def run(specs, *, grid=config.RADIUS_GRID, tol=config.CHECK_TOL, th2_every=4, jobs=1,
        progress=None):
    """Check every matrix of every :class:`EnsembleSpec` in ``specs``.

    ``progress`` is called as ``progress(kind, dim, done, total)`` after each
    dimension of each ensemble.
    """
    t0 = time.perf_counter()
    result = FuzzResult()
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for spec in specs:
            if not isinstance(spec, EnsembleSpec):
                raise TypeError("specs must be EnsembleSpec instances")
            lo, hi = spec.dims
            for n in range(lo, hi + 1):
                batch = [(spec.kind, n, i, spec.seed, grid, tol, th2_every) for i in range(spec.count)]
                outcomes = pool.map(_check_one, batch, chunksize=16) if pool else map(_check_one, batch)
                for checks, failures in outcomes:
                    result.matrices += 1
                    result.checks += checks
                    result.failures.extend(failures)
                if progress is not None:
                    progress(spec.kind, n, result.matrices, len(result.failures))
    finally:
        if pool is not None:
            pool.shutdown()
    result.elapsed = time.perf_counter() - t0
    return result
