"""Gauge functions and the radial projection onto their unit spheres.

A gauge is a continuous, positively homogeneous function that vanishes
only at the origin; its unit level set is the "sphere" all spherical
operations live on.  This is the only module allowed to use floating
point, and only for evaluation and normalization: the exact cone layer
never consults a gauge for a decision, because every polyhedral
predicate in this package is invariant under positive rescaling of rays.

Four kinds are supported:

* ``euclidean``        - the usual 2-norm (convex),
* ``pnorm`` (p >= 1)   - the p-norm (convex),
* ``quasinorm`` (0<p<1)- the p-power-sum form, deliberately non-convex,
* ``polyhedral``       - max of rational linear functionals (convex);
  validity (strict positivity off the origin) is checked exactly with a
  small family of LPs at construction time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg, lp
from .errors import ArgumentError, DegenerateCombinationError, DimensionMismatchError
from .linalg import Mat, Vec

EUCLIDEAN = "euclidean"
PNORM = "pnorm"
QUASINORM = "quasinorm"
POLYHEDRAL = "polyhedral"
_KINDS = (EUCLIDEAN, PNORM, QUASINORM, POLYHEDRAL)

ON_SPHERE_TOL = 1e-9
DEGENERATE_TOL = 1e-12


def _validate_polyhedral(functionals: Mat, dim: int) -> None:
    """Reject functional lists whose max fails to be positive off the origin.

    max_i <f_i, x> is positive for every nonzero x iff the polyhedral cone
    {x : <f_i, x> <= 0 for all i} is trivial; each coordinate direction is
    probed by one LP, and a nontrivial optimum is the offending witness.
    """
    rows = [lp.constraint(f, lp.LE, 0) for f in functionals]
    for j in range(dim):
        for sign in (1, -1):
            probe = [Fraction(0)] * dim
            probe[j] = Fraction(sign)
            program = lp.LinProgram(
                num_vars=dim,
                constraints=tuple(rows) + (lp.constraint(probe, lp.LE, 1),),
                objective=tuple(probe),
                free_vars=frozenset(range(dim)),
            )
            outcome = lp.solve(program)
            if outcome.status != lp.OPTIMAL:
                raise ArgumentError("polyhedral gauge validation LP misbehaved")
            if outcome.objective_value > 0:
                witness = linalg.format_vec(outcome.solution)
                raise ArgumentError(
                    "invalid polyhedral gauge: max functional is not positive on "
                    f"the nonzero vector {witness}"
                )


@dataclass(frozen=True)
class Gauge:
    kind: str
    dim: int
    p: float | None = None
    functionals: Mat | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ArgumentError(f"unknown gauge kind {self.kind!r}")
        if self.dim < 2:
            raise ArgumentError("ambient dimension must be at least 2")
        if self.kind == EUCLIDEAN:
            if self.p is not None or self.functionals is not None:
                raise ArgumentError("euclidean gauge takes no parameters")
        elif self.kind == PNORM:
            if self.p is None or self.p < 1:
                raise ArgumentError("pnorm requires p >= 1")
            object.__setattr__(self, "p", float(self.p))
        elif self.kind == QUASINORM:
            if self.p is None or not 0 < self.p < 1:
                raise ArgumentError("quasinorm requires 0 < p < 1")
            object.__setattr__(self, "p", float(self.p))
        else:
            if not self.functionals:
                raise ArgumentError("polyhedral gauge needs functionals")
            m = linalg.mat(self.functionals)
            if len(m[0]) != self.dim:
                raise DimensionMismatchError("functional dimension mismatch")
            object.__setattr__(self, "functionals", m)
            _validate_polyhedral(m, self.dim)

    @property
    def is_convex(self) -> bool:
        return self.kind != QUASINORM

    def __call__(self, x: Sequence[float]) -> float:
        return evaluate(self, x)


@dataclass(frozen=True)
class SpherePoint:
    """A float point on the gauge sphere (or the origin, for rho(o) only)."""

    coords: tuple[float, ...]
    gauge: Gauge

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))
        if len(self.coords) != self.gauge.dim:
            raise DimensionMismatchError("point dimension does not match gauge")
        if not self.is_origin:
            value = evaluate(self.gauge, self.coords)
            if abs(value - 1.0) > ON_SPHERE_TOL:
                raise ArgumentError(
                    f"point is off the sphere: gauge value {value!r}"
                )

    @property
    def is_origin(self) -> bool:
        return all(c == 0.0 for c in self.coords)


def evaluate(g: Gauge, x: Sequence[float]) -> float:
    """Gauge value of x; nonnegative, zero only (numerically) at the origin."""
    if len(x) != g.dim:
        raise DimensionMismatchError(f"expected dimension {g.dim}, got {len(x)}")
    xs = [float(v) for v in x]
    if g.kind == EUCLIDEAN:
        return math.hypot(*xs)
    if g.kind in (PNORM, QUASINORM):
        p = g.p
        total = math.fsum(abs(v) ** p for v in xs)
        return total ** (1.0 / p)
    best = -math.inf
    for f in g.functionals:
        best = max(best, math.fsum(float(a) * v for a, v in zip(f, xs)))
    return best


def project(g: Gauge, x: Sequence[float]) -> SpherePoint:
    """Radial projection x / gauge(x); the origin maps to itself."""
    if len(x) != g.dim:
        raise DimensionMismatchError(f"expected dimension {g.dim}, got {len(x)}")
    xs = [float(v) for v in x]
    phi = evaluate(g, xs)
    if phi == 0.0:  # exact origin, or underflow below float resolution
        return SpherePoint((0.0,) * g.dim, g)
    return SpherePoint(tuple(v / phi for v in xs), g)


def scomb(g: Gauge, points: Sequence[SpherePoint], weights: Sequence[float]) -> SpherePoint:
    """Spherical convex combination: project the weighted point sum back to the sphere.

    Weights must be nonnegative and sum to one (within 1e-12).  A combination
    whose gauge value collapses below the degeneracy threshold is rejected:
    the radial map is discontinuous at the origin and no spherical point
    exists there.
    """
    if len(points) != len(weights):
        raise ArgumentError("one weight per point required")
    if not points:
        raise ArgumentError("empty combination")
    for pt in points:
        if pt.gauge != g:
            raise ArgumentError("all points must live on the given gauge sphere")
        if pt.is_origin:
            raise ArgumentError("the origin is not a sphere point")
    ws = [float(w) for w in weights]
    if any(w < 0 for w in ws):
        raise ArgumentError("weights must be nonnegative")
    if abs(math.fsum(ws) - 1.0) > 1e-12:
        raise ArgumentError("weights must sum to 1")
    combo = tuple(
        math.fsum(w * pt.coords[i] for w, pt in zip(ws, points))
        for i in range(g.dim)
    )
    input_scale = max(1.0, max(abs(c) for pt in points for c in pt.coords))
    if evaluate(g, combo) < DEGENERATE_TOL * input_scale:
        raise DegenerateCombinationError(
            "combination collapsed to the origin; no spherical point exists"
        )
    return project(g, combo)


# ---------------------------------------------------------------------------
# JSON descriptors


def gauge_to_json(g: Gauge) -> dict:
    doc: dict = {"kind": g.kind, "dim": g.dim}
    if g.p is not None:
        doc["p"] = g.p
    if g.functionals is not None:
        doc["functionals"] = [linalg.format_vec(f) for f in g.functionals]
    return doc


def gauge_from_json(doc: dict) -> Gauge:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ArgumentError("gauge descriptor must be an object with a 'kind'")
    kind = doc["kind"]
    dim = doc.get("dim")
    if not isinstance(dim, int):
        raise ArgumentError("gauge descriptor needs an integer 'dim'")
    p = doc.get("p")
    functionals = doc.get("functionals")
    if functionals is not None:
        functionals = linalg.mat(functionals)
    return Gauge(kind=kind, dim=dim, p=p, functionals=functionals)


def euclidean(dim: int) -> Gauge:
    return Gauge(EUCLIDEAN, dim)


def pnorm(dim: int, p: float) -> Gauge:
    return Gauge(PNORM, dim, p=p)


def quasinorm(dim: int, p: float) -> Gauge:
    return Gauge(QUASINORM, dim, p=p)


def polyhedral(dim: int, functionals) -> Gauge:
    return Gauge(POLYHEDRAL, dim, functionals=linalg.mat(functionals))


def sup_norm(dim: int) -> Gauge:
    """The max-coordinate gauge as a polyhedral gauge (all +-e_i functionals)."""
    fs: list[Vec] = []
    for i in range(dim):
        fs.append(linalg.unit(dim, i))
        fs.append(linalg.neg(linalg.unit(dim, i)))
    return polyhedral(dim, fs)
