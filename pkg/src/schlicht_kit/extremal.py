"""One-parameter extremal search over function families.

Derivative-free: a uniform grid scan followed by rounds of re-gridding on
the bracket around the incumbent.  The functionals have kinks (absolute
values), so no derivatives are used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bounds import FUNCTIONALS, quantities
from .families import (
    CONVEX_LAMBDA,
    CONVEX_SCHWARZ,
    KOEBE,
    STARLIKE_SCHWARZ,
    SchwarzPoly,
    convex_from_schwarz,
    convex_lambda,
    koebe,
    random_schwarz,
    starlike_from_schwarz,
)
from .series import Series

MAXIMIZE = "maximize"
MINIMIZE = "minimize"
SEARCH_FAMILIES = (KOEBE, CONVEX_LAMBDA, CONVEX_SCHWARZ, STARLIKE_SCHWARZ)
DEFAULT_INTERVALS = {
    KOEBE: (0.0, 2 * math.pi),
    CONVEX_LAMBDA: (0.0, 1.0),
    CONVEX_SCHWARZ: (0.0, 1.0),
    STARLIKE_SCHWARZ: (0.0, 1.0),
}


class SearchError(RuntimeError):
    """A functional evaluation failed at a specific parameter."""

    def __init__(self, parameter: float, cause: Exception):
        super().__init__(f"evaluation failed at parameter {parameter!r}: {cause}")
        self.parameter = parameter


def evaluate_functional(f: Series, name: str) -> float:
    """A named real functional of ``f`` (see ``bounds.FUNCTIONALS``)."""
    if name not in FUNCTIONALS:
        raise ValueError(f"unknown functional {name!r}; expected one of {FUNCTIONALS}")
    return float(quantities(f)[name])


@dataclass(frozen=True)
class SearchSpec:
    """Search one free parameter of a family.

    The parameter is theta for ``koebe``, lambda for ``convex_lambda`` and a
    scale ``r`` (``w -> r w``) of the given Schwarz polynomial for the
    Schwarz-driven families.
    """

    family: str
    functional: str
    direction: str = MAXIMIZE
    interval: tuple = (0.0, 1.0)
    grid_points: int = 64
    refine_iterations: int = 6
    order: int = 8
    schwarz: SchwarzPoly | None = None

    def __post_init__(self):
        if self.family not in SEARCH_FAMILIES:
            raise ValueError(f"family {self.family!r} cannot be searched; expected one of {SEARCH_FAMILIES}")
        if self.functional not in FUNCTIONALS:
            raise ValueError(f"unknown functional {self.functional!r}")
        if self.direction not in (MAXIMIZE, MINIMIZE):
            raise ValueError(f"direction must be {MAXIMIZE!r} or {MINIMIZE!r}")
        lo, hi = self.interval
        if not lo < hi:
            raise ValueError(f"empty interval {self.interval}")
        if self.grid_points < 8:
            raise ValueError("need at least 8 grid points")
        if self.refine_iterations < 0:
            raise ValueError("refine_iterations must be >= 0")
        if self.order < 4:
            raise ValueError("order must be at least 4")
        if self.family in (CONVEX_SCHWARZ, STARLIKE_SCHWARZ) and self.schwarz is None:
            raise ValueError(f"family {self.family} needs a Schwarz polynomial")

    def build(self, x: float) -> Series:
        if self.family == KOEBE:
            return koebe(x % (2 * math.pi), self.order)
        if self.family == CONVEX_LAMBDA:
            return convex_lambda(x, self.order)
        w = SchwarzPoly(tuple(x * complex(c) for c in self.schwarz.coeffs))
        if self.family == CONVEX_SCHWARZ:
            return convex_from_schwarz(w, self.order)
        return starlike_from_schwarz(w, self.order)

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "functional": self.functional,
            "direction": self.direction,
            "interval": list(self.interval),
            "gridPoints": self.grid_points,
            "refineIterations": self.refine_iterations,
            "order": self.order,
        }
        if self.schwarz is not None:
            out["schwarz"] = [[complex(c).real, complex(c).imag] for c in self.schwarz.coeffs]
        return out


@dataclass(frozen=True)
class SearchResult:
    argmax: float
    value: float
    trace: list = field(default_factory=list)
    evaluations: int = 0

    def to_json(self) -> dict:
        return {
            "argmax": self.argmax,
            "value": self.value,
            "evaluations": self.evaluations,
            "trace": [{"interval": list(iv), "best": b, "value": v} for iv, b, v in self.trace],
        }


def _better(value: float, best: float, direction: str) -> bool:
    return value > best if direction == MAXIMIZE else value < best


def grid_refine_search(spec: SearchSpec) -> SearchResult:
    """Grid scan plus ``refine_iterations`` re-gridding rounds.

    Each round re-grids the bracket ``[x* - h, x* + h]`` (clipped to the
    current interval) around the incumbent ``x*``, where ``h`` is the current
    spacing, so the interval shrinks by ``2 / (gridPoints - 1)`` per round.
    The incumbent only changes on strict improvement, which makes the best
    value monotone across rounds and breaks ties toward the smaller parameter
    within a round.
    """
    lo, hi = (float(v) for v in spec.interval)
    n = spec.grid_points
    best_x, best_v = None, None
    evaluations = 0
    trace = []
    for _ in range(spec.refine_iterations + 1):
        h = (hi - lo) / (n - 1)
        for i in range(n):
            x = lo + i * h if i < n - 1 else hi
            try:
                v = evaluate_functional(spec.build(x), spec.functional)
            except Exception as exc:
                raise SearchError(x, exc) from exc
            evaluations += 1
            if best_v is None or _better(v, best_v, spec.direction) or (v == best_v and x < best_x):
                best_x, best_v = x, v
        trace.append(((lo, hi), best_x, best_v))
        lo, hi = max(lo, best_x - h), min(hi, best_x + h)
    return SearchResult(best_x, best_v, trace, evaluations)


def random_restart_search(
    family: str,
    functional: str,
    direction: str = MINIMIZE,
    degree: int = 3,
    restarts: int = 16,
    seed: int = 0,
    grid_points: int = 16,
    refine_iterations: int = 3,
    order: int = 8,
) -> tuple:
    """Heuristic multi-parameter exploration: scale sweeps of random Schwarz polynomials.

    Returns ``(best SearchResult, its Schwarz polynomial)``.  No global
    optimality is implied.
    """
    best = None
    for r in range(restarts):
        w = random_schwarz(degree, seed + r)
        spec = SearchSpec(family, functional, direction, (0.0, 1.0), grid_points,
                          refine_iterations, order, w)
        res = grid_refine_search(spec)
        if best is None or _better(res.value, best[0].value, direction):
            best = (res, w)
    return best
