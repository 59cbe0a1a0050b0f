"""Identity records, the registry, and the exact verification engine."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from ..series import DomainError

VERDICTS = ("HOLDS", "FAILS", "ERROR")
SUITES = (
    "ogf-theorems", "egf-theorems", "chebyshev", "fibonacci-x-half",
    "fibonacci-eps", "gf-closed-forms", "lemmas",
)
DEPTHS = ("quick", "standard", "deep")

# per-scale upper bounds for each depth: {scale: {param: max}}
PROFILES = {
    "quick": {
        "poly": {"n": 16}, "quad": {"n": 16}, "cheb": {"n": 16},
        "int": {"n": 16}, "fib": {"n": 16},
        "fib-s": {"n": 16, "s": 6}, "eps": {"n": 8, "s": 4, "m": 2},
    },
    "standard": {
        "poly": {"n": 64}, "quad": {"n": 32}, "cheb": {"n": 32},
        "int": {"n": 200}, "fib": {"n": 64},
        "fib-s": {"n": 48, "s": 12}, "eps": {"n": 16, "s": 8, "m": 4},
    },
    "deep": {
        "poly": {"n": 128}, "quad": {"n": 48}, "cheb": {"n": 48},
        "int": {"n": 400}, "fib": {"n": 96},
        "fib-s": {"n": 64, "s": 16}, "eps": {"n": 24, "s": 12, "m": 6},
    },
}


class UnknownIdentityError(KeyError):
    """No record with the requested id."""


@dataclass(frozen=True)
class IdentityRecord:
    """One displayed identity as two exact evaluation closures.

    ``params`` lists (name, lower bound) in the order used for grids and for
    the lexicographic search for a minimal witness.
    """

    id: str
    location: str
    params: tuple
    ring: str
    lhs: object = field(repr=False, compare=False)
    rhs: object = field(repr=False, compare=False)
    suites: tuple = ()
    scale: str = "poly"
    reading: str = "literal"
    errata_of: str | None = None
    note: str = ""

    @property
    def param_names(self):
        return tuple(name for name, _ in self.params)

    def lower(self, name):
        return dict(self.params)[name]

    def evaluate(self, **point):
        return self.lhs(**point), self.rhs(**point)

    def difference(self, **point):
        a, b = self.evaluate(**point)
        return a - b


@dataclass
class VerificationReport:
    id: str
    location: str
    params_tested: dict
    points: int
    verdict: str
    counterexample: dict | None = None
    millis: float = 0.0
    vacuous: bool = False
    reading: str = "literal"
    errata_of: str | None = None
    note: str = ""

    @property
    def holds(self):
        return self.verdict == "HOLDS"

    def to_dict(self, timing=True):
        out = {
            "id": self.id,
            "paper_location": self.location,
            "reading": self.reading,
            "params_tested": {k: list(v) for k, v in self.params_tested.items()},
            "points": self.points,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
        }
        if self.errata_of:
            out["errata_of"] = self.errata_of
        if self.vacuous:
            out["vacuous"] = True
        if timing:
            out["millis"] = round(self.millis, 1)
        return out


_REGISTRY: dict = {}


def register(record):
    if record.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {record.id!r}")
    _REGISTRY[record.id] = record
    return record


def _load():
    from . import catalog  # noqa: F401  (populates the registry)


def get_record(identity_id):
    _load()
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def all_records():
    _load()
    return list(_REGISTRY.values())


def suite_records(suite):
    if suite == "all":
        return all_records()
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
    return [r for r in all_records() if suite in r.suites]


def default_grid(record, depth="standard", s_max=None, n_max=None):
    """Inclusive (lo, hi) per parameter from the depth profile."""
    if depth not in PROFILES:
        raise ValueError(f"unknown depth {depth!r}; expected one of {DEPTHS}")
    caps = PROFILES[depth][record.scale]
    grid = {}
    for name, lo in record.params:
        hi = caps.get(name, caps["n"])
        if name == "s" and s_max is not None:
            hi = s_max
        if name == "n" and n_max is not None:
            hi = n_max
        grid[name] = (lo, hi)
    return grid


def _normalize_grid(record, grid):
    out = {}
    for name, lo in record.params:
        if name not in grid:
            raise ValueError(f"{record.id}: grid is missing parameter {name!r}")
        spec = grid[name]
        if isinstance(spec, range):
            a, b = (spec.start, spec.stop - 1) if spec.step == 1 else (min(spec, default=0), max(spec, default=-1))
        else:
            a, b = spec
        if a <= b and a < lo:
            raise DomainError(f"{record.id}: {name} must be >= {lo}, grid starts at {a}")
        out[name] = (a, b)
    extra = set(grid) - set(record.param_names)
    if extra:
        raise ValueError(f"{record.id}: unknown grid parameters {sorted(extra)}")
    return out


def render_value(value):
    return str(value)


def verify(identity_id, grid=None, depth="standard", s_max=None):
    """Evaluate both sides over the grid in lexicographic order.

    The first nonzero difference is the minimal witness; verification stops
    there. An empty grid is a vacuous HOLDS with zero points.
    """
    record = identity_id if isinstance(identity_id, IdentityRecord) else get_record(identity_id)
    if grid is None:
        grid = default_grid(record, depth, s_max)
    grid = _normalize_grid(record, grid)
    names = record.param_names
    axes = [range(grid[n][0], grid[n][1] + 1) for n in names]
    start = time.perf_counter()
    points = 0
    verdict = "HOLDS"
    witness = None
    for values in itertools.product(*axes):
        point = dict(zip(names, values))
        points += 1
        try:
            diff = record.difference(**point)
        except ZeroDivisionError as exc:
            verdict = "ERROR"
            witness = {"params": point, "error": f"division by zero: {exc}"}
            break
        if diff != 0:
            verdict = "FAILS"
            witness = {"params": point, "difference": render_value(diff)}
            break
    millis = (time.perf_counter() - start) * 1000
    return VerificationReport(
        id=record.id, location=record.location, params_tested=grid, points=points,
        verdict=verdict, counterexample=witness, millis=millis, vacuous=points == 0,
        reading=record.reading, errata_of=record.errata_of, note=record.note,
    )


def verify_suite(suite, depth="standard", s_max=None, n_max=None):
    """Reports for every record of a suite, in catalog order.

    Records whose grid is empty (for example ``n_max`` below the lower
    bound) are skipped.
    """
    reports = []
    for record in suite_records(suite):
        grid = default_grid(record, depth, s_max, n_max)
        if any(lo > hi for lo, hi in grid.values()):
            continue
        reports.append(verify(record, grid))
    return reports


def difference(identity_id, params):
    """Exact LHS - RHS at one parameter point (dict or tuple in param order)."""
    record = get_record(identity_id)
    if not isinstance(params, dict):
        if not isinstance(params, (tuple, list)):
            params = (params,)
        params = dict(zip(record.param_names, params))
    for name, lo in record.params:
        if params[name] < lo:
            raise DomainError(f"{record.id}: {name} must be >= {lo}")
    return record.difference(**params)
