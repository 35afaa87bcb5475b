"""Test-instance families.

Random instances draw from SplitMix64 so that a seed reproduces the same
instance in any language:

    state += 0x9E3779B97F4A7C15                       (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9          (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB          (mod 2**64)
    output z ^ (z >> 31)

An integer in ``[lo, hi]`` with ``r = hi - lo + 1`` rejects outputs
``>= 2**64 - (2**64 mod r)`` and returns ``lo + x mod r``.  Each candidate
system is drawn row by row (``a_i1 .. a_in`` then ``b_i``) from one stream;
rejected candidates simply continue the stream.
"""

from dataclasses import dataclass

from .budget import default_budgets
from .errors import GenerationError, InfeasibleError, ParameterError
from .linalg import rank
from .polyhedron import Polyhedron, is_bounded, is_feasible
from .subdet import delta

MASK64 = (1 << 64) - 1
FAMILIES = ("hypercube", "scaled-simplex", "dilated-triangle", "random")


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo, hi):
        r = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % r)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % r


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    n: int = 2
    m: int = 0  # random family only
    entry_bound: int = 3
    scale: int = 1
    seed: int = 0

    def validate(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n < 1:
            raise ParameterError("n must be positive")
        if self.scale < 1 or self.entry_bound < 1:
            raise ParameterError("scale and entry_bound must be positive")
        if self.family == "dilated-triangle" and self.n != 2:
            raise ParameterError("dilated-triangle is planar (n = 2)")
        if self.family == "random" and self.m < self.n + 1:
            raise ParameterError("a bounded random instance needs m >= n + 1")

    @property
    def claimed_delta(self):
        return {"hypercube": 1, "scaled-simplex": 1, "dilated-triangle": 2}.get(self.family)


def _hypercube(n):
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    return eye + [[-x for x in r] for r in eye], [1] * n + [0] * n


def _scaled_simplex(n, scale):
    neg = [[-int(i == j) for j in range(n)] for i in range(n)]
    return neg + [[1] * n], [0] * n + [scale]


def _dilated_triangle(scale):
    return [[2, 2], [-1, 0], [0, -1]], [2 * scale + 1, 0, 0]


def _random(spec, budgets):
    rng = SplitMix64(spec.seed)
    lo, hi = -spec.entry_bound, spec.entry_bound
    for _ in range(budgets.resample):
        A, b = [], []
        for _ in range(spec.m):
            A.append([rng.randint(lo, hi) for _ in range(spec.n)])
            b.append(rng.randint(lo, hi))
        if rank(A) != spec.n:
            continue
        P = Polyhedron(A, b)
        if not is_feasible(P):
            continue
        try:
            if is_bounded(P):
                return P
        except InfeasibleError:
            continue
    raise GenerationError(f"no bounded feasible instance after {budgets.resample} attempts")


def gen(spec, budgets=None):
    budgets = budgets or default_budgets()
    spec.validate()
    if spec.family == "hypercube":
        P = Polyhedron(*_hypercube(spec.n))
    elif spec.family == "scaled-simplex":
        P = Polyhedron(*_scaled_simplex(spec.n, spec.scale))
    elif spec.family == "dilated-triangle":
        P = Polyhedron(*_dilated_triangle(spec.scale))
    else:
        return _random(spec, budgets)
    d = delta([list(r) for r in P.a], budgets)
    if d != spec.claimed_delta:
        raise GenerationError(f"{spec.family} has Delta = {d}, expected {spec.claimed_delta}")
    return P


def suite_seed(seed, index):
    """Seed of the ``index``-th instance of a suite."""
    return (seed + index) & MASK64
