"""Enumeration budgets.

Defaults can be overridden process-wide with the ``INTVERT_BUDGETS``
environment variable, e.g. ``INTVERT_BUDGETS="minors=1000,points=500"``.
"""

import os
from dataclasses import dataclass, fields, replace

from .errors import BudgetError, ParameterError

ENV_VAR = "INTVERT_BUDGETS"


@dataclass(frozen=True)
class Budgets:
    minors: int = 10**7  # k x k minors enumerated by delta_k
    bases: int = 10**6  # n-subsets of rows (vertex / deep-base enumeration)
    points: int = 10**6  # lattice points of P
    face_vertices: int = 20  # hull vertices admitted to face enumeration
    gamma_grid: int = 64  # grid size Delta^n for gamma_bruteforce
    gamma_exact: int = 9  # grid size up to which the beta * gamma bound uses exact gamma
    resample: int = 10**4  # rejection attempts for random instances

    def check(self, name, needed):
        limit = getattr(self, name)
        if needed > limit:
            raise BudgetError(name, needed, limit)

    def updated(self, overrides):
        """Return a copy with ``overrides`` (a mapping or ``"k=v,k=v"``) applied."""
        if isinstance(overrides, str):
            overrides = parse_overrides(overrides)
        known = {f.name for f in fields(self)}
        for key in overrides:
            if key not in known:
                raise ParameterError(f"unknown budget {key!r}; known: {sorted(known)}")
        return replace(self, **overrides)

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        text = environ.get(ENV_VAR, "").strip()
        return cls().updated(text) if text else cls()


def parse_overrides(text):
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise ParameterError(f"budget override {item!r} is not of the form name=value")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise ParameterError(f"budget {key!r} must be an integer, got {value!r}") from None
    return out


def default_budgets():
    return Budgets.from_env()
