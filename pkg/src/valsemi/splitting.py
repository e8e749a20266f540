"""Truncated value-group index computation and non-splitting certificates.

At truncation depth L the full group is generated by gamma_0..gamma_L and
the restricted one by the invariant-semigroup values using indices <= L.
The truncated groups only grow with depth, so an index that already equals
M*N*t is conclusive: the degree equation e*f*r = M*N*t together with
M*N*t | e forces e = M*N*t and f = r = 1, a unique-extension certificate.
A smaller truncated index proves nothing and is reported as inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ParameterError
from .groups import SubgroupParams
from .invariants import _default_ctx, eigen_condition
from .numtheory import RootContext, format_rational, rational_group_generator
from .valuation import ValueSequence


@dataclass(frozen=True)
class SplittingReport:
    """Truncated index data; `certified` means e_truncated = M*N*t."""
    depth: int
    gamma_full: Fraction
    gamma_restricted: Fraction
    e_truncated: int
    f0: int | None
    f1: int | None
    mnt: int
    certified: bool

    def to_json_dict(self) -> dict:
        return {"depth": self.depth,
                "gamma_full": format_rational(self.gamma_full),
                "gamma_restricted": format_rational(self.gamma_restricted),
                "e_truncated": self.e_truncated,
                "f0": self.f0, "f1": self.f1,
                "MNt": self.mnt, "certified": self.certified}


def _order_in_group(value: Fraction, generator: Fraction, cap: int) -> int | None:
    """Least k >= 1 with k*value in generator*Z, or None when it exceeds cap."""
    order = (value / generator).denominator
    return order if order <= cap else None


def invariant_value_generators(params: SubgroupParams, ctx: RootContext,
                               seq: ValueSequence) -> list[Fraction]:
    """A finite generating set of the group spanned by invariant values.

    The membership condition is periodic in the pure X power l with some
    least period P (an invariant X power), so the group is spanned by
    P*gamma_0 together with, for every bounded coefficient tuple, the value
    at the least admissible l in [0, P).
    """
    degrees = seq.derived.degrees
    period = None
    for l in range(1, params.m + 1):
        if eigen_condition(l, (), params, ctx, degrees):
            period = l
            break
    assert period is not None, "X**m is always invariant"
    gens = [Fraction(period)]

    def tuples(k: int, js: list[int]):
        if k == 0:
            yield tuple(js)
            return
        for j in range(seq.derived.mbars[k - 1]):
            js[k - 1] = j
            yield from tuples(k - 1, js)
            js[k - 1] = 0

    for js in tuples(seq.depth, [0] * seq.depth):
        for l in range(period):
            if eigen_condition(l, js, params, ctx, degrees):
                value = Fraction(l)
                for k, j in enumerate(js, start=1):
                    value += j * seq.gammas[k]
                if value:
                    gens.append(value)
                break
    return gens


def splitting_report(params: SubgroupParams, ctx: RootContext | None,
                     seq: ValueSequence, depth: int | None = None) -> SplittingReport:
    """Compute truncated value groups and certify the index when possible.

    `depth` is the largest gamma index used (defaults to all of `seq`).  The
    orders f0 and f1 of gamma_0 and gamma_1 in the truncated quotient are
    reported as None ("undetermined at this depth") beyond the M*N*t cap
    that the degree equation allows.
    """
    ctx = _default_ctx(params, ctx)
    if gcd(params.Mt, params.Nt) != params.t:
        raise ParameterError(
            "splitting analysis requires gcd(m/i, n/j) = t; no compatible "
            "sequence exists otherwise")
    if depth is None:
        depth = seq.depth
    if depth > seq.depth:
        raise ParameterError(f"depth {depth} exceeds available sequence depth {seq.depth}")
    seq = seq.prefix(depth)
    mnt = params.M * params.N * params.t
    gamma_full = rational_group_generator(seq.gammas)
    gamma_restricted = rational_group_generator(
        invariant_value_generators(params, ctx, seq))
    index = gamma_restricted / gamma_full
    assert index.denominator == 1 and index > 0, \
        "restricted group must sit inside the full group"
    f0 = _order_in_group(Fraction(1), gamma_restricted, mnt)
    f1 = (_order_in_group(seq.gammas[1], gamma_restricted, mnt)
          if depth >= 1 else None)
    return SplittingReport(depth, gamma_full, gamma_restricted, int(index),
                           f0, f1, mnt, int(index) == mnt)
