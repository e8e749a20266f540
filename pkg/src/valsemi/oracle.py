"""Independent brute-force reference implementations.

Used by the test suite and the CLI --verify mode, never on the fast path.
The routines here deliberately avoid the package's fast-path helpers:
group elements, scalar congruences and tuple enumeration are recomputed
inline so that agreement between the two routes means something.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import OracleBoundError
from .groups import SubgroupParams
from .numtheory import RootContext, as_fraction
from .qpoly import GeneratingSequence

MAX_BRUTE_GROUP = 10**4
MAX_BRUTE_MBAR_ITERATIONS = 10**6


def brute_subgroups(m: int, n: int) -> list[frozenset[tuple[int, int]]]:
    """All subgroups of Z/m x Z/n as raw element sets.

    Every subgroup of a rank-2 finite abelian group is generated by at most
    two elements, so closing all singletons and all pairwise sums of the
    cyclic subgroups is exhaustive.
    """
    if m * n > MAX_BRUTE_GROUP:
        raise OracleBoundError(f"brute subgroup enumeration capped at m*n <= {MAX_BRUTE_GROUP}")
    cyclics = set()
    for a in range(m):
        for b in range(n):
            elems = set()
            pa, pb = 0, 0
            while (pa, pb) not in elems:
                elems.add((pa, pb))
                pa, pb = (pa + a) % m, (pb + b) % n
            cyclics.add(frozenset(elems))
    found = set(cyclics)
    cyclic_list = sorted(cyclics, key=lambda h: (len(h), sorted(h)))
    for idx, h1 in enumerate(cyclic_list):
        for h2 in cyclic_list[idx + 1:]:
            found.add(frozenset(((a1 + a2) % m, (b1 + b2) % n)
                                for a1, b1 in h1 for a2, b2 in h2))
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def brute_invariant_values(params: SubgroupParams, ctx: RootContext,
                           gs: GeneratingSequence, bound) -> list[Fraction]:
    """Values <= bound of products X^l Y^j1 Q_2^j2 ... that expand to fully
    invariant polynomials, tested monomial-by-monomial over every element."""
    bound = as_fraction(bound)
    seq = gs.seq
    mn = params.m * params.n
    elements = [(a, b)
                for a in range(params.Mt)
                for b in range(params.Nt)
                if (b - a * params.x) % params.t == 0]

    def monomial_fixed(r: int, s: int) -> bool:
        return all((r * a * params.i * ctx.w1 * ctx.n
                    + s * b * params.j * ctx.w2 * ctx.m) % mn == 0
                   for a, b in elements)

    values: set[Fraction] = set()

    def explore(k: int, js: list[int], partial: Fraction):
        if k == 0:
            poly = None
            limit = int(bound - partial) if bound >= partial else -1
            for l in range(0, limit + 1):
                product = gs.qs[0] ** l
                for idx, j in enumerate(js, start=1):
                    if j:
                        product = product * gs.qs[idx] ** j
                if all(monomial_fixed(r, s) for r, s in product.support()):
                    values.add(partial + l)
            return
        for j in range(seq.derived.mbars[k - 1]):
            nxt = partial + j * seq.gammas[k]
            if nxt > bound:
                break
            js[k - 1] = j
            explore(k - 1, js, nxt)
            js[k - 1] = 0

    if bound >= 0:
        explore(seq.depth, [0] * seq.depth, Fraction(0))
    return sorted(values)


def brute_mbar(prefix, max_iterations: int = MAX_BRUTE_MBAR_ITERATIONS) -> int:
    """Linear search for the least q with q*gamma_l in the earlier group.

    Works over a common denominator: membership of an integer vector in the
    subgroup of Z spanned by the earlier numerators is divisibility by their
    gcd.
    """
    values = [as_fraction(v) for v in prefix]
    if len(values) < 2:
        raise OracleBoundError("brute mbar needs at least two values")
    denom = 1
    for v in values:
        denom = lcm(denom, v.denominator)
    numerators = [int(v * denom) for v in values]
    span = 0
    for nv in numerators[:-1]:
        span = gcd(span, nv)
    target = numerators[-1]
    for q in range(1, max_iterations + 1):
        if (q * target) % span == 0:
            return q
    raise OracleBoundError(f"brute mbar search exceeded {max_iterations} iterations")
