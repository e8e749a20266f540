"""Subgroups of U_m x U_n: classification by quadruples, enumeration,
element lists, generating pairs.

A subgroup is addressed by the unique quadruple (i, j, t, x) with
i | m, j | n, t | gcd(m/i, n/j), gcd(x, t) = 1, 1 <= x <= t; its elements
are the pairs (alpha**(a*i), beta**(b*j)) with b = a*x (mod t).  Elements
are represented by canonical exponent pairs (a, b) with 0 <= a < M*t,
0 <= b < N*t where M*t = m/i and N*t = n/j; complex numbers never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ParameterError


@dataclass(frozen=True)
class GroupSpec:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ParameterError("m and n must be positive")


@dataclass(frozen=True)
class GroupElement:
    """Canonical exponent pair (a, b), standing for (alpha**(a*i), beta**(b*j))."""
    a: int
    b: int


@dataclass(frozen=True)
class SubgroupParams:
    spec: GroupSpec
    i: int
    j: int
    t: int
    x: int

    def __post_init__(self):
        m, n = self.spec.m, self.spec.n
        for name, value in (("i", self.i), ("j", self.j), ("t", self.t), ("x", self.x)):
            if value < 1:
                raise ParameterError(f"{name} must be positive")
        if m % self.i != 0:
            raise ParameterError("i does not divide m")
        if n % self.j != 0:
            raise ParameterError("j does not divide n")
        if (m // self.i) % self.t != 0:
            raise ParameterError("t does not divide m/i")
        if (n // self.j) % self.t != 0:
            raise ParameterError("t does not divide n/j")
        if gcd(self.x, self.t) != 1:
            raise ParameterError("gcd(x, t) != 1")
        if not self.x <= self.t:
            raise ParameterError("x out of range 1..t")

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def Mt(self) -> int:
        """m/i, the modulus of the first exponent."""
        return self.m // self.i

    @property
    def Nt(self) -> int:
        """n/j, the modulus of the second exponent."""
        return self.n // self.j

    @property
    def M(self) -> int:
        return self.Mt // self.t

    @property
    def N(self) -> int:
        return self.Nt // self.t

    def to_json_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "i": self.i, "j": self.j,
                "t": self.t, "x": self.x, "M": self.M, "N": self.N,
                "order": subgroup_order(self)}


def validate_params(m: int, n: int, i: int, j: int, t: int, x: int) -> SubgroupParams:
    """Validate a quadruple against its divisibility and coprimality conditions.

    Each violated condition is rejected by name.
    """
    return SubgroupParams(GroupSpec(m, n), i, j, t, x)


def enumerate_subgroups(m: int, n: int) -> list[SubgroupParams]:
    """All subgroups of U_m x U_n, one quadruple each, sorted by (i, j, t, x)."""
    spec = GroupSpec(m, n)
    out = []
    for i in _divisors(m):
        for j in _divisors(n):
            for t in _divisors(gcd(m // i, n // j)):
                for x in range(1, t + 1):
                    if gcd(x, t) == 1:
                        out.append(SubgroupParams(spec, i, j, t, x))
    return out


def subgroup_order(params: SubgroupParams) -> int:
    """Order of the subgroup: M*N*t."""
    return params.M * params.N * params.t


def list_elements(params: SubgroupParams) -> list[GroupElement]:
    """Canonical elements (a, b) with b = a*x (mod t), sorted by (a, b)."""
    out = []
    for a in range(params.Mt):
        first = (a * params.x) % params.t
        for b in range(first, params.Nt, params.t):
            out.append(GroupElement(a, b))
    return out


def add_elements(params: SubgroupParams, e1: GroupElement, e2: GroupElement) -> GroupElement:
    return GroupElement((e1.a + e2.a) % params.Mt, (e1.b + e2.b) % params.Nt)


def _closure(params: SubgroupParams, gens) -> set[GroupElement]:
    zero = GroupElement(0, 0)
    seen = {zero}
    frontier = [zero]
    while frontier:
        current = frontier.pop()
        for g in gens:
            nxt = add_elements(params, current, g)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def generating_pair(params: SubgroupParams) -> tuple[GroupElement, GroupElement]:
    """A canonical two-element generating set of the subgroup.

    For t > 1 this is the reduction of (1, x) and (0, t); for t = 1 the
    congruence is vacuous and the reduction of (1, 0) and (0, 1) is used, so
    the two-generator contract is uniform.  The pair is verified to generate
    the full element list; a failure would be a defect, not a user error.
    """
    if params.t == 1:
        pair = (GroupElement(1 % params.Mt, 0), GroupElement(0, 1 % params.Nt))
    else:
        pair = (GroupElement(1 % params.Mt, params.x % params.Nt),
                GroupElement(0, params.t % params.Nt))
    if _closure(params, pair) != set(list_elements(params)):
        raise RuntimeError("generating pair does not generate the subgroup; internal defect")
    return pair


@dataclass(frozen=True)
class GoursatTuple:
    """Orders of the four cyclic groups in the subgroup's 5-tuple, plus x."""
    order_a_sub: int   # <alpha**(i*t)>
    order_a: int       # <alpha**i>
    order_b_sub: int   # <beta**(j*t)>
    order_b: int       # <beta**j>
    x: int


def goursat_tuple(params: SubgroupParams) -> GoursatTuple:
    m, n = params.m, params.n
    return GoursatTuple(m // (params.i * params.t), m // params.i,
                        n // (params.j * params.t), n // params.j, params.x)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]
