"""Exact rational helpers, subgroups of Q, primes in arithmetic progressions,
and root-of-unity identities reduced to integer congruences.

Values are `fractions.Fraction` instances, which are always stored in lowest
terms with a positive denominator.  Identities between roots of unity never
touch complex numbers: with a fixed primitive (m*n)-th root delta and
alpha = delta**(w1*n), beta = delta**(w2*m), every identity becomes a
congruence between integer exponents of delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import ParameterError, PrimeSearchCeilingError, TrivialGroupError

DEFAULT_PRIME_CEILING = 10**7


def as_fraction(value) -> Fraction:
    """Coerce to an exact Fraction; floats are rejected outright."""
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use Fraction, int or 'p/q'")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or "p") into a Fraction."""
    return Fraction(text.strip())


def format_rational(value) -> str:
    """Render a Fraction as "p/q", omitting "/q" when the denominator is 1."""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RootContext:
    """Choice of compatible primitive roots of unity.

    Encodes alpha = delta**(w1*n) and beta = delta**(w2*m) for a primitive
    (m*n)-th root delta.  The default w1 = w2 = 1 picks alpha = delta**n and
    beta = delta**m.  Downstream constructions depend on this choice, so it
    is explicit rather than hidden.
    """

    m: int
    n: int
    w1: int = 1
    w2: int = 1

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ParameterError("m and n must be positive")
        if not 1 <= self.w1 <= self.m:
            raise ParameterError("w1 out of range 1..m")
        if not 1 <= self.w2 <= self.n:
            raise ParameterError("w2 out of range 1..n")
        if gcd(self.w1, self.m) != 1:
            raise ParameterError("gcd(w1, m) != 1")
        if gcd(self.w2, self.n) != 1:
            raise ParameterError("gcd(w2, n) != 1")


def rational_group_generator(values) -> Fraction:
    """Positive generator g of the additive subgroup of Q spanned by `values`.

    Zeros are skipped; the remaining values are put over a common denominator
    D, and g = gcd(numerators) / D.  Raises TrivialGroupError when no nonzero
    value remains.
    """
    nonzero = [as_fraction(v) for v in values if as_fraction(v) != 0]
    if not nonzero:
        raise TrivialGroupError("trivial group has no generator")
    denom = 1
    for v in nonzero:
        denom = lcm(denom, v.denominator)
    numer = 0
    for v in nonzero:
        numer = gcd(numer, abs(v.numerator) * (denom // v.denominator))
    return Fraction(numer, denom)


def group_membership(v, values) -> bool:
    """True iff v lies in the subgroup of Q generated by `values`."""
    g = rational_group_generator(values)
    return (as_fraction(v) / g).denominator == 1


def primes_in_ap(residue: int, modulus: int, coprime_to, count: int,
                 ceiling: int = DEFAULT_PRIME_CEILING) -> list[int]:
    """The `count` smallest primes p = residue (mod modulus) coprime to every
    member of `coprime_to`, in increasing order.

    Dirichlet guarantees the progression carries infinitely many primes when
    gcd(residue, modulus) = 1; the search is nevertheless capped at `ceiling`
    and raises PrimeSearchCeilingError instead of silently truncating.
    """
    from sympy import isprime  # deterministic below 2**64, far above any ceiling used here

    if modulus < 1:
        raise ParameterError("modulus must be positive")
    if count < 1:
        raise ParameterError("count must be positive")
    if gcd(residue, modulus) != 1:
        raise ParameterError("progression contains at most one prime")
    candidate = residue % modulus
    if candidate == 0:
        candidate = modulus
    while candidate < 2:
        candidate += modulus
    found: list[int] = []
    while len(found) < count:
        if candidate > ceiling:
            raise PrimeSearchCeilingError(
                f"prime search exceeded ceiling {ceiling} "
                f"(residue {residue} mod {modulus}, {len(found)}/{count} found)")
        if isprime(candidate) and all(gcd(candidate, k) == 1 for k in coprime_to):
            found.append(candidate)
        candidate += modulus
    return found


def roots_equal(p: int, q: int, ctx: RootContext) -> bool:
    """Decide beta**p == alpha**q, i.e. p*w2*m - q*w1*n = 0 (mod m*n)."""
    return (p * ctx.w2 * ctx.m - q * ctx.w1 * ctx.n) % (ctx.m * ctx.n) == 0


def delta_exponent(r: int, s: int, a: int, b: int, i: int, j: int,
                   ctx: RootContext) -> int:
    """Exponent e (mod m*n) with (alpha**(a*i), beta**(b*j)) . X^r Y^s = delta**e . X^r Y^s.

    The scalar alpha**(r*a*i) * beta**(s*b*j) equals delta**e; it is 1 exactly
    when the result is 0.
    """
    return (r * a * i * ctx.w1 * ctx.n + s * b * j * ctx.w2 * ctx.m) % (ctx.m * ctx.n)
