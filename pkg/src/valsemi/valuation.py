"""Value sequences gamma_0, gamma_1, ... and the combinatorics derived from
them: the indices mbar_l, degrees d(l), the subsequence sigma of jumps, and
truncated semigroup slices with their unique bounded-coefficient expansions.

The normalization gamma_0 = 1 is enforced; an arbitrary gamma_0 amounts to a
global scaling.  A truncated sequence only determines semigroup membership
below mbar_L * gamma_L (deeper generators are strictly larger than that), so
every slice carries an explicit `complete_up_to` marker.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import GrowthConditionError, ParameterError
from .numtheory import as_fraction, format_rational, rational_group_generator


class DiscreteTailWarning(UserWarning):
    """The truncation ends in unit indices, so non-discreteness is unverifiable."""


def mbar(prefix) -> int:
    """Smallest q >= 1 with q*gamma_l in the group generated by gamma_0..gamma_{l-1}.

    `prefix` is the list gamma_0..gamma_l (l >= 1).  Equals the reduced
    denominator of gamma_l / g where g generates the group of the earlier
    values.
    """
    values = [as_fraction(v) for v in prefix]
    if len(values) < 2:
        raise ParameterError("mbar needs at least gamma_0 and gamma_1")
    if any(v <= 0 for v in values):
        raise ParameterError("mbar requires positive values")
    g = rational_group_generator(values[:-1])
    return (values[-1] / g).denominator


@dataclass(frozen=True)
class DerivedIndices:
    """Everything recomputable from the gammas, precomputed once.

    mbars[l-1] = mbar_l for 1 <= l <= L; degrees[l-1] = d(l) with d(1) = 1 and
    d(l) = mbar_1 * ... * mbar_{l-1}; sigma lists the indices of the jumps
    (sigma(0) = 0 and mbar_{sigma(l)} > 1); betas are the gamma values at the
    jumps and nbars their indices.
    """
    mbars: tuple[int, ...]
    degrees: tuple[int, ...]
    sigma: tuple[int, ...]
    betas: tuple[Fraction, ...]
    nbars: tuple[int, ...]


@dataclass(frozen=True)
class ValueSequence:
    """A validated truncation gamma_0..gamma_L together with derived indices."""
    gammas: tuple[Fraction, ...]
    derived: DerivedIndices

    @property
    def depth(self) -> int:
        """L, the largest available gamma index."""
        return len(self.gammas) - 1

    def degree(self, l: int) -> int:
        """d(l) for 1 <= l <= L+1 (d(L+1) extends by the last mbar)."""
        if not 1 <= l <= self.depth + 1:
            raise ParameterError(f"degree index {l} out of range 1..{self.depth + 1}")
        if l <= self.depth:
            return self.derived.degrees[l - 1]
        if self.depth == 0:
            return 1
        return self.derived.degrees[-1] * self.derived.mbars[-1]

    def prefix(self, depth: int) -> "ValueSequence":
        if not 0 <= depth <= self.depth:
            raise ParameterError(f"prefix depth {depth} out of range 0..{self.depth}")
        if depth == self.depth:
            return self
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DiscreteTailWarning)
            return validate_sequence(self.gammas[: depth + 1])


def validate_sequence(gammas) -> ValueSequence:
    """Validate gamma_0 = 1, positivity and growth; compute all derived indices.

    Growth means gamma_{l+1} > mbar_l * gamma_l for 1 <= l < L.  A violation
    reports both sides.  A trailing run of mbar = 1 only triggers a warning:
    a genuine non-discrete valuation needs infinitely many mbar > 1, which no
    truncation can certify.
    """
    values = tuple(as_fraction(v) for v in gammas)
    if not values:
        raise ParameterError("empty value sequence")
    if values[0] != 1:
        raise ParameterError("gamma_0 must equal 1")
    if any(v <= 0 for v in values):
        raise ParameterError("all gamma_l must be positive")
    L = len(values) - 1
    mbars = []
    degrees = []
    d = 1
    for l in range(1, L + 1):
        degrees.append(d)
        m_l = mbar(values[: l + 1])
        mbars.append(m_l)
        if l < L and values[l + 1] <= m_l * values[l]:
            raise GrowthConditionError(
                f"growth violation at l={l}: gamma_{l + 1} = "
                f"{format_rational(values[l + 1])} must exceed mbar_{l}*gamma_{l} = "
                f"{format_rational(m_l * values[l])}")
        d *= m_l
    sigma = [0]
    for l in range(1, L + 1):
        if mbars[l - 1] > 1:
            sigma.append(l)
    betas = tuple(values[s] for s in sigma)
    nbars = tuple(mbars[s - 1] for s in sigma[1:])
    if L >= 1 and mbars[-1] == 1:
        warnings.warn(
            "sequence ends in mbar = 1; a truncation cannot certify a "
            "non-discrete valuation", DiscreteTailWarning, stacklevel=2)
    return ValueSequence(values, DerivedIndices(tuple(mbars), tuple(degrees),
                                                tuple(sigma), betas, nbars))


@dataclass(frozen=True)
class ExpansionTerm:
    """A value written as l*gamma_0 + sum_k js[k-1]*gamma_k with bounded js.

    Trailing zero coefficients are trimmed, so js is empty exactly for the
    pure gamma_0 multiples.
    """
    l: int
    js: tuple[int, ...]

    def value(self, seq: ValueSequence) -> Fraction:
        total = Fraction(self.l)
        for k, j in enumerate(self.js, start=1):
            total += j * seq.gammas[k]
        return total

    def to_json_dict(self, seq: ValueSequence) -> dict:
        return {"value": format_rational(self.value(seq)), "l": self.l,
                "js": list(self.js)}


def _trim(js) -> tuple[int, ...]:
    js = list(js)
    while js and js[-1] == 0:
        js.pop()
    return tuple(js)


def expand_value(v, seq: ValueSequence) -> ExpansionTerm | None:
    """The unique bounded-coefficient expansion of v within depth L, or None.

    Works greedily from the deepest index: modulo the group of the earlier
    values, gamma_k has order exactly mbar_k, so the coefficient j_k is the
    unique residue in [0, mbar_k) keeping the remainder in the smaller group.
    """
    v = as_fraction(v)
    if v < 0:
        return None
    if v == 0:
        return ExpansionTerm(0, ())
    if not group_member_of_prefix(v, seq, seq.depth + 1):
        return None
    js = [0] * seq.depth
    rem = v
    for k in range(seq.depth, 0, -1):
        m_k = seq.derived.mbars[k - 1]
        for j in range(m_k):
            if group_member_of_prefix(rem - j * seq.gammas[k], seq, k):
                js[k - 1] = j
                rem -= j * seq.gammas[k]
                break
        else:  # unreachable when membership held above; defensive
            return None
    if rem.denominator != 1 or rem < 0:
        return None
    return ExpansionTerm(int(rem), _trim(js))


def group_member_of_prefix(v, seq: ValueSequence, length: int) -> bool:
    """Membership of v in the group generated by gamma_0..gamma_{length-1}."""
    g = rational_group_generator(seq.gammas[:length])
    return (as_fraction(v) / g).denominator == 1


@dataclass(frozen=True)
class SemigroupSlice:
    """All semigroup values <= bound, each with its unique expansion."""
    entries: tuple[tuple[Fraction, ExpansionTerm], ...]
    complete_up_to: Fraction

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for v, _ in self.entries)

    def to_json_dict(self, seq: ValueSequence) -> dict:
        return {"values": [term.to_json_dict(seq) for _, term in self.entries],
                "complete_up_to": format_rational(self.complete_up_to)}


def semigroup_slice(seq: ValueSequence, bound) -> SemigroupSlice:
    """Every value l*gamma_0 + sum j_k*gamma_k <= bound with 0 <= j_k < mbar_k.

    Values are deduplicated by their unique bounded expansion and sorted.
    `complete_up_to` = min(bound, mbar_L*gamma_L) marks where the truncation
    provably determines membership; at depth 0 nothing is certified.
    """
    bound = as_fraction(bound)
    L = seq.depth
    entries: dict[Fraction, ExpansionTerm] = {}
    count = 0

    def descend(k: int, partial: Fraction, js: list[int]):
        nonlocal count
        if k == 0:
            l = 0
            value = partial
            while value <= bound:
                entries[value] = ExpansionTerm(l, _trim(js))
                count += 1
                l += 1
                value = partial + l
            return
        for j in range(seq.derived.mbars[k - 1]):
            nxt = partial + j * seq.gammas[k]
            if nxt > bound:
                break
            js[k - 1] = j
            descend(k - 1, nxt, js)
            js[k - 1] = 0

    if bound >= 0:
        descend(L, Fraction(0), [0] * L)
    assert count == len(entries), "bounded expansions must have distinct values"
    if L >= 1:
        complete = min(bound, seq.derived.mbars[-1] * seq.gammas[-1])
    else:
        complete = Fraction(0)
    ordered = tuple(sorted(entries.items()))
    return SemigroupSlice(ordered, complete)
