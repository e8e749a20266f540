"""Shared helpers for the test suite."""

import warnings
from fractions import Fraction

import pytest

from valsemi import delta_exponent, list_elements, mbar
from valsemi.valuation import DiscreteTailWarning, validate_sequence


def random_valid_gammas(rng, levels, max_den=12, max_step=4):
    """A random sequence [1, gamma_1, ..., gamma_levels] satisfying growth."""
    gammas = [Fraction(1)]
    for l in range(1, levels + 1):
        floor = Fraction(0) if l == 1 else mbar(gammas) * gammas[-1]
        den = rng.randint(1, max_den)
        num = int(floor * den) + rng.randint(1, den * max_step)
        while Fraction(num, den) <= floor:
            num += 1
        gammas.append(Fraction(num, den))
    return gammas


def quiet_validate(gammas):
    """validate_sequence with the truncation-tail warning silenced."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DiscreteTailWarning)
        return validate_sequence(gammas)


def exhaustive_eigen_exponents(f, params, ctx):
    """Eigen test over the full element list; None when not an eigenfunction."""
    out = []
    for element in list_elements(params):
        seen = {delta_exponent(r, s, element.a, element.b, params.i, params.j, ctx)
                for (r, s) in f.support()}
        if len(seen) > 1:
            return None
        out.append(seen.pop())
    return out


@pytest.fixture
def diag_sign_params():
    from valsemi import validate_params
    return validate_params(2, 2, 1, 1, 2, 1)
