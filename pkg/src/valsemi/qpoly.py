"""Symbolic key polynomials Q_l, their recursive construction, expansion of
arbitrary polynomials along them, eigenfunction tests, and valuations.

Polynomials live in Q[X, Y] as sparse monomial maps (r, s) -> coefficient.
The group action is never materialized as a polynomial with root-of-unity
coefficients; eigen tests compare per-monomial exponents of the primitive
root delta instead.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DepthError, InconsistentSequenceError, ParameterError, ZeroPolynomialError
from .groups import SubgroupParams, generating_pair, list_elements
from .numtheory import RootContext, as_fraction, delta_exponent, format_rational, parse_rational
from .valuation import ValueSequence, expand_value


class QPolynomial:
    """A polynomial in Q[X, Y] as a sparse map (x_exp, y_exp) -> coefficient.

    Zero coefficients are never stored; the zero polynomial is the empty map.
    Instances are treated as immutable values.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for (r, s), c in dict(coeffs).items():
                c = as_fraction(c)
                if c != 0:
                    if r < 0 or s < 0:
                        raise ParameterError("exponents must be nonnegative")
                    cleaned[(int(r), int(s))] = c
        self._coeffs = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, r: int, s: int, c=1) -> "QPolynomial":
        return cls({(r, s): c})

    @classmethod
    def x(cls, power: int = 1) -> "QPolynomial":
        return cls.monomial(power, 0)

    @classmethod
    def y(cls, power: int = 1) -> "QPolynomial":
        return cls.monomial(0, power)

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def support(self) -> list[tuple[int, int]]:
        """Monomials with nonzero coefficient, in lexicographic order."""
        return sorted(self._coeffs)

    def coeff(self, r: int, s: int) -> Fraction:
        return self._coeffs.get((r, s), Fraction(0))

    def items(self):
        return [(k, self._coeffs[k]) for k in self.support()]

    @property
    def deg_y(self) -> int:
        """Largest Y exponent; -1 for the zero polynomial."""
        return max((s for _, s in self._coeffs), default=-1)

    def y_coefficient(self, s: int) -> "QPolynomial":
        """The X-polynomial multiplying Y**s."""
        return QPolynomial({(r, 0): c for (r, sy), c in self._coeffs.items() if sy == s})

    def min_x_exponent(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no X order")
        return min(r for r, _ in self._coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (r1, s1), c1 in self._coeffs.items():
            for (r2, s2), c2 in other._coeffs.items():
                key = (r1 + r2, s1 + s2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return QPolynomial(out)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, c) -> "QPolynomial":
        c = as_fraction(c)
        return QPolynomial({k: c * v for k, v in self._coeffs.items()})

    def __pow__(self, exponent: int) -> "QPolynomial":
        if exponent < 0:
            raise ParameterError("negative polynomial powers are not defined")
        result = QPolynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # -- serialization ------------------------------------------------

    def to_json_list(self) -> list[dict]:
        return [{"r": r, "s": s, "c": format_rational(c)} for (r, s), c in self.items()]

    @classmethod
    def from_json_list(cls, data) -> "QPolynomial":
        return cls({(entry["r"], entry["s"]): parse_rational(str(entry["c"])) for entry in data})

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"QPolynomial({format_polynomial(self)!r})"


_FACTOR_RE = re.compile(r"([XYxy])(?:\^(\d+))?")
_TERM_RE = re.compile(
    r"^([+-]?)((?:\d+(?:/\d+)?)?)\*?((?:[XYxy](?:\^\d+)?\*?)*)$")


def parse_polynomial(text: str) -> QPolynomial:
    """Parse expressions like "Y^2 - X^3" or "3/2*X^2*Y - 1".

    Terms are rational coefficients times optional X/Y powers; '*' separators
    are optional and exponents are nonnegative integers.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ParameterError("empty polynomial expression")
    coeffs: dict[tuple[int, int], Fraction] = {}
    for chunk in re.findall(r"[+-]?[^+-]+", compact):
        match = _TERM_RE.match(chunk)
        if not match:
            raise ParameterError(f"cannot parse polynomial term {chunk!r}")
        sign, coeff_text, var_text = match.groups()
        if not coeff_text and not var_text:
            raise ParameterError(f"cannot parse polynomial term {chunk!r}")
        coeff = parse_rational(coeff_text) if coeff_text else Fraction(1)
        if sign == "-":
            coeff = -coeff
        r = s = 0
        for var, exp in _FACTOR_RE.findall(var_text):
            power = int(exp) if exp else 1
            if var in "Xx":
                r += power
            else:
                s += power
        key = (r, s)
        coeffs[key] = coeffs.get(key, Fraction(0)) + coeff
    return QPolynomial(coeffs)


def format_polynomial(poly: QPolynomial) -> str:
    """Deterministic text form, highest Y power first; parseable back."""
    if poly.is_zero:
        return "0"
    pieces = []
    for (r, s), c in sorted(poly._coeffs.items(), key=lambda kv: (-kv[0][1], -kv[0][0])):
        factors = []
        if r:
            factors.append("X" if r == 1 else f"X^{r}")
        if s:
            factors.append("Y" if s == 1 else f"Y^{s}")
        magnitude = abs(c)
        if magnitude != 1 or not factors:
            factors.insert(0, format_rational(magnitude))
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


@dataclass(frozen=True)
class GeneratingSequence:
    """Key polynomials Q_0 = X, Q_1 = Y, ..., Q_{L+1} over a value sequence.

    Q_{l+1} = Q_l**mbar_l - lambda_l * X**c_0 * Y**c_1 * Q_2**c_2 ... with the
    exponents c_k given by the unique bounded expansion of mbar_l * gamma_l;
    recursion_exponents[l-1] stores (c_0, ..., c_{l-1}) for that level.  Each
    Q_l is monic in Y of degree d(l).
    """
    seq: ValueSequence
    lambdas: tuple[Fraction, ...]
    qs: tuple[QPolynomial, ...]
    recursion_exponents: tuple[tuple[int, ...], ...]

    @property
    def top_index(self) -> int:
        return len(self.qs) - 1

    def to_json_dict(self) -> dict:
        return {
            "gammas": [format_rational(g) for g in self.seq.gammas],
            "lambdas": [format_rational(c) for c in self.lambdas],
            "mbars": list(self.seq.derived.mbars),
            "recursion_exponents": [list(e) for e in self.recursion_exponents],
            "qs": [format_polynomial(q) for q in self.qs],
        }


def build_generating_sequence(seq: ValueSequence, lambdas=None) -> GeneratingSequence:
    """Build Q_0..Q_{L+1} from a validated sequence and nonzero lambdas.

    Level l consumes lambda_l and the expansion of mbar_l * gamma_l; the
    expansion always exists for a valid sequence, so a miss means the
    sequence is inconsistent.
    """
    L = seq.depth
    if lambdas is None:
        lambdas = [Fraction(1)] * L
    lambdas = tuple(as_fraction(c) for c in lambdas)
    if len(lambdas) != L:
        raise ParameterError(f"expected {L} lambdas, got {len(lambdas)}")
    if any(c == 0 for c in lambdas):
        raise ParameterError("lambdas must be nonzero")
    qs = [QPolynomial.x(), QPolynomial.y()]
    exponents: list[tuple[int, ...]] = []
    for l in range(1, L + 1):
        target = seq.derived.mbars[l - 1] * seq.gammas[l]
        term = expand_value(target, seq)
        if term is None or len(term.js) > l - 1:
            raise InconsistentSequenceError(
                f"no bounded expansion of mbar_{l}*gamma_{l} within depth {l - 1}")
        cs = (term.l,) + term.js + (0,) * (l - 1 - len(term.js))
        product = QPolynomial.x(cs[0])
        for k in range(1, l):
            if cs[k]:
                product = product * qs[k] ** cs[k]
        nxt = qs[l] ** seq.derived.mbars[l - 1] - lambdas[l - 1] * product
        qs.append(nxt)
        exponents.append(cs)
    gs = GeneratingSequence(seq, lambdas, tuple(qs), tuple(exponents))
    for l in range(1, L + 2):
        q = gs.qs[l]
        d = seq.degree(l)
        assert q.deg_y == d and q.y_coefficient(d) == QPolynomial.constant(1), \
            "key polynomial must be monic in Y of degree d(l)"
    return gs


@dataclass(frozen=True)
class EigenReport:
    """Outcome of the eigenfunction test against a subgroup.

    `exponents` gives, per generating-pair element, the delta exponent of the
    common eigenvalue; it is present exactly when the polynomial is an
    eigenfunction, and invariance means both exponents vanish.
    """
    is_eigen: bool
    exponents: tuple[int, ...] | None
    is_invariant: bool

    def to_json_dict(self) -> dict:
        out = {"is_eigen": self.is_eigen, "is_invariant": self.is_invariant}
        if self.exponents is not None:
            out["exponents"] = list(self.exponents)
        return out


def eigen_report(f: QPolynomial, params: SubgroupParams, ctx: RootContext) -> EigenReport:
    """Eigenfunction test via the subgroup's generating pair.

    Each generator must scale every support monomial by one common delta
    power; multiplicativity extends the conclusion to the whole subgroup.
    """
    if f.is_zero:
        raise ZeroPolynomialError("eigenfunction undefined for 0")
    support = f.support()
    exponents = []
    for element in generating_pair(params):
        seen = {delta_exponent(r, s, element.a, element.b, params.i, params.j, ctx)
                for (r, s) in support}
        if len(seen) > 1:
            return EigenReport(False, None, False)
        exponents.append(seen.pop())
    exps = tuple(exponents)
    return EigenReport(True, exps, all(e == 0 for e in exps))


def action_exponents(f: QPolynomial, params: SubgroupParams, ctx: RootContext):
    """Per-element delta exponents when f is an eigenfunction.

    Returns a list aligned with list_elements(params); raises if some element
    fails to scale f uniformly.
    """
    if f.is_zero:
        raise ZeroPolynomialError("eigenfunction undefined for 0")
    out = []
    for element in list_elements(params):
        seen = {delta_exponent(r, s, element.a, element.b, params.i, params.j, ctx)
                for (r, s) in f.support()}
        if len(seen) > 1:
            raise ParameterError("polynomial is not an eigenfunction for this subgroup")
        out.append(seen.pop())
    return out


def monic_y_divmod(f: QPolynomial, g: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
    """Division f = q*g + r in (Q[X])[Y] for g monic in Y; deg_y(r) < deg_y(g)."""
    d = g.deg_y
    if d < 0 or g.y_coefficient(d) != QPolynomial.constant(1):
        raise ParameterError("divisor must be monic in Y")
    quotient = QPolynomial.zero()
    remainder = f
    while remainder.deg_y >= d:
        m = remainder.deg_y
        lead = remainder.y_coefficient(m)  # an X-polynomial
        step = lead * QPolynomial.y(m - d)
        quotient = quotient + step
        remainder = remainder - step * g
    return quotient, remainder


@dataclass(frozen=True)
class QAdicTerm:
    """One term of the expansion: x_poly * Y**j_1 * Q_2**j_2 * ... * Q_r**j_r.

    `y_degree` is the Y-degree of the Q-product; terms of an expansion have
    pairwise distinct y_degree.
    """
    y_degree: int
    js: tuple[int, ...]
    x_poly: QPolynomial

    def q_product(self, gs: GeneratingSequence) -> QPolynomial:
        product = self.x_poly
        for k, j in enumerate(self.js, start=1):
            if j:
                product = product * gs.qs[k] ** j
        return product


def q_adic_expansion(f: QPolynomial, gs: GeneratingSequence) -> list[QAdicTerm]:
    """Expand f along the built key polynomials by iterated monic division.

    Peels the deepest Q first; digits at levels whose index bound mbar_k is
    known are automatically below it, while the digit at the deepest built
    level is unbounded.  Re-multiplying the terms reproduces f exactly.
    """
    if f.is_zero:
        return []
    top = gs.top_index

    def decompose(poly: QPolynomial, level: int) -> dict[tuple[int, ...], QPolynomial]:
        if poly.is_zero:
            return {}
        if level <= 1:
            out = {}
            for s in range(poly.deg_y + 1):
                coeff = poly.y_coefficient(s)
                if not coeff.is_zero:
                    out[(s,)] = coeff
            return out
        digits = []
        current = poly
        while not current.is_zero:
            current, rem = monic_y_divmod(current, gs.qs[level])
            digits.append(rem)
        out = {}
        for e, part in enumerate(digits):
            for js, coeff in decompose(part, level - 1).items():
                full = js + (0,) * (level - 1 - len(js)) + (e,)
                out[full] = coeff
        return out

    terms = []
    for js, coeff in decompose(f, top).items():
        y_degree = sum(j * gs.qs[k].deg_y for k, j in enumerate(js, start=1))
        trimmed = list(js)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        terms.append(QAdicTerm(y_degree, tuple(trimmed), coeff))
    terms.sort(key=lambda t: t.y_degree)
    return terms


def valuation_of(f: QPolynomial, gs: GeneratingSequence) -> Fraction:
    """The valuation of f determined by the truncated sequence.

    Terms touching the deepest built key polynomial have an unknown exact
    value gamma_{L+1}; they are handled through the strict lower bound
    gamma_{L+1} > mbar_L * gamma_L.  The minimum is returned only when it is
    certain for every admissible continuation, otherwise DepthError.
    """
    if f.is_zero:
        raise ZeroPolynomialError("valuation undefined for the zero polynomial")
    seq = gs.seq
    L = seq.depth
    if L >= 1:
        next_gamma_floor = seq.derived.mbars[-1] * seq.gammas[-1]
    else:
        next_gamma_floor = Fraction(0)
    known: list[Fraction] = []
    bounds: list[Fraction] = []
    for term in q_adic_expansion(f, gs):
        base = Fraction(term.x_poly.min_x_exponent())
        for k, j in enumerate(term.js, start=1):
            if k <= L:
                base += j * seq.gammas[k]
        if len(term.js) <= L:
            known.append(base)
        else:
            bounds.append(base + term.js[L] * next_gamma_floor)
    if known and (not bounds or min(known) <= min(bounds)):
        return min(known)
    raise DepthError(
        f"valuation undetermined at depth {L}: the minimum involves the "
        f"unvalued key polynomial Q_{L + 1}; a deeper gamma_{L + 1} is required")
